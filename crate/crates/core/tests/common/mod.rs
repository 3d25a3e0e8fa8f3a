//! Brute-force reference computations. Nothing here calls into the layered
//! element tables or the fiber move graphs of the library.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashMap};

use koszul_core::Graph;

pub type Vector = Vec<i64>;

pub fn gens_of(basis: &koszul_core::semigroup::MonoidBasis) -> Vec<Vector> {
    basis.generators().iter().map(|g| g.iter().map(|&x| i64::from(x)).collect()).collect()
}

pub fn multisets(t: usize, d: usize) -> Vec<Vec<usize>> {
    fn rec(t: usize, d: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == d {
            out.push(cur.clone());
            return;
        }
        for i in from..t {
            cur.push(i);
            rec(t, d, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(t, d, 0, &mut Vec::new(), &mut out);
    out
}

pub fn sum(gens: &[Vector], combo: &[usize]) -> Vector {
    let mut v = vec![0; gens[0].len()];
    for &k in combo {
        for (x, y) in v.iter_mut().zip(&gens[k]) {
            *x += y;
        }
    }
    v
}

/// Distinct sums of `d` generators.
pub fn elements(gens: &[Vector], d: usize) -> BTreeSet<Vector> {
    multisets(gens.len(), d).iter().map(|c| sum(gens, c)).collect()
}

pub struct Member<'a> {
    gens: &'a [Vector],
    memo: HashMap<Vector, bool>,
}

impl<'a> Member<'a> {
    pub fn new(gens: &'a [Vector]) -> Self {
        Member { gens, memo: HashMap::new() }
    }

    pub fn test(&mut self, v: &[i64]) -> bool {
        if v.iter().any(|&x| x < 0) {
            return false;
        }
        if v.iter().all(|&x| x == 0) {
            return true;
        }
        if let Some(&b) = self.memo.get(v) {
            return b;
        }
        let gens = self.gens;
        let found = gens.iter().any(|g| {
            let rest: Vector = v.iter().zip(g).map(|(a, b)| a - b).collect();
            self.test(&rest)
        });
        self.memo.insert(v.to_vec(), found);
        found
    }
}

pub fn sub(a: &[i64], b: &[i64]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn add(a: &[i64], b: &[i64]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Minimal generators `(degree, element)` of `(u) ∩ (v)` up to degree `depth`.
pub fn intersection_min_gens(gens: &[Vector], u: &[i64], v: &[i64], depth: usize) -> Vec<(usize, Vector)> {
    let mut m = Member::new(gens);
    let in_ideal = |s: &[i64], m: &mut Member| m.test(&sub(s, u)) && m.test(&sub(s, v));
    let mut out = Vec::new();
    for d in 0..=depth {
        for s in elements(gens, d) {
            if !in_ideal(&s, &mut m) {
                continue;
            }
            let minimal = gens.iter().all(|g| {
                let r = sub(&s, g);
                !m.test(&r) || !in_ideal(&r, &mut m)
            });
            if minimal {
                out.push((d, s));
            }
        }
    }
    out
}

/// Smallest `(degree, i, j, element)` failure of the pairwise criterion.
pub fn pairwise_failure(gens: &[Vector], depth: usize) -> Option<(usize, usize, usize, Vector)> {
    let mut best = None;
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            for (d, s) in intersection_min_gens(gens, &gens[i], &gens[j], depth) {
                if d >= 3 {
                    let key = (d, i, j, s);
                    if best.as_ref().is_none_or(|b| &key < b) {
                        best = Some(key);
                    }
                }
            }
        }
    }
    best
}

/// Minimal generators of `(gens[p] : p in prefix) : gens[divisor]` up to `depth`.
pub fn colon_min_gens(gens: &[Vector], prefix: &[usize], divisor: usize, depth: usize) -> Vec<(usize, Vector)> {
    let mut m = Member::new(gens);
    let in_colon = |s: &[i64], m: &mut Member| {
        let shifted = add(s, &gens[divisor]);
        prefix.iter().any(|&p| m.test(&sub(&shifted, &gens[p])))
    };
    let mut out = Vec::new();
    for d in 0..=depth {
        for s in elements(gens, d) {
            if !in_colon(&s, &mut m) {
                continue;
            }
            let minimal = gens.iter().all(|g| {
                let r = sub(&s, g);
                !m.test(&r) || !in_colon(&r, &mut m)
            });
            if minimal {
                out.push((d, s));
            }
        }
    }
    out
}

/// Degree-`d` monomials (as sorted index multisets) grouped by image.
pub fn fibers(gens: &[Vector], d: usize) -> BTreeMap<Vector, Vec<Vec<usize>>> {
    let mut map: BTreeMap<Vector, Vec<Vec<usize>>> = BTreeMap::new();
    for c in multisets(gens.len(), d) {
        map.entry(sum(gens, &c)).or_default().push(c);
    }
    map
}

/// Minimal generator count per degree: in each fiber, join monomials sharing a
/// variable; each fiber contributes (components - 1).
pub fn markov_counts(gens: &[Vector], depth: usize) -> Vec<usize> {
    let mut counts = vec![0; depth + 1];
    for (d, count) in counts.iter_mut().enumerate().skip(2) {
        for members in fibers(gens, d).values() {
            let mut comp: Vec<usize> = (0..members.len()).collect();
            fn find(c: &mut [usize], mut x: usize) -> usize {
                while c[x] != x {
                    x = c[x];
                }
                x
            }
            for a in 0..members.len() {
                for b in a + 1..members.len() {
                    if members[a].iter().any(|x| members[b].contains(x)) {
                        let (ra, rb) = (find(&mut comp, a), find(&mut comp, b));
                        comp[ra] = rb;
                    }
                }
            }
            let roots: BTreeSet<usize> = (0..members.len()).map(|x| find(&mut comp, x)).collect();
            *count += roots.len() - 1;
        }
    }
    counts
}

/// Exponent vector over `t` variables of a sorted index multiset.
pub fn exps(m: &[usize], t: usize) -> Vec<u32> {
    let mut e = vec![0; t];
    for &i in m {
        e[i] += 1;
    }
    e
}

/// Every fiber of degree `2..=depth` is connected by the moves `lhs <-> rhs`
/// of the given binomials (as exponent vectors) times monomials.
pub fn moves_connect_fibers(gens: &[Vector], moves: &[(Vec<u32>, Vec<u32>)], depth: usize) -> bool {
    let t = gens.len();
    for d in 2..=depth {
        for members in fibers(gens, d).values() {
            let set: BTreeSet<Vec<u32>> = members.iter().map(|m| exps(m, t)).collect();
            let start = set.iter().next().unwrap().clone();
            let mut seen = BTreeSet::from([start.clone()]);
            let mut stack = vec![start];
            while let Some(m) = stack.pop() {
                for (a, b) in moves {
                    for (x, y) in [(a, b), (b, a)] {
                        if x.iter().zip(&m).all(|(p, q)| p <= q) {
                            let next: Vec<u32> = (0..t).map(|k| m[k] - x[k] + y[k]).collect();
                            if seen.insert(next.clone()) {
                                stack.push(next);
                            }
                        }
                    }
                }
            }
            if seen.len() != set.len() {
                return false;
            }
        }
    }
    true
}

/// All labeled graphs on `n` vertices.
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges = pairs.iter().enumerate().filter(|(k, _)| mask & (1 << k) != 0).map(|(_, &e)| e);
        Graph::new(n, edges).unwrap()
    })
}

pub fn bowtie() -> Graph {
    Graph::new(5, [(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)]).unwrap()
}

pub fn k4_with_ear() -> Graph {
    let mut edges = Graph::complete(4).edges().to_vec();
    edges.extend([(1, 5), (2, 5)]);
    Graph::new(5, edges).unwrap()
}

pub fn all_connected(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(|n| koszul_core::canon::connected_graphs(n).unwrap()).collect()
}

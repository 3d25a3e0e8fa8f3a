//! The presentation `K[Y_1..Y_t] -> K[S]` of a semigroup ring: monomials in
//! the generator variables, the fibers of the presentation map, minimal
//! binomial generators of the toric ideal, and binomials of even closed walks.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::semigroup::{Exponents, MonoidBasis};

/// A monomial in the presentation variables, stored as the sorted multiset of
/// its 0-based variable indices. Serialized 1-based.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct YMonomial(Vec<usize>);

impl Serialize for YMonomial {
    fn serialize<S: Serializer>(&self, s: S) -> core::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter().map(|i| i + 1))
    }
}

impl YMonomial {
    pub fn new(mut indices: Vec<usize>) -> Self {
        indices.sort_unstable();
        YMonomial(indices)
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// Exponent vector over `t` variables.
    pub fn exponents(&self, t: usize) -> Exponents {
        let mut e = vec![0; t];
        for &i in &self.0 {
            e[i] += 1;
        }
        e
    }

    pub fn from_exponents(e: &[u32]) -> Self {
        YMonomial(e.iter().enumerate().flat_map(|(i, &k)| core::iter::repeat_n(i, k as usize)).collect())
    }

    /// The image under `Y_i -> a_i`.
    pub fn image(&self, b: &MonoidBasis) -> Exponents {
        let mut v = vec![0; b.dim()];
        for &i in &self.0 {
            for (x, y) in v.iter_mut().zip(&b.generators()[i]) {
                *x += y;
            }
        }
        v
    }

    pub fn divides(&self, other: &YMonomial) -> bool {
        let (mut a, mut b) = (self.0.iter().peekable(), other.0.iter());
        while let Some(&x) = a.peek() {
            match b.next() {
                Some(y) if y == x => {
                    a.next();
                }
                Some(y) if y < x => {}
                _ => return false,
            }
        }
        true
    }

    /// `self / div * mul`, assuming `div` divides `self`.
    fn replace(&self, div: &YMonomial, mul: &YMonomial) -> YMonomial {
        let mut out = Vec::with_capacity(self.0.len() - div.0.len() + mul.0.len());
        let mut d = div.0.iter().peekable();
        for &x in &self.0 {
            if d.peek() == Some(&&x) {
                d.next();
            } else {
                out.push(x);
            }
        }
        out.extend_from_slice(&mul.0);
        YMonomial::new(out)
    }
}

/// `lhs - rhs` with both sides of equal degree mapping to the same fiber.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Binomial {
    pub lhs: YMonomial,
    pub rhs: YMonomial,
    #[serde(skip)]
    pub fiber: Exponents,
}

impl Binomial {
    pub fn new(lhs: YMonomial, rhs: YMonomial, b: &MonoidBasis) -> Result<Binomial> {
        if lhs == rhs {
            return Err(Error::DegenerateBinomial);
        }
        if let Some(&i) = lhs.0.iter().chain(&rhs.0).find(|&&i| i >= b.len()) {
            return Err(Error::InvalidBasis(format!("variable index {i} out of range")));
        }
        let fiber = lhs.image(b);
        if lhs.degree() != rhs.degree() || rhs.image(b) != fiber {
            return Err(Error::FiberMismatch);
        }
        Ok(Binomial { lhs, rhs, fiber })
    }

    pub fn degree(&self) -> usize {
        self.lhs.degree()
    }

    /// Same binomial with the lexicographically smaller side first.
    pub fn normalized(mut self) -> Binomial {
        if self.rhs < self.lhs {
            core::mem::swap(&mut self.lhs, &mut self.rhs);
        }
        self
    }

    /// Equal as binomials up to sign.
    pub fn same_up_to_sign(&self, other: &Binomial) -> bool {
        (self.lhs == other.lhs && self.rhs == other.rhs) || (self.lhs == other.rhs && self.rhs == other.lhs)
    }
}

/// For each degree `0..=depth`, all degree-`d` monomials grouped by image.
/// Monomials inside a fiber are sorted.
pub fn fibers(b: &MonoidBasis, depth: usize) -> Vec<BTreeMap<Exponents, Vec<YMonomial>>> {
    let t = b.len();
    let mut out = Vec::with_capacity(depth + 1);
    for d in 0..=depth {
        let mut map: BTreeMap<Exponents, Vec<YMonomial>> = BTreeMap::new();
        let mut current = Vec::with_capacity(d);
        multisets(t, d, 0, &mut current, &mut |m| {
            let m = YMonomial(m.to_vec());
            map.entry(m.image(b)).or_default().push(m);
        });
        out.push(map);
    }
    out
}

// Non-decreasing index sequences of length `d` drawn from `from..t`, in lex order.
fn multisets(t: usize, d: usize, from: usize, current: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if current.len() == d {
        f(current);
        return;
    }
    for i in from..t {
        current.push(i);
        multisets(t, d, i, current, f);
        current.pop();
    }
}

/// Minimal binomial generators of the toric ideal up to degree `depth`.
///
/// In each fiber, monomials are joined when they differ by a lower-degree
/// generator times a monomial; one binomial is emitted per extra component,
/// joining the smallest monomial of the first component to the smallest
/// monomial of each other component.
pub fn minimal_generators(b: &MonoidBasis, depth: usize) -> Vec<Binomial> {
    let all = fibers(b, depth);
    let mut collected: Vec<Binomial> = Vec::new();
    for layer in all.iter().skip(2) {
        let mut new = Vec::new();
        for (fiber, members) in layer.iter().filter(|(_, m)| m.len() > 1) {
            let mut uf = UnionFind::new(members.len());
            for (k, m) in members.iter().enumerate() {
                for bin in &collected {
                    for (x, y) in [(&bin.lhs, &bin.rhs), (&bin.rhs, &bin.lhs)] {
                        if x.divides(m) {
                            let moved = m.replace(x, y);
                            let other = members.binary_search(&moved).expect("moves stay in the fiber");
                            uf.union(k, other);
                        }
                    }
                }
            }
            // members are sorted, so the first member seen of each root is its minimum
            let mut reps: Vec<usize> = Vec::new();
            let mut seen_roots = BTreeMap::new();
            for k in 0..members.len() {
                seen_roots.entry(uf.find(k)).or_insert_with(|| {
                    reps.push(k);
                });
            }
            for &k in &reps[1..] {
                new.push(Binomial { lhs: members[reps[0]].clone(), rhs: members[k].clone(), fiber: fiber.clone() });
            }
        }
        collected.extend(new);
    }
    collected
}

/// Number of minimal generators in each degree `0..=depth`.
pub fn generator_counts(gens: &[Binomial], depth: usize) -> Vec<usize> {
    let mut counts = vec![0; depth + 1];
    for g in gens {
        if g.degree() <= depth {
            counts[g.degree()] += 1;
        }
    }
    counts
}

/// The toric ideal is generated by its quadratic binomials. Unlike
/// inspecting [`minimal_generators`] up to a bound, this is a certificate.
pub fn is_quadratically_generated(b: &MonoidBasis) -> bool {
    crate::groebner::generates_toric_ideal(b, &minimal_generators(b, 2)).unwrap_or(false)
}

/// Binomial of an even closed walk given as 0-based indices into
/// [`Graph::edges`]: odd-position edges minus even-position edges.
pub fn walk_binomial(g: &Graph, walk: &[usize]) -> Result<Binomial> {
    if walk.is_empty() || walk.len() % 2 == 1 {
        return Err(Error::InvalidWalk(format!("length {} is not a positive even number", walk.len())));
    }
    let edges = g.edges();
    let edge =
        |i: usize| edges.get(i).copied().ok_or_else(|| Error::InvalidWalk(format!("edge index {i} out of range")));
    let first = edge(walk[0])?;
    // try both orientations of the first edge
    let mut trail = None;
    for start in [first.0, first.1] {
        let mut at = start;
        let mut ok = true;
        for &i in walk {
            let (a, b) = edge(i)?;
            at = if a == at {
                b
            } else if b == at {
                a
            } else {
                ok = false;
                break;
            };
        }
        if ok && at == start {
            trail = Some(start);
            break;
        }
    }
    if trail.is_none() {
        return Err(Error::InvalidWalk(format!("{walk:?} is not a closed walk")));
    }
    let lhs = YMonomial::new(walk.iter().step_by(2).copied().collect());
    let rhs = YMonomial::new(walk.iter().skip(1).step_by(2).copied().collect());
    let basis = crate::semigroup::edge_ring_basis(g)?;
    Binomial::new(lhs, rhs, &basis)
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

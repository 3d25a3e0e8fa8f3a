//! Homogeneous affine semigroups: edge rings `K[G]`, squarefree Veronese
//! rings `R_{n,d}`, their graded pieces, monoid ideals, and the strongly
//! Koszul oracles.
//!
//! A semigroup element is its exponent vector. All ideals here are monomial,
//! so nothing depends on the coefficient field.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub type Exponents = Vec<u32>;

/// Distinct nonzero generators of equal coordinate sum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawBasis")]
pub struct MonoidBasis {
    dim: usize,
    generators: Vec<Exponents>,
    #[serde(skip)]
    gen_degree: u32,
}

#[derive(Deserialize)]
struct RawBasis {
    dim: usize,
    generators: Vec<Exponents>,
}

impl TryFrom<RawBasis> for MonoidBasis {
    type Error = Error;
    fn try_from(raw: RawBasis) -> Result<Self> {
        MonoidBasis::new(raw.dim, raw.generators)
    }
}

impl MonoidBasis {
    pub fn new(dim: usize, generators: Vec<Exponents>) -> Result<Self> {
        let first = generators.first().ok_or_else(|| Error::InvalidBasis("no generators".into()))?;
        let gen_degree: u32 = first.iter().sum();
        if gen_degree == 0 {
            return Err(Error::InvalidBasis("zero generator".into()));
        }
        let mut seen = BTreeSet::new();
        for g in &generators {
            if g.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, got: g.len() });
            }
            if g.iter().sum::<u32>() != gen_degree {
                return Err(Error::InvalidBasis(format!("{g:?} has a different total degree")));
            }
            if !seen.insert(g) {
                return Err(Error::InvalidBasis(format!("{g:?} repeated")));
            }
        }
        Ok(MonoidBasis { dim, generators, gen_degree })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Exponents] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Coordinate sum of each generator.
    pub fn generator_degree(&self) -> u32 {
        self.gen_degree
    }

    /// Degree of `v` in the grading where generators have degree 1, if the
    /// coordinate sum is a multiple of the generator degree.
    pub fn degree_of(&self, v: &[u32]) -> Option<usize> {
        let s: u32 = v.iter().sum();
        s.is_multiple_of(self.gen_degree).then_some((s / self.gen_degree) as usize)
    }

    /// The generators with ambient coordinates permuted: coordinate `i` moves to `perm[i]`.
    pub fn permute_coordinates(&self, perm: &[usize]) -> Result<MonoidBasis> {
        if perm.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: perm.len() });
        }
        let gens = self
            .generators
            .iter()
            .map(|g| {
                let mut out = vec![0; self.dim];
                for (i, &x) in g.iter().enumerate() {
                    out[perm[i]] = x;
                }
                out
            })
            .collect();
        MonoidBasis::new(self.dim, gens)
    }

    pub fn element(&self, vector: Exponents) -> Result<MonoidElement> {
        if vector.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: vector.len() });
        }
        if !membership(&vector, self) {
            return Err(Error::NotInSemigroup(format!("{vector:?}")));
        }
        let degree = self.degree_of(&vector).expect("members have integral degree");
        Ok(MonoidElement { vector, degree })
    }

    /// Generator `i` (0-based) as a degree-1 element.
    pub fn generator(&self, i: usize) -> MonoidElement {
        MonoidElement { vector: self.generators[i].clone(), degree: 1 }
    }
}

/// An exponent vector certified to be a sum of `degree` generators.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct MonoidElement {
    vector: Exponents,
    degree: usize,
}

impl MonoidElement {
    pub fn vector(&self) -> &[u32] {
        &self.vector
    }

    pub fn degree(&self) -> usize {
        self.degree
    }
}

/// One generator per edge, in the graph's lexicographic edge order.
pub fn edge_ring_basis(g: &Graph) -> Result<MonoidBasis> {
    if g.edge_count() == 0 {
        return Err(Error::NoEdges);
    }
    let gens = g
        .edges()
        .iter()
        .map(|&(i, j)| {
            let mut v = vec![0; g.n()];
            v[i - 1] = 1;
            v[j - 1] = 1;
            v
        })
        .collect();
    MonoidBasis::new(g.n(), gens)
}

/// Indicator vectors of the `d`-subsets of `{1..n}`, lexicographic subset order.
pub fn veronese_basis(n: usize, d: usize) -> Result<MonoidBasis> {
    if d < 2 || d >= n {
        return Err(Error::VeroneseRange { n, d });
    }
    let mut gens = Vec::new();
    let mut subset: Vec<usize> = (0..d).collect();
    loop {
        let mut v = vec![0; n];
        for &i in &subset {
            v[i] = 1;
        }
        gens.push(v);
        // next d-subset in lexicographic order
        let Some(k) = (0..d).rev().find(|&k| subset[k] < n - d + k) else { break };
        subset[k] += 1;
        for m in k + 1..d {
            subset[m] = subset[m - 1] + 1;
        }
    }
    MonoidBasis::new(n, gens)
}

/// Exact membership of `v` in the semigroup generated by `b`.
pub fn membership(v: &[u32], b: &MonoidBasis) -> bool {
    if v.len() != b.dim || b.degree_of(v).is_none() {
        return false;
    }
    let mut memo = BTreeMap::new();
    member_rec(v, b, &mut memo)
}

fn member_rec(v: &[u32], b: &MonoidBasis, memo: &mut BTreeMap<Exponents, bool>) -> bool {
    if v.iter().all(|&x| x == 0) {
        return true;
    }
    if let Some(&known) = memo.get(v) {
        return known;
    }
    let found = b.generators.iter().any(|g| match checked_sub(v, g) {
        Some(rest) => member_rec(&rest, b, memo),
        None => false,
    });
    memo.insert(v.to_vec(), found);
    found
}

pub(crate) fn checked_sub(a: &[u32], b: &[u32]) -> Option<Exponents> {
    a.iter().zip(b).map(|(&x, &y)| x.checked_sub(y)).collect()
}

fn add(a: &[u32], b: &[u32]) -> Exponents {
    a.iter().zip(b).map(|(&x, &y)| x + y).collect()
}

/// Small bitset over generator indices.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GenSet(Vec<u64>);

impl GenSet {
    fn with_capacity(t: usize) -> Self {
        GenSet(vec![0; t.div_ceil(64)])
    }

    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.get(i / 64).is_some_and(|w| w & (1 << (i % 64)) != 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(k, &w)| (0..64).filter(move |bit| w & (1u64 << bit) != 0).map(move |bit| k * 64 + bit))
    }
}

/// The distinct semigroup elements of each degree `0..=depth`, built by
/// adding every generator to the previous layer. Each element also records
/// the generators `a` with `s - a` in the semigroup.
#[derive(Clone, Debug)]
pub struct ElementTable {
    basis: MonoidBasis,
    layers: Vec<Vec<Exponents>>,
    index: Vec<BTreeMap<Exponents, usize>>,
    divisors: Vec<Vec<GenSet>>,
}

impl ElementTable {
    pub fn new(basis: &MonoidBasis, depth: usize) -> Self {
        let t = basis.len();
        let zero = vec![0; basis.dim];
        let mut layers = vec![vec![zero.clone()]];
        let mut index = vec![BTreeMap::from([(zero, 0)])];
        let mut divisors = vec![vec![GenSet::with_capacity(t)]];
        for _ in 1..=depth {
            let prev = layers.last().expect("layer 0 exists");
            let mut found: BTreeMap<Exponents, GenSet> = BTreeMap::new();
            for x in prev {
                for (k, a) in basis.generators.iter().enumerate() {
                    found.entry(add(x, a)).or_insert_with(|| GenSet::with_capacity(t)).insert(k);
                }
            }
            let mut layer = Vec::with_capacity(found.len());
            let mut idx = BTreeMap::new();
            let mut divs = Vec::with_capacity(found.len());
            for (pos, (v, d)) in found.into_iter().enumerate() {
                idx.insert(v.clone(), pos);
                layer.push(v);
                divs.push(d);
            }
            layers.push(layer);
            index.push(idx);
            divisors.push(divs);
        }
        ElementTable { basis: basis.clone(), layers, index, divisors }
    }

    pub fn basis(&self) -> &MonoidBasis {
        &self.basis
    }

    pub fn depth(&self) -> usize {
        self.layers.len() - 1
    }

    /// Elements of degree `d`, sorted lexicographically.
    pub fn layer(&self, d: usize) -> &[Exponents] {
        &self.layers[d]
    }

    /// Generators dividing the `pos`-th element of layer `d`.
    pub fn divisors(&self, d: usize, pos: usize) -> &GenSet {
        &self.divisors[d][pos]
    }

    pub fn position(&self, v: &[u32]) -> Option<(usize, usize)> {
        let d = self.basis.degree_of(v)?;
        let pos = *self.index.get(d)?.get(v)?;
        Some((d, pos))
    }

    /// Membership, answered from the table when the degree is within depth.
    pub fn contains(&self, v: &[u32]) -> bool {
        match self.basis.degree_of(v) {
            Some(d) if d <= self.depth() => self.index[d].contains_key(v),
            Some(_) => membership(v, &self.basis),
            None => false,
        }
    }

    fn contains_difference(&self, a: &[u32], b: &[u32]) -> bool {
        checked_sub(a, b).is_some_and(|v| self.contains(&v))
    }

    pub fn hilbert_function(&self) -> Vec<usize> {
        self.layers.iter().map(Vec::len).collect()
    }
}

/// Per-degree element sets for degrees `0..=depth`.
pub fn elements_up_to_degree(b: &MonoidBasis, depth: usize) -> ElementTable {
    ElementTable::new(b, depth)
}

/// Number of distinct elements in each degree `0..=depth`.
pub fn hilbert_function(b: &MonoidBasis, depth: usize) -> Vec<usize> {
    ElementTable::new(b, depth).hilbert_function()
}

fn one_based_pair<S: Serializer>(pair: &Option<(usize, usize)>, s: S) -> core::result::Result<S::Ok, S::Error> {
    pair.map(|(i, j)| [i + 1, j + 1]).serialize(s)
}

/// A minimal generator `w` of the monoid ideal `(u) ∩ (v)`, with the
/// quotient `w - u - v` and whether it lies in the semigroup.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonoidIdealWitness {
    /// 0-based generator indices when `u`, `v` are generators (1-based when serialized).
    #[serde(serialize_with = "one_based_pair")]
    pub pair: Option<(usize, usize)>,
    pub u: Exponents,
    pub v: Exponents,
    pub element: Exponents,
    pub degree: usize,
    pub quotient: Vec<i64>,
    pub quotient_in_semigroup: bool,
}

impl MonoidIdealWitness {
    fn new(table: &ElementTable, pair: Option<(usize, usize)>, u: &[u32], v: &[u32], w: &[u32], degree: usize) -> Self {
        let quotient: Vec<i64> = (0..w.len()).map(|k| i64::from(w[k]) - i64::from(u[k]) - i64::from(v[k])).collect();
        let quotient_in_semigroup = quotient.iter().all(|&q| q >= 0) && {
            let q: Exponents = quotient.iter().map(|&q| q as u32).collect();
            table.contains(&q)
        };
        MonoidIdealWitness {
            pair,
            u: u.to_vec(),
            v: v.to_vec(),
            element: w.to_vec(),
            degree,
            quotient,
            quotient_in_semigroup,
        }
    }
}

/// All minimal generators of `(u) ∩ (v)` of degree at most `depth`.
pub fn principal_intersection_min_gens(
    u: &MonoidElement,
    v: &MonoidElement,
    b: &MonoidBasis,
    depth: usize,
) -> Vec<MonoidIdealWitness> {
    let table = ElementTable::new(b, depth);
    intersection_min_gens(&table, None, &u.vector, &v.vector)
}

fn intersection_min_gens(
    table: &ElementTable,
    pair: Option<(usize, usize)>,
    u: &[u32],
    v: &[u32],
) -> Vec<MonoidIdealWitness> {
    let in_ideal = |s: &[u32]| table.contains_difference(s, u) && table.contains_difference(s, v);
    let start = table.basis.degree_of(u).unwrap_or(0).max(table.basis.degree_of(v).unwrap_or(0));
    let mut out = Vec::new();
    for d in start..=table.depth() {
        for (pos, s) in table.layer(d).iter().enumerate() {
            if !in_ideal(s) {
                continue;
            }
            let minimal = table
                .divisors(d, pos)
                .iter()
                .all(|k| !in_ideal(&checked_sub(s, &table.basis.generators[k]).expect("divisor")));
            if minimal {
                out.push(MonoidIdealWitness::new(table, pair, u, v, s, d));
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum OracleVerdict {
    /// No failure found among elements of degree `<= degree_bound`.
    Pass {
        degree_bound: usize,
    },
    Fail {
        degree_bound: usize,
        witness: MonoidIdealWitness,
    },
}

impl OracleVerdict {
    pub fn passed(&self) -> bool {
        matches!(self, OracleVerdict::Pass { .. })
    }
}

/// Checks that every `(a_i) ∩ (a_j)` has no minimal generator of degree 3 or
/// more among elements of degree `<= depth`.
///
/// The reported witness minimizes `(degree, i, j, element)`, so raising the
/// bound never changes an existing failure.
pub fn strongly_koszul_pairwise(b: &MonoidBasis, depth: usize) -> OracleVerdict {
    let table = ElementTable::new(b, depth);
    strongly_koszul_pairwise_in(&table)
}

pub fn strongly_koszul_pairwise_in(table: &ElementTable) -> OracleVerdict {
    let t = table.basis.len();
    let depth = table.depth();
    for d in 3..=depth {
        for i in 0..t {
            for j in i + 1..t {
                let in_ideal = |dd: usize, pos: usize| {
                    let divs = table.divisors(dd, pos);
                    divs.contains(i) && divs.contains(j)
                };
                for (pos, s) in table.layer(d).iter().enumerate() {
                    if !in_ideal(d, pos) {
                        continue;
                    }
                    let minimal = table.divisors(d, pos).iter().all(|k| {
                        let rest = checked_sub(s, &table.basis.generators[k]).expect("divisor");
                        let (dd, p) = table.position(&rest).expect("rest is tabulated");
                        !in_ideal(dd, p)
                    });
                    if minimal {
                        let g = &table.basis.generators;
                        let witness = MonoidIdealWitness::new(table, Some((i, j)), &g[i], &g[j], s, d);
                        return OracleVerdict::Fail { degree_bound: depth, witness };
                    }
                }
            }
        }
    }
    OracleVerdict::Pass { degree_bound: depth }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum ColonVerdict {
    Pass {
        degree_bound: usize,
    },
    /// `(a_p : p in prefix) : a_divisor` has a minimal generator that is not
    /// one of the semigroup generators.
    Fail {
        degree_bound: usize,
        prefix: Vec<usize>,
        divisor: usize,
        element: Exponents,
        degree: usize,
    },
}

impl ColonVerdict {
    pub fn passed(&self) -> bool {
        matches!(self, ColonVerdict::Pass { .. })
    }
}

/// For each `j` the colon ideal `(a_{i_1}, ..., a_{i_{j-1}}) : a_{i_j}` over a
/// subsequence of 0-based generator indices, checked up to degree `depth`.
pub fn colon_subset_check(b: &MonoidBasis, subsequence: &[usize], depth: usize) -> Result<ColonVerdict> {
    if let Some(&i) = subsequence.iter().find(|&&i| i >= b.len()) {
        return Err(Error::InvalidBasis(format!("generator index {i} out of range")));
    }
    let table = ElementTable::new(b, depth + 1);
    Ok(colon_in(&table, subsequence, depth))
}

fn colon_in(table: &ElementTable, subsequence: &[usize], depth: usize) -> ColonVerdict {
    let gens = &table.basis.generators;
    for j in 1..subsequence.len() {
        let prefix = &subsequence[..j];
        let divisor = subsequence[j];
        // s is in the colon iff s + a_divisor is divisible by some prefix generator
        let in_colon = |s: &[u32]| {
            let (d, pos) = table.position(&add(s, &gens[divisor])).expect("tabulated to depth + 1");
            let divs = table.divisors(d, pos);
            prefix.iter().any(|&p| divs.contains(p))
        };
        for d in 0..=depth {
            for (pos, s) in table.layer(d).iter().enumerate() {
                if !in_colon(s) {
                    continue;
                }
                let minimal =
                    table.divisors(d, pos).iter().all(|k| !in_colon(&checked_sub(s, &gens[k]).expect("divisor")));
                if minimal && d != 1 {
                    return ColonVerdict::Fail {
                        degree_bound: depth,
                        prefix: prefix.to_vec(),
                        divisor,
                        element: s.clone(),
                        degree: d,
                    };
                }
            }
        }
    }
    ColonVerdict::Pass { degree_bound: depth }
}

/// Runs [`colon_subset_check`] over every strictly increasing subsequence of
/// generators. Exponential in the number of generators.
pub fn strongly_koszul_definition(b: &MonoidBasis, depth: usize) -> Result<ColonVerdict> {
    const MAX_GENERATORS: usize = 16;
    let t = b.len();
    if t > MAX_GENERATORS {
        return Err(Error::TooLarge { what: "definition-level colon check", n: t, max: MAX_GENERATORS });
    }
    let table = ElementTable::new(b, depth + 1);
    for mask in 1u32..(1 << t) {
        if mask.count_ones() < 2 {
            continue;
        }
        let subsequence: Vec<usize> = (0..t).filter(|&i| mask & (1 << i) != 0).collect();
        let verdict = colon_in(&table, &subsequence, depth);
        if !verdict.passed() {
            return Ok(verdict);
        }
    }
    Ok(ColonVerdict::Pass { degree_bound: depth })
}

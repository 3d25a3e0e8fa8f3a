//! Buchberger's algorithm for binomial ideals and the search for a
//! quadratic Gröbner basis over permuted graded reverse-lexicographic orders.
//!
//! Reducing a monomial by binomials `lead - tail` always yields a monomial,
//! so a binomial `a - b` reduces to `NF(a) - NF(b)` and never leaves the
//! binomial world. Only exponent vectors over the presentation variables are
//! manipulated.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::cmp::Ordering;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::semigroup::{Exponents, MonoidBasis};
use crate::toric::{minimal_generators, Binomial, YMonomial};

pub const DEFAULT_ATTEMPTS: usize = 1000;
pub const DEFAULT_SEED: u64 = 0;
/// Degree bound used to decide quadratic generation before searching.
pub const DEFAULT_DEGREE_BOUND: usize = 4;

/// Graded reverse lexicographic order with variables ranked
/// `Y_{rank[0]} > Y_{rank[1]} > ...` (0-based indices).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct TermOrder {
    #[serde(serialize_with = "one_based")]
    rank: Vec<usize>,
}

fn one_based<S: serde::Serializer>(v: &[usize], s: S) -> core::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|i| i + 1))
}

impl TermOrder {
    pub fn identity(t: usize) -> Self {
        TermOrder { rank: (0..t).collect() }
    }

    pub fn new(rank: Vec<usize>) -> Result<Self> {
        let mut sorted = rank.clone();
        sorted.sort_unstable();
        if sorted.iter().enumerate().any(|(k, &i)| k != i) {
            return Err(Error::InvalidBasis(alloc::format!("{rank:?} is not a permutation")));
        }
        Ok(TermOrder { rank })
    }

    pub fn rank(&self) -> &[usize] {
        &self.rank
    }

    pub fn len(&self) -> usize {
        self.rank.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rank.is_empty()
    }

    /// Compares exponent vectors: total degree first, then the monomial with
    /// the smaller exponent in the lowest-ranked differing variable is larger.
    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        let da: u32 = a.iter().sum();
        let db: u32 = b.iter().sum();
        da.cmp(&db).then_with(|| {
            for &v in self.rank.iter().rev() {
                if a[v] != b[v] {
                    return b[v].cmp(&a[v]);
                }
            }
            Ordering::Equal
        })
    }

    pub fn cmp_monomials(&self, a: &YMonomial, b: &YMonomial) -> Ordering {
        self.cmp(&a.exponents(self.len()), &b.exponents(self.len()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Rule {
    lead: Exponents,
    tail: Exponents,
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(&x, &y)| x == 0 || y == 0)
}

fn lcm(a: &[u32], b: &[u32]) -> Exponents {
    a.iter().zip(b).map(|(&x, &y)| x.max(y)).collect()
}

// m - lead + tail, given lead | m
fn rewrite(m: &[u32], rule: &Rule) -> Exponents {
    m.iter().zip(&rule.lead).zip(&rule.tail).map(|((&x, &l), &t)| x - l + t).collect()
}

fn degree(m: &[u32]) -> usize {
    m.iter().sum::<u32>() as usize
}

fn normal_form(mut m: Exponents, rules: &[Rule]) -> Exponents {
    while let Some(rule) = rules.iter().find(|r| divides(&r.lead, &m)) {
        m = rewrite(&m, rule);
    }
    m
}

fn orient(a: Exponents, b: Exponents, order: &TermOrder) -> Option<Rule> {
    match order.cmp(&a, &b) {
        Ordering::Greater => Some(Rule { lead: a, tail: b }),
        Ordering::Less => Some(Rule { lead: b, tail: a }),
        Ordering::Equal => None,
    }
}

fn s_pair(a: &Rule, b: &Rule) -> (Exponents, Exponents) {
    let l = lcm(&a.lead, &b.lead);
    (rewrite(&l, a), rewrite(&l, b))
}

/// A reduced Gröbner basis, or the partial result when S-pairs above the
/// degree cap were skipped.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "basis", rename_all = "snake_case")]
pub enum GroebnerBasis {
    Complete(Vec<Binomial>),
    Truncated(Vec<Binomial>),
}

impl GroebnerBasis {
    pub fn basis(&self) -> &[Binomial] {
        match self {
            GroebnerBasis::Complete(b) | GroebnerBasis::Truncated(b) => b,
        }
    }

    pub fn is_complete(&self) -> bool {
        matches!(self, GroebnerBasis::Complete(_))
    }

    pub fn max_degree(&self) -> usize {
        self.basis().iter().map(Binomial::degree).max().unwrap_or(0)
    }
}

/// Reduced Gröbner basis of the binomials `gens` (over the presentation of
/// `b`) with respect to `order`. With `max_degree`, S-pairs whose lcm has
/// larger degree are skipped and the result is marked truncated.
///
/// Each returned binomial has its leading term as `lhs`; the list is sorted by
/// leading term in increasing order.
pub fn buchberger(
    b: &MonoidBasis,
    gens: &[Binomial],
    order: &TermOrder,
    max_degree: Option<usize>,
) -> Result<GroebnerBasis> {
    let t = b.len();
    if order.len() != t {
        return Err(Error::DimensionMismatch { expected: t, got: order.len() });
    }
    let mut rules: Vec<Rule> = Vec::new();
    for g in gens {
        if g.lhs.indices().iter().chain(g.rhs.indices()).any(|&i| i >= t) {
            return Err(Error::InvalidBasis("binomial uses a variable outside the basis".into()));
        }
        if let Some(rule) = orient(g.lhs.exponents(t), g.rhs.exponents(t), order) {
            rules.push(rule);
        }
    }
    // pending S-pairs keyed by (lcm degree, i, j): normal selection strategy
    let mut pairs: BTreeSet<(usize, usize, usize)> = BTreeSet::new();
    for j in 0..rules.len() {
        for i in 0..j {
            pairs.insert((degree(&lcm(&rules[i].lead, &rules[j].lead)), i, j));
        }
    }
    let mut truncated = false;
    while let Some((deg, i, j)) = pairs.pop_first() {
        if max_degree.is_some_and(|cap| deg > cap) {
            truncated = true;
            continue;
        }
        if coprime(&rules[i].lead, &rules[j].lead) {
            continue;
        }
        let (x, y) = s_pair(&rules[i], &rules[j]);
        let (x, y) = (normal_form(x, &rules), normal_form(y, &rules));
        if let Some(rule) = orient(x, y, order) {
            let k = rules.len();
            for (m, r) in rules.iter().enumerate() {
                pairs.insert((degree(&lcm(&r.lead, &rule.lead)), m, k));
            }
            rules.push(rule);
        }
    }
    let reduced = reduce(rules, order);
    let basis = reduced
        .into_iter()
        .map(|r| Binomial::new(YMonomial::from_exponents(&r.lead), YMonomial::from_exponents(&r.tail), b))
        .collect::<Result<Vec<_>>>()?;
    Ok(if truncated { GroebnerBasis::Truncated(basis) } else { GroebnerBasis::Complete(basis) })
}

// Drops rules whose lead is divisible by another lead, then reduces tails.
fn reduce(rules: Vec<Rule>, order: &TermOrder) -> Vec<Rule> {
    let mut minimal: Vec<Rule> = Vec::new();
    for (k, r) in rules.iter().enumerate() {
        let redundant = rules
            .iter()
            .enumerate()
            .any(|(m, other)| m != k && divides(&other.lead, &r.lead) && (other.lead != r.lead || m < k));
        if !redundant {
            minimal.push(r.clone());
        }
    }
    let mut out: Vec<Rule> =
        minimal.iter().map(|r| Rule { lead: r.lead.clone(), tail: normal_form(r.tail.clone(), &minimal) }).collect();
    out.sort_by(|a, b| order.cmp(&a.lead, &b.lead).then_with(|| order.cmp(&a.tail, &b.tail)));
    out
}

fn rules_of(gb: &[Binomial], order: &TermOrder) -> Vec<Rule> {
    let t = order.len();
    gb.iter().filter_map(|g| orient(g.lhs.exponents(t), g.rhs.exponents(t), order)).collect()
}

/// True iff `f` rewrites to zero modulo `gb` (both sides reach the same normal form).
pub fn reduces_to_zero(f: &Binomial, gb: &[Binomial], order: &TermOrder) -> bool {
    let rules = rules_of(gb, order);
    let t = order.len();
    normal_form(f.lhs.exponents(t), &rules) == normal_form(f.rhs.exponents(t), &rules)
}

/// Checks every S-polynomial of `gb` (coprime pairs included) reduces to zero.
pub fn s_pairs_reduce_to_zero(gb: &[Binomial], order: &TermOrder) -> bool {
    let rules = rules_of(gb, order);
    (0..rules.len()).all(|j| {
        (0..j).all(|i| {
            let (x, y) = s_pair(&rules[i], &rules[j]);
            normal_form(x, &rules) == normal_form(y, &rules)
        })
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuadraticGb {
    /// 0-based index of the successful attempt.
    pub attempt: usize,
    pub order: TermOrder,
    pub basis: Vec<Binomial>,
}

/// Looks for a term order under which the reduced Gröbner basis of the toric
/// ideal is quadratic. The identity order is tried first, then distinct
/// random orders drawn from `seed`.
///
/// Returns `None` immediately when the quadratic binomials of the ideal do
/// not generate it (see [`generates_toric_ideal`]), and `None` when the
/// budget runs out; the latter is not a proof that no quadratic Gröbner
/// basis exists.
pub fn quadratic_gb_search(b: &MonoidBasis, attempts: usize, seed: u64) -> Option<QuadraticGb> {
    let gens = minimal_generators(b, 2);
    if !generates_toric_ideal(b, &gens).ok()? {
        return None;
    }
    let t = b.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tried = BTreeSet::new();
    let mut rank: Vec<usize> = (0..t).collect();
    let mut attempt = 0;
    let mut stale = 0;
    while attempt < attempts {
        if !tried.insert(rank.clone()) {
            // all orders may already have been seen for small t
            stale += 1;
            if stale > 64 {
                break;
            }
            rank.shuffle(&mut rng);
            continue;
        }
        stale = 0;
        let order = TermOrder { rank: rank.clone() };
        if let Some(basis) = quadratic_under(b, &gens, &order) {
            return Some(QuadraticGb { attempt, order, basis });
        }
        attempt += 1;
        rank.shuffle(&mut rng);
    }
    None
}

/// Decides whether the binomials `gens` generate the whole toric ideal of `b`.
///
/// An ideal `J` spanned by binomials of the ideal equals it exactly when the
/// exponent differences of `gens` span the integer kernel of the generator
/// matrix, and `J : y_i^∞ = J` for every variable. Saturation is tested with
/// a Gröbner basis in reverse-lexicographic order with `y_i` smallest: `J`
/// is `y_i`-saturated iff each basis element divided by its `y_i`-content
/// still lies in `J`.
pub fn generates_toric_ideal(b: &MonoidBasis, gens: &[Binomial]) -> Result<bool> {
    let t = b.len();
    let columns: Vec<Vec<i64>> = b.generators().iter().map(|g| g.iter().map(|&x| i64::from(x)).collect()).collect();
    let (rank_a, _) = crate::lattice::rank_and_saturation(&columns, b.dim());
    let moves: Vec<Vec<i64>> = gens
        .iter()
        .map(|g| {
            let (l, r) = (g.lhs.exponents(t), g.rhs.exponents(t));
            l.iter().zip(&r).map(|(&x, &y)| i64::from(x) - i64::from(y)).collect()
        })
        .collect();
    let (rank_l, saturated) = crate::lattice::rank_and_saturation(&moves, t);
    if rank_l != t - rank_a || !saturated {
        return Ok(false);
    }
    for i in 0..t {
        let rank: Vec<usize> = (0..t).filter(|&k| k != i).chain([i]).collect();
        let order = TermOrder { rank };
        let gb = buchberger(b, gens, &order, None)?;
        let rules = rules_of(gb.basis(), &order);
        for r in &rules {
            let c = r.lead[i].min(r.tail[i]);
            if c == 0 {
                continue;
            }
            let (mut x, mut y) = (r.lead.clone(), r.tail.clone());
            x[i] -= c;
            y[i] -= c;
            if normal_form(x, &rules) != normal_form(y, &rules) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn quadratic_under(b: &MonoidBasis, gens: &[Binomial], order: &TermOrder) -> Option<Vec<Binomial>> {
    let quick = buchberger(b, gens, order, Some(3)).ok()?;
    if quick.max_degree() > 2 {
        return None;
    }
    let full = buchberger(b, gens, order, None).ok()?;
    (full.max_degree() <= 2).then(|| full.basis().to_vec())
}

#[cfg(test)]
mod tests {
    use alloc::vec;

    use super::*;
    use crate::graph::Graph;
    use crate::semigroup::edge_ring_basis;

    #[test]
    fn grevlex_comparisons() {
        let o = TermOrder::identity(3);
        // y0^2 > y0 y1 > y1^2 > y0 y2 > y1 y2 > y2^2
        let chain = [[2, 0, 0], [1, 1, 0], [0, 2, 0], [1, 0, 1], [0, 1, 1], [0, 0, 2]];
        for w in chain.windows(2) {
            assert_eq!(o.cmp(&w[0], &w[1]), Ordering::Greater, "{:?} > {:?}", w[0], w[1]);
        }
        assert_eq!(o.cmp(&[0, 0, 1], &[1, 1, 0]), Ordering::Less);
        let rev = TermOrder::new(vec![2, 1, 0]).unwrap();
        assert_eq!(rev.cmp(&[1, 0, 0], &[0, 0, 1]), Ordering::Less);
        assert!(TermOrder::new(vec![0, 0, 1]).is_err());
    }

    #[test]
    fn principal_ideal_is_its_own_basis() {
        let b = edge_ring_basis(&Graph::cycle(4)).unwrap();
        let gens = minimal_generators(&b, 3);
        assert_eq!(gens.len(), 1);
        let gb = buchberger(&b, &gens, &TermOrder::identity(4), None).unwrap();
        assert!(gb.is_complete());
        assert_eq!(gb.basis().len(), 1);
        assert!(gb.basis()[0].same_up_to_sign(&gens[0]));
    }

    #[test]
    fn empty_input() {
        let b = edge_ring_basis(&Graph::complete(3)).unwrap();
        let gb = buchberger(&b, &[], &TermOrder::identity(3), None).unwrap();
        assert_eq!(gb, GroebnerBasis::Complete(Vec::new()));
    }

    #[test]
    fn truncation_is_reported() {
        // C6 is generated by a single cubic, so no S-pairs: complete even with a cap
        let b = edge_ring_basis(&Graph::cycle(6)).unwrap();
        let gens = minimal_generators(&b, 3);
        let gb = buchberger(&b, &gens, &TermOrder::identity(6), Some(2)).unwrap();
        assert!(gb.is_complete());
        // K_{2,3}: three quadrics whose S-pairs have degree 3
        let b = edge_ring_basis(&Graph::complete_bipartite(2, 3)).unwrap();
        let gens = minimal_generators(&b, 2);
        let gb = buchberger(&b, &gens, &TermOrder::identity(6), Some(2)).unwrap();
        assert!(!gb.is_complete());
    }

    #[test]
    fn search_short_circuits_on_cubic_generator() {
        let b = edge_ring_basis(&Graph::cycle(6)).unwrap();
        assert_eq!(quadratic_gb_search(&b, 10, 0), None);
    }

    #[test]
    fn search_on_square() {
        let b = edge_ring_basis(&Graph::cycle(4)).unwrap();
        let found = quadratic_gb_search(&b, 10, 0).unwrap();
        assert_eq!(found.attempt, 0);
        assert_eq!(found.basis.len(), 1);
    }

    #[test]
    fn search_with_one_variable_terminates() {
        let b = edge_ring_basis(&Graph::path(2)).unwrap();
        let found = quadratic_gb_search(&b, 1000, 7).unwrap();
        assert!(found.basis.is_empty());
    }

    #[test]
    fn toric_generation_certificate() {
        let k4 = edge_ring_basis(&Graph::complete(4)).unwrap();
        assert!(generates_toric_ideal(&k4, &minimal_generators(&k4, 2)).unwrap());
        let c6 = edge_ring_basis(&Graph::cycle(6)).unwrap();
        assert!(!generates_toric_ideal(&c6, &minimal_generators(&c6, 2)).unwrap());
        assert!(generates_toric_ideal(&c6, &minimal_generators(&c6, 3)).unwrap());
        // two triangles joined by a path of length two: one quintic relation
        let g = Graph::new(7, [(1, 6), (1, 7), (2, 5), (2, 7), (3, 4), (3, 6), (4, 6), (5, 7)]).unwrap();
        let b = edge_ring_basis(&g).unwrap();
        assert!(!generates_toric_ideal(&b, &minimal_generators(&b, 4)).unwrap());
        assert!(generates_toric_ideal(&b, &minimal_generators(&b, 5)).unwrap());
    }

    #[test]
    fn certificate_detects_unsaturated_ideal() {
        // twisted cubic: two of the three quadrics span the lattice but not the ideal
        let b = MonoidBasis::new(2, vec![vec![3, 0], vec![2, 1], vec![1, 2], vec![0, 3]]).unwrap();
        let all = minimal_generators(&b, 2);
        assert_eq!(all.len(), 3);
        let q = |l: [usize; 2], r: [usize; 2]| {
            Binomial::new(YMonomial::new(l.to_vec()), YMonomial::new(r.to_vec()), &b).unwrap()
        };
        let two = [q([0, 2], [1, 1]), q([1, 3], [2, 2])];
        assert!(!generates_toric_ideal(&b, &two).unwrap());
        assert!(generates_toric_ideal(&b, &all).unwrap());
    }

    #[test]
    fn search_rejects_hidden_higher_degree_relation() {
        let g = Graph::new(7, [(1, 6), (1, 7), (2, 5), (2, 7), (3, 4), (3, 6), (4, 6), (5, 7)]).unwrap();
        assert_eq!(quadratic_gb_search(&edge_ring_basis(&g).unwrap(), 10, 0), None);
    }
}

//! Brute-force canonical labeling and enumeration of small connected graphs
//! up to isomorphism.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest vertex count accepted by [`canonical_form`].
pub const MAX_CANONICAL_N: usize = 9;

/// The relabeling of `g` whose adjacency bit string (and hence graph6
/// encoding) is lexicographically smallest.
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    let bits = canonical_bits(g)?;
    Graph::from_adjacency_bits(g.n(), &bits)
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    Ok(canonical_bits(a)? == canonical_bits(b)?)
}

fn canonical_bits(g: &Graph) -> Result<Vec<bool>> {
    let n = g.n();
    if n > MAX_CANONICAL_N {
        return Err(Error::TooLarge { what: "canonical form", n, max: MAX_CANONICAL_N });
    }
    let mut search = Search {
        g,
        order: Vec::with_capacity(n),
        used: vec![false; n + 1],
        bits: Vec::with_capacity(n * n / 2),
        best: None,
    };
    search.run();
    Ok(search.best.unwrap_or_default())
}

struct Search<'a> {
    g: &'a Graph,
    // order[k] = original vertex placed at new position k
    order: Vec<usize>,
    used: Vec<bool>,
    bits: Vec<bool>,
    best: Option<Vec<bool>>,
}

impl Search<'_> {
    fn run(&mut self) {
        let n = self.g.n();
        if self.order.len() == n {
            if self.best.as_ref().is_none_or(|b| self.bits < *b) {
                self.best = Some(self.bits.clone());
            }
            return;
        }
        for v in 1..=n {
            if self.used[v] {
                continue;
            }
            let base = self.bits.len();
            for &u in &self.order {
                self.bits.push(self.g.has_edge(u, v));
            }
            // prune when the prefix already exceeds the best prefix
            let worse = self.best.as_ref().is_some_and(|b| self.bits[..] > b[..self.bits.len()]);
            if !worse {
                self.used[v] = true;
                self.order.push(v);
                self.run();
                self.order.pop();
                self.used[v] = false;
            }
            self.bits.truncate(base);
        }
    }
}

/// One canonical representative per isomorphism class of connected graphs on
/// exactly `n` vertices, sorted by adjacency bit string.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(Error::NoVertices);
    }
    if n > MAX_CANONICAL_N {
        return Err(Error::TooLarge { what: "graph enumeration", n, max: MAX_CANONICAL_N });
    }
    let mut classes = vec![Graph::new(1, [])?];
    for m in 2..=n {
        // every connected graph has a vertex whose deletion keeps it connected
        let mut seen = BTreeSet::new();
        for base in &classes {
            for mask in 1u32..(1 << (m - 1)) {
                let extra = (1..m).filter(|&i| mask & (1 << (i - 1)) != 0).map(|i| (i, m));
                let edges = base.edges().iter().copied().chain(extra);
                let g = Graph::new(m, edges)?;
                seen.insert(canonical_bits(&g)?);
            }
        }
        classes = seen.into_iter().map(|bits| Graph::from_adjacency_bits(m, &bits)).collect::<Result<_>>()?;
    }
    Ok(classes)
}

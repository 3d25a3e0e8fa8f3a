//! Finite simple graphs on the vertex set `1..=n`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An undirected edge `(i, j)` with `i < j`, 1-based.
pub type Edge = (usize, usize);

/// A simple undirected graph with vertices `1..=n`.
///
/// Edges are kept sorted lexicographically; that order is the one used for
/// edge-ring generators and presentation variables everywhere else.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawGraph", into = "RawGraph")]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct RawGraph {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl TryFrom<RawGraph> for Graph {
    type Error = Error;

    fn try_from(raw: RawGraph) -> Result<Self> {
        Graph::new(raw.n, raw.edges.iter().map(|e| (e[0], e[1])))
    }
}

impl From<Graph> for RawGraph {
    fn from(g: Graph) -> Self {
        RawGraph { n: g.n, edges: g.edges.iter().map(|&(i, j)| [i, j]).collect() }
    }
}

impl Graph {
    /// Builds a graph, rejecting loops, repeated edges and out-of-range endpoints.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoVertices);
        }
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            for v in [a, b] {
                if v == 0 || v > n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(Error::Loop { vertex: a });
            }
            let e = (a.min(b), a.max(b));
            if !set.insert(e) {
                return Err(Error::DuplicateEdge(e.0, e.1));
            }
        }
        Ok(Self::from_sorted(n, set.into_iter().collect()))
    }

    // `edges` must already be normalized, sorted and deduplicated.
    pub(crate) fn from_sorted(n: usize, edges: Vec<Edge>) -> Self {
        let mut adj = vec![Vec::new(); n + 1];
        for &(i, j) in &edges {
            adj[i].push(j);
            adj[j].push(i);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn complete(n: usize) -> Self {
        let edges = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect();
        Self::from_sorted(n.max(1), edges)
    }

    /// Complete bipartite graph with parts `1..=a` and `a+1..=a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let edges = (1..=a).flat_map(|i| (a + 1..=a + b).map(move |j| (i, j))).collect();
        Self::from_sorted((a + b).max(1), edges)
    }

    /// The cycle `1-2-...-n-1`, `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        let edges = (1..n).map(|i| (i, i + 1)).chain(core::iter::once((1, n)));
        Self::new(n, edges).expect("cycle edges are valid")
    }

    /// The path `1-2-...-n`.
    pub fn path(n: usize) -> Self {
        Self::new(n, (1..n).map(|i| (i, i + 1))).expect("path edges are valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> core::ops::RangeInclusive<usize> {
        1..=self.n
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        if a == 0 || b == 0 || a > self.n || b > self.n {
            return false;
        }
        self.adj[a].binary_search(&b).is_ok()
    }

    /// 0-based position of `{a, b}` in [`Graph::edges`].
    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        self.edges.binary_search(&(a.min(b), a.max(b))).ok()
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n + 1];
        let mut out = Vec::new();
        for start in self.vertices() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Fails with the first two components when the graph is disconnected.
    pub fn require_connected(&self) -> Result<()> {
        let mut comps = self.components();
        if comps.len() == 1 {
            return Ok(());
        }
        let second = comps.swap_remove(1);
        let first = comps.swap_remove(0);
        Err(Error::Disconnected { first, second })
    }

    /// Induced subgraph on `vertices`, relabeled `1..=|W|` preserving order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        if vertices.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        let mut w: Vec<usize> = vertices.to_vec();
        w.sort_unstable();
        w.dedup();
        if let Some(&v) = w.iter().find(|&&v| v == 0 || v > self.n) {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        let mut label = vec![0usize; self.n + 1];
        for (k, &v) in w.iter().enumerate() {
            label[v] = k + 1;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(i, j)| label[i] != 0 && label[j] != 0)
            .map(|&(i, j)| (label[i], label[j]))
            .collect();
        Ok(Graph::from_sorted(w.len(), edges))
    }

    /// Relabels vertex `v` as `perm[v - 1]`; `perm` is a permutation of `1..=n`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, got: perm.len() });
        }
        let mut seen = vec![false; self.n + 1];
        for &p in perm {
            if p == 0 || p > self.n || core::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidBasis(format!("{perm:?} is not a permutation")));
            }
        }
        Graph::new(self.n, self.edges.iter().map(|&(i, j)| (perm[i - 1], perm[j - 1])))
    }

    /// Upper-triangle adjacency bits in graph6 order: `x(0,1), x(0,2), x(1,2), x(0,3), ...`
    /// over 0-based vertex indices.
    pub fn adjacency_bits(&self) -> Vec<bool> {
        let mut bits = Vec::with_capacity(self.n * (self.n - 1) / 2);
        for j in 2..=self.n {
            for i in 1..j {
                bits.push(self.has_edge(i, j));
            }
        }
        bits
    }

    /// Inverse of [`Graph::adjacency_bits`]; `bits.len()` must be `n(n-1)/2`.
    pub fn from_adjacency_bits(n: usize, bits: &[bool]) -> Result<Graph> {
        let expected = n * n.saturating_sub(1) / 2;
        if bits.len() != expected {
            return Err(Error::DimensionMismatch { expected, got: bits.len() });
        }
        let mut edges = Vec::new();
        let mut k = 0;
        for j in 2..=n {
            for i in 1..j {
                if bits[k] {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        Graph::new(n, edges)
    }

    /// Vertex sets of all `K_4` subgraphs, each sorted.
    pub fn k4_subgraphs(&self) -> Vec<[usize; 4]> {
        let mut out = Vec::new();
        for &(a, b) in &self.edges {
            for &c in self.adj[b].iter().filter(|&&c| c > b && self.has_edge(a, c)) {
                for &d in self.adj[c].iter().filter(|&&d| d > c) {
                    if self.has_edge(a, d) && self.has_edge(b, d) {
                        out.push([a, b, c, d]);
                    }
                }
            }
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, {:?})", self.n, self.edges)
    }
}

/// A cycle `(v_1, ..., v_q)`, `q >= 3`, stored in canonical rotation and
/// reflection: smallest vertex first, then the smaller of its two neighbors.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Cycle(Vec<usize>);

impl Cycle {
    /// Canonicalizes an arbitrary rotation/orientation of a cycle in `g`.
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<Cycle> {
        let q = vertices.len();
        if q < 3 {
            return Err(Error::InvalidWalk(format!("cycle {vertices:?} has fewer than 3 vertices")));
        }
        let distinct: BTreeSet<_> = vertices.iter().collect();
        if distinct.len() != q {
            return Err(Error::InvalidWalk(format!("cycle {vertices:?} repeats a vertex")));
        }
        for k in 0..q {
            let (a, b) = (vertices[k], vertices[(k + 1) % q]);
            if !g.has_edge(a, b) {
                return Err(Error::InvalidWalk(format!("{{{a}, {b}}} is not an edge")));
            }
        }
        Ok(Self::canonical(vertices))
    }

    pub(crate) fn canonical(mut vertices: Vec<usize>) -> Cycle {
        let q = vertices.len();
        let start = (0..q).min_by_key(|&k| vertices[k]).unwrap_or(0);
        vertices.rotate_left(start);
        if vertices[q - 1] < vertices[1] {
            vertices[1..].reverse();
        }
        Cycle(vertices)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_odd(&self) -> bool {
        self.0.len() % 2 == 1
    }

    /// Cycle edges, normalized `(min, max)`, in traversal order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        let q = self.0.len();
        (0..q).map(move |k| {
            let (a, b) = (self.0[k], self.0[(k + 1) % q]);
            (a.min(b), a.max(b))
        })
    }

    pub fn common_vertices(&self, other: &Cycle) -> usize {
        self.0.iter().filter(|v| other.0.contains(v)).count()
    }
}

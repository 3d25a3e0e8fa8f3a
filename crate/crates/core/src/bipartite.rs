//! Bipartiteness, complete bipartite blocks, almost-bipartite witnesses and
//! the bipartite split `G(v, V1, V2)`.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Cycle, Graph};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bipartition {
    pub v1: Vec<usize>,
    pub v2: Vec<usize>,
}

impl Bipartition {
    pub fn swapped(&self) -> Bipartition {
        Bipartition { v1: self.v2.clone(), v2: self.v1.clone() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Bipartiteness {
    Bipartite(Bipartition),
    /// Refutation: an odd cycle of the graph.
    OddCycle(Cycle),
}

/// Two-colors a connected graph; the class containing vertex 1 is `v1`.
pub fn bipartition(g: &Graph) -> Result<Bipartiteness> {
    g.require_connected()?;
    Ok(match two_color(g, None) {
        Ok(b) => Bipartiteness::Bipartite(b),
        Err(c) => Bipartiteness::OddCycle(c),
    })
}

/// BFS two-coloring of every component of `g` minus `skip`. In each component
/// the smallest vertex goes to `v1`.
pub(crate) fn two_color(g: &Graph, skip: Option<usize>) -> core::result::Result<Bipartition, Cycle> {
    let n = g.n();
    const UNSEEN: u8 = 2;
    let mut color = vec![UNSEEN; n + 1];
    let mut parent = vec![0usize; n + 1];
    let mut depth = vec![0usize; n + 1];
    for root in g.vertices() {
        if color[root] != UNSEEN || Some(root) == skip {
            continue;
        }
        color[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if Some(w) == skip {
                    continue;
                }
                if color[w] == UNSEEN {
                    color[w] = 1 - color[u];
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    queue.push_back(w);
                } else if color[w] == color[u] {
                    return Err(odd_cycle(u, w, &parent, &depth));
                }
            }
        }
    }
    let class = |c: u8| g.vertices().filter(|&v| Some(v) != skip && color[v] == c).collect();
    Ok(Bipartition { v1: class(0), v2: class(1) })
}

// Closes the BFS-tree paths from `u` and `w` up to their common ancestor.
fn odd_cycle(u: usize, w: usize, parent: &[usize], depth: &[usize]) -> Cycle {
    let (mut a, mut b) = (u, w);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    left.extend(right.into_iter().rev());
    Cycle::canonical(left)
}

/// True iff the connected graph is `K_{p,q}` (a single vertex and `K_{1,1}` included).
pub fn is_complete_bipartite(g: &Graph) -> Result<bool> {
    g.require_connected()?;
    Ok(complete_bipartite_unchecked(g))
}

pub(crate) fn complete_bipartite_unchecked(g: &Graph) -> bool {
    match two_color(g, None) {
        Ok(b) => g.edge_count() == b.v1.len() * b.v2.len(),
        Err(_) => false,
    }
}

/// Vertices `v` such that deleting `v` leaves a bipartite graph.
pub fn almost_bipartite_witnesses(g: &Graph) -> Result<Vec<usize>> {
    g.require_connected()?;
    Ok(g.vertices().filter(|&v| two_color(g, Some(v)).is_ok()).collect())
}

/// The normalized bipartition of `g - v`: in each component of `g - v`, the
/// smallest vertex is in `v1`. `None` if `g - v` is not bipartite.
pub fn bipartition_without(g: &Graph, v: usize) -> Option<Bipartition> {
    two_color(g, Some(v)).ok()
}

/// Builds `G(v, V1, V2)` on `n + 1` vertices: edges of `g - v`, the edges
/// `{i, v}` with `i` in `V1`, and `{i, n+1}` for neighbors `i` of `v` in `V2`.
pub fn split_construction(g: &Graph, v: usize, part: &Bipartition) -> Result<Graph> {
    g.require_connected()?;
    let n = g.n();
    if v == 0 || v > n {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    let mut side = vec![0u8; n + 1];
    for (s, class) in [(1u8, &part.v1), (2u8, &part.v2)] {
        for &i in class {
            if i == 0 || i > n {
                return Err(Error::VertexOutOfRange { vertex: i, n });
            }
            if i == v {
                return Err(Error::InvalidBipartition(format!("vertex {v} itself is in a class")));
            }
            if side[i] != 0 {
                return Err(Error::InvalidBipartition(format!("vertex {i} listed twice")));
            }
            side[i] = s;
        }
    }
    if let Some(i) = g.vertices().find(|&i| i != v && side[i] == 0) {
        return Err(Error::InvalidBipartition(format!("vertex {i} is in neither class")));
    }
    let mut edges = Vec::with_capacity(g.edge_count());
    for &(i, j) in g.edges() {
        if i == v || j == v {
            let other = if i == v { j } else { i };
            if side[other] == 1 {
                edges.push((i, j));
            } else {
                edges.push((other, n + 1));
            }
        } else if side[i] == side[j] {
            return Err(Error::InvalidBipartition(format!("edge {{{i}, {j}}} inside one class")));
        } else {
            edges.push((i, j));
        }
    }
    edges.sort_unstable();
    Ok(Graph::from_sorted(n + 1, edges))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bp(v1: &[usize], v2: &[usize]) -> Bipartition {
        Bipartition { v1: v1.to_vec(), v2: v2.to_vec() }
    }

    fn bowtie() -> Graph {
        Graph::new(5, [(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)]).unwrap()
    }

    #[test]
    fn bipartitions() {
        assert_eq!(bipartition(&Graph::cycle(4)).unwrap(), Bipartiteness::Bipartite(bp(&[1, 3], &[2, 4])));
        assert_eq!(bipartition(&Graph::cycle(6)).unwrap(), Bipartiteness::Bipartite(bp(&[1, 3, 5], &[2, 4, 6])));
        let Bipartiteness::OddCycle(c) = bipartition(&Graph::complete(3)).unwrap() else {
            panic!("K3 is not bipartite");
        };
        assert_eq!(c.vertices(), &[1, 2, 3]);
    }

    #[test]
    fn odd_cycle_witness_is_a_cycle_of_the_graph() {
        let g = Graph::new(7, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 3)]).unwrap();
        let Bipartiteness::OddCycle(c) = bipartition(&g).unwrap() else { panic!() };
        assert!(c.is_odd());
        assert_eq!(Cycle::new(&g, c.vertices().to_vec()).unwrap(), c);
    }

    #[test]
    fn complete_bipartite_detection() {
        assert!(is_complete_bipartite(&Graph::cycle(4)).unwrap());
        assert!(!is_complete_bipartite(&Graph::cycle(6)).unwrap());
        assert!(is_complete_bipartite(&Graph::complete_bipartite(1, 3)).unwrap());
        assert!(is_complete_bipartite(&Graph::new(1, []).unwrap()).unwrap());
        assert!(is_complete_bipartite(&Graph::path(2)).unwrap());
        assert!(!is_complete_bipartite(&Graph::complete(3)).unwrap());
    }

    #[test]
    fn witnesses() {
        assert_eq!(almost_bipartite_witnesses(&Graph::complete(3)).unwrap(), vec![1, 2, 3]);
        assert_eq!(almost_bipartite_witnesses(&bowtie()).unwrap(), vec![3]);
        assert_eq!(almost_bipartite_witnesses(&Graph::cycle(4)).unwrap(), vec![1, 2, 3, 4]);
        assert!(almost_bipartite_witnesses(&Graph::complete(4)).unwrap().is_empty());
    }

    #[test]
    fn split_of_triangle_is_a_path() {
        let s = split_construction(&Graph::complete(3), 3, &bp(&[1], &[2])).unwrap();
        assert_eq!(s, Graph::new(4, [(1, 2), (1, 3), (2, 4)]).unwrap());
    }

    #[test]
    fn split_of_pentagon() {
        let s = split_construction(&Graph::cycle(5), 5, &bp(&[1, 3], &[2, 4])).unwrap();
        assert_eq!(s, Graph::new(6, [(1, 2), (2, 3), (3, 4), (1, 5), (4, 6)]).unwrap());
    }

    #[test]
    fn split_without_v2_neighbors_adds_isolated_vertex() {
        // C4 at v = 1: neighbors 2 and 4 are both in V1 of C4 - 1.
        let g = Graph::cycle(4);
        let part = bipartition_without(&g, 1).unwrap();
        assert_eq!(part, bp(&[2, 4], &[3]));
        let s = split_construction(&g, 1, &part).unwrap();
        assert_eq!(s.n(), 5);
        assert_eq!(s.edges(), g.edges());
        assert_eq!(s.degree(5), 0);
    }

    #[test]
    fn split_rejects_invalid_bipartitions() {
        let g = Graph::cycle(5);
        assert!(split_construction(&g, 5, &bp(&[1, 2], &[3, 4])).is_err());
        assert!(split_construction(&g, 5, &bp(&[1, 3], &[2])).is_err());
        assert!(split_construction(&g, 5, &bp(&[1, 3, 5], &[2, 4])).is_err());
        assert!(split_construction(&g, 5, &bp(&[1, 3], &[2, 4, 4])).is_err());
    }
}

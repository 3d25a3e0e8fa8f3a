//! Block (2-connected component) and cut-vertex decomposition.

use alloc::vec;
use alloc::vec::Vec;

use serde::Serialize;

use crate::error::Result;
use crate::graph::{Edge, Graph};

/// A maximal 2-connected subgraph, or a single bridge edge, in the labels of
/// the graph it was cut from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Block {
    pub vertices: Vec<usize>,
    pub edges: Vec<Edge>,
}

impl Block {
    /// The block as a standalone graph on `1..=|vertices|` (order-preserving relabel).
    pub fn to_graph(&self) -> Graph {
        let label = |v: usize| self.vertices.binary_search(&v).expect("endpoint in block") + 1;
        let mut edges: Vec<Edge> = self.edges.iter().map(|&(i, j)| (label(i), label(j))).collect();
        edges.sort_unstable();
        Graph::from_sorted(self.vertices.len(), edges)
    }

    /// Maps a vertex of [`Block::to_graph`] back to the original label.
    pub fn original_label(&self, local: usize) -> usize {
        self.vertices[local - 1]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
    pub cut_vertices: Vec<usize>,
}

/// Blocks of a connected graph, sorted by smallest contained vertex.
pub fn blocks(g: &Graph) -> Result<BlockDecomposition> {
    g.require_connected()?;
    Ok(blocks_any(g))
}

/// Blocks of every component; isolated vertices contribute nothing.
pub(crate) fn blocks_any(g: &Graph) -> BlockDecomposition {
    let n = g.n();
    let mut disc = vec![0usize; n + 1];
    let mut low = vec![0usize; n + 1];
    let mut parent = vec![0usize; n + 1];
    let mut time = 0;
    let mut edge_stack: Vec<Edge> = Vec::new();
    let mut blocks = Vec::new();

    for root in g.vertices() {
        if disc[root] != 0 {
            continue;
        }
        time += 1;
        disc[root] = time;
        low[root] = time;
        // (vertex, next neighbor index)
        let mut frames = vec![(root, 0usize)];
        while let Some(frame) = frames.last_mut() {
            let v = frame.0;
            if let Some(&w) = g.neighbors(v).get(frame.1) {
                frame.1 += 1;
                if disc[w] == 0 {
                    parent[w] = v;
                    time += 1;
                    disc[w] = time;
                    low[w] = time;
                    edge_stack.push((v, w));
                    frames.push((w, 0));
                } else if w != parent[v] && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
                continue;
            }
            frames.pop();
            if v == root {
                continue;
            }
            let p = parent[v];
            low[p] = low[p].min(low[v]);
            if low[v] >= disc[p] {
                let mut edges = Vec::new();
                while let Some(e) = edge_stack.pop() {
                    edges.push((e.0.min(e.1), e.0.max(e.1)));
                    if e == (p, v) {
                        break;
                    }
                }
                blocks.push(make_block(edges));
            }
        }
    }

    blocks.sort_by(|a: &Block, b: &Block| a.vertices.cmp(&b.vertices));
    let mut count = vec![0usize; n + 1];
    for b in &blocks {
        for &v in &b.vertices {
            count[v] += 1;
        }
    }
    let cut_vertices = g.vertices().filter(|&v| count[v] > 1).collect();
    BlockDecomposition { blocks, cut_vertices }
}

fn make_block(mut edges: Vec<Edge>) -> Block {
    edges.sort_unstable();
    let mut vertices: Vec<usize> = edges.iter().flat_map(|&(i, j)| [i, j]).collect();
    vertices.sort_unstable();
    vertices.dedup();
    Block { vertices, edges }
}

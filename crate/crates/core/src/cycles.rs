//! Exhaustive cycle enumeration and the cycle-based necessary conditions:
//! missing even-chords and odd cycles meeting in at most one vertex.

use alloc::vec;
use alloc::vec::Vec;

use serde::Serialize;

use crate::graph::{Cycle, Edge, Graph};

/// All cycles of length `3..=max_len`, each once in canonical form, sorted.
///
/// Exponential in general; callers cap `n`.
pub fn enumerate_cycles(g: &Graph, max_len: usize) -> Vec<Cycle> {
    let mut out = Vec::new();
    if max_len < 3 {
        return out;
    }
    let mut on_path = vec![false; g.n() + 1];
    for start in g.vertices() {
        let mut path = vec![start];
        on_path[start] = true;
        extend(g, start, max_len, &mut path, &mut on_path, &mut out);
        on_path[start] = false;
    }
    out.sort();
    out
}

// Paths from `start` through vertices larger than `start`; a cycle closes when
// the last vertex is adjacent to `start`, and is kept only if `path[1] < last`
// so each cycle is produced in exactly one orientation.
fn extend(g: &Graph, start: usize, max_len: usize, path: &mut Vec<usize>, on_path: &mut [bool], out: &mut Vec<Cycle>) {
    let last = *path.last().expect("path is nonempty");
    if path.len() >= 3 && path[1] < last && g.has_edge(last, start) {
        out.push(Cycle::canonical(path.clone()));
    }
    if path.len() == max_len {
        return;
    }
    for &w in g.neighbors(last) {
        if w > start && !on_path[w] {
            on_path[w] = true;
            path.push(w);
            extend(g, start, max_len, path, on_path, out);
            path.pop();
            on_path[w] = false;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MissingEvenChord {
    pub cycle: Cycle,
    pub chord: Edge,
}

/// For every even cycle of length `<= max_len`, each position pair `i < j`
/// with `j - i` odd whose vertices are not joined by a cycle edge nor by an
/// edge of `g`.
pub fn even_chord_violations(g: &Graph, max_len: usize) -> Vec<MissingEvenChord> {
    let mut out = Vec::new();
    for cycle in enumerate_cycles(g, max_len).into_iter().filter(|c| !c.is_odd()) {
        let vs = cycle.vertices();
        let q = vs.len();
        for i in 0..q {
            for j in (i + 3..q).step_by(2) {
                if j - i == q - 1 {
                    continue;
                }
                let (a, b) = (vs[i], vs[j]);
                if !g.has_edge(a, b) {
                    out.push(MissingEvenChord { cycle: cycle.clone(), chord: (a.min(b), a.max(b)) });
                }
            }
        }
    }
    out
}

/// Unordered pairs of odd cycles (length `<= max_len`) sharing at most one vertex.
pub fn odd_cycle_intersection_violations(g: &Graph, max_len: usize) -> Vec<(Cycle, Cycle)> {
    let odd: Vec<Cycle> = enumerate_cycles(g, max_len).into_iter().filter(Cycle::is_odd).collect();
    let mut out = Vec::new();
    for (k, a) in odd.iter().enumerate() {
        for b in &odd[k + 1..] {
            if a.common_vertices(b) <= 1 {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out
}

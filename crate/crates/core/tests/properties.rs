mod common;

use std::collections::BTreeSet;

use common::*;
use koszul_core::bipartite::*;
use koszul_core::blocks::blocks;
use koszul_core::canon::{canonical_form, connected_graphs, is_isomorphic};
use koszul_core::classifier::{check_necessary_conditions, Case};
use koszul_core::cycles::even_chord_violations;
use koszul_core::semigroup::{edge_ring_basis, hilbert_function, strongly_koszul_pairwise};
use koszul_core::{classify, Cycle, Graph};
use proptest::prelude::*;

/// Connected graph on `lo..=hi` vertices: a random spanning tree plus random extra edges.
fn connected_graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi)
        .prop_flat_map(|n| {
            let parents: Vec<_> = (2..=n).map(|v| 1..v).collect();
            (Just(n), parents, proptest::collection::vec(any::<bool>(), n * (n - 1) / 2))
        })
        .prop_map(|(n, parents, extra)| {
            let mut edges: Vec<(usize, usize)> = parents.iter().enumerate().map(|(k, &p)| (p, k + 2)).collect();
            let mut k = 0;
            for j in 2..=n {
                for i in 1..j {
                    if extra[k] && !edges.contains(&(i, j)) {
                        edges.push((i, j));
                    }
                    k += 1;
                }
            }
            Graph::new(n, edges).unwrap()
        })
}

fn with_permutation(lo: usize, hi: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    connected_graph(lo, hi).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #[test]
    fn canonical_form_is_a_class_invariant((g, perm) in with_permutation(1, 7)) {
        let c = canonical_form(&g).unwrap();
        prop_assert_eq!(&canonical_form(&g.relabel(&perm).unwrap()).unwrap(), &c);
        prop_assert_eq!(&canonical_form(&c).unwrap(), &c);
        prop_assert!(is_isomorphic(&g, &c).unwrap());
        prop_assert_eq!(c.edge_count(), g.edge_count());
    }

    #[test]
    fn classification_is_a_class_invariant((g, perm) in with_permutation(1, 7)) {
        let a = classify(&g).unwrap();
        let b = classify(&g.relabel(&perm).unwrap()).unwrap();
        prop_assert_eq!(a.strongly_koszul, b.strongly_koszul);
        prop_assert_eq!(a.case, b.case);
        prop_assert_eq!(a.rejection_reason, b.rejection_reason);
        prop_assert_eq!(a.trivial, a.strongly_koszul && a.case != Case::OneBlockK4);
    }

    #[test]
    fn accepted_graphs_meet_every_necessary_condition(g in connected_graph(1, 7)) {
        let report = classify(&g).unwrap();
        let violations = check_necessary_conditions(&g).unwrap();
        if report.strongly_koszul {
            prop_assert!(violations.is_empty(), "{:?}", violations);
            prop_assert!(report.witness.violation.is_none());
        } else if let Some(v) = &report.witness.violation {
            prop_assert!(violations.contains(v));
        }
    }

    #[test]
    fn bipartition_is_sound(g in connected_graph(1, 8)) {
        match bipartition(&g).unwrap() {
            Bipartiteness::Bipartite(part) => {
                let v1: BTreeSet<_> = part.v1.iter().copied().collect();
                prop_assert_eq!(part.v1.len() + part.v2.len(), g.n());
                for &(i, j) in g.edges() {
                    prop_assert_ne!(v1.contains(&i), v1.contains(&j));
                }
            }
            Bipartiteness::OddCycle(c) => {
                prop_assert!(c.is_odd());
                prop_assert!(Cycle::new(&g, c.vertices().to_vec()).is_ok());
            }
        }
    }

    #[test]
    fn blocks_partition_the_edges(g in connected_graph(1, 8)) {
        let d = blocks(&g).unwrap();
        let mut seen = BTreeSet::new();
        let mut count = vec![0usize; g.n() + 1];
        for b in &d.blocks {
            for e in &b.edges {
                prop_assert!(seen.insert(*e), "edge {:?} in two blocks", e);
            }
            for &v in &b.vertices {
                count[v] += 1;
            }
            let local = b.to_graph();
            // a block is a bridge or has no cut vertex of its own
            if local.n() > 2 {
                for v in local.vertices() {
                    let rest: Vec<usize> = local.vertices().filter(|&u| u != v).collect();
                    prop_assert!(local.induced_subgraph(&rest).unwrap().is_connected());
                }
            }
        }
        prop_assert_eq!(seen.len(), g.edge_count());
        let cuts: Vec<usize> = g.vertices().filter(|&v| count[v] >= 2).collect();
        prop_assert_eq!(&d.cut_vertices, &cuts);
    }

    #[test]
    fn split_is_bipartite_and_contracts_back(g in connected_graph(2, 8)) {
        let n = g.n();
        for v in almost_bipartite_witnesses(&g).unwrap() {
            let part = bipartition_without(&g, v).unwrap();
            for p in [part.clone(), part.swapped()] {
                let s = split_construction(&g, v, &p).unwrap();
                prop_assert_eq!(s.n(), n + 1);
                let mut side_a: BTreeSet<usize> = p.v1.iter().copied().collect();
                side_a.insert(n + 1);
                let mut contracted = BTreeSet::new();
                for &(i, j) in s.edges() {
                    prop_assert_ne!(side_a.contains(&i), side_a.contains(&j));
                    let m = |x: usize| if x == n + 1 { v } else { x };
                    contracted.insert((m(i).min(m(j)), m(i).max(m(j))));
                }
                prop_assert_eq!(contracted.into_iter().collect::<Vec<_>>(), g.edges().to_vec());
            }
        }
    }

    #[test]
    fn fingerprints_ignore_coordinate_order((g, perm) in with_permutation(2, 5)) {
        let a = edge_ring_basis(&g).unwrap();
        let b = edge_ring_basis(&g.relabel(&perm).unwrap()).unwrap();
        prop_assert_eq!(hilbert_function(&a, 3), hilbert_function(&b, 3));
        prop_assert_eq!(strongly_koszul_pairwise(&a, 3).passed(), strongly_koszul_pairwise(&b, 3).passed());
        let shuffled = a.permute_coordinates(&perm.iter().map(|p| p - 1).collect::<Vec<_>>()).unwrap();
        prop_assert_eq!(hilbert_function(&a, 3), hilbert_function(&shuffled, 3));
    }
}

#[test]
fn chordless_even_cycles_miss_k_times_k_minus_two_chords() {
    for k in 2..=5 {
        let g = Graph::cycle(2 * k);
        assert_eq!(even_chord_violations(&g, 2 * k).len(), k * (k - 2), "C{}", 2 * k);
    }
}

#[test]
fn class_counts_match_labeled_enumeration() {
    for n in 1..=5 {
        let classes: BTreeSet<Vec<(usize, usize)>> = labeled_graphs(n)
            .filter(Graph::is_connected)
            .map(|g| canonical_form(&g).unwrap().edges().to_vec())
            .collect();
        let reps = connected_graphs(n).unwrap();
        assert_eq!(reps.len(), classes.len(), "n = {n}");
        let got: BTreeSet<_> = reps.iter().map(|g| g.edges().to_vec()).collect();
        assert_eq!(got, classes);
    }
    let counts: Vec<usize> = (1..=7).map(|n| connected_graphs(n).unwrap().len()).collect();
    assert_eq!(counts, [1, 1, 2, 6, 21, 112, 853]);
}

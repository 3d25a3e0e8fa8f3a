use koszul_core::Graph;
use koszul_lab::graph6;
use koszul_lab::input::{parse_graph, Format};
use proptest::prelude::*;

fn any_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2)
            .prop_map(move |bits| Graph::from_adjacency_bits(n, &bits).unwrap())
    })
}

fn edge_list(g: &Graph) -> String {
    g.edges().iter().map(|(a, b)| format!("{a} {b}\n")).collect()
}

proptest! {
    #[test]
    fn graph6_round_trips(g in any_graph(62)) {
        let s = graph6::encode(&g).unwrap();
        prop_assert!(graph6::looks_like_graph6(&s));
        prop_assert_eq!(graph6::parse(&s).unwrap(), g);
    }

    #[test]
    fn parser_never_panics(bytes in proptest::collection::vec(any::<u8>(), 0..40)) {
        let s = String::from_utf8_lossy(&bytes);
        let _ = graph6::parse(&s);
        let _ = parse_graph(&s, Format::Auto);
    }

    #[test]
    fn parsed_strings_reencode_identically(s in "[?-~]{1,12}") {
        if let Ok(g) = graph6::parse(&s) {
            prop_assert_eq!(graph6::encode(&g).unwrap(), s);
        }
    }

    #[test]
    fn all_formats_agree(g in any_graph(12)) {
        let json = serde_json::to_string(&g).unwrap();
        prop_assert_eq!(&parse_graph(&json, Format::Auto).unwrap(), &g);
        prop_assert_eq!(&parse_graph(&graph6::encode(&g).unwrap(), Format::Auto).unwrap(), &g);
        // an edge list cannot express trailing isolated vertices
        let top = g.edges().iter().map(|e| e.1).max();
        if top == Some(g.n()) {
            prop_assert_eq!(&parse_graph(&edge_list(&g), Format::Auto).unwrap(), &g);
        }
    }
}

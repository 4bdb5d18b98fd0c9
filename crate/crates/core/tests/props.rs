//! Property-based invariants over randomly shaped inputs.

use proptest::prelude::*;
use samplebox::hypergraph::{
    find_pattern, parse, serialize, Hypergraph, MatchMode, Pattern, VertexSet,
};
use samplebox::scalar::Scalar;

/// Arbitrary simple undirected graph on up to 9 vertices, encoded as
/// a pair-presence mask.
fn arb_graph() -> impl Strategy<Value = Hypergraph> {
    (1usize..=9, proptest::collection::vec(any::<bool>(), 36)).prop_map(|(n, mask)| {
        let mut edges = Vec::new();
        let mut idx = 0;
        for i in 0..n {
            for j in (i + 1)..n {
                if mask[idx % mask.len()] {
                    edges.push(vec![i, j]);
                }
                idx += 1;
            }
        }
        Hypergraph::new(n, edges).unwrap()
    })
}

/// Arbitrary 3-uniform hypergraph on up to 8 vertices.
fn arb_hypergraph() -> impl Strategy<Value = Hypergraph> {
    (3usize..=8, proptest::collection::vec(any::<bool>(), 56)).prop_map(|(n, mask)| {
        let mut edges = Vec::new();
        let mut subset = vec![0usize, 1, 2];
        let mut idx = 0;
        loop {
            if subset.iter().all(|&v| v < n) && mask[idx % mask.len()] {
                edges.push(subset.clone());
            }
            idx += 1;
            if !samplebox::hypergraph::next_combination(&mut subset, 8) {
                break;
            }
        }
        Hypergraph::new(n, edges).unwrap()
    })
}

proptest! {
    #[test]
    fn parse_serialize_roundtrip(g in arb_graph()) {
        let text = serialize(&g);
        prop_assert_eq!(parse(&text).unwrap(), g);
    }

    #[test]
    fn parse_serialize_roundtrip_hyper(g in arb_hypergraph()) {
        let text = serialize(&g);
        prop_assert_eq!(parse(&text).unwrap(), g);
    }

    #[test]
    fn delete_is_induced_complement(g in arb_graph(), picks in proptest::collection::vec(any::<u8>(), 9)) {
        let s: VertexSet = (0..g.n()).filter(|&v| picks[v] % 3 == 0).collect();
        let (d, mapping) = g.delete(&s).unwrap();
        prop_assert_eq!(&d, &g.induced(&s.complement(g.n())).unwrap());
        // The mapping is a bijection onto the survivors.
        let mapped: Vec<usize> = mapping.iter().flatten().copied().collect();
        prop_assert_eq!(mapped.len(), d.n());
        for v in s.iter() {
            prop_assert!(mapping[v].is_none());
        }
    }

    #[test]
    fn pattern_witness_self_consistent(g in arb_graph()) {
        // A subgraph witness restricted to itself must still match,
        // and an induced witness implies a subgraph witness.
        let p_sub = Pattern::path(3);
        if let Some(z) = find_pattern(&g, &p_sub).unwrap() {
            let within = g.induced(&z).unwrap();
            prop_assert!(find_pattern(&within, &p_sub).unwrap().is_some());
        }
        let p_ind = Pattern::new(
            samplebox::hypergraph::fixtures::path(3),
            MatchMode::Induced,
        )
        .unwrap();
        if find_pattern(&g, &p_ind).unwrap().is_some() {
            prop_assert!(find_pattern(&g, &p_sub).unwrap().is_some());
        }
    }

    #[test]
    fn scalar_floor_mul_is_exact(num in 1i128..2000, den in 1i128..2000, t in 0u64..500) {
        let s = Scalar::from_ratio(num, den).unwrap();
        let expected = (num * t as i128).div_euclid(den);
        prop_assert_eq!(s.floor_mul(t), expected);
    }

    #[test]
    fn scalar_parse_display_roundtrip(num in -1000i128..1000, den in 1i128..1000) {
        let s = Scalar::from_ratio(num, den).unwrap();
        let back = Scalar::parse(&s.to_string()).unwrap();
        prop_assert_eq!(back, s);
    }
}

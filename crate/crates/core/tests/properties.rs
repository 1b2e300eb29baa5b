//! Property tests over randomly drawn dimensions and coordinates.

use pegasus_topo_core::{pegasus, Dims, Edge, EdgeClass, QubitCoord};
use proptest::prelude::*;

fn arb_dims() -> impl Strategy<Value = Dims> {
    (1u32..=6, 1u32..=6, prop_oneof![Just(1u32), Just(3u32)])
        .prop_map(|(x, y, z)| Dims::new(x, y, z).unwrap())
}

fn arb_pegasus_dims() -> impl Strategy<Value = Dims> {
    (1u32..=5, 1u32..=5).prop_map(|(x, y)| Dims::pegasus(x, y).unwrap())
}

fn arb_qubit(dims: Dims) -> impl Strategy<Value = QubitCoord> {
    (0..dims.qubit_count()).prop_map(move |idx| QubitCoord::from_linear(idx, dims).unwrap())
}

proptest! {
    #[test]
    fn linear_index_round_trips(dims in arb_dims(), idx in 0usize..4096) {
        let idx = idx % dims.qubit_count();
        let q = QubitCoord::from_linear(idx, dims).unwrap();
        prop_assert!(q.is_valid(dims));
        prop_assert_eq!(q.linear_index(dims).unwrap(), idx);
    }

    #[test]
    fn coordinate_order_matches_index_order(dims in arb_dims(), a in 0usize..4096, b in 0usize..4096) {
        let a = a % dims.qubit_count();
        let b = b % dims.qubit_count();
        let qa = QubitCoord::from_linear(a, dims).unwrap();
        let qb = QubitCoord::from_linear(b, dims).unwrap();
        prop_assert_eq!(a.cmp(&b), qa.cmp(&qb));
    }

    #[test]
    fn edges_are_order_insensitive(dims in arb_dims(), a in 0usize..4096, b in 0usize..4096) {
        let a = a % dims.qubit_count();
        let b = b % dims.qubit_count();
        prop_assume!(a != b);
        let qa = QubitCoord::from_linear(a, dims).unwrap();
        let qb = QubitCoord::from_linear(b, dims).unwrap();
        let e1 = Edge::new(qa, qb, EdgeClass::ChimeraIntraCell);
        let e2 = Edge::new(qb, qa, EdgeClass::ChimeraIntraCell);
        prop_assert_eq!(e1, e2);
        prop_assert!(e1.a() < e1.b());
    }

    #[test]
    fn membership_is_symmetric(dims in arb_pegasus_dims().prop_flat_map(|d| {
        (Just(d), arb_qubit(d), arb_qubit(d))
    })) {
        let (dims, a, b) = dims;
        prop_assert_eq!(pegasus::has_edge(a, b, dims), pegasus::has_edge(b, a, dims));
    }

    #[test]
    fn k_freedom_of_the_inter_layer_rule(args in arb_pegasus_dims().prop_flat_map(|d| {
        (Just(d), arb_qubit(d), arb_qubit(d))
    })) {
        let (dims, s, t) = args;
        let flip_k = |mut q: QubitCoord| { q.k = 1 - q.k; q };
        let class = pegasus::has_edge(s, t, dims);
        if matches!(class, Some(EdgeClass::PegasusInterLayer(_))) {
            // The source's k never matters; the target's k' is free.
            prop_assert_eq!(pegasus::has_edge(flip_k(s), t, dims), class);
            prop_assert_eq!(pegasus::has_edge(s, flip_k(t), dims), class);
        }
    }

    #[test]
    fn generation_is_deterministic(dims in arb_pegasus_dims()) {
        let g1 = pegasus::pegasus_graph(dims).unwrap();
        let g2 = pegasus::pegasus_graph(dims).unwrap();
        prop_assert_eq!(g1, g2);
    }
}

use strong_edge_bench::{oracle_inputs, scaling_inputs};
use strong_edge_core::graph::is_two_degenerate;
use strong_edge_core::{exact_chi_s, Budget};

#[test]
fn scaling_inputs_are_valid() {
    for (n, g) in scaling_inputs() {
        assert_eq!(g.vertex_count(), n);
        assert!(is_two_degenerate(&g));
        assert!(g.max_degree() <= 8);
    }
}

#[test]
fn oracle_inputs_finish_within_budget() {
    for (name, g) in oracle_inputs() {
        assert!(
            !exact_chi_s(&g, Budget::default()).budget_exhausted,
            "{name}"
        );
    }
}

//! Fixed inputs shared by the benchmarks.

use strong_edge_core::{generators, Graph};

/// Random 2-degenerate graphs of growing size, all with degree cap 8.
pub fn scaling_inputs() -> Vec<(usize, Graph)> {
    [1_000, 10_000, 100_000]
        .into_iter()
        .map(|n| (n, generators::random_two_degenerate(n, 8, 7).unwrap()))
        .collect()
}

/// Small graphs the exact oracle finishes on quickly.
pub fn oracle_inputs() -> Vec<(String, Graph)> {
    let mut out = vec![
        ("cycle(7)".to_string(), generators::cycle(7).unwrap()),
        (
            "triangle_with_leaves(4)".to_string(),
            generators::triangle_with_leaves(4).unwrap(),
        ),
    ];
    out.push((
        "random_two_degenerate(10,4)".to_string(),
        generators::random_two_degenerate(10, 4, 3).unwrap(),
    ));
    out
}

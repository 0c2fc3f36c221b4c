//! Strong edge-coloring of 2-degenerate graphs with at most `8Δ − 4` colors.
//!
//! The crate is organized around one pipeline:
//!
//! * [`graph`]: simple undirected graphs, degeneracy, distance-one edge sets;
//! * [`reduction`]: the peeling schedule built from reducible vertices;
//! * [`coloring`]: the dual-palette engine that replays the schedule;
//! * [`verify`]: an independent checker for everything the engine claims;
//! * [`oracle`]: exact strong chromatic index for small graphs;
//! * [`generators`]: seeded test families;
//! * [`format`]: edge-list and coloring JSON formats.
//!
//! ```
//! use strong_edge_core::{generators, strong_color, verify_all, ColorOptions};
//!
//! let g = generators::triangle_with_leaves(4).unwrap();
//! let out = strong_color(&g, ColorOptions::default()).unwrap();
//! assert!(verify_all(&g, &out.coloring, 4).unwrap().ok);
//! assert!(out.stats.colors_used <= 8 * 4 - 4);
//! ```

pub mod coloring;
pub mod format;
pub mod generators;
pub mod graph;
pub mod oracle;
pub mod reduction;
pub mod verify;

pub use coloring::{
    strong_color, ColorOptions, ColoringError, ColoringOutcome, EdgeColoring, PaletteColor,
    PaletteHalf, RunStats,
};
pub use graph::{EdgeId, Graph, GraphError, GraphView};
pub use oracle::{exact_chi_s, Budget, OracleResult};
pub use reduction::{ReductionSchedule, ReductionStep};
pub use verify::{verify_all, Verdict, Violation, ViolationKind};

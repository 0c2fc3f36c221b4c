//! The dual-palette strong edge-coloring engine.
//!
//! Colors come from `B = {1, …, 4Δ−2}` and its primed copy `B′`. The engine
//! colors the residual of a reduction schedule from `B`, then undoes the
//! reductions one at a time while keeping three properties:
//!
//! 1. every pendant edge is colored from `B`;
//! 2. a pendant edge colored `c ∈ B` has no edge colored `c'` within distance one;
//! 3. no vertex sees both `c` and `c'`.

mod assignment;
mod engine;
mod palette;

pub use assignment::EdgeColoring;
pub use engine::{
    color_base_case, extend_pendant, extend_spokes, prime_pendant, strong_color, ActiveSubgraph,
    ColorOptions, ColoringError, ColoringOutcome, PendantExtension, RunStats, SpokeExtension,
};
pub use palette::{half_size, PaletteColor, PaletteHalf};

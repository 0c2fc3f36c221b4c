use std::fmt;

use serde::{Deserialize, Serialize};

/// Which half of the dual palette a color belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum PaletteHalf {
    #[serde(rename = "B")]
    Unprimed,
    #[serde(rename = "B'")]
    Primed,
}

/// A color `k ∈ B` or its partner `k' ∈ B′`.
///
/// Indices start at 1. The upper bound `4Δ − 2` depends on the palette
/// parameter and is checked by the verifier, not here.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PaletteColor {
    #[serde(rename = "set")]
    half: PaletteHalf,
    index: u32,
}

impl PaletteColor {
    pub fn new(half: PaletteHalf, index: u32) -> Option<Self> {
        (index >= 1).then_some(PaletteColor { half, index })
    }

    /// Unprimed color `k`. Panics on `k == 0`.
    pub fn b(index: u32) -> Self {
        Self::new(PaletteHalf::Unprimed, index).expect("palette indices start at 1")
    }

    /// Primed color `k'`. Panics on `k == 0`.
    pub fn b_prime(index: u32) -> Self {
        Self::new(PaletteHalf::Primed, index).expect("palette indices start at 1")
    }

    pub fn half(self) -> PaletteHalf {
        self.half
    }

    pub fn index(self) -> u32 {
        self.index
    }

    pub fn is_primed(self) -> bool {
        self.half == PaletteHalf::Primed
    }

    pub fn prime(self) -> Self {
        let half = match self.half {
            PaletteHalf::Unprimed => PaletteHalf::Primed,
            PaletteHalf::Primed => PaletteHalf::Unprimed,
        };
        PaletteColor { half, ..self }
    }
}

impl fmt::Display for PaletteColor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.half {
            PaletteHalf::Unprimed => write!(f, "{}", self.index),
            PaletteHalf::Primed => write!(f, "{}'", self.index),
        }
    }
}

/// `4Δ − 2`, the size of each palette half. Zero for `Δ == 0`.
pub fn half_size(delta_param: usize) -> usize {
    (4 * delta_param).saturating_sub(2)
}

use std::collections::BTreeSet;

use super::palette::{half_size, PaletteColor};
use crate::graph::{EdgeId, Graph};

/// Partial or total map from edges to palette colors.
///
/// Alongside the per-edge assignment it keeps, for every vertex, the colors of
/// its colored incident edges (with multiplicity, so overwriting one of two
/// equal colors leaves the other in place).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    endpoints: Vec<(usize, usize)>,
    assignment: Vec<Option<PaletteColor>>,
    incident: Vec<Vec<(PaletteColor, u32)>>,
    delta_param: usize,
}

impl EdgeColoring {
    /// Empty coloring of `g` for palette parameter `delta_param`.
    pub fn new(g: &Graph, delta_param: usize) -> Self {
        EdgeColoring {
            endpoints: g.edges().to_vec(),
            assignment: vec![None; g.edge_count()],
            incident: vec![Vec::new(); g.vertex_count()],
            delta_param,
        }
    }

    /// Total coloring from a per-edge color list aligned with `g`'s edge ids.
    pub fn from_colors(g: &Graph, delta_param: usize, colors: &[PaletteColor]) -> Self {
        assert_eq!(colors.len(), g.edge_count(), "one color per edge");
        let mut coloring = Self::new(g, delta_param);
        for (e, &c) in colors.iter().enumerate() {
            coloring.set(e, c);
        }
        coloring
    }

    pub fn delta_param(&self) -> usize {
        self.delta_param
    }

    /// `4Δ − 2`.
    pub fn palette_half_size(&self) -> usize {
        half_size(self.delta_param)
    }

    pub fn edge_count(&self) -> usize {
        self.assignment.len()
    }

    pub fn get(&self, e: EdgeId) -> Option<PaletteColor> {
        self.assignment[e]
    }

    pub fn assignment(&self) -> &[Option<PaletteColor>] {
        &self.assignment
    }

    /// Assigns or overwrites the color of `e`, returning the previous one.
    pub fn set(&mut self, e: EdgeId, color: PaletteColor) -> Option<PaletteColor> {
        let old = self.clear(e);
        let (a, b) = self.endpoints[e];
        for x in [a, b] {
            let slot = &mut self.incident[x];
            match slot.iter_mut().find(|(c, _)| *c == color) {
                Some((_, count)) => *count += 1,
                None => slot.push((color, 1)),
            }
        }
        self.assignment[e] = Some(color);
        old
    }

    pub fn clear(&mut self, e: EdgeId) -> Option<PaletteColor> {
        let old = self.assignment[e].take()?;
        let (a, b) = self.endpoints[e];
        for x in [a, b] {
            let slot = &mut self.incident[x];
            let i = slot
                .iter()
                .position(|(c, _)| *c == old)
                .expect("incident index tracks every colored edge");
            slot[i].1 -= 1;
            if slot[i].1 == 0 {
                slot.swap_remove(i);
            }
        }
        Some(old)
    }

    /// Distinct colors on colored edges at `v` (the set `C_f(v)`), unordered.
    pub fn incident_colors(&self, v: usize) -> impl Iterator<Item = PaletteColor> + '_ {
        self.incident[v].iter().map(|&(c, _)| c)
    }

    pub fn is_total(&self) -> bool {
        self.assignment.iter().all(Option::is_some)
    }

    pub fn colored_count(&self) -> usize {
        self.assignment.iter().filter(|c| c.is_some()).count()
    }

    pub fn distinct_colors(&self) -> BTreeSet<PaletteColor> {
        self.assignment.iter().flatten().copied().collect()
    }

    pub fn colors_used(&self) -> usize {
        self.distinct_colors().len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sorted_incident(c: &EdgeColoring, v: usize) -> Vec<PaletteColor> {
        let mut out: Vec<_> = c.incident_colors(v).collect();
        out.sort();
        out
    }

    #[test]
    fn overwrite_updates_incident_sets() {
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let mut c = EdgeColoring::new(&g, 2);
        c.set(0, PaletteColor::b(1));
        c.set(1, PaletteColor::b(2));
        assert_eq!(
            sorted_incident(&c, 1),
            vec![PaletteColor::b(1), PaletteColor::b(2)]
        );
        assert_eq!(c.set(0, PaletteColor::b_prime(1)), Some(PaletteColor::b(1)));
        assert_eq!(sorted_incident(&c, 0), vec![PaletteColor::b_prime(1)]);
        assert_eq!(
            sorted_incident(&c, 1),
            vec![PaletteColor::b(2), PaletteColor::b_prime(1)]
        );
        assert!(c.is_total());
        assert_eq!(c.colors_used(), 2);
    }

    #[test]
    fn repeated_colors_are_counted() {
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let mut c = EdgeColoring::new(&g, 2);
        c.set(0, PaletteColor::b(1));
        c.set(1, PaletteColor::b(1));
        c.clear(0);
        assert_eq!(sorted_incident(&c, 1), vec![PaletteColor::b(1)]);
        assert!(sorted_incident(&c, 0).is_empty());
    }

    proptest! {
        // incident_colors(v) must equal the colors of colored edges at v
        // after any sequence of assignments and clears
        #[test]
        fn incident_index_matches_rescan(
            ops in proptest::collection::vec((0usize..6, 0u32..4, any::<bool>()), 0..60)
        ) {
            let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)]).unwrap();
            let mut c = EdgeColoring::new(&g, 2);
            for (e, k, primed) in ops {
                if k == 0 {
                    c.clear(e);
                } else if primed {
                    c.set(e, PaletteColor::b_prime(k));
                } else {
                    c.set(e, PaletteColor::b(k));
                }
            }
            for v in 0..4 {
                let mut expect: Vec<_> = g
                    .edges()
                    .iter()
                    .enumerate()
                    .filter(|(_, &(a, b))| a == v || b == v)
                    .filter_map(|(e, _)| c.get(e))
                    .collect();
                expect.sort();
                expect.dedup();
                prop_assert_eq!(sorted_incident(&c, v), expect);
            }
        }
    }
}

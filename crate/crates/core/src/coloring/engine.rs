use std::collections::BTreeSet;

use thiserror::Error;

use super::assignment::EdgeColoring;
use super::palette::PaletteColor;
use crate::graph::{distance_one_edges, is_two_degenerate, EdgeId, Graph, GraphView};
use crate::reduction::{
    build_schedule, ReductionError, ReductionSchedule, ReductionStep, SpokeRemoval,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("graph is not 2-degenerate")]
    NotTwoDegenerate,
    #[error("palette parameter {delta_param} is below the maximum degree {max_degree}")]
    DeltaTooSmall {
        delta_param: usize,
        max_degree: usize,
    },
    #[error("vertex {vertex} has degree {degree} > 2")]
    DegreeTooHigh { vertex: usize, degree: usize },
    #[error("no color left for edge {edge} ({forbidden} of {available} indices forbidden)")]
    NoColorAvailable {
        edge: EdgeId,
        forbidden: usize,
        available: usize,
    },
    #[error("edge {0} is not pendant")]
    NotPendant(EdgeId),
    #[error("edge {0} is not colored from B")]
    NotBColored(EdgeId),
    #[error("edge {0} is uncolored")]
    Uncolored(EdgeId),
    #[error("edge {0} is already colored")]
    AlreadyColored(EdgeId),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("paranoid check failed: {0}")]
    ParanoidCheck(String),
    #[error(transparent)]
    Reduction(#[from] ReductionError),
}

/// Evidence collected while replaying a schedule.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RunStats {
    pub colors_used: usize,
    /// Largest forbidden set `Ω` seen while coloring a spoke.
    pub max_omega: usize,
    /// Largest forbidden index set `(A∩B) ∪ (A∩B′)′` seen while coloring a
    /// pendant edge.
    pub max_pendant_forbidden: usize,
    pub steps_replayed: usize,
    pub pendant_extensions: usize,
    pub spoke_extensions: usize,
    pub partners_primed: usize,
    /// Partner edges recolored because their far end is a leaf, so they stay
    /// pendant once the spokes are back.
    pub pendant_partners_recolored: usize,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ColorOptions {
    /// Palette parameter Δ; defaults to the maximum degree (at least 1).
    pub delta_param: Option<usize>,
    /// Cross-check every choice against the full distance-one neighborhood.
    pub paranoid: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringOutcome {
    pub coloring: EdgeColoring,
    pub stats: RunStats,
    pub schedule: ReductionSchedule,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PendantExtension {
    pub edge: EdgeId,
    pub color: PaletteColor,
    pub forbidden: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SpokeExtension {
    pub max_omega: usize,
    pub primed: usize,
    pub recolored: usize,
}

/// A subgraph of a base graph given by a set of active edges.
#[derive(Debug, Clone)]
pub struct ActiveSubgraph<'g> {
    base: &'g Graph,
    active: Vec<bool>,
    degree: Vec<usize>,
}

impl<'g> ActiveSubgraph<'g> {
    pub fn new(base: &'g Graph, edges: impl IntoIterator<Item = EdgeId>) -> Self {
        let mut sub = ActiveSubgraph {
            base,
            active: vec![false; base.edge_count()],
            degree: vec![0; base.vertex_count()],
        };
        for e in edges {
            sub.activate(e);
        }
        sub
    }

    pub fn activate(&mut self, e: EdgeId) {
        if !std::mem::replace(&mut self.active[e], true) {
            let (a, b) = self.base.edges()[e];
            self.degree[a] += 1;
            self.degree[b] += 1;
        }
    }
}

impl GraphView for ActiveSubgraph<'_> {
    fn vertex_count(&self) -> usize {
        self.base.vertex_count()
    }

    fn degree(&self, v: usize) -> usize {
        self.degree[v]
    }

    fn incident(&self, v: usize) -> impl Iterator<Item = (usize, EdgeId)> + '_ {
        GraphView::incident(self.base, v).filter(|&(_, e)| self.active[e])
    }

    fn endpoints(&self, e: EdgeId) -> (usize, usize) {
        self.base.edges()[e]
    }

    fn contains_edge(&self, e: EdgeId) -> bool {
        self.active[e]
    }
}

/// The colored part of a graph, used by paranoid checks.
struct ColoredPart<'a, V> {
    graph: &'a V,
    coloring: &'a EdgeColoring,
}

impl<V: GraphView> GraphView for ColoredPart<'_, V> {
    fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    fn degree(&self, v: usize) -> usize {
        self.incident(v).count()
    }

    fn incident(&self, v: usize) -> impl Iterator<Item = (usize, EdgeId)> + '_ {
        self.graph
            .incident(v)
            .filter(|&(_, e)| self.coloring.get(e).is_some())
    }

    fn endpoints(&self, e: EdgeId) -> (usize, usize) {
        self.graph.endpoints(e)
    }

    fn contains_edge(&self, e: EdgeId) -> bool {
        self.graph.contains_edge(e) && self.coloring.get(e).is_some()
    }
}

fn lowest_free(forbidden: &BTreeSet<u32>, half: usize, edge: EdgeId) -> Result<u32, ColoringError> {
    (1..=half as u32)
        .find(|k| !forbidden.contains(k))
        .ok_or(ColoringError::NoColorAvailable {
            edge,
            forbidden: forbidden.len(),
            available: half,
        })
}

fn colored_within_distance_one<V: GraphView>(
    g: &V,
    coloring: &EdgeColoring,
    e: EdgeId,
) -> impl Iterator<Item = PaletteColor> {
    distance_one_edges(g, e)
        .into_iter()
        .filter_map(|f| coloring.get(f))
        .collect::<Vec<_>>()
        .into_iter()
}

/// Colors a graph of maximum degree two from `B` only.
///
/// Components are taken in order of their smallest vertex. Paths are walked
/// from their smallest end vertex, cycles from their smallest vertex towards
/// its smaller neighbor; each edge gets the lowest index not already used
/// within distance one. Paths need at most 3 colors and cycles at most 5.
pub fn color_base_case(g: &Graph, delta_param: usize) -> Result<EdgeColoring, ColoringError> {
    let mut coloring = EdgeColoring::new(g, delta_param);
    color_base_case_in(g, &mut coloring)?;
    Ok(coloring)
}

pub(crate) fn color_base_case_in<V: GraphView>(
    g: &V,
    coloring: &mut EdgeColoring,
) -> Result<(), ColoringError> {
    let n = g.vertex_count();
    if let Some(v) = (0..n).find(|&v| g.degree(v) > 2) {
        return Err(ColoringError::DegreeTooHigh {
            vertex: v,
            degree: g.degree(v),
        });
    }
    let half = coloring.palette_half_size();
    let mut seen = vec![false; n];
    let mut walked = BTreeSet::new();
    for s in 0..n {
        if seen[s] || g.degree(s) == 0 {
            continue;
        }
        let mut component = vec![s];
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(x) = stack.pop() {
            for y in g.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    component.push(y);
                    stack.push(y);
                }
            }
        }
        let start = component
            .iter()
            .copied()
            .filter(|&x| g.degree(x) == 1)
            .min()
            .unwrap_or(s);

        let mut cur = start;
        while let Some((next, e)) = g.incident(cur).find(|(_, e)| !walked.contains(e)) {
            walked.insert(e);
            let forbidden: BTreeSet<u32> = colored_within_distance_one(g, coloring, e)
                .map(PaletteColor::index)
                .collect();
            let k = lowest_free(&forbidden, half, e)?;
            coloring.set(e, PaletteColor::b(k));
            cur = next;
        }
    }
    Ok(())
}

/// Colors the pendant edge `v v1` of `g`, given a valid coloring of `g − v1`.
///
/// With `A` the colors on edges at neighbors of `v`, the edge gets the lowest
/// `c ∈ B` such that neither `c` nor `c'` lies in `A`.
pub fn extend_pendant<V: GraphView>(
    coloring: &mut EdgeColoring,
    g: &V,
    v: usize,
    v1: usize,
) -> Result<PendantExtension, ColoringError> {
    let edge = g
        .edge_between(v, v1)
        .ok_or_else(|| ColoringError::PreconditionViolated(format!("{v}-{v1} is not an edge")))?;
    if g.degree(v1) != 1 {
        return Err(ColoringError::NotPendant(edge));
    }
    if coloring.get(edge).is_some() {
        return Err(ColoringError::AlreadyColored(edge));
    }
    let forbidden: BTreeSet<u32> = g
        .neighbors(v)
        .flat_map(|x| coloring.incident_colors(x))
        .map(PaletteColor::index)
        .collect();
    let k = lowest_free(&forbidden, coloring.palette_half_size(), edge)?;
    let color = PaletteColor::b(k);
    coloring.set(edge, color);
    Ok(PendantExtension {
        edge,
        color,
        forbidden: forbidden.len(),
    })
}

/// Swaps the `B`-color `c` of a pendant edge for `c'`.
pub fn prime_pendant<V: GraphView>(
    coloring: &mut EdgeColoring,
    g: &V,
    e: EdgeId,
) -> Result<PaletteColor, ColoringError> {
    let (a, b) = g.endpoints(e);
    if g.degree(a) != 1 && g.degree(b) != 1 {
        return Err(ColoringError::NotPendant(e));
    }
    let c = coloring.get(e).ok_or(ColoringError::Uncolored(e))?;
    if c.is_primed() {
        return Err(ColoringError::NotBColored(e));
    }
    coloring.set(e, c.prime());
    Ok(c.prime())
}

/// After `e` was primed: no edge within distance one repeats its color, the
/// unprimed partner is absent at both ends, and no `B`-colored pendant edge
/// nearby carries the same index.
fn check_primed_locally<V: GraphView>(
    g: &V,
    coloring: &EdgeColoring,
    e: EdgeId,
) -> Result<(), ColoringError> {
    let colored = ColoredPart { graph: g, coloring };
    let c = coloring.get(e).ok_or(ColoringError::Uncolored(e))?;
    for f in distance_one_edges(&colored, e) {
        let cf = coloring.get(f).expect("colored part");
        if cf == c {
            return Err(ColoringError::ParanoidCheck(format!(
                "primed edge {e} repeats color {c} on edge {f}"
            )));
        }
        let (x, y) = g.endpoints(f);
        let pendant = colored.degree(x) == 1 || colored.degree(y) == 1;
        if pendant && !cf.is_primed() && cf.prime() == c {
            return Err(ColoringError::ParanoidCheck(format!(
                "pendant edge {f} colored {cf} sits next to {c} on edge {e}"
            )));
        }
    }
    let (a, b) = g.endpoints(e);
    for x in [a, b] {
        if coloring.incident_colors(x).any(|d| d == c.prime()) {
            return Err(ColoringError::ParanoidCheck(format!(
                "vertex {x} carries both {c} and {}",
                c.prime()
            )));
        }
    }
    Ok(())
}

fn edge_of<V: GraphView>(g: &V, a: usize, b: usize) -> Result<EdgeId, ColoringError> {
    g.edge_between(a, b)
        .ok_or_else(|| ColoringError::PreconditionViolated(format!("{a}-{b} is not an edge")))
}

fn color_of(coloring: &EdgeColoring, e: EdgeId) -> Result<PaletteColor, ColoringError> {
    coloring.get(e).ok_or(ColoringError::Uncolored(e))
}

/// Adds the spoke edges `v vᵢ` of `step` back into a valid coloring of
/// `g − {v vᵢ}`.
///
/// Phase 1 primes each partner edge `vᵢuᵢ` unless its primed color already
/// sits on `vu` or `vw`. Phase 2 gives each spoke, in order, the lowest
/// `t ∈ B` outside
/// `Ω = [{c(vu), c(vw)} ∩ B] ∪ S′ ∪ {spokes so far} ∪ ([C(uᵢ) ∪ C(u) ∪ C(w)] ∩ B)`
/// with `S = {c(vu), c(vw), c(vᵢuᵢ)} ∩ B′`. Partner edges whose far end is a
/// leaf are still pendant in `g`; phase 3 gives each of them the lowest
/// `B`-index absent (in either half) from its distance-one neighborhood.
pub fn extend_spokes<V: GraphView>(
    coloring: &mut EdgeColoring,
    g: &V,
    step: &SpokeRemoval,
    paranoid: bool,
) -> Result<SpokeExtension, ColoringError> {
    let v = step.center;
    let [u, w] = step.anchors;
    let half = coloring.palette_half_size();
    let anchor_edges = [edge_of(g, v, u)?, edge_of(g, v, w)?];
    let anchor_colors = [
        color_of(coloring, anchor_edges[0])?,
        color_of(coloring, anchor_edges[1])?,
    ];

    let mut spoke_edges = Vec::with_capacity(step.spokes.len());
    let mut partner_edges = Vec::with_capacity(step.spokes.len());
    let mut distinct_partners: Vec<EdgeId> = Vec::new();
    for sp in &step.spokes {
        let e = edge_of(g, v, sp.vertex)?;
        if coloring.get(e).is_some() {
            return Err(ColoringError::AlreadyColored(e));
        }
        let p = edge_of(g, sp.vertex, sp.partner)?;
        if !distinct_partners.contains(&p) {
            if color_of(coloring, p)?.is_primed() {
                return Err(ColoringError::PreconditionViolated(format!(
                    "partner edge {p} is not colored from B"
                )));
            }
            distinct_partners.push(p);
        }
        spoke_edges.push(e);
        partner_edges.push(p);
    }

    let mut report = SpokeExtension::default();

    for &p in &distinct_partners {
        let c = color_of(coloring, p)?;
        if !anchor_colors.contains(&c.prime()) {
            coloring.set(p, c.prime());
            report.primed += 1;
            if paranoid {
                check_primed_locally(g, coloring, p)?;
            }
        }
    }

    let mut assigned: Vec<u32> = Vec::with_capacity(spoke_edges.len());
    for (i, sp) in step.spokes.iter().enumerate() {
        let (e, p) = (spoke_edges[i], partner_edges[i]);
        let partner_color = color_of(coloring, p)?;
        let mut omega: BTreeSet<u32> = BTreeSet::new();
        for c in anchor_colors {
            if !c.is_primed() {
                omega.insert(c.index());
            }
        }
        for c in [anchor_colors[0], anchor_colors[1], partner_color] {
            if c.is_primed() {
                omega.insert(c.index());
            }
        }
        omega.extend(assigned.iter().copied());
        for x in [sp.partner, u, w] {
            omega.extend(
                coloring
                    .incident_colors(x)
                    .filter(|c| !c.is_primed())
                    .map(PaletteColor::index),
            );
        }
        report.max_omega = report.max_omega.max(omega.len());
        let t = lowest_free(&omega, half, e)?;
        let color = PaletteColor::b(t);
        if paranoid {
            if colored_within_distance_one(g, coloring, e).any(|c| c == color) {
                return Err(ColoringError::ParanoidCheck(format!(
                    "spoke {e} color {color} repeats within distance one"
                )));
            }
            let (a, b) = g.endpoints(e);
            if [a, b]
                .iter()
                .any(|&x| coloring.incident_colors(x).any(|c| c == color.prime()))
            {
                return Err(ColoringError::ParanoidCheck(format!(
                    "spoke {e} color {color} meets its primed partner"
                )));
            }
        }
        coloring.set(e, color);
        assigned.push(t);
    }

    for &p in &distinct_partners {
        let (a, b) = g.endpoints(p);
        if g.degree(a) != 1 && g.degree(b) != 1 {
            continue;
        }
        let forbidden: BTreeSet<u32> = colored_within_distance_one(g, coloring, p)
            .map(PaletteColor::index)
            .collect();
        let k = lowest_free(&forbidden, half, p)?;
        coloring.set(p, PaletteColor::b(k));
        report.recolored += 1;
    }
    Ok(report)
}

/// Strong edge-coloring of a 2-degenerate graph from `B ∪ B′`, `|B| = 4Δ − 2`.
///
/// Every pendant edge ends up in `B`; a pendant edge colored `c` has no `c'`
/// within distance one; and no vertex sees both `c` and `c'`.
pub fn strong_color(g: &Graph, options: ColorOptions) -> Result<ColoringOutcome, ColoringError> {
    let max_degree = g.max_degree();
    let delta_param = options.delta_param.unwrap_or(max_degree.max(1));
    if delta_param < max_degree.max(1) {
        return Err(ColoringError::DeltaTooSmall {
            delta_param,
            max_degree,
        });
    }
    if !is_two_degenerate(g) {
        return Err(ColoringError::NotTwoDegenerate);
    }
    let schedule = build_schedule(g)?;
    let mut coloring = EdgeColoring::new(g, delta_param);
    let mut current = ActiveSubgraph::new(g, schedule.residual_edge_ids.iter().copied());
    color_base_case_in(&current, &mut coloring)?;

    let mut stats = RunStats::default();
    for step in schedule.steps.iter().rev() {
        match step {
            ReductionStep::Pendant(p) => {
                let e = edge_of(g, p.center, p.leaf)?;
                current.activate(e);
                let ext = extend_pendant(&mut coloring, &current, p.center, p.leaf)?;
                stats.pendant_extensions += 1;
                stats.max_pendant_forbidden = stats.max_pendant_forbidden.max(ext.forbidden);
            }
            ReductionStep::Spokes(s) => {
                for sp in &s.spokes {
                    current.activate(edge_of(g, s.center, sp.vertex)?);
                }
                let ext = extend_spokes(&mut coloring, &current, s, options.paranoid)?;
                stats.spoke_extensions += 1;
                stats.max_omega = stats.max_omega.max(ext.max_omega);
                stats.partners_primed += ext.primed;
                stats.pendant_partners_recolored += ext.recolored;
            }
        }
        stats.steps_replayed += 1;
    }
    debug_assert!(coloring.is_total());
    stats.colors_used = coloring.colors_used();
    Ok(ColoringOutcome {
        coloring,
        stats,
        schedule,
    })
}

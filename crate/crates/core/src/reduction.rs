//! Reducible-vertex search and the peeling schedule.
//!
//! A 2-degenerate graph with a vertex of degree at least three always has a
//! vertex `v` with `d(v) >= 3` and at most two `3⁺`-neighbors. Peeling such
//! vertices (dropping one leaf, or cutting every degree-2 "spoke" neighbor off
//! `v`) drives the graph down to maximum degree two; the coloring engine then
//! replays the schedule backwards.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::graph::{is_two_degenerate, EdgeId, Graph, GraphView};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("graph is not 2-degenerate")]
    NotTwoDegenerate,
    #[error("vertex {vertex} is not a reducible center: {reason}")]
    PreconditionViolated { vertex: usize, reason: String },
}

/// A degree-2 neighbor of the center together with its other neighbor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Spoke {
    pub vertex: usize,
    pub partner: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PendantRemoval {
    pub center: usize,
    pub leaf: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SpokeRemoval {
    pub center: usize,
    /// The two neighbors `u`, `w` that cover every `3⁺`-neighbor of the center.
    pub anchors: [usize; 2],
    pub spokes: Vec<Spoke>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ReductionStep {
    Pendant(PendantRemoval),
    Spokes(SpokeRemoval),
}

impl fmt::Display for ReductionStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReductionStep::Pendant(p) => write!(f, "PENDANT {} {}", p.center, p.leaf),
            ReductionStep::Spokes(s) => {
                write!(f, "SPOKES {} {} {}", s.center, s.anchors[0], s.anchors[1])?;
                for sp in &s.spokes {
                    write!(f, " ({},{})", sp.vertex, sp.partner)?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionSchedule {
    /// Steps in peeling order; the coloring replays them in reverse.
    pub steps: Vec<ReductionStep>,
    /// What is left once every vertex has degree at most two.
    pub residual: Graph,
    /// Edge ids of the input graph that survive into `residual`, indexed by
    /// residual edge id.
    pub residual_edge_ids: Vec<EdgeId>,
}

/// Result of splitting a center's neighborhood.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CenterClassification {
    pub anchors: [usize; 2],
    pub pendants: Vec<usize>,
    pub spokes: Vec<Spoke>,
}

fn is_reducible<V: GraphView>(g: &V, v: usize) -> bool {
    g.degree(v) >= 3 && g.neighbors(v).filter(|&u| g.degree(u) >= 3).count() <= 2
}

/// Smallest-id vertex of degree at least three with at most two neighbors of
/// degree at least three.
pub fn find_reducible_vertex(g: &Graph) -> Option<usize> {
    (0..g.vertex_count()).find(|&v| is_reducible(g, v))
}

/// [`find_reducible_vertex`] preceded by a 2-degeneracy check.
pub fn find_reducible_vertex_checked(g: &Graph) -> Result<Option<usize>, ReductionError> {
    if !is_two_degenerate(g) {
        return Err(ReductionError::NotTwoDegenerate);
    }
    Ok(find_reducible_vertex(g))
}

fn classify_in<V: GraphView>(g: &V, v: usize) -> Result<CenterClassification, ReductionError> {
    let violated = |reason: String| ReductionError::PreconditionViolated { vertex: v, reason };
    if g.degree(v) < 3 {
        return Err(violated(format!("degree {} < 3", g.degree(v))));
    }
    let heavy: Vec<usize> = g.neighbors(v).filter(|&u| g.degree(u) >= 3).collect();
    if heavy.len() > 2 {
        return Err(violated(format!(
            "{} neighbors of degree >= 3",
            heavy.len()
        )));
    }
    let mut anchors = heavy;
    for u in g.neighbors(v) {
        if anchors.len() == 2 {
            break;
        }
        if !anchors.contains(&u) {
            anchors.push(u);
        }
    }
    let anchors = [anchors[0], anchors[1]];

    let mut pendants = Vec::new();
    let mut spokes = Vec::new();
    for vi in g.neighbors(v).filter(|u| !anchors.contains(u)) {
        match g.degree(vi) {
            1 => pendants.push(vi),
            2 => {
                let partner = g
                    .neighbors(vi)
                    .find(|&x| x != v)
                    .expect("degree-2 vertex has a second neighbor");
                spokes.push(Spoke {
                    vertex: vi,
                    partner,
                });
            }
            _ => unreachable!("non-anchor neighbors have degree at most two"),
        }
    }
    Ok(CenterClassification {
        anchors,
        pendants,
        spokes,
    })
}

/// Splits the neighborhood of a reducible center into anchors `u`, `w`
/// (the `3⁺`-neighbors first, then the lowest remaining ids), leaves, and
/// degree-2 spokes. Everything is in ascending id order.
pub fn classify_center(g: &Graph, v: usize) -> Result<CenterClassification, ReductionError> {
    classify_in(g, v)
}

/// Mutable copy of a graph used while peeling.
///
/// Keeps, per vertex, the number of neighbors of degree at least three so the
/// set of reducible vertices can be maintained under edge deletions.
struct Peeler {
    adjacency: Vec<BTreeMap<usize, EdgeId>>,
    edges: Vec<(usize, usize)>,
    alive: Vec<bool>,
    heavy_neighbors: Vec<usize>,
    reducible: BTreeSet<usize>,
    heavy_count: usize,
}

impl Peeler {
    fn new(g: &Graph) -> Self {
        let n = g.vertex_count();
        let adjacency: Vec<BTreeMap<usize, EdgeId>> = (0..n)
            .map(|v| GraphView::incident(g, v).collect())
            .collect();
        let heavy_neighbors = (0..n)
            .map(|v| {
                adjacency[v]
                    .keys()
                    .filter(|&&u| adjacency[u].len() >= 3)
                    .count()
            })
            .collect();
        let mut peeler = Peeler {
            heavy_count: adjacency.iter().filter(|a| a.len() >= 3).count(),
            adjacency,
            edges: g.edges().to_vec(),
            alive: vec![true; g.edge_count()],
            heavy_neighbors,
            reducible: BTreeSet::new(),
        };
        for v in 0..n {
            peeler.refresh(v);
        }
        peeler
    }

    fn refresh(&mut self, v: usize) {
        if self.adjacency[v].len() >= 3 && self.heavy_neighbors[v] <= 2 {
            self.reducible.insert(v);
        } else {
            self.reducible.remove(&v);
        }
    }

    fn remove_edge(&mut self, a: usize, b: usize) {
        let e = self.adjacency[a].remove(&b).expect("edge present");
        self.adjacency[b].remove(&a);
        self.alive[e] = false;
        let (da, db) = (self.adjacency[a].len() + 1, self.adjacency[b].len() + 1);
        if da >= 3 {
            self.heavy_neighbors[b] -= 1;
        }
        if db >= 3 {
            self.heavy_neighbors[a] -= 1;
        }
        for (x, old) in [(a, da), (b, db)] {
            if old == 3 {
                // x just stopped being a 3⁺-vertex
                self.heavy_count -= 1;
                let nbrs: Vec<usize> = self.adjacency[x].keys().copied().collect();
                for y in nbrs {
                    self.heavy_neighbors[y] -= 1;
                    self.refresh(y);
                }
            }
            self.refresh(x);
        }
    }
}

impl GraphView for Peeler {
    fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    fn incident(&self, v: usize) -> impl Iterator<Item = (usize, EdgeId)> + '_ {
        self.adjacency[v].iter().map(|(&u, &e)| (u, e))
    }

    fn endpoints(&self, e: EdgeId) -> (usize, usize) {
        self.edges[e]
    }

    fn contains_edge(&self, e: EdgeId) -> bool {
        self.alive[e]
    }
}

/// Peels `g` down to maximum degree two, recording each reduction.
///
/// The center is always the smallest-id reducible vertex of the current
/// graph. A center with a leaf neighbor loses its lowest-id leaf; otherwise
/// all of its non-anchor (degree-2) neighbors are cut off at once.
pub fn build_schedule(g: &Graph) -> Result<ReductionSchedule, ReductionError> {
    let mut peeler = Peeler::new(g);
    let mut steps = Vec::new();
    while peeler.heavy_count > 0 {
        let v = *peeler
            .reducible
            .first()
            .ok_or(ReductionError::NotTwoDegenerate)?;
        let leaf = peeler.neighbors(v).find(|&u| peeler.degree(u) == 1);
        if let Some(leaf) = leaf {
            peeler.remove_edge(v, leaf);
            steps.push(ReductionStep::Pendant(PendantRemoval { center: v, leaf }));
            continue;
        }
        let class = classify_in(&peeler, v)?;
        debug_assert!(class.pendants.is_empty() && !class.spokes.is_empty());
        for sp in &class.spokes {
            peeler.remove_edge(v, sp.vertex);
        }
        steps.push(ReductionStep::Spokes(SpokeRemoval {
            center: v,
            anchors: class.anchors,
            spokes: class.spokes,
        }));
    }

    let residual_edge_ids: Vec<EdgeId> = (0..g.edge_count()).filter(|&e| peeler.alive[e]).collect();
    let pairs: Vec<(usize, usize)> = residual_edge_ids.iter().map(|&e| g.edges()[e]).collect();
    let residual = Graph::new(g.vertex_count(), &pairs).expect("subgraph of a simple graph");
    Ok(ReductionSchedule {
        steps,
        residual,
        residual_edge_ids,
    })
}

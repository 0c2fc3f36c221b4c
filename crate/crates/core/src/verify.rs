//! Independent checks for strong edge-colorings over the dual palette.
//!
//! Nothing here goes through the coloring engine or the graph's own
//! distance-one helper: the auditor rebuilds adjacency from the raw edge list
//! and tests strongness two different ways (pairwise neighborhoods and
//! per-class induced matchings), reporting a mismatch if they ever disagree.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::{EdgeColoring, PaletteColor, PaletteHalf};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("edge {0} is uncolored")]
    PartialColoring(usize),
    #[error("coloring covers {coloring} edges but the graph has {graph}")]
    EdgeCountMismatch { coloring: usize, graph: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    /// Two edges within distance one share a color.
    StrongConflict,
    /// The pairwise and per-class strongness checks disagree.
    CrossCheckMismatch,
    /// A pendant edge is colored from `B′`.
    PendantNotInB,
    /// A pendant edge colored `c` has `c'` within distance one.
    PendantPrimeConflict,
    /// A vertex sees both `c` and `c'`.
    PrimePairAtVertex,
    IndexOutOfRange,
    TooManyColors,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub edges: Vec<usize>,
    pub vertices: Vec<usize>,
    pub colors: Vec<PaletteColor>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub ok: bool,
    pub violations: Vec<Violation>,
}

impl Verdict {
    fn from_violations(mut violations: Vec<Violation>) -> Self {
        violations.sort();
        violations.dedup();
        Verdict {
            ok: violations.is_empty(),
            violations,
        }
    }

    pub fn merge(self, other: Verdict) -> Verdict {
        let mut all = self.violations;
        all.extend(other.violations);
        Verdict::from_violations(all)
    }

    pub fn count(&self, kind: ViolationKind) -> usize {
        self.violations.iter().filter(|v| v.kind == kind).count()
    }
}

/// Adjacency rebuilt from the raw edge list.
struct Audit<'a> {
    edges: &'a [(usize, usize)],
    neighbors: Vec<Vec<usize>>,
    edge_index: HashMap<(usize, usize), usize>,
}

impl<'a> Audit<'a> {
    fn new(g: &'a Graph) -> Self {
        let edges = g.edges();
        let mut neighbors = vec![Vec::new(); g.vertex_count()];
        let mut edge_index = HashMap::with_capacity(edges.len());
        for (id, &(a, b)) in edges.iter().enumerate() {
            neighbors[a].push(b);
            neighbors[b].push(a);
            edge_index.insert((a.min(b), a.max(b)), id);
        }
        Audit {
            edges,
            neighbors,
            edge_index,
        }
    }

    fn edge(&self, a: usize, b: usize) -> usize {
        self.edge_index[&(a.min(b), a.max(b))]
    }

    fn is_pendant(&self, e: usize) -> bool {
        let (a, b) = self.edges[e];
        self.neighbors[a].len() == 1 || self.neighbors[b].len() == 1
    }

    /// Every edge touching an endpoint of `e` or a neighbor of one.
    fn near(&self, e: usize) -> BTreeSet<usize> {
        let (a, b) = self.edges[e];
        let mut out = BTreeSet::new();
        for end in [a, b] {
            for &x in &self.neighbors[end] {
                out.insert(self.edge(end, x));
                for &y in &self.neighbors[x] {
                    out.insert(self.edge(x, y));
                }
            }
        }
        out.remove(&e);
        out
    }
}

fn total_colors(g: &Graph, coloring: &EdgeColoring) -> Result<Vec<PaletteColor>, VerifyError> {
    if coloring.edge_count() != g.edge_count() {
        return Err(VerifyError::EdgeCountMismatch {
            coloring: coloring.edge_count(),
            graph: g.edge_count(),
        });
    }
    coloring
        .assignment()
        .iter()
        .enumerate()
        .map(|(e, c)| c.ok_or(VerifyError::PartialColoring(e)))
        .collect()
}

fn conflicts_pairwise(audit: &Audit, colors: &[PaletteColor]) -> BTreeSet<(usize, usize)> {
    let mut out = BTreeSet::new();
    for e in 0..colors.len() {
        for f in audit.near(e) {
            if e < f && colors[e] == colors[f] {
                out.insert((e, f));
            }
        }
    }
    out
}

fn conflicts_by_class(audit: &Audit, colors: &[PaletteColor]) -> BTreeSet<(usize, usize)> {
    let mut classes: BTreeMap<PaletteColor, Vec<usize>> = BTreeMap::new();
    for (e, &c) in colors.iter().enumerate() {
        classes.entry(c).or_default().push(e);
    }
    let mut out = BTreeSet::new();
    let mut pair = |e: usize, f: usize| {
        out.insert((e.min(f), e.max(f)));
    };
    for class in classes.values() {
        // matching: no two class edges share a vertex
        let mut owners: HashMap<usize, Vec<usize>> = HashMap::new();
        for &e in class {
            let (a, b) = audit.edges[e];
            owners.entry(a).or_default().push(e);
            owners.entry(b).or_default().push(e);
        }
        for list in owners.values() {
            for (i, &e) in list.iter().enumerate() {
                for &f in &list[i + 1..] {
                    pair(e, f);
                }
            }
        }
        // induced: no graph edge joins endpoints of two class edges
        for &e in class {
            let (a, b) = audit.edges[e];
            for end in [a, b] {
                for &y in &audit.neighbors[end] {
                    for &f in owners.get(&y).into_iter().flatten() {
                        if f != e {
                            pair(e, f);
                        }
                    }
                }
            }
        }
    }
    out
}

/// Checks that every color class is an induced matching.
pub fn verify_strong(g: &Graph, coloring: &EdgeColoring) -> Result<Verdict, VerifyError> {
    let colors = total_colors(g, coloring)?;
    let audit = Audit::new(g);
    let pairwise = conflicts_pairwise(&audit, &colors);
    let by_class = conflicts_by_class(&audit, &colors);
    let mut violations: Vec<Violation> = pairwise
        .iter()
        .map(|&(e, f)| Violation {
            kind: ViolationKind::StrongConflict,
            edges: vec![e, f],
            vertices: Vec::new(),
            colors: vec![colors[e]],
        })
        .collect();
    for &(e, f) in pairwise.symmetric_difference(&by_class) {
        violations.push(Violation {
            kind: ViolationKind::CrossCheckMismatch,
            edges: vec![e, f],
            vertices: Vec::new(),
            colors: vec![colors[e], colors[f]],
        });
    }
    Ok(Verdict::from_violations(violations))
}

/// Checks the three dual-palette properties: pendant edges use `B`; a
/// pendant edge colored `c` has no `c'` within distance one; no vertex sees
/// both `c` and `c'`.
pub fn verify_theorem_properties(
    g: &Graph,
    coloring: &EdgeColoring,
) -> Result<Verdict, VerifyError> {
    let colors = total_colors(g, coloring)?;
    let audit = Audit::new(g);
    let mut violations = Vec::new();

    for (e, &c) in colors.iter().enumerate() {
        if !audit.is_pendant(e) {
            continue;
        }
        let (a, b) = audit.edges[e];
        if c.is_primed() {
            violations.push(Violation {
                kind: ViolationKind::PendantNotInB,
                edges: vec![e],
                vertices: vec![a, b],
                colors: vec![c],
            });
            continue;
        }
        for f in audit.near(e) {
            if colors[f] == c.prime() {
                violations.push(Violation {
                    kind: ViolationKind::PendantPrimeConflict,
                    edges: vec![e, f],
                    vertices: Vec::new(),
                    colors: vec![c, colors[f]],
                });
            }
        }
    }

    for v in 0..g.vertex_count() {
        let mut seen: BTreeMap<u32, [Option<usize>; 2]> = BTreeMap::new();
        for &x in &audit.neighbors[v] {
            let e = audit.edge(v, x);
            let c = colors[e];
            let slot = match c.half() {
                PaletteHalf::Unprimed => 0,
                PaletteHalf::Primed => 1,
            };
            seen.entry(c.index()).or_default()[slot].get_or_insert(e);
        }
        for (index, halves) in seen {
            if let [Some(e), Some(f)] = halves {
                violations.push(Violation {
                    kind: ViolationKind::PrimePairAtVertex,
                    edges: vec![e.min(f), e.max(f)],
                    vertices: vec![v],
                    colors: vec![PaletteColor::b(index), PaletteColor::b_prime(index)],
                });
            }
        }
    }
    Ok(Verdict::from_violations(violations))
}

/// Checks that every assigned color index is at most `4Δ − 2` and that at
/// most `8Δ − 4` distinct colors are used. Uncolored edges are ignored.
pub fn verify_bound(coloring: &EdgeColoring, delta_param: usize) -> Verdict {
    let half = (4 * delta_param).saturating_sub(2);
    let mut violations = Vec::new();
    for (e, c) in coloring.assignment().iter().enumerate() {
        if let Some(c) = c {
            if c.index() as usize > half {
                violations.push(Violation {
                    kind: ViolationKind::IndexOutOfRange,
                    edges: vec![e],
                    vertices: Vec::new(),
                    colors: vec![*c],
                });
            }
        }
    }
    let used: BTreeSet<PaletteColor> = coloring.assignment().iter().flatten().copied().collect();
    if used.len() > 2 * half {
        violations.push(Violation {
            kind: ViolationKind::TooManyColors,
            edges: Vec::new(),
            vertices: Vec::new(),
            colors: Vec::new(),
        });
    }
    Verdict::from_violations(violations)
}

/// All three checks, merged.
pub fn verify_all(
    g: &Graph,
    coloring: &EdgeColoring,
    delta_param: usize,
) -> Result<Verdict, VerifyError> {
    Ok(verify_strong(g, coloring)?
        .merge(verify_theorem_properties(g, coloring)?)
        .merge(verify_bound(coloring, delta_param)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(k: u32) -> PaletteColor {
        PaletteColor::b(k)
    }

    fn bp(k: u32) -> PaletteColor {
        PaletteColor::b_prime(k)
    }

    fn path(n: usize) -> Graph {
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &pairs).unwrap()
    }

    fn colored(g: &Graph, delta: usize, colors: &[PaletteColor]) -> EdgeColoring {
        EdgeColoring::from_colors(g, delta, colors)
    }

    #[test]
    fn adjacent_repeat_is_a_conflict() {
        let g = path(3);
        let v = verify_strong(&g, &colored(&g, 2, &[b(1), b(1)])).unwrap();
        assert!(!v.ok);
        assert_eq!(v.violations[0].edges, vec![0, 1]);
        assert_eq!(v.count(ViolationKind::CrossCheckMismatch), 0);
    }

    #[test]
    fn distance_one_repeat_is_a_conflict() {
        let g = path(4);
        let v = verify_strong(&g, &colored(&g, 2, &[b(1), b(2), b(1)])).unwrap();
        assert_eq!(v.count(ViolationKind::StrongConflict), 1);
        assert_eq!(v.violations[0].edges, vec![0, 2]);
    }

    #[test]
    fn c5_with_distinct_colors_is_strong() {
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let c = colored(&g, 2, &[b(1), b(2), b(3), b(4), b(5)]);
        assert!(verify_strong(&g, &c).unwrap().ok);
    }

    #[test]
    fn partial_coloring_is_an_error() {
        let g = path(3);
        let mut c = EdgeColoring::new(&g, 2);
        c.set(0, b(1));
        assert_eq!(verify_strong(&g, &c), Err(VerifyError::PartialColoring(1)));
        assert_eq!(
            verify_theorem_properties(&g, &c),
            Err(VerifyError::PartialColoring(1))
        );
    }

    #[test]
    fn pendant_in_b_prime() {
        let g = path(3);
        let v = verify_theorem_properties(&g, &colored(&g, 2, &[bp(2), b(1)])).unwrap();
        assert_eq!(v.count(ViolationKind::PendantNotInB), 1);
        assert_eq!(v.violations[0].edges, vec![0]);
    }

    #[test]
    fn pendant_with_primed_twin_nearby() {
        // P5: pendant edge 0 colored 3, middle edge 2 colored 3'
        let g = path(5);
        let v = verify_theorem_properties(&g, &colored(&g, 2, &[b(3), b(1), bp(3), b(2)])).unwrap();
        assert_eq!(v.count(ViolationKind::PendantPrimeConflict), 1);
        assert_eq!(v.count(ViolationKind::PrimePairAtVertex), 0);
    }

    #[test]
    fn prime_pair_at_vertex() {
        // star center sees 5 and 5'; the 5' edge is pendant so that is flagged too
        let g = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let v = verify_theorem_properties(&g, &colored(&g, 2, &[b(5), bp(5), b(1)])).unwrap();
        assert_eq!(v.count(ViolationKind::PrimePairAtVertex), 1);
        let pair = v
            .violations
            .iter()
            .find(|x| x.kind == ViolationKind::PrimePairAtVertex)
            .unwrap();
        assert_eq!(pair.vertices, vec![0]);
        assert_eq!(pair.edges, vec![0, 1]);
    }

    #[test]
    fn bound_boundaries() {
        let g = path(2);
        assert!(verify_bound(&colored(&g, 3, &[b(10)]), 3).ok);
        let v = verify_bound(&colored(&g, 3, &[b(11)]), 3);
        assert_eq!(v.count(ViolationKind::IndexOutOfRange), 1);
        assert!(verify_bound(&EdgeColoring::new(&Graph::empty(0), 3), 3).ok);
    }

    #[test]
    fn violations_are_reported_exhaustively() {
        let g = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let v = verify_strong(&g, &colored(&g, 3, &[b(1), b(1), b(1)])).unwrap();
        let pairs: Vec<_> = v.violations.iter().map(|x| x.edges.clone()).collect();
        assert_eq!(pairs, vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
    }

    #[test]
    fn verdict_json_shape() {
        let g = path(3);
        let v = verify_strong(&g, &colored(&g, 2, &[b(1), b(1)])).unwrap();
        let json = serde_json::to_string(&v).unwrap();
        assert_eq!(
            json,
            r#"{"ok":false,"violations":[{"kind":"strong_conflict","edges":[0,1],"vertices":[],"colors":[{"set":"B","index":1}]}]}"#
        );
    }
}

//! Simple undirected graphs with stable edge identities.
//!
//! Vertices are dense ids `0..n`. Edges are stored canonically as `(min, max)`
//! and numbered `0..m` in input order. A [`Graph`] is immutable once built;
//! algorithms that need to peel or grow a graph work through the
//! [`GraphView`] trait over a base graph instead.

use std::collections::{HashSet, VecDeque};

use thiserror::Error;

/// Index of an edge in [`Graph::edges`].
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
}

/// Read access to an undirected graph, possibly a subgraph of a larger one.
///
/// Edge ids always refer to the underlying base graph so colorings can be
/// shared between a graph and its subgraphs.
pub trait GraphView {
    fn vertex_count(&self) -> usize;

    fn degree(&self, v: usize) -> usize;

    /// `(neighbor, edge id)` pairs at `v`, in ascending neighbor order.
    fn incident(&self, v: usize) -> impl Iterator<Item = (usize, EdgeId)> + '_;

    fn endpoints(&self, e: EdgeId) -> (usize, usize);

    fn contains_edge(&self, e: EdgeId) -> bool;

    fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.incident(v).map(|(u, _)| u)
    }

    fn edge_between(&self, u: usize, v: usize) -> Option<EdgeId> {
        self.incident(u).find(|&(x, _)| x == v).map(|(_, e)| e)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    incidence: Vec<Vec<(usize, EdgeId)>>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a simple graph on `n` vertices. Self-loops, repeated pairs
    /// (in either orientation) and out-of-range endpoints are rejected.
    pub fn new(n: usize, edge_pairs: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut incidence = vec![Vec::new(); n];
        let mut edges = Vec::with_capacity(edge_pairs.len());
        let mut seen = HashSet::with_capacity(edge_pairs.len());
        for &(a, b) in edge_pairs {
            for x in [a, b] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange(x));
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            let key = (a.min(b), a.max(b));
            if !seen.insert(key) {
                return Err(GraphError::DuplicateEdge(key.0, key.1));
            }
            let id = edges.len();
            edges.push(key);
            incidence[key.0].push((key.1, id));
            incidence[key.1].push((key.0, id));
        }
        for list in &mut incidence {
            list.sort_unstable();
        }
        Ok(Graph { incidence, edges })
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            incidence: vec![Vec::new(); n],
            edges: Vec::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.incidence.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Canonical `(min, max)` endpoint pairs indexed by edge id.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incidence[v].len()
    }

    pub fn adjacency(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.incidence[v].iter().map(|&(u, _)| u)
    }

    pub fn max_degree(&self) -> usize {
        self.incidence.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.find_edge(u, v).is_some()
    }

    pub fn find_edge(&self, u: usize, v: usize) -> Option<EdgeId> {
        let list = self.incidence.get(u)?;
        list.binary_search_by_key(&v, |&(x, _)| x)
            .ok()
            .map(|i| list[i].1)
    }

    pub fn classify(&self, v: usize, class: DegreeClass) -> bool {
        class.matches(self.degree(v))
    }
}

impl GraphView for Graph {
    fn vertex_count(&self) -> usize {
        self.incidence.len()
    }

    fn degree(&self, v: usize) -> usize {
        self.incidence[v].len()
    }

    fn incident(&self, v: usize) -> impl Iterator<Item = (usize, EdgeId)> + '_ {
        self.incidence[v].iter().copied()
    }

    fn endpoints(&self, e: EdgeId) -> (usize, usize) {
        self.edges[e]
    }

    fn contains_edge(&self, e: EdgeId) -> bool {
        e < self.edges.len()
    }

    fn edge_between(&self, u: usize, v: usize) -> Option<EdgeId> {
        self.find_edge(u, v)
    }
}

/// A `k`-vertex, `k⁻`-vertex or `k⁺`-vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DegreeClass {
    Exactly(usize),
    AtMost(usize),
    AtLeast(usize),
}

impl DegreeClass {
    pub fn matches(self, degree: usize) -> bool {
        match self {
            DegreeClass::Exactly(k) => degree == k,
            DegreeClass::AtMost(k) => degree <= k,
            DegreeClass::AtLeast(k) => degree >= k,
        }
    }
}

pub fn max_degree(g: &Graph) -> usize {
    g.max_degree()
}

/// Order in which vertices can be peeled off while having degree at most two
/// at removal time, or `None` if peeling gets stuck.
pub fn two_degenerate_peeling(g: &Graph) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut queued = vec![false; n];
    let mut queue = VecDeque::new();
    for v in 0..n {
        if degree[v] <= 2 {
            queued[v] = true;
            queue.push_back(v);
        }
    }
    let mut order = Vec::with_capacity(n);
    while let Some(v) = queue.pop_front() {
        removed[v] = true;
        order.push(v);
        for u in g.adjacency(v) {
            if removed[u] {
                continue;
            }
            degree[u] -= 1;
            if degree[u] <= 2 && !queued[u] {
                queued[u] = true;
                queue.push_back(u);
            }
        }
    }
    (order.len() == n).then_some(order)
}

pub fn is_two_degenerate(g: &Graph) -> bool {
    two_degenerate_peeling(g).is_some()
}

/// Edges that may not share a color with `e` in a strong edge-coloring:
/// every other edge touching `e` or joined to it by an edge. Sorted ascending.
pub fn distance_one_edges<V: GraphView>(g: &V, e: EdgeId) -> Vec<EdgeId> {
    let (a, b) = g.endpoints(e);
    let mut hubs: Vec<usize> = vec![a, b];
    hubs.extend(g.neighbors(a));
    hubs.extend(g.neighbors(b));
    hubs.sort_unstable();
    hubs.dedup();
    let mut out: Vec<EdgeId> = hubs
        .iter()
        .flat_map(|&x| g.incident(x).map(|(_, f)| f))
        .filter(|&f| f != e)
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

pub fn edges_within_distance_one(g: &Graph, e: EdgeId) -> Vec<EdgeId> {
    distance_one_edges(g, e)
}

/// The conflict graph: one vertex per edge of `g`, adjacent when the two
/// edges are within distance one.
pub fn square_of_line_graph(g: &Graph) -> Graph {
    let m = g.edge_count();
    let mut pairs = Vec::new();
    for e in 0..m {
        for f in distance_one_edges(g, e) {
            if e < f {
                pairs.push((e, f));
            }
        }
    }
    Graph::new(m, &pairs).expect("conflict pairs are simple by construction")
}

//! Exact strong chromatic index for small graphs.
//!
//! A strong edge-coloring of `g` is a proper vertex coloring of the square of
//! its line graph, so the oracle runs a DSATUR branch and bound on that
//! conflict graph, seeded with a greedy clique (lower bound) and a greedy
//! coloring (upper bound).

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::coloring::{EdgeColoring, PaletteColor};
use crate::graph::{square_of_line_graph, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: u64,
    pub max_time: Duration,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_nodes: 10_000_000,
            max_time: Duration::from_secs(30),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleResult {
    /// Exact value when `budget_exhausted` is false, otherwise the best upper
    /// bound found.
    pub chi_s: usize,
    pub lower_bound: usize,
    pub upper_bound: usize,
    pub nodes_explored: u64,
    pub budget_exhausted: bool,
    /// Color (1-based) of each edge in a coloring with `chi_s` colors.
    pub witness: Vec<u32>,
}

impl OracleResult {
    /// The witness as an unprimed palette coloring of `g`, with a palette
    /// parameter large enough to hold every index.
    pub fn witness_coloring(&self, g: &Graph) -> EdgeColoring {
        let delta = g.max_degree().max(self.chi_s.div_ceil(4) + 1).max(1);
        let colors: Vec<PaletteColor> = self.witness.iter().map(|&k| PaletteColor::b(k)).collect();
        EdgeColoring::from_colors(g, delta, &colors)
    }
}

fn conflict_adjacency(g: &Graph) -> Vec<Vec<usize>> {
    let h = square_of_line_graph(g);
    (0..h.vertex_count())
        .map(|v| h.adjacency(v).collect())
        .collect()
}

fn degree_order(adj: &[Vec<usize>]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..adj.len()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(adj[v].len()), v));
    order
}

fn greedy_coloring(adj: &[Vec<usize>]) -> Vec<usize> {
    const NONE: usize = usize::MAX;
    let mut color = vec![NONE; adj.len()];
    for v in degree_order(adj) {
        let taken: Vec<usize> = adj[v]
            .iter()
            .map(|&u| color[u])
            .filter(|&c| c != NONE)
            .collect();
        color[v] = (0..).find(|c| !taken.contains(c)).unwrap();
    }
    color
}

fn greedy_clique(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut is_adj = vec![vec![false; n]; n];
    for (v, list) in adj.iter().enumerate() {
        for &u in list {
            is_adj[v][u] = true;
        }
    }
    let order = degree_order(adj);
    let mut best = Vec::new();
    for &seed in &order {
        if adj[seed].len() < best.len() {
            break;
        }
        let mut clique = vec![seed];
        for &v in &order {
            if v != seed && clique.iter().all(|&c| is_adj[c][v]) {
                clique.push(v);
            }
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best
}

/// Number of colors used by first-fit in non-increasing conflict-degree order.
pub fn greedy_upper_bound(g: &Graph) -> usize {
    let adj = conflict_adjacency(g);
    greedy_coloring(&adj)
        .iter()
        .map(|&c| c + 1)
        .max()
        .unwrap_or(0)
}

/// Size of the largest clique found by growing one greedily from each seed.
pub fn clique_lower_bound(g: &Graph) -> usize {
    greedy_clique(&conflict_adjacency(g)).len()
}

struct Search<'a> {
    adj: &'a [Vec<usize>],
    color: Vec<usize>,
    /// `forbid[v][c]`: number of colored neighbors of `v` using color `c`.
    forbid: Vec<Vec<u32>>,
    saturation: Vec<usize>,
    best: usize,
    best_coloring: Vec<usize>,
    lower_bound: usize,
    nodes: u64,
    budget: Budget,
    started: Instant,
    exhausted: bool,
}

const UNCOLORED: usize = usize::MAX;

impl Search<'_> {
    fn assign(&mut self, v: usize, c: usize) {
        self.color[v] = c;
        let adj = self.adj;
        for &u in &adj[v] {
            if self.forbid[u][c] == 0 {
                self.saturation[u] += 1;
            }
            self.forbid[u][c] += 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = std::mem::replace(&mut self.color[v], UNCOLORED);
        let adj = self.adj;
        for &u in &adj[v] {
            self.forbid[u][c] -= 1;
            if self.forbid[u][c] == 0 {
                self.saturation[u] -= 1;
            }
        }
    }

    /// Uncolored vertex with the most distinct neighbor colors, then most
    /// neighbors, then smallest id.
    fn pick(&self) -> Option<usize> {
        (0..self.adj.len())
            .filter(|&v| self.color[v] == UNCOLORED)
            .max_by_key(|&v| (self.saturation[v], self.adj[v].len(), std::cmp::Reverse(v)))
    }

    fn out_of_budget(&mut self) -> bool {
        if self.nodes >= self.budget.max_nodes
            || (self.nodes.is_multiple_of(1024) && self.started.elapsed() >= self.budget.max_time)
        {
            self.exhausted = true;
        }
        self.exhausted
    }

    fn run(&mut self, used: usize) {
        if self.exhausted || self.best == self.lower_bound {
            return;
        }
        self.nodes += 1;
        if self.out_of_budget() {
            return;
        }
        let Some(v) = self.pick() else {
            if used < self.best {
                self.best = used;
                self.best_coloring = self.color.clone();
            }
            return;
        };
        // a new color may only be the next unused one
        let limit = (used + 1).min(self.best - 1);
        for c in 0..limit {
            if self.forbid[v][c] > 0 {
                continue;
            }
            self.assign(v, c);
            self.run(used.max(c + 1));
            self.unassign(v);
            if self.exhausted || self.best == self.lower_bound {
                return;
            }
        }
    }
}

/// Exact strong chromatic index of `g` within `budget`.
pub fn exact_chi_s(g: &Graph, budget: Budget) -> OracleResult {
    let adj = conflict_adjacency(g);
    let n = adj.len();
    let clique = greedy_clique(&adj);
    let greedy = greedy_coloring(&adj);
    let greedy_count = greedy.iter().map(|&c| c + 1).max().unwrap_or(0);

    let mut search = Search {
        adj: &adj,
        color: vec![UNCOLORED; n],
        forbid: vec![vec![0; greedy_count.max(1)]; n],
        saturation: vec![0; n],
        best: greedy_count,
        best_coloring: greedy,
        lower_bound: clique.len(),
        nodes: 0,
        budget,
        started: Instant::now(),
        exhausted: false,
    };
    // the clique's colors are fixed before the search starts
    for (c, &v) in clique.iter().enumerate() {
        search.assign(v, c);
    }
    search.run(clique.len());

    OracleResult {
        chi_s: search.best,
        lower_bound: clique.len(),
        upper_bound: search.best,
        nodes_explored: search.nodes,
        budget_exhausted: search.exhausted,
        witness: search.best_coloring.iter().map(|&c| c as u32 + 1).collect(),
    }
}

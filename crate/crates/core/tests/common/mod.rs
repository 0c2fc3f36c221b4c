//! Brute-force oracles shared by the integration suites. None of these go
//! through the library's own search or distance helpers.

#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use strong_edge_core::generators;
use strong_edge_core::Graph;

/// Edges within distance one of `e`, found by a multi-source BFS from the
/// endpoints of `e`: `f = xy` qualifies iff one of its ends is at distance
/// at most one from `{a, b}`.
pub fn bfs_distance_one(g: &Graph, e: usize) -> BTreeSet<usize> {
    let n = g.vertex_count();
    let (a, b) = g.edges()[e];
    let mut dist = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for s in [a, b] {
        dist[s] = 0;
        queue.push_back(s);
    }
    while let Some(x) = queue.pop_front() {
        if dist[x] >= 1 {
            continue;
        }
        for y in g.adjacency(x) {
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    g.edges()
        .iter()
        .enumerate()
        .filter(|&(f, &(x, y))| f != e && dist[x].min(dist[y]) <= 1)
        .map(|(f, _)| f)
        .collect()
}

fn conflict_matrix(g: &Graph) -> Vec<Vec<bool>> {
    let m = g.edge_count();
    let n = g.vertex_count();
    let mut adj = vec![vec![false; n]; n];
    for &(a, b) in g.edges() {
        adj[a][b] = true;
        adj[b][a] = true;
    }
    let edges = g.edges();
    let mut out = vec![vec![false; m]; m];
    for e in 0..m {
        for f in 0..m {
            if e == f {
                continue;
            }
            let (a, b) = edges[e];
            let (x, y) = edges[f];
            let share = a == x || a == y || b == x || b == y;
            let joined = adj[a][x] || adj[a][y] || adj[b][x] || adj[b][y];
            out[e][f] = share || joined;
        }
    }
    out
}

fn fits(conflict: &[Vec<bool>], colors: &mut Vec<usize>, k: usize) -> bool {
    let e = colors.len();
    if e == conflict.len() {
        return true;
    }
    for c in 0..k {
        if (0..e).all(|f| !conflict[e][f] || colors[f] != c) {
            colors.push(c);
            if fits(conflict, colors, k) {
                return true;
            }
            colors.pop();
        }
    }
    false
}

/// Smallest `k` admitting a strong edge-coloring, by plain backtracking over
/// edges in id order with no ordering heuristics or symmetry breaking.
pub fn naive_chi_s(g: &Graph) -> usize {
    let conflict = conflict_matrix(g);
    (0..)
        .find(|&k| fits(&conflict, &mut Vec::new(), k))
        .unwrap()
}

/// Every vertex with degree >= 3 and at most two neighbors of degree >= 3.
pub fn reducible_vertices(g: &Graph) -> Vec<usize> {
    (0..g.vertex_count())
        .filter(|&v| g.degree(v) >= 3 && g.adjacency(v).filter(|&u| g.degree(u) >= 3).count() <= 2)
        .collect()
}

/// Random 2-degenerate corpus of the size used by the scale suite.
pub fn random_corpus(count: u64) -> Vec<(String, Graph)> {
    (0..count)
        .map(|seed| {
            let n = 1 + (seed as usize * 37 % 60);
            let cap = 2 + (seed as usize % 7);
            let g = generators::random_two_degenerate(n, cap, seed).unwrap();
            (format!("random_two_degenerate({n},{cap},seed={seed})"), g)
        })
        .collect()
}

/// Paths, cycles and stars on at most 30 vertices, K_{2,m} for m <= 8 and
/// triangle_with_leaves for D <= 8.
pub fn fixed_corpus() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for n in 2..=30 {
        out.push((format!("path({n})"), generators::path(n).unwrap()));
    }
    for n in 3..=30 {
        out.push((format!("cycle({n})"), generators::cycle(n).unwrap()));
    }
    for k in 1..=29 {
        out.push((format!("star({k})"), generators::star(k).unwrap()));
    }
    for m in 1..=8 {
        out.push((
            format!("complete_bipartite_2m({m})"),
            generators::complete_bipartite_2m(m).unwrap(),
        ));
    }
    for d in 2..=8 {
        out.push((
            format!("triangle_with_leaves({d})"),
            generators::triangle_with_leaves(d).unwrap(),
        ));
    }
    out
}

/// Seeded 2-degenerate graphs with at most `max_edges` edges.
pub fn small_corpus(count: usize, max_edges: usize) -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    let mut seed = 1_000u64;
    while out.len() < count {
        let n = 3 + (seed as usize % 10);
        let cap = 2 + (seed as usize % 5);
        let g = generators::random_two_degenerate(n, cap, seed).unwrap();
        if g.edge_count() >= 1 && g.edge_count() <= max_edges {
            out.push((format!("random_two_degenerate({n},{cap},seed={seed})"), g));
        }
        seed += 1;
    }
    out
}

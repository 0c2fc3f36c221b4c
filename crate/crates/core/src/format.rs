//! Text formats: edge lists in, coloring documents out.
//!
//! Edge list: an optional header `n m`, then one `u v` pair per line
//! (0-based, whitespace separated). Lines starting with `#` and blank lines
//! are skipped. The first pair is read as a header when exactly `m` pairs
//! follow it and all of them fit below `n`; otherwise every line is an edge
//! and `n` is one more than the largest endpoint.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::{EdgeColoring, PaletteColor, RunStats};
use crate::graph::{Graph, GraphError};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("coloring JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("coloring does not match graph: {0}")]
    Mismatch(String),
}

pub fn parse_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut rows: Vec<(usize, (usize, usize))> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let syntax = |msg: String| FormatError::Syntax { line: i + 1, msg };
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(syntax(format!("expected two integers, got {:?}", line)));
        }
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| syntax(format!("not a non-negative integer: {s:?}")))
        };
        rows.push((i + 1, (parse(fields[0])?, parse(fields[1])?)));
    }

    let header = rows.first().and_then(|&(_, (n, m))| {
        let body = &rows[1..];
        (body.len() == m && body.iter().all(|&(_, (a, b))| a < n && b < n)).then_some(n)
    });
    let (n, body) = match header {
        Some(n) => (n, &rows[1..]),
        None => {
            let n = rows
                .iter()
                .map(|&(_, (a, b))| a.max(b) + 1)
                .max()
                .unwrap_or(0);
            (n, &rows[..])
        }
    };
    let pairs: Vec<(usize, usize)> = body.iter().map(|&(_, p)| p).collect();
    Ok(Graph::new(n, &pairs)?)
}

/// Header line followed by one edge per line, in edge-id order.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for &(a, b) in g.edges() {
        out.push_str(&format!("{a} {b}\n"));
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatsDocument {
    pub colors_used: usize,
    pub max_omega: usize,
    pub max_pendant_forbidden: usize,
}

impl From<&RunStats> for StatsDocument {
    fn from(s: &RunStats) -> Self {
        StatsDocument {
            colors_used: s.colors_used,
            max_omega: s.max_omega,
            max_pendant_forbidden: s.max_pendant_forbidden,
        }
    }
}

/// JSON form of a total coloring. Field order is fixed, so equal colorings
/// serialize to equal bytes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringDocument {
    pub n: usize,
    pub delta_param: usize,
    pub palette_size: usize,
    pub edges: Vec<[usize; 2]>,
    pub colors: Vec<PaletteColor>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stats: Option<StatsDocument>,
}

impl ColoringDocument {
    /// Panics if `coloring` is not total.
    pub fn new(g: &Graph, coloring: &EdgeColoring, stats: Option<&RunStats>) -> Self {
        ColoringDocument {
            n: g.vertex_count(),
            delta_param: coloring.delta_param(),
            palette_size: coloring.palette_half_size(),
            edges: g.edges().iter().map(|&(a, b)| [a, b]).collect(),
            colors: coloring
                .assignment()
                .iter()
                .map(|c| c.expect("document needs a total coloring"))
                .collect(),
            stats: stats.map(StatsDocument::from),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes") + "\n"
    }

    pub fn from_json(text: &str) -> Result<Self, FormatError> {
        Ok(serde_json::from_str(text)?)
    }

    /// Rebuilds the coloring on `g`, which must have the same edges in the
    /// same order.
    pub fn to_coloring(&self, g: &Graph) -> Result<EdgeColoring, FormatError> {
        if self.edges.len() != self.colors.len() {
            return Err(FormatError::Mismatch(format!(
                "{} edges but {} colors",
                self.edges.len(),
                self.colors.len()
            )));
        }
        if self.edges.len() != g.edge_count() {
            return Err(FormatError::Mismatch(format!(
                "{} edges in coloring, {} in graph",
                self.edges.len(),
                g.edge_count()
            )));
        }
        for (e, (&[a, b], &(x, y))) in self.edges.iter().zip(g.edges()).enumerate() {
            if (a.min(b), a.max(b)) != (x, y) {
                return Err(FormatError::Mismatch(format!(
                    "edge {e} is {a}-{b} in the coloring but {x}-{y} in the graph"
                )));
            }
        }
        Ok(EdgeColoring::from_colors(g, self.delta_param, &self.colors))
    }
}

//! Test-graph families, including the triangle-with-leaves family whose
//! strong chromatic index is `3Δ − 3`.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
}

fn bad(msg: impl Into<String>) -> GenError {
    GenError::BadParameter(msg.into())
}

/// Relative weights for attaching a new vertex to 0, 1 or 2 earlier vertices.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AttachWeights(pub [f64; 3]);

impl Default for AttachWeights {
    fn default() -> Self {
        AttachWeights([0.1, 0.3, 0.6])
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    TriangleWithLeaves { d: usize },
    Path { n: usize },
    Cycle { n: usize },
    Star { k: usize },
    RandomTwoDegenerate { n: usize, max_deg_cap: usize },
    RandomTree { n: usize },
    CompleteBipartiteTwo { m: usize },
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::TriangleWithLeaves { .. } => "triangle_with_leaves",
            Family::Path { .. } => "path",
            Family::Cycle { .. } => "cycle",
            Family::Star { .. } => "star",
            Family::RandomTwoDegenerate { .. } => "random_two_degenerate",
            Family::RandomTree { .. } => "random_tree",
            Family::CompleteBipartiteTwo { .. } => "complete_bipartite_2m",
        }
    }

    /// Parses a family name and its positional integer parameters.
    pub fn parse(name: &str, params: &[usize]) -> Result<Family, GenError> {
        let arity = |k: usize| -> Result<(), GenError> {
            if params.len() == k {
                Ok(())
            } else {
                Err(bad(format!(
                    "{name} takes {k} parameter(s), got {}",
                    params.len()
                )))
            }
        };
        let family = match name {
            "triangle_with_leaves" => {
                arity(1)?;
                Family::TriangleWithLeaves { d: params[0] }
            }
            "path" => {
                arity(1)?;
                Family::Path { n: params[0] }
            }
            "cycle" => {
                arity(1)?;
                Family::Cycle { n: params[0] }
            }
            "star" => {
                arity(1)?;
                Family::Star { k: params[0] }
            }
            "random_two_degenerate" => {
                arity(2)?;
                Family::RandomTwoDegenerate {
                    n: params[0],
                    max_deg_cap: params[1],
                }
            }
            "random_tree" => {
                arity(1)?;
                Family::RandomTree { n: params[0] }
            }
            "complete_bipartite_2m" => {
                arity(1)?;
                Family::CompleteBipartiteTwo { m: params[0] }
            }
            other => return Err(GenError::UnknownFamily(other.to_string())),
        };
        Ok(family)
    }
}

/// A family with its parameters and the seed used by random families.
#[derive(Debug, Clone, PartialEq)]
pub struct GenSpec {
    pub family: Family,
    pub seed: u64,
}

impl GenSpec {
    pub fn generate(&self) -> Result<Graph, GenError> {
        match self.family {
            Family::TriangleWithLeaves { d } => triangle_with_leaves(d),
            Family::Path { n } => path(n),
            Family::Cycle { n } => cycle(n),
            Family::Star { k } => star(k),
            Family::RandomTwoDegenerate { n, max_deg_cap } => {
                random_two_degenerate(n, max_deg_cap, self.seed)
            }
            Family::RandomTree { n } => random_tree(n, self.seed),
            Family::CompleteBipartiteTwo { m } => complete_bipartite_2m(m),
        }
    }
}

fn build(n: usize, pairs: &[(usize, usize)]) -> Graph {
    Graph::new(n, pairs).expect("generators emit simple graphs")
}

/// Triangle on `{0, 1, 2}` with `d − 2` leaves on each corner. Leaves are
/// numbered from 3, grouped by corner.
pub fn triangle_with_leaves(d: usize) -> Result<Graph, GenError> {
    if d < 2 {
        return Err(bad("triangle_with_leaves needs D >= 2"));
    }
    let mut pairs = vec![(0, 1), (1, 2), (0, 2)];
    let mut next = 3;
    for corner in 0..3 {
        for _ in 0..d - 2 {
            pairs.push((corner, next));
            next += 1;
        }
    }
    Ok(build(next, &pairs))
}

pub fn path(n: usize) -> Result<Graph, GenError> {
    if n < 2 {
        return Err(bad("path needs n >= 2"));
    }
    let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Ok(build(n, &pairs))
}

pub fn cycle(n: usize) -> Result<Graph, GenError> {
    if n < 3 {
        return Err(bad("cycle needs n >= 3"));
    }
    let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(build(n, &pairs))
}

/// `K_{1,k}` with center 0.
pub fn star(k: usize) -> Result<Graph, GenError> {
    if k < 1 {
        return Err(bad("star needs k >= 1"));
    }
    let pairs: Vec<_> = (1..=k).map(|i| (0, i)).collect();
    Ok(build(k + 1, &pairs))
}

/// `K_{2,m}`: vertices 0 and 1 on the small side, `2..m+2` on the other.
pub fn complete_bipartite_2m(m: usize) -> Result<Graph, GenError> {
    if m < 1 {
        return Err(bad("complete_bipartite_2m needs m >= 1"));
    }
    let pairs: Vec<_> = (2..m + 2).flat_map(|x| [(0, x), (1, x)]).collect();
    Ok(build(m + 2, &pairs))
}

/// Uniform random recursive tree: vertex `i` hangs off a uniform earlier one.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph, GenError> {
    if n < 1 {
        return Err(bad("random_tree needs n >= 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs: Vec<_> = (1..n).map(|i| (rng.gen_range(0..i), i)).collect();
    Ok(build(n, &pairs))
}

pub fn random_two_degenerate(n: usize, max_deg_cap: usize, seed: u64) -> Result<Graph, GenError> {
    random_two_degenerate_with(n, max_deg_cap, seed, AttachWeights::default())
}

/// Adds vertices one at a time, each joined to 0, 1 or 2 distinct earlier
/// vertices chosen uniformly among those still below `max_deg_cap`. Reversing
/// the insertion order peels the graph with degrees at most two, so the result
/// is 2-degenerate.
pub fn random_two_degenerate_with(
    n: usize,
    max_deg_cap: usize,
    seed: u64,
    weights: AttachWeights,
) -> Result<Graph, GenError> {
    if n < 1 {
        return Err(bad("random_two_degenerate needs n >= 1"));
    }
    if max_deg_cap < 2 {
        return Err(bad("random_two_degenerate needs max_deg_cap >= 2"));
    }
    let total: f64 = weights.0.iter().sum();
    if weights.0.iter().any(|w| !w.is_finite() || *w < 0.0) || total <= 0.0 {
        return Err(bad(
            "attachment weights must be non-negative with a positive sum",
        ));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut degree = vec![0usize; n];
    // vertices still below the cap, with their positions for O(1) removal
    let mut open: Vec<usize> = Vec::with_capacity(n);
    let mut slot: Vec<usize> = vec![usize::MAX; n];
    let mut pairs = Vec::new();

    for v in 0..n {
        let roll = rng.gen::<f64>() * total;
        let want = if roll < weights.0[0] {
            0
        } else if roll < weights.0[0] + weights.0[1] {
            1
        } else {
            2
        };
        let k = want.min(open.len());
        let picks: Vec<usize> = sample(&mut rng, open.len(), k)
            .iter()
            .map(|i| open[i])
            .collect();
        for u in picks {
            pairs.push((u, v));
            degree[u] += 1;
            degree[v] += 1;
            if degree[u] == max_deg_cap {
                let i = slot[u];
                let last = *open.last().unwrap();
                open.swap_remove(i);
                if last != u {
                    slot[last] = i;
                }
                slot[u] = usize::MAX;
            }
        }
        if degree[v] < max_deg_cap {
            slot[v] = open.len();
            open.push(v);
        }
    }
    Ok(build(n, &pairs))
}

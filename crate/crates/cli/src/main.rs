use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use strong_edge_core::format::{parse_edge_list, write_edge_list, ColoringDocument};
use strong_edge_core::generators::{Family, GenSpec};
use strong_edge_core::{
    exact_chi_s, strong_color, verify_all, Budget, ColorOptions, ColoringError, Graph, Verdict,
};

/// Strong edge-coloring of 2-degenerate graphs with at most 8Δ−4 colors.
#[derive(Debug, Parser)]
#[command(name = "strong-edge", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Color an edge list and print the self-verified coloring JSON.
    Color {
        /// Edge-list file, or `-` for stdin.
        #[arg(default_value = "-")]
        input: String,
        /// Palette parameter; defaults to the maximum degree.
        #[arg(long)]
        delta: Option<usize>,
        /// Re-check the coloring invariants after every reduction step.
        #[arg(long)]
        paranoid: bool,
        /// Print the reduction schedule to stderr.
        #[arg(long)]
        trace: bool,
        /// Write the JSON here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a coloring JSON against an edge list and print the verdict.
    Verify { graph: String, coloring: String },
    /// Compute the exact strong chromatic index of a small graph.
    Exact {
        #[arg(default_value = "-")]
        input: String,
        #[arg(long, default_value_t = 10_000_000)]
        budget_nodes: u64,
        #[arg(long, default_value_t = 30.0)]
        budget_secs: f64,
        /// Include an optimal coloring in the output.
        #[arg(long)]
        witness: bool,
    },
    /// Print a generated graph as an edge list.
    Gen {
        family: String,
        params: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Color and verify a batch of generated graphs, printing TSV.
    Bench {
        #[arg(
            long,
            value_delimiter = ',',
            default_value = "random_two_degenerate,random_tree"
        )]
        families: Vec<String>,
        /// Graphs per family.
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        max_n: usize,
        #[arg(long, default_value_t = 8)]
        max_delta: usize,
    },
}

/// Input problems exit with 2, failed checks with 1.
#[derive(Debug)]
enum Failure {
    Input(anyhow::Error),
    Check(String),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Input(e)
    }
}

fn read_input(path: &str) -> Result<String> {
    if path == "-" {
        let mut text = String::new();
        io::stdin()
            .read_to_string(&mut text)
            .context("reading stdin")?;
        Ok(text)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

fn read_graph(path: &str) -> Result<Graph> {
    parse_edge_list(&read_input(path)?).with_context(|| format!("parsing edge list {path}"))
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => io::stdout()
            .write_all(text.as_bytes())
            .context("writing stdout"),
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("plain data serializes") + "\n"
}

fn describe(verdict: &Verdict) -> String {
    let kinds: Vec<String> = verdict
        .violations
        .iter()
        .take(5)
        .map(|v| format!("{:?} on edges {:?}", v.kind, v.edges))
        .collect();
    format!(
        "{} violation(s): {}",
        verdict.violations.len(),
        kinds.join("; ")
    )
}

fn color(
    input: &str,
    delta: Option<usize>,
    paranoid: bool,
    trace: bool,
    out: Option<&PathBuf>,
) -> Result<(), Failure> {
    let g = read_graph(input)?;
    let options = ColorOptions {
        delta_param: delta,
        paranoid,
    };
    let outcome = match strong_color(&g, options) {
        Ok(o) => o,
        Err(
            e @ (ColoringError::NotTwoDegenerate
            | ColoringError::DeltaTooSmall { .. }
            | ColoringError::DegreeTooHigh { .. }),
        ) => return Err(Failure::Input(e.into())),
        Err(e) => return Err(Failure::Check(e.to_string())),
    };
    if trace {
        let mut err = io::stderr().lock();
        for step in &outcome.schedule.steps {
            let _ = writeln!(err, "{step}");
        }
    }
    let delta = outcome.coloring.delta_param();
    let verdict =
        verify_all(&g, &outcome.coloring, delta).map_err(|e| Failure::Check(e.to_string()))?;
    if !verdict.ok {
        return Err(Failure::Check(format!(
            "self-verification failed: {}",
            describe(&verdict)
        )));
    }
    let doc = ColoringDocument::new(&g, &outcome.coloring, Some(&outcome.stats));
    emit(&doc.to_json(), out)?;
    Ok(())
}

fn verify(graph: &str, coloring: &str) -> Result<(), Failure> {
    let g = read_graph(graph)?;
    let doc = ColoringDocument::from_json(&read_input(coloring)?)
        .with_context(|| format!("parsing coloring {coloring}"))?;
    let c = doc.to_coloring(&g).context("matching coloring to graph")?;
    let verdict = verify_all(&g, &c, doc.delta_param).context("checking coloring")?;
    emit(&to_json(&verdict), None)?;
    if verdict.ok {
        Ok(())
    } else {
        Err(Failure::Check(describe(&verdict)))
    }
}

#[derive(Serialize)]
struct ExactReport {
    chi_s: usize,
    lower_bound: usize,
    upper_bound: usize,
    nodes_explored: u64,
    budget_exhausted: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<ColoringDocument>,
}

fn exact(input: &str, nodes: u64, secs: f64, witness: bool) -> Result<(), Failure> {
    let g = read_graph(input)?;
    let max_time = Duration::try_from_secs_f64(secs).map_err(|_| {
        Failure::Input(anyhow::anyhow!(
            "--budget-secs must be a non-negative number"
        ))
    })?;
    let r = exact_chi_s(
        &g,
        Budget {
            max_nodes: nodes,
            max_time,
        },
    );
    let witness = witness.then(|| ColoringDocument::new(&g, &r.witness_coloring(&g), None));
    let report = ExactReport {
        chi_s: r.chi_s,
        lower_bound: r.lower_bound,
        upper_bound: r.upper_bound,
        nodes_explored: r.nodes_explored,
        budget_exhausted: r.budget_exhausted,
        witness,
    };
    emit(&to_json(&report), None)?;
    Ok(())
}

fn gen(family: &str, params: &[usize], seed: u64) -> Result<(), Failure> {
    let family = Family::parse(family, params).map_err(anyhow::Error::from)?;
    let g = GenSpec { family, seed }
        .generate()
        .map_err(anyhow::Error::from)?;
    emit(&write_edge_list(&g), None)?;
    Ok(())
}

/// Family parameters for one bench graph, drawn from its seed.
fn bench_family(name: &str, seed: u64, max_n: usize, max_delta: usize) -> Result<Family> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(2..=max_n.max(2));
    let d = rng.gen_range(2..=max_delta.max(2));
    let params: Vec<usize> = match name {
        "random_two_degenerate" => vec![n, d],
        "triangle_with_leaves" => vec![d - 1],
        "star" | "complete_bipartite_2m" => vec![d],
        "cycle" => vec![n.max(3)],
        _ => vec![n],
    };
    Ok(Family::parse(name, &params)?)
}

struct BenchRow {
    line: String,
    verified: bool,
}

fn bench_one(
    index: usize,
    name: &str,
    seed: u64,
    max_n: usize,
    max_delta: usize,
) -> Result<BenchRow> {
    let family = bench_family(name, seed, max_n, max_delta)?;
    let g = GenSpec { family, seed }.generate()?;
    let delta = g.max_degree();
    let (colors, omega, verified) = match strong_color(&g, ColorOptions::default()) {
        Ok(out) => {
            let ok = verify_all(&g, &out.coloring, out.coloring.delta_param())
                .map(|v| v.ok)
                .unwrap_or(false);
            (
                out.stats.colors_used.to_string(),
                out.stats.max_omega.to_string(),
                ok,
            )
        }
        Err(_) => ("-".into(), "-".into(), false),
    };
    let chi = if g.edge_count() <= 24 {
        let r = exact_chi_s(
            &g,
            Budget {
                max_nodes: 200_000,
                max_time: Duration::from_secs(2),
            },
        );
        if r.budget_exhausted {
            "-".to_string()
        } else {
            r.chi_s.to_string()
        }
    } else {
        "-".to_string()
    };
    Ok(BenchRow {
        line: format!(
            "{index}\t{name}\t{seed}\t{}\t{}\t{delta}\t{colors}\t{omega}\t{verified}\t{chi}",
            g.vertex_count(),
            g.edge_count()
        ),
        verified,
    })
}

fn bench(
    families: &[String],
    count: usize,
    seed: u64,
    max_n: usize,
    max_delta: usize,
) -> Result<(), Failure> {
    let jobs: Vec<(usize, &str)> = families
        .iter()
        .flat_map(|f| std::iter::repeat_n(f.as_str(), count))
        .enumerate()
        .collect();
    let rows: Vec<Result<BenchRow>> = jobs
        .par_iter()
        .map(|&(i, name)| bench_one(i, name, seed + i as u64, max_n, max_delta))
        .collect();
    let mut text =
        String::from("index\tfamily\tseed\tn\tm\tdelta\tcolors_used\tmax_omega\tverified\tchi_s\n");
    let mut failed = 0;
    for row in rows {
        let row = row?;
        failed += usize::from(!row.verified);
        text.push_str(&row.line);
        text.push('\n');
    }
    emit(&text, None)?;
    if failed == 0 {
        Ok(())
    } else {
        Err(Failure::Check(format!(
            "{failed} graph(s) failed verification"
        )))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Color {
            input,
            delta,
            paranoid,
            trace,
            out,
        } => color(input, *delta, *paranoid, *trace, out.as_ref()),
        Command::Verify { graph, coloring } => verify(graph, coloring),
        Command::Exact {
            input,
            budget_nodes,
            budget_secs,
            witness,
        } => exact(input, *budget_nodes, *budget_secs, *witness),
        Command::Gen {
            family,
            params,
            seed,
        } => gen(family, params, *seed),
        Command::Bench {
            families,
            count,
            seed,
            max_n,
            max_delta,
        } => bench(families, *count, *seed, *max_n, *max_delta),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(Failure::Check(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
    }
}

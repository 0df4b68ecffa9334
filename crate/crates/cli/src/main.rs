//! `leafspan` — generate extremal graph families, compute leaf spectra,
//! and produce replayable edge-exchange traces, all over plain edge-list
//! files and JSON reports.
//!
//! Exit codes: 0 success, 1 input or validation error, 2 infeasible
//! request (leaf count outside the spectrum, or a proven-nonexistent
//! tree), 3 search budget exhausted (result unknown). Failures emit a
//! JSON error record on stderr.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use leafspan_core::construct::{
    gen_counterexample, gen_gk, gen_platonic, gen_torus_grid, LabeledGraph, PlatonicSolid,
};
use leafspan_core::exchange::transform_sequence;
use leafspan_core::graph::{fundamental_cycle, Graph, SpanningTree};
use leafspan_core::report::{SpectrumDoc, TraceDoc};
use leafspan_core::spectrum::{
    check_stem_leaf_bound, compute_spectrum, find_hist, find_tree_with_k_leaves,
    leaf_spectrum_oracle,
};
use leafspan_core::{io as fmt, vertex_connectivity_at_least, Error};

const BUDGET_ENV: &str = "LEAFSPAN_BUDGET";

const EXIT_ERROR: u8 = 1;
const EXIT_INFEASIBLE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(name = "leafspan", version, about = "Spanning-tree leaf spectra", long_about = None)]
struct Cli {
    /// Enumeration/search budget (default 10^7; LEAFSPAN_BUDGET overrides).
    #[arg(long, global = true)]
    budget: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph family as an edge list plus a label sidecar.
    Gen {
        #[command(subcommand)]
        family: GenFamily,
    },
    /// Compute the leaf spectrum [min, max] with endpoint witnesses.
    Spectrum {
        #[command(flatten)]
        io: InputOutput,
    },
    /// Produce a spanning tree with exactly k leaves.
    Interpolate {
        #[command(flatten)]
        io: InputOutput,
        /// Requested leaf count.
        #[arg(long)]
        k: usize,
        /// Write the witness tree to the output path.
        #[arg(long)]
        emit_witness: bool,
    },
    /// Transform one spanning tree into another via unit-leaf-step
    /// exchanges; emits a replayable trace.
    Transform {
        #[command(flatten)]
        io: InputOutput,
        /// Start tree file (bound to the input graph).
        #[arg(long)]
        tree_a: PathBuf,
        /// Target tree file (bound to the input graph).
        #[arg(long)]
        tree_b: PathBuf,
    },
    /// Exhaustively enumerate spanning trees and report every achieved
    /// leaf count.
    Oracle {
        #[command(flatten)]
        io: InputOutput,
    },
    /// Find a spanning tree without degree-2 vertices, or prove there is
    /// none.
    Hist {
        #[command(flatten)]
        io: InputOutput,
    },
    /// Sample random subtrees of a 6-regular host and check
    /// leaves <= 2*stems + 4.
    CheckRemark1 {
        #[command(flatten)]
        io: InputOutput,
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Regenerate the 8-vertex counterexample and re-verify its
    /// published behavior.
    VerifyCounterexample,
}

#[derive(Subcommand)]
enum GenFamily {
    /// Stacked-cycle triangulation on 4k vertices.
    Gk {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        out: GenOutput,
    },
    /// The 8-vertex graph with no leaf-increasing first exchange; also
    /// writes its two trees as `<output>.tree-a` / `<output>.tree-b`.
    Counterexample {
        #[command(flatten)]
        out: GenOutput,
    },
    /// 6-regular triangulated torus grid.
    Torus {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
        #[command(flatten)]
        out: GenOutput,
    },
    /// Small platonic triangulation.
    Platonic {
        #[arg(long, value_enum)]
        name: SolidName,
        #[command(flatten)]
        out: GenOutput,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SolidName {
    Tetrahedron,
    Octahedron,
    Icosahedron,
}

impl From<SolidName> for PlatonicSolid {
    fn from(name: SolidName) -> Self {
        match name {
            SolidName::Tetrahedron => PlatonicSolid::Tetrahedron,
            SolidName::Octahedron => PlatonicSolid::Octahedron,
            SolidName::Icosahedron => PlatonicSolid::Icosahedron,
        }
    }
}

#[derive(Args)]
struct GenOutput {
    /// Output edge-list path; stdout when omitted (no sidecars then).
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Check connectivity of the generated graph.
    #[arg(long)]
    verify_connectivity: bool,
    /// Check that no vertex cut smaller than 4 exists (desk scale).
    #[arg(long)]
    verify_4_connectivity: bool,
}

#[derive(Args)]
struct InputOutput {
    /// Input graph edge-list file.
    #[arg(short, long)]
    input: PathBuf,
    /// Output path; stdout when omitted.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            let (code, kind) = classify(&err);
            let record = json!({ "error": { "kind": kind, "message": format!("{err:#}") } });
            eprintln!("{record}");
            ExitCode::from(code)
        }
    }
}

fn classify(err: &anyhow::Error) -> (u8, &'static str) {
    match err.downcast_ref::<Error>() {
        Some(Error::BudgetExceeded { .. }) => (EXIT_BUDGET, "budget_exceeded"),
        Some(Error::InfeasibleLeafCount { .. }) => (EXIT_INFEASIBLE, "infeasible"),
        Some(Error::Parse { .. }) => (EXIT_ERROR, "parse_error"),
        Some(Error::TreeHostHashMismatch { .. }) | Some(Error::MissingTreeHostHash) => {
            (EXIT_ERROR, "tree_host_mismatch")
        }
        Some(_) => (EXIT_ERROR, "invalid_input"),
        None => (EXIT_ERROR, "error"),
    }
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    let budget = resolve_budget(cli.budget)?;
    match cli.command {
        Command::Gen { family } => run_gen(family),
        Command::Spectrum { io } => {
            let g = load_graph(&io.input)?;
            let spectrum = compute_spectrum(&g, budget)?;
            emit(&io.output, &serde_json::to_string_pretty(&SpectrumDoc::new(&g, &spectrum))?)?;
            Ok(0)
        }
        Command::Oracle { io } => {
            let g = load_graph(&io.input)?;
            let spectrum = leaf_spectrum_oracle(&g, budget)?;
            emit(&io.output, &serde_json::to_string_pretty(&SpectrumDoc::new(&g, &spectrum))?)?;
            Ok(0)
        }
        Command::Interpolate { io, k, emit_witness } => {
            let g = load_graph(&io.input)?;
            let tree = find_tree_with_k_leaves(&g, k, budget)?;
            if emit_witness {
                match &io.output {
                    Some(path) => std::fs::write(path, fmt::write_tree(&tree))
                        .with_context(|| format!("writing {}", path.display()))?,
                    None => print!("{}", fmt::write_tree(&tree)),
                }
            }
            if !emit_witness || io.output.is_some() {
                let doc = json!({
                    "n": g.vertex_count(),
                    "k": k,
                    "leaf_count": tree.leaf_count(),
                    "witness_edges": tree.edges().iter().map(|e| e.endpoints()).collect::<Vec<_>>(),
                });
                println!("{doc:#}");
            }
            Ok(0)
        }
        Command::Transform { io, tree_a, tree_b } => {
            let g = load_graph(&io.input)?;
            let a = load_tree(&tree_a, &g)?;
            let b = load_tree(&tree_b, &g)?;
            let trace = transform_sequence(&g, &a, &b)?;
            emit(&io.output, &serde_json::to_string_pretty(&TraceDoc::from_trace(&trace))?)?;
            Ok(0)
        }
        Command::Hist { io } => {
            let g = load_graph(&io.input)?;
            match find_hist(&g, budget)? {
                Some(tree) => {
                    if let Some(path) = &io.output {
                        std::fs::write(path, fmt::write_tree(&tree))
                            .with_context(|| format!("writing {}", path.display()))?;
                    }
                    let doc = json!({
                        "status": "found",
                        "leaf_count": tree.leaf_count(),
                        "edges": tree.edges().iter().map(|e| e.endpoints()).collect::<Vec<_>>(),
                    });
                    println!("{doc:#}");
                    Ok(0)
                }
                None => {
                    println!("{:#}", json!({ "status": "none" }));
                    Ok(EXIT_INFEASIBLE)
                }
            }
        }
        Command::CheckRemark1 { io, trials, seed } => {
            let g = load_graph(&io.input)?;
            let report = check_stem_leaf_bound(&g, trials, seed)?;
            emit(&io.output, &serde_json::to_string_pretty(&report)?)?;
            if report.violations > 0 {
                bail!("{} bound violations observed", report.violations);
            }
            Ok(0)
        }
        Command::VerifyCounterexample => run_verify_counterexample(budget),
    }
}

fn run_gen(family: GenFamily) -> anyhow::Result<u8> {
    let (labeled, out, trees): (LabeledGraph, &GenOutput, Option<(SpanningTree, SpanningTree)>) =
        match &family {
            GenFamily::Gk { k, out } => (gen_gk(*k)?, out, None),
            GenFamily::Counterexample { out } => {
                let (lg, t, t_prime) = gen_counterexample();
                (lg, out, Some((t, t_prime)))
            }
            GenFamily::Torus { rows, cols, out } => (gen_torus_grid(*rows, *cols)?, out, None),
            GenFamily::Platonic { name, out } => (gen_platonic((*name).into()), out, None),
        };
    let g = &labeled.graph;
    if out.verify_connectivity && !g.is_connected() {
        bail!("generated graph failed the connectivity check");
    }
    let four_connected = if out.verify_4_connectivity {
        if !vertex_connectivity_at_least(g, 4) {
            bail!("generated graph has a vertex cut smaller than 4");
        }
        Some(true)
    } else {
        None
    };

    match &out.output {
        None => {
            print!("{}", fmt::write_graph(g));
        }
        Some(path) => {
            std::fs::write(path, fmt::write_graph(g))
                .with_context(|| format!("writing {}", path.display()))?;
            let label_path = sidecar(path, "labels");
            std::fs::write(&label_path, fmt::write_labels(&labeled.labels))
                .with_context(|| format!("writing {}", label_path.display()))?;
            let mut record = json!({
                "n": g.vertex_count(),
                "m": g.edge_count(),
                "output": path.display().to_string(),
                "labels": label_path.display().to_string(),
            });
            if let Some((t, t_prime)) = &trees {
                let a_path = sidecar(path, "tree-a");
                let b_path = sidecar(path, "tree-b");
                std::fs::write(&a_path, fmt::write_tree(t))?;
                std::fs::write(&b_path, fmt::write_tree(t_prime))?;
                record["tree_a"] = json!(a_path.display().to_string());
                record["tree_b"] = json!(b_path.display().to_string());
            }
            if let Some(fc) = four_connected {
                record["four_connected"] = json!(fc);
            }
            println!("{record:#}");
        }
    }
    Ok(0)
}

fn run_verify_counterexample(budget: u64) -> anyhow::Result<u8> {
    let (lg, t, t_prime) = gen_counterexample();
    let g = &lg.graph;
    let oracle = leaf_spectrum_oracle(g, budget)?;
    let mut exchanges = 0u64;
    let mut all_decrease = true;
    for e_in in g.edges().filter(|&e| !t.contains_edge(e)) {
        let cycle = fundamental_cycle(g, &t, e_in)?;
        for &e_out in &cycle[1..] {
            let next = leafspan_core::exchange::exchange_step(g, &t, e_in, e_out)?;
            exchanges += 1;
            if next.leaf_count() >= t.leaf_count() {
                all_decrease = false;
            }
        }
    }
    let checks = json!({
        "leaf_count_t": t.leaf_count(),
        "leaf_count_t_prime": t_prime.leaf_count(),
        "t_prime_is_maximum": oracle.max_leaves == t_prime.leaf_count(),
        "exchanges_checked": exchanges,
        "all_exchanges_decrease": all_decrease,
    });
    println!("{checks:#}");
    let ok = t.leaf_count() == 5
        && t_prime.leaf_count() == 6
        && oracle.max_leaves == 6
        && all_decrease;
    if !ok {
        bail!("counterexample verification failed: {checks}");
    }
    Ok(0)
}

fn resolve_budget(flag: Option<u64>) -> anyhow::Result<u64> {
    if let Some(b) = flag {
        if b == 0 {
            bail!("--budget must be positive");
        }
        return Ok(b);
    }
    match std::env::var(BUDGET_ENV) {
        Ok(raw) => {
            let b: u64 = raw
                .parse()
                .with_context(|| format!("{BUDGET_ENV} must be a positive integer, got `{raw}`"))?;
            if b == 0 {
                bail!("{BUDGET_ENV} must be positive");
            }
            Ok(b)
        }
        Err(_) => Ok(leafspan_core::DEFAULT_BUDGET),
    }
}

fn load_graph(path: &Path) -> anyhow::Result<Graph> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    let g = fmt::parse_graph(&text).with_context(|| format!("parsing {}", path.display()))?;
    Ok(g)
}

fn load_tree(path: &Path, host: &Graph) -> anyhow::Result<SpanningTree> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    let t = fmt::parse_tree(&text, host).with_context(|| format!("parsing {}", path.display()))?;
    Ok(t)
}

fn emit(output: &Option<PathBuf>, text: &str) -> anyhow::Result<()> {
    match output {
        None => {
            println!("{text}");
            Ok(())
        }
        Some(path) => std::fs::write(path, format!("{text}\n"))
            .with_context(|| format!("writing {}", path.display())),
    }
}

fn sidecar(path: &Path, suffix: &str) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(".");
    s.push(suffix);
    PathBuf::from(s)
}

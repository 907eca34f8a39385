//! `rainbow-kit`: command-line front end for the edge-colored graph
//! toolkit.
//!
//! Exit codes: 0 when the requested checks pass (or a query completed),
//! 1 when a verification found a violation or the prover failed under a
//! met hypothesis, 2 for usage and input errors.

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use rainbow_core::graph::{EdgeColoredGraph, VertexSet};
use rainbow_core::probe::{best_chain, run_probe_chains, ProbeConfig, ProbeInit};
use rainbow_core::verify::{
    run_property_suite, verify_cor_deltabound, verify_theorem_small,
};
use rainbow_core::{
    boost_min_color_degree, check_averaging_bound, edge_minimal_reduce, find_rainbow_cycle,
    rainbow_complete_bipartite, random_colored_graph, read_ecg_file, write_ecg_file,
    FinderConfig, FinderOutcome, RainbowWitness,
};
use serde::Serialize;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "rainbow-kit", version, about = "Rainbow cycles in edge-colored graphs")]
struct Cli {
    /// Seed for all randomized subcommands.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Emit JSON reports on stdout.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate instances in the .ecg format.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Edge-minimal reduction preserving the minimum color degree.
    Reduce {
        input: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Separation statistics and the exact averaging-bound report.
    Stats {
        input: PathBuf,
        /// Anchor vertex v.
        #[arg(long)]
        anchor: u32,
        /// File listing the vertices of X (whitespace-separated ids).
        #[arg(long)]
        set_file: PathBuf,
        /// Optional file listing Y; defaults to V minus the anchor.
        #[arg(long)]
        y_file: Option<PathBuf>,
        /// Report format.
        #[arg(long, value_enum)]
        report: Option<ReportFormat>,
    },
    /// Exact rainbow-cycle search.
    Find {
        input: PathBuf,
        /// Cycle length.
        #[arg(long)]
        ell: usize,
        /// Force the complete backtracking search (the default; present so
        /// scripts can be explicit about exactness).
        #[arg(long)]
        exact: bool,
        /// Count all rainbow cycles instead of returning one witness.
        #[arg(long)]
        count: bool,
    },
    /// Proof-guided extraction of a rainbow cycle.
    Prove {
        input: PathBuf,
        #[arg(long)]
        ell: usize,
        /// Write the full finder trace to this JSON file.
        #[arg(long)]
        trace: Option<PathBuf>,
        /// Disable the exact-oracle fallback on small graphs.
        #[arg(long)]
        no_fallback: bool,
    },
    /// Annealing probe for cycle-free colorings of high color degree.
    Probe {
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        n: usize,
        /// Annealing steps per chain.
        #[arg(long)]
        budget: usize,
        /// Independent chains.
        #[arg(long, default_value_t = 1)]
        chains: usize,
        #[arg(long, value_enum, default_value_t = InitKind::Bipartite)]
        init: InitKind,
        #[arg(long, value_enum)]
        report: Option<ReportFormat>,
    },
    /// Verification suites.
    Verify {
        #[command(subcommand)]
        suite: VerifySuite,
    },
}

#[derive(Subcommand)]
enum GenKind {
    /// Rainbow complete bipartite graph (the sharpness construction).
    Bipartite {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Random colored graph, optionally boosted to a minimum color degree.
    Random {
        #[arg(long)]
        n: usize,
        /// Edge probability.
        #[arg(long)]
        p: f64,
        /// Palette size for uniform colors.
        #[arg(long)]
        palette: usize,
        /// Boost the minimum color degree to this target with fresh-colored
        /// edges.
        #[arg(long)]
        boost: Option<usize>,
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Subcommand)]
enum VerifySuite {
    /// Boosted random instances must contain a rainbow ell-cycle.
    Theorem {
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        n_min: usize,
        #[arg(long)]
        n_max: usize,
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// Contrapositive of the n/2 + 3*ell color-degree bound.
    DeltaBound {
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        n_max: usize,
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// The full inequality property suite over a generated corpus.
    Properties,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InitKind {
    Bipartite,
    Random,
}

/// Envelope for JSON reports: carries the exact invocation for replay.
#[derive(Serialize)]
struct Envelope<T: Serialize> {
    invocation: Vec<String>,
    seed: u64,
    report: T,
}

fn emit_json<T: Serialize>(seed: u64, report: T) -> Result<()> {
    let envelope = Envelope { invocation: std::env::args().collect(), seed, report };
    println!("{}", serde_json::to_string_pretty(&envelope)?);
    Ok(())
}

fn load_graph(path: &Path) -> Result<EdgeColoredGraph> {
    read_ecg_file(path).with_context(|| format!("reading {}", path.display()))
}

fn load_vertex_set(path: &Path, n: usize) -> Result<VertexSet> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading vertex set {}", path.display()))?;
    let mut set = VertexSet::new(n);
    for token in text.split_whitespace() {
        let v: u32 = token
            .parse()
            .with_context(|| format!("invalid vertex id `{token}` in {}", path.display()))?;
        if v as usize >= n {
            bail!("vertex {v} out of range for a graph on {n} vertices");
        }
        set.insert(v);
    }
    Ok(set)
}

fn describe_witness(w: &RainbowWitness) -> String {
    let vertices: Vec<String> = w.vertices.iter().map(u32::to_string).collect();
    let colors: Vec<String> = w.colors.iter().map(u32::to_string).collect();
    format!("cycle: {}  colors: {}", vertices.join(" "), colors.join(" "))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global() {
            eprintln!("error: cannot configure {threads} threads: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    let seed = cli.seed;
    let json = cli.json;
    match cli.command {
        Command::Gen { kind } => {
            let (g, path) = match kind {
                GenKind::Bipartite { a, b, output } => {
                    if a == 0 || b == 0 {
                        bail!("both sides of the bipartition must be nonempty");
                    }
                    (rainbow_complete_bipartite(a, b), output)
                }
                GenKind::Random { n, p, palette, boost, output } => {
                    if !(0.0..=1.0).contains(&p) {
                        bail!("edge probability must lie in [0, 1]");
                    }
                    if palette == 0 {
                        bail!("palette must be nonempty");
                    }
                    let mut g = random_colored_graph(n, p, palette, seed);
                    if let Some(target) = boost {
                        g = boost_min_color_degree(&g, target, seed ^ 0xb005_7ed)
                            .context("boosting the minimum color degree")?;
                    }
                    (g, output)
                }
            };
            write_ecg_file(&path, &g).with_context(|| format!("writing {}", path.display()))?;
            println!(
                "wrote {}: n = {}, m = {}, palette = {}, delta_c = {}",
                path.display(),
                g.vertex_count(),
                g.edge_count(),
                g.palette_size(),
                if g.vertex_count() > 0 { g.min_color_degree() } else { 0 },
            );
            Ok(0)
        }

        Command::Reduce { input, output } => {
            let g = load_graph(&input)?;
            let h = edge_minimal_reduce(&g);
            write_ecg_file(&output, &h)
                .with_context(|| format!("writing {}", output.display()))?;
            println!(
                "reduced {} -> {} edges; delta_c = {} (preserved)",
                g.edge_count(),
                h.edge_count(),
                if h.vertex_count() > 0 { h.min_color_degree() } else { 0 },
            );
            Ok(0)
        }

        Command::Stats { input, anchor, set_file, y_file, report } => {
            let g = load_graph(&input)?;
            let n = g.vertex_count();
            if anchor as usize >= n {
                bail!("anchor {anchor} out of range for a graph on {n} vertices");
            }
            let x_set = load_vertex_set(&set_file, n)?;
            let y_set = match y_file {
                Some(path) => load_vertex_set(&path, n)?,
                None => {
                    let mut all = VertexSet::full(n);
                    all.remove(anchor);
                    all
                }
            };
            let rep = check_averaging_bound(&g, anchor, &x_set, &y_set)
                .context("separation report")?;
            if json || report == Some(ReportFormat::Json) {
                emit_json(seed, &rep)?;
            } else {
                println!(
                    "anchor {}: |X| = {}, |Y| = {}, R = {}, sigma_avg = {}/{}, rho_avg = {}/{}, \
                     rhs = {}/{} -> {}",
                    rep.anchor,
                    rep.x.len(),
                    rep.y.len(),
                    rep.replication,
                    rep.sigma_avg.num,
                    rep.sigma_avg.den,
                    rep.rho_avg.num,
                    rep.rho_avg.den,
                    rep.bound_rhs.num,
                    rep.bound_rhs.den,
                    if rep.holds { "holds" } else { "VIOLATED" },
                );
            }
            Ok(if rep.holds { 0 } else { 1 })
        }

        Command::Find { input, ell, exact: _, count } => {
            let g = load_graph(&input)?;
            if count {
                let total = rainbow_core::search::count_rainbow_cycles_parallel(&g, ell)?;
                if json {
                    emit_json(seed, serde_json::json!({ "ell": ell, "count": total }))?;
                } else {
                    println!("rainbow {ell}-cycles: {total}");
                }
            } else {
                let witness = rainbow_core::search::find_rainbow_cycle_exact_parallel(&g, ell)?;
                if json {
                    emit_json(seed, serde_json::json!({ "ell": ell, "witness": witness }))?;
                } else {
                    match &witness {
                        Some(w) => println!("{}", describe_witness(w)),
                        None => println!("no rainbow {ell}-cycle (exhaustive search)"),
                    }
                }
            }
            Ok(0)
        }

        Command::Prove { input, ell, trace, no_fallback } => {
            let g = load_graph(&input)?;
            let config = FinderConfig { fallback: !no_fallback, record_sets: trace.is_some(), ..FinderConfig::default() };
            let (witness, finder_trace) = find_rainbow_cycle(&g, ell, &config)?;
            if let Some(path) = trace {
                std::fs::write(&path, serde_json::to_string_pretty(&finder_trace)?)
                    .with_context(|| format!("writing trace {}", path.display()))?;
            }
            if json {
                emit_json(seed, &finder_trace)?;
            } else {
                match &finder_trace.outcome {
                    FinderOutcome::Found { witness, via_fallback } => {
                        println!(
                            "{} (case: {:?}{})",
                            describe_witness(witness),
                            finder_trace.case.expect("found implies a case"),
                            if *via_fallback { ", via exact fallback" } else { "" },
                        );
                    }
                    FinderOutcome::Exhausted { reason } => {
                        println!(
                            "exhausted: {reason} (delta_c = {}, hypothesis {})",
                            finder_trace.delta_c,
                            if finder_trace.hypothesis_met { "met" } else { "not met" },
                        );
                    }
                }
            }
            // Failing under a met hypothesis is an anomaly worth a nonzero
            // exit; ordinary exhaustion below the threshold is a result.
            Ok(if witness.is_none() && finder_trace.hypothesis_met { 1 } else { 0 })
        }

        Command::Probe { ell, n, budget, chains, init, report } => {
            if chains == 0 {
                bail!("at least one chain is required");
            }
            let init = match init {
                InitKind::Bipartite => ProbeInit::Bipartite,
                InitKind::Random => ProbeInit::Random,
            };
            let config = ProbeConfig::new(ell, n, budget, seed, init);
            let states = run_probe_chains(&config, chains);
            let best = best_chain(&states);
            if json || report == Some(ReportFormat::Json) {
                #[derive(Serialize)]
                struct ChainReport {
                    chain: usize,
                    seed: u64,
                    best_delta_c: Option<usize>,
                    steps: usize,
                }
                #[derive(Serialize)]
                struct ProbeReport {
                    ell: usize,
                    n: usize,
                    budget: usize,
                    chains: Vec<ChainReport>,
                    best_chain: Option<usize>,
                    best_delta_c: Option<usize>,
                }
                let chains: Vec<ChainReport> = states
                    .iter()
                    .enumerate()
                    .map(|(i, s)| ChainReport {
                        chain: i,
                        seed: s.config().seed,
                        best_delta_c: s.best_delta_c(),
                        steps: s.steps_taken(),
                    })
                    .collect();
                emit_json(
                    seed,
                    ProbeReport {
                        ell,
                        n,
                        budget,
                        chains,
                        best_chain: best,
                        best_delta_c: best.and_then(|i| states[i].best_delta_c()),
                    },
                )?;
            } else {
                for (i, state) in states.iter().enumerate() {
                    match state.best_delta_c() {
                        Some(d) => println!("chain {i}: best feasible delta_c = {d}"),
                        None => println!("chain {i}: no feasible coloring found"),
                    }
                }
                match best {
                    Some(i) => println!(
                        "best: chain {i} with delta_c = {}",
                        states[i].best_delta_c().expect("best chain is feasible"),
                    ),
                    None => println!("no chain found a feasible coloring"),
                }
            }
            Ok(0)
        }

        Command::Verify { suite } => match suite {
            VerifySuite::Theorem { ell, n_min, n_max, samples } => {
                if n_min < 3 {
                    bail!("n must be at least 3 for the boost target to be reachable");
                }
                let report = verify_theorem_small(ell, n_min..=n_max, samples, seed)?;
                let ok = report.all_found();
                if json {
                    emit_json(seed, &report)?;
                } else {
                    for e in &report.entries {
                        println!("n = {:2}: {}/{} instances have a rainbow {ell}-cycle", e.n, e.found, e.samples);
                    }
                    println!("{}", if ok { "all instances verified" } else { "VIOLATIONS found" });
                }
                Ok(if ok { 0 } else { 1 })
            }
            VerifySuite::DeltaBound { ell, n_max, samples } => {
                let report = verify_cor_deltabound(ell, n_max, samples, seed)?;
                let ok = report.violations.is_empty();
                if json {
                    emit_json(seed, &report)?;
                } else {
                    println!(
                        "checked {} / vacuous {} of {} samples; violations: {}",
                        report.checked,
                        report.vacuous,
                        report.samples,
                        report.violations.len(),
                    );
                }
                Ok(if ok { 0 } else { 1 })
            }
            VerifySuite::Properties => {
                let report = run_property_suite(seed);
                let ok = !report.has_failures();
                if json {
                    emit_json(seed, &report)?;
                } else {
                    println!("property suite over {} instances:", report.instances);
                    for (name, tally) in &report.tallies {
                        println!(
                            "  {name:>18}: pass {:4}  fail {:2}  vacuous {:4}",
                            tally.pass, tally.fail, tally.vacuous,
                        );
                    }
                    for failure in &report.failures {
                        eprintln!("FAILURE {}: {}", failure.check, failure.params);
                        eprintln!("{}", failure.ecg);
                    }
                }
                Ok(if ok { 0 } else { 1 })
            }
        },
    }
}

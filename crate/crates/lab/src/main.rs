use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ecclab::budget::TimeLimit;
use ecclab::certificate::{
    self, check_decomposition, check_solve, DecompositionCertificate, Problem, SolveCertificate,
};
use ecclab::dimacs::{format_catalog, read_graph, write_graph};
use ecclab::suites::{self, parse_range, Suite, SuiteParams};
use ecclab::tables::{growth_table, growth_tsv, sweep_tsv, GrowthConfig};
use ecclab::{LabError, Result};
use ecclab_core::cograph::{cograph_from_cotree, random_cotree};
use ecclab_core::edge_clique::{iterated_edge_clique, DEFAULT_VERTEX_BUDGET};
use ecclab_core::graph::{self, Graph};
use ecclab_core::rankwidth::{
    exact_rankwidth_guarded, greedy_rankwidth_upper_bound, linear_rankwidth_guarded, EXACT_GUARD, LINEAR_GUARD,
};
use ecclab_core::solvers::{
    chromatic_number_with, edge_clique_cover_with, max_independent_set_with, vertex_clique_cover_with,
};
use ecclab_core::sweep::{conjecture_sweep, SweepConfig};

/// Exact edge clique cover, clique cover and rankwidth experiments.
#[derive(Parser)]
#[command(name = "ecclab", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a graph file.
    Generate {
        #[command(subcommand)]
        kind: GenerateKind,
        #[arg(long, default_value_t = 0, global = true)]
        seed: u64,
        /// Defaults to standard output.
        #[arg(long, short, global = true)]
        output: Option<PathBuf>,
    },
    /// Graph transforms.
    Transform {
        #[command(subcommand)]
        kind: TransformKind,
    },
    /// Solve one problem exactly on a graph file.
    Solve(SolveArgs),
    /// Run a verification suite; exits 1 if any case fails.
    Verify(VerifyArgs),
    /// Re-verify a certificate against a graph file.
    Check {
        kind: CheckKind,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        certificate: PathBuf,
    },
    /// Print a table.
    Table {
        #[command(subcommand)]
        kind: TableKind,
    },
    /// Experiment sweeps.
    Sweep {
        #[command(subcommand)]
        kind: SweepKind,
    },
}

#[derive(Subcommand)]
enum GenerateKind {
    /// Cocktail party graph on 2N vertices.
    Cp {
        n: usize,
    },
    Complete {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Path {
        n: usize,
    },
    /// G(N, P) with the given --seed.
    Random {
        n: usize,
        p: f64,
    },
    /// Random cograph from a normalised cotree with the given --seed.
    Cograph {
        n: usize,
    },
}

#[derive(Subcommand)]
enum TransformKind {
    /// Edge-clique graph, optionally iterated.
    Ke {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: PathBuf,
        #[arg(long, default_value_t = 1)]
        iterate: usize,
        /// Where to write the vertex-to-edge catalog.
        #[arg(long)]
        catalog: Option<PathBuf>,
        /// Refuse to build a level with more vertices than this.
        #[arg(long, default_value_t = DEFAULT_VERTEX_BUDGET)]
        max_vertices: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SolveProblem {
    Alpha,
    Chi,
    Kappa,
    ThetaE,
    Rankwidth,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    Json,
}

#[derive(Args)]
struct SolveArgs {
    problem: SolveProblem,
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    certificate: Option<PathBuf>,
    /// Seconds; on expiry the best solution found is reported and the exit status is 3.
    #[arg(long)]
    time_limit: Option<f64>,
    /// Rankwidth by exact dynamic programming (default).
    #[arg(long, group = "rw_method")]
    exact: bool,
    /// Linear rankwidth by dynamic programming over vertex orders.
    #[arg(long, group = "rw_method")]
    linear: bool,
    /// Greedy upper bound; no size limit.
    #[arg(long, group = "rw_method")]
    greedy: bool,
    /// Size guard for the rankwidth dynamic programs.
    #[arg(long)]
    max_n: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Tsv)]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    suite: Suite,
    /// Range `a..b` of cocktail party orders (lemma-alpha, shearer).
    #[arg(long, value_parser = parse_range)]
    n: Option<std::ops::RangeInclusive<usize>>,
    /// Edge-clique iteration depth (shearer).
    #[arg(long)]
    r: Option<usize>,
    /// Corpus for theta-kappa; only `small` exists.
    #[arg(long, default_value = "small")]
    corpus: String,
    /// Random instances (correspondence, complement-gap) or subset samples (cut-rank).
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Seconds per solver call.
    #[arg(long)]
    time_limit: Option<f64>,
    #[arg(long, default_value_t = DEFAULT_VERTEX_BUDGET)]
    max_vertices: usize,
    #[arg(long, value_enum, default_value_t = Format::Tsv)]
    format: Format,
    /// Also write the JSON report here.
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckKind {
    Cover,
    Decomposition,
}

#[derive(Subcommand)]
enum TableKind {
    /// theta_e(cp(n)) against the logarithmic bound, with rankwidth of K_e(cp(n)).
    Growth {
        #[arg(long, value_parser = parse_range, default_value = "2..6")]
        n: std::ops::RangeInclusive<usize>,
        /// Exact rankwidth for K_e(cp(n)) up to this many vertices,
        #[arg(long, default_value_t = EXACT_GUARD)]
        max_n: usize,
        /// then linear rankwidth up to this many, then a greedy bound.
        #[arg(long, default_value_t = LINEAR_GUARD)]
        linear_max_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        time_limit: Option<f64>,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum SweepKind {
    /// Exact values over structured and random cographs.
    Cographs {
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long, default_value_t = 5)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Seconds per solver call; rows that hit it are marked `timeout`.
        #[arg(long)]
        time_limit: Option<f64>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn emit(output: Option<&Path>, text: &str) -> Result<()> {
    match output {
        Some(p) => fs::write(p, text).map_err(|e| LabError::Io { path: p.to_owned(), source: e }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(command: Command) -> Result<u8> {
    match command {
        Command::Generate { kind, seed, output } => {
            let g = match kind {
                GenerateKind::Cp { n } => graph::cocktail_party(n),
                GenerateKind::Complete { n } => graph::complete(n),
                GenerateKind::Cycle { n } => graph::cycle(n),
                GenerateKind::Path { n } => graph::path(n),
                GenerateKind::Random { n, p } => graph::random_graph(n, p, seed)?,
                GenerateKind::Cograph { n } => cograph_from_cotree(&random_cotree(n, seed)?)?,
            };
            match output {
                Some(p) => write_graph(&p, &g)?,
                None => print!("{}", ecclab::dimacs::format_graph(&g)),
            }
            Ok(0)
        }
        Command::Transform { kind: TransformKind::Ke { input, output, iterate, catalog, max_vertices } } => {
            let g = read_graph(&input)?;
            let chain = iterated_edge_clique(&g, iterate, max_vertices)?;
            write_graph(&output, chain.last())?;
            if let Some(c) = catalog {
                emit(Some(&c), &format_catalog(&chain))?;
            }
            Ok(0)
        }
        Command::Solve(args) => solve(args),
        Command::Verify(args) => verify(args),
        Command::Check { kind, input, certificate } => {
            let g = read_graph(&input)?;
            let check = match kind {
                CheckKind::Cover => check_solve(&g, &certificate::read_json(&certificate)?),
                CheckKind::Decomposition => check_decomposition(&g, &certificate::read_json(&certificate)?)?,
            };
            println!("{}\t{}", if check.valid { "PASS" } else { "FAIL" }, check.detail);
            Ok(if check.valid { 0 } else { 1 })
        }
        Command::Table { kind: TableKind::Growth { n, max_n, linear_max_n, seed, time_limit, output } } => {
            let rows = growth_table(n, GrowthConfig { rw_max_n: max_n, linear_max_n, seed, time_limit })?;
            emit(output.as_deref(), &growth_tsv(&rows))?;
            Ok(0)
        }
        Command::Sweep { kind: SweepKind::Cographs { max_n, samples, seed, out, time_limit } } => {
            let rows = conjecture_sweep(SweepConfig { max_n, samples, seed }, || TimeLimit::from_secs(time_limit))?;
            emit(out.as_deref(), &sweep_tsv(&rows))?;
            Ok(0)
        }
    }
}

/// Writes the summary line(s) and the certificate, then maps optimality to
/// the exit status.
fn finish(args: &SolveArgs, optimal: bool, tsv: String, cert: serde_json::Value) -> Result<u8> {
    match args.format {
        Format::Tsv => print!("{tsv}"),
        Format::Json => println!("{}", serde_json::to_string_pretty(&cert)?),
    }
    if let Some(p) = &args.certificate {
        certificate::write_json(p, &cert)?;
    }
    if !optimal {
        eprintln!("time limit reached; the reported value is the best found, not proved optimal");
    }
    Ok(if optimal { 0 } else { 3 })
}

fn solve(args: SolveArgs) -> Result<u8> {
    let g = read_graph(&args.input)?;
    let budget = TimeLimit::from_secs(args.time_limit);
    let start = Instant::now();
    let header = "problem\tobjective\tlower_bound\toptimal\tnodes\twall_ms\n";
    let (cert, optimal) = match args.problem {
        SolveProblem::Rankwidth => return solve_rankwidth(&args, &g),
        SolveProblem::Alpha => {
            let mut r = max_independent_set_with(&g, budget);
            r.wall_time = Some(start.elapsed());
            (SolveCertificate::independent_set(&g, &r), r.optimal)
        }
        SolveProblem::Chi => {
            let mut r = chromatic_number_with(&g, budget);
            r.wall_time = Some(start.elapsed());
            (SolveCertificate::coloring(&g, &r), r.optimal)
        }
        SolveProblem::Kappa => {
            let mut r = vertex_clique_cover_with(&g, budget);
            r.wall_time = Some(start.elapsed());
            (SolveCertificate::cover(Problem::Kappa, &g, &r), r.optimal)
        }
        SolveProblem::ThetaE => {
            let mut r = edge_clique_cover_with(&g, budget);
            r.wall_time = Some(start.elapsed());
            (SolveCertificate::cover(Problem::ThetaE, &g, &r), r.optimal)
        }
    };
    let tsv = format!(
        "{header}{}\t{}\t{}\t{}\t{}\t{:.3}\n",
        cert.problem.name(),
        cert.objective,
        cert.lower_bound,
        cert.optimal,
        cert.nodes_explored,
        cert.wall_time_ms
    );
    finish(&args, optimal, tsv, serde_json::to_value(&cert)?)
}

fn solve_rankwidth(args: &SolveArgs, g: &Graph) -> Result<u8> {
    let start = Instant::now();
    let (method, d) = if args.greedy {
        ("greedy", greedy_rankwidth_upper_bound(g, args.seed).decomposition)
    } else if args.linear {
        ("linear", linear_rankwidth_guarded(g, args.max_n.unwrap_or(LINEAR_GUARD))?.decomposition())
    } else {
        ("exact", exact_rankwidth_guarded(g, args.max_n.unwrap_or(EXACT_GUARD))?.decomposition)
    };
    let cert = DecompositionCertificate::new(g, method, &d);
    let tsv = format!(
        "problem\tmethod\twidth\twall_ms\nrankwidth\t{method}\t{}\t{:.3}\n",
        d.width,
        start.elapsed().as_secs_f64() * 1e3
    );
    finish(args, true, tsv, serde_json::to_value(&cert)?)
}

fn verify(args: VerifyArgs) -> Result<u8> {
    if args.corpus != "small" {
        return Err(LabError::Usage(format!("unknown corpus {:?}; only `small` is available", args.corpus)));
    }
    let mut p = SuiteParams::defaults(args.suite);
    if let Some(n) = args.n {
        p.n = n;
    }
    if let Some(r) = args.r {
        p.r = r;
    }
    if let Some(s) = args.samples {
        p.samples = s;
    }
    p.seed = args.seed;
    p.time_limit = args.time_limit;
    p.max_vertices = args.max_vertices;
    let report = suites::run(args.suite, &p)?;
    match args.format {
        Format::Tsv => print!("{}", report.to_tsv()),
        Format::Json => println!("{}", serde_json::to_string_pretty(&report)?),
    }
    if let Some(path) = &args.report {
        certificate::write_json(path, &report)?;
    }
    Ok(if report.pass { 0 } else { 1 })
}

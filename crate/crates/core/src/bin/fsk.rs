//! `fsk`: construct, verify and analyse maximal `F_{s,k}`-free graphs.
//!
//! Exit status: 0 when every gating check passes, 1 when one fails, 2 on a
//! usage or I/O error. The JSON report goes to stdout.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use fsk::commands::{
    cmd_construct, cmd_max_bipartite, cmd_pattern, cmd_stability, cmd_verify, parse_count,
    read_graph, CommandError, ConstructArgs, StabilityArgs, VerifyArgs, VerifyCheck,
};
use fsk::construction::{Alpha, ConstructionLayout};
use fsk::report::ExperimentReport;

#[derive(Parser)]
#[command(name = "fsk", version, about)]
struct Cli {
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Directory for artifacts and report.json.
    #[arg(long, short, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write F_{s,k} as graph6 and check its order, size and chromatic numbers.
    Pattern {
        #[arg(short)]
        s: usize,
        #[arg(short)]
        k: usize,
    },
    /// Build the minimum construction member, optionally saturated.
    Construct {
        #[arg(short)]
        n: usize,
        #[arg(short)]
        s: usize,
        #[arg(short)]
        k: usize,
        /// Exact rational p/q.
        #[arg(long, value_parser = parse_alpha)]
        alpha: Alpha,
        #[arg(long)]
        saturate: bool,
    },
    /// Run the verification checks on a graph.
    Verify {
        /// graph6 or edge-list file.
        input: PathBuf,
        /// freeness, maximality, biclique or certificate; repeatable.
        #[arg(long = "check", required = true, value_parser = parse_check)]
        checks: Vec<VerifyCheck>,
        #[arg(short, default_value_t = 2)]
        s: usize,
        #[arg(short, default_value_t = 2)]
        k: usize,
        /// Branch-and-bound node limit, e.g. 10^7.
        #[arg(long, value_parser = parse_count, default_value = "10^8")]
        budget: u64,
        /// Upper limit the biclique bound must respect.
        #[arg(long)]
        ceiling: Option<usize>,
        /// Layout JSON written by `construct`, for the certificate check.
        #[arg(long)]
        layout: Option<PathBuf>,
    },
    /// Extract a complete bipartite core from a maximal F_{s,k}-free graph.
    Stability {
        input: PathBuf,
        #[arg(short, default_value_t = 2)]
        s: usize,
        #[arg(short, default_value_t = 2)]
        k: usize,
        /// Enables the deletion bound report.
        #[arg(long, value_parser = parse_alpha)]
        alpha: Option<Alpha>,
        #[arg(long)]
        ceiling: Option<usize>,
    },
    /// Maximum induced complete bipartite subgraph.
    MaxBipartite {
        input: PathBuf,
        #[arg(long, value_parser = parse_count, default_value = "10^8")]
        budget: u64,
        #[arg(long)]
        ceiling: Option<usize>,
    },
}

fn parse_alpha(s: &str) -> Result<Alpha, String> {
    s.parse()
}

fn parse_check(s: &str) -> Result<VerifyCheck, String> {
    s.parse()
}

fn run(cli: Cli) -> Result<ExperimentReport, CommandError> {
    if let Some(t) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| CommandError::Usage(e.to_string()))?;
    }
    let out = cli.out.as_deref();
    match cli.command {
        Command::Pattern { s, k } => cmd_pattern(s, k, out),
        Command::Construct { n, s, k, alpha, saturate } => {
            cmd_construct(ConstructArgs { n, s, k, alpha, saturate }, out)
        }
        Command::Verify { input, checks, s, k, budget, ceiling, layout } => {
            let g = read_graph(&input)?;
            let layout = match layout {
                Some(p) => {
                    let text = std::fs::read_to_string(&p)
                        .map_err(|e| CommandError::Io(format!("{}: {e}", p.display())))?;
                    let l: ConstructionLayout = serde_json::from_str(&text)
                        .map_err(|e| CommandError::Io(format!("{}: {e}", p.display())))?;
                    Some(l)
                }
                None => None,
            };
            cmd_verify(&g, &VerifyArgs { checks, s, k, budget, ceiling, layout }, out)
        }
        Command::Stability { input, s, k, alpha, ceiling } => {
            let g = read_graph(&input)?;
            cmd_stability(&g, StabilityArgs { s, k, seed: cli.seed, alpha, ceiling }, out)
        }
        Command::MaxBipartite { input, budget, ceiling } => {
            let g = read_graph(&input)?;
            cmd_max_bipartite(&g, budget, ceiling, out)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(report) => {
            let json = serde_json::to_string_pretty(&report).expect("report serializes");
            if let Err(e) = writeln!(std::io::stdout(), "{json}") {
                if e.kind() != std::io::ErrorKind::BrokenPipe {
                    eprintln!("fsk: {e}");
                    return ExitCode::from(2);
                }
            }
            for c in report.checks.iter().filter(|c| !c.passed) {
                let kind = if c.gating { "FAIL" } else { "note" };
                eprintln!("{kind}: {}", c.name);
            }
            if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("fsk: {e}");
            ExitCode::from(2)
        }
    }
}

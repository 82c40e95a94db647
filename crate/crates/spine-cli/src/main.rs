use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use spine_cli::pipeline::{run, CommandKind, RunConfig, VisitOrder};

/// Reduce an undirected network to its irreducible spine and analyze it:
/// chordless-cycle signatures, centers, and spine-based diameter estimates.
#[derive(Parser)]
#[command(name = "spine", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reduce the network and summarize the spine (τ counts, iterations)
    Reduce(CommonArgs),
    /// Chordless k-cycle histogram of the spine, with major-cycle overlap
    Signature(CommonArgs),
    /// Distance/betweenness centers, balance conditions, spine containment
    Centers(CommonArgs),
    /// Spine diameter and the pendant-adjusted diameter estimate
    Diameter(CommonArgs),
    /// Check that the input is an irreducible spine and that reduction
    /// invariants hold on it (exit 2 on any failure)
    Verify(CommonArgs),
    /// Full pipeline: reduce, signature, centers, diameter, JSON report
    Report(CommonArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Edge-list file: two labels per line, `#` comments, `node <label>`
    /// for isolated nodes
    input: PathBuf,

    /// Longest cycle length to search for (≥ 3)
    #[arg(long, default_value_t = 32)]
    max_k: usize,

    /// Node visit order for the reduction: `ascending` or `seed:<integer>`
    #[arg(long, default_value = "ascending")]
    visit_order: String,

    /// Also compute the exact diameter of the original graph (repeated BFS)
    #[arg(long)]
    exact: bool,

    /// Write the JSON report here (the `report` command prints to stdout
    /// when this is omitted)
    #[arg(long)]
    report: Option<PathBuf>,

    /// Write a DOT rendering of the spine here (survivors labeled `id:τ`)
    #[arg(long)]
    dot: Option<PathBuf>,

    /// Embolden a major cycle in the DOT output, e.g. `longest:0`
    #[arg(long)]
    highlight: Option<String>,
}

fn build_config(kind: CommandKind, args: CommonArgs) -> Result<RunConfig, String> {
    let mut config = RunConfig::new(args.input, kind);
    config.max_k = args.max_k;
    config.visit_order = VisitOrder::parse(&args.visit_order)?;
    config.exact_diameter = args.exact;
    config.report_path = args.report;
    config.dot_path = args.dot;
    config.highlight = match args.highlight.as_deref() {
        None => None,
        Some(s) => match s.strip_prefix("longest:").map(str::parse) {
            Some(Ok(i)) => Some(i),
            _ => {
                return Err(format!(
                    "--highlight must look like 'longest:<index>', got '{s}'"
                ))
            }
        },
    };
    config.threads = match std::env::var("SPINE_THREADS") {
        Err(_) => 1,
        Ok(v) => v
            .parse()
            .map_err(|_| format!("SPINE_THREADS must be a positive integer, got '{v}'"))
            .and_then(|t: usize| {
                if t >= 1 {
                    Ok(t)
                } else {
                    Err("SPINE_THREADS must be ≥ 1".to_string())
                }
            })?,
    };
    Ok(config)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (kind, args) = match cli.command {
        Command::Reduce(a) => (CommandKind::Reduce, a),
        Command::Signature(a) => (CommandKind::Signature, a),
        Command::Centers(a) => (CommandKind::Centers, a),
        Command::Diameter(a) => (CommandKind::Diameter, a),
        Command::Verify(a) => (CommandKind::Verify, a),
        Command::Report(a) => (CommandKind::Report, a),
    };
    let config = match build_config(kind, args) {
        Ok(c) => c,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(1);
        }
    };
    let mut stdout = std::io::stdout().lock();
    match run(&config, &mut stdout) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}

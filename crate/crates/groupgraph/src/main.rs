//! Command-line driver; the real work lives in [`groupgraph::cli`].

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use groupgraph::cli::{
    execute, GraphChoice, IdentityChoice, OutputFormat, RunCommand, RunConfig,
};
use groupgraph::invariants::PerfectnessParams;

#[derive(Parser)]
#[command(
    name = "groupgraph",
    version,
    about = "Build, measure and check graphs defined on finite groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    output: Option<PathBuf>,

    /// Reject groups larger than this before building anything
    /// (default: the GROUPGRAPH_MAX_ORDER environment variable, then 2000).
    #[arg(long, global = true, value_name = "N")]
    max_group_order: Option<u64>,

    /// Longest hole the perfectness probe searches for.
    #[arg(long, global = true, default_value_t = 9, value_name = "LEN")]
    probe_hole_length: usize,

    /// Number of induced subgraphs the perfectness probe samples.
    #[arg(long, global = true, default_value_t = 200, value_name = "COUNT")]
    probe_samples: u32,

    /// Largest induced subgraph the probe samples.
    #[arg(long, global = true, default_value_t = 12, value_name = "SIZE")]
    probe_sample_size: usize,

    /// Seed for the probe's sampler.
    #[arg(long, global = true, default_value_t = 0x6772_6772, value_name = "SEED")]
    probe_seed: u64,
}

#[derive(Subcommand)]
enum Cmd {
    /// Emit one graph of one group as DOT or JSON.
    Build {
        /// Group spec, e.g. C12, D8, Q16, S4, A5, E3^2, C2xS3, C7:C3.
        group: String,
        /// Which graph of the group to build.
        #[arg(long, value_enum, default_value_t = GraphChoice::Power)]
        graph: GraphChoice,
        /// Keep or drop the identity vertex (default: keep).
        #[arg(long, value_enum)]
        identity: Option<IdentityChoice>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Dot)]
        format: OutputFormat,
    },
    /// Report clique, chromatic, independence and domination numbers,
    /// diameter, components and a perfectness probe for one graph.
    Invariants {
        /// Group spec, e.g. C12, D8, Q16, S4, A5, E3^2, C2xS3, C7:C3.
        group: String,
        /// Which graph of the group to measure.
        #[arg(long, value_enum, default_value_t = GraphChoice::Power)]
        graph: GraphChoice,
        /// Keep or drop the identity vertex (default: keep).
        #[arg(long, value_enum)]
        identity: Option<IdentityChoice>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
    },
    /// Check the structure theorems on one group; exits 1 if any fail.
    Verify {
        /// Group spec, e.g. C12, D8, Q16, S4, A5, E3^2, C2xS3, C7:C3.
        group: String,
        /// Comma-separated theorem ids, or "all".
        #[arg(long, default_value = "all")]
        theorems: String,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
    },
    /// Sweep the built-in group catalog: one CSV row per group and
    /// graph kind (power, enhanced, commuting).
    Catalog {
        /// Largest group order to include (at most 100).
        #[arg(long, default_value_t = 64)]
        max_order: u64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let probe = PerfectnessParams {
        max_hole_length: cli.probe_hole_length,
        samples: cli.probe_samples,
        max_sample_size: cli.probe_sample_size,
        seed: cli.probe_seed,
    };
    let command = match cli.command {
        Cmd::Build { group, graph, identity, format } => {
            RunCommand::Build { group, graph, identity, format }
        }
        Cmd::Invariants { group, graph, identity, format } => {
            RunCommand::Invariants { group, graph, identity, format }
        }
        Cmd::Verify { group, theorems, format } => RunCommand::Verify { group, theorems, format },
        Cmd::Catalog { max_order, format } => RunCommand::Catalog { max_order, format },
    };
    let config = RunConfig { command, probe, size_guard: cli.max_group_order };
    let outcome = match execute(&config) {
        Ok(outcome) => outcome,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    if let Some(path) = cli.output {
        if let Err(e) = std::fs::write(&path, &outcome.rendered) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    } else {
        print!("{}", outcome.rendered);
    }
    ExitCode::from(u8::try_from(outcome.exit_code).unwrap_or(1))
}

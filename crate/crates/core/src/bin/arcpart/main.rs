//! Command-line front end: reproducible verification runs over the series,
//! partition, and Groebner layers, with machine-readable reports.

mod gb;
mod identity;
mod partitions_cmd;
mod report;
mod series;
mod witness;

use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "arcpart",
    version,
    about = "Weight-truncated Groebner bases of arc-space ideals and partition identity cross-checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify a partition identity on a range, on three routes at once.
    Identity(identity::Args),
    /// Run the truncated Buchberger pipeline for one of the two ideals and
    /// compare the initial ideal against its expected pattern.
    Gb(gb::Args),
    /// Build the F-family chain and the non-differential-finiteness witness.
    Witness(witness::Args),
    /// Print or serialize one of the closed-form series.
    Series(series::Args),
    /// Enumerate or count a constrained partition family.
    Partitions(partitions_cmd::Args),
}

fn main() {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Identity(args) => identity::run(&args),
        Command::Gb(args) => gb::run(&args),
        Command::Witness(args) => witness::run(&args),
        Command::Series(args) => series::run(&args),
        Command::Partitions(args) => partitions_cmd::run(&args),
    };
    match outcome {
        Ok(true) => {}
        Ok(false) => std::process::exit(1),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
    }
}

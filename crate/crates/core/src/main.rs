use clap::Parser;
use richardson::cli::{run, Cli};

fn main() {
    std::process::exit(run(Cli::parse()));
}

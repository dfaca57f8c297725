use clap::Parser;

use hybridcm_cli::{finish, run, Cli};

fn main() {
    let cli = Cli::parse();
    let outcome = run(&cli);
    std::process::exit(finish(&cli, outcome));
}

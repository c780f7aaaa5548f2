use clap::Parser;
use dsburgers::cli;

fn main() {
    let args = cli::Args::parse();
    if let Err(err) = cli::execute(args) {
        eprintln!("error: {err}");
        std::process::exit(err.exit_code());
    }
}

use clap::Parser;

use codeal::cli::{run, RunConfig};

fn main() {
    let config = RunConfig::parse();
    match run(&config) {
        Ok(outcome) => {
            print!("{}", outcome.text);
            std::process::exit(if outcome.ok { 0 } else { 1 });
        }
        Err(e) => {
            eprintln!("{}", e.reason_line());
            std::process::exit(1);
        }
    }
}

#![forbid(unsafe_code)]

use clap::Parser;

use antichain_spectra::cli::{run, Cli};

fn main() {
    let cli = Cli::parse();
    if let Err(e) = run(cli) {
        let payload = serde_json::json!({
            "error": {"kind": e.kind(), "exit": e.exit_code(), "message": e.to_string()}
        });
        eprintln!("{payload}");
        std::process::exit(e.exit_code() as i32);
    }
}

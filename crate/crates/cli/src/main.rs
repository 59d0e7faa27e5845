use std::io::Write;

use clap::Parser;
use irregwalk_cli::{run, Cli};

fn init_workers() {
    let Ok(raw) = std::env::var("IRREGWALK_WORKERS") else {
        return;
    };
    match raw.trim().parse::<usize>() {
        Ok(n) if n > 0 => {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
        _ => eprintln!("warning: ignoring IRREGWALK_WORKERS={raw:?}"),
    }
}

fn main() {
    let cli = Cli::parse();
    init_workers();
    let out = run(cli);
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    let _ = std::io::stdout().flush();
    std::process::exit(out.code);
}

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};

use coalg_lab::{explain, load_spec, run_spec, Options};

#[derive(Parser)]
#[command(name = "coalg-lab", version, about = "Build coalgebras and check their coideal lattices")]
struct Cli {
    /// Maximum number of vectors an exhaustive enumeration may visit.
    #[arg(long, global = true)]
    budget: Option<u64>,

    /// Largest degree factored over Q.
    #[arg(long, global = true)]
    degree_cap: Option<usize>,

    /// Directory for the report and DOT files; without it the report goes to stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every construction and analysis in a spec file.
    Run { spec: PathBuf },
    /// Parse and validate a spec file without running it.
    Validate { spec: PathBuf },
    /// Describe a construction kind or analysis check.
    Explain { kind: String },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let opts = Options {
        budget: cli.budget,
        degree_cap: cli.degree_cap,
        out: cli.out,
    };
    let code = match cli.command {
        Command::Run { spec } => {
            let start = Instant::now();
            match run_spec(&spec, &opts) {
                Ok(report) => {
                    if opts.out.is_none() {
                        print!("{}", report.to_json());
                    }
                    eprintln!("{:?} in {:.2?}", report.status, start.elapsed());
                    report.exit_code
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    e.exit_code()
                }
            }
        }
        Command::Validate { spec } => match load_spec(&spec) {
            Ok(v) => {
                println!(
                    "ok: {} constructions, {} analyses",
                    v.spec.constructions.len(),
                    v.spec.analyses.len()
                );
                0
            }
            Err(e) => {
                eprintln!("error: {e}");
                e.exit_code()
            }
        },
        Command::Explain { kind } => match explain(&kind) {
            Some(text) => {
                print!("{text}");
                0
            }
            None => {
                eprintln!("error: unknown construction kind or check {kind:?}");
                2
            }
        },
    };
    ExitCode::from(code as u8)
}

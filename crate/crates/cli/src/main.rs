use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use cayley_cli::points::read_point_list;
use cayley_cli::{emit_report, run_suite, Format, SuiteName};

/// Verify split-octonion identities and the nearly (para-)Kähler
/// structures on the pseudospheres of signature (2,4) and (3,3).
#[derive(Parser, Debug)]
#[command(name = "cayley", version)]
struct Args {
    /// Suite to run.
    #[arg(long, value_enum, default_value_t = SuiteName::All)]
    suite: SuiteName,
    /// Sample size; each suite scales its evaluation counts from this.
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Point-list file replacing the sampled sphere points.
    #[arg(long, value_name = "FILE")]
    points: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(&args) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(args: &Args) -> Result<bool, Box<dyn std::error::Error>> {
    let points = args.points.as_deref().map(read_point_list).transpose()?;
    let report = run_suite(args.suite, args.trials, args.seed, points.as_ref())?;
    let text = emit_report(&report, args.format);
    match &args.out {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(report.passed())
}

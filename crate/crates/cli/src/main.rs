//! minfix: build primitive permutation actions, search for small-fix
//! witnesses, run the bound sweeps, and run the prime-density experiment.

mod args;
mod commands;
mod groupfile;
mod polyparse;
mod report;

use std::time::Instant;

use args::Args;
use commands::CliError;

const USAGE: &str = "\
minfix <command> [flags]

commands:
  verify      --group FILE [--mode exhaustive|classes|random] [--strict] [--jobs K]
  census      [--max-degree N] [--order-cap M] [--jobs K]
  bounds      --sweep
  polydensity --poly \"x^3-2\" [--bound 100000] [--jobs K]
  witness     --case intransitive|imprimitive|affine|product|diagonal|parabolic
              [--n N] [--k K] [--t T] [--d D] [--p P] [--m M] [--s A5|A6|A7]

common flags:
  --format json|table   (default table)

environment:
  MINFIX_SEED           overrides the default RNG seed
";

fn main() {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    if argv.is_empty() || argv[0] == "--help" || argv[0] == "-h" {
        eprint!("{USAGE}");
        std::process::exit(2);
    }
    let args = match Args::parse(&argv) {
        Ok(a) => a,
        Err(e) => {
            eprintln!("error: {}", e.0);
            eprint!("{USAGE}");
            std::process::exit(2);
        }
    };
    let format = args.get("format").unwrap_or("table").to_string();
    if format != "table" && format != "json" {
        eprintln!("error: --format must be json or table");
        std::process::exit(2);
    }
    let start = Instant::now();
    let result = match args.command.as_str() {
        "verify" => commands::cmd_verify(&args),
        "census" => commands::cmd_census(&args),
        "bounds" => commands::cmd_bounds(&args),
        "polydensity" => commands::cmd_polydensity(&args),
        "witness" => commands::cmd_witness(&args),
        other => {
            eprintln!("error: unknown command '{other}'");
            eprint!("{USAGE}");
            std::process::exit(2);
        }
    };
    match result {
        Ok((mut report, code)) => {
            report.timing_ms = start.elapsed().as_millis();
            report.print(&format);
            std::process::exit(code);
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            std::process::exit(2);
        }
        Err(CliError::Failure(msg)) => {
            eprintln!("{msg}");
            std::process::exit(1);
        }
    }
}

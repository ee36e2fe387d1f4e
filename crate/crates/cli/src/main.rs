use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use hyperverify::runner::{load_config, run_config};
use hyperverify::{build_table, format_rational, parse_rational, selftest, CliError};
use hyperverify_core::exact::int;
use hyperverify_core::identities::Part;

#[derive(Parser)]
#[command(
    name = "hyperverify",
    version,
    about = "Exact verification of hypergeometric identity suites"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct TableChoice {
    /// Use the coefficient table with the corrected B row for j = -5.
    #[arg(long)]
    amended_table: bool,
    /// Add a constant to one table row, `j:A|B:p/q` (mutation testing).
    #[arg(long, hide = true, allow_hyphen_values = true)]
    perturb: Vec<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Run the checks described by a JSON sweep configuration.
    Run {
        #[arg(long)]
        config: PathBuf,
        /// Write the report here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[command(flatten)]
        table: TableChoice,
    },
    /// Run the built-in acceptance grids.
    Selftest {
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[command(flatten)]
        table: TableChoice,
    },
    /// Print the table rows A_j and B_j and their values at (b, n).
    Table {
        #[arg(long, allow_hyphen_values = true)]
        j: i64,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long)]
        n: i64,
        #[command(flatten)]
        table: TableChoice,
    },
}

fn execute(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Run {
            config,
            out,
            jobs,
            table,
        } => {
            let table = build_table(table.amended_table, &table.perturb)?;
            let report = run_config(&load_config(&config)?, table, jobs)?;
            let body = report.to_json();
            match out {
                Some(path) => std::fs::write(&path, body)
                    .map_err(|source| CliError::ReportWrite { path, source })?,
                None => print!("{body}"),
            }
            let s = report.summary;
            eprintln!(
                "passed={} failed={} errored={} skipped={}",
                s.passed, s.failed, s.errored, s.skipped
            );
            Ok(s.exit_code())
        }
        Command::Selftest { jobs, table } => {
            let table = build_table(table.amended_table, &table.perturb)?;
            let results = selftest::run_all(&table, jobs)?;
            print!("{}", selftest::render(&results));
            Ok(selftest::exit_code(&results))
        }
        Command::Table { j, b, n, table } => {
            let table = build_table(table.amended_table, &table.perturb)?;
            let b = parse_rational(&b).map_err(CliError::Argument)?;
            let arg = |e: hyperverify_core::Error| CliError::Argument(e.to_string());
            for part in [Part::A, Part::B] {
                let row = table.row(j, part).map_err(arg)?;
                let value = match part {
                    Part::A => table.a(j, &b, &int(n)),
                    Part::B => table.b(j, &b, &int(n)),
                }
                .map_err(arg)?;
                println!("{}_{j}(b, n) = {row}", part.name());
                println!(
                    "{}_{j}({}, {n}) = {}",
                    part.name(),
                    format_rational(&b),
                    format_rational(&value)
                );
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

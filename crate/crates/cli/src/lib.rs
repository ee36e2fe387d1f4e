//! Batch driver around `hyperverify-core`: JSON sweep configurations in,
//! deterministic JSON reports out, plus the built-in self-test suite.

pub mod config;
pub mod report;
pub mod runner;
pub mod selftest;

use std::path::PathBuf;

use hyperverify_core::exact::Rational;
use hyperverify_core::identities::{CoeffTable, Part};

/// Failures that end the process with exit code 2.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read config {path}: {source}")]
    ConfigRead {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("invalid config: {0}")]
    ConfigParse(String),
    #[error("cannot write report {path}: {source}")]
    ReportWrite {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("cannot start worker pool: {0}")]
    Pool(String),
}

/// Parses `p/q` or `p`; the denominator must be nonzero.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    s.trim()
        .parse::<Rational>()
        .map_err(|e| format!("{s:?} is not a rational: {e}"))
}

/// Canonical text form, reduced, with a positive denominator.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses a table mutation `j:A|B:p/q`, which adds the constant `p/q` to
/// one row.
pub fn parse_perturbation(s: &str) -> Result<(i64, Part, Rational), String> {
    let mut it = s.splitn(3, ':');
    let (Some(j), Some(part), Some(delta)) = (it.next(), it.next(), it.next()) else {
        return Err(format!("{s:?} is not of the form j:A|B:p/q"));
    };
    let j = j
        .trim()
        .parse::<i64>()
        .map_err(|e| format!("bad j in {s:?}: {e}"))?;
    let part = match part.trim() {
        "A" | "a" => Part::A,
        "B" | "b" => Part::B,
        other => return Err(format!("part must be A or B, got {other:?}")),
    };
    Ok((j, part, parse_rational(delta)?))
}

/// The printed table or the amended one, with optional mutations applied.
pub fn build_table(amended: bool, perturbations: &[String]) -> Result<CoeffTable, CliError> {
    let mut table = if amended {
        CoeffTable::amended()
    } else {
        CoeffTable::printed()
    };
    for p in perturbations {
        let (j, part, delta) = parse_perturbation(p).map_err(CliError::Argument)?;
        table = table
            .perturbed(j, part, delta)
            .map_err(|e| CliError::Argument(e.to_string()))?;
    }
    Ok(table)
}

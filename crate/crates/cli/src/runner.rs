//! Config-driven sweeps on a worker pool.

use std::path::Path;

use rayon::prelude::*;

use hyperverify_core::identities::sweep::{evaluate, plan, CaseDescriptor, Grid};
use hyperverify_core::identities::{Check, SweepOptions, VerificationRecord};

use crate::config::SweepConfig;
use crate::report::Report;
use crate::CliError;

/// Evaluates the grid with `jobs` workers. The result is in plan order
/// whatever the worker count.
pub fn sweep(
    grid: &Grid,
    checks: &[Check],
    options: &SweepOptions,
    jobs: usize,
) -> Result<Vec<VerificationRecord>, CliError> {
    let cases: Vec<CaseDescriptor> = plan(grid, checks);
    if jobs <= 1 {
        return Ok(cases.iter().map(|c| evaluate(c, options)).collect());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CliError::Pool(e.to_string()))?;
    Ok(pool.install(|| cases.par_iter().map(|c| evaluate(c, options)).collect()))
}

pub fn run_config(
    config: &SweepConfig,
    table: hyperverify_core::identities::CoeffTable,
    jobs: usize,
) -> Result<Report, CliError> {
    let s = config.validate()?;
    let options = s.options(table);
    let records = sweep(&s.grid, &s.checks, &options, jobs)?;
    Ok(Report::new(s.echo(), records))
}

pub fn load_config(path: &Path) -> Result<SweepConfig, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::ConfigRead {
        path: path.to_path_buf(),
        source,
    })?;
    SweepConfig::from_json(&text)
}

//! The built-in acceptance grids, runnable without a config file.

use hyperverify_core::exact::{int, rat, Rational};
use hyperverify_core::identities::sweep::Grid;
use hyperverify_core::identities::{Check, CoeffTable, SweepOptions, TheoremArgument};

use crate::report::Summary;
use crate::runner::sweep;
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expectation {
    /// No failures, no errors, and at least one passing case.
    AllPass,
    /// At least one failure: the suite is a negative control.
    SomeFail,
}

#[derive(Clone, Debug)]
pub struct Suite {
    pub name: &'static str,
    pub checks: Vec<Check>,
    pub grid: Grid,
    pub argument: TheoremArgument,
    pub expectation: Expectation,
}

#[derive(Clone, Debug)]
pub struct SuiteResult {
    pub name: &'static str,
    pub summary: Summary,
    pub ok: bool,
}

fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| int(x)).collect()
}

fn all_j() -> Vec<i64> {
    (-5..=5).collect()
}

fn a_branch_grid(j: Vec<i64>) -> Grid {
    Grid {
        j,
        a: ints(&[-1, -2, -3, -4]),
        b: vec![rat(1, 3), rat(2, 5)],
        d: vec![rat(1, 2), int(1), rat(5, 2)],
        e: vec![int(4), rat(13, 3)],
    }
}

fn suite(name: &'static str, checks: &[Check], grid: Grid) -> Suite {
    Suite {
        name,
        checks: checks.to_vec(),
        grid,
        argument: TheoremArgument::Two,
        expectation: Expectation::AllPass,
    }
}

pub fn suites() -> Vec<Suite> {
    let canonical = Grid {
        j: vec![0],
        a: vec![int(-1)],
        b: vec![int(1)],
        d: vec![int(1)],
        e: vec![int(3)],
    };
    vec![
        suite(
            "kummer",
            &[Check::Kummer],
            Grid {
                a: vec![int(-3), int(-1), rat(1, 4), rat(1, 3), rat(2, 5)],
                b: vec![rat(1, 3), rat(2, 5), rat(5, 4), int(3)],
                ..Grid::default()
            },
        ),
        suite(
            "transform",
            &[Check::Transform],
            Grid {
                j: all_j(),
                a: vec![int(-2), rat(1, 4)],
                b: vec![rat(1, 3), rat(2, 7)],
                ..Grid::default()
            },
        ),
        suite(
            "theorem-a-branch",
            &[Check::Theorem],
            a_branch_grid(all_j()),
        ),
        suite(
            "theorem-d-branch",
            &[Check::Theorem],
            Grid {
                j: all_j(),
                a: vec![rat(1, 3), rat(3, 4)],
                b: vec![rat(1, 3), rat(2, 5)],
                d: ints(&[-1, -2, -3, -4]),
                e: vec![int(4), rat(13, 3)],
            },
        ),
        suite(
            "reduction-j0",
            &[Check::Corollaries],
            a_branch_grid(vec![0]),
        ),
        suite(
            "corollaries",
            &[Check::Corollaries],
            a_branch_grid((-3..=3).collect()),
        ),
        suite(
            "pipeline",
            &[Check::Pipeline],
            Grid {
                j: all_j(),
                a: ints(&[-1, -2, -3]),
                b: vec![rat(1, 3), rat(2, 5)],
                d: vec![rat(1, 2), int(1)],
                e: vec![int(3), rat(7, 2)],
            },
        ),
        suite(
            "canonical",
            &[
                Check::Theorem,
                Check::Corollaries,
                Check::Transform,
                Check::Pipeline,
            ],
            canonical,
        ),
        Suite {
            name: "argument-one-control",
            checks: vec![Check::Theorem],
            grid: a_branch_grid(all_j()),
            argument: TheoremArgument::One,
            expectation: Expectation::SomeFail,
        },
    ]
}

pub fn run_suite(s: &Suite, table: &CoeffTable, jobs: usize) -> Result<SuiteResult, CliError> {
    let options = SweepOptions {
        series_order: 24,
        theorem_argument: s.argument,
        table: table.clone(),
    };
    let records = sweep(&s.grid, &s.checks, &options, jobs)?;
    let summary = Summary::of(&records);
    let ok = match s.expectation {
        Expectation::AllPass => summary.failed == 0 && summary.errored == 0 && summary.passed > 0,
        Expectation::SomeFail => summary.failed > 0 && summary.errored == 0,
    };
    Ok(SuiteResult {
        name: s.name,
        summary,
        ok,
    })
}

pub fn run_all(table: &CoeffTable, jobs: usize) -> Result<Vec<SuiteResult>, CliError> {
    suites().iter().map(|s| run_suite(s, table, jobs)).collect()
}

pub fn render(results: &[SuiteResult]) -> String {
    let mut out = String::new();
    for r in results {
        let s = &r.summary;
        out.push_str(&format!(
            "{} {:<22} passed={} failed={} errored={} skipped={}\n",
            if r.ok { "PASS" } else { "FAIL" },
            r.name,
            s.passed,
            s.failed,
            s.errored,
            s.skipped
        ));
    }
    let bad = results.iter().filter(|r| !r.ok).count();
    out.push_str(&format!(
        "selftest: {} of {} suites passed\n",
        results.len() - bad,
        results.len()
    ));
    out
}

pub fn exit_code(results: &[SuiteResult]) -> i32 {
    if results.iter().all(|r| r.ok) {
        0
    } else {
        1
    }
}

//! Parameter grids and verification records.
//!
//! [`plan`] expands a grid into case descriptors in declared order (checks in
//! the order given, then `j`, `a`, `b`, `d`, `e` as nested loops over the
//! declared sets). [`evaluate`] is a pure function of one descriptor, so a
//! caller can fan descriptors out to workers and keep the plan order.

use alloc::vec::Vec;

use super::corollary::corollary_rhs;
use super::pipeline::beta_integral_pipeline;
use super::table::CoeffTable;
use super::theorem::{theorem_lhs, verify_theorem, IdentityCase, TheoremArgument};
use super::transform::{
    gen_transform_lhs_series, gen_transform_rhs_series_with, kummer_lhs_series, kummer_rhs_series,
};
use crate::error::Error;
use crate::exact::Rational;
use crate::series::TruncatedSeries;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    Theorem,
    Corollaries,
    Transform,
    Kummer,
    Pipeline,
}

impl Check {
    pub const ALL: [Check; 5] = [
        Check::Theorem,
        Check::Corollaries,
        Check::Transform,
        Check::Kummer,
        Check::Pipeline,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Theorem => "theorem",
            Check::Corollaries => "corollaries",
            Check::Transform => "transform",
            Check::Kummer => "kummer",
            Check::Pipeline => "pipeline",
        }
    }

    pub fn from_name(name: &str) -> Option<Check> {
        Check::ALL.into_iter().find(|c| c.name() == name)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Grid {
    pub j: Vec<i64>,
    pub a: Vec<Rational>,
    pub b: Vec<Rational>,
    pub d: Vec<Rational>,
    pub e: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepOptions {
    pub series_order: usize,
    pub theorem_argument: TheoremArgument,
    pub table: CoeffTable,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            series_order: 24,
            theorem_argument: TheoremArgument::Two,
            table: CoeffTable::printed(),
        }
    }
}

/// One grid point of one check. Series checks leave `d`, `e` (and Kummer
/// also `j`) unset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseDescriptor {
    pub check: Check,
    pub j: Option<i64>,
    pub a: Rational,
    pub b: Rational,
    pub d: Option<Rational>,
    pub e: Option<Rational>,
}

impl CaseDescriptor {
    pub fn full(
        check: Check,
        j: i64,
        a: &Rational,
        b: &Rational,
        d: &Rational,
        e: &Rational,
    ) -> Self {
        CaseDescriptor {
            check,
            j: Some(j),
            a: a.clone(),
            b: b.clone(),
            d: Some(d.clone()),
            e: Some(e.clone()),
        }
    }

    fn identity_case(&self) -> Result<IdentityCase, Error> {
        match (self.j, &self.d, &self.e) {
            (Some(j), Some(d), Some(e)) => {
                IdentityCase::new(j, self.a.clone(), self.b.clone(), d.clone(), e.clone())
            }
            _ => Err(Error::InvalidCase("check needs j, d and e")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Scalar(Rational),
    Series(TruncatedSeries),
}

/// Both sides of a check and whether they agree exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub lhs: Value,
    pub rhs: Value,
    pub equal: bool,
    /// For series checks, the first coefficient index where the sides differ.
    pub first_mismatch: Option<usize>,
}

impl Outcome {
    pub fn scalars(lhs: Rational, rhs: Rational) -> Self {
        let equal = lhs == rhs;
        Outcome {
            lhs: Value::Scalar(lhs),
            rhs: Value::Scalar(rhs),
            equal,
            first_mismatch: None,
        }
    }

    pub fn series(lhs: TruncatedSeries, rhs: TruncatedSeries) -> Self {
        let first_mismatch = lhs.first_mismatch(&rhs);
        Outcome {
            lhs: Value::Series(lhs),
            rhs: Value::Series(rhs),
            equal: first_mismatch.is_none(),
            first_mismatch,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    Passed,
    Failed,
    /// The grid point is outside the identity's domain.
    Skipped,
    /// An error that a valid case should never produce.
    Errored,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationRecord {
    pub case: CaseDescriptor,
    pub result: Result<Outcome, Error>,
}

impl VerificationRecord {
    pub fn new(case: CaseDescriptor, result: Result<Outcome, Error>) -> Self {
        VerificationRecord { case, result }
    }

    pub fn equal(&self) -> Option<bool> {
        self.result.as_ref().ok().map(|o| o.equal)
    }

    pub fn error(&self) -> Option<&Error> {
        self.result.as_ref().err()
    }

    pub fn status(&self) -> Status {
        match &self.result {
            Ok(o) if o.equal => Status::Passed,
            Ok(_) => Status::Failed,
            Err(e) if e.is_validation() => Status::Skipped,
            Err(_) => Status::Errored,
        }
    }
}

/// Expands the grid into descriptors, in declared order.
pub fn plan(grid: &Grid, checks: &[Check]) -> Vec<CaseDescriptor> {
    let mut out = Vec::new();
    for &check in checks {
        match check {
            Check::Kummer => {
                for a in &grid.a {
                    for b in &grid.b {
                        out.push(CaseDescriptor {
                            check,
                            j: None,
                            a: a.clone(),
                            b: b.clone(),
                            d: None,
                            e: None,
                        });
                    }
                }
            }
            Check::Transform => {
                for &j in &grid.j {
                    for a in &grid.a {
                        for b in &grid.b {
                            out.push(CaseDescriptor {
                                check,
                                j: Some(j),
                                a: a.clone(),
                                b: b.clone(),
                                d: None,
                                e: None,
                            });
                        }
                    }
                }
            }
            Check::Theorem | Check::Corollaries | Check::Pipeline => {
                for &j in &grid.j {
                    for a in &grid.a {
                        for b in &grid.b {
                            for d in &grid.d {
                                for e in &grid.e {
                                    out.push(CaseDescriptor::full(check, j, a, b, d, e));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

fn run(case: &CaseDescriptor, options: &SweepOptions) -> Result<Outcome, Error> {
    let order = options.series_order;
    match case.check {
        Check::Theorem => {
            let identity = case.identity_case()?;
            verify_theorem(&options.table, &identity, options.theorem_argument).result
        }
        Check::Corollaries => {
            let identity = case.identity_case()?;
            let rhs = corollary_rhs(identity.j, &identity)?;
            let lhs = theorem_lhs(&identity, TheoremArgument::Two)?;
            Ok(Outcome::scalars(lhs, rhs))
        }
        Check::Transform => {
            let j = case.j.ok_or(Error::InvalidCase("transform needs j"))?;
            let rhs = gen_transform_rhs_series_with(&options.table, j, &case.a, &case.b, order)?;
            let lhs = gen_transform_lhs_series(j, &case.a, &case.b, order)?;
            Ok(Outcome::series(lhs, rhs))
        }
        Check::Kummer => {
            let lhs = kummer_lhs_series(&case.a, &case.b, order)?;
            let rhs = kummer_rhs_series(&case.a, &case.b, order)?;
            Ok(Outcome::series(lhs, rhs))
        }
        Check::Pipeline => {
            let identity = case.identity_case()?;
            let (lhs, rhs) = beta_integral_pipeline(&identity)?;
            Ok(Outcome::scalars(lhs, rhs))
        }
    }
}

pub fn evaluate(case: &CaseDescriptor, options: &SweepOptions) -> VerificationRecord {
    VerificationRecord::new(case.clone(), run(case, options))
}

/// Runs every check over the grid; per-case errors are embedded in the
/// records.
pub fn grid_sweep(
    grid: &Grid,
    checks: &[Check],
    options: &SweepOptions,
) -> Vec<VerificationRecord> {
    plan(grid, checks)
        .iter()
        .map(|c| evaluate(c, options))
        .collect()
}

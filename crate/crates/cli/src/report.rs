//! Report projection of verification records.

use std::cmp::Ordering;

use serde::Serialize;

use hyperverify_core::identities::sweep::{CaseDescriptor, Value};
use hyperverify_core::identities::{Status, VerificationRecord};
use hyperverify_core::Error;

use crate::config::SweepConfig;
use crate::format_rational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum ValueOut {
    Scalar(String),
    Series(Vec<String>),
}

impl From<&Value> for ValueOut {
    fn from(v: &Value) -> Self {
        match v {
            Value::Scalar(r) => ValueOut::Scalar(format_rational(r)),
            Value::Series(s) => {
                ValueOut::Series(s.coefficients().iter().map(format_rational).collect())
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ErrorOut {
    pub tag: &'static str,
    pub message: String,
    /// The Gamma argument or denominator parameter responsible, if any.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub argument: Option<String>,
}

impl From<&Error> for ErrorOut {
    fn from(e: &Error) -> Self {
        let argument = match e {
            Error::Pole { argument } | Error::TranscendentalResidue { argument } => {
                Some(format_rational(argument))
            }
            Error::DenominatorPoleBeforeTermination { parameter, .. } => {
                Some(format_rational(parameter))
            }
            _ => None,
        };
        ErrorOut {
            tag: e.tag(),
            message: e.to_string(),
            argument,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum StatusOut {
    Passed,
    Failed,
    Skipped,
    Errored,
}

impl From<Status> for StatusOut {
    fn from(s: Status) -> Self {
        match s {
            Status::Passed => StatusOut::Passed,
            Status::Failed => StatusOut::Failed,
            Status::Skipped => StatusOut::Skipped,
            Status::Errored => StatusOut::Errored,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RecordOut {
    pub check: &'static str,
    pub j: Option<i64>,
    pub a: String,
    pub b: String,
    pub d: Option<String>,
    pub e: Option<String>,
    pub status: StatusOut,
    pub equal: Option<bool>,
    pub lhs: Option<ValueOut>,
    pub rhs: Option<ValueOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_mismatch: Option<usize>,
    pub error: Option<ErrorOut>,
}

impl From<&VerificationRecord> for RecordOut {
    fn from(r: &VerificationRecord) -> Self {
        let c = &r.case;
        let outcome = r.result.as_ref().ok();
        RecordOut {
            check: c.check.name(),
            j: c.j,
            a: format_rational(&c.a),
            b: format_rational(&c.b),
            d: c.d.as_ref().map(format_rational),
            e: c.e.as_ref().map(format_rational),
            status: r.status().into(),
            equal: r.equal(),
            lhs: outcome.map(|o| (&o.lhs).into()),
            rhs: outcome.map(|o| (&o.rhs).into()),
            first_mismatch: outcome.and_then(|o| o.first_mismatch),
            error: r.error().map(Into::into),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub errored: usize,
    pub skipped: usize,
}

impl Summary {
    pub fn of(records: &[VerificationRecord]) -> Self {
        let mut s = Summary::default();
        for r in records {
            match r.status() {
                Status::Passed => s.passed += 1,
                Status::Failed => s.failed += 1,
                Status::Errored => s.errored += 1,
                Status::Skipped => s.skipped += 1,
            }
        }
        s
    }

    pub fn total(&self) -> usize {
        self.passed + self.failed + self.errored + self.skipped
    }

    /// Exit code 0 when nothing failed and nothing errored, else 1.
    pub fn exit_code(&self) -> i32 {
        if self.failed == 0 && self.errored == 0 {
            0
        } else {
            1
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub config: SweepConfig,
    pub records: Vec<RecordOut>,
    pub summary: Summary,
}

/// Record order in reports: check name, then `j`, `a`, `b`, `d`, `e`
/// numerically, unset fields first.
pub fn case_order(x: &CaseDescriptor, y: &CaseDescriptor) -> Ordering {
    x.check
        .name()
        .cmp(y.check.name())
        .then_with(|| x.j.cmp(&y.j))
        .then_with(|| x.a.cmp(&y.a))
        .then_with(|| x.b.cmp(&y.b))
        .then_with(|| x.d.cmp(&y.d))
        .then_with(|| x.e.cmp(&y.e))
}

impl Report {
    pub fn new(config: SweepConfig, mut records: Vec<VerificationRecord>) -> Self {
        records.sort_by(|x, y| case_order(&x.case, &y.case));
        let summary = Summary::of(&records);
        Report {
            config,
            records: records.iter().map(Into::into).collect(),
            summary,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

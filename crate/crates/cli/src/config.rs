//! Sweep configuration files.

use serde::{Deserialize, Serialize};

use hyperverify_core::exact::Rational;
use hyperverify_core::identities::sweep::Grid;
use hyperverify_core::identities::{Check, CoeffTable, SweepOptions, TheoremArgument};

use crate::{format_rational, parse_rational, CliError};

pub const DEFAULT_SERIES_ORDER: usize = 24;
pub const MAX_SERIES_ORDER: usize = 256;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ArgumentName {
    #[default]
    Two,
    One,
}

impl From<ArgumentName> for TheoremArgument {
    fn from(a: ArgumentName) -> Self {
        match a {
            ArgumentName::Two => TheoremArgument::Two,
            ArgumentName::One => TheoremArgument::One,
        }
    }
}

/// The file format, field for field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct SweepConfig {
    pub checks: Vec<String>,
    #[serde(default)]
    pub j_set: Vec<i64>,
    #[serde(default)]
    pub a_set: Vec<String>,
    #[serde(default)]
    pub b_set: Vec<String>,
    #[serde(default)]
    pub d_set: Vec<String>,
    #[serde(default)]
    pub e_set: Vec<String>,
    #[serde(default = "default_order")]
    pub series_order: usize,
    #[serde(default)]
    pub theorem_argument: ArgumentName,
}

fn default_order() -> usize {
    DEFAULT_SERIES_ORDER
}

/// A configuration after validation, ready to run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sweep {
    pub checks: Vec<Check>,
    pub grid: Grid,
    pub series_order: usize,
    pub theorem_argument: ArgumentName,
}

impl Sweep {
    pub fn options(&self, table: CoeffTable) -> SweepOptions {
        SweepOptions {
            series_order: self.series_order,
            theorem_argument: self.theorem_argument.into(),
            table,
        }
    }

    /// The configuration in canonical form, as echoed in reports.
    pub fn echo(&self) -> SweepConfig {
        let strings = |v: &[Rational]| v.iter().map(format_rational).collect();
        SweepConfig {
            checks: self.checks.iter().map(|c| c.name().to_string()).collect(),
            j_set: self.grid.j.clone(),
            a_set: strings(&self.grid.a),
            b_set: strings(&self.grid.b),
            d_set: strings(&self.grid.d),
            e_set: strings(&self.grid.e),
            series_order: self.series_order,
            theorem_argument: self.theorem_argument,
        }
    }
}

fn rationals(field: &str, values: &[String]) -> Result<Vec<Rational>, CliError> {
    values
        .iter()
        .map(|s| parse_rational(s).map_err(|e| CliError::ConfigParse(format!("{field}: {e}"))))
        .collect()
}

impl SweepConfig {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::ConfigParse(e.to_string()))
    }

    pub fn validate(&self) -> Result<Sweep, CliError> {
        let mut checks = Vec::with_capacity(self.checks.len());
        for name in &self.checks {
            let check = Check::from_name(name)
                .ok_or_else(|| CliError::ConfigParse(format!("checks: unknown check {name:?}")))?;
            if !checks.contains(&check) {
                checks.push(check);
            }
        }
        if let Some(j) = self.j_set.iter().find(|j| !(-5..=5).contains(*j)) {
            return Err(CliError::ConfigParse(format!(
                "jSet: {j} is outside -5..=5"
            )));
        }
        if self.series_order == 0 || self.series_order > MAX_SERIES_ORDER {
            return Err(CliError::ConfigParse(format!(
                "seriesOrder: {} is outside 1..={MAX_SERIES_ORDER}",
                self.series_order
            )));
        }
        Ok(Sweep {
            checks,
            grid: Grid {
                j: self.j_set.clone(),
                a: rationals("aSet", &self.a_set)?,
                b: rationals("bSet", &self.b_set)?,
                d: rationals("dSet", &self.d_set)?,
                e: rationals("eSet", &self.e_set)?,
            },
            series_order: self.series_order,
            theorem_argument: self.theorem_argument,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use hyperverify_core::exact::{int, rat};

    #[test]
    fn defaults() {
        let c =
            SweepConfig::from_json(r#"{"checks": ["kummer"], "aSet": ["1/4"], "bSet": ["2/6"]}"#)
                .unwrap();
        let s = c.validate().unwrap();
        assert_eq!(s.series_order, 24);
        assert_eq!(s.theorem_argument, ArgumentName::Two);
        assert_eq!(s.grid.b, vec![rat(1, 3)]);
        assert_eq!(s.echo().b_set, vec!["1/3".to_string()]);
    }

    #[test]
    fn rejects() {
        let bad = [
            r#"{"checks": ["theorem"], "jSet": [7]}"#,
            r#"{"checks": ["theorem"], "extra": 1}"#,
            r#"{"checks": ["bogus"]}"#,
            r#"{"checks": ["kummer"], "aSet": ["1/0"]}"#,
            r#"{"checks": ["kummer"], "seriesOrder": 257}"#,
            r#"{"checks": ["kummer"], "seriesOrder": 0}"#,
            r#"{"checks": ["kummer"], "theoremArgument": "three"}"#,
            r#"{"jSet": [0]}"#,
            "not json",
        ];
        for text in bad {
            let r = SweepConfig::from_json(text).and_then(|c| c.validate());
            assert!(matches!(r, Err(CliError::ConfigParse(_))), "{text}");
        }
    }

    #[test]
    fn argument_one() {
        let c = SweepConfig::from_json(
            r#"{"checks": ["theorem"], "theoremArgument": "one", "aSet": ["-1"]}"#,
        )
        .unwrap();
        let s = c.validate().unwrap();
        assert_eq!(
            s.options(CoeffTable::printed()).theorem_argument,
            TheoremArgument::One
        );
        assert_eq!(s.grid.a, vec![int(-1)]);
    }
}

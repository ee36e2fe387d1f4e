use crate::exact::Rational;

/// Errors raised by the evaluation engine.
///
/// Every variant is a property of the inputs, never of internal state, so the
/// same inputs always produce the same error.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A Gamma factor at a nonpositive integer survives simplification.
    #[error("pole: Gamma({argument}) does not cancel")]
    Pole { argument: Rational },

    /// An unpaired Gamma factor at a non-integer argument remains; the
    /// product is not rational.
    #[error("transcendental residue: unpaired Gamma({argument})")]
    TranscendentalResidue { argument: Rational },

    /// A denominator Pochhammer symbol vanishes at or before the last
    /// required term.
    #[error("denominator parameter {parameter} vanishes at term {index} before termination")]
    DenominatorPoleBeforeTermination { parameter: Rational, index: usize },

    /// A finite sum was requested but no numerator parameter is a
    /// nonpositive integer.
    #[error("series does not terminate")]
    NotTerminating,

    /// Series composition needs an inner series with zero constant term.
    #[error("inner series has nonzero constant term {constant}")]
    NonzeroConstantTerm { constant: Rational },

    /// The coefficient table only has rows for `-5 <= j <= 5`, and the
    /// explicit corollaries only for `|j| <= 3`.
    #[error("unsupported j = {0}")]
    UnsupportedJ(i64),

    /// An explicit rational factor of a prefactor has a zero denominator.
    #[error("zero divisor in {0}")]
    ZeroDivisor(&'static str),

    /// The case does not satisfy the hypotheses of the requested check.
    #[error("invalid case: {0}")]
    InvalidCase(&'static str),
}

impl Error {
    /// Stable tag used in reports.
    pub fn tag(&self) -> &'static str {
        match self {
            Error::Pole { .. } => "PoleError",
            Error::TranscendentalResidue { .. } => "TranscendentalResidue",
            Error::DenominatorPoleBeforeTermination { .. } => "DenominatorPoleBeforeTermination",
            Error::NotTerminating => "NotTerminating",
            Error::NonzeroConstantTerm { .. } => "NonzeroConstantTerm",
            Error::UnsupportedJ(_) => "UnsupportedJ",
            Error::ZeroDivisor(_) => "ZeroDivisor",
            Error::InvalidCase(_) => "InvalidCase",
        }
    }

    /// Whether the error only says the grid point lies outside the domain
    /// of the identity (a pole set or a violated hypothesis). Such points are
    /// skipped, not counted as failures.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::Pole { .. }
                | Error::DenominatorPoleBeforeTermination { .. }
                | Error::UnsupportedJ(_)
                | Error::ZeroDivisor(_)
                | Error::InvalidCase(_)
        )
    }
}

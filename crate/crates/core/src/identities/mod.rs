//! The identity family and its verifiers.
//!
//! - [`table`]: the `A_j`, `B_j` coefficient rows
//! - [`transform`]: Kummer's quadratic transformation and its `j`-indexed
//!   generalization, checked coefficient-wise as truncated series
//! - [`theorem`]: the beta-integral theorem, both terminating branches
//! - [`corollary`]: the explicit `4F3`/`5F4` forms for `|j| <= 3`
//! - [`pipeline`]: the beta-integral derivation replayed on exact polynomials
//! - [`sweep`]: parameter grids and verification records
//!
//! The Gamma prefactors shared by the transformation and the theorem live
//! here.

pub mod corollary;
pub mod pipeline;
pub mod sweep;
pub mod table;
pub mod theorem;
pub mod transform;

use num_traits::Zero;

use crate::error::Error;
use crate::exact::{gamma_simplify, int, rat, GammaProduct, Rational};
use table::{check_j, half_bracket, half_bracket_up};

pub use corollary::corollary_rhs;
pub use pipeline::{beta_integral_pipeline, beta_integral_rhs_pipeline, normalized_beta_moment};
pub use sweep::{grid_sweep, Check, Grid, Outcome, Status, SweepOptions, VerificationRecord};
pub use table::{coeff_a, coeff_b, CoeffTable, Part};
pub use theorem::{
    theorem_lhs, theorem_rhs, theorem_rhs_with, verify_theorem, Branch, IdentityCase,
    TheoremArgument,
};
pub use transform::{
    gen_transform_lhs_series, gen_transform_parts, gen_transform_rhs_series,
    gen_transform_rhs_series_with, kummer_lhs_series, kummer_rhs_series,
};

/// `b + j/2 + |j|/2`, which is `b + j` for `j >= 0` and `b` otherwise.
fn shifted_b(j: i64, b: &Rational) -> Rational {
    b + rat(j + j.abs(), 2)
}

/// `Gamma(b) Gamma(1-b) / (Gamma(b + j/2 + |j|/2) Gamma(1 - b - [(j+1)/2]))`.
pub fn a_prefactor(j: i64, b: &Rational) -> Result<Rational, Error> {
    check_j(j)?;
    let one_minus = int(1) - b;
    let p = GammaProduct::ratio(
        [b, &one_minus],
        [&shifted_b(j, b), &(&one_minus - int(half_bracket_up(j)))],
    );
    gamma_simplify(&p)
}

/// `Gamma(-b) Gamma(1+b) / (Gamma(b + j/2 + |j|/2) Gamma(-b - [j/2]))`,
/// without the `2a/(2b+j)` factor.
pub fn b_gamma_ratio(j: i64, b: &Rational) -> Result<Rational, Error> {
    check_j(j)?;
    let minus_b = -b;
    let p = GammaProduct::ratio(
        [&minus_b, &(b + int(1))],
        [&shifted_b(j, b), &(&minus_b - int(half_bracket(j)))],
    );
    gamma_simplify(&p)
}

/// Full B-part prefactor `2a/(2b+j)` times [`b_gamma_ratio`].
pub fn b_prefactor(j: i64, a: &Rational, b: &Rational) -> Result<Rational, Error> {
    let denominator = b * int(2) + int(j);
    if denominator.is_zero() {
        return Err(Error::ZeroDivisor("2a/(2b+j)"));
    }
    Ok(a * int(2) / denominator * b_gamma_ratio(j, b)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn j_zero_prefactors() {
        for b in [rat(1, 3), rat(5, 4), int(1), int(3)] {
            assert_eq!(a_prefactor(0, &b), Ok(int(1)));
        }
        // Gamma(1+b)/Gamma(b) = b, so 2a b/(2b) = a
        assert_eq!(b_prefactor(0, &rat(1, 4), &rat(1, 3)), Ok(rat(1, 4)));
    }

    #[test]
    fn j_minus_one_sign() {
        assert_eq!(b_gamma_ratio(-1, &rat(1, 3)), Ok(int(-1)));
        // 2a/(2b-1) * (-1) at a = -1, b = 1/3
        assert_eq!(b_prefactor(-1, &int(-1), &rat(1, 3)), Ok(int(-6)));
    }

    #[test]
    fn j_minus_two_pole_at_b_one() {
        assert_eq!(
            a_prefactor(-2, &int(1)),
            Err(Error::Pole { argument: int(0) })
        );
        assert_eq!(a_prefactor(-2, &rat(1, 3)), Ok(rat(3, 2)));
    }

    #[test]
    fn positive_j_closed_forms() {
        // j = 1: Gamma(1-b)/Gamma(-b) / b = -1; j = 2: -1/(b+1)
        let b = rat(2, 7);
        assert_eq!(a_prefactor(1, &b), Ok(int(-1)));
        assert_eq!(a_prefactor(2, &b), Ok(int(-1) / (&b + int(1))));
        assert_eq!(b_gamma_ratio(1, &b), Ok(int(1)));
    }
}

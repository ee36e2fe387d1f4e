//! The beta-integral derivation replayed on exact polynomials.
//!
//! With `a = -m` both sides of the generalized transformation are
//! polynomials of degree `2m` in `x`. Integrating against
//! `x^(d-1) (1-x)^(e-d-1)` and dividing by `B(d, e-d)` sends `x^p` to
//! `(d)_p / (e)_p`, so the whole derivation is a linear map on coefficient
//! vectors and needs no Gamma values at all.

use num_traits::{One, Signed, Zero};

use super::table::CoeffTable;
use super::theorem::{
    lhs_prefactor, lhs_series, theorem_rhs_with, Branch, IdentityCase, TheoremArgument,
};
use super::transform::{gen_transform_lhs_series, gen_transform_rhs_series_with};
use crate::error::Error;
use crate::exact::{nonpositive_integer_depth, pochhammer_duplication, Rational};
use crate::series::TruncatedSeries;

/// `(d)_p / (e)_p`, the normalized beta moment of `x^p`.
///
/// Even and odd powers go through the duplication formula:
/// `(d)_{2n} = 4^n (d/2)_n ((d+1)/2)_n` and `(d)_{2n+1} = d (d+1)_{2n}`.
pub fn normalized_beta_moment(d: &Rational, e: &Rational, p: usize) -> Rational {
    let n = p / 2;
    if p.is_multiple_of(2) {
        pochhammer_duplication(d, n) / pochhammer_duplication(e, n)
    } else {
        let one = Rational::one();
        (d * pochhammer_duplication(&(d + &one), n)) / (e * pochhammer_duplication(&(e + &one), n))
    }
}

/// Applies the normalized beta transform to a polynomial.
pub fn beta_transform(poly: &TruncatedSeries, d: &Rational, e: &Rational) -> Rational {
    poly.coefficients()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(p, c)| c * normalized_beta_moment(d, e, p))
        .fold(Rational::zero(), |acc, t| acc + t)
}

/// `m` for `a = -m`, after checking the integral converges.
fn degree_bound(case: &IdentityCase) -> Result<usize, Error> {
    if case.branch != Branch::A {
        return Err(Error::InvalidCase(
            "pipeline needs a to be a nonpositive integer",
        ));
    }
    let m = nonpositive_integer_depth(&case.a).ok_or(Error::InvalidCase(
        "pipeline needs a to be a nonpositive integer",
    ))?;
    if !case.d.is_positive() || !(&case.e - &case.d).is_positive() {
        return Err(Error::InvalidCase("pipeline needs d > 0 and e - d > 0"));
    }
    Ok(m)
}

/// Left-hand side of the generalized transformation as the exact degree-`2m`
/// polynomial it is when `a = -m`.
pub fn lhs_polynomial(case: &IdentityCase) -> Result<TruncatedSeries, Error> {
    let m = degree_bound(case)?;
    gen_transform_lhs_series(case.j, &case.a, &case.b, 2 * m)
}

/// Returns `(transformed polynomial, closed-form value)`, the latter being
/// the normalized `Gamma(e) Gamma(e-d-2a) / (Gamma(e-2a) Gamma(e-d)) 3F2(...; 2)`.
/// The two are equal exactly when the derivation's left half goes through.
pub fn beta_integral_pipeline(case: &IdentityCase) -> Result<(Rational, Rational), Error> {
    let poly = lhs_polynomial(case)?;
    let transformed = beta_transform(&poly, &case.d, &case.e);
    let series = lhs_series(case, TheoremArgument::Two);
    series.check_denominators()?;
    let closed = lhs_prefactor(&case.a, &case.d, &case.e)? * series.eval_terminating()?;
    Ok((transformed, closed))
}

/// The right half: the generalized right-hand side polynomial pushed through
/// the same transform, against the theorem's right-hand side.
pub fn beta_integral_rhs_pipeline(
    table: &CoeffTable,
    case: &IdentityCase,
) -> Result<(Rational, Rational), Error> {
    let m = degree_bound(case)?;
    let poly = gen_transform_rhs_series_with(table, case.j, &case.a, &case.b, 2 * m)?;
    let transformed = beta_transform(&poly, &case.d, &case.e);
    Ok((transformed, theorem_rhs_with(table, case)?))
}

//! The beta-integral theorem:
//!
//! ```text
//! Gamma(e) Gamma(e-2a-d) / (Gamma(e-2a) Gamma(e-d)) 3F2(2a, b, d; 2b+j, 1+2a+d-e; 2)
//!   = C_A sum A_j/n! (a)_n (a+1/2)_n (b+[(j+1)/2])_n (d/2)_n (d/2+1/2)_n
//!                    / ((b+j/2)_n (b+j/2+1/2)_n (e/2)_n (e/2+1/2)_n)
//!   + C_B (d/e) sum B_j/n! (a+1/2)_n (a+1)_n (b+1+[j/2])_n (d/2+1/2)_n (d/2+1)_n
//!                    / ((b+j/2+1/2)_n (b+j/2+1)_n (e/2+1/2)_n (e/2+1)_n)
//! ```
//!
//! valid when `a` or `d` is a nonpositive integer. Both sides are finite sums
//! in that case; the summation bounds come from the first vanishing numerator
//! Pochhammer symbol.
//!
//! The `3F2` is evaluated at argument 2. The theorem's display prints
//! argument 1; [`TheoremArgument::One`] evaluates that variant, which does not
//! hold in general and is kept as a negative control.

use alloc::vec;

use num_traits::Zero;

use super::sweep::{CaseDescriptor, Check, Outcome, VerificationRecord};
use super::table::{check_j, CoeffTable};
use super::transform::{a_sum_spec, b_part_vanishes, b_sum_spec};
use super::{a_prefactor, b_prefactor};
use crate::error::Error;
use crate::exact::{gamma_simplify, half, int, is_nonpositive_integer, GammaProduct, Rational};
use crate::hyper::HyperSpec;

/// Which parameter is the nonpositive integer that makes everything finite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Branch {
    A,
    D,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCase {
    pub j: i64,
    pub a: Rational,
    pub b: Rational,
    pub d: Rational,
    pub e: Rational,
    pub branch: Branch,
}

impl IdentityCase {
    /// Picks the branch from the parameters, preferring `a` when both `a` and
    /// `d` are nonpositive integers.
    pub fn new(j: i64, a: Rational, b: Rational, d: Rational, e: Rational) -> Result<Self, Error> {
        check_j(j)?;
        let branch = if is_nonpositive_integer(&a) {
            Branch::A
        } else if is_nonpositive_integer(&d) {
            Branch::D
        } else {
            return Err(Error::InvalidCase(
                "neither a nor d is a nonpositive integer",
            ));
        };
        Ok(IdentityCase {
            j,
            a,
            b,
            d,
            e,
            branch,
        })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum TheoremArgument {
    #[default]
    Two,
    One,
}

impl TheoremArgument {
    pub fn value(self) -> Rational {
        match self {
            TheoremArgument::Two => int(2),
            TheoremArgument::One => int(1),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            TheoremArgument::Two => "two",
            TheoremArgument::One => "one",
        }
    }
}

/// `Gamma(e) Gamma(e-2a-d) / (Gamma(e-2a) Gamma(e-d))`.
pub fn lhs_prefactor(a: &Rational, d: &Rational, e: &Rational) -> Result<Rational, Error> {
    let two_a = a * int(2);
    let p = GammaProduct::ratio([e, &(e - &two_a - d)], [&(e - &two_a), &(e - d)]);
    gamma_simplify(&p)
}

/// `3F2(2a, b, d; 2b+j, 1+2a+d-e; z)`.
pub fn lhs_series(case: &IdentityCase, argument: TheoremArgument) -> HyperSpec {
    let IdentityCase { j, a, b, d, e, .. } = case;
    let two_a = a * int(2);
    HyperSpec::new(
        vec![two_a.clone(), b.clone(), d.clone()],
        vec![b * int(2) + int(*j), int(1) + two_a + d - e],
        argument.value(),
    )
}

pub fn theorem_lhs(case: &IdentityCase, argument: TheoremArgument) -> Result<Rational, Error> {
    let prefactor = lhs_prefactor(&case.a, &case.d, &case.e)?;
    let series = lhs_series(case, argument);
    series.check_denominators()?;
    Ok(prefactor * series.eval_terminating()?)
}

/// Right-hand side with the printed coefficient table.
pub fn theorem_rhs(case: &IdentityCase) -> Result<Rational, Error> {
    theorem_rhs_with(&CoeffTable::printed(), case)
}

/// The A-sum and B-sum of the right-hand side, each already multiplied by
/// its prefactor (and the B-sum by `d/e`).
pub fn theorem_rhs_parts(
    table: &CoeffTable,
    case: &IdentityCase,
) -> Result<(Rational, Rational), Error> {
    let IdentityCase { j, a, b, d, e, .. } = case;
    let j = *j;
    check_j(j)?;

    let mut a_sum = a_sum_spec(table, j, a, b)?;
    a_sum.numerators.extend([d * half(), d * half() + half()]);
    a_sum.denominators.extend([e * half(), e * half() + half()]);
    a_sum.power.stride = 1;
    let c_a = a_prefactor(j, b)?;
    let a_value = c_a * a_sum.eval_terminating()?;

    if b_part_vanishes(table, j, a)? || d.is_zero() {
        return Ok((a_value, Rational::zero()));
    }
    if e.is_zero() {
        return Err(Error::ZeroDivisor("d/e"));
    }
    let mut b_sum = b_sum_spec(table, j, a, b)?;
    b_sum
        .numerators
        .extend([d * half() + half(), d * half() + int(1)]);
    b_sum
        .denominators
        .extend([e * half() + half(), e * half() + int(1)]);
    // After the beta transform the odd power x^(2n+1) contributes d/e
    // outside the sum, so no argument power is left.
    b_sum.power.stride = 1;
    b_sum.power.offset = 0;
    let c_b = b_prefactor(j, a, b)? * d / e;
    let b_value = c_b * b_sum.eval_terminating()?;
    Ok((a_value, b_value))
}

pub fn theorem_rhs_with(table: &CoeffTable, case: &IdentityCase) -> Result<Rational, Error> {
    let (a_part, b_part) = theorem_rhs_parts(table, case)?;
    Ok(a_part + b_part)
}

fn compare(
    table: &CoeffTable,
    case: &IdentityCase,
    argument: TheoremArgument,
) -> Result<(Rational, Rational), Error> {
    // Prefactor poles first so an excluded grid point is reported by its
    // offending Gamma argument.
    a_prefactor(case.j, &case.b)?;
    let rhs = theorem_rhs_with(table, case)?;
    let lhs = theorem_lhs(case, argument)?;
    Ok((lhs, rhs))
}

/// Evaluates both sides; invalid cases come back as error records.
pub fn verify_theorem(
    table: &CoeffTable,
    case: &IdentityCase,
    argument: TheoremArgument,
) -> VerificationRecord {
    let descriptor =
        CaseDescriptor::full(Check::Theorem, case.j, &case.a, &case.b, &case.d, &case.e);
    VerificationRecord::new(
        descriptor,
        compare(table, case, argument).map(|(l, r)| Outcome::scalars(l, r)),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn case(j: i64, a: Rational, b: Rational, d: Rational, e: Rational) -> IdentityCase {
        IdentityCase::new(j, a, b, d, e).unwrap()
    }

    #[test]
    fn canonical_case() {
        let c = case(0, int(-1), int(1), int(1), int(3));
        assert_eq!(lhs_prefactor(&c.a, &c.d, &c.e), Ok(rat(1, 2)));
        assert_eq!(theorem_lhs(&c, TheoremArgument::Two), Ok(rat(19, 18)));
        assert_eq!(theorem_rhs(&c), Ok(rat(19, 18)));
        let record = verify_theorem(&CoeffTable::printed(), &c, TheoremArgument::Two);
        assert_eq!(record.equal(), Some(true));
    }

    #[test]
    fn a_zero_gives_one() {
        let c = case(2, int(0), rat(1, 3), rat(5, 2), int(4));
        assert_eq!(theorem_lhs(&c, TheoremArgument::Two), Ok(int(1)));
        assert_eq!(theorem_rhs(&c), Ok(int(1)));
    }

    #[test]
    fn d_branch_prefactor() {
        let c = case(1, rat(1, 3), rat(1, 2), int(-1), int(4));
        assert_eq!(c.branch, Branch::D);
        assert_eq!(lhs_prefactor(&c.a, &c.d, &c.e), Ok(rat(5, 6)));
        let lhs = theorem_lhs(&c, TheoremArgument::Two).unwrap();
        assert_eq!(theorem_rhs(&c), Ok(lhs));
    }

    #[test]
    fn j_zero_b_part_is_zero() {
        for a in [int(-1), int(-3)] {
            let c = case(0, a, rat(2, 5), rat(1, 2), rat(13, 3));
            let (_, b_part) = theorem_rhs_parts(&CoeffTable::printed(), &c).unwrap();
            assert!(b_part.is_zero());
        }
    }

    #[test]
    fn pole_record() {
        let c = case(-2, int(-1), int(1), rat(1, 2), int(4));
        let record = verify_theorem(&CoeffTable::printed(), &c, TheoremArgument::Two);
        assert_eq!(record.error(), Some(&Error::Pole { argument: int(0) }));
    }

    #[test]
    fn invalid_branch() {
        assert_eq!(
            IdentityCase::new(0, rat(1, 2), int(1), rat(1, 2), int(3)),
            Err(Error::InvalidCase(
                "neither a nor d is a nonpositive integer"
            ))
        );
        assert_eq!(
            IdentityCase::new(9, int(-1), int(1), int(1), int(3)),
            Err(Error::UnsupportedJ(9))
        );
    }
}

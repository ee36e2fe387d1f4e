//! Closed hypergeometric forms of the theorem's right-hand side for
//! `|j| <= 3`, with the `A_j`/`B_j` weights absorbed into extra Pochhammer
//! pairs. These are evaluated independently of the coefficient table, so
//! comparing them with [`theorem_rhs`](super::theorem_rhs) cross-checks the
//! absorption.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use super::theorem::IdentityCase;
use crate::error::Error;
use crate::exact::{half, int, rat, Rational};
use crate::hyper::HyperSpec;

fn unit(numerators: Vec<Rational>, denominators: Vec<Rational>) -> Result<Rational, Error> {
    HyperSpec::new(numerators, denominators, int(1)).eval_terminating()
}

/// Explicit right-hand side for `j` in `-3..=3`.
pub fn corollary_rhs(j: i64, case: &IdentityCase) -> Result<Rational, Error> {
    if !(-3..=3).contains(&j) {
        return Err(Error::UnsupportedJ(j));
    }
    let IdentityCase { a, b, d, e, .. } = case;
    let h = half();
    let q = rat(1, 4);
    let d2 = d * &h;
    let e2 = e * &h;

    // Shared parameter pairs: (d/2, d/2+1/2 ; e/2, e/2+1/2) on the first
    // series and (d/2+1/2, d/2+1 ; e/2+1/2, e/2+1) on the second.
    let first_num = |extra: Vec<Rational>| {
        let mut v = extra;
        v.extend([d2.clone(), &d2 + &h]);
        v
    };
    let first_den = |extra: Vec<Rational>| {
        let mut v = extra;
        v.extend([e2.clone(), &e2 + &h]);
        v
    };
    let second_num = |extra: Vec<Rational>| {
        let mut v = extra;
        v.extend([&d2 + &h, &d2 + int(1)]);
        v
    };
    let second_den = |extra: Vec<Rational>| {
        let mut v = extra;
        v.extend([&e2 + &h, &e2 + int(1)]);
        v
    };

    let a_half = a + &h;
    let a_one = a + int(1);

    let first = match j {
        0 | 1 => unit(
            first_num(vec![a.clone(), a_half.clone()]),
            first_den(vec![b + &h]),
        )?,
        -1 => unit(
            first_num(vec![a.clone(), a_half.clone()]),
            first_den(vec![b - &h]),
        )?,
        2 => unit(
            first_num(vec![a.clone(), a_half.clone(), b * &h + rat(3, 2)]),
            first_den(vec![b * &h + &h, b + rat(3, 2)]),
        )?,
        -2 => unit(
            first_num(vec![a.clone(), a_half.clone(), b * &h + &h]),
            first_den(vec![b * &h - &h, b - &h]),
        )?,
        3 => unit(
            first_num(vec![a.clone(), a_half.clone(), b * &q + rat(3, 2)]),
            first_den(vec![b * &q + &h, b + rat(3, 2)]),
        )?,
        -3 => unit(
            first_num(vec![a.clone(), a_half.clone(), b * &q + rat(3, 4)]),
            first_den(vec![b * &q - &q, b - rat(3, 2)]),
        )?,
        _ => unreachable!(),
    };
    if j == 0 || a.is_zero() || d.is_zero() {
        return Ok(first);
    }
    if e.is_zero() {
        return Err(Error::ZeroDivisor("corollary weight"));
    }

    let ad_e = a * d / e;
    let (weight_den, weight_num, second) = match j {
        1 => (
            b * int(2) + int(1),
            int(2),
            (
                second_num(vec![a_half, a_one]),
                second_den(vec![b + rat(3, 2)]),
            ),
        ),
        -1 => (
            b * int(2) - int(1),
            int(-2),
            (second_num(vec![a_half, a_one]), second_den(vec![b + &h])),
        ),
        2 => (
            b + int(1),
            int(2),
            (
                second_num(vec![a_half, a_one]),
                second_den(vec![b + rat(3, 2)]),
            ),
        ),
        -2 => (
            b - int(1),
            int(-2),
            (second_num(vec![a_half, a_one]), second_den(vec![b - &h])),
        ),
        3 => (
            b * int(2) + int(3),
            int(6),
            (
                second_num(vec![a_half, a_one, b * rat(3, 4) + rat(5, 2)]),
                second_den(vec![b * rat(3, 4) + rat(3, 2), b + rat(5, 2)]),
            ),
        ),
        -3 => (
            b * int(2) - int(3),
            int(-6),
            (
                second_num(vec![a_one, a_half, b * rat(3, 4) + &q]),
                second_den(vec![b * rat(3, 4) - rat(3, 4), b - &h]),
            ),
        ),
        _ => unreachable!(),
    };
    if weight_den.is_zero() {
        return Err(Error::ZeroDivisor("corollary weight"));
    }
    let weight = weight_num * ad_e / weight_den;
    Ok(first + weight * unit(second.0, second.1)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identities::theorem::{theorem_rhs, IdentityCase};

    #[test]
    fn canonical_value() {
        let c = IdentityCase::new(0, int(-1), int(1), int(1), int(3)).unwrap();
        assert_eq!(corollary_rhs(0, &c), Ok(rat(19, 18)));
    }

    #[test]
    fn j_one_with_a_zero() {
        let c = IdentityCase::new(1, int(0), rat(1, 3), rat(5, 2), int(4)).unwrap();
        assert_eq!(corollary_rhs(1, &c), Ok(int(1)));
    }

    #[test]
    fn j_three_matches_theorem() {
        let c = IdentityCase::new(3, int(-1), rat(1, 3), int(1), int(4)).unwrap();
        assert_eq!(corollary_rhs(3, &c), theorem_rhs(&c));
    }

    #[test]
    fn beyond_three_is_unsupported() {
        let c = IdentityCase::new(4, int(-1), rat(1, 3), int(1), int(4)).unwrap();
        assert_eq!(corollary_rhs(4, &c), Err(Error::UnsupportedJ(4)));
        assert_eq!(corollary_rhs(-5, &c), Err(Error::UnsupportedJ(-5)));
    }
}

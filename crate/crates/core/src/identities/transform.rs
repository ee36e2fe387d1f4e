//! Kummer's quadratic transformation
//! `(1-x)^(-2a) 2F1(2a, b; 2b; -2x/(1-x)) = 2F1(a, a+1/2; b+1/2; x^2)`
//! and its generalization with lower parameter `2b + j`, both compared as
//! truncated power series in `x`.

use alloc::vec;

use num_traits::Zero;

use super::table::{check_j, half_bracket, half_bracket_up, CoeffTable, Part};
use super::{a_prefactor, b_prefactor};
use crate::error::Error;
use crate::exact::{half, int, rat, Rational};
use crate::hyper::{ArgPower, HyperSpec, WeightedSumSpec};
use crate::series::{binomial_series, mobius_arg, TruncatedSeries};

/// `(1-x)^(-2a) 2F1(2a, b; c; -2x/(1-x))` to order `order`.
fn quadratic_lhs(
    a: &Rational,
    b: &Rational,
    c: Rational,
    order: usize,
) -> Result<TruncatedSeries, Error> {
    let two_a = a * int(2);
    let inner =
        HyperSpec::new(vec![two_a.clone(), b.clone()], vec![c], int(1)).series_in_z(order)?;
    let composed = inner.compose(&mobius_arg(order))?;
    Ok(&binomial_series(&two_a, order) * &composed)
}

pub fn kummer_lhs_series(
    a: &Rational,
    b: &Rational,
    order: usize,
) -> Result<TruncatedSeries, Error> {
    quadratic_lhs(a, b, b * int(2), order)
}

pub fn kummer_rhs_series(
    a: &Rational,
    b: &Rational,
    order: usize,
) -> Result<TruncatedSeries, Error> {
    let spec = HyperSpec::new(vec![a.clone(), a + half()], vec![b + half()], int(1));
    Ok(spec.series_in_z(order / 2)?.substitute_power(2, order))
}

pub fn gen_transform_lhs_series(
    j: i64,
    a: &Rational,
    b: &Rational,
    order: usize,
) -> Result<TruncatedSeries, Error> {
    check_j(j)?;
    quadratic_lhs(a, b, b * int(2) + int(j), order)
}

/// The two halves of the generalized right-hand side: the `A_j` sum carries
/// every even power of `x`, the `B_j` sum every odd power.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransformParts {
    pub even: TruncatedSeries,
    pub odd: TruncatedSeries,
}

impl TransformParts {
    pub fn total(&self) -> TruncatedSeries {
        &self.even + &self.odd
    }
}

/// `sum A_j (a)_n (a+1/2)_n (b+[(j+1)/2])_n / ((b+j/2)_n (b+j/2+1/2)_n n!) x^(2n)`
/// before the prefactor.
pub(crate) fn a_sum_spec(
    table: &CoeffTable,
    j: i64,
    a: &Rational,
    b: &Rational,
) -> Result<WeightedSumSpec, Error> {
    let bj = b + rat(j, 2);
    Ok(WeightedSumSpec {
        coefficient: table.row(j, Part::A)?.at_b(b),
        numerators: vec![a.clone(), a + half(), b + int(half_bracket_up(j))],
        denominators: vec![bj.clone(), bj + half()],
        argument: int(1),
        power: ArgPower {
            stride: 2,
            offset: 0,
        },
        factorial: true,
    })
}

/// `sum B_j (a+1/2)_n (a+1)_n (b+1+[j/2])_n / ((b+j/2+1/2)_n (b+j/2+1)_n n!) x^(2n+1)`
/// before the prefactor.
pub(crate) fn b_sum_spec(
    table: &CoeffTable,
    j: i64,
    a: &Rational,
    b: &Rational,
) -> Result<WeightedSumSpec, Error> {
    let bj = b + rat(j, 2);
    Ok(WeightedSumSpec {
        coefficient: table.row(j, Part::B)?.at_b(b),
        numerators: vec![a + half(), a + int(1), b + int(1 + half_bracket(j))],
        denominators: vec![&bj + half(), bj + int(1)],
        argument: int(1),
        power: ArgPower {
            stride: 2,
            offset: 1,
        },
        factorial: true,
    })
}

/// Whether the B part can be dropped without evaluating its prefactor.
pub(crate) fn b_part_vanishes(table: &CoeffTable, j: i64, a: &Rational) -> Result<bool, Error> {
    Ok(a.is_zero() || table.row(j, Part::B)?.is_zero())
}

pub fn gen_transform_parts(
    table: &CoeffTable,
    j: i64,
    a: &Rational,
    b: &Rational,
    order: usize,
) -> Result<TransformParts, Error> {
    check_j(j)?;
    let even = a_sum_spec(table, j, a, b)?
        .series(order)?
        .scale(&a_prefactor(j, b)?);
    let odd = if b_part_vanishes(table, j, a)? {
        TruncatedSeries::zero(order)
    } else {
        b_sum_spec(table, j, a, b)?
            .series(order)?
            .scale(&b_prefactor(j, a, b)?)
    };
    Ok(TransformParts { even, odd })
}

/// Right-hand side of the generalized transformation with the printed table.
pub fn gen_transform_rhs_series(
    j: i64,
    a: &Rational,
    b: &Rational,
    order: usize,
) -> Result<TruncatedSeries, Error> {
    gen_transform_rhs_series_with(&CoeffTable::printed(), j, a, b, order)
}

pub fn gen_transform_rhs_series_with(
    table: &CoeffTable,
    j: i64,
    a: &Rational,
    b: &Rational,
    order: usize,
) -> Result<TruncatedSeries, Error> {
    Ok(gen_transform_parts(table, j, a, b, order)?.total())
}

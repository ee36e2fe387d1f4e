//! Generalized hypergeometric series `pFq`.
//!
//! Terms are produced by multiplying successive term ratios
//! `t_{n+1}/t_n = prod(a_i + n) / prod(b_j + n) * z/(n+1)`, which keeps the
//! work linear in the number of terms. [`HyperSpec::term_direct`] recomputes
//! a single term from Pochhammer symbols and exists to cross-check the
//! iterative path.
//!
//! A denominator parameter at a nonpositive integer `-k` is legal as long as
//! the series has already terminated by term `k`; otherwise the offending
//! term would divide by zero and
//! [`Error::DenominatorPoleBeforeTermination`] is raised.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::exact::{factorial, nonpositive_integer_depth, pochhammer, Rational};
use crate::series::TruncatedSeries;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperSpec {
    pub numerators: Vec<Rational>,
    pub denominators: Vec<Rational>,
    pub argument: Rational,
}

/// Smallest `M` such that every term past `M` contains a vanishing numerator
/// Pochhammer symbol.
pub fn termination_index(numerators: &[Rational]) -> Option<usize> {
    numerators
        .iter()
        .filter_map(nonpositive_integer_depth)
        .min()
}

/// `prod (num)_n / prod (den)_n [/ n!]` for `n = 0..=up_to`, by term ratios.
///
/// Once a numerator factor vanishes all later terms are zero and the
/// denominators are no longer inspected.
fn ratio_terms(
    numerators: &[Rational],
    denominators: &[Rational],
    with_factorial: bool,
    up_to: usize,
) -> Result<Vec<Rational>, Error> {
    let mut terms = vec![Rational::zero(); up_to + 1];
    let mut term = Rational::one();
    terms[0] = term.clone();
    for n in 0..up_to {
        let shift = Rational::from_integer(BigInt::from(n));
        let mut num = Rational::one();
        for a in numerators {
            num *= a + &shift;
        }
        if num.is_zero() {
            return Ok(terms);
        }
        let mut den = Rational::one();
        for b in denominators {
            let factor = b + &shift;
            if factor.is_zero() {
                return Err(Error::DenominatorPoleBeforeTermination {
                    parameter: b.clone(),
                    index: n + 1,
                });
            }
            den *= factor;
        }
        if with_factorial {
            den *= Rational::from_integer(BigInt::from(n + 1));
        }
        term = term * num / den;
        terms[n + 1] = term.clone();
    }
    Ok(terms)
}

impl HyperSpec {
    pub fn new(numerators: Vec<Rational>, denominators: Vec<Rational>, argument: Rational) -> Self {
        HyperSpec {
            numerators,
            denominators,
            argument,
        }
    }

    pub fn p(&self) -> usize {
        self.numerators.len()
    }

    pub fn q(&self) -> usize {
        self.denominators.len()
    }

    pub fn termination_index(&self) -> Option<usize> {
        termination_index(&self.numerators)
    }

    /// Checks the denominator condition for the terms that are actually
    /// needed: no denominator Pochhammer may vanish at or before the
    /// termination index.
    pub fn check_denominators(&self) -> Result<(), Error> {
        let last = self.termination_index();
        for b in &self.denominators {
            if let Some(k) = nonpositive_integer_depth(b) {
                // (b)_n first vanishes at n = k + 1.
                if last.is_none_or(|m| m > k) {
                    return Err(Error::DenominatorPoleBeforeTermination {
                        parameter: b.clone(),
                        index: k + 1,
                    });
                }
            }
        }
        Ok(())
    }

    /// Term coefficients `c_n = prod (a)_n / (prod (b)_n n!)`, argument excluded.
    pub fn coefficients(&self, up_to: usize) -> Result<Vec<Rational>, Error> {
        ratio_terms(&self.numerators, &self.denominators, true, up_to)
    }

    /// One term recomputed from Pochhammer symbols, argument included.
    pub fn term_direct(&self, n: usize) -> Result<Rational, Error> {
        let mut num = Rational::one();
        for a in &self.numerators {
            num *= pochhammer(a, n);
        }
        if num.is_zero() {
            return Ok(num);
        }
        let mut den = Rational::from_integer(factorial(n));
        for b in &self.denominators {
            let p = pochhammer(b, n);
            if p.is_zero() {
                return Err(Error::DenominatorPoleBeforeTermination {
                    parameter: b.clone(),
                    index: n,
                });
            }
            den *= p;
        }
        Ok(num / den * pow(&self.argument, n))
    }

    /// Exact value of a terminating series.
    pub fn eval_terminating(&self) -> Result<Rational, Error> {
        let m = self.termination_index().ok_or(Error::NotTerminating)?;
        let coeffs = self.coefficients(m)?;
        // Horner in the argument.
        Ok(coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * &self.argument + c))
    }

    /// The series in its argument, `sum_{n<=order} c_n z^n`. The stored
    /// argument value plays no role here.
    pub fn series_in_z(&self, order: usize) -> Result<TruncatedSeries, Error> {
        Ok(TruncatedSeries::from_coeffs(self.coefficients(order)?))
    }
}

pub(crate) fn pow(x: &Rational, n: usize) -> Rational {
    let mut out = Rational::one();
    for _ in 0..n {
        out *= x;
    }
    out
}

/// Polynomial in the summation index `n`, ascending coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, n: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * n + c)
    }
}

/// Which power of the argument multiplies term `n`: `stride * n + offset`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ArgPower {
    pub stride: usize,
    pub offset: usize,
}

impl Default for ArgPower {
    fn default() -> Self {
        ArgPower {
            stride: 1,
            offset: 0,
        }
    }
}

/// A series whose term `n` is
/// `coefficient(n) * prod (num)_n / (prod (den)_n [n!]) * argument^(stride n + offset)`.
///
/// The polynomial weight stays symbolic in `n`; it is not folded into extra
/// Pochhammer parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedSumSpec {
    pub coefficient: Polynomial,
    pub numerators: Vec<Rational>,
    pub denominators: Vec<Rational>,
    pub argument: Rational,
    pub power: ArgPower,
    pub factorial: bool,
}

impl WeightedSumSpec {
    pub fn termination_index(&self) -> Option<usize> {
        termination_index(&self.numerators)
    }

    /// Terms without the argument power, for `n = 0..=up_to`.
    pub fn terms(&self, up_to: usize) -> Result<Vec<Rational>, Error> {
        let mut base = ratio_terms(&self.numerators, &self.denominators, self.factorial, up_to)?;
        for (n, t) in base.iter_mut().enumerate() {
            if !t.is_zero() {
                *t *= self
                    .coefficient
                    .eval(&Rational::from_integer(BigInt::from(n)));
            }
        }
        Ok(base)
    }

    pub fn eval_weighted_sum(&self, up_to: usize) -> Result<Rational, Error> {
        if self.coefficient.is_zero() {
            return Ok(Rational::zero());
        }
        let terms = self.terms(up_to)?;
        let step = pow(&self.argument, self.power.stride);
        let mut power = pow(&self.argument, self.power.offset);
        let mut sum = Rational::zero();
        for t in &terms {
            sum += t * &power;
            power *= &step;
        }
        Ok(sum)
    }

    /// Sum up to the termination index of the numerator parameters.
    pub fn eval_terminating(&self) -> Result<Rational, Error> {
        let m = self.termination_index().ok_or(Error::NotTerminating)?;
        self.eval_weighted_sum(m)
    }

    /// Places term `n` at `x^(stride n + offset)` of a series of the given
    /// order, treating the argument as the series variable.
    pub fn series(&self, order: usize) -> Result<TruncatedSeries, Error> {
        let mut out = TruncatedSeries::zero(order).into_coefficients();
        if order < self.power.offset || self.coefficient.is_zero() {
            return Ok(TruncatedSeries::from_coeffs(out));
        }
        let stride = self.power.stride.max(1);
        let up_to = (order - self.power.offset) / stride;
        for (n, t) in self.terms(up_to)?.into_iter().enumerate() {
            out[stride * n + self.power.offset] += t;
        }
        Ok(TruncatedSeries::from_coeffs(out))
    }
}

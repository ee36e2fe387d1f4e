//! Truncated formal power series in one variable with rational coefficients.
//!
//! A series of order `N` stores the dense coefficients of `x^0..=x^N`.
//! Binary operations truncate to the smaller operand order, and equality
//! checks only look at the coefficients both sides actually know.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::Error;
use crate::exact::{factorial, pochhammer, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    /// Builds a series from its coefficients; the order is `len - 1`.
    /// An empty list is read as the zero series of order 0.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(Rational::zero());
        }
        TruncatedSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    /// `c x^k`; just zero if `k > order`.
    pub fn monomial(c: Rational, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// The series variable `x`.
    pub fn variable(order: usize) -> Self {
        Self::monomial(Rational::one(), 1, order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &Rational {
        &self.coeffs[k]
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coefficients(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Drops coefficients above `order` (never pads).
    pub fn truncate(&self, order: usize) -> Self {
        let n = order.min(self.order());
        TruncatedSeries {
            coeffs: self.coeffs[..=n].to_vec(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let coeffs = (0..=n)
            .map(|k| &self.coeffs[k] + &other.coeffs[k])
            .collect();
        TruncatedSeries { coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let coeffs = (0..=n)
            .map(|k| &self.coeffs[k] - &other.coeffs[k])
            .collect();
        TruncatedSeries { coeffs }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut coeffs = vec![Rational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        TruncatedSeries { coeffs }
    }

    /// `f(g(x))` by Horner accumulation over the coefficients of `f`.
    pub fn compose(&self, inner: &Self) -> Result<Self, Error> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm {
                constant: inner.coeffs[0].clone(),
            });
        }
        let n = self.order().min(inner.order());
        let inner = inner.truncate(n);
        let mut acc = Self::constant(self.coeffs[n].clone(), n);
        for c in self.coeffs[..n].iter().rev() {
            acc = acc.mul(&inner);
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }

    /// `f(x^k)` at the given order. Coefficients of `f` beyond its own order
    /// are unknown, so the result order is capped at `k * (order(f) + 1) - 1`.
    pub fn substitute_power(&self, k: usize, order: usize) -> Self {
        assert!(k >= 1, "substitute_power needs k >= 1");
        let order = order.min(k * (self.order() + 1) - 1);
        let mut out = Self::zero(order);
        for (i, c) in self.coeffs.iter().enumerate() {
            if i * k > order {
                break;
            }
            out.coeffs[i * k] = c.clone();
        }
        out
    }

    /// Index of the first coefficient where the two series differ, comparing
    /// only up to the common order.
    pub fn first_mismatch(&self, other: &Self) -> Option<usize> {
        self.coeffs
            .iter()
            .zip(other.coeffs.iter())
            .position(|(a, b)| a != b)
    }

    /// Evaluates the polynomial part at `x`.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }
}

/// `(1 - x)^(-alpha) = sum (alpha)_n x^n / n!`.
pub fn binomial_series(alpha: &Rational, order: usize) -> TruncatedSeries {
    let coeffs = (0..=order)
        .map(|n| pochhammer(alpha, n) / Rational::from_integer(factorial(n)))
        .collect();
    TruncatedSeries { coeffs }
}

/// `-2x / (1 - x)`, the argument of the quadratic transformations.
pub fn mobius_arg(order: usize) -> TruncatedSeries {
    let mut coeffs = vec![Rational::from_integer((-2).into()); order + 1];
    coeffs[0] = Rational::zero();
    TruncatedSeries { coeffs }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: Self) -> TruncatedSeries {
        TruncatedSeries::add(self, rhs)
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: Self) -> TruncatedSeries {
        TruncatedSeries::sub(self, rhs)
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: Self) -> TruncatedSeries {
        TruncatedSeries::mul(self, rhs)
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

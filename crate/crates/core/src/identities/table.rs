//! The `A_j`, `B_j` coefficient table of the generalized Kummer
//! transformation, `j = -5..=5`.
//!
//! Rows are bivariate polynomials in `(b, n)`, assembled with the same
//! grouping as the published table so each row can be read against it term
//! by term. [`CoeffTable::printed`] is the table verbatim.

use alloc::collections::BTreeMap;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::exact::{int, Rational};
use crate::hyper::{pow, Polynomial};

pub const MIN_J: i64 = -5;
pub const MAX_J: i64 = 5;

/// Greatest integer `<= x`.
pub fn bracket(x: &Rational) -> i64 {
    use num_traits::ToPrimitive;
    x.floor()
        .to_integer()
        .to_i64()
        .expect("bracket argument fits in i64")
}

pub fn absval(j: i64) -> i64 {
    j.abs()
}

/// `[(j + 1) / 2]`
pub fn half_bracket_up(j: i64) -> i64 {
    Integer::div_floor(&(j + 1), &2)
}

/// `[j / 2]`
pub fn half_bracket(j: i64) -> i64 {
    Integer::div_floor(&j, &2)
}

pub fn check_j(j: i64) -> Result<(), Error> {
    if (MIN_J..=MAX_J).contains(&j) {
        Ok(())
    } else {
        Err(Error::UnsupportedJ(j))
    }
}

/// Polynomial in `b` and `n`: map from `(deg_b, deg_n)` to coefficient.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl BiPoly {
    pub fn constant(c: Rational) -> Self {
        let mut p = BiPoly::default();
        p.insert((0, 0), c);
        p
    }

    pub fn b() -> Self {
        let mut p = BiPoly::default();
        p.insert((1, 0), Rational::one());
        p
    }

    pub fn n() -> Self {
        let mut p = BiPoly::default();
        p.insert((0, 1), Rational::one());
        p
    }

    fn insert(&mut self, key: (u32, u32), c: Rational) {
        let slot = self.terms.entry(key).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn square(&self) -> Self {
        self.clone() * self.clone()
    }

    pub fn eval(&self, b: &Rational, n: &Rational) -> Rational {
        self.terms
            .iter()
            .map(|(&(i, k), c)| c * pow(b, i as usize) * pow(n, k as usize))
            .fold(Rational::zero(), |acc, t| acc + t)
    }

    /// Fixes `b`, leaving a polynomial in `n`.
    pub fn at_b(&self, b: &Rational) -> Polynomial {
        let degree = self
            .terms
            .keys()
            .map(|&(_, k)| k as usize)
            .max()
            .unwrap_or(0);
        let mut coeffs = alloc::vec![Rational::zero(); degree + 1];
        for (&(i, k), c) in &self.terms {
            coeffs[k as usize] += c * pow(b, i as usize);
        }
        Polynomial::new(coeffs)
    }

    /// `(deg_b, deg_n) -> coefficient`, ascending.
    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &Rational)> {
        self.terms.iter().map(|(&k, c)| (k, c))
    }
}

fn c(k: i64) -> BiPoly {
    BiPoly::constant(int(k))
}

impl Add for BiPoly {
    type Output = BiPoly;
    fn add(mut self, rhs: BiPoly) -> BiPoly {
        for (k, c) in rhs.terms {
            self.insert(k, c);
        }
        self
    }
}

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(mut self) -> BiPoly {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Sub for BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: BiPoly) -> BiPoly {
        self + (-rhs)
    }
}

impl Mul for BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: BiPoly) -> BiPoly {
        let mut out = BiPoly::default();
        for (&(i1, k1), c1) in &self.terms {
            for (&(i2, k2), c2) in &rhs.terms {
                out.insert((i1 + i2, k1 + k2), c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (&(i, k), coef)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({coef})")?;
            match i {
                0 => {}
                1 => write!(f, "*b")?,
                _ => write!(f, "*b^{i}")?,
            }
            match k {
                0 => {}
                1 => write!(f, "*n")?,
                _ => write!(f, "*n^{k}")?,
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Part {
    A,
    B,
}

impl Part {
    pub fn name(self) -> &'static str {
        match self {
            Part::A => "A",
            Part::B => "B",
        }
    }
}

/// `A_j` exactly as printed.
pub fn printed_a(j: i64) -> Result<BiPoly, Error> {
    check_j(j)?;
    let b = BiPoly::b;
    let n = BiPoly::n;
    // 1-b-2n, 1-b
    let u = || c(1) - b() - c(2) * n();
    let v = || c(1) - b();
    Ok(match j {
        5 => {
            -(c(4) * u().square()) + c(2) * v() * u() + v().square() + c(22) * u() + c(13) * b()
                - c(33)
        }
        4 => c(2) * (b() + c(1) + c(2) * n()) * (b() + c(3) + c(2) * n()) - b() * (b() + c(3)),
        3 => b() + c(2) + c(4) * n(),
        2 => -(b() + c(1) + c(2) * n()),
        1 => c(-1),
        0 => c(1),
        -1 => c(1),
        -2 => c(1) - b() - c(2) * n(),
        -3 => c(1) - b() - c(4) * n(),
        -4 => c(2) * u() * (c(3) - b() - c(2) * n()) - v() * (c(4) - b()),
        -5 => {
            c(4) * u().square() - c(2) * v() * u() - v().square() + c(8) * u() + c(7) * b() - c(7)
        }
        _ => unreachable!(),
    })
}

/// `B_j` exactly as printed.
pub fn printed_b(j: i64) -> Result<BiPoly, Error> {
    check_j(j)?;
    let b = BiPoly::b;
    let n = BiPoly::n;
    let u = || c(1) - b() - c(2) * n();
    let v = || c(1) - b();
    // b+2n
    let w = || b() + c(2) * n();
    Ok(match j {
        5 => c(4) * w().square() - c(2) * v() * w() - v().square() + c(34) * w() + b() + c(61),
        4 => c(4) * (b() + c(3) + c(2) * n()),
        3 => -(c(3) * b() + c(6) + c(4) * n()),
        2 => c(-2),
        1 => c(1),
        0 => c(0),
        -1 => c(1),
        -2 => c(2),
        -3 => c(3) - c(3) * b() - c(4) * n(),
        -4 => c(4) * u(),
        -5 => c(4) * w().square() - c(2) * v() * w() - v().square() - c(16) * w() + b() - c(1),
        _ => unreachable!(),
    })
}

/// `A_j(b, n)` from the printed table.
pub fn coeff_a(j: i64, b: &Rational, n: i64) -> Result<Rational, Error> {
    Ok(printed_a(j)?.eval(b, &int(n)))
}

/// `B_j(b, n)` from the printed table.
pub fn coeff_b(j: i64, b: &Rational, n: i64) -> Result<Rational, Error> {
    Ok(printed_b(j)?.eval(b, &int(n)))
}

/// A full set of rows for `j = -5..=5`.
///
/// Besides the printed table this type can carry perturbed rows, which is how
/// mutation tests check that a single corrupted coefficient is caught.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffTable {
    a: [BiPoly; 11],
    b: [BiPoly; 11],
}

fn index(j: i64) -> Result<usize, Error> {
    check_j(j)?;
    Ok((j - MIN_J) as usize)
}

impl CoeffTable {
    /// The table as published.
    pub fn printed() -> Self {
        let a = core::array::from_fn(|i| printed_a(i as i64 + MIN_J).expect("j in range"));
        let b = core::array::from_fn(|i| printed_b(i as i64 + MIN_J).expect("j in range"));
        CoeffTable { a, b }
    }

    /// The printed table with its one known misprint amended: the constant
    /// term of `B_{-5}` raised by 12 (`... + b - 1` becomes `... + b + 11`).
    ///
    /// This is opt-in and never used by default; it exists so a failing
    /// `j = -5` audit can be confirmed to stem from that single constant.
    pub fn amended() -> Self {
        Self::printed()
            .perturbed(-5, Part::B, int(12))
            .expect("j in range")
    }

    pub fn row(&self, j: i64, part: Part) -> Result<&BiPoly, Error> {
        let i = index(j)?;
        Ok(match part {
            Part::A => &self.a[i],
            Part::B => &self.b[i],
        })
    }

    /// Adds a constant to one row.
    pub fn perturbed(mut self, j: i64, part: Part, delta: Rational) -> Result<Self, Error> {
        let i = index(j)?;
        let row = match part {
            Part::A => &mut self.a[i],
            Part::B => &mut self.b[i],
        };
        *row = row.clone() + BiPoly::constant(delta);
        Ok(self)
    }

    pub fn a(&self, j: i64, b: &Rational, n: &Rational) -> Result<Rational, Error> {
        Ok(self.row(j, Part::A)?.eval(b, n))
    }

    pub fn b(&self, j: i64, b: &Rational, n: &Rational) -> Result<Rational, Error> {
        Ok(self.row(j, Part::B)?.eval(b, n))
    }

    /// Rows that differ from the printed table.
    pub fn deviations(&self) -> impl Iterator<Item = (i64, Part)> + '_ {
        let printed = Self::printed();
        (MIN_J..=MAX_J).flat_map(move |j| {
            let i = (j - MIN_J) as usize;
            let a = (self.a[i] != printed.a[i]).then_some((j, Part::A));
            let b = (self.b[i] != printed.b[i]).then_some((j, Part::B));
            a.into_iter().chain(b)
        })
    }
}

impl Default for CoeffTable {
    fn default() -> Self {
        Self::printed()
    }
}

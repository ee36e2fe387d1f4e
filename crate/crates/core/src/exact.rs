//! Exact rationals, Pochhammer symbols and a pole-aware simplifier for
//! products of Gamma values at rational arguments.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

/// Exact arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// `n/d` as a [`Rational`]. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `1/2`, used all over the place.
pub fn half() -> Rational {
    rat(1, 2)
}

/// Returns `Some(k)` when `x == -k` for a nonnegative integer `k`.
pub fn nonpositive_integer_depth(x: &Rational) -> Option<usize> {
    if x.is_integer() && !x.is_positive() {
        (-x.to_integer()).to_usize()
    } else {
        None
    }
}

pub fn is_nonpositive_integer(x: &Rational) -> bool {
    x.is_integer() && !x.is_positive()
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Rising factorial `(a)_n = a (a+1) ... (a+n-1)`, with `(a)_0 = 1`.
///
/// Numerator and denominator are accumulated as integers, so there is a
/// single reduction at the end.
pub fn pochhammer(a: &Rational, n: usize) -> Rational {
    let p = a.numer();
    let q = a.denom();
    let mut num = BigInt::one();
    let mut term = p.clone();
    for _ in 0..n {
        if term.is_zero() {
            return Rational::zero();
        }
        num *= &term;
        term += q;
    }
    Rational::new(num, q.pow(n as u32))
}

/// `(d)_{2n}` through the duplication formula: `4^n (d/2)_n ((d+1)/2)_n`.
pub fn pochhammer_duplication(d: &Rational, n: usize) -> Rational {
    let four_pow = Rational::from_integer(BigInt::from(4u32).pow(n as u32));
    let lower = d * half();
    let upper = (d + Rational::one()) * half();
    four_pow * pochhammer(&lower, n) * pochhammer(&upper, n)
}

/// A formal product `prod Gamma(arg)^exponent` over rational arguments.
///
/// Entries with equal arguments are merged by summing exponents; entries whose
/// exponent reaches zero are dropped.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GammaProduct {
    factors: BTreeMap<Rational, i64>,
}

impl GammaProduct {
    pub fn new() -> Self {
        Self::default()
    }

    /// `prod Gamma(n) / prod Gamma(d)`.
    pub fn ratio<'a, N, D>(numerators: N, denominators: D) -> Self
    where
        N: IntoIterator<Item = &'a Rational>,
        D: IntoIterator<Item = &'a Rational>,
    {
        let mut p = Self::new();
        for n in numerators {
            p.push(n.clone(), 1);
        }
        for d in denominators {
            p.push(d.clone(), -1);
        }
        p
    }

    pub fn push(&mut self, argument: Rational, exponent: i64) {
        if exponent == 0 {
            return;
        }
        let slot = self.factors.entry(argument.clone()).or_insert(0);
        *slot += exponent;
        if *slot == 0 {
            self.factors.remove(&argument);
        }
    }

    pub fn combined(mut self, other: &GammaProduct) -> Self {
        for (arg, &exp) in &other.factors {
            self.push(arg.clone(), exp);
        }
        self
    }

    /// Net factors, sorted by argument.
    pub fn factors(&self) -> impl Iterator<Item = (&Rational, i64)> {
        self.factors.iter().map(|(a, &e)| (a, e))
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn simplify(&self) -> Result<Rational, Error> {
        gamma_simplify(self)
    }
}

/// Laurent leading term `c * eps^order` of a quantity under the common shift
/// `arg -> arg + eps`, `eps -> 0`.
#[derive(Clone, Debug)]
struct Leading {
    coefficient: Rational,
    order: i64,
}

impl Leading {
    fn one() -> Self {
        Leading {
            coefficient: Rational::one(),
            order: 0,
        }
    }

    fn mul(&mut self, other: Leading) {
        self.coefficient *= other.coefficient;
        self.order += other.order;
    }

    fn div(&mut self, other: Leading) {
        self.coefficient /= other.coefficient;
        self.order -= other.order;
    }
}

/// `(q + eps)_k` to leading order. Only integer `q` can hit a zero factor.
fn shifted_pochhammer(q: &Rational, k: usize) -> Leading {
    let mut out = Leading::one();
    let mut factor = q.clone();
    for _ in 0..k {
        if factor.is_zero() {
            out.order += 1;
        } else {
            out.coefficient *= &factor;
        }
        factor += Rational::one();
    }
    out
}

/// `Gamma(m + eps)` to leading order for integer `m`.
fn shifted_gamma_at_integer(m: &BigInt) -> Leading {
    if m.is_positive() {
        let k = (m - 1u32)
            .to_usize()
            .expect("factorial argument fits in usize");
        Leading {
            coefficient: Rational::from_integer(factorial(k)),
            order: 0,
        }
    } else {
        // Residue of Gamma at -k is (-1)^k / k!.
        let k = (-m).to_usize().expect("pole index fits in usize");
        let sign = if k.is_odd() {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        Leading {
            coefficient: Rational::new(sign, factorial(k)),
            order: -1,
        }
    }
}

/// Reduces a [`GammaProduct`] to an exact rational.
///
/// Identical arguments cancel on construction, before any pole is looked at,
/// so `Gamma(p)/Gamma(p)` is `1` even at a pole `p`. Remaining factors are
/// grouped by residue mod 1; inside a class, numerator and denominator
/// arguments are sorted and matched greedily, each pair reducing to a
/// Pochhammer symbol or its reciprocal. Unpaired integer arguments are
/// factorials (or poles). All arguments are read as shifted by one common
/// infinitesimal, so a vanishing Pochhammer factor contributes a zero and a
/// vanishing reciprocal contributes a pole; the result is `0` when zeros
/// outnumber poles and [`Error::Pole`] when poles outnumber zeros.
pub fn gamma_simplify(p: &GammaProduct) -> Result<Rational, Error> {
    let mut classes: BTreeMap<Rational, (Vec<Rational>, Vec<Rational>)> = BTreeMap::new();
    for (arg, exp) in p.factors() {
        let key = arg - arg.floor();
        let (nums, dens) = classes.entry(key).or_default();
        let target = if exp > 0 { nums } else { dens };
        for _ in 0..exp.unsigned_abs() {
            target.push(arg.clone());
        }
    }

    let mut total = Leading::one();
    let mut pole_argument: Option<Rational> = None;
    let mut residue: Option<Rational> = None;

    for (key, (mut nums, mut dens)) in classes {
        nums.sort();
        dens.sort();
        let integral = key.is_zero();

        for (n, d) in nums.iter().zip(dens.iter()) {
            let shift = n - d;
            let k = shift
                .abs()
                .to_integer()
                .to_usize()
                .expect("shift fits in usize");
            if shift.is_negative() {
                // Gamma(n)/Gamma(n+k) = 1/(n)_k
                let term = shifted_pochhammer(n, k);
                if term.order > 0 && pole_argument.is_none() {
                    pole_argument = Some(n.clone());
                }
                total.div(term);
            } else {
                // Gamma(d+k)/Gamma(d) = (d)_k
                total.mul(shifted_pochhammer(d, k));
            }
        }

        let paired = nums.len().min(dens.len());
        for (arg, numerator) in nums[paired..]
            .iter()
            .map(|a| (a, true))
            .chain(dens[paired..].iter().map(|a| (a, false)))
        {
            if !integral {
                residue.get_or_insert_with(|| arg.clone());
                continue;
            }
            let lead = shifted_gamma_at_integer(&arg.to_integer());
            if numerator {
                if lead.order < 0 && pole_argument.is_none() {
                    pole_argument = Some(arg.clone());
                }
                total.mul(lead);
            } else {
                total.div(lead);
            }
        }
    }

    if total.order < 0 {
        return Err(Error::Pole {
            argument: pole_argument.unwrap_or_else(Rational::zero),
        });
    }
    if total.order > 0 {
        // Gamma is finite and nonzero off the nonpositive integers, so a net
        // zero wipes out any transcendental residue too.
        return Ok(Rational::zero());
    }
    if let Some(argument) = residue {
        return Err(Error::TranscendentalResidue { argument });
    }
    Ok(total.coefficient)
}

//! Library results against independent direct-summation oracles.
//!
//! The oracles below recompute every quantity from Pochhammer products
//! alone: Gamma prefactors become explicit rising factorials, series
//! composition becomes a double sum, and terminating sums are cut where the
//! numerator product vanishes.

use hyperverify_core::exact::{int, rat};
use hyperverify_core::identities::table::{half_bracket, half_bracket_up};
use hyperverify_core::identities::*;
use hyperverify_core::{pochhammer, HyperSpec, Rational, TruncatedSeries};
use num_traits::{One, Zero};

fn fact(n: usize) -> Rational {
    pochhammer(&int(1), n)
}

fn prod(params: &[Rational], n: usize) -> Rational {
    params
        .iter()
        .map(|p| pochhammer(p, n))
        .fold(Rational::one(), |a, b| a * b)
}

/// `Gamma(x) / Gamma(x + k)` for integer `k`, `x` generic.
fn gamma_shift_inv(x: &Rational, k: i64) -> Rational {
    if k >= 0 {
        Rational::one() / pochhammer(x, k as usize)
    } else {
        pochhammer(&(x + int(k)), (-k) as usize)
    }
}

/// `C_A` with `b` away from the integers.
fn c_a(j: i64, b: &Rational) -> Rational {
    let s = j.max(0);
    let t = (j + 1).div_euclid(2);
    let one_b = Rational::one() - b;
    // Gamma(b)/Gamma(b+s) * Gamma(1-b)/Gamma(1-b-t)
    gamma_shift_inv(b, s) / gamma_shift_inv(&(&one_b - int(t)), t)
}

/// `C_B` with `b` away from the integers.
fn c_b(j: i64, a: &Rational, b: &Rational) -> Rational {
    let s = j.max(0);
    let u = j.div_euclid(2);
    let weight = a * int(2) / (b * int(2) + int(j));
    // Gamma(1+b)/Gamma(b+s) = Gamma(b+1)/Gamma(b+1+(s-1))
    let g1 = gamma_shift_inv(&(b + int(1)), s - 1);
    // Gamma(-b)/Gamma(-b-u)
    let g2 = Rational::one() / gamma_shift_inv(&(-b.clone() - int(u)), u);
    weight * g1 * g2
}

fn kummer_like_lhs(a: &Rational, b: &Rational, c: &Rational, order: usize) -> TruncatedSeries {
    let two_a = a * int(2);
    let mut out = vec![Rational::zero(); order + 1];
    for k in 0..=order {
        let head = pochhammer(&two_a, k) * pochhammer(b, k) / (pochhammer(c, k) * fact(k))
            * pow(&int(-2), k);
        if head.is_zero() {
            continue;
        }
        let s = &two_a + int(k as i64);
        for m in 0..=(order - k) {
            out[k + m] += &head * pochhammer(&s, m) / fact(m);
        }
    }
    TruncatedSeries::from_coeffs(out)
}

fn pow(x: &Rational, k: usize) -> Rational {
    (0..k).fold(Rational::one(), |acc, _| acc * x)
}

fn transform_rhs(
    table: &CoeffTable,
    j: i64,
    a: &Rational,
    b: &Rational,
    order: usize,
) -> TruncatedSeries {
    let bj = b + rat(j, 2);
    let mut out = vec![Rational::zero(); order + 1];
    let ca = c_a(j, b);
    let cb = if a.is_zero() || j == 0 {
        Rational::zero()
    } else {
        c_b(j, a, b)
    };
    for n in 0..=order / 2 {
        let nn = int(n as i64);
        let even = 2 * n;
        out[even] = &ca
            * table.a(j, b, &nn).unwrap()
            * prod(&[a.clone(), a + rat(1, 2), b + int(half_bracket_up(j))], n)
            / (prod(&[bj.clone(), &bj + rat(1, 2)], n) * fact(n));
        if even < order && !cb.is_zero() {
            out[even + 1] = &cb
                * table.b(j, b, &nn).unwrap()
                * prod(
                    &[a + rat(1, 2), a + int(1), b + int(1 + half_bracket(j))],
                    n,
                )
                / (prod(&[&bj + rat(1, 2), &bj + int(1)], n) * fact(n));
        }
    }
    TruncatedSeries::from_coeffs(out)
}

/// Sums `term(n)` until the numerator product `num(n)` vanishes.
fn finite_sum(
    num: impl Fn(usize) -> Rational,
    den: impl Fn(usize) -> Rational,
    cap: usize,
) -> Rational {
    let mut s = Rational::zero();
    for n in 0..cap {
        let top = num(n);
        if top.is_zero() {
            return s;
        }
        s += top / den(n);
    }
    panic!("sum did not terminate within {cap} terms");
}

fn theorem_lhs_oracle(
    j: i64,
    a: &Rational,
    b: &Rational,
    d: &Rational,
    e: &Rational,
    z: &Rational,
) -> Rational {
    let two_a = a * int(2);
    let pref = if a.is_integer() {
        let m: usize = (-a.to_integer()).try_into().unwrap();
        pochhammer(&(e - d), 2 * m) / pochhammer(e, 2 * m)
    } else {
        let m: usize = (-d.to_integer()).try_into().unwrap();
        pochhammer(&(e - &two_a), m) / pochhammer(e, m)
    };
    let num = [two_a.clone(), b.clone(), d.clone()];
    let den = [b * int(2) + int(j), int(1) + &two_a + d - e];
    pref * finite_sum(
        |n| prod(&num, n) * pow(z, n),
        |n| prod(&den, n) * fact(n),
        64,
    )
}

fn theorem_rhs_oracle(
    table: &CoeffTable,
    j: i64,
    a: &Rational,
    b: &Rational,
    d: &Rational,
    e: &Rational,
) -> Rational {
    let bj = b + rat(j, 2);
    let h = rat(1, 2);
    let d2 = d * &h;
    let e2 = e * &h;
    let a_num = [a.clone(), a + &h, d2.clone(), &d2 + &h];
    let a_part = c_a(j, b)
        * finite_sum(
            |n| {
                table.a(j, b, &int(n as i64)).unwrap()
                    * prod(&a_num, n)
                    * pochhammer(&(b + int(half_bracket_up(j))), n)
            },
            |n| prod(&[bj.clone(), &bj + &h, e2.clone(), &e2 + &h], n) * fact(n),
            64,
        );
    if j == 0 || a.is_zero() || d.is_zero() {
        return a_part;
    }
    let b_num = [a + &h, a + int(1), &d2 + &h, &d2 + int(1)];
    let b_part = c_b(j, a, b) * d / e
        * finite_sum(
            |n| {
                table.b(j, b, &int(n as i64)).unwrap()
                    * prod(&b_num, n)
                    * pochhammer(&(b + int(1 + half_bracket(j))), n)
            },
            |n| prod(&[&bj + &h, &bj + int(1), &e2 + &h, &e2 + int(1)], n) * fact(n),
            64,
        );
    a_part + b_part
}

fn case(j: i64, a: &Rational, b: &Rational, d: &Rational, e: &Rational) -> IdentityCase {
    IdentityCase::new(j, a.clone(), b.clone(), d.clone(), e.clone()).unwrap()
}

#[test]
fn prefactor_oracles_agree_with_gamma_simplify() {
    for j in -5..=5 {
        for b in [rat(1, 3), rat(2, 7), rat(-5, 4)] {
            let lhs = gen_transform_parts(&CoeffTable::printed(), j, &int(-1), &b, 2).unwrap();
            let a_row0 = CoeffTable::printed().a(j, &b, &int(0)).unwrap();
            assert_eq!(
                lhs.even.coeff(0),
                &(c_a(j, &b) * a_row0),
                "C_A at j={j}, b={b}"
            );
            if j != 0 {
                let b_row0 = CoeffTable::printed().b(j, &b, &int(0)).unwrap();
                let expected = c_b(j, &int(-1), &b) * b_row0;
                assert_eq!(lhs.odd.coeff(1), &expected, "C_B at j={j}, b={b}");
            }
        }
    }
}

#[test]
fn kummer_against_double_sum() {
    for a in [int(-3), int(-1), rat(1, 4), rat(1, 3), rat(2, 5)] {
        for b in [rat(1, 3), rat(2, 5), rat(5, 4), int(3)] {
            let oracle = kummer_like_lhs(&a, &b, &(&b * int(2)), 24);
            assert_eq!(kummer_lhs_series(&a, &b, 24).unwrap(), oracle);
            assert_eq!(kummer_rhs_series(&a, &b, 24).unwrap(), oracle);
        }
    }
}

#[test]
fn transform_sides_against_oracles() {
    for table in [CoeffTable::printed(), CoeffTable::amended()] {
        for j in -5..=5 {
            for a in [int(-2), rat(1, 4)] {
                for b in [rat(1, 3), rat(2, 7)] {
                    let c = &b * int(2) + int(j);
                    assert_eq!(
                        gen_transform_lhs_series(j, &a, &b, 24).unwrap(),
                        kummer_like_lhs(&a, &b, &c, 24)
                    );
                    assert_eq!(
                        gen_transform_rhs_series_with(&table, j, &a, &b, 24).unwrap(),
                        transform_rhs(&table, j, &a, &b, 24)
                    );
                }
            }
        }
    }
}

#[test]
fn oracle_transform_identity_with_amended_table() {
    let table = CoeffTable::amended();
    for j in -5..=5 {
        for a in [int(-2), rat(1, 4), rat(-3, 5)] {
            for b in [rat(1, 3), rat(2, 7), rat(9, 4)] {
                let c = &b * int(2) + int(j);
                assert_eq!(
                    kummer_like_lhs(&a, &b, &c, 24),
                    transform_rhs(&table, j, &a, &b, 24),
                    "j={j} a={a} b={b}"
                );
            }
        }
    }
}

#[test]
fn printed_table_fails_only_on_b_minus_five() {
    let table = CoeffTable::printed();
    for j in -5..=5 {
        let (a, b) = (rat(1, 4), rat(2, 7));
        let c = &b * int(2) + int(j);
        let lhs = kummer_like_lhs(&a, &b, &c, 24);
        let mismatch = lhs.first_mismatch(&transform_rhs(&table, j, &a, &b, 24));
        if j == -5 {
            // The printed B row misses a constant 12: the first odd
            // coefficient already disagrees.
            assert_eq!(mismatch, Some(1));
        } else {
            assert_eq!(mismatch, None, "j={j}");
        }
    }
    let diff: Vec<_> = CoeffTable::amended().deviations().collect();
    assert_eq!(diff, vec![(-5, Part::B)]);
}

#[test]
fn theorem_against_oracles_both_branches() {
    let printed = CoeffTable::printed();
    let amended = CoeffTable::amended();
    let mut checked = 0;
    for j in -5..=5 {
        for b in [rat(1, 3), rat(2, 5)] {
            for e in [int(4), rat(13, 3)] {
                for a in [int(-1), int(-2), int(-3), int(-4)] {
                    for d in [rat(1, 2), int(1), rat(5, 2)] {
                        let c = case(j, &a, &b, &d, &e);
                        let lhs = theorem_lhs_oracle(j, &a, &b, &d, &e, &int(2));
                        assert_eq!(theorem_lhs(&c, TheoremArgument::Two).unwrap(), lhs);
                        assert_eq!(
                            theorem_rhs_with(&printed, &c).unwrap(),
                            theorem_rhs_oracle(&printed, j, &a, &b, &d, &e)
                        );
                        assert_eq!(
                            theorem_rhs_oracle(&amended, j, &a, &b, &d, &e),
                            lhs,
                            "j={j} a={a} b={b} d={d} e={e}"
                        );
                        checked += 1;
                    }
                }
                for d in [int(-1), int(-2), int(-3), int(-4)] {
                    for a in [rat(1, 3), rat(3, 4)] {
                        let c = case(j, &a, &b, &d, &e);
                        assert_eq!(c.branch, Branch::D);
                        let lhs = theorem_lhs_oracle(j, &a, &b, &d, &e, &int(2));
                        assert_eq!(theorem_lhs(&c, TheoremArgument::Two).unwrap(), lhs);
                        assert_eq!(
                            theorem_rhs_with(&amended, &c).unwrap(),
                            lhs,
                            "j={j} a={a} b={b} d={d} e={e}"
                        );
                        checked += 1;
                    }
                }
            }
        }
    }
    assert_eq!(checked, 11 * 2 * 2 * (12 + 8));
}

#[test]
fn argument_one_fails_generically() {
    let c = case(1, &int(-2), &rat(1, 3), &rat(1, 2), &int(4));
    let one = theorem_lhs(&c, TheoremArgument::One).unwrap();
    assert_eq!(one, theorem_lhs_oracle(1, &c.a, &c.b, &c.d, &c.e, &int(1)));
    assert_ne!(one, theorem_rhs(&c).unwrap());
}

#[test]
fn corollaries_against_theorem() {
    for j in -3..=3 {
        for a in [int(-1), int(-2), int(-3)] {
            for b in [rat(1, 3), rat(2, 5)] {
                for d in [rat(1, 2), rat(5, 2)] {
                    let c = case(j, &a, &b, &d, &rat(13, 3));
                    assert_eq!(
                        corollary_rhs(j, &c).unwrap(),
                        theorem_rhs_oracle(&CoeffTable::printed(), j, &a, &b, &d, &c.e)
                    );
                }
            }
        }
    }
}

#[test]
fn pipeline_against_oracle() {
    for j in -5..=5 {
        for a in [int(-1), int(-2), int(-3)] {
            for (d, e) in [(rat(1, 2), int(3)), (int(1), rat(7, 2))] {
                let c = case(j, &a, &rat(2, 5), &d, &e);
                let m: usize = (-a.to_integer()).try_into().unwrap();
                let poly = kummer_like_lhs(&a, &c.b, &(&c.b * int(2) + int(j)), 2 * m);
                let transformed = poly
                    .coefficients()
                    .iter()
                    .enumerate()
                    .fold(Rational::zero(), |s, (p, x)| {
                        s + x * pochhammer(&d, p) / pochhammer(&e, p)
                    });
                let (lhs, rhs) = beta_integral_pipeline(&c).unwrap();
                assert_eq!(lhs, transformed);
                assert_eq!(rhs, theorem_lhs_oracle(j, &a, &c.b, &d, &e, &int(2)));
                assert_eq!(lhs, rhs);
            }
        }
    }
}

#[test]
fn pipeline_right_half_with_amended_table() {
    for j in -5..=5 {
        let c = case(j, &int(-2), &rat(1, 3), &rat(1, 2), &int(3));
        let (lhs, rhs) = beta_integral_rhs_pipeline(&CoeffTable::amended(), &c).unwrap();
        assert_eq!(lhs, rhs, "j={j}");
    }
}

#[test]
fn worked_examples() {
    // (1)_n = n!
    assert_eq!(pochhammer(&int(1), 5), int(120));
    // three-term sum, the theorem's left series at the canonical case
    let spec = HyperSpec::new(vec![int(-2), int(1), int(1)], vec![int(2), int(-3)], int(2));
    assert_eq!(spec.eval_terminating(), Ok(rat(19, 9)));
    let spec = HyperSpec::new(
        vec![int(-1), rat(-1, 2), rat(1, 2), int(1)],
        vec![rat(3, 2), rat(3, 2), int(2)],
        int(1),
    );
    assert_eq!(spec.eval_terminating(), Ok(rat(19, 18)));

    // table entries as printed
    assert_eq!(coeff_a(2, &int(1), 0), Ok(int(-2)));
    assert_eq!(coeff_b(-3, &int(1), 1), Ok(int(-4)));
    assert_eq!(coeff_a(5, &int(1), 0), Ok(int(-20)));

    // canonical chain 1 + x^2/3 -> 19/18
    let c = case(0, &int(-1), &int(1), &int(1), &int(3));
    assert_eq!(normalized_beta_moment(&int(1), &int(3), 1), rat(1, 3));
    assert_eq!(beta_integral_pipeline(&c), Ok((rat(19, 18), rat(19, 18))));
    assert_eq!(corollary_rhs(0, &c), Ok(rat(19, 18)));
    assert_eq!(theorem_rhs(&c), Ok(rat(19, 18)));
}

#[test]
fn j_two_a_sum_matches_corollary_first_term() {
    let (a, b, d, e) = (int(-1), int(1), int(1), int(4));
    let c = case(2, &a, &b, &d, &e);
    let (a_part, _) = theorem::theorem_rhs_parts(&CoeffTable::printed(), &c).unwrap();
    let h = rat(1, 2);
    let first = HyperSpec::new(
        vec![
            a.clone(),
            &a + &h,
            &b * &h + rat(3, 2),
            &d * &h,
            &d * &h + &h,
        ],
        vec![&b * &h + &h, &b + rat(3, 2), &e * &h, &e * &h + &h],
        int(1),
    )
    .eval_terminating()
    .unwrap();
    assert_eq!(a_part, first);
}

#[test]
fn table_anchor_rows() {
    for b in [rat(1, 3), rat(-7, 2), int(5)] {
        for n in 0..6 {
            assert_eq!(coeff_a(0, &b, n), Ok(int(1)));
            assert_eq!(coeff_b(0, &b, n), Ok(int(0)));
            assert_eq!(coeff_a(1, &b, n), Ok(int(-1)));
            assert_eq!(coeff_b(1, &b, n), Ok(int(1)));
            assert_eq!(coeff_a(-1, &b, n), Ok(int(1)));
            assert_eq!(coeff_b(-1, &b, n), Ok(int(1)));
        }
    }
}

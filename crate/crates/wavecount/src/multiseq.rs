//! Multiplicative sequences and generalised Bernoulli/Euler machinery.
//!
//! Two characteristic functions drive everything: the untwisted `x/sinh x`
//! and the twisted `1/cosh y`. Their log-series coefficients are rational
//! multiples of even power sums of the degrees (tau and varsigma constants),
//! and exponentiating back produces the homogeneous products H_r that appear
//! as wave coefficients. The zeta prefactors of the constants are rewritten
//! through Bernoulli numbers, so the whole pipeline stays in exact rationals.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::degrees::{power_sums_of, Degrees};
use crate::error::{Error, Result};
use crate::numtheory::bernoulli_number;
use crate::poly::{RatPoly, Var};
use crate::rational::{binomial, factorial, rat_int, Rational};
use crate::series::TruncSeries;

/// Which characteristic function a constant sequence belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeqKind {
    /// tau_k of `x/sinh x`.
    TauUntwisted,
    /// varsigma_k of `1/cosh y`.
    VarsigmaTwisted,
    /// Termwise sum of the two, for a product of both series.
    Combined,
}

/// The constants tau_1 ... tau_K (or varsigma, or their sum) of a degree set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeqConstants {
    kind: SeqKind,
    values: Vec<Rational>,
}

impl SeqConstants {
    pub fn kind(&self) -> SeqKind {
        self.kind
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// 2^k as a rational.
fn pow2(k: usize) -> Rational {
    Rational::from(BigInt::one() << k)
}

/// tau_k = (-1)^{k+1} B_{2k} s_{2k} / (2 (2k)!), and the twisted variant with
/// the extra (2^{2k} - 1), from precomputed even power sums s_2, s_4, ...
pub(crate) fn constants_from_even_power_sums(s_even: &[Rational], twisted: bool) -> Vec<Rational> {
    s_even
        .iter()
        .enumerate()
        .map(|(i, s2k)| {
            let k = i + 1;
            let sign = if k % 2 == 1 { 1 } else { -1 };
            let mut c = rat_int(sign) * bernoulli_number(2 * k) * s2k
                / (rat_int(2) * Rational::from(factorial(2 * k)));
            if twisted {
                c *= pow2(2 * k) - Rational::one();
            }
            c
        })
        .collect()
}

/// Constants over an arbitrary (possibly empty) entry slice.
pub(crate) fn constants_of(entries: &[u32], twisted: bool, kmax: usize) -> Vec<Rational> {
    let all = power_sums_of(entries, 2 * kmax);
    let s_even: Vec<Rational> = (1..=kmax).map(|k| all[2 * k - 1].clone()).collect();
    constants_from_even_power_sums(&s_even, twisted)
}

/// The tau (untwisted) or varsigma (twisted) constants of a degree set.
pub fn seq_constants(d: &Degrees, kind: SeqKind, kmax: usize) -> SeqConstants {
    let twisted = match kind {
        SeqKind::TauUntwisted => false,
        SeqKind::VarsigmaTwisted => true,
        SeqKind::Combined => panic!("combined constants come from combine_constants"),
    };
    SeqConstants {
        kind,
        values: constants_of(d.entries(), twisted, kmax),
    }
}

/// Termwise sum of two constant sequences (log-series of a product add).
pub fn combine_constants(a: &SeqConstants, b: &SeqConstants) -> Result<SeqConstants> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok(SeqConstants {
        kind: SeqKind::Combined,
        values: a.values.iter().zip(&b.values).map(|(x, y)| x + y).collect(),
    })
}

/// H_0 ... H_rmax by exponentiating the log-series:
/// exp(sum_k (-1)^k tau_k t^k / k) = sum_r (-1)^r H_r t^r.
pub(crate) fn homogeneous_products(constants: &[Rational], rmax: usize) -> Vec<Rational> {
    assert!(rmax <= constants.len(), "need {rmax} constants");
    let log = TruncSeries::from_fn(rmax, |k| {
        if k == 0 {
            Rational::zero()
        } else {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            rat_int(sign) * &constants[k - 1] / rat_int(k as i64)
        }
    });
    let e = log.exp().expect("log-series has zero constant term");
    (0..=rmax)
        .map(|r| {
            let sign = if r % 2 == 0 { 1 } else { -1 };
            rat_int(sign) * e.coeff(r)
        })
        .collect()
}

/// H_r from the r x r Brioschi determinant divided by r!.
pub fn homogeneous_h(c: &SeqConstants, r: usize) -> Result<Rational> {
    if c.len() < r {
        return Err(Error::InsufficientConstants {
            needed: r,
            have: c.len(),
        });
    }
    if r == 0 {
        return Ok(Rational::one());
    }
    let m: Vec<Vec<Rational>> = (0..r)
        .map(|i| {
            (0..r)
                .map(|j| {
                    if j <= i {
                        c.values[i - j].clone()
                    } else if j == i + 1 {
                        rat_int(-((i + 1) as i64))
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect();
    Ok(determinant(m) / Rational::from(factorial(r)))
}

/// H_r via the exponential of the log-series; must agree with [`homogeneous_h`].
pub fn homogeneous_h_series(c: &SeqConstants, r: usize) -> Result<Rational> {
    if c.len() < r {
        return Err(Error::InsufficientConstants {
            needed: r,
            have: c.len(),
        });
    }
    Ok(homogeneous_products(&c.values, r)[r].clone())
}

/// Exact determinant by Gaussian elimination with pivot search.
fn determinant(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut det = Rational::one();
    for col in 0..n {
        let pivot = match (col..n).find(|&row| !m[row][col].is_zero()) {
            Some(p) => p,
            None => return Rational::zero(),
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for row in (col + 1)..n {
            if m[row][col].is_zero() {
                continue;
            }
            let factor = &m[row][col] / &p;
            for k in col..n {
                let sub = &factor * &m[col][k];
                m[row][k] -= sub;
            }
        }
    }
    det
}

/// Power sums from elementary symmetric functions via Newton's identities.
/// `elem` holds e_1, e_2, ... (e_j = 0 beyond the slice).
fn power_sums_from_elementary(elem: &[Rational], kmax: usize) -> Vec<Rational> {
    let e = |j: usize| -> Rational {
        if j == 0 {
            Rational::one()
        } else {
            elem.get(j - 1).cloned().unwrap_or_else(Rational::zero)
        }
    };
    let mut p: Vec<Rational> = Vec::with_capacity(kmax);
    for k in 1..=kmax {
        let mut acc = Rational::zero();
        for i in 1..k {
            let sign = if i % 2 == 1 { 1 } else { -1 };
            acc += rat_int(sign) * e(i) * &p[k - i - 1];
        }
        let sign = if k % 2 == 1 { 1 } else { -1 };
        acc += rat_int(sign) * rat_int(k as i64) * e(k);
        p.push(acc);
    }
    p
}

/// Todd values T_0 ... T_n for concrete degrees given their elementary
/// symmetric functions (sigma_0 = 1 first): the t^k coefficients of
/// prod_i x_i / (1 - e^{-x_i}) with x_i = d_i t.
pub fn todd_polynomials(sigma: &[Rational], n: usize) -> Vec<Rational> {
    assert!(
        sigma.first().is_some_and(|s| s.is_one()),
        "sigma_0 must be 1"
    );
    // x/(1 - e^{-x}) = sum (-1)^m B_m x^m / m!
    let characteristic = TruncSeries::from_fn(n, |m| {
        let sign = if m % 2 == 0 { 1 } else { -1 };
        rat_int(sign) * bernoulli_number(m) / Rational::from(factorial(m))
    });
    let log_char = characteristic.log().expect("characteristic starts at 1");
    let p = power_sums_from_elementary(&sigma[1..], n);
    let log_sum = TruncSeries::from_fn(n, |k| {
        if k == 0 {
            Rational::zero()
        } else {
            log_char.coeff(k) * &p[k - 1]
        }
    });
    let t = log_sum.exp().expect("zero constant term");
    (0..=n).map(|k| t.coeff(k)).collect()
}

/// A_nu of the multiplicative sequence with characteristic matching
/// prod x_i/sinh x_i, evaluated at the elementary symmetric functions of the
/// squared degrees.
pub fn a_genus(p: &[Rational], nu: usize) -> Result<Rational> {
    if nu == 0 {
        return Ok(Rational::one());
    }
    if p.len() < nu {
        return Err(Error::InsufficientConstants {
            needed: nu,
            have: p.len(),
        });
    }
    // q_k = power sums of the squared degrees = s_{2k} of the degrees
    let q = power_sums_from_elementary(p, nu);
    let tau = constants_from_even_power_sums(&q, false);
    let h = homogeneous_products(&tau, nu);
    let sign = if nu % 2 == 0 { 1 } else { -1 };
    Ok(rat_int(sign) * pow2(4 * nu) * &h[nu])
}

/// prod_i d_i t / (e^{d_i t} - 1), truncated at `order`.
pub(crate) fn bernoulli_base_series(entries: &[u32], order: usize) -> TruncSeries {
    let mut acc = TruncSeries::one(order);
    for &d in entries {
        let factor = TruncSeries::from_fn(order, |m| {
            bernoulli_number(m) * Rational::from(crate::numtheory::big_pow(d as u64, m as u32))
                / Rational::from(factorial(m))
        });
        acc = acc.mul(&factor);
    }
    acc
}

/// prod_j 2 / (e^{beta_j t} + 1), truncated at `order`.
pub(crate) fn euler_base_series(entries: &[u32], order: usize) -> TruncSeries {
    let mut acc = TruncSeries::one(order);
    for &b in entries {
        // (e^{bt} + 1)/2
        let half = TruncSeries::from_fn(order, |m| {
            let e = Rational::from(crate::numtheory::big_pow(b as u64, m as u32))
                / Rational::from(factorial(m));
            if m == 0 {
                (e + Rational::one()) / rat_int(2)
            } else {
                e / rat_int(2)
            }
        });
        acc = acc.mul(&half.inv().expect("constant term 1"));
    }
    acc
}

/// The degree-nu polynomial x -> nu! sum_j base_{nu-j} x^j / j! attached to an
/// exponential generating base series.
pub(crate) fn poly_from_base(base: &TruncSeries, nu: usize, var: Var) -> RatPoly {
    let nu_fact = Rational::from(factorial(nu));
    let coeffs = (0..=nu)
        .map(|j| &nu_fact * base.coeff(nu - j) / Rational::from(factorial(j)))
        .collect();
    RatPoly::from_coeffs(var, coeffs)
}

/// Generalised Bernoulli function B^{(n)}_nu(x | d) by series extraction from
/// t^n prod d_i e^{xt} / prod (e^{d_i t} - 1).
pub fn gen_bernoulli(n: usize, nu: usize, x: &Rational, d: &Degrees) -> Result<Rational> {
    if d.count() != n {
        return Err(Error::ArityMismatch {
            expected: n,
            got: d.count(),
        });
    }
    let base = bernoulli_base_series(d.entries(), nu);
    let with_exp = base.mul(&TruncSeries::exp_linear(x, nu));
    Ok(with_exp.coeff(nu) * Rational::from(factorial(nu)))
}

/// The same value through Todd polynomials:
/// B^{(n)}_r(x|d) = (-1)^r r! sum_s (-1)^s x^s/s! T_{r-s}(sigma).
pub fn gen_bernoulli_todd(n: usize, nu: usize, x: &Rational, d: &Degrees) -> Result<Rational> {
    if d.count() != n {
        return Err(Error::ArityMismatch {
            expected: n,
            got: d.count(),
        });
    }
    let t = todd_polynomials(&d.elementary_symmetric(), nu);
    let mut acc = Rational::zero();
    let mut xpow = Rational::one();
    for s in 0..=nu {
        let sign = if s % 2 == 0 { 1 } else { -1 };
        acc += rat_int(sign) * &xpow / Rational::from(factorial(s)) * &t[nu - s];
        xpow *= x;
    }
    let sign = if nu % 2 == 0 { 1 } else { -1 };
    Ok(rat_int(sign) * Rational::from(factorial(nu)) * acc)
}

/// Central constant D^{(n)}_nu = 2^nu B^{(n)}_nu(sigma_1/2 | d); zero for odd nu.
pub fn d_constant(n: usize, nu: usize, d: &Degrees) -> Result<Rational> {
    let half_sum = rat_int(d.sum() as i64) / rat_int(2);
    Ok(pow2(nu) * gen_bernoulli(n, nu, &half_sum, d)?)
}

/// Generalised Eulerian function E^{(n)}_nu(x | beta) from
/// 2^n e^{xt} / prod (e^{beta_j t} + 1).
pub fn gen_euler(n: usize, nu: usize, x: &Rational, beta: &Degrees) -> Result<Rational> {
    if beta.count() != n {
        return Err(Error::ArityMismatch {
            expected: n,
            got: beta.count(),
        });
    }
    let base = euler_base_series(beta.entries(), nu);
    let with_exp = base.mul(&TruncSeries::exp_linear(x, nu));
    Ok(with_exp.coeff(nu) * Rational::from(factorial(nu)))
}

/// Central Euler constant E^{(n)}_nu at x = (sum beta_j)/2; zero for odd nu.
pub fn gen_euler_const(n: usize, nu: usize, beta: &Degrees) -> Result<Rational> {
    let half_sum = rat_int(beta.sum() as i64) / rat_int(2);
    gen_euler(n, nu, &half_sum, beta)
}

/// Central Euler constant over a raw (possibly empty) entry slice.
pub(crate) fn euler_const_of(entries: &[u32], nu: usize) -> Rational {
    let base = euler_base_series(entries, nu);
    let half_sum = rat_int(crate::degrees::sum_of(entries) as i64) / rat_int(2);
    let with_exp = base.mul(&TruncSeries::exp_linear(&half_sum, nu));
    with_exp.coeff(nu) * Rational::from(factorial(nu))
}

/// Binomial coefficient as a rational, for wave convolutions.
pub(crate) fn binomial_rat(n: usize, k: usize) -> Rational {
    Rational::from(binomial(n, k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn tau(d: &[u32], kmax: usize) -> SeqConstants {
        seq_constants(&Degrees::of(d), SeqKind::TauUntwisted, kmax)
    }

    fn varsigma(d: &[u32], kmax: usize) -> SeqConstants {
        seq_constants(&Degrees::of(d), SeqKind::VarsigmaTwisted, kmax)
    }

    #[test]
    fn tau_of_unit_triple() {
        // s_2 = 3, B_2 = 1/6: tau_1 = 3/24 = 1/8
        assert_eq!(tau(&[1, 1, 1], 1).values(), &[rat(1, 8)]);
    }

    #[test]
    fn varsigma_of_three() {
        // s_2 = 9, (2^2 - 1) B_2 / (2 * 2!) = 1/8: 9/8
        assert_eq!(varsigma(&[3], 1).values(), &[rat(9, 8)]);
    }

    #[test]
    fn tau_second_constant_single_degree() {
        // tau_2 = -B_4 s_4 / (2 * 4!) = d^4 / 1440
        for d1 in 1u32..=5 {
            let got = tau(&[d1], 2).values()[1].clone();
            let want = Rational::from(crate::numtheory::big_pow(d1 as u64, 4)) / rat_int(1440);
            assert_eq!(got, want);
        }
    }

    #[test]
    fn combine_adds_termwise_and_commutes() {
        let d = Degrees::of(&[2, 1]);
        let a = seq_constants(&Degrees::of(&d.even_entries()), SeqKind::TauUntwisted, 2);
        let b = seq_constants(&Degrees::of(&d.odd_entries()), SeqKind::VarsigmaTwisted, 2);
        let ab = combine_constants(&a, &b).unwrap();
        let ba = combine_constants(&b, &a).unwrap();
        assert_eq!(ab.values(), ba.values());
        // tau_1 of (2) is 4/24 = 1/6, varsigma_1 of (1) is 1/8
        assert_eq!(ab.values()[0], rat(1, 6) + rat(1, 8));
        let zero = SeqConstants {
            kind: SeqKind::TauUntwisted,
            values: vec![Rational::zero(); 2],
        };
        assert_eq!(combine_constants(&a, &zero).unwrap().values(), a.values());
    }

    #[test]
    fn combine_rejects_length_mismatch() {
        let a = tau(&[2], 2);
        let b = tau(&[3], 3);
        assert_eq!(
            combine_constants(&a, &b),
            Err(Error::LengthMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn homogeneous_h_base_cases() {
        let c = tau(&[3, 4], 4);
        assert_eq!(homogeneous_h(&c, 0).unwrap(), rat_int(1));
        assert_eq!(homogeneous_h(&c, 1).unwrap(), c.values()[0]);
        // H_2 = (tau_1^2 + tau_2)/2 from the 2x2 determinant
        let want = (c.values()[0].clone() * &c.values()[0] + &c.values()[1]) / rat_int(2);
        assert_eq!(homogeneous_h(&c, 2).unwrap(), want);
    }

    #[test]
    fn homogeneous_h_needs_enough_constants() {
        let c = tau(&[3, 4], 1);
        assert_eq!(
            homogeneous_h(&c, 3),
            Err(Error::InsufficientConstants { needed: 3, have: 1 })
        );
    }

    #[test]
    fn brioschi_matches_series_route() {
        for entries in [vec![1u32], vec![2, 3], vec![4, 4, 5], vec![1, 2, 3, 6]] {
            let c = tau(&entries, 4);
            for r in 0..=4 {
                assert_eq!(
                    homogeneous_h(&c, r).unwrap(),
                    homogeneous_h_series(&c, r).unwrap(),
                    "degrees {entries:?}, r={r}"
                );
            }
        }
    }

    #[test]
    fn todd_fixture_unaugmented_unit() {
        let t = todd_polynomials(&[rat_int(1), rat_int(1)], 2);
        assert_eq!(t[1], rat(1, 2));
    }

    #[test]
    fn todd_fixtures_augmented() {
        // T_bar_1 = (sigma_1 + 1)/2 and T_bar_2 = (sigma_1^2 + sigma_2 + 3 sigma_1 + 1)/12
        for d in [&[3u32, 4][..], &[2, 5, 6], &[1, 1]] {
            let deg = Degrees::of(d);
            let sigma = deg.elementary_symmetric();
            let s1 = sigma[1].clone();
            let s2 = sigma.get(2).cloned().unwrap_or_else(Rational::zero);
            let aug = crate::degrees::augmented_elementary(&sigma);
            let t = todd_polynomials(&aug, 2);
            assert_eq!(t[0], rat_int(1));
            assert_eq!(t[1], (&s1 + rat_int(1)) / rat_int(2));
            assert_eq!(
                t[2],
                (&s1 * &s1 + &s2 + rat_int(3) * &s1 + rat_int(1)) / rat_int(12)
            );
        }
    }

    #[test]
    fn a_genus_fixtures() {
        // A_1 = -(2/3) p_1, A_2 = (2/45)(7 p_1^2 - 4 p_2), at random concrete p
        let p = vec![rat(7, 2), rat(5, 3), rat(1, 4)];
        assert_eq!(a_genus(&p, 0).unwrap(), rat_int(1));
        assert_eq!(a_genus(&p, 1).unwrap(), rat(-2, 3) * &p[0]);
        let want = rat(2, 45) * (rat_int(7) * &p[0] * &p[0] - rat_int(4) * &p[1]);
        assert_eq!(a_genus(&p, 2).unwrap(), want);
        let want3 = rat(-4, 945)
            * (rat_int(16) * &p[2] - rat_int(44) * &p[1] * &p[0]
                + rat_int(31) * &p[0] * &p[0] * &p[0]);
        assert_eq!(a_genus(&p, 3).unwrap(), want3);
    }

    #[test]
    fn gen_bernoulli_low_orders() {
        for d in [&[3u32, 4][..], &[2, 2, 5], &[1, 6, 6, 3]] {
            let deg = Degrees::of(d);
            let n = deg.count();
            let sigma = deg.elementary_symmetric();
            let s = deg.power_sums(2);
            let zero = Rational::zero();
            assert_eq!(gen_bernoulli(n, 0, &zero, &deg).unwrap(), rat_int(1));
            assert_eq!(
                gen_bernoulli(n, 1, &zero, &deg).unwrap(),
                -sigma[1].clone() / rat_int(2)
            );
            assert_eq!(
                gen_bernoulli(n, 2, &zero, &deg).unwrap(),
                &s[1] / rat_int(6) + &sigma[2] / rat_int(2)
            );
        }
    }

    #[test]
    fn gen_bernoulli_one_factor_linear() {
        for d1 in 1u32..=6 {
            let deg = Degrees::of(&[d1]);
            let x = rat(5, 7);
            assert_eq!(
                gen_bernoulli(1, 1, &x, &deg).unwrap(),
                &x - rat_int(d1 as i64) / rat_int(2)
            );
        }
    }

    #[test]
    fn gen_bernoulli_rejects_wrong_arity() {
        let deg = Degrees::of(&[3, 4]);
        assert_eq!(
            gen_bernoulli(3, 1, &Rational::zero(), &deg),
            Err(Error::ArityMismatch {
                expected: 3,
                got: 2
            })
        );
    }

    #[test]
    fn d_constants_fixtures() {
        for d in [&[3u32, 4][..], &[2, 2], &[1, 5, 6], &[2, 3, 4, 5]] {
            let deg = Degrees::of(d);
            let n = deg.count();
            let s = deg.power_sums(4);
            assert_eq!(d_constant(n, 0, &deg).unwrap(), rat_int(1));
            assert_eq!(d_constant(n, 2, &deg).unwrap(), -s[1].clone() / rat_int(3));
            // D_4 = 7 s_4 / 15 + (2/3) sum_{i<j} d_i^2 d_j^2
            let mut cross = Rational::zero();
            let e = deg.entries();
            for i in 0..e.len() {
                for j in (i + 1)..e.len() {
                    cross += rat_int((e[i] as i64).pow(2)) * rat_int((e[j] as i64).pow(2));
                }
            }
            let want = rat(7, 15) * &s[3] + rat(2, 3) * cross;
            assert_eq!(d_constant(n, 4, &deg).unwrap(), want);
        }
    }

    #[test]
    fn d_constant_single_degree_fourth() {
        // D^{(1)}_4 = 7 d^4 / 15
        for d1 in 1u32..=6 {
            let want = rat(7, 15) * Rational::from(crate::numtheory::big_pow(d1 as u64, 4));
            assert_eq!(d_constant(1, 4, &Degrees::of(&[d1])).unwrap(), want);
        }
    }

    #[test]
    fn euler_low_orders() {
        let beta = Degrees::of(&[3]);
        let x = rat(2, 5);
        assert_eq!(gen_euler(1, 0, &x, &beta).unwrap(), rat_int(1));
        assert_eq!(
            gen_euler(1, 1, &x, &beta).unwrap(),
            &x - rat_int(3) / rat_int(2)
        );
        // central E^{(1)}_2 for one odd degree is -beta^2/4
        assert_eq!(gen_euler_const(1, 2, &beta).unwrap(), rat(-9, 4));
    }

    #[test]
    fn central_constants_vanish_at_odd_order() {
        for d in [&[3u32, 4][..], &[2, 5, 5], &[1, 3]] {
            let deg = Degrees::of(d);
            let n = deg.count();
            for nu in [1usize, 3, 5] {
                assert_eq!(d_constant(n, nu, &deg).unwrap(), Rational::zero());
                assert_eq!(gen_euler_const(n, nu, &deg).unwrap(), Rational::zero());
            }
        }
    }

    #[test]
    fn areln_links_d_constants_to_a_genus() {
        // 2^{2 nu} / (2 nu)! * D_{2 nu} = A_nu(p of squared degrees)
        for d in [&[3u32, 4][..], &[2, 5], &[1, 2, 3], &[4, 4, 6, 3]] {
            let deg = Degrees::of(d);
            let n = deg.count();
            let squares: Vec<u32> = deg.entries().iter().map(|&x| x * x).collect();
            let p = Degrees::of(&squares).elementary_symmetric()[1..].to_vec();
            for nu in 0..=2usize {
                let lhs = pow2(2 * nu) / Rational::from(factorial(2 * nu))
                    * d_constant(n, 2 * nu, &deg).unwrap();
                let rhs = a_genus(&p, nu).unwrap();
                assert_eq!(lhs, rhs, "degrees {d:?}, nu={nu}");
            }
        }
    }

    #[test]
    fn todd_path_matches_series_path() {
        let cases = [
            (vec![1u32], rat(1, 3)),
            (vec![2, 3], rat(-5, 4)),
            (vec![1, 1, 4], rat(7, 6)),
            (vec![2, 2, 3, 5], rat_int(2)),
        ];
        for (entries, x) in cases {
            let deg = Degrees::of(&entries);
            let n = deg.count();
            for nu in 0..=n {
                assert_eq!(
                    gen_bernoulli(n, nu, &x, &deg).unwrap(),
                    gen_bernoulli_todd(n, nu, &x, &deg).unwrap(),
                    "degrees {entries:?}, nu={nu}"
                );
            }
        }
    }
}

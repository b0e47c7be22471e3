//! Denumerants, Popoviciu closed forms, and the first two Sylvester waves.
//!
//! The denumerant counts nonnegative solutions of `sum d_i m_i = l`. It
//! splits into the polynomial wave W1 (root of unity 1), the alternating
//! wave W2 (root -1, carrying a `(-1)^l` factor), and a periodic residual
//! ("undulant") collecting all higher roots of unity, which this crate only
//! evaluates numerically.

use num_traits::{One, Zero};

use crate::degrees::{product_of, sum_of, Degrees};
use crate::error::{Error, Result};
use crate::multiseq::{
    bernoulli_base_series, binomial_rat, constants_of, euler_base_series, euler_const_of,
    homogeneous_products, poly_from_base,
};
use crate::numtheory::{gcd, mod_inverse};
use crate::poly::{RatPoly, Var};
use crate::rational::{factorial, rat_int, Rational};

/// Denumerant by direct recursive enumeration over the degrees.
pub fn denumerant_brute(d: &Degrees, l: i64) -> u64 {
    fn count(entries: &[u32], l: i64) -> u64 {
        match entries {
            [] => u64::from(l == 0),
            [d0] => u64::from(l >= 0 && l % (*d0 as i64) == 0),
            [rest @ .., last] => {
                let step = *last as i64;
                let mut acc = 0;
                let mut remaining = l;
                while remaining >= 0 {
                    acc += count(rest, remaining);
                    remaining -= step;
                }
                acc
            }
        }
    }
    if l < 0 {
        0
    } else {
        count(d.entries(), l)
    }
}

/// Denumerants for all levels 0..=lmax by expanding prod (1 - sigma^{d_i})^{-1}.
///
/// Multiplying the running coefficient table by each geometric factor in turn
/// is exactly the series product; counts stay in u64.
pub fn denumerant_series_range(d: &Degrees, lmax: i64) -> Vec<u64> {
    if lmax < 0 {
        return vec![];
    }
    let n = lmax as usize;
    let mut coeff = vec![0u64; n + 1];
    coeff[0] = 1;
    for &deg in d.entries() {
        let step = deg as usize;
        for j in step..=n {
            coeff[j] += coeff[j - step];
        }
    }
    coeff
}

/// Denumerant by series-coefficient extraction.
pub fn denumerant_series(d: &Degrees, l: i64) -> u64 {
    if l < 0 {
        0
    } else {
        denumerant_series_range(d, l)[l as usize]
    }
}

/// The denumerant `l / {d,}` (series route; the enumeration route is the
/// independent oracle used by the verification suites).
pub fn denumerant(d: &Degrees, l: i64) -> u64 {
    denumerant_series(d, l)
}

/// Popoviciu's closed form for two coprime degrees:
/// `l/(d1 d2) + 1 - {d1^{-1} l / d2} - {d2^{-1} l / d1}`.
///
/// The sawtooth of an integer numerator is residue arithmetic,
/// {inv * l / m} = ((inv * l) mod m)/m, so the whole expression is assembled
/// exactly on the common denominator d1 d2.
pub fn popoviciu(d1: u32, d2: u32, l: i64) -> Result<u64> {
    if gcd(d1 as u64, d2 as u64) != 1 {
        return Err(Error::NotCoprime {
            a: d1 as i64,
            m: d2 as i64,
        });
    }
    let r1 = inverse_residue(d1, d2, l)?;
    let r2 = inverse_residue(d2, d1, l)?;
    let d1d2 = (d1 as i128) * (d2 as i128);
    let numerator = (l as i128) + d1d2 - r1 * (d1 as i128) - r2 * (d2 as i128);
    debug_assert!(numerator >= 0 && numerator % d1d2 == 0);
    Ok((numerator / d1d2) as u64)
}

/// `(a^{-1} l) mod m` with the inverse taken mod m; zero when m = 1.
fn inverse_residue(a: u32, m: u32, l: i64) -> Result<i128> {
    if m == 1 {
        return Ok(0);
    }
    let inv = mod_inverse(a as i64, m as u64)? as i128;
    Ok((inv * (l as i128).rem_euclid(m as i128)).rem_euclid(m as i128))
}

/// The reduced inverses (delta_1, delta_2) of the gcd extension:
/// delta_1 (d1/e) = 1 mod (d2/e) and delta_2 (d2/e) = 1 mod (d1/e).
pub fn reduced_inverses(d1: u32, d2: u32) -> (u64, u64) {
    let e = gcd(d1 as u64, d2 as u64) as u32;
    let m1 = (d2 / e) as u64;
    let m2 = (d1 / e) as u64;
    let delta1 = if m1 == 1 {
        0
    } else {
        mod_inverse((d1 / e) as i64, m1).expect("d1/e and d2/e are coprime")
    };
    let delta2 = if m2 == 1 {
        0
    } else {
        mod_inverse((d2 / e) as i64, m2).expect("d2/e and d1/e are coprime")
    };
    (delta1, delta2)
}

/// Extension of Popoviciu's theorem to degrees with gcd e: zero unless e | l,
/// otherwise `l e/(d1 d2) + 1 - {delta_1 l / d2} - {delta_2 l / d1}`.
pub fn popoviciu_gcd(d1: u32, d2: u32, l: i64) -> u64 {
    let e = gcd(d1 as u64, d2 as u64) as i64;
    if l % e != 0 {
        return 0;
    }
    let (delta1, delta2) = reduced_inverses(d1, d2);
    let residue = |delta: u64, m: u32| {
        ((delta as i128) * (l as i128).rem_euclid(m as i128)).rem_euclid(m as i128)
    };
    // l e/(d1 d2) + 1 - {delta_1 l / d2} - {delta_2 l / d1} over d1 d2
    let d1d2 = (d1 as i128) * (d2 as i128);
    let numerator = (l as i128) * (e as i128) + d1d2
        - residue(delta1, d2) * (d1 as i128)
        - residue(delta2, d1) * (d2 as i128);
    debug_assert!(numerator >= 0 && numerator % d1d2 == 0);
    (numerator / d1d2) as u64
}

/// Frobenius number d1 d2 - d1 - d2 of two coprime degrees >= 2.
pub fn frobenius(d1: u32, d2: u32) -> Result<i64> {
    if d1 == 1 || d2 == 1 {
        return Err(Error::DegenerateDegree(d1.min(d2)));
    }
    if gcd(d1 as u64, d2 as u64) != 1 {
        return Err(Error::NotCoprime {
            a: d1 as i64,
            m: d2 as i64,
        });
    }
    Ok((d1 as i64) * (d2 as i64) - (d1 as i64) - (d2 as i64))
}

/// First Sylvester wave as a polynomial in the augmented argument
/// lbar = l + sigma_1/2:
/// W1 = (1/prod d_i) sum_r (-1)^r H_r(tau) lbar^{D-1-2r} / (D-1-2r)!.
pub fn wave_w1(d: &Degrees) -> RatPoly {
    wave_from_constants(
        &constants_of(d.entries(), false, (d.count().max(1) - 1) / 2),
        d.count(),
        &Rational::from(d.product()),
    )
}

/// Second Sylvester wave (the polynomial factor of the `(-1)^l` term), in
/// lbar: (1/(2^beta prod alpha_i)) sum_r (-1)^r H_r(tau+varsigma)
/// lbar^{alpha-1-2r} / (alpha-1-2r)!. Zero when no degree is even.
pub fn wave_w2(d: &Degrees) -> RatPoly {
    let alpha = d.even_entries();
    let beta = d.odd_entries();
    if alpha.is_empty() {
        return RatPoly::zero(Var::LBar);
    }
    let kmax = (alpha.len() - 1) / 2;
    let tau = constants_of(&alpha, false, kmax);
    let varsigma = constants_of(&beta, true, kmax);
    let combined: Vec<Rational> = tau.iter().zip(&varsigma).map(|(a, b)| a + b).collect();
    let scale = Rational::from(product_of(&alpha))
        * Rational::from(num_bigint::BigInt::one() << beta.len());
    wave_from_constants(&combined, alpha.len(), &scale)
}

/// sum_r (-1)^r H_r x^{count-1-2r} / (count-1-2r)! / scale.
fn wave_from_constants(constants: &[Rational], count: usize, scale: &Rational) -> RatPoly {
    let h = homogeneous_products(constants, constants.len());
    let mut coeffs = vec![Rational::zero(); count];
    let mut r = 0;
    while 2 * r < count {
        let power = count - 1 - 2 * r;
        let sign = if r % 2 == 0 { 1 } else { -1 };
        coeffs[power] = rat_int(sign) * &h[r] / Rational::from(factorial(power)) / scale;
        r += 1;
    }
    RatPoly::from_coeffs(Var::LBar, coeffs)
}

/// W2 through the Bernoulli-Euler convolution that keeps the Bernoulli
/// argument augmented (an independent validator for [`wave_w2`]).
pub fn wave_w2_bernoulli_form(d: &Degrees) -> RatPoly {
    let alpha = d.even_entries();
    let beta = d.odd_entries();
    if alpha.is_empty() {
        return RatPoly::zero(Var::LBar);
    }
    let a = alpha.len();
    let half_alpha_sum = rat_int(sum_of(&alpha) as i64) / rat_int(2);
    let mut acc = RatPoly::zero(Var::LBar);
    for nu in 0..a {
        let b_poly = poly_from_base(&bernoulli_base_series(&alpha, nu), nu, Var::LBar)
            .shift(&half_alpha_sum);
        let e_const = euler_const_of(&beta, a - 1 - nu);
        if e_const.is_zero() {
            continue;
        }
        acc = acc.add(&b_poly.scale(&(binomial_rat(a - 1, nu) * e_const)));
    }
    let scale = Rational::one()
        / (Rational::from(num_bigint::BigInt::one() << beta.len())
            * Rational::from(factorial(a - 1))
            * Rational::from(product_of(&alpha)));
    acc.scale(&scale)
}

/// W2 through the dual convolution with central Bernoulli constants and the
/// Euler argument augmented (second independent validator).
pub fn wave_w2_euler_form(d: &Degrees) -> RatPoly {
    let alpha = d.even_entries();
    let beta = d.odd_entries();
    if alpha.is_empty() {
        return RatPoly::zero(Var::LBar);
    }
    let a = alpha.len();
    let total = a + beta.len();
    let half_beta_sum = rat_int(sum_of(&beta) as i64) / rat_int(2);
    let half_alpha_sum = rat_int(sum_of(&alpha) as i64) / rat_int(2);
    let alpha_degrees = Degrees::new(alpha.clone()).expect("alpha nonempty");
    let mut acc = RatPoly::zero(Var::LBar);
    for nu in 0..a {
        // 2^{a-1-nu} B^{(a)}_{a-1-nu}(sum alpha/2 | alpha)
        let d_const = Rational::from(num_bigint::BigInt::one() << (a - 1 - nu))
            * crate::multiseq::gen_bernoulli(a, a - 1 - nu, &half_alpha_sum, &alpha_degrees)
                .expect("arity matches");
        if d_const.is_zero() {
            continue;
        }
        let e_poly =
            poly_from_base(&euler_base_series(&beta, nu), nu, Var::LBar).shift(&half_beta_sum);
        let two_nu = Rational::from(num_bigint::BigInt::one() << nu);
        acc = acc.add(&e_poly.scale(&(binomial_rat(a - 1, nu) * two_nu * d_const)));
    }
    let scale = Rational::one()
        / (Rational::from(num_bigint::BigInt::one() << (total - 1))
            * Rational::from(factorial(a - 1))
            * Rational::from(product_of(&alpha)));
    acc.scale(&scale)
}

/// One- and two-wave decomposition of a denumerant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WaveDecomposition {
    pub degrees: Degrees,
    /// lbar = l + lbar_shift with lbar_shift = sigma_1 / 2.
    pub lbar_shift: Rational,
    pub w1: RatPoly,
    /// Multiplied by (-1)^l on evaluation.
    pub w2: RatPoly,
    pub even_degrees: Vec<u32>,
    pub odd_degrees: Vec<u32>,
}

impl WaveDecomposition {
    pub fn of(d: &Degrees) -> Self {
        WaveDecomposition {
            degrees: d.clone(),
            lbar_shift: rat_int(d.sum() as i64) / rat_int(2),
            w1: wave_w1(d),
            w2: wave_w2(d),
            even_degrees: d.even_entries(),
            odd_degrees: d.odd_entries(),
        }
    }

    /// w1(l + sigma_1/2) + (-1)^l w2(l + sigma_1/2).
    pub fn evaluate(&self, l: i64) -> Rational {
        let lbar = rat_int(l) + &self.lbar_shift;
        let sign = if l.rem_euclid(2) == 0 { 1 } else { -1 };
        self.w1.eval(&lbar) + rat_int(sign) * self.w2.eval(&lbar)
    }
}

/// [`WaveDecomposition::evaluate`] as a free function.
pub fn evaluate_waves(w: &WaveDecomposition, l: i64) -> Rational {
    w.evaluate(l)
}

/// Periodic residual U(l) = denumerant - (W1 + (-1)^l W2) at l >= 0.
pub fn undulant(d: &Degrees, l: i64) -> Rational {
    assert!(l >= 0, "undulant is defined for nonnegative levels");
    let w = WaveDecomposition::of(d);
    undulant_with(&w, l)
}

/// Residual against a precomputed decomposition (for scans over l).
pub fn undulant_with(w: &WaveDecomposition, l: i64) -> Rational {
    rat_int(denumerant(&w.degrees, l) as i64) - w.evaluate(l)
}

/// Offending monomials found by [`check_reciprocity`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReciprocityReport {
    /// Exponents of lbar with nonzero coefficient that break the W1 parity
    /// (k != D-1 mod 2), with the coefficients themselves.
    pub w1_offenders: Vec<(usize, Rational)>,
    /// Same for W2 against alpha-1.
    pub w2_offenders: Vec<(usize, Rational)>,
}

impl ReciprocityReport {
    pub fn pass(&self) -> bool {
        self.w1_offenders.is_empty() && self.w2_offenders.is_empty()
    }
}

/// Coefficient-parity check: in lbar, W1 may only use exponents of the same
/// parity as D-1, and W2 only exponents of the same parity as alpha-1.
pub fn check_reciprocity(w: &WaveDecomposition) -> ReciprocityReport {
    let parity_offenders = |p: &RatPoly, anchor: usize| -> Vec<(usize, Rational)> {
        p.coeffs()
            .iter()
            .enumerate()
            .filter(|(k, c)| !c.is_zero() && (k % 2) != (anchor % 2))
            .map(|(k, c)| (k, c.clone()))
            .collect()
    };
    let w1_offenders = parity_offenders(&w.w1, w.degrees.count() - 1);
    let w2_offenders = if w.even_degrees.is_empty() {
        // all degrees odd: W2 must vanish identically
        w.w2.coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k, c.clone()))
            .collect()
    } else {
        parity_offenders(&w.w2, w.even_degrees.len() - 1)
    };
    ReciprocityReport {
        w1_offenders,
        w2_offenders,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac_part, rat};

    #[test]
    fn denumerant_frobenius_gap() {
        assert_eq!(denumerant(&Degrees::of(&[3, 4]), 5), 0);
        assert_eq!(denumerant_brute(&Degrees::of(&[3, 4]), 5), 0);
    }

    #[test]
    fn denumerant_lune_floor_form() {
        // (q, 1): floor(l/q) + 1
        for q in 1i64..=7 {
            let d = Degrees::of(&[q as u32, 1]);
            for l in 0..=30 {
                assert_eq!(denumerant(&d, l) as i64, l / q + 1);
            }
        }
        assert_eq!(denumerant(&Degrees::of(&[5, 1]), 12), 3);
    }

    #[test]
    fn denumerant_at_zero_and_negative() {
        for entries in [&[2u32, 7][..], &[1, 1, 1], &[6]] {
            let d = Degrees::of(entries);
            assert_eq!(denumerant(&d, 0), 1);
            assert_eq!(denumerant(&d, -3), 0);
            assert_eq!(denumerant_brute(&d, -3), 0);
        }
    }

    #[test]
    fn popoviciu_examples() {
        assert_eq!(popoviciu(3, 4, 1).unwrap(), 0);
        assert_eq!(popoviciu(3, 4, 12).unwrap(), 2);
        for l in 0..=20 {
            assert_eq!(popoviciu(1, 1, l).unwrap(), l as u64 + 1);
        }
    }

    #[test]
    fn popoviciu_rejects_common_factor() {
        assert!(popoviciu(4, 6, 2).is_err());
    }

    #[test]
    fn popoviciu_residue_form_equals_sawtooth_form() {
        // the residue shortcut must agree with the literal {a^{-1} l / m} terms
        for (d1, d2) in [(3u32, 4u32), (5, 9), (7, 11), (1, 8)] {
            for l in 0..=200i64 {
                let mut literal = rat_int(l) / rat_int((d1 as i64) * (d2 as i64)) + rat_int(1);
                for (a, m) in [(d1, d2), (d2, d1)] {
                    if m > 1 {
                        let inv = crate::numtheory::mod_inverse(a as i64, m as u64).unwrap();
                        literal -= crate::rational::frac_part(
                            &(rat_int(inv as i64) * rat_int(l) / rat_int(m as i64)),
                        );
                    }
                }
                assert_eq!(rat_int(popoviciu(d1, d2, l).unwrap() as i64), literal);
            }
        }
    }

    #[test]
    fn popoviciu_gcd_examples() {
        for l in (1..=31).step_by(2) {
            assert_eq!(popoviciu_gcd(4, 6, l), 0);
        }
        assert_eq!(popoviciu_gcd(4, 6, 12), 2);
        assert_eq!(reduced_inverses(4, 6), (2, 1));
        assert_eq!(reduced_inverses(6, 10), (2, 2));
    }

    #[test]
    fn popoviciu_gcd_reduces_to_popoviciu() {
        for (d1, d2) in [(3u32, 4u32), (5, 7), (9, 2), (1, 6)] {
            for l in 0..=60 {
                assert_eq!(popoviciu_gcd(d1, d2, l), popoviciu(d1, d2, l).unwrap());
            }
        }
    }

    #[test]
    fn frobenius_examples() {
        assert_eq!(frobenius(3, 4).unwrap(), 5);
        assert_eq!(frobenius(2, 3).unwrap(), 1);
        assert_eq!(frobenius(2, 5).unwrap(), 3);
        assert_eq!(frobenius(4, 6), Err(Error::NotCoprime { a: 4, m: 6 }));
        assert_eq!(frobenius(1, 5), Err(Error::DegenerateDegree(1)));
        // the gap is real: zero there, positive after
        let d = Degrees::of(&[3, 4]);
        assert_eq!(denumerant(&d, 5), 0);
        for l in 6..=40 {
            assert!(denumerant(&d, l) >= 1);
        }
    }

    #[test]
    fn w1_fixtures() {
        // (1,1): W1 = lbar
        assert_eq!(
            wave_w1(&Degrees::of(&[1, 1])).coeffs(),
            &[rat_int(0), rat_int(1)]
        );
        // (2,1): W1 = lbar/2
        assert_eq!(
            wave_w1(&Degrees::of(&[2, 1])).coeffs(),
            &[rat_int(0), rat(1, 2)]
        );
        // (1,1,1): W1 = lbar^2/2 - 1/8, equal to (l+1)(l+2)/2
        let w = wave_w1(&Degrees::of(&[1, 1, 1]));
        assert_eq!(w.coeffs(), &[rat(-1, 8), rat_int(0), rat(1, 2)]);
        for l in 0..=10i64 {
            let lbar = rat_int(l) + rat(3, 2);
            assert_eq!(w.eval(&lbar), rat_int((l + 1) * (l + 2) / 2));
        }
    }

    #[test]
    fn w2_fixtures() {
        assert!(wave_w2(&Degrees::of(&[3, 5])).is_zero());
        assert_eq!(wave_w2(&Degrees::of(&[2, 1])).coeffs(), &[rat(1, 4)]);
        assert_eq!(
            wave_w2(&Degrees::of(&[2, 2])).coeffs(),
            &[rat_int(0), rat(1, 4)]
        );
    }

    #[test]
    fn two_wave_reconstruction_for_small_degrees() {
        // only roots +-1 occur for degrees in {1, 2}
        let w = WaveDecomposition::of(&Degrees::of(&[2, 1]));
        for l in 0..=50 {
            assert_eq!(w.evaluate(l), rat_int(l / 2 + 1));
        }
        let w22 = WaveDecomposition::of(&Degrees::of(&[2, 2]));
        for l in 0..=50 {
            let want = if l % 2 == 0 {
                rat_int(l / 2 + 1)
            } else {
                rat_int(0)
            };
            assert_eq!(w22.evaluate(l), want);
        }
    }

    #[test]
    fn evaluate_waves_examples() {
        let w = WaveDecomposition::of(&Degrees::of(&[2, 1]));
        assert_eq!(evaluate_waves(&w, 7), rat_int(4));
        let w34 = WaveDecomposition::of(&Degrees::of(&[3, 4]));
        assert_eq!(evaluate_waves(&w34, 0), rat(10, 24));
    }

    #[test]
    fn undulant_examples() {
        let d21 = Degrees::of(&[2, 1]);
        for l in 0..=40 {
            assert_eq!(undulant(&d21, l), Rational::zero());
        }
        let d34 = Degrees::of(&[3, 4]);
        assert_eq!(undulant(&d34, 0), rat(7, 12));
        let w = WaveDecomposition::of(&d34);
        for l in 0..=36 {
            assert_eq!(undulant_with(&w, l), undulant_with(&w, l + 12));
        }
    }

    #[test]
    fn w1_cross_forms_agree() {
        // Todd route, in l:  (1/prod d) sum_k l^k/k! T_{D-1-k}(sigma)
        // D route, in lbar:  (1/(2^{D-1}(D-1)! prod d)) sum_k C(D-1,k) (2 lbar)^k D_{D-1-k}
        use crate::multiseq::{d_constant, todd_polynomials};
        for entries in [
            &[1u32, 1][..],
            &[3, 4],
            &[2, 5, 6],
            &[1, 2, 3, 4],
            &[2, 2, 7],
        ] {
            let d = Degrees::of(entries);
            let count = d.count();
            let prod = Rational::from(d.product());
            let w1 = wave_w1(&d);

            let todd = todd_polynomials(&d.elementary_symmetric(), count - 1);
            let via_todd_l = RatPoly::from_coeffs(
                Var::L,
                (0..count)
                    .map(|k| todd[count - 1 - k].clone() / Rational::from(factorial(k)) / &prod)
                    .collect(),
            );
            let shift = rat_int(d.sum() as i64) / rat_int(2);
            assert_eq!(
                via_todd_l.shift(&-shift.clone()).with_var(Var::LBar),
                w1,
                "Todd route for {entries:?}"
            );

            let scale = Rational::from(num_bigint::BigInt::one() << (count - 1))
                * Rational::from(factorial(count - 1))
                * &prod;
            let via_d = RatPoly::from_coeffs(
                Var::LBar,
                (0..count)
                    .map(|k| {
                        binomial_rat(count - 1, k)
                            * Rational::from(num_bigint::BigInt::one() << k)
                            * d_constant(count, count - 1 - k, &d).unwrap()
                            / &scale
                    })
                    .collect(),
            );
            assert_eq!(via_d, w1, "central-constant route for {entries:?}");
        }
    }

    #[test]
    fn w2_cross_forms_agree() {
        for entries in [
            &[2u32, 1][..],
            &[2, 2],
            &[3, 4],
            &[4, 6],
            &[2, 3, 4],
            &[2, 2, 5, 6],
            &[1, 2, 3, 4, 5],
        ] {
            let d = Degrees::of(entries);
            let direct = wave_w2(&d);
            assert_eq!(direct, wave_w2_bernoulli_form(&d), "w21 for {entries:?}");
            assert_eq!(direct, wave_w2_euler_form(&d), "w22 for {entries:?}");
        }
    }

    #[test]
    fn reciprocity_parity_holds_and_detects_corruption() {
        let w34 = WaveDecomposition::of(&Degrees::of(&[3, 4]));
        assert!(check_reciprocity(&w34).pass());
        let w111 = WaveDecomposition::of(&Degrees::of(&[1, 1, 1]));
        assert!(check_reciprocity(&w111).pass());

        // negative control: an lbar^0 term in W1 for D = 2 must be flagged
        let mut corrupted = WaveDecomposition::of(&Degrees::of(&[3, 4]));
        corrupted.w1 = corrupted.w1.add(&RatPoly::constant(Var::LBar, rat_int(1)));
        let report = check_reciprocity(&corrupted);
        assert!(!report.pass());
        assert_eq!(report.w1_offenders, vec![(0, rat_int(1))]);
    }

    #[test]
    fn hermite_identity() {
        // {3l/4 + 1/2} + {3l/4} = {l/2} + 1/2
        for l in 0..=100 {
            let lhs = frac_part(&(rat(3, 4) * rat_int(l) + rat(1, 2)))
                + frac_part(&(rat(3, 4) * rat_int(l)));
            let rhs = frac_part(&(rat_int(l) / rat_int(2))) + rat(1, 2);
            assert_eq!(lhs, rhs, "l = {l}");
        }
    }
}

//! Ehrhart counts of the weighted simplex and their polynomial parts.
//!
//! The closed count `#{m : sum d_i m_i <= l}` is the denumerant of the
//! degree set with a 1 appended, so its polynomial part is the first wave of
//! the augmented set. The classical two- and three-degree reference
//! polynomials use a different splitting convention (their periodic
//! remainders have nonzero mean), so only the top two coefficients are
//! comparable; the rest are reported as differences, never asserted equal.

use num_traits::Zero;

use crate::degrees::Degrees;
use crate::error::{Error, Result};
use crate::multiseq::{constants_from_even_power_sums, homogeneous_products};
use crate::poly::{RatPoly, Var};
use crate::rational::{factorial, rat, rat_int, Rational};
use crate::waves::{denumerant, denumerant_series_range};

/// Closed simplex count: the number of m in Z_+^D with sum d_i m_i <= l.
pub fn ehrhart_count(d: &Degrees, l: i64) -> u64 {
    assert!(l >= 0, "dilation must be nonnegative");
    denumerant(&d.append_one(), l)
}

/// Accumulated degeneracy sum_{l'=0}^{l} denumerant(d, l'); equals
/// [`ehrhart_count`] by the 1/(1-sigma) recursion.
pub fn accumulate(d: &Degrees, l: i64) -> u64 {
    assert!(l >= 0, "dilation must be nonnegative");
    denumerant_series_range(d, l).iter().sum()
}

/// Polynomial part of the Ehrhart quasipolynomial, in both arguments.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EhrhartResult {
    pub degrees: Degrees,
    /// lbar = l + (sigma_1 + 1)/2 for the augmented degree set.
    pub lbar_shift: Rational,
    pub poly_lbar: RatPoly,
    pub poly_l: RatPoly,
}

/// Polynomial part from the augmented constants tau_k built on s_{2k} + 1
/// (the degree-1 augmentation done directly on the power sums).
///
/// Coefficient-for-coefficient this is the first wave of `d` with a 1
/// appended; the verification suites check that equality against
/// [`crate::waves::wave_w1`].
pub fn ehrhart_poly_part(d: &Degrees) -> EhrhartResult {
    let count_aug = d.count() + 1;
    let kmax = (count_aug - 1) / 2;
    let s = d.power_sums(2 * kmax);
    let s_even_plus_one: Vec<Rational> = (1..=kmax)
        .map(|k| s[2 * k - 1].clone() + rat_int(1))
        .collect();
    let tau = constants_from_even_power_sums(&s_even_plus_one, false);
    let h = homogeneous_products(&tau, kmax);
    let prod = Rational::from(d.product());
    let mut coeffs = vec![Rational::zero(); count_aug];
    for (r, h_r) in h.iter().enumerate() {
        let power = count_aug - 1 - 2 * r;
        let sign = if r % 2 == 0 { 1 } else { -1 };
        coeffs[power] = rat_int(sign) * h_r / Rational::from(factorial(power)) / &prod;
    }
    let poly_lbar = RatPoly::from_coeffs(Var::LBar, coeffs);
    let lbar_shift = rat_int((d.sum() + 1) as i64) / rat_int(2);
    let poly_l = poly_lbar.shift_into(&lbar_shift, Var::L);
    EhrhartResult {
        degrees: d.clone(),
        lbar_shift,
        poly_lbar,
        poly_l,
    }
}

/// The classical two-degree polynomial part
/// (1/2 d1 d2)[l^2 + l(d1+d2+1) + (d1^2+d2^2+3 d1 d2+1)/6].
///
/// A tabulated test fixture, not a computation path.
pub fn reference_d2(d1: u32, d2: u32) -> RatPoly {
    let (d1, d2) = (d1 as i64, d2 as i64);
    let scale = rat(1, 2 * d1 * d2);
    RatPoly::from_coeffs(
        Var::L,
        vec![
            rat(d1 * d1 + d2 * d2 + 3 * d1 * d2 + 1, 6) * &scale,
            rat_int(d1 + d2 + 1) * &scale,
            scale,
        ],
    )
}

/// The classical three-degree polynomial part
/// (1/2 d1 d2 d3)[l^3/3 + (l^2/2)(sigma_1+1) + (l/6)(3(sigma_1+sigma_2)+s_2)];
/// its constant term is convention-dependent and set to zero here.
pub fn reference_d3(d1: u32, d2: u32, d3: u32) -> RatPoly {
    let (d1, d2, d3) = (d1 as i64, d2 as i64, d3 as i64);
    let sigma1 = d1 + d2 + d3;
    let sigma2 = d1 * d2 + d2 * d3 + d3 * d1;
    let s2 = d1 * d1 + d2 * d2 + d3 * d3;
    let scale = rat(1, 2 * d1 * d2 * d3);
    RatPoly::from_coeffs(
        Var::L,
        vec![
            Rational::zero(),
            rat(3 * (sigma1 + sigma2) + s2, 6) * &scale,
            rat_int(sigma1 + 1) / rat_int(2) * &scale,
            rat(1, 3) * &scale,
        ],
    )
}

/// One row of the computed-versus-reference comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffComparison {
    pub power: usize,
    pub computed: Rational,
    pub reference: Rational,
    pub difference: Rational,
}

/// Side-by-side comparison of the computed polynomial part with the
/// classical reference, coefficient by coefficient (dimensions 2 and 3 only).
pub fn compare_with_reference(d: &Degrees) -> Result<Vec<CoeffComparison>> {
    let e = d.entries();
    let reference = match e {
        [d1, d2] => reference_d2(*d1, *d2),
        [d1, d2, d3] => reference_d3(*d1, *d2, *d3),
        _ => return Err(Error::DimensionUnsupported(d.count())),
    };
    let computed = ehrhart_poly_part(d).poly_l;
    Ok((0..=d.count())
        .map(|power| {
            let c = computed.coeff(power);
            let r = reference.coeff(power);
            CoeffComparison {
                power,
                difference: &c - &r,
                computed: c,
                reference: r,
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::waves::wave_w1;

    #[test]
    fn count_examples() {
        let d11 = Degrees::of(&[1, 1]);
        for l in 0..=20 {
            assert_eq!(ehrhart_count(&d11, l), ((l + 1) * (l + 2) / 2) as u64);
        }
        assert_eq!(ehrhart_count(&Degrees::of(&[3, 4]), 12), 11);
        let d111 = Degrees::of(&[1, 1, 1]);
        for l in 0..=20 {
            let want = ((l + 1) * (l + 2) * (l + 3) / 6) as u64;
            assert_eq!(ehrhart_count(&d111, l), want);
        }
    }

    #[test]
    fn accumulate_matches_count() {
        for entries in [&[3u32, 4][..], &[2, 1], &[2, 3, 5], &[6]] {
            let d = Degrees::of(entries);
            for l in 0..=40 {
                assert_eq!(
                    accumulate(&d, l),
                    ehrhart_count(&d, l),
                    "{entries:?} at {l}"
                );
            }
        }
        assert_eq!(accumulate(&Degrees::of(&[3, 4]), 12), 11);
        assert_eq!(accumulate(&Degrees::of(&[2, 1]), 4), 9);
    }

    #[test]
    fn counts_start_at_one_and_grow() {
        for entries in [&[3u32, 4][..], &[5, 2, 2]] {
            let d = Degrees::of(entries);
            assert_eq!(ehrhart_count(&d, 0), 1);
            let mut prev = 0;
            for l in 0..=30 {
                let c = ehrhart_count(&d, l);
                assert!(c >= prev);
                prev = c;
            }
        }
    }

    #[test]
    fn count_difference_is_denumerant() {
        for entries in [&[3u32, 4][..], &[2, 2], &[1, 3, 5]] {
            let d = Degrees::of(entries);
            for l in 1..=40 {
                assert_eq!(
                    ehrhart_count(&d, l) - ehrhart_count(&d, l - 1),
                    denumerant(&d, l)
                );
            }
        }
    }

    #[test]
    fn poly_part_fixtures() {
        let r11 = ehrhart_poly_part(&Degrees::of(&[1, 1]));
        assert_eq!(r11.poly_l.coeffs(), &[rat_int(1), rat(3, 2), rat(1, 2)]);

        let r34 = ehrhart_poly_part(&Degrees::of(&[3, 4]));
        assert_eq!(r34.poly_l.coeffs(), &[rat(83, 144), rat(1, 3), rat(1, 24)]);
        assert_eq!(r34.lbar_shift, rat_int(4));
        assert_eq!(
            r34.poly_lbar.coeffs(),
            &[rat(-13, 144), rat_int(0), rat(1, 24)]
        );

        let r111 = ehrhart_poly_part(&Degrees::of(&[1, 1, 1]));
        // (l+1)(l+2)(l+3)/6
        assert_eq!(
            r111.poly_l.coeffs(),
            &[rat_int(1), rat(11, 6), rat_int(1), rat(1, 6)]
        );
    }

    #[test]
    fn poly_part_equals_wave_of_augmented_set() {
        for entries in [&[1u32, 1][..], &[3, 4], &[2, 5, 6], &[1, 2, 3, 4]] {
            let d = Degrees::of(entries);
            let via_ntaus = ehrhart_poly_part(&d).poly_lbar;
            let via_wave = wave_w1(&d.append_one());
            assert_eq!(via_ntaus, via_wave, "{entries:?}");
        }
    }

    #[test]
    fn reference_fixtures() {
        let r = reference_d2(3, 4);
        assert_eq!(r.coeffs(), &[rat(31, 72), rat(1, 3), rat(1, 24)]);
        assert_eq!(
            reference_d2(1, 1).coeffs(),
            &[rat(1, 2), rat(3, 2), rat(1, 2)]
        );
        assert_eq!(reference_d3(1, 1, 1).coeff(1), rat(7, 4));
    }

    #[test]
    fn comparison_reports_the_splitting_discrepancy() {
        let rows = compare_with_reference(&Degrees::of(&[1, 1, 1])).unwrap();
        // top two agree, the l-coefficient differs by exactly 1/12
        assert_eq!(rows[3].difference, rat_int(0));
        assert_eq!(rows[2].difference, rat_int(0));
        assert_eq!(rows[1].computed, rat(11, 6));
        assert_eq!(rows[1].reference, rat(7, 4));
        assert_eq!(rows[1].difference, rat(1, 12));
        assert!(compare_with_reference(&Degrees::of(&[1, 2, 3, 4])).is_err());
    }

    #[test]
    fn leading_coefficient_is_simplex_volume() {
        for entries in [&[3u32, 4][..], &[2, 5], &[2, 3, 7], &[1, 1, 1, 1]] {
            let d = Degrees::of(entries);
            let n = d.count();
            let top = ehrhart_poly_part(&d).poly_l.coeff(n);
            let want = Rational::from(num_bigint::BigInt::from(1))
                / (Rational::from(factorial(n)) * Rational::from(d.product()));
            assert_eq!(top, want, "{entries:?}");
        }
    }
}

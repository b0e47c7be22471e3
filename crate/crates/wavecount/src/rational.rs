//! Arbitrary-precision exact rationals and small integer helpers.
//!
//! The scalar type of the whole crate is [`Rational`], an alias for
//! `num_rational::BigRational`: always reduced, denominator always positive,
//! all arithmetic exact. Its `Display`/`FromStr` forms ("n" or "n/d") are the
//! wire format used by the CLI.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use num_rational::BigRational as Rational;

/// The rational n/d. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer n as a rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from(BigInt::from(n))
}

/// Fractional part `{x} = x - floor(x)` in `[0, 1)`, floor toward minus
/// infinity, so `{-1/3} = 2/3`.
pub fn frac_part(x: &Rational) -> Rational {
    x - x.floor()
}

/// n! as a big integer.
pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

/// Binomial coefficient C(n, k); zero when k > n.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Exact conversion to i64 when the rational is an integer in range.
pub fn to_integer(x: &Rational) -> Option<i64> {
    if x.is_integer() {
        i64::try_from(x.numer()).ok()
    } else {
        None
    }
}

/// Exact conversion to a count; `None` if not a nonnegative integer.
pub fn to_count(x: &Rational) -> Option<u64> {
    if x.is_integer() && !x.is_negative() {
        u64::try_from(x.numer()).ok()
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frac_part_positive() {
        assert_eq!(frac_part(&rat(3, 4)), rat(3, 4));
    }

    #[test]
    fn frac_part_negative_floors_down() {
        // floor(-1/3) = -1, so {-1/3} = 2/3
        assert_eq!(frac_part(&rat(-1, 3)), rat(2, 3));
    }

    #[test]
    fn frac_part_integer_is_zero() {
        assert_eq!(frac_part(&rat_int(5)), rat_int(0));
    }

    #[test]
    fn factorial_small() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(6), BigInt::from(720));
    }

    #[test]
    fn binomial_row() {
        let row: Vec<_> = (0..=4).map(|k| binomial(4, k)).collect();
        let want: Vec<_> = [1, 4, 6, 4, 1].iter().map(|&n| BigInt::from(n)).collect();
        assert_eq!(row, want);
        assert_eq!(binomial(3, 5), BigInt::from(0));
    }

    #[test]
    fn display_round_trips() {
        for r in [rat(22, 7), rat(-13, 144), rat_int(9), rat_int(0)] {
            let s = r.to_string();
            let back: Rational = s.parse().unwrap();
            assert_eq!(back, r);
        }
    }
}

//! Bernoulli numbers and elementary modular arithmetic.

use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{binomial, rat_int, Rational};

static BERNOULLI_MEMO: OnceLock<Mutex<Vec<Rational>>> = OnceLock::new();

/// Bernoulli number B_n with the B_1 = -1/2 convention.
///
/// Computed from the recurrence `sum_{k=0}^{n} C(n+1, k) B_k = 0` and
/// memoized. The memo is append-only behind a mutex, so concurrent callers
/// see the same values as a fresh computation would produce.
pub fn bernoulli_number(n: usize) -> Rational {
    let memo = BERNOULLI_MEMO.get_or_init(|| Mutex::new(vec![rat_int(1)]));
    let mut table = memo.lock().expect("bernoulli memo poisoned");
    while table.len() <= n {
        let m = table.len(); // computing B_m
        let mut acc = Rational::zero();
        for (k, b) in table.iter().enumerate() {
            acc += Rational::from(binomial(m + 1, k)) * b;
        }
        let b_m = -acc / rat_int((m + 1) as i64);
        table.push(b_m);
    }
    table[n].clone()
}

/// gcd of two nonnegative integers.
pub fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

/// lcm of a nonempty slice.
pub fn lcm_all(values: &[u64]) -> u64 {
    values.iter().copied().fold(1, num_integer::lcm)
}

/// Inverse of `a` modulo `m`, in `[1, m-1]`.
///
/// `a` may be any integer; it is reduced mod `m` first. Requires `m >= 2`
/// and `gcd(a, m) = 1`.
pub fn mod_inverse(a: i64, m: u64) -> Result<u64> {
    if m < 2 {
        return Err(Error::NotCoprime { a, m: m as i64 });
    }
    let a_red = a.rem_euclid(m as i64) as u64;
    let (g, x, _) = extended_gcd(a_red as i64, m as i64);
    if g != 1 {
        return Err(Error::NotCoprime { a, m: m as i64 });
    }
    Ok(x.rem_euclid(m as i64) as u64)
}

/// (g, x, y) with a*x + b*y = g = gcd(a, b).
fn extended_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = extended_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

/// Big-integer power `base^exp`.
pub fn big_pow(base: u64, exp: u32) -> BigInt {
    let mut acc = BigInt::one();
    let b = BigInt::from(base);
    for _ in 0..exp {
        acc *= &b;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn bernoulli_base_cases() {
        assert_eq!(bernoulli_number(0), rat_int(1));
        assert_eq!(bernoulli_number(1), rat(-1, 2));
        assert_eq!(bernoulli_number(2), rat(1, 6));
    }

    #[test]
    fn bernoulli_twelve() {
        assert_eq!(bernoulli_number(12), rat(-691, 2730));
    }

    #[test]
    fn bernoulli_odd_vanish() {
        for n in (3..=15).step_by(2) {
            assert_eq!(bernoulli_number(n), rat_int(0), "B_{n} should vanish");
        }
    }

    #[test]
    fn bernoulli_memo_is_interleaving_independent() {
        let handles: Vec<_> = (0..8)
            .map(|i| std::thread::spawn(move || bernoulli_number(20 + (i % 3))))
            .collect();
        for (i, h) in handles.into_iter().enumerate() {
            let got = h.join().unwrap();
            assert_eq!(got, bernoulli_number(20 + (i % 3)));
        }
    }

    #[test]
    fn mod_inverse_paper_values() {
        // 3^{-1} mod 4 = 3 and 4^{-1} mod 3 = 1
        assert_eq!(mod_inverse(3, 4).unwrap(), 3);
        assert_eq!(mod_inverse(4, 3).unwrap(), 1);
        assert_eq!(mod_inverse(1, 7).unwrap(), 1);
    }

    #[test]
    fn mod_inverse_rejects_common_factor() {
        assert_eq!(mod_inverse(4, 6), Err(Error::NotCoprime { a: 4, m: 6 }));
    }

    #[test]
    fn mod_inverse_negative_argument() {
        // -1 mod 5 = 4, and 4*4 = 16 = 1 mod 5
        assert_eq!(mod_inverse(-1, 5).unwrap(), 4);
    }

    #[test]
    fn lcm_of_degrees() {
        assert_eq!(lcm_all(&[3, 4]), 12);
        assert_eq!(lcm_all(&[6, 10]), 30);
        assert_eq!(lcm_all(&[3, 4, 1]), 12);
    }
}

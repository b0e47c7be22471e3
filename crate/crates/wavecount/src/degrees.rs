//! The degree multiset and its symmetric functions.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numtheory::{big_pow, lcm_all};
use crate::rational::Rational;

/// Ordered multiset of positive integer degrees d_1 ... d_D.
///
/// The order of entries never matters to any derived quantity, so entries are
/// canonicalized ascending on construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Degrees {
    entries: Vec<u32>,
}

impl Degrees {
    pub fn new(entries: impl Into<Vec<u32>>) -> Result<Self> {
        let mut entries = entries.into();
        if entries.is_empty() {
            return Err(Error::InvalidDegrees("empty degree list".into()));
        }
        if entries.contains(&0) {
            return Err(Error::InvalidDegrees("degree 0 is not allowed".into()));
        }
        entries.sort_unstable();
        Ok(Degrees { entries })
    }

    /// Convenience for literals known to be valid.
    pub fn of(entries: &[u32]) -> Self {
        Self::new(entries.to_vec()).expect("valid degree literal")
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    /// D, the number of degrees.
    pub fn count(&self) -> usize {
        self.entries.len()
    }

    /// sigma_1 = d_1 + ... + d_D.
    pub fn sum(&self) -> u64 {
        self.entries.iter().map(|&d| d as u64).sum()
    }

    /// prod d_i as a big integer.
    pub fn product(&self) -> BigInt {
        product_of(&self.entries)
    }

    pub fn lcm(&self) -> u64 {
        lcm_all(&self.entries.iter().map(|&d| d as u64).collect::<Vec<_>>())
    }

    /// Power sums s_1 ... s_kmax with s_p = sum_i d_i^p.
    pub fn power_sums(&self, kmax: usize) -> Vec<Rational> {
        power_sums_of(&self.entries, kmax)
    }

    /// Elementary symmetric functions sigma_0 ... sigma_D,
    /// the coefficients of prod (1 + d_i t).
    pub fn elementary_symmetric(&self) -> Vec<Rational> {
        elementary_symmetric_of(&self.entries)
    }

    /// The multiset with a degree 1 appended (Ehrhart augmentation).
    pub fn append_one(&self) -> Self {
        let mut entries = self.entries.clone();
        entries.push(1);
        entries.sort_unstable();
        Degrees { entries }
    }

    /// The even entries, in order.
    pub fn even_entries(&self) -> Vec<u32> {
        self.entries
            .iter()
            .copied()
            .filter(|d| d % 2 == 0)
            .collect()
    }

    /// The odd entries, in order.
    pub fn odd_entries(&self) -> Vec<u32> {
        self.entries
            .iter()
            .copied()
            .filter(|d| d % 2 == 1)
            .collect()
    }
}

impl fmt::Display for Degrees {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|d| d.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Power sums of an arbitrary (possibly empty) degree slice.
pub(crate) fn power_sums_of(entries: &[u32], kmax: usize) -> Vec<Rational> {
    (1..=kmax)
        .map(|p| {
            let mut acc = BigInt::zero();
            for &d in entries {
                acc += big_pow(d as u64, p as u32);
            }
            Rational::from(acc)
        })
        .collect()
}

pub(crate) fn product_of(entries: &[u32]) -> BigInt {
    let mut acc = BigInt::one();
    for &d in entries {
        acc *= BigInt::from(d);
    }
    acc
}

pub(crate) fn sum_of(entries: &[u32]) -> u64 {
    entries.iter().map(|&d| d as u64).sum()
}

fn elementary_symmetric_of(entries: &[u32]) -> Vec<Rational> {
    let mut sigma = vec![BigInt::one()];
    for &d in entries {
        sigma.push(BigInt::zero());
        for s in (1..sigma.len()).rev() {
            let lower = sigma[s - 1].clone();
            sigma[s] += lower * BigInt::from(d);
        }
    }
    sigma.into_iter().map(Rational::from).collect()
}

/// Elementary symmetric functions after appending a degree 1:
/// sigma_bar_s = sigma_s + sigma_{s-1}.
pub fn augmented_elementary(sigma: &[Rational]) -> Vec<Rational> {
    let mut out = Vec::with_capacity(sigma.len() + 1);
    for s in 0..=sigma.len() {
        let hi = sigma.get(s).cloned().unwrap_or_else(Rational::zero);
        let lo = if s == 0 {
            Rational::zero()
        } else {
            sigma[s - 1].clone()
        };
        out.push(hi + lo);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_int;
    use proptest::prelude::*;

    #[test]
    fn rejects_empty_and_zero() {
        assert!(Degrees::new(vec![]).is_err());
        assert!(Degrees::new(vec![3, 0]).is_err());
    }

    #[test]
    fn power_sums_examples() {
        let d = Degrees::of(&[3, 4]);
        assert_eq!(d.power_sums(2), vec![rat_int(7), rat_int(25)]);
        let ones = Degrees::of(&[1]);
        assert_eq!(ones.power_sums(5), vec![rat_int(1); 5]);
        let twos = Degrees::of(&[2, 2]);
        assert_eq!(twos.power_sums(4)[3], rat_int(32));
    }

    #[test]
    fn elementary_symmetric_examples() {
        assert_eq!(
            Degrees::of(&[3, 4]).elementary_symmetric(),
            vec![rat_int(1), rat_int(7), rat_int(12)]
        );
        assert_eq!(
            Degrees::of(&[1, 1]).elementary_symmetric(),
            vec![rat_int(1), rat_int(2), rat_int(1)]
        );
        assert_eq!(
            Degrees::of(&[2, 3, 4]).elementary_symmetric(),
            vec![rat_int(1), rat_int(9), rat_int(26), rat_int(24)]
        );
    }

    #[test]
    fn augmentation_examples() {
        assert_eq!(
            augmented_elementary(&[rat_int(1), rat_int(7), rat_int(12)]),
            vec![rat_int(1), rat_int(8), rat_int(19), rat_int(12)]
        );
        assert_eq!(
            augmented_elementary(&[rat_int(1)]),
            vec![rat_int(1), rat_int(1)]
        );
    }

    #[test]
    fn even_odd_split() {
        let d = Degrees::of(&[3, 4, 6, 5]);
        assert_eq!(d.even_entries(), vec![4, 6]);
        assert_eq!(d.odd_entries(), vec![3, 5]);
    }

    proptest! {
        #[test]
        fn augmentation_matches_appended_one(entries in proptest::collection::vec(1u32..9, 1..6)) {
            let d = Degrees::new(entries).unwrap();
            let direct = d.append_one().elementary_symmetric();
            let via_recursion = augmented_elementary(&d.elementary_symmetric());
            prop_assert_eq!(direct, via_recursion);
        }

        #[test]
        fn order_is_irrelevant(mut entries in proptest::collection::vec(1u32..9, 1..6)) {
            let a = Degrees::new(entries.clone()).unwrap();
            entries.reverse();
            let b = Degrees::new(entries).unwrap();
            prop_assert_eq!(a.elementary_symmetric(), b.elementary_symmetric());
            prop_assert_eq!(a.power_sums(4), b.power_sums(4));
        }
    }
}

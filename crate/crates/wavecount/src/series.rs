//! Truncated formal power series with exact rational coefficients.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{rat_int, Rational};

/// A power series truncated at a fixed order: coefficients of t^0 ... t^N.
///
/// Operations between series of different orders truncate to the smaller
/// order; all downstream uses only ever extract low-order coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncSeries {
    coeffs: Vec<Rational>, // length = order + 1
}

impl TruncSeries {
    /// Series from explicit coefficients; the order is `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a series carries at least t^0");
        TruncSeries { coeffs }
    }

    /// The zero series at the given order.
    pub fn zero(order: usize) -> Self {
        TruncSeries {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    /// The constant series 1 at the given order.
    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Rational::one();
        s
    }

    /// Coefficient-generating constructor: `coeff(k)` for k = 0..=order.
    pub fn from_fn(order: usize, coeff: impl FnMut(usize) -> Rational) -> Self {
        TruncSeries {
            coeffs: (0..=order).map(coeff).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of t^k (zero beyond the truncation order).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Shorten to `order` (no-op if already at most that long).
    pub fn truncated(&self, order: usize) -> Self {
        let n = order.min(self.order());
        TruncSeries {
            coeffs: self.coeffs[..=n].to_vec(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self::from_fn(n, |k| self.coeff(k) + other.coeff(k))
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self::from_fn(n, |k| self.coeff(k) - other.coeff(k))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_fn(self.order(), |k| self.coeff(k) * c)
    }

    /// Product truncated at the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut out = vec![Rational::zero(); n + 1];
        for i in 0..=n {
            let a = self.coeff(i);
            if a.is_zero() {
                continue;
            }
            for j in 0..=(n - i) {
                let b = other.coeff(j);
                if !b.is_zero() {
                    out[i + j] += &a * b;
                }
            }
        }
        TruncSeries { coeffs: out }
    }

    /// exp(s); requires constant term 0.
    ///
    /// Uses the defining recursion n g_n = sum_{k=1..n} k a_k g_{n-k}.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeff(0).is_zero() {
            return Err(Error::PreconditionViolated {
                term: self.coeff(0).to_string(),
            });
        }
        let n = self.order();
        let mut g = vec![Rational::zero(); n + 1];
        g[0] = Rational::one();
        for m in 1..=n {
            let mut acc = Rational::zero();
            for k in 1..=m {
                let a = self.coeff(k);
                if !a.is_zero() {
                    acc += rat_int(k as i64) * a * &g[m - k];
                }
            }
            g[m] = acc / rat_int(m as i64);
        }
        Ok(TruncSeries { coeffs: g })
    }

    /// log(s); requires constant term 1.
    ///
    /// Recursion: L_n = a_n - (1/n) sum_{k=1..n-1} k L_k a_{n-k}.
    pub fn log(&self) -> Result<Self> {
        if !self.coeff(0).is_one() {
            return Err(Error::PreconditionViolated {
                term: self.coeff(0).to_string(),
            });
        }
        let n = self.order();
        let mut l = vec![Rational::zero(); n + 1];
        for m in 1..=n {
            let mut acc = Rational::zero();
            for k in 1..m {
                if !l[k].is_zero() {
                    acc += rat_int(k as i64) * &l[k] * self.coeff(m - k);
                }
            }
            l[m] = self.coeff(m) - acc / rat_int(m as i64);
        }
        Ok(TruncSeries { coeffs: l })
    }

    /// 1/s; requires nonzero constant term.
    pub fn inv(&self) -> Result<Self> {
        let a0 = self.coeff(0);
        if a0.is_zero() {
            return Err(Error::PreconditionViolated {
                term: a0.to_string(),
            });
        }
        let n = self.order();
        let mut b = vec![Rational::zero(); n + 1];
        b[0] = Rational::one() / &a0;
        for m in 1..=n {
            let mut acc = Rational::zero();
            for k in 1..=m {
                let a = self.coeff(k);
                if !a.is_zero() {
                    acc += a * &b[m - k];
                }
            }
            b[m] = -acc / &a0;
        }
        Ok(TruncSeries { coeffs: b })
    }

    /// The exponential-function series exp(c t) at the given order.
    pub fn exp_linear(c: &Rational, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut term = Rational::one();
        coeffs.push(term.clone());
        for k in 1..=order {
            term = term * c / rat_int(k as i64);
            coeffs.push(term.clone());
        }
        TruncSeries { coeffs }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use proptest::prelude::*;

    fn t_series(order: usize) -> TruncSeries {
        TruncSeries::from_fn(order, |k| if k == 1 { rat_int(1) } else { rat_int(0) })
    }

    #[test]
    fn exp_of_zero_is_one() {
        assert_eq!(TruncSeries::zero(6).exp().unwrap(), TruncSeries::one(6));
    }

    #[test]
    fn log_exp_t_is_t() {
        let t = t_series(8);
        let round = t.exp().unwrap().log().unwrap();
        assert_eq!(round, t);
    }

    #[test]
    fn exp_requires_zero_constant_term() {
        let err = TruncSeries::one(4).exp().unwrap_err();
        assert_eq!(
            err,
            Error::PreconditionViolated {
                term: "1".to_string()
            }
        );
    }

    #[test]
    fn inv_requires_nonzero_constant_term() {
        assert!(TruncSeries::zero(4).inv().is_err());
    }

    #[test]
    fn geometric_product_coefficient() {
        // coeff of sigma^12 in 1/((1-sigma^3)(1-sigma^4)) counts 3a+4b=12
        let order = 12;
        let g = |d: usize| {
            TruncSeries::from_fn(order, |k| if k % d == 0 { rat_int(1) } else { rat_int(0) })
        };
        let prod = g(3).mul(&g(4));
        assert_eq!(prod.coeff(12), rat_int(2));
    }

    #[test]
    fn mixed_orders_truncate_to_min() {
        let a = TruncSeries::one(10);
        let b = TruncSeries::one(4);
        assert_eq!(a.mul(&b).order(), 4);
        assert_eq!(a.add(&b).order(), 4);
    }

    #[test]
    fn exp_linear_matches_generic_exp() {
        let c = rat(3, 2);
        let lin = TruncSeries::from_fn(7, |k| if k == 1 { c.clone() } else { rat_int(0) });
        assert_eq!(lin.exp().unwrap(), TruncSeries::exp_linear(&c, 7));
    }

    proptest! {
        #[test]
        fn exp_log_round_trip(coeffs in proptest::collection::vec((-20i64..20, 1i64..12), 1..7)) {
            let mut v = vec![Rational::zero()];
            v.extend(coeffs.iter().map(|&(n, d)| rat(n, d)));
            let s = TruncSeries::from_coeffs(v);
            let round = s.exp().unwrap().log().unwrap();
            prop_assert_eq!(round, s);
        }

        #[test]
        fn inv_is_reciprocal(coeffs in proptest::collection::vec((-20i64..20, 1i64..12), 1..7),
                             c0 in (1i64..30, 1i64..12)) {
            let mut v = vec![rat(c0.0, c0.1)];
            v.extend(coeffs.iter().map(|&(n, d)| rat(n, d)));
            let s = TruncSeries::from_coeffs(v);
            let prod = s.mul(&s.inv().unwrap());
            prop_assert_eq!(prod, TruncSeries::one(s.order()));
        }
    }
}

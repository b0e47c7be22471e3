//! Dense univariate polynomials with rational coefficients.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::rational::{binomial, Rational};

/// The variable a polynomial is written in.
///
/// `L` is the integer level, `LBar` the augmented argument `l + (sum d_i)/2`,
/// `Omega` the square-root eigenvalue, `Sigma` the generating-function variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    L,
    LBar,
    Omega,
    Sigma,
}

impl Var {
    pub fn name(self) -> &'static str {
        match self {
            Var::L => "l",
            Var::LBar => "lbar",
            Var::Omega => "omega",
            Var::Sigma => "sigma",
        }
    }
}

impl std::str::FromStr for Var {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "l" => Ok(Var::L),
            "lbar" => Ok(Var::LBar),
            "omega" => Ok(Var::Omega),
            "sigma" => Ok(Var::Sigma),
            other => Err(format!("unknown variable: {other}")),
        }
    }
}

/// Polynomial with `Rational` coefficients, lowest degree first, no trailing
/// zeros (the zero polynomial has an empty coefficient vector).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatPoly {
    var: Var,
    coeffs: Vec<Rational>,
}

impl RatPoly {
    pub fn zero(var: Var) -> Self {
        RatPoly {
            var,
            coeffs: vec![],
        }
    }

    pub fn constant(var: Var, c: Rational) -> Self {
        Self::from_coeffs(var, vec![c])
    }

    pub fn monomial(var: Var, c: Rational, degree: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        Self::from_coeffs(var, coeffs)
    }

    pub fn from_coeffs(var: Var, coeffs: Vec<Rational>) -> Self {
        let mut p = RatPoly { var, coeffs };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn var(&self) -> Var {
        self.var
    }

    /// Same coefficients read as a polynomial in another variable.
    pub fn with_var(&self, var: Var) -> Self {
        RatPoly {
            var,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs(
            self.var,
            (0..n).map(|k| self.coeff(k) + other.coeff(k)).collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs(
            self.var,
            (0..n).map(|k| self.coeff(k) - other.coeff(k)).collect(),
        )
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_coeffs(self.var, self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.var);
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::from_coeffs(self.var, out)
    }

    /// q with q(x) = p(x + c), by exact binomial expansion.
    pub fn shift(&self, c: &Rational) -> Self {
        let mut out = vec![Rational::zero(); self.coeffs.len()];
        for (k, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            // a (x + c)^k
            let mut cpow = Rational::one();
            for j in (0..=k).rev() {
                out[j] += a * Rational::from(binomial(k, k - j)) * &cpow;
                cpow *= c;
            }
        }
        Self::from_coeffs(self.var, out)
    }

    /// Shift and rename in one step: returns p(x + c) in the variable `var`.
    pub fn shift_into(&self, c: &Rational, var: Var) -> Self {
        let mut q = self.shift(c);
        q.var = var;
        q
    }
}

impl fmt::Display for RatPoly {
    /// Renders like `1/24·l^2 + 1/3·l + 83/144`; the zero polynomial is `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let var = self.var.name();
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let coeff_is_one = mag.is_one();
            match k {
                0 => write!(f, "{mag}")?,
                1 => {
                    if coeff_is_one {
                        write!(f, "{var}")?;
                    } else {
                        write!(f, "{mag}·{var}")?;
                    }
                }
                _ => {
                    if coeff_is_one {
                        write!(f, "{var}^{k}")?;
                    } else {
                        write!(f, "{mag}·{var}^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};
    use proptest::prelude::*;

    fn x_squared() -> RatPoly {
        RatPoly::monomial(Var::L, rat_int(1), 2)
    }

    #[test]
    fn shift_square_by_one() {
        let q = x_squared().shift(&rat_int(1));
        assert_eq!(q.coeffs(), &[rat_int(1), rat_int(2), rat_int(1)]);
    }

    #[test]
    fn shift_linear_by_negative_half() {
        let x = RatPoly::monomial(Var::L, rat_int(1), 1);
        let q = x.shift(&rat(-1, 2));
        assert_eq!(q.coeffs(), &[rat(-1, 2), rat_int(1)]);
    }

    #[test]
    fn eval_is_exact() {
        let p = RatPoly::from_coeffs(Var::L, vec![rat(83, 144), rat(1, 3), rat(1, 24)]);
        assert_eq!(p.eval(&rat_int(12)), rat(83, 144) + rat_int(4) + rat_int(6));
    }

    #[test]
    fn display_forms() {
        let p = RatPoly::from_coeffs(Var::L, vec![rat(3, 4), rat(1, 2)]);
        assert_eq!(p.to_string(), "1/2·l + 3/4");
        let q = RatPoly::from_coeffs(Var::LBar, vec![rat(-1, 8), rat_int(0), rat(1, 2)]);
        assert_eq!(q.to_string(), "1/2·lbar^2 - 1/8");
        assert_eq!(RatPoly::zero(Var::L).to_string(), "0");
        let m = RatPoly::monomial(Var::Omega, rat_int(-1), 1);
        assert_eq!(m.to_string(), "-omega");
    }

    proptest! {
        #[test]
        fn shift_round_trip(coeffs in proptest::collection::vec((-30i64..30, 1i64..10), 0..7),
                            c in (-24i64..24, 1i64..8)) {
            let p = RatPoly::from_coeffs(
                Var::L,
                coeffs.iter().map(|&(n, d)| rat(n, d)).collect(),
            );
            let c = rat(c.0, c.1);
            let back = p.shift(&c).shift(&(-&c));
            prop_assert_eq!(back, p);
        }

        #[test]
        fn shift_agrees_with_eval(coeffs in proptest::collection::vec((-30i64..30, 1i64..10), 0..7),
                                  c in -10i64..10, x in -10i64..10) {
            let p = RatPoly::from_coeffs(
                Var::L,
                coeffs.iter().map(|&(n, d)| rat(n, d)).collect(),
            );
            let shifted = p.shift(&rat_int(c));
            prop_assert_eq!(shifted.eval(&rat_int(x)), p.eval(&rat_int(x + c)));
        }
    }
}

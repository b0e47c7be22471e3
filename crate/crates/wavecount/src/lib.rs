//! Exact computation of restricted-partition denumerants and their spectral relatives.
//!
//! Everything here is exact rational arithmetic: denumerants (counts of
//! nonnegative solutions of `d_1 m_1 + ... + d_D m_D = l`), their Sylvester
//! wave decomposition into a polynomial part `W1` plus a `(-1)^l` wave `W2`
//! plus a periodic residual, Ehrhart counts of the weighted simplex
//! `d_1 x_1 + ... + d_D x_D <= 1`, and eigenvalue degeneracies of the regular
//! sphere tessellations (lune, tetrahedral, octahedral, icosahedral), whose
//! spectra are governed by the same degree data.
//!
//! The crate is organised bottom-up:
//!
//! - [`rational`], [`poly`], [`series`]: arbitrary-precision rationals, dense
//!   univariate polynomials, truncated formal power series.
//! - [`numtheory`]: Bernoulli numbers, modular inverses, gcd/lcm.
//! - [`degrees`], [`multiseq`]: symmetric functions of the degrees and the
//!   multiplicative sequences (untwisted `x/sinh x`, twisted `1/cosh`) whose
//!   homogeneous products supply all wave coefficients.
//! - [`waves`]: the denumerant oracle, Popoviciu closed forms, the first and
//!   second Sylvester waves, the periodic residual, Frobenius numbers.
//! - [`ehrhart`]: accumulated counts and the Ehrhart polynomial part.
//! - [`spectral`]: tiling catalog, boundary-condition degeneracies, Molien
//!   series, Weyl reference terms, the midpoint combination, heat-kernel
//!   coefficient conversion.
//! - [`verify`]: seeded verification suites, including the acceptance checks.
//!
//! No floating point is used anywhere; every identity asserted by the test
//! suites is checked with zero tolerance.

pub mod degrees;
pub mod ehrhart;
pub mod error;
pub mod multiseq;
pub mod numtheory;
pub mod poly;
pub mod rational;
pub mod series;
pub mod spectral;
pub mod verify;
pub mod waves;

pub use degrees::Degrees;
pub use error::{Error, Result};
pub use poly::{RatPoly, Var};
pub use rational::{frac_part, rat, rat_int, Rational};
pub use series::TruncSeries;

//! Spectra of regular sphere tessellations.
//!
//! A tiling is described by its degree set; eigenlevels sit at omega = a + l
//! with a = (d-1)/2 for Neumann conditions and a + d0 for Dirichlet, where
//! d0 = sum d_i - (d-1) reflects the hyperplane count. Degeneracies are
//! denumerants, their generating functions are Molien series, and the
//! smoothed counting function connects to the Ehrhart polynomial part via the
//! midpoint combination.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::degrees::Degrees;
use crate::ehrhart::{ehrhart_poly_part, reference_d2, reference_d3};
use crate::error::{Error, Result};
use crate::poly::{RatPoly, Var};
use crate::rational::{factorial, frac_part, rat, rat_int, Rational};
use crate::series::TruncSeries;
use crate::waves::{denumerant, denumerant_series_range, wave_w1};

/// Boundary condition selecting the spectrum of a fundamental domain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundaryCondition {
    Neumann,
    Dirichlet,
    /// Doubled domain: Neumann plus Dirichlet.
    Periodic,
}

impl std::str::FromStr for BoundaryCondition {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "neumann" | "n" => Ok(BoundaryCondition::Neumann),
            "dirichlet" | "d" => Ok(BoundaryCondition::Dirichlet),
            "periodic" | "p" => Ok(BoundaryCondition::Periodic),
            other => Err(format!("unknown boundary condition: {other}")),
        }
    }
}

impl fmt::Display for BoundaryCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            BoundaryCondition::Neumann => "neumann",
            BoundaryCondition::Dirichlet => "dirichlet",
            BoundaryCondition::Periodic => "periodic",
        };
        write!(f, "{s}")
    }
}

/// A spherical tessellation: degrees plus (for the polyhedral tilings) the
/// rotation axis orders used by the orbit-stabiliser Molien form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TilingSpec {
    name: String,
    degrees: Degrees,
    axis_orders: Option<Vec<u32>>,
}

impl TilingSpec {
    /// Lune of apex angle pi/q; q = 1 is the hemisphere.
    pub fn lune(q: u32) -> Result<Self> {
        if q == 0 {
            return Err(Error::InvalidDegrees("lune order must be positive".into()));
        }
        Ok(TilingSpec {
            name: if q == 1 {
                "hemisphere".to_string()
            } else {
                format!("lune({q})")
            },
            degrees: Degrees::of(&[q, 1]),
            axis_orders: None,
        })
    }

    pub fn tetrahedral() -> Self {
        Self::validated(TilingSpec {
            name: "tetrahedral".to_string(),
            degrees: Degrees::of(&[3, 4]),
            axis_orders: Some(vec![2, 3, 3]),
        })
    }

    pub fn octahedral() -> Self {
        Self::validated(TilingSpec {
            name: "octahedral".to_string(),
            degrees: Degrees::of(&[4, 6]),
            axis_orders: Some(vec![2, 3, 4]),
        })
    }

    pub fn icosahedral() -> Self {
        Self::validated(TilingSpec {
            name: "icosahedral".to_string(),
            degrees: Degrees::of(&[6, 10]),
            axis_orders: Some(vec![2, 3, 5]),
        })
    }

    /// Axis orders are accepted only if the orbit-stabiliser series matches
    /// the degree-product generating function; a mismatch aborts.
    fn validated(spec: TilingSpec) -> TilingSpec {
        let order = 60;
        let degree_form = molien_series(&spec, BoundaryCondition::Periodic, order);
        let axis_form = molien_from_axes(spec.axis_orders.as_ref().expect("axes"), order);
        assert!(
            degree_form == axis_form,
            "Molien identity failed for {}",
            spec.name
        );
        spec
    }

    /// A tiling-shaped wrapper around an arbitrary degree set (no axis data),
    /// for generating functions and boundary shifts outside the catalog.
    pub fn custom(name: impl Into<String>, degrees: Degrees) -> Self {
        TilingSpec {
            name: name.into(),
            degrees,
            axis_orders: None,
        }
    }

    /// "tetrahedral", "octahedral", "icosahedral", "hemisphere", "lune(q)".
    pub fn by_name(name: &str) -> Result<Self> {
        match name {
            "tetrahedral" => Ok(Self::tetrahedral()),
            "octahedral" => Ok(Self::octahedral()),
            "icosahedral" => Ok(Self::icosahedral()),
            "hemisphere" => Self::lune(1),
            other => {
                let q = other
                    .strip_prefix("lune(")
                    .and_then(|s| s.strip_suffix(')'))
                    .or_else(|| other.strip_prefix("lune:"))
                    .and_then(|s| s.parse::<u32>().ok());
                match q {
                    Some(q) if q >= 1 => Self::lune(q),
                    _ => Err(Error::UnknownTiling(other.to_string())),
                }
            }
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn degrees(&self) -> &Degrees {
        &self.degrees
    }

    pub fn axis_orders(&self) -> Option<&[u32]> {
        self.axis_orders.as_deref()
    }

    /// Sphere dimension d = number of degrees.
    pub fn dim(&self) -> usize {
        self.degrees.count()
    }

    /// Neumann offset a_N = (d-1)/2.
    pub fn a_neumann(&self) -> Rational {
        rat_int(self.dim() as i64 - 1) / rat_int(2)
    }

    /// Dirichlet level shift d0 = sum d_i - (d-1).
    pub fn dirichlet_shift(&self) -> u64 {
        self.degrees.sum() - (self.dim() as u64 - 1)
    }

    /// a_D = a_N + d0.
    pub fn a_dirichlet(&self) -> Rational {
        self.a_neumann() + rat_int(self.dirichlet_shift() as i64)
    }

    /// Orbit-stabiliser Molien series, when axis orders are known.
    pub fn molien_axes(&self, order: usize) -> Result<TruncSeries> {
        match &self.axis_orders {
            Some(axes) => Ok(molien_from_axes(axes, order)),
            None => Err(Error::MissingAxisOrders),
        }
    }
}

/// The named catalog: hemisphere, tetrahedral, octahedral, icosahedral.
/// Other lunes come from [`TilingSpec::lune`].
pub fn catalog() -> Vec<TilingSpec> {
    vec![
        TilingSpec::lune(1).expect("q = 1"),
        TilingSpec::tetrahedral(),
        TilingSpec::octahedral(),
        TilingSpec::icosahedral(),
    ]
}

/// Degeneracy of eigenlevel l under the given boundary condition.
pub fn degeneracy(spec: &TilingSpec, bc: BoundaryCondition, l: i64) -> u64 {
    match bc {
        BoundaryCondition::Neumann => denumerant(&spec.degrees, l),
        BoundaryCondition::Dirichlet => {
            denumerant(&spec.degrees, l - spec.dirichlet_shift() as i64)
        }
        BoundaryCondition::Periodic => {
            degeneracy(spec, BoundaryCondition::Neumann, l)
                + degeneracy(spec, BoundaryCondition::Dirichlet, l)
        }
    }
}

/// Degeneracies for l = 0..=lmax in one pass.
pub fn degeneracy_range(spec: &TilingSpec, bc: BoundaryCondition, lmax: i64) -> Vec<u64> {
    if lmax < 0 {
        return vec![];
    }
    let neumann = denumerant_series_range(&spec.degrees, lmax);
    let d0 = spec.dirichlet_shift() as usize;
    (0..=lmax as usize)
        .map(|l| match bc {
            BoundaryCondition::Neumann => neumann[l],
            BoundaryCondition::Dirichlet => {
                if l >= d0 {
                    neumann[l - d0]
                } else {
                    0
                }
            }
            BoundaryCondition::Periodic => neumann[l] + if l >= d0 { neumann[l - d0] } else { 0 },
        })
        .collect()
}

/// The classical floor/fractional-part degeneracy formulas, evaluated exactly.
pub fn closed_form_degeneracy(name: &str, l: i64) -> Result<Rational> {
    let frac = |num: i64, den: i64| frac_part(&rat(num, den));
    match name {
        "tetrahedral" => Ok(rat(l, 6) + Rational::one() - frac(l, 2) - rat_int(2) * frac(l, 3)),
        "octahedral" => Ok(rat(l, 12) + Rational::one() - frac(l, 2) - frac(l, 3) - frac(l, 4)),
        "icosahedral" => Ok(rat(l, 30) + Rational::one() - frac(l, 2) - frac(l, 3) - frac(l, 5)),
        other => match TilingSpec::by_name(other)? {
            spec if spec.axis_orders.is_none() => {
                // periodic lune: 2 floor(l/q) + 1
                let q = spec.degrees.entries()[1].max(spec.degrees.entries()[0]) as i64;
                Ok(rat_int(2 * (l.div_euclid(q)) + 1))
            }
            _ => Err(Error::UnknownTiling(other.to_string())),
        },
    }
}

/// 1 / (1 - sigma^d) truncated at `order`.
fn geometric(d: u32, order: usize) -> TruncSeries {
    TruncSeries::from_fn(order, |k| {
        if k % (d as usize) == 0 {
            Rational::one()
        } else {
            Rational::zero()
        }
    })
}

/// Degeneracy generating function from the degree product
/// (Neumann 1/prod(1-sigma^{d_i}), Dirichlet the same shifted by sigma^{d0},
/// periodic their sum).
pub fn molien_series(spec: &TilingSpec, bc: BoundaryCondition, order: usize) -> TruncSeries {
    let mut base = TruncSeries::one(order);
    for &d in spec.degrees.entries() {
        base = base.mul(&geometric(d, order));
    }
    let d0 = spec.dirichlet_shift() as usize;
    let shifted = TruncSeries::from_fn(order, |k| {
        if k >= d0 {
            base.coeff(k - d0)
        } else {
            Rational::zero()
        }
    });
    match bc {
        BoundaryCondition::Neumann => base,
        BoundaryCondition::Dirichlet => shifted,
        BoundaryCondition::Periodic => base.add(&shifted),
    }
}

/// Periodic lune series h(sigma; q, 1) = (1 + sigma^q)/((1-sigma^q)(1-sigma)).
fn lune_periodic(q: u32, order: usize) -> TruncSeries {
    let base = geometric(q, order).mul(&geometric(1, order));
    let shifted = TruncSeries::from_fn(order, |k| {
        if k >= q as usize {
            base.coeff(k - q as usize)
        } else {
            Rational::zero()
        }
    });
    base.add(&shifted)
}

/// Orbit-stabiliser combination over the rotation axes:
/// (1/2)(sum_q h(sigma; q, 1) - h(sigma; 1, 1)).
pub fn molien_from_axes(axis_orders: &[u32], order: usize) -> TruncSeries {
    let mut acc = lune_periodic(1, order).scale(&rat(-1, 1));
    for &q in axis_orders {
        acc = acc.add(&lune_periodic(q, order));
    }
    acc.scale(&rat(1, 2))
}

/// Geometric invariants of the tiling group action.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TilingInvariants {
    /// Order of the full reflection group: 2g = 2 prod d_i.
    pub two_g: BigInt,
    /// Number of reflecting great hyperspheres: b1 = sum (d_i - 1) + 1.
    pub b1: u64,
    /// Codimension-two count, only known in closed form for three degrees:
    /// b2 = d2 d3 + d3 d1 + d1 d2 - d1 - d2 - d3.
    pub b2: Option<BigInt>,
}

pub fn invariants(degrees: &Degrees) -> TilingInvariants {
    let sigma = degrees.elementary_symmetric();
    let b2 = if degrees.count() == 3 {
        let v = &sigma[2] - &sigma[1];
        Some(v.numer().clone())
    } else {
        None
    };
    TilingInvariants {
        two_g: degrees.product() * BigInt::from(2),
        b1: degrees.sum() - degrees.count() as u64 + 1,
        b2,
    }
}

/// Sign of the boundary term in the smoothed counting function.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeylSign {
    Neumann,
    Dirichlet,
}

/// The leading terms of the smoothed eigenvalue counting function:
/// (1/(2g Gamma(d))) [(2/d) omega^d +- b1 omega^{d-1}
///   + (d = 3 only) ((d-1)/6)(b1(b1-1)+b2) omega^{d-2}].
///
/// Only the classically tabulated leading coefficients are carried; nothing
/// is invented for the lower ones.
pub fn weyl_reference_signed(degrees: &Degrees, sign: WeylSign) -> RatPoly {
    let d = degrees.count();
    let inv = invariants(degrees);
    let prefactor =
        Rational::one() / (Rational::from(inv.two_g.clone()) * Rational::from(factorial(d - 1)));
    let mut coeffs = vec![Rational::zero(); d + 1];
    coeffs[d] = rat(2, d as i64) * &prefactor;
    let b1 = rat_int(inv.b1 as i64);
    coeffs[d - 1] = match sign {
        WeylSign::Neumann => &b1 * &prefactor,
        WeylSign::Dirichlet => -(&b1 * &prefactor),
    };
    if d == 3 {
        let b2 = Rational::from(inv.b2.clone().expect("b2 exists for d = 3"));
        coeffs[d - 2] = rat(d as i64 - 1, 6) * (&b1 * (&b1 - Rational::one()) + b2) * &prefactor;
    }
    RatPoly::from_coeffs(Var::Omega, coeffs)
}

/// [`weyl_reference_signed`] with the Neumann sign.
pub fn weyl_reference(degrees: &Degrees) -> RatPoly {
    weyl_reference_signed(degrees, WeylSign::Neumann)
}

/// Which Ehrhart polynomial part feeds the midpoint combination.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MidpointSource {
    /// The wave-computed polynomial part (mean-zero residual convention).
    Computed,
    /// The classical d = 2 / d = 3 reference polynomials.
    Reference,
}

/// The symmetrical staircase interpolation
/// (1/2)[E(omega - a_N) + E(omega - a_N - 1)] as an exact polynomial in omega.
pub fn midpoint_combination(degrees: &Degrees, source: MidpointSource) -> Result<RatPoly> {
    let e = match source {
        MidpointSource::Computed => ehrhart_poly_part(degrees).poly_l,
        MidpointSource::Reference => match degrees.entries() {
            [d1, d2] => reference_d2(*d1, *d2),
            [d1, d2, d3] => reference_d3(*d1, *d2, *d3),
            _ => return Err(Error::DimensionUnsupported(degrees.count())),
        },
    };
    let a_n = rat_int(degrees.count() as i64 - 1) / rat_int(2);
    let upper = e.shift(&-a_n.clone());
    let lower = e.shift(&-(a_n + Rational::one()));
    Ok(upper.add(&lower).scale(&rat(1, 2)).with_var(Var::Omega))
}

/// A rational multiple of an optional sqrt(pi), kept symbolic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaScaledRational {
    pub coefficient: Rational,
    pub sqrt_pi: bool,
}

impl fmt::Display for GammaScaledRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sqrt_pi {
            write!(f, "{}·sqrt(pi)", self.coefficient)
        } else {
            write!(f, "{}", self.coefficient)
        }
    }
}

/// Gamma(twice_argument / 2), exactly: an integer factorial for integer
/// arguments, a rational multiple of sqrt(pi) at half-integers.
fn gamma_half_integer(twice_argument: u64) -> GammaScaledRational {
    assert!(twice_argument >= 1);
    if twice_argument % 2 == 0 {
        GammaScaledRational {
            coefficient: Rational::from(factorial((twice_argument / 2 - 1) as usize)),
            sqrt_pi: false,
        }
    } else {
        // Gamma(m + 1/2) = (2m)! / (4^m m!) sqrt(pi)
        let m = (twice_argument / 2) as usize;
        GammaScaledRational {
            coefficient: Rational::from(factorial(2 * m))
                / (Rational::from(BigInt::one() << (2 * m)) * Rational::from(factorial(m))),
            sqrt_pi: true,
        }
    }
}

/// One heat-kernel coefficient C_{(d-k-1)/2} = P_k Gamma((k+1)/2) / 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeatKernelCoeff {
    /// The omega power k the coefficient is read from.
    pub power: usize,
    /// The half-integer heat-kernel index (d - k - 1)/2.
    pub index: Rational,
    pub value: GammaScaledRational,
}

/// The wave polynomial in omega together with its heat-kernel coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeatKernelExpansion {
    /// P(omega): the first wave shifted to omega = l + a_N.
    pub wave_poly: RatPoly,
    pub coeffs: Vec<HeatKernelCoeff>,
}

/// Convert the degeneracy polynomial part to heat-kernel coefficients.
pub fn heat_kernel_coeffs(degrees: &Degrees) -> HeatKernelExpansion {
    let d = degrees.count();
    // lbar = l + sigma_1/2 and omega = l + (d-1)/2, so lbar = omega + b1/2
    let b1_half = rat_int(invariants(degrees).b1 as i64) / rat_int(2);
    let wave_poly = wave_w1(degrees).shift_into(&b1_half, Var::Omega);
    let coeffs = (0..d)
        .map(|k| {
            let gamma = gamma_half_integer((k + 1) as u64);
            HeatKernelCoeff {
                power: k,
                index: rat_int((d - k - 1) as i64) / rat_int(2),
                value: GammaScaledRational {
                    coefficient: wave_poly.coeff(k) * &gamma.coefficient / rat_int(2),
                    sqrt_pi: gamma.sqrt_pi,
                },
            }
        })
        .collect();
    HeatKernelExpansion { wave_poly, coeffs }
}

//! Holonomies, the singular gauge transformation relating the two string
//! potentials, and the integer conditions under which a singular
//! potential is a pure gauge artifact — including the resulting
//! fractional charge spectrum.
//!
//! Natural units make the monopole condition read `2 q g = n` and the
//! vortex condition `q kappa = n`. The holonomy convention is
//! `exp(+i q int A . dl)`.

use num_complex::Complex;
use serde::Serialize;

use crate::calculus::{line_integral, QuadratureConfig};
use crate::error::{Error, Result};
use crate::geometry::{ParamPath, Point3};
use crate::potentials::{FieldSample, PotentialSpec};
use crate::scalar::lit;
use crate::Scalar;

/// Integer-defect tolerance for quantization checks. User-supplied reals
/// and quadrature-derived products (error ~1e-9) both sit well on one
/// side of it.
pub const QUANTIZATION_TOL: f64 = 1e-6;

/// Tolerance on `|holonomy - 1|` for the single-valuedness test.
pub const HOLONOMY_TOL: f64 = 1e-9;

/// An electric charge in units of the electron charge.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ChargeSpec<F> {
    pub q: F,
}

impl<F: Scalar> ChargeSpec<F> {
    pub fn new(q: F) -> Self {
        Self { q }
    }
}

/// Nearest-integer decomposition of a quantization product.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuantizationReport<F> {
    /// The product the condition constrains (`2 q g` or `q kappa`).
    pub product: F,
    pub nearest_integer: i64,
    /// `|product - nearest_integer|`.
    pub defect: F,
    /// `defect < 1e-6`.
    pub satisfied: bool,
}

impl<F: Scalar> QuantizationReport<F> {
    fn from_product(product: F) -> Self {
        let nearest = product.round();
        let defect = (product - nearest).abs();
        let nearest_integer = nearest.to_i64().unwrap_or(if nearest > F::zero() {
            i64::MAX
        } else {
            i64::MIN
        });
        Self {
            product,
            nearest_integer,
            defect,
            satisfied: defect < lit(QUANTIZATION_TOL),
        }
    }
}

/// The allowed charges `n_q / N` for a fixed integer `N`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ChargeSpectrum<F> {
    #[serde(rename = "N")]
    pub n: i64,
    pub n_range: i64,
    /// Ascending, symmetric under negation.
    pub charges: Vec<F>,
}

/// Phase factor `exp(i q int A . dl)` around a closed loop.
pub fn holonomy<F: Scalar>(
    q: ChargeSpec<F>,
    spec: &PotentialSpec<F>,
    loop_path: &ParamPath<F>,
) -> Result<Complex<F>, F> {
    if !loop_path.closed() {
        return Err(Error::NotClosed {
            gap: loop_path.endpoint_gap(),
        });
    }
    let circulation = line_integral(spec, loop_path, &QuadratureConfig::default())?;
    Ok(Complex::from_polar(F::one(), q.q * circulation))
}

/// Pointwise difference of the two string potentials,
/// `A_I - A_II = (2 g / (r sin theta)) phi-hat`, defined off the z-axis.
pub fn string_gauge_difference<F: Scalar>(g: F, p: Point3<F>) -> Result<FieldSample<F>, F> {
    let one = PotentialSpec::DiracStringI { g }.eval(p)?;
    let two = PotentialSpec::DiracStringII { g }.eval(p)?;
    Ok(FieldSample {
        value: one.value - two.value,
        location: p,
    })
}

/// Monopole condition: `2 q g` must be an integer for the string
/// position to be unobservable.
pub fn dirac_condition<F: Scalar>(q: ChargeSpec<F>, g: F) -> QuantizationReport<F> {
    QuantizationReport::from_product(lit::<F>(2.0) * q.q * g)
}

/// Vortex condition: `q kappa` must be an integer for the vortex
/// potential to be a pure gauge artifact.
pub fn kappa_condition<F: Scalar>(q: ChargeSpec<F>, kappa: F) -> QuantizationReport<F> {
    QuantizationReport::from_product(q.q * kappa)
}

/// Allowed vortex strengths `N * n_kappa` for `|n_kappa| <= range`, in
/// units of the inverse electron charge. Ascending.
pub fn kappa_spectrum<F: Scalar>(n: i64, range: i64) -> Result<Vec<F>, F> {
    if n == 0 {
        return Err(Error::InvalidN);
    }
    let mut values: Vec<F> = (-range..=range)
        .map(|k| lit::<F>((n * k) as f64))
        .collect();
    values.sort_by(|a, b| a.partial_cmp(b).expect("finite spectrum values"));
    Ok(values)
}

/// Allowed charges `n_q / N` for `|n_q| <= range`, in units of the
/// electron charge. Ascending and symmetric under negation.
pub fn charge_spectrum<F: Scalar>(n: i64, range: i64) -> Result<ChargeSpectrum<F>, F> {
    if n == 0 {
        return Err(Error::InvalidN);
    }
    let denom = lit::<F>(n as f64);
    let mut charges: Vec<F> = (-range..=range)
        .map(|k| lit::<F>(k as f64) / denom)
        .collect();
    charges.sort_by(|a, b| a.partial_cmp(b).expect("finite charges"));
    Ok(ChargeSpectrum {
        n,
        n_range: range,
        charges,
    })
}

/// Whether the gauge factor `exp(i q kappa phi)` is single-valued,
/// realized as a holonomy test around the unit loop: true iff
/// `|holonomy - 1| < 1e-9`. Agrees with [`kappa_condition`] away from
/// the crossover band between the two tolerances.
pub fn single_valuedness<F: Scalar>(q: ChargeSpec<F>, kappa: F) -> bool {
    let spec = PotentialSpec::PureGaugeKappa { kappa };
    match holonomy(q, &spec, &ParamPath::unit_circle()) {
        Ok(h) => (h - Complex::new(F::one(), F::zero())).norm() < lit(HOLONOMY_TOL),
        Err(_) => false,
    }
}

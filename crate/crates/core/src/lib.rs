//! Numerical laboratory for singular gauge potentials on punctured domains.
//!
//! The library evaluates the classic singular vector potentials of
//! electromagnetism — the two monopole string potentials, the pure-gauge
//! vortex potential `kappa/rho phi-hat`, and the solenoid potential — on
//! their validity patches, integrates them along parametric paths and
//! surfaces, and checks the charge-quantization conditions that make such
//! potentials physically unobservable. A semiclassical two-path
//! interference simulator demonstrates when adding a pure-gauge term
//! changes an observable fringe pattern and when it does not.
//!
//! All quantities are in natural units: `hbar = c = 1` and the electron
//! charge `e = 1`. Azimuth is counted counterclockwise viewed from `+z`.
//!
//! Core routines are generic over the floating-point scalar (see
//! [`Scalar`]); the crate root re-exports `f64` aliases for the common
//! case.

pub mod abeffect;
pub mod calculus;
pub mod error;
pub mod gauge;
pub mod geometry;
pub mod potentials;
mod scalar;

pub use error::Error as GenericError;
pub use scalar::Scalar;

/// Crate-wide axis/singularity guard distance: evaluation or sampling
/// closer than this to an excluded set is a domain error, not a large
/// number.
pub const AXIS_GUARD: f64 = 1e-9;

// f64 aliases for the generic core types.

pub type Point3 = geometry::Point3<f64>;
pub type Vec3 = geometry::Vec3<f64>;
pub type Cylindrical = geometry::Cylindrical<f64>;
pub type PatchSpec = geometry::PatchSpec<f64>;
pub type ParamPath = geometry::ParamPath<f64>;
pub type ParamSurface = geometry::ParamSurface<f64>;
pub type PotentialSpec = potentials::PotentialSpec<f64>;
pub type FieldSample = potentials::FieldSample<f64>;
pub type QuadratureConfig = calculus::QuadratureConfig<f64>;
pub type QuadratureStats = calculus::QuadratureStats<f64>;
pub type StokesReport = calculus::StokesReport<f64>;
pub type ChargeSpec = gauge::ChargeSpec<f64>;
pub type QuantizationReport = gauge::QuantizationReport<f64>;
pub type ChargeSpectrum = gauge::ChargeSpectrum<f64>;
pub type SolenoidConfig = abeffect::SolenoidConfig<f64>;
pub type TwoPathSetup = abeffect::TwoPathSetup<f64>;
pub type InterferencePattern = abeffect::InterferencePattern<f64>;
pub type KappaInvarianceReport = abeffect::KappaInvarianceReport<f64>;
pub type Error = error::Error<f64>;
pub type Result<T> = std::result::Result<T, Error>;

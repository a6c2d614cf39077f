//! Error type shared by all modules.

use std::fmt;

use crate::geometry::{PatchSpec, Point3};
use crate::Scalar;

#[derive(Debug, Clone, PartialEq)]
pub enum Error<F: Scalar> {
    /// Evaluation point lies in (or within the guard distance of) the
    /// excluded set of a potential's patch.
    OutsideDomain { point: Point3<F>, patch: PatchSpec<F> },

    /// The solenoid field is undefined on the shell `rho = R`.
    OnSolenoidShell { radius: F },

    /// A path sample came within the guard distance of the z-axis.
    PathTouchesAxis { t: F, distance: F },

    /// A loop operation was applied to a path whose endpoints differ.
    NotClosed { gap: F },

    /// Panel refinement hit its limit before successive estimates agreed.
    NoConvergence { refinements: u32, last_delta: F },

    /// A field sample on a surface returned an error.
    FieldSingularOnSurface(Box<Error<F>>),

    /// The surface crosses the z-axis more than once; the annular-limit
    /// procedure supports a single interception.
    MultipleInterceptions { winding: i32 },

    /// An axis-intercepting surface whose parameterization does not place
    /// the interception on the u = 0 edge; the inner coordinate loop
    /// cannot be constructed.
    UnsupportedSurface { reason: String },

    /// The spectrum denominator must be a non-zero integer.
    InvalidN,
}

impl<F: Scalar> fmt::Display for Error<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::OutsideDomain { point, patch } => {
                write!(f, "point {point} is excluded from the domain patch ({patch})")
            }
            Error::OnSolenoidShell { radius } => write!(
                f,
                "point lies on the solenoid shell rho = {radius} where the field is undefined"
            ),
            Error::PathTouchesAxis { t, distance } => {
                write!(f, "path approaches the z-axis (distance {distance} at t = {t})")
            }
            Error::NotClosed { gap } => {
                write!(f, "path is not a closed loop (endpoint gap {gap})")
            }
            Error::NoConvergence { refinements, last_delta } => write!(
                f,
                "quadrature did not converge after {refinements} refinements (last delta {last_delta})"
            ),
            Error::FieldSingularOnSurface(inner) => {
                write!(f, "field is singular on the surface: {inner}")
            }
            Error::MultipleInterceptions { winding } => write!(
                f,
                "surface crosses the z-axis more than once (boundary winding {winding})"
            ),
            Error::UnsupportedSurface { reason } => {
                write!(f, "unsupported surface for the annular procedure: {reason}")
            }
            Error::InvalidN => write!(f, "N must be a non-zero integer"),
        }
    }
}

impl<F: Scalar> std::error::Error for Error<F> {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            Error::FieldSingularOnSurface(inner) => Some(inner),
            _ => None,
        }
    }
}

pub type Result<T, F> = std::result::Result<T, Error<F>>;

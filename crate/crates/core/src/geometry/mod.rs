//! Coordinate systems, validity patches, parametric paths and surfaces,
//! and winding numbers around the z-axis.

mod patch;
mod path;
mod point;
mod surface;

pub use patch::PatchSpec;
pub use path::{path_in_patch, winding_number, ParamPath};
pub use point::{Cylindrical, Point3, Vec3};
pub use surface::ParamSurface;

use crate::scalar::lit;
use crate::Scalar;

/// Guard distance around excluded sets, as the working scalar.
pub fn axis_guard<F: Scalar>() -> F {
    lit(crate::AXIS_GUARD)
}

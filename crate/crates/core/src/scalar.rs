use std::fmt;

use num_traits::{Float, FloatConst, FromPrimitive};

/// Floating-point scalar for all numerical routines: `f32` or `f64`.
pub trait Scalar:
    Float + FloatConst + FromPrimitive + fmt::Debug + fmt::Display + Send + Sync + 'static
{
}

impl<T> Scalar for T where
    T: Float + FloatConst + FromPrimitive + fmt::Debug + fmt::Display + Send + Sync + 'static
{
}

/// Shorthand for lifting an `f64` literal into the working scalar type.
pub(crate) fn lit<F: Scalar>(x: f64) -> F {
    F::from_f64(x).expect("literal representable in scalar type")
}

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use serde::de::{Deserialize, Deserializer};
use serde::ser::{Serialize, SerializeTuple, Serializer};

use crate::Scalar;

/// A point in Cartesian coordinates (natural units, dimensionless lengths).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point3<F> {
    pub x: F,
    pub y: F,
    pub z: F,
}

/// A Cartesian 3-vector (displacements, tangents, field values).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Vec3<F> {
    pub x: F,
    pub y: F,
    pub z: F,
}

/// Cylindrical coordinates with `phi` in `[0, 2*pi)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Cylindrical<F> {
    pub rho: F,
    pub phi: F,
    pub z: F,
}

impl<F: Scalar> Point3<F> {
    pub fn new(x: F, y: F, z: F) -> Self {
        Self { x, y, z }
    }

    pub fn origin() -> Self {
        Self::new(F::zero(), F::zero(), F::zero())
    }

    /// Distance from the z-axis.
    pub fn rho(&self) -> F {
        self.x.hypot(self.y)
    }

    /// Distance from the origin.
    pub fn r(&self) -> F {
        self.coords().norm()
    }

    pub fn coords(&self) -> Vec3<F> {
        Vec3::new(self.x, self.y, self.z)
    }

    pub fn distance(&self, other: &Self) -> F {
        (*self - *other).norm()
    }

    /// Cartesian to cylindrical conversion. `phi` is counted
    /// counterclockwise viewed from `+z` and reported in `[0, 2*pi)`;
    /// on the axis (`rho = 0`) `phi` is defined as 0.
    pub fn to_cylindrical(&self) -> Cylindrical<F> {
        let rho = self.rho();
        let phi = if rho == F::zero() {
            F::zero()
        } else {
            let a = self.y.atan2(self.x);
            if a < F::zero() {
                a + F::TAU()
            } else {
                a
            }
        };
        Cylindrical { rho, phi, z: self.z }
    }

    pub fn from_cylindrical(rho: F, phi: F, z: F) -> Self {
        Self::new(rho * phi.cos(), rho * phi.sin(), z)
    }

    /// Azimuthal unit vector at this point; zero on the axis.
    pub fn phi_hat(&self) -> Vec3<F> {
        let rho = self.rho();
        if rho == F::zero() {
            Vec3::zero()
        } else {
            Vec3::new(-self.y / rho, self.x / rho, F::zero())
        }
    }

    /// Radial (spherical) unit vector at this point; zero at the origin.
    pub fn r_hat(&self) -> Vec3<F> {
        let r = self.r();
        if r == F::zero() {
            Vec3::zero()
        } else {
            self.coords() / r
        }
    }
}

impl<F: Scalar> Vec3<F> {
    pub fn new(x: F, y: F, z: F) -> Self {
        Self { x, y, z }
    }

    pub fn zero() -> Self {
        Self::new(F::zero(), F::zero(), F::zero())
    }

    pub fn dot(&self, other: &Self) -> F {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn cross(&self, other: &Self) -> Self {
        Self::new(
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        )
    }

    pub fn norm(&self) -> F {
        self.dot(self).sqrt()
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }
}

impl<F: Scalar> Add for Vec3<F> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.x + rhs.x, self.y + rhs.y, self.z + rhs.z)
    }
}

impl<F: Scalar> Sub for Vec3<F> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.x - rhs.x, self.y - rhs.y, self.z - rhs.z)
    }
}

impl<F: Scalar> Neg for Vec3<F> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.x, -self.y, -self.z)
    }
}

impl<F: Scalar> Mul<F> for Vec3<F> {
    type Output = Self;
    fn mul(self, s: F) -> Self {
        Self::new(self.x * s, self.y * s, self.z * s)
    }
}

impl<F: Scalar> Div<F> for Vec3<F> {
    type Output = Self;
    fn div(self, s: F) -> Self {
        Self::new(self.x / s, self.y / s, self.z / s)
    }
}

impl<F: Scalar> Add<Vec3<F>> for Point3<F> {
    type Output = Self;
    fn add(self, v: Vec3<F>) -> Self {
        Self::new(self.x + v.x, self.y + v.y, self.z + v.z)
    }
}

impl<F: Scalar> Sub for Point3<F> {
    type Output = Vec3<F>;
    fn sub(self, rhs: Self) -> Vec3<F> {
        Vec3::new(self.x - rhs.x, self.y - rhs.y, self.z - rhs.z)
    }
}

// Points and vectors travel as [x, y, z] triplets in JSON.
macro_rules! impl_triplet_serde {
    ($ty:ident) => {
        impl<F: Serialize> Serialize for $ty<F> {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                let mut tup = serializer.serialize_tuple(3)?;
                tup.serialize_element(&self.x)?;
                tup.serialize_element(&self.y)?;
                tup.serialize_element(&self.z)?;
                tup.end()
            }
        }

        impl<'de, F: Deserialize<'de>> Deserialize<'de> for $ty<F> {
            fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
                let [x, y, z] = <[F; 3]>::deserialize(deserializer)?;
                Ok(Self { x, y, z })
            }
        }
    };
}

impl_triplet_serde!(Point3);
impl_triplet_serde!(Vec3);

impl<F: Scalar> fmt::Display for Point3<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

impl<F: Scalar> fmt::Display for Vec3<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::{FRAC_PI_2, PI};

    #[test]
    fn cylindrical_of_axis_aligned_points() {
        let c = Point3::new(1.0, 0.0, 0.0).to_cylindrical();
        assert_eq!((c.rho, c.phi, c.z), (1.0, 0.0, 0.0));

        let c = Point3::new(0.0, 1.0, 5.0).to_cylindrical();
        assert_relative_eq!(c.rho, 1.0);
        assert_relative_eq!(c.phi, FRAC_PI_2);
        assert_relative_eq!(c.z, 5.0);

        let c = Point3::new(-2.0, 0.0, 1.0).to_cylindrical();
        assert_relative_eq!(c.rho, 2.0);
        assert_relative_eq!(c.phi, PI);
        assert_relative_eq!(c.z, 1.0);
    }

    #[test]
    fn phi_defined_as_zero_on_axis() {
        let c = Point3::new(0.0, 0.0, 3.0).to_cylindrical();
        assert_eq!(c.phi, 0.0);
        assert_eq!(c.rho, 0.0);
    }

    #[test]
    fn phi_range_is_half_open() {
        // Just below the positive x-axis the azimuth wraps to just under 2*pi.
        let c = Point3::new(1.0, -1e-12, 0.0).to_cylindrical();
        let tau = std::f64::consts::TAU;
        assert!(c.phi < tau && c.phi > tau - 1e-11);
    }

    #[test]
    fn phi_hat_is_unit_and_azimuthal() {
        let p = Point3::new(3.0, -4.0, 2.0);
        let e = p.phi_hat();
        assert_relative_eq!(e.norm(), 1.0, max_relative = 1e-15);
        assert_eq!(e.z, 0.0);
        // Orthogonal to the cylinder radius.
        assert_relative_eq!(e.dot(&Vec3::new(p.x, p.y, 0.0)), 0.0, epsilon = 1e-14);
    }
}

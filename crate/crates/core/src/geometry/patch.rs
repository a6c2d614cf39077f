use std::fmt;

use serde::{Deserialize, Serialize};

use super::{axis_guard, Point3};
use crate::Scalar;

/// The excluded singular set of a potential's domain. The patch itself is
/// the complement of the excluded set: an open region on which the
/// potential is defined.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum PatchSpec<F> {
    /// Nothing excluded; the potential is defined everywhere.
    None,
    /// The whole z-axis is excluded.
    ZAxis,
    /// The half-axis `z <= 0` (including the origin) is excluded.
    NegZHalfAxis,
    /// The half-axis `z >= 0` (including the origin) is excluded.
    PosZHalfAxis,
    /// The infinite cylinder shell `rho = radius` is excluded.
    CylinderShell { radius: F },
    /// Intersection of several patches (union of their excluded sets).
    /// Arises for superposed potentials.
    Intersection(Vec<PatchSpec<F>>),
}

impl<F: Scalar> PatchSpec<F> {
    /// Distance from `p` to the excluded set (infinite when nothing is
    /// excluded).
    pub fn clearance(&self, p: &Point3<F>) -> F {
        match self {
            PatchSpec::None => F::infinity(),
            PatchSpec::ZAxis => p.rho(),
            PatchSpec::NegZHalfAxis => {
                if p.z <= F::zero() {
                    p.rho()
                } else {
                    p.rho().hypot(p.z)
                }
            }
            PatchSpec::PosZHalfAxis => {
                if p.z >= F::zero() {
                    p.rho()
                } else {
                    p.rho().hypot(p.z)
                }
            }
            PatchSpec::CylinderShell { radius } => (p.rho() - *radius).abs(),
            PatchSpec::Intersection(members) => members
                .iter()
                .map(|m| m.clearance(p))
                .fold(F::infinity(), F::min),
        }
    }

    /// Membership test for the patch. A point within the guard distance
    /// of the excluded set is treated as excluded.
    pub fn contains(&self, p: &Point3<F>) -> bool {
        self.clearance(p) > axis_guard()
    }

    /// Patch on which both `self` and `other` are valid.
    pub fn intersect(self, other: PatchSpec<F>) -> PatchSpec<F> {
        match (self, other) {
            (PatchSpec::None, b) => b,
            (a, PatchSpec::None) => a,
            (a, b) if a == b => a,
            (PatchSpec::Intersection(mut xs), PatchSpec::Intersection(ys)) => {
                for y in ys {
                    if !xs.contains(&y) {
                        xs.push(y);
                    }
                }
                PatchSpec::Intersection(xs)
            }
            (PatchSpec::Intersection(mut xs), b) => {
                if !xs.contains(&b) {
                    xs.push(b);
                }
                PatchSpec::Intersection(xs)
            }
            (a, PatchSpec::Intersection(mut ys)) => {
                if !ys.contains(&a) {
                    ys.insert(0, a);
                }
                PatchSpec::Intersection(ys)
            }
            (a, b) => PatchSpec::Intersection(vec![a, b]),
        }
    }
}

impl<F: Scalar> fmt::Display for PatchSpec<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatchSpec::None => write!(f, "whole space"),
            PatchSpec::ZAxis => write!(f, "excludes the z-axis"),
            PatchSpec::NegZHalfAxis => write!(f, "excludes the z <= 0 half-axis"),
            PatchSpec::PosZHalfAxis => write!(f, "excludes the z >= 0 half-axis"),
            PatchSpec::CylinderShell { radius } => {
                write!(f, "excludes the cylinder shell rho = {radius}")
            }
            PatchSpec::Intersection(members) => {
                write!(f, "intersection of [")?;
                for (i, m) in members.iter().enumerate() {
                    if i > 0 {
                        write!(f, "; ")?;
                    }
                    write!(f, "{m}")?;
                }
                write!(f, "]")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_axis_clearance() {
        let patch = PatchSpec::NegZHalfAxis;
        // On the negative half-axis side the distance is the cylinder radius.
        assert_eq!(patch.clearance(&Point3::new(3.0, 4.0, -2.0)), 5.0);
        // Above the endpoint the nearest excluded point is the origin.
        assert_eq!(patch.clearance(&Point3::new(0.0, 3.0, 4.0)), 5.0);
        assert!(!patch.contains(&Point3::new(0.0, 0.0, -1.0)));
        assert!(patch.contains(&Point3::new(0.0, 0.0, 1.0)));
    }

    #[test]
    fn guard_band_counts_as_excluded() {
        let patch = PatchSpec::ZAxis;
        assert!(!patch.contains(&Point3::new(0.5e-9, 0.0, 7.0)));
        assert!(patch.contains(&Point3::new(1.0e-6, 0.0, 7.0)));
    }

    #[test]
    fn shell_membership() {
        let patch = PatchSpec::CylinderShell { radius: 1.0 };
        assert!(patch.contains(&Point3::new(0.5, 0.0, 0.0)));
        assert!(patch.contains(&Point3::new(2.0, 0.0, 3.0)));
        assert!(!patch.contains(&Point3::new(1.0, 0.0, -5.0)));
    }

    #[test]
    fn intersection_takes_min_clearance() {
        let patch =
            PatchSpec::<f64>::ZAxis.intersect(PatchSpec::CylinderShell { radius: 2.0 });
        let p = Point3::new(1.9, 0.0, 0.0);
        assert!((patch.clearance(&p) - 0.1).abs() < 1e-15);
        assert!(!patch.contains(&Point3::new(2.0, 0.0, 0.0)));
        assert!(!patch.contains(&Point3::new(0.0, 0.0, 1.0)));
    }

    #[test]
    fn intersect_dedups_equal_members() {
        let a = PatchSpec::<f64>::CylinderShell { radius: 1.0 };
        let b = PatchSpec::CylinderShell { radius: 1.0 };
        assert_eq!(a.clone().intersect(b), a);
    }
}

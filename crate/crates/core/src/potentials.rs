//! Catalog of singular vector potentials and their magnetic fields, each
//! bound to the validity patch that carries its singularity.
//!
//! Every potential here is azimuthal, `A = a(rho, z) phi-hat`, and is
//! returned in Cartesian components so downstream quadrature works in a
//! single basis:
//!
//! * string potential I: `g (1 - cos theta) / (r sin theta)`, defined off
//!   the `z <= 0` half-axis;
//! * string potential II: `-g (1 + cos theta) / (r sin theta)`, defined
//!   off the `z >= 0` half-axis;
//! * pure-gauge vortex: `kappa / rho`, defined off the z-axis;
//! * solenoid potential: `B rho / 2` inside, `B R^2 / (2 rho)` outside,
//!   defined off the shell `rho = R`;
//! * vortex restricted to the solenoid exterior: `(kappa / rho)` for
//!   `rho > R`, zero inside, defined off the shell.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{axis_guard, PatchSpec, Point3, Vec3};
use crate::scalar::lit;
use crate::Scalar;

/// One of the catalog potentials, plus superpositions.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum PotentialSpec<F> {
    /// Monopole potential with the string along `z <= 0`.
    #[serde(rename = "string-i")]
    DiracStringI { g: F },
    /// Monopole potential with the string along `z >= 0`.
    #[serde(rename = "string-ii")]
    DiracStringII { g: F },
    /// Pure-gauge vortex potential `kappa / rho` around the z-axis.
    #[serde(rename = "kappa")]
    PureGaugeKappa { kappa: F },
    /// Idealized solenoid potential: uniform interior field `B`, radius `R`.
    #[serde(rename = "ab-solenoid")]
    AbSolenoid {
        #[serde(rename = "B")]
        b: F,
        #[serde(rename = "R")]
        radius: F,
    },
    /// Vortex potential switched on only outside the solenoid radius.
    #[serde(rename = "solenoid-kappa")]
    SolenoidKappa {
        kappa: F,
        #[serde(rename = "R")]
        radius: F,
    },
    /// Pointwise sum of member potentials on the intersection of their
    /// patches.
    #[serde(rename = "superposition")]
    Superposition { members: Vec<PotentialSpec<F>> },
}

/// A field value at a point, in Cartesian components.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FieldSample<F> {
    pub value: Vec3<F>,
    pub location: Point3<F>,
}

impl<F: Scalar> PotentialSpec<F> {
    /// The validity patch this potential is bound to.
    pub fn patch(&self) -> PatchSpec<F> {
        match self {
            PotentialSpec::DiracStringI { .. } => PatchSpec::NegZHalfAxis,
            PotentialSpec::DiracStringII { .. } => PatchSpec::PosZHalfAxis,
            PotentialSpec::PureGaugeKappa { .. } => PatchSpec::ZAxis,
            PotentialSpec::AbSolenoid { radius, .. }
            | PotentialSpec::SolenoidKappa { radius, .. } => {
                debug_assert!(*radius > F::zero(), "solenoid radius must be positive");
                PatchSpec::CylinderShell { radius: *radius }
            }
            PotentialSpec::Superposition { members } => members
                .iter()
                .map(PotentialSpec::patch)
                .fold(PatchSpec::None, PatchSpec::intersect),
        }
    }

    /// Evaluate the potential at `p`.
    ///
    /// Errors with [`Error::OutsideDomain`] when `p` is within the guard
    /// distance of the patch's excluded set.
    pub fn eval(&self, p: Point3<F>) -> Result<FieldSample<F>, F> {
        let patch = self.patch();
        if !patch.contains(&p) {
            return Err(Error::OutsideDomain { point: p, patch });
        }
        Ok(FieldSample {
            value: self.eval_unchecked(p),
            location: p,
        })
    }

    /// Azimuthal magnitude times `phi_hat`, without the patch check.
    /// Callers guarantee `p` is strictly inside the patch.
    fn eval_unchecked(&self, p: Point3<F>) -> Vec3<F> {
        match self {
            PotentialSpec::DiracStringI { g } => {
                // g (1 - cos th) / (r sin th) = g (r - z) / (r rho)
                let r = p.r();
                let rho = p.rho();
                p.phi_hat() * (*g * (r - p.z) / (r * rho))
            }
            PotentialSpec::DiracStringII { g } => {
                let r = p.r();
                let rho = p.rho();
                p.phi_hat() * (-*g * (r + p.z) / (r * rho))
            }
            PotentialSpec::PureGaugeKappa { kappa } => p.phi_hat() * (*kappa / p.rho()),
            PotentialSpec::AbSolenoid { b, radius } => {
                let rho = p.rho();
                let half = lit::<F>(0.5);
                let mag = if rho < *radius {
                    *b * rho * half
                } else {
                    *b * *radius * *radius * half / rho
                };
                p.phi_hat() * mag
            }
            PotentialSpec::SolenoidKappa { kappa, radius } => {
                let rho = p.rho();
                if rho > *radius {
                    p.phi_hat() * (*kappa / rho)
                } else {
                    Vec3::zero()
                }
            }
            PotentialSpec::Superposition { members } => members
                .iter()
                .map(|m| m.eval_unchecked(p))
                .fold(Vec3::zero(), |acc, v| acc + v),
        }
    }
}

/// Magnetic field of a point monopole of charge `g` at the origin
/// (regular part, `g / r^2` radially outward).
pub fn monopole_field<F: Scalar>(g: F, p: Point3<F>) -> Result<FieldSample<F>, F> {
    let r = p.r();
    if r <= axis_guard() {
        return Err(Error::OutsideDomain {
            point: p,
            patch: PatchSpec::NegZHalfAxis,
        });
    }
    Ok(FieldSample {
        value: p.r_hat() * (g / (r * r)),
        location: p,
    })
}

/// Magnetic field of an idealized infinite solenoid: `B z-hat` inside,
/// zero outside, undefined on the shell `rho = R`.
pub fn solenoid_field<F: Scalar>(b: F, radius: F, p: Point3<F>) -> Result<FieldSample<F>, F> {
    let rho = p.rho();
    if (rho - radius).abs() <= axis_guard() {
        return Err(Error::OnSolenoidShell { radius });
    }
    let value = if rho < radius {
        Vec3::new(F::zero(), F::zero(), b)
    } else {
        Vec3::zero()
    };
    Ok(FieldSample { value, location: p })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::FRAC_PI_2;

    fn mag(v: Vec3<f64>) -> f64 {
        v.norm()
    }

    #[test]
    fn string_i_on_equator() {
        // (1 - cos(pi/2)) / (1 * 1) = 1
        let p = Point3::from_cylindrical(1.0, 0.3, 0.0);
        let s = PotentialSpec::DiracStringI { g: 1.0 }.eval(p).unwrap();
        assert_relative_eq!(mag(s.value), 1.0, max_relative = 1e-14);
        assert_relative_eq!(s.value.dot(&p.phi_hat()), 1.0, max_relative = 1e-14);
    }

    #[test]
    fn string_i_spherical_form_agrees() {
        // Compare the (r - z)/(r rho) evaluation with the literal
        // spherical expression at a generic point.
        let (r, theta, phi) = (2.0, 1.1, 0.4);
        let p = Point3::from_cylindrical(r * f64::sin(theta), phi, r * f64::cos(theta));
        let s = PotentialSpec::DiracStringI { g: 0.7 }.eval(p).unwrap();
        let expected = 0.7 * (1.0 - theta.cos()) / (r * theta.sin());
        assert_relative_eq!(s.value.dot(&p.phi_hat()), expected, max_relative = 1e-13);
    }

    #[test]
    fn kappa_magnitude_falls_off_as_inverse_rho() {
        let p = Point3::new(0.0, 2.0, -3.0);
        let s = PotentialSpec::PureGaugeKappa { kappa: 3.0 }.eval(p).unwrap();
        assert_relative_eq!(mag(s.value), 1.5, max_relative = 1e-14);
    }

    #[test]
    fn solenoid_potential_inside_and_outside() {
        let spec = PotentialSpec::AbSolenoid { b: 2.0, radius: 1.0 };
        let inside = spec.eval(Point3::new(0.5, 0.0, 0.0)).unwrap();
        assert_relative_eq!(mag(inside.value), 0.5, max_relative = 1e-14);
        let outside = spec.eval(Point3::new(0.0, 2.0, 1.0)).unwrap();
        assert_relative_eq!(mag(outside.value), 0.5, max_relative = 1e-14);
    }

    #[test]
    fn string_point_is_outside_domain() {
        let err = PotentialSpec::DiracStringI { g: 1.0 }
            .eval(Point3::new(0.0, 0.0, -1.0))
            .unwrap_err();
        assert!(matches!(err, Error::OutsideDomain { .. }));
    }

    #[test]
    fn string_ii_rejects_positive_axis_only() {
        let spec = PotentialSpec::DiracStringII { g: 1.0 };
        assert!(spec.eval(Point3::new(0.0, 0.0, 2.0)).is_err());
        assert!(spec.eval(Point3::new(0.0, 0.0, -2.0)).is_ok());
    }

    #[test]
    fn solenoid_kappa_vanishes_inside() {
        let spec = PotentialSpec::SolenoidKappa { kappa: 2.0, radius: 1.0 };
        let inside = spec.eval(Point3::new(0.3, 0.0, 0.0)).unwrap();
        assert_eq!(inside.value, Vec3::zero());
        let outside = spec.eval(Point3::new(4.0, 0.0, 0.0)).unwrap();
        assert_relative_eq!(mag(outside.value), 0.5, max_relative = 1e-14);
    }

    #[test]
    fn superposition_patch_is_intersection() {
        let spec = PotentialSpec::Superposition {
            members: vec![
                PotentialSpec::AbSolenoid { b: 1.0, radius: 1.0 },
                PotentialSpec::SolenoidKappa { kappa: 1.0, radius: 1.0 },
            ],
        };
        assert_eq!(spec.patch(), PatchSpec::CylinderShell { radius: 1.0 });

        let mixed = PotentialSpec::Superposition {
            members: vec![
                PotentialSpec::PureGaugeKappa { kappa: 1.0 },
                PotentialSpec::AbSolenoid { b: 1.0, radius: 1.0 },
            ],
        };
        let patch = mixed.patch();
        assert!(!patch.contains(&Point3::new(0.0, 0.0, 1.0)));
        assert!(!patch.contains(&Point3::new(1.0, 0.0, 0.0)));
        assert!(patch.contains(&Point3::new(2.0, 0.0, 0.0)));
    }

    #[test]
    fn monopole_field_examples() {
        let s = monopole_field(1.0, Point3::new(2.0, 0.0, 0.0)).unwrap();
        assert_relative_eq!(s.value.x, 0.25, max_relative = 1e-14);
        assert_eq!((s.value.y, s.value.z), (0.0, 0.0));

        let s = monopole_field(1.0, Point3::new(0.0, 0.0, 3.0)).unwrap();
        assert_relative_eq!(s.value.z, 1.0 / 9.0, max_relative = 1e-14);

        let s = monopole_field(0.0, Point3::new(0.3, -0.2, 0.9)).unwrap();
        assert_eq!(s.value, Vec3::zero());

        assert!(monopole_field(1.0, Point3::origin()).is_err());
    }

    #[test]
    fn solenoid_field_examples() {
        let s = solenoid_field(2.0, 1.0, Point3::new(0.5, 0.0, 0.0)).unwrap();
        assert_eq!(s.value, Vec3::new(0.0, 0.0, 2.0));

        let s = solenoid_field(2.0, 1.0, Point3::new(3.0, 0.0, 0.0)).unwrap();
        assert_eq!(s.value, Vec3::zero());

        let err = solenoid_field(2.0, 1.0, Point3::new(1.0, 0.0, 0.0)).unwrap_err();
        assert!(matches!(err, Error::OnSolenoidShell { .. }));
    }

    #[test]
    fn equator_evaluation_example_from_spherical_input() {
        // r = 1, theta = pi/2 on the x-axis.
        let p = Point3::from_cylindrical(1.0, 0.0, (FRAC_PI_2).cos() * 0.0);
        let s = PotentialSpec::DiracStringI { g: 1.0 }.eval(p).unwrap();
        assert_relative_eq!(s.value.dot(&p.phi_hat()), 1.0, max_relative = 1e-14);
    }

    #[test]
    fn descriptor_round_trip() {
        let spec = PotentialSpec::Superposition {
            members: vec![
                PotentialSpec::AbSolenoid { b: 2.0, radius: 1.0 },
                PotentialSpec::SolenoidKappa { kappa: 0.5, radius: 1.0 },
            ],
        };
        let text = serde_json::to_string(&spec).unwrap();
        assert!(text.contains("\"kind\":\"ab-solenoid\""));
        assert!(text.contains("\"B\":2.0"));
        let back: PotentialSpec<f64> = serde_json::from_str(&text).unwrap();
        assert_eq!(back, spec);
    }
}

//! Semiclassical two-path interference around an idealized solenoid.
//!
//! Phases are computed path-wise from the circulation of the vector
//! potential, which is exactly the content of the flux and
//! single-valuedness arguments: the relative phase between the two arms
//! is `q` times the circulation around the closed upper-minus-lower
//! loop, so it depends only on the enclosed flux and on any pure-gauge
//! addition with non-integer `q kappa`.

use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::calculus::{line_integral, QuadratureConfig};
use crate::error::Result;
use crate::gauge::{kappa_condition, ChargeSpec};
use crate::geometry::{winding_number, ParamPath, Point3, Vec3};
use crate::potentials::PotentialSpec;
use crate::scalar::lit;
use crate::Scalar;

/// An idealized infinite solenoid on the z-axis.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SolenoidConfig<F> {
    /// Interior field strength.
    pub b: F,
    /// Radius, `> 0`.
    pub radius: F,
}

impl<F: Scalar> Default for SolenoidConfig<F> {
    /// `B = 100`, `R = 0.1`: enclosed flux `pi`, so the default solenoid
    /// shifts the pattern by exactly half a fringe per unit charge.
    fn default() -> Self {
        Self {
            b: lit(100.0),
            radius: lit(0.1),
        }
    }
}

impl<F: Scalar> SolenoidConfig<F> {
    pub fn potential(&self) -> PotentialSpec<F> {
        PotentialSpec::AbSolenoid {
            b: self.b,
            radius: self.radius,
        }
    }
}

/// Total magnetic flux carried by the solenoid, `B pi R^2`. Equals the
/// circulation of the solenoid potential around any exterior loop that
/// winds once.
pub fn enclosed_flux<F: Scalar>(cfg: &SolenoidConfig<F>) -> F {
    cfg.b * F::PI() * cfg.radius * cfg.radius
}

type PathBuilder<F> = Arc<dyn Fn(Point3<F>) -> ParamPath<F> + Send + Sync>;
type BaselineFn<F> = Arc<dyn Fn(Point3<F>) -> F + Send + Sync>;

/// Source, screen, and the two families of paths around the solenoid.
///
/// For every screen point the closed loop (upper arm followed by the
/// reversed lower arm) must wind once around the z-axis and stay outside
/// the solenoid; [`TwoPathSetup::validate`] checks this.
#[derive(Clone)]
pub struct TwoPathSetup<F> {
    pub source: Point3<F>,
    pub screen_points: Vec<Point3<F>>,
    upper: PathBuilder<F>,
    lower: PathBuilder<F>,
    baseline: BaselineFn<F>,
}

impl<F: Scalar> TwoPathSetup<F> {
    pub fn new<U, L, B>(
        source: Point3<F>,
        screen_points: Vec<Point3<F>>,
        upper: U,
        lower: L,
        baseline: B,
    ) -> Self
    where
        U: Fn(Point3<F>) -> ParamPath<F> + Send + Sync + 'static,
        L: Fn(Point3<F>) -> ParamPath<F> + Send + Sync + 'static,
        B: Fn(Point3<F>) -> F + Send + Sync + 'static,
    {
        Self {
            source,
            screen_points,
            upper: Arc::new(upper),
            lower: Arc::new(lower),
            baseline: Arc::new(baseline),
        }
    }

    /// Source at `(-5, 0, 0)`, screen line `x = +5` with 601 points over
    /// `y in [-3, 3]`, semicircular arms passing on either side of the
    /// solenoid, and free-propagation phase `delta0(y) = k y d / L` with
    /// `k = 50`, `d = 1`, `L = 10`.
    pub fn default_geometry() -> Self {
        Self::screen_line(601)
    }

    /// Default geometry with a custom number of screen points.
    pub fn screen_line(points: usize) -> Self {
        assert!(points >= 2, "screen needs at least two points");
        let source = Point3::new(lit(-5.0), F::zero(), F::zero());
        let span = lit::<F>(6.0);
        let lo = lit::<F>(-3.0);
        let nf = lit::<F>((points - 1) as f64);
        let screen_points: Vec<Point3<F>> = (0..points)
            .map(|j| {
                let y = lo + span * lit::<F>(j as f64) / nf;
                Point3::new(lit(5.0), y, F::zero())
            })
            .collect();
        let fringe = lit::<F>(50.0 * 1.0 / 10.0);
        Self::new(
            source,
            screen_points,
            move |target| semicircle_arm(source, target, true),
            move |target| semicircle_arm(source, target, false),
            move |target| fringe * target.y,
        )
    }

    pub fn upper_path(&self, screen_index: usize) -> ParamPath<F> {
        (self.upper)(self.screen_points[screen_index])
    }

    pub fn lower_path(&self, screen_index: usize) -> ParamPath<F> {
        (self.lower)(self.screen_points[screen_index])
    }

    /// Free-propagation phase difference at a screen point.
    pub fn baseline_phase(&self, screen_index: usize) -> F {
        (self.baseline)(self.screen_points[screen_index])
    }

    /// Check the setup invariant: every upper-minus-lower loop winds
    /// once around the z-axis and keeps `rho > exclusion_radius`.
    pub fn validate(&self, exclusion_radius: F) -> bool {
        let samples = 256;
        let nf = lit::<F>(samples as f64);
        (0..self.screen_points.len()).all(|k| {
            let up = self.upper_path(k);
            let down = self.lower_path(k);
            let loop_path = up.concat(&down.reversed());
            let winds = matches!(winding_number(&loop_path), Ok(w) if w.abs() == 1);
            winds
                && (0..=samples).all(|i| {
                    loop_path.at(lit::<F>(i as f64) / nf).rho() > exclusion_radius
                })
        })
    }
}

impl<F: Scalar> std::fmt::Debug for TwoPathSetup<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("TwoPathSetup")
            .field("source", &self.source)
            .field("screen_points", &self.screen_points.len())
            .finish_non_exhaustive()
    }
}

/// Half-circle arc from `a` to `b` bulging to the left (`up`) or right
/// of the chord, in the plane z = const.
fn semicircle_arm<F: Scalar>(a: Point3<F>, b: Point3<F>, up: bool) -> ParamPath<F> {
    let half = lit::<F>(0.5);
    let center = Point3::new(
        (a.x + b.x) * half,
        (a.y + b.y) * half,
        (a.z + b.z) * half,
    );
    let u = (b - a) * half;
    let radius = u.norm();
    let mut n = Vec3::new(-u.y, u.x, F::zero());
    let n_norm = n.norm();
    assert!(n_norm > F::zero(), "arm endpoints must not be stacked vertically");
    n = n * (radius / n_norm);
    if !up {
        n = -n;
    }
    let pi = F::PI();
    let pos = move |t: F| {
        let a = pi * t;
        center + (-u) * a.cos() + n * a.sin()
    };
    let vel = move |t: F| {
        let a = pi * t;
        (u * a.sin() + n * a.cos()) * pi
    };
    ParamPath::new(pos, vel, false, 64)
}

/// Fringe intensities on the screen: `1 + cos(delta0 + relative phase)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InterferencePattern<F> {
    /// Screen coordinate (y) per point.
    pub positions: Vec<F>,
    /// In `[0, 2]`, same length as `positions`.
    pub intensities: Vec<F>,
}

impl<F: Scalar> InterferencePattern<F> {
    /// Largest pointwise intensity difference against another pattern.
    pub fn max_abs_difference(&self, other: &Self) -> F {
        self.intensities
            .iter()
            .zip(&other.intensities)
            .map(|(a, b)| (*a - *b).abs())
            .fold(F::zero(), F::max)
    }
}

/// Phase acquired by the upper arm relative to the lower one:
/// `q (int_upper A . dl - int_lower A . dl)`, i.e. `q` times the
/// circulation around the closed loop. For the solenoid potential this
/// is `+/- q B pi R^2` independent of the arm shapes.
pub fn ab_relative_phase<F: Scalar>(
    q: ChargeSpec<F>,
    spec: &PotentialSpec<F>,
    setup: &TwoPathSetup<F>,
    screen_index: usize,
) -> Result<F, F> {
    let cfg = QuadratureConfig::default();
    let upper = line_integral(spec, &setup.upper_path(screen_index), &cfg)?;
    let lower = line_integral(spec, &setup.lower_path(screen_index), &cfg)?;
    Ok(q.q * (upper - lower))
}

/// Two-path fringe pattern for a charge moving around the given
/// potential. Screen points are independent and evaluated in parallel;
/// the output order is fixed by the screen index.
pub fn interference_pattern<F: Scalar>(
    q: ChargeSpec<F>,
    spec: &PotentialSpec<F>,
    setup: &TwoPathSetup<F>,
) -> Result<InterferencePattern<F>, F> {
    let rows: Vec<Result<(F, F), F>> = (0..setup.screen_points.len())
        .into_par_iter()
        .map(|k| {
            let phase = ab_relative_phase(q, spec, setup, k)?;
            let total = setup.baseline_phase(k) + phase;
            Ok((setup.screen_points[k].y, F::one() + total.cos()))
        })
        .collect();
    let mut positions = Vec::with_capacity(rows.len());
    let mut intensities = Vec::with_capacity(rows.len());
    for row in rows {
        let (y, i) = row?;
        positions.push(y);
        intensities.push(i);
    }
    Ok(InterferencePattern {
        positions,
        intensities,
    })
}

/// Outcome of [`kappa_invariance_experiment`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct KappaInvarianceReport<F> {
    /// Largest intensity change caused by adding the exterior vortex
    /// potential.
    pub max_intensity_deviation: F,
    /// Whether `q kappa` is an integer.
    pub quantized: bool,
}

/// Compare the fringe pattern with and without the exterior vortex
/// potential of strength `kappa` added to the solenoid potential. The
/// deviation is below noise iff `q kappa` is an integer; at half-integer
/// `q kappa` the pattern inverts and the deviation reaches 2.
pub fn kappa_invariance_experiment<F: Scalar>(
    q: ChargeSpec<F>,
    cfg: &SolenoidConfig<F>,
    setup: &TwoPathSetup<F>,
    kappa: F,
) -> Result<KappaInvarianceReport<F>, F> {
    let base = cfg.potential();
    let modified = PotentialSpec::Superposition {
        members: vec![
            base.clone(),
            PotentialSpec::SolenoidKappa {
                kappa,
                radius: cfg.radius,
            },
        ],
    };
    let reference = interference_pattern(q, &base, setup)?;
    let shifted = interference_pattern(q, &modified, setup)?;
    Ok(KappaInvarianceReport {
        max_intensity_deviation: reference.max_abs_difference(&shifted),
        quantized: kappa_condition(q, kappa).satisfied,
    })
}

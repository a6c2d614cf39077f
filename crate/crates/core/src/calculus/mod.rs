//! Line integrals, finite-difference curl, surface flux, and the
//! annular-limit realization of Stokes' theorem on punctured surfaces.

mod quadrature;

pub use quadrature::{QuadratureConfig, QuadratureStats};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{
    axis_guard, winding_number, ParamPath, ParamSurface, Point3, Vec3,
};
use crate::potentials::{FieldSample, PotentialSpec};
use crate::scalar::lit;
use crate::Scalar;

/// Inner-loop radii for the annular limit, largest first.
const ANNULAR_RADII: [f64; 3] = [1e-2, 1e-3, 1e-4];

/// `int A . dl` along the path, by composite Gauss-Legendre panels with
/// panel doubling until successive estimates agree to `cfg.rel_tol`
/// relative (1e-14 absolute for near-zero results).
pub fn line_integral<F: Scalar>(
    spec: &PotentialSpec<F>,
    path: &ParamPath<F>,
    cfg: &QuadratureConfig<F>,
) -> Result<F, F> {
    line_integral_with_stats(spec, path, cfg).map(|(v, _)| v)
}

/// [`line_integral`] plus panel-count and convergence diagnostics.
pub fn line_integral_with_stats<F: Scalar>(
    spec: &PotentialSpec<F>,
    path: &ParamPath<F>,
    cfg: &QuadratureConfig<F>,
) -> Result<(F, QuadratureStats<F>), F> {
    let patch = spec.patch();
    // Coarse screen; quadrature nodes catch anything the screen misses.
    let n = path.samples_hint().max(16);
    let nf = lit::<F>(n as f64);
    for i in 0..=n {
        let p = path.at(lit::<F>(i as f64) / nf);
        if !patch.contains(&p) {
            return Err(Error::OutsideDomain { point: p, patch });
        }
    }
    let integrand =
        |t: F| -> Result<F, F> { Ok(spec.eval(path.at(t))?.value.dot(&path.tangent_at(t))) };
    quadrature::integrate_cells(integrand, &path_cells(path), cfg)
}

fn path_cells<F: Scalar>(path: &ParamPath<F>) -> Vec<(F, F)> {
    let mut edges = vec![F::zero()];
    edges.extend_from_slice(path.breaks());
    edges.push(F::one());
    edges.windows(2).map(|w| (w[0], w[1])).collect()
}

/// Central-difference curl of the potential at `p` with step `h`
/// (component error `O(h^2)`). The whole stencil ball of radius `2h`
/// must clear the patch's excluded set.
pub fn numeric_curl<F: Scalar>(
    spec: &PotentialSpec<F>,
    p: Point3<F>,
    h: F,
) -> Result<FieldSample<F>, F> {
    let patch = spec.patch();
    if patch.clearance(&p) <= h + h + axis_guard() {
        return Err(Error::OutsideDomain { point: p, patch });
    }
    let f = |q: Point3<F>| -> Result<Vec3<F>, F> { Ok(spec.eval(q)?.value) };
    let two_h = h + h;
    let xp = f(p + Vec3::new(h, F::zero(), F::zero()))?;
    let xm = f(p + Vec3::new(-h, F::zero(), F::zero()))?;
    let yp = f(p + Vec3::new(F::zero(), h, F::zero()))?;
    let ym = f(p + Vec3::new(F::zero(), -h, F::zero()))?;
    let zp = f(p + Vec3::new(F::zero(), F::zero(), h))?;
    let zm = f(p + Vec3::new(F::zero(), F::zero(), -h))?;
    let value = Vec3::new(
        (yp.z - ym.z - (zp.y - zm.y)) / two_h,
        (zp.x - zm.x - (xp.z - xm.z)) / two_h,
        (xp.y - xm.y - (yp.x - ym.x)) / two_h,
    );
    Ok(FieldSample { value, location: p })
}

/// Step used by the CLI when none is given: `1e-4 * max(1, |p|)`.
pub fn default_curl_step<F: Scalar>(p: &Point3<F>) -> F {
    lit::<F>(1e-4) * F::one().max(p.r())
}

/// Flux of a field through the surface by tensor-product quadrature.
/// Field evaluation failures surface as
/// [`Error::FieldSingularOnSurface`].
pub fn surface_flux<F, G>(
    field: G,
    surf: &ParamSurface<F>,
    cfg: &QuadratureConfig<F>,
) -> Result<F, F>
where
    F: Scalar,
    G: Fn(Point3<F>) -> Result<FieldSample<F>, F>,
{
    surface_flux_with_stats(field, surf, cfg).map(|(v, _)| v)
}

/// [`surface_flux`] plus diagnostics.
pub fn surface_flux_with_stats<F, G>(
    field: G,
    surf: &ParamSurface<F>,
    cfg: &QuadratureConfig<F>,
) -> Result<(F, QuadratureStats<F>), F>
where
    F: Scalar,
    G: Fn(Point3<F>) -> Result<FieldSample<F>, F>,
{
    let integrand = |u: F, v: F| -> Result<F, F> {
        let p = surf.at(u, v);
        let sample = field(p).map_err(|e| Error::FieldSingularOnSurface(Box::new(e)))?;
        Ok(sample.value.dot(&surf.normal_at(u, v)))
    };
    quadrature::integrate_unit_square(integrand, cfg)
}

/// Which branch of the punctured-surface procedure applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StokesCase {
    /// Boundary does not encircle the z-axis; plain Stokes applies.
    NonIntercepting,
    /// Surface meets the z-axis once; the flux is the boundary
    /// circulation minus the shrinking inner-loop limit.
    AxisIntercepting,
}

/// Result of [`stokes_annular`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StokesReport<F> {
    pub case: StokesCase,
    /// Circulation around the outer boundary.
    pub boundary_integral: F,
    /// Extrapolated circulation around a vanishing loop at the axis
    /// interception (zero for the non-intercepting case).
    pub inner_limit_integral: F,
    /// Extrapolation defect estimate for the inner limit.
    pub inner_limit_defect: F,
    /// Flux of the curl through the punctured surface.
    pub flux: F,
}

/// Flux of `curl A` through a surface that may meet the z-axis once.
///
/// Non-intercepting boundary: the flux is the boundary circulation. An
/// axis-intercepting surface is treated as the limit of annuli: the flux
/// is the boundary circulation minus the circulation of a coordinate
/// loop shrunk onto the interception, extrapolated over loop radii
/// 1e-2, 1e-3, 1e-4.
pub fn stokes_annular<F: Scalar>(
    spec: &PotentialSpec<F>,
    surf: &ParamSurface<F>,
    cfg: &QuadratureConfig<F>,
) -> Result<StokesReport<F>, F> {
    let boundary = surf.boundary();
    if !boundary.closed() {
        return Err(Error::NotClosed {
            gap: boundary.endpoint_gap(),
        });
    }
    let winding = winding_number(boundary)?;
    if winding.abs() >= 2 {
        return Err(Error::MultipleInterceptions { winding });
    }

    let boundary_integral = line_integral(spec, boundary, cfg)?;
    if winding == 0 {
        return Ok(StokesReport {
            case: StokesCase::NonIntercepting,
            boundary_integral,
            inner_limit_integral: F::zero(),
            inner_limit_defect: F::zero(),
            flux: boundary_integral,
        });
    }

    // The inner coordinate loops shrink along u toward the u = 0 edge,
    // which must carry the axis interception.
    let edge_rho = coord_loop_max_rho(surf, F::zero());
    if edge_rho > lit(1e-6) {
        return Err(Error::UnsupportedSurface {
            reason: format!(
                "axis interception must lie on the u = 0 edge (edge rho = {edge_rho})"
            ),
        });
    }

    let mut radii = [F::zero(); 3];
    let mut integrals = [F::zero(); 3];
    for (i, &eps) in ANNULAR_RADII.iter().enumerate() {
        let eps = lit::<F>(eps);
        let s = solve_loop_radius(surf, eps)?;
        radii[i] = coord_loop_max_rho(surf, s);
        integrals[i] = line_integral(spec, &coord_loop(surf, s), cfg)?;
    }
    let (inner_limit_integral, inner_limit_defect) = extrapolate_to_zero(&radii, &integrals);

    Ok(StokesReport {
        case: StokesCase::AxisIntercepting,
        boundary_integral,
        inner_limit_integral,
        inner_limit_defect,
        flux: boundary_integral - inner_limit_integral,
    })
}

/// Closed v-coordinate loop of the surface at fixed `u = s`, oriented
/// like the boundary.
fn coord_loop<F: Scalar>(surf: &ParamSurface<F>, s: F) -> ParamPath<F> {
    let surf_pos = surf.clone();
    let surf_vel = surf.clone();
    ParamPath::new(
        move |t| surf_pos.at(s, t),
        move |t| surf_vel.dv_at(s, t),
        true,
        64,
    )
}

fn coord_loop_max_rho<F: Scalar>(surf: &ParamSurface<F>, s: F) -> F {
    let n = 64;
    let nf = lit::<F>(n as f64);
    (0..n)
        .map(|i| surf.at(s, lit::<F>(i as f64) / nf).rho())
        .fold(F::zero(), F::max)
}

/// Bisection for the u-parameter whose coordinate loop has the requested
/// cylindrical radius.
fn solve_loop_radius<F: Scalar>(surf: &ParamSurface<F>, eps: F) -> Result<F, F> {
    let mut lo = F::zero();
    let mut hi = F::one();
    if coord_loop_max_rho(surf, hi) < eps {
        return Err(Error::UnsupportedSurface {
            reason: format!("surface too small for an inner loop of radius {eps}"),
        });
    }
    for _ in 0..64 {
        let mid = (lo + hi) * lit::<F>(0.5);
        if coord_loop_max_rho(surf, mid) < eps {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok((lo + hi) * lit::<F>(0.5))
}

/// Polynomial (Richardson) extrapolation of three samples to radius
/// zero; the defect is the gap to the two-point linear extrapolation.
fn extrapolate_to_zero<F: Scalar>(xs: &[F; 3], ys: &[F; 3]) -> (F, F) {
    let lagrange_at_zero = |xs: &[F], ys: &[F]| -> F {
        let mut total = F::zero();
        for i in 0..xs.len() {
            let mut term = ys[i];
            for j in 0..xs.len() {
                if i != j {
                    term = term * (-xs[j]) / (xs[i] - xs[j]);
                }
            }
            total = total + term;
        }
        total
    };
    let full = lagrange_at_zero(xs, ys);
    let tail = lagrange_at_zero(&xs[1..], &ys[1..]);
    (full, (full - tail).abs())
}

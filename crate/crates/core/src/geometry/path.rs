use std::sync::Arc;

use super::{axis_guard, PatchSpec, Point3, Vec3};
use crate::error::{Error, Result};
use crate::scalar::lit;
use crate::Scalar;

type PosFn<F> = Arc<dyn Fn(F) -> Point3<F> + Send + Sync>;
type VelFn<F> = Arc<dyn Fn(F) -> Vec3<F> + Send + Sync>;

/// Parametric curve `t in [0, 1] -> Point3` with an analytic tangent.
///
/// `breaks` lists interior parameter values where the tangent jumps
/// (polyline corners, concatenation seams); quadrature panels never
/// straddle them.
#[derive(Clone)]
pub struct ParamPath<F> {
    pos: PosFn<F>,
    vel: VelFn<F>,
    closed: bool,
    samples_hint: usize,
    breaks: Vec<F>,
}

impl<F: Scalar> ParamPath<F> {
    /// Build a path from position and tangent closures.
    pub fn new<P, V>(pos: P, vel: V, closed: bool, samples_hint: usize) -> Self
    where
        P: Fn(F) -> Point3<F> + Send + Sync + 'static,
        V: Fn(F) -> Vec3<F> + Send + Sync + 'static,
    {
        Self {
            pos: Arc::new(pos),
            vel: Arc::new(vel),
            closed,
            samples_hint: samples_hint.max(2),
            breaks: Vec::new(),
        }
    }

    /// Build a path from a position closure alone; the tangent is taken
    /// by central differences (accuracy ~1e-10, below the analytic
    /// constructors).
    pub fn from_fn<P>(pos: P, closed: bool, samples_hint: usize) -> Self
    where
        P: Fn(F) -> Point3<F> + Send + Sync + 'static,
    {
        let pos = Arc::new(pos);
        let p = pos.clone();
        let h = lit::<F>(1e-6);
        let vel = move |t: F| (p(t + h) - p(t - h)) / (h + h);
        Self {
            pos,
            vel: Arc::new(vel),
            closed,
            samples_hint: samples_hint.max(2),
            breaks: Vec::new(),
        }
    }

    /// Circle of given radius in the plane `z = center.z`, traversed
    /// counterclockwise (viewed from `+z`) `turns` times; negative
    /// `turns` reverses the orientation.
    pub fn circle(center: Point3<F>, radius: F, turns: i32) -> Self {
        let w = F::TAU() * lit::<F>(turns as f64);
        let pos = move |t: F| {
            let a = w * t;
            Point3::new(
                center.x + radius * a.cos(),
                center.y + radius * a.sin(),
                center.z,
            )
        };
        let vel = move |t: F| {
            let a = w * t;
            Vec3::new(-radius * w * a.sin(), radius * w * a.cos(), F::zero())
        };
        Self::new(pos, vel, true, 64 * turns.unsigned_abs().max(1) as usize)
    }

    /// Unit circle at the origin in the plane z = 0, one
    /// counterclockwise turn.
    pub fn unit_circle() -> Self {
        Self::circle(Point3::origin(), F::one(), 1)
    }

    /// Straight segment from `a` to `b`.
    pub fn segment(a: Point3<F>, b: Point3<F>) -> Self {
        let d = b - a;
        Self::new(move |t| a + d * t, move |_| d, false, 16)
    }

    /// Piecewise-linear path through `points`, constant speed per
    /// segment. With `closed` the first point is appended as the final
    /// vertex when the ends differ.
    pub fn polyline(mut points: Vec<Point3<F>>, closed: bool) -> Self {
        assert!(points.len() >= 2, "polyline needs at least two points");
        if closed {
            let first = points[0];
            let gap = points.last().unwrap().distance(&first);
            if gap > closure_tolerance(first.r()) {
                points.push(first);
            }
        }
        let n = points.len() - 1;
        let nf = lit::<F>(n as f64);
        let pts = Arc::new(points);
        let pts_v = pts.clone();
        let pos = move |t: F| {
            let s = (t * nf).max(F::zero()).min(nf);
            let i = (s.floor().to_usize().unwrap_or(0)).min(n - 1);
            let frac = s - lit::<F>(i as f64);
            let a = pts[i];
            let b = pts[i + 1];
            a + (b - a) * frac
        };
        let vel = move |t: F| {
            let s = (t * nf).max(F::zero()).min(nf);
            let i = (s.floor().to_usize().unwrap_or(0)).min(n - 1);
            (pts_v[i + 1] - pts_v[i]) * nf
        };
        let breaks = (1..n).map(|i| lit::<F>(i as f64) / nf).collect();
        let mut path = Self::new(pos, vel, closed, (n * 8).max(16));
        path.breaks = breaks;
        path
    }

    /// Piecewise-linear interpolation through recorded samples of a
    /// curve. Closes the loop when the first and last samples coincide.
    pub fn from_samples(points: Vec<Point3<F>>) -> Self {
        let closed = points.len() >= 3
            && points[0].distance(points.last().unwrap())
                <= closure_tolerance(points[0].r());
        Self::polyline(points, closed)
    }

    pub fn at(&self, t: F) -> Point3<F> {
        (self.pos)(t)
    }

    pub fn tangent_at(&self, t: F) -> Vec3<F> {
        (self.vel)(t)
    }

    pub fn closed(&self) -> bool {
        self.closed
    }

    pub fn samples_hint(&self) -> usize {
        self.samples_hint
    }

    /// Interior parameter values where the tangent is discontinuous.
    pub fn breaks(&self) -> &[F] {
        &self.breaks
    }

    /// Distance between the two endpoints.
    pub fn endpoint_gap(&self) -> F {
        self.at(F::zero()).distance(&self.at(F::one()))
    }

    /// Same trace, opposite orientation.
    pub fn reversed(&self) -> Self {
        let pos = self.pos.clone();
        let vel = self.vel.clone();
        let one = F::one();
        let mut breaks: Vec<F> =
            self.breaks.iter().map(|&b| one - b).collect();
        breaks.reverse();
        Self {
            pos: Arc::new(move |t| pos(one - t)),
            vel: Arc::new(move |t| -vel(one - t)),
            closed: self.closed,
            samples_hint: self.samples_hint,
            breaks,
        }
    }

    /// Concatenation `self` then `other`; the seam becomes a tangent
    /// break. The ends must meet within the closure tolerance.
    pub fn concat(&self, other: &Self) -> Self {
        let seam = self.at(F::one());
        let gap = seam.distance(&other.at(F::zero()));
        assert!(
            gap <= closure_tolerance(seam.r()),
            "concatenated paths must share an endpoint (gap {gap})"
        );
        let closed = other.at(F::one()).distance(&self.at(F::zero()))
            <= closure_tolerance(seam.r());
        let half = lit::<F>(0.5);
        let two = lit::<F>(2.0);
        let (pa, va) = (self.pos.clone(), self.vel.clone());
        let (pb, vb) = (other.pos.clone(), other.vel.clone());
        let pos = move |t: F| {
            if t < half {
                pa(two * t)
            } else {
                pb(two * t - F::one())
            }
        };
        let vel = move |t: F| {
            if t < half {
                va(two * t) * two
            } else {
                vb(two * t - F::one()) * two
            }
        };
        let mut breaks: Vec<F> = self.breaks.iter().map(|&b| b * half).collect();
        breaks.push(half);
        breaks.extend(other.breaks.iter().map(|&b| half + b * half));
        Self {
            pos: Arc::new(pos),
            vel: Arc::new(vel),
            closed,
            samples_hint: self.samples_hint + other.samples_hint,
            breaks,
        }
    }

    /// Reparametrize by a smooth increasing map `w` with `w(0) = 0`,
    /// `w(1) = 1` and derivative `dw`. Only valid for break-free paths.
    pub fn reparametrized<W, D>(&self, w: W, dw: D) -> Self
    where
        W: Fn(F) -> F + Send + Sync + 'static,
        D: Fn(F) -> F + Send + Sync + 'static,
    {
        assert!(
            self.breaks.is_empty(),
            "reparametrization of piecewise paths is not supported"
        );
        let pos = self.pos.clone();
        let vel = self.vel.clone();
        let w = Arc::new(w);
        let w2 = w.clone();
        Self {
            pos: Arc::new(move |t| pos(w(t))),
            vel: Arc::new(move |t| vel(w2(t)) * dw(t)),
            closed: self.closed,
            samples_hint: self.samples_hint,
            breaks: Vec::new(),
        }
    }
}

impl<F: Scalar> std::fmt::Debug for ParamPath<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ParamPath")
            .field("closed", &self.closed)
            .field("samples_hint", &self.samples_hint)
            .field("breaks", &self.breaks.len())
            .finish()
    }
}

const MAX_BISECTION_DEPTH: u32 = 48;

/// Endpoint-agreement tolerance: the axis guard, widened for scalar
/// types whose epsilon sits above it (f32) and for large coordinates.
pub(crate) fn closure_tolerance<F: Scalar>(scale: F) -> F {
    axis_guard::<F>().max(F::epsilon() * lit::<F>(128.0) * scale.max(F::one()))
}

/// Signed number of revolutions of a closed path around the z-axis.
///
/// Azimuth increments are accumulated with adaptive bisection until every
/// step is below `pi/2`, which rules out branch-jump miscounts. A loop
/// whose accumulated azimuth misses a whole number of turns by more than
/// 1e-6 is reported as not closed.
pub fn winding_number<F: Scalar>(path: &ParamPath<F>) -> Result<i32, F> {
    if !path.closed() {
        return Err(Error::NotClosed { gap: path.endpoint_gap() });
    }
    let gap = path.endpoint_gap();
    if gap > closure_tolerance(path.at(F::zero()).r()) {
        return Err(Error::NotClosed { gap });
    }

    let n = path.samples_hint().max(16);
    let nf = lit::<F>(n as f64);
    let mut total = F::zero();
    for i in 0..n {
        let t0 = lit::<F>(i as f64) / nf;
        let t1 = lit::<F>((i + 1) as f64) / nf;
        total = total + azimuth_step(path, t0, t1, 0)?;
    }
    let turns = total / F::TAU();
    let defect = (turns - turns.round()).abs();
    if defect >= lit::<F>(1e-6).max(F::epsilon() * lit(1024.0)) {
        return Err(Error::NotClosed { gap });
    }
    Ok(turns.round().to_i32().expect("winding fits in i32"))
}

fn azimuth_step<F: Scalar>(
    path: &ParamPath<F>,
    t0: F,
    t1: F,
    depth: u32,
) -> Result<F, F> {
    let p0 = path.at(t0);
    let p1 = path.at(t1);
    let guard = axis_guard::<F>();
    for (t, p) in [(t0, &p0), (t1, &p1)] {
        let rho = p.rho();
        if rho <= guard {
            return Err(Error::PathTouchesAxis { t, distance: rho });
        }
    }
    let d = wrap_to_pi(p1.to_cylindrical().phi - p0.to_cylindrical().phi);
    if d.abs() < F::FRAC_PI_2() {
        return Ok(d);
    }
    if depth >= MAX_BISECTION_DEPTH {
        // An azimuth step that stays >= pi/2 under bisection means the
        // path passes arbitrarily close to the axis between samples.
        return Err(Error::PathTouchesAxis {
            t: t0,
            distance: p0.rho().min(p1.rho()),
        });
    }
    let tm = (t0 + t1) * lit::<F>(0.5);
    Ok(azimuth_step(path, t0, tm, depth + 1)? + azimuth_step(path, tm, t1, depth + 1)?)
}

fn wrap_to_pi<F: Scalar>(a: F) -> F {
    let tau = F::TAU();
    let mut x = a % tau;
    if x > F::PI() {
        x = x - tau;
    } else if x < -F::PI() {
        x = x + tau;
    }
    x
}

/// True iff no sampled point of the path lies in the excluded set of the
/// patch. Sampling is refined until the chord step drops below 1e-4 of
/// the total arclength.
pub fn path_in_patch<F: Scalar>(path: &ParamPath<F>, patch: &PatchSpec<F>) -> bool {
    if matches!(patch, PatchSpec::None) {
        return true;
    }
    let coarse = path.samples_hint().max(64);
    let nf = lit::<F>(coarse as f64);
    let mut total = F::zero();
    let mut prev = path.at(F::zero());
    if !patch.contains(&prev) {
        return false;
    }
    let mut nodes = Vec::with_capacity(coarse + 1);
    nodes.push((F::zero(), prev));
    for i in 1..=coarse {
        let t = lit::<F>(i as f64) / nf;
        let p = path.at(t);
        if !patch.contains(&p) {
            return false;
        }
        total = total + prev.distance(&p);
        prev = p;
        nodes.push((t, p));
    }
    let target = total * lit::<F>(1e-4);
    for pair in nodes.windows(2) {
        let (t0, p0) = pair[0];
        let (t1, p1) = pair[1];
        if !segment_in_patch(path, patch, t0, p0, t1, p1, target, 0) {
            return false;
        }
    }
    true
}

#[allow(clippy::too_many_arguments)]
fn segment_in_patch<F: Scalar>(
    path: &ParamPath<F>,
    patch: &PatchSpec<F>,
    t0: F,
    p0: Point3<F>,
    t1: F,
    p1: Point3<F>,
    target: F,
    depth: u32,
) -> bool {
    if p0.distance(&p1) <= target || depth >= 24 {
        return true;
    }
    let tm = (t0 + t1) * lit::<F>(0.5);
    let pm = path.at(tm);
    if !patch.contains(&pm) {
        return false;
    }
    segment_in_patch(path, patch, t0, p0, tm, pm, target, depth + 1)
        && segment_in_patch(path, patch, tm, pm, t1, p1, target, depth + 1)
}

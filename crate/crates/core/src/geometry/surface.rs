use std::sync::Arc;

use super::{ParamPath, Point3, Vec3};
use crate::scalar::lit;
use crate::Scalar;

type SurfFn<F> = Arc<dyn Fn(F, F) -> Point3<F> + Send + Sync>;
type SurfDerivFn<F> = Arc<dyn Fn(F, F) -> Vec3<F> + Send + Sync>;

/// Parametric surface `(u, v) in [0, 1]^2 -> Point3` with analytic
/// partials and an explicit boundary path.
///
/// By convention the boundary is the `u = 1` edge traversed in the `+v`
/// direction, so the surface normal `du x dv` and the boundary
/// orientation obey the right-hand rule. Disk-like surfaces collapse the
/// `u = 0` edge to the interior point.
#[derive(Clone)]
pub struct ParamSurface<F> {
    pos: SurfFn<F>,
    du: SurfDerivFn<F>,
    dv: SurfDerivFn<F>,
    boundary: ParamPath<F>,
}

impl<F: Scalar> ParamSurface<F> {
    pub fn new<P, Du, Dv>(pos: P, du: Du, dv: Dv, boundary: ParamPath<F>) -> Self
    where
        P: Fn(F, F) -> Point3<F> + Send + Sync + 'static,
        Du: Fn(F, F) -> Vec3<F> + Send + Sync + 'static,
        Dv: Fn(F, F) -> Vec3<F> + Send + Sync + 'static,
    {
        Self {
            pos: Arc::new(pos),
            du: Arc::new(du),
            dv: Arc::new(dv),
            boundary,
        }
    }

    /// Build from the position map alone; partials by central
    /// differences and boundary from the `u = 1` edge.
    pub fn from_fn<P>(pos: P) -> Self
    where
        P: Fn(F, F) -> Point3<F> + Send + Sync + 'static,
    {
        let pos = Arc::new(pos);
        let h = lit::<F>(1e-6);
        let two_h = h + h;
        let pu = pos.clone();
        let du = move |u: F, v: F| (pu(u + h, v) - pu(u - h, v)) / two_h;
        let pv = pos.clone();
        let dv = move |u: F, v: F| (pv(u, v + h) - pv(u, v - h)) / two_h;
        let pb = pos.clone();
        let boundary = ParamPath::from_fn(move |t| pb(F::one(), t), true, 64);
        Self {
            pos,
            du: Arc::new(du),
            dv: Arc::new(dv),
            boundary,
        }
    }

    /// Flat disk of given radius centered at `center` in the plane
    /// `z = center.z`, normal `+z`, boundary counterclockwise.
    pub fn disk(center: Point3<F>, radius: F) -> Self {
        let tau = F::TAU();
        let pos = move |u: F, v: F| {
            let a = tau * v;
            Point3::new(
                center.x + radius * u * a.cos(),
                center.y + radius * u * a.sin(),
                center.z,
            )
        };
        let du = move |_u: F, v: F| {
            let a = tau * v;
            Vec3::new(radius * a.cos(), radius * a.sin(), F::zero())
        };
        let dv = move |u: F, v: F| {
            let a = tau * v;
            Vec3::new(
                -radius * u * tau * a.sin(),
                radius * u * tau * a.cos(),
                F::zero(),
            )
        };
        let boundary = ParamPath::circle(center, radius, 1);
        Self::new(pos, du, dv, boundary)
    }

    /// Flat annulus `inner <= rho' <= outer` around `center`, normal
    /// `+z`. The boundary path is the outer rim.
    pub fn annulus(center: Point3<F>, inner: F, outer: F) -> Self {
        let tau = F::TAU();
        let span = outer - inner;
        let pos = move |u: F, v: F| {
            let a = tau * v;
            let rho = inner + span * u;
            Point3::new(
                center.x + rho * a.cos(),
                center.y + rho * a.sin(),
                center.z,
            )
        };
        let du = move |_u: F, v: F| {
            let a = tau * v;
            Vec3::new(span * a.cos(), span * a.sin(), F::zero())
        };
        let dv = move |u: F, v: F| {
            let a = tau * v;
            let rho = inner + span * u;
            Vec3::new(-rho * tau * a.sin(), rho * tau * a.cos(), F::zero())
        };
        let boundary = ParamPath::circle(center, outer, 1);
        Self::new(pos, du, dv, boundary)
    }

    /// Sphere of given radius centered at the origin, outward normal.
    /// `u` runs from the north pole (`u = 0`) to the south pole. The
    /// boundary edge is degenerate; spheres are for flux integrals only.
    pub fn sphere(radius: F) -> Self {
        let pi = F::PI();
        let tau = F::TAU();
        let pos = move |u: F, v: F| {
            let th = pi * u;
            let ph = tau * v;
            Point3::new(
                radius * th.sin() * ph.cos(),
                radius * th.sin() * ph.sin(),
                radius * th.cos(),
            )
        };
        let du = move |u: F, v: F| {
            let th = pi * u;
            let ph = tau * v;
            Vec3::new(
                radius * pi * th.cos() * ph.cos(),
                radius * pi * th.cos() * ph.sin(),
                -radius * pi * th.sin(),
            )
        };
        let dv = move |u: F, v: F| {
            let th = pi * u;
            let ph = tau * v;
            Vec3::new(
                -radius * tau * th.sin() * ph.sin(),
                radius * tau * th.sin() * ph.cos(),
                F::zero(),
            )
        };
        let south = Point3::new(F::zero(), F::zero(), -radius);
        let boundary = ParamPath::new(move |_| south, |_| Vec3::zero(), true, 4);
        Self::new(pos, du, dv, boundary)
    }

    pub fn at(&self, u: F, v: F) -> Point3<F> {
        (self.pos)(u, v)
    }

    pub fn du_at(&self, u: F, v: F) -> Vec3<F> {
        (self.du)(u, v)
    }

    pub fn dv_at(&self, u: F, v: F) -> Vec3<F> {
        (self.dv)(u, v)
    }

    /// Area element vector `du x dv` at `(u, v)`.
    pub fn normal_at(&self, u: F, v: F) -> Vec3<F> {
        self.du_at(u, v).cross(&self.dv_at(u, v))
    }

    pub fn boundary(&self) -> &ParamPath<F> {
        &self.boundary
    }

    /// Maximum distance between the boundary path and the `u = 1` edge
    /// over `samples` parameter values.
    pub fn boundary_defect(&self, samples: usize) -> F {
        let nf = lit::<F>(samples as f64);
        let mut worst = F::zero();
        for i in 0..=samples {
            let t = lit::<F>(i as f64) / nf;
            let d = self.boundary.at(t).distance(&self.at(F::one(), t));
            worst = worst.max(d);
        }
        worst
    }

    /// Replace the boundary path (it must still trace the `u = 1` edge).
    pub fn with_boundary(mut self, boundary: ParamPath<F>) -> Self {
        self.boundary = boundary;
        self
    }
}

impl<F: Scalar> std::fmt::Debug for ParamSurface<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ParamSurface").finish_non_exhaustive()
    }
}

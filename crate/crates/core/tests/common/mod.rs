//! Shared generators and independent oracles for the integration suites.
//!
//! The oracles here deliberately avoid the library's quadrature engine
//! and analytic tangents: circulation is estimated from path positions
//! alone with a dense midpoint rule, so it can vouch for the
//! Gauss-Legendre results independently.

#![allow(dead_code)]

use ghl_core::{ParamPath, ParamSurface, Point3, PotentialSpec, TwoPathSetup, Vec3};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::f64::consts::{PI, TAU};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Midpoint-rule circulation from positions only; `n` chords.
pub fn circulation_oracle(spec: &PotentialSpec, path: &ParamPath, n: usize) -> f64 {
    let mut total = 0.0;
    let step = 1.0 / n as f64;
    for i in 0..n {
        let t0 = i as f64 * step;
        let t1 = t0 + step;
        let p0 = path.at(t0);
        let p1 = path.at(t1);
        let mid = Point3::new(
            0.5 * (p0.x + p1.x),
            0.5 * (p0.y + p1.y),
            0.5 * (p0.z + p1.z),
        );
        let a = spec.eval(mid).expect("oracle sample in patch").value;
        total += a.dot(&(p1 - p0));
    }
    total
}

/// Smooth star-shaped loop around the z-axis with the given winding.
/// The cylinder radius stays within [0.55, 2.9].
pub fn star_loop(rng: &mut ChaCha8Rng, winding: i32) -> ParamPath {
    assert!(winding != 0, "star loops always encircle the axis");
    let r0: f64 = rng.gen_range(1.0..2.0);
    let amps: [f64; 3] = [
        rng.gen_range(-0.15..0.15) * r0,
        rng.gen_range(-0.10..0.10) * r0,
        rng.gen_range(-0.05..0.05) * r0,
    ];
    let phases: [f64; 3] = [
        rng.gen_range(0.0..TAU),
        rng.gen_range(0.0..TAU),
        rng.gen_range(0.0..TAU),
    ];
    let z0: f64 = rng.gen_range(-1.0..1.0);
    let z_amp: f64 = rng.gen_range(-0.5..0.5);
    let z_phase: f64 = rng.gen_range(0.0..TAU);
    let phi0: f64 = rng.gen_range(0.0..TAU);
    let w = winding as f64;

    let radius = move |t: f64| -> (f64, f64) {
        let mut rho = r0;
        let mut drho = 0.0;
        for (j, (&a, &ph)) in amps.iter().zip(&phases).enumerate() {
            let k = (j + 1) as f64 * TAU;
            rho += a * (k * t + ph).cos();
            drho -= a * k * (k * t + ph).sin();
        }
        (rho, drho)
    };
    let pos = move |t: f64| {
        let (rho, _) = radius(t);
        let phi = phi0 + TAU * w * t;
        Point3::new(
            rho * phi.cos(),
            rho * phi.sin(),
            z0 + z_amp * (TAU * t + z_phase).sin(),
        )
    };
    let vel = move |t: f64| {
        let (rho, drho) = radius(t);
        let phi = phi0 + TAU * w * t;
        let dphi = TAU * w;
        Vec3::new(
            drho * phi.cos() - rho * phi.sin() * dphi,
            drho * phi.sin() + rho * phi.cos() * dphi,
            z_amp * TAU * (TAU * t + z_phase).cos(),
        )
    };
    ParamPath::new(pos, vel, true, 64 * winding.unsigned_abs().max(1) as usize)
}

/// Smooth loop that stays at least 1.8 away from the z-axis (winding 0).
pub fn offset_loop(rng: &mut ChaCha8Rng) -> ParamPath {
    let d: f64 = rng.gen_range(3.0..5.0);
    let angle: f64 = rng.gen_range(0.0..TAU);
    let (cx, cy) = (d * angle.cos(), d * angle.sin());
    let r0: f64 = rng.gen_range(0.5..1.0);
    let a: f64 = rng.gen_range(-0.2..0.2) * r0;
    let ph: f64 = rng.gen_range(0.0..TAU);
    let z0: f64 = rng.gen_range(-1.0..1.0);
    let pos = move |t: f64| {
        let rho = r0 + a * (2.0 * TAU * t + ph).cos();
        let ang = TAU * t;
        Point3::new(cx + rho * ang.cos(), cy + rho * ang.sin(), z0)
    };
    let vel = move |t: f64| {
        let rho = r0 + a * (2.0 * TAU * t + ph).cos();
        let drho = -2.0 * TAU * a * (2.0 * TAU * t + ph).sin();
        let ang = TAU * t;
        Vec3::new(
            drho * ang.cos() - rho * TAU * ang.sin(),
            drho * ang.sin() + rho * TAU * ang.cos(),
            0.0,
        )
    };
    ParamPath::new(pos, vel, true, 64)
}

/// Wavy disk-like surface whose axis interception sits at the u = 0
/// edge; the rim radius is modulated and the sheet ripples in z.
pub fn wavy_axis_disk(rng: &mut ChaCha8Rng) -> ParamSurface {
    wavy_disk_at(rng, 0.0, 0.0)
}

/// Wavy disk kept clear of the z-axis (winding-0 boundary).
pub fn wavy_offset_disk(rng: &mut ChaCha8Rng) -> ParamSurface {
    let d: f64 = rng.gen_range(3.5..5.0);
    let angle: f64 = rng.gen_range(0.0..TAU);
    wavy_disk_at(rng, d * angle.cos(), d * angle.sin())
}

/// Deformed two-path arm: the semicircle displacement from the chord
/// midpoint is scaled by a smooth positive factor that is 1 at both
/// endpoints, preserving endpoints, winding, and exterior-ness.
pub fn deformed_arm(source: Point3, target: Point3, up: bool, amps: [f64; 3]) -> ParamPath {
    let center = Point3::new(
        0.5 * (source.x + target.x),
        0.5 * (source.y + target.y),
        0.5 * (source.z + target.z),
    );
    let u = (target - source) * 0.5;
    let radius = u.norm();
    let mut n = Vec3::new(-u.y, u.x, 0.0);
    n = n * (radius / n.norm());
    if !up {
        n = -n;
    }
    let scale = move |t: f64| -> (f64, f64) {
        let mut s = 1.0;
        let mut ds = 0.0;
        for (j, &a) in amps.iter().enumerate() {
            let k = (j + 1) as f64 * PI;
            s += a * (k * t).sin();
            ds += a * k * (k * t).cos();
        }
        (s, ds)
    };
    let pos = move |t: f64| {
        let (s, _) = scale(t);
        let a = PI * t;
        center + ((-u) * a.cos() + n * a.sin()) * s
    };
    let vel = move |t: f64| {
        let (s, ds) = scale(t);
        let a = PI * t;
        let disp = (-u) * a.cos() + n * a.sin();
        let ddisp = (u * a.sin() + n * a.cos()) * PI;
        ddisp * s + disp * ds
    };
    ParamPath::new(pos, vel, false, 96)
}

/// Two-path setup with randomly deformed arms and a short screen.
pub fn deformed_setup(rng: &mut ChaCha8Rng) -> TwoPathSetup {
    let up_amps = [
        rng.gen_range(-0.15..0.15),
        rng.gen_range(-0.1..0.1),
        rng.gen_range(-0.05..0.05),
    ];
    let lo_amps = [
        rng.gen_range(-0.15..0.15),
        rng.gen_range(-0.1..0.1),
        rng.gen_range(-0.05..0.05),
    ];
    let source = Point3::new(-5.0, 0.0, 0.0);
    let screen: Vec<Point3> = (0..5)
        .map(|j| Point3::new(5.0, -2.0 + j as f64, 0.0))
        .collect();
    TwoPathSetup::new(
        source,
        screen,
        move |target| deformed_arm(source, target, true, up_amps),
        move |target| deformed_arm(source, target, false, lo_amps),
        |target| 5.0 * target.y,
    )
}

fn wavy_disk_at(rng: &mut ChaCha8Rng, cx: f64, cy: f64) -> ParamSurface {
    let r0: f64 = rng.gen_range(1.0..2.0);
    let a: f64 = rng.gen_range(-0.2..0.2) * r0;
    let ph: f64 = rng.gen_range(0.0..TAU);
    let z0: f64 = rng.gen_range(-1.0..1.0);
    let ripple: f64 = rng.gen_range(-0.3..0.3);
    let rim = move |v: f64| -> (f64, f64) {
        let rho = r0 + a * (2.0 * TAU * v + ph).cos();
        let drho = -2.0 * TAU * a * (2.0 * TAU * v + ph).sin();
        (rho, drho)
    };
    let pos = move |u: f64, v: f64| {
        let (rho, _) = rim(v);
        let ang = TAU * v;
        Point3::new(
            cx + u * rho * ang.cos(),
            cy + u * rho * ang.sin(),
            z0 + ripple * u * u * (TAU * v).sin(),
        )
    };
    let du = move |u: f64, v: f64| {
        let (rho, _) = rim(v);
        let ang = TAU * v;
        Vec3::new(
            rho * ang.cos(),
            rho * ang.sin(),
            2.0 * ripple * u * (TAU * v).sin(),
        )
    };
    let dv = move |u: f64, v: f64| {
        let (rho, drho) = rim(v);
        let ang = TAU * v;
        Vec3::new(
            u * (drho * ang.cos() - rho * TAU * ang.sin()),
            u * (drho * ang.sin() + rho * TAU * ang.cos()),
            ripple * u * u * TAU * (TAU * v).cos(),
        )
    };
    let boundary = ParamPath::new(
        move |t| pos(1.0, t),
        move |t| dv(1.0, t),
        true,
        64,
    );
    ParamSurface::new(pos, du, dv, boundary)
}

//! Quantization-condition and holonomy properties.

mod common;

use common::{rng, star_loop};
use ghl_core::gauge::{
    charge_spectrum, dirac_condition, holonomy, kappa_condition, kappa_spectrum,
    single_valuedness, string_gauge_difference, ChargeSpec,
};
use ghl_core::{Point3, PotentialSpec};
use proptest::prelude::*;
use rand::Rng;
use std::f64::consts::TAU;

#[test]
fn single_valuedness_agrees_with_integer_condition() {
    // Half the pairs are generic (product far from an integer), half are
    // built to have an exactly integer product.
    let mut rng = rng(0x20);
    for trial in 0..1000 {
        let (q, kappa) = if trial % 2 == 0 {
            (rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0))
        } else {
            let n: i32 = rng.gen_range(-6..=6);
            let kappa: f64 = rng.gen_range(0.2..3.0);
            (n as f64 / kappa, kappa)
        };
        let by_condition = kappa_condition(ChargeSpec::new(q), kappa).satisfied;
        let by_holonomy = single_valuedness(ChargeSpec::new(q), kappa);
        assert_eq!(
            by_condition, by_holonomy,
            "disagreement at q={q}, kappa={kappa} (trial {trial})"
        );
    }
}

#[test]
fn holonomy_depends_only_on_winding() {
    let mut rng = rng(0x21);
    let q = ChargeSpec::new(0.37);
    let spec = PotentialSpec::PureGaugeKappa { kappa: 1.9 };
    for trial in 0..50 {
        let w = [-2, -1, 1, 2][trial % 4];
        let first = holonomy(q, &spec, &star_loop(&mut rng, w)).unwrap();
        let second = holonomy(q, &spec, &star_loop(&mut rng, w)).unwrap();
        assert!(
            (first - second).norm() < 1e-9,
            "trial {trial}: loops of winding {w} disagree"
        );
        assert!((first.norm() - 1.0).abs() < 1e-12);
    }
}

#[test]
fn string_difference_matches_closed_form_everywhere() {
    // A_I - A_II = (2 g / (r sin theta)) phi-hat = (2 g / rho) phi-hat.
    let mut rng = rng(0x22);
    let g = 1.3;
    for _ in 0..10_000 {
        let rho: f64 = rng.gen_range(0.05..5.0);
        let phi: f64 = rng.gen_range(0.0..TAU);
        let z: f64 = rng.gen_range(-5.0..5.0);
        let p = Point3::from_cylindrical(rho, phi, z);
        let diff = string_gauge_difference(g, p).unwrap().value;
        let expected = p.phi_hat() * (2.0 * g / rho);
        assert!(
            (diff - expected).norm() <= 1e-12 * expected.norm(),
            "mismatch at rho={rho}, z={z}"
        );
    }
}

#[test]
fn dirac_condition_invariances() {
    let mut rng = rng(0x23);
    for _ in 0..200 {
        let q: f64 = rng.gen_range(-4.0..4.0);
        let g: f64 = rng.gen_range(-4.0..4.0);
        let base = dirac_condition(ChargeSpec::new(q), g);
        // Sign flip of both preserves the product exactly.
        let flipped = dirac_condition(ChargeSpec::new(-q), -g);
        assert_eq!(base.satisfied, flipped.satisfied);
        assert_eq!(base.nearest_integer, flipped.nearest_integer);

        // Rescaling q by k and g by 1/k preserves 2qg up to rounding.
        let k: f64 = rng.gen_range(0.5..2.0);
        let rescaled = dirac_condition(ChargeSpec::new(q * k), g / k);
        assert!((rescaled.product - base.product).abs() < 1e-12);
    }

    // Constructed satisfied cases stay satisfied under the rescaling.
    for n in [-3i64, -1, 1, 2, 5] {
        let g = 0.25;
        let q = n as f64 / (2.0 * g);
        let r = dirac_condition(ChargeSpec::new(q), g);
        assert!(r.satisfied);
        assert_eq!(r.nearest_integer, n);
        let r2 = dirac_condition(ChargeSpec::new(q * 2.0), g / 2.0);
        assert!(r2.satisfied);
        assert_eq!(r2.nearest_integer, n);
    }
}

#[test]
fn spectra_are_negation_symmetric_and_anchored() {
    for n in [1i64, 2, 3, 5, -3] {
        for range in [0i64, 1, 3, 8] {
            let s = charge_spectrum::<f64>(n, range).unwrap();
            let negated: Vec<f64> = s.charges.iter().rev().map(|c| -c).collect();
            assert_eq!(s.charges, negated, "N={n}, range={range}");
            assert!(s.charges.contains(&0.0));
            if range >= n.abs() {
                assert!(s.charges.contains(&1.0));
                assert!(s.charges.contains(&(-1.0)));
            }

            let k = kappa_spectrum::<f64>(n, range).unwrap();
            let negated: Vec<f64> = k.iter().rev().map(|c| -c).collect();
            assert_eq!(k, negated);
        }
    }
}

proptest! {
    #[test]
    fn quantization_defect_is_bounded_by_half(q in -50.0f64..50.0, g in -50.0f64..50.0) {
        let r = dirac_condition(ChargeSpec::new(q), g);
        prop_assert!(r.defect >= 0.0 && r.defect <= 0.5 + 1e-12);
        prop_assert!((r.product - 2.0 * q * g).abs() < 1e-12 * (1.0 + r.product.abs()));
    }

    #[test]
    fn exact_integer_products_always_satisfy(n in -100i64..100, kappa in 0.1f64..10.0) {
        let q = n as f64 / kappa;
        let r = kappa_condition(ChargeSpec::new(q), kappa);
        prop_assert!(r.satisfied);
        prop_assert_eq!(r.nearest_integer, n);
    }
}

#[test]
fn holonomy_phase_values() {
    // q * circulation = 2*pi and pi for the two standard examples.
    let loop_path = ghl_core::ParamPath::unit_circle();
    let spec = PotentialSpec::PureGaugeKappa { kappa: 1.0 };

    let h = holonomy(ChargeSpec::new(1.0), &spec, &loop_path).unwrap();
    assert!((h.re - 1.0).abs() < 1e-12 && h.im.abs() < 1e-12);

    let h = holonomy(ChargeSpec::new(0.5), &spec, &loop_path).unwrap();
    assert!((h.re + 1.0).abs() < 1e-12 && h.im.abs() < 1e-12);

    // Phase pi/2 lands on +i.
    let h = holonomy(ChargeSpec::new(0.25), &spec, &loop_path).unwrap();
    assert!((h.im - 1.0).abs() < 1e-12 && h.re.abs() < 1e-12);
}

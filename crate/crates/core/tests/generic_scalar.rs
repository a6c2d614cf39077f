//! The numerics are generic over the scalar; a coarse f32 run of each
//! subsystem guards that instantiation.

use ghl_core::calculus::{line_integral, numeric_curl, QuadratureConfig};
use ghl_core::gauge::{dirac_condition, ChargeSpec};
use ghl_core::geometry::{winding_number, ParamPath, Point3};
use ghl_core::potentials::PotentialSpec;

#[test]
fn single_precision_instantiation_works() {
    let spec = PotentialSpec::<f32>::PureGaugeKappa { kappa: 1.0 };
    let p = Point3::<f32>::new(2.0, 0.0, 0.0);
    let sample = spec.eval(p).unwrap();
    assert!((sample.value.norm() - 0.5).abs() < 1e-6);

    let loop_path = ParamPath::<f32>::unit_circle();
    assert_eq!(winding_number(&loop_path).unwrap(), 1);

    let cfg = QuadratureConfig::<f32> {
        rel_tol: 1e-5,
        max_refinements: 12,
        base_panels: 32,
    };
    let v = line_integral(&spec, &loop_path, &cfg).unwrap();
    assert!((v - std::f32::consts::TAU).abs() < 1e-3, "got {v}");

    let curl = numeric_curl(&spec, p, 1e-2f32).unwrap();
    assert!(curl.value.norm() < 1e-2);

    let report = dirac_condition(ChargeSpec::<f32>::new(1.0), 0.5);
    assert!(report.satisfied);
    assert_eq!(report.nearest_integer, 1);
}

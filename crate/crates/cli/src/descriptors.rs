//! Strict JSON descriptors for potentials, paths, surfaces, and fields.
//!
//! Parsing is done against explicit key sets so unknown fields are
//! rejected rather than silently ignored; the schemas are documented in
//! `docs/potentials.md`.

use ghl_core::calculus::{default_curl_step, numeric_curl};
use ghl_core::potentials::{monopole_field, solenoid_field};
use ghl_core::{FieldSample, ParamPath, ParamSurface, Point3, PotentialSpec, Result};
use serde_json::{Map, Value};

use crate::CliError;

fn malformed(msg: impl Into<String>) -> CliError {
    CliError::Malformed(msg.into())
}

fn parse_object<'v>(
    value: &'v Value,
    what: &str,
    required: &[&str],
    optional: &[&str],
) -> std::result::Result<&'v Map<String, Value>, CliError> {
    let map = value
        .as_object()
        .ok_or_else(|| malformed(format!("{what} descriptor must be a JSON object")))?;
    for key in map.keys() {
        if key != "kind" && !required.contains(&key.as_str()) && !optional.contains(&key.as_str())
        {
            return Err(malformed(format!(
                "unknown field `{key}` in {what} descriptor"
            )));
        }
    }
    for key in required {
        if !map.contains_key(*key) {
            return Err(malformed(format!(
                "{what} descriptor is missing required field `{key}`"
            )));
        }
    }
    Ok(map)
}

fn kind_of<'v>(value: &'v Value, what: &str) -> std::result::Result<&'v str, CliError> {
    value
        .as_object()
        .and_then(|m| m.get("kind"))
        .and_then(Value::as_str)
        .ok_or_else(|| malformed(format!("{what} descriptor needs a string `kind` field")))
}

fn number(map: &Map<String, Value>, what: &str, key: &str) -> std::result::Result<f64, CliError> {
    map.get(key)
        .and_then(Value::as_f64)
        .ok_or_else(|| malformed(format!("{what} field `{key}` must be a number")))
}

fn number_or(
    map: &Map<String, Value>,
    what: &str,
    key: &str,
    default: f64,
) -> std::result::Result<f64, CliError> {
    match map.get(key) {
        None => Ok(default),
        Some(_) => number(map, what, key),
    }
}

fn triplet(value: &Value, what: &str, key: &str) -> std::result::Result<Point3, CliError> {
    let items = value
        .as_array()
        .filter(|a| a.len() == 3)
        .ok_or_else(|| malformed(format!("{what} field `{key}` must be [x, y, z]")))?;
    let mut xyz = [0.0; 3];
    for (slot, item) in xyz.iter_mut().zip(items) {
        *slot = item
            .as_f64()
            .ok_or_else(|| malformed(format!("{what} field `{key}` must hold numbers")))?;
    }
    Ok(Point3::new(xyz[0], xyz[1], xyz[2]))
}

fn point_or(
    map: &Map<String, Value>,
    what: &str,
    key: &str,
    default: Point3,
) -> std::result::Result<Point3, CliError> {
    match map.get(key) {
        None => Ok(default),
        Some(v) => triplet(v, what, key),
    }
}

fn point_list(
    map: &Map<String, Value>,
    what: &str,
    key: &str,
) -> std::result::Result<Vec<Point3>, CliError> {
    let items = map
        .get(key)
        .and_then(Value::as_array)
        .ok_or_else(|| malformed(format!("{what} field `{key}` must be a list of points")))?;
    items.iter().map(|v| triplet(v, what, key)).collect()
}

/// Parse a potential descriptor, e.g. `{"kind":"kappa","kappa":1}`.
pub fn parse_potential(value: &Value) -> std::result::Result<PotentialSpec, CliError> {
    let what = "potential";
    match kind_of(value, what)? {
        "string-i" => {
            let map = parse_object(value, what, &["g"], &[])?;
            Ok(PotentialSpec::DiracStringI {
                g: number(map, what, "g")?,
            })
        }
        "string-ii" => {
            let map = parse_object(value, what, &["g"], &[])?;
            Ok(PotentialSpec::DiracStringII {
                g: number(map, what, "g")?,
            })
        }
        "kappa" => {
            let map = parse_object(value, what, &["kappa"], &[])?;
            Ok(PotentialSpec::PureGaugeKappa {
                kappa: number(map, what, "kappa")?,
            })
        }
        "ab-solenoid" => {
            let map = parse_object(value, what, &["B", "R"], &[])?;
            let radius = number(map, what, "R")?;
            if radius <= 0.0 {
                return Err(malformed("solenoid radius R must be positive"));
            }
            Ok(PotentialSpec::AbSolenoid {
                b: number(map, what, "B")?,
                radius,
            })
        }
        "solenoid-kappa" => {
            let map = parse_object(value, what, &["kappa", "R"], &[])?;
            let radius = number(map, what, "R")?;
            if radius <= 0.0 {
                return Err(malformed("solenoid radius R must be positive"));
            }
            Ok(PotentialSpec::SolenoidKappa {
                kappa: number(map, what, "kappa")?,
                radius,
            })
        }
        "superposition" => {
            let map = parse_object(value, what, &["members"], &[])?;
            let members = map
                .get("members")
                .and_then(Value::as_array)
                .ok_or_else(|| malformed("superposition `members` must be a list"))?
                .iter()
                .map(parse_potential)
                .collect::<std::result::Result<Vec<_>, _>>()?;
            if members.is_empty() {
                return Err(malformed("superposition needs at least one member"));
            }
            Ok(PotentialSpec::Superposition { members })
        }
        other => Err(malformed(format!("unknown potential kind `{other}`"))),
    }
}

/// Parse a path descriptor or a named shorthand (`unit-circle`).
pub fn parse_path(text: &str) -> std::result::Result<ParamPath, CliError> {
    if !text.trim_start().starts_with('{') {
        return match text.trim() {
            "unit-circle" => Ok(ParamPath::unit_circle()),
            other => Err(malformed(format!("unknown path name `{other}`"))),
        };
    }
    let value: Value = serde_json::from_str(text)
        .map_err(|e| malformed(format!("invalid path JSON: {e}")))?;
    let what = "path";
    match kind_of(&value, what)? {
        "circle" => {
            let map = parse_object(&value, what, &["radius"], &["center", "turns"])?;
            let radius = number(map, what, "radius")?;
            if radius <= 0.0 {
                return Err(malformed("circle radius must be positive"));
            }
            let center = point_or(map, what, "center", Point3::origin())?;
            let turns = number_or(map, what, "turns", 1.0)?;
            if turns.fract() != 0.0 || turns == 0.0 {
                return Err(malformed("circle `turns` must be a non-zero integer"));
            }
            Ok(ParamPath::circle(center, radius, turns as i32))
        }
        "segment" => {
            let map = parse_object(&value, what, &["from", "to"], &[])?;
            let from = triplet(&map["from"], what, "from")?;
            let to = triplet(&map["to"], what, "to")?;
            Ok(ParamPath::segment(from, to))
        }
        "polyline" => {
            let map = parse_object(&value, what, &["points"], &["closed"])?;
            let points = point_list(map, what, "points")?;
            if points.len() < 2 {
                return Err(malformed("polyline needs at least two points"));
            }
            let closed = match map.get("closed") {
                None => false,
                Some(v) => v
                    .as_bool()
                    .ok_or_else(|| malformed("polyline `closed` must be a boolean"))?,
            };
            Ok(ParamPath::polyline(points, closed))
        }
        "custom-samples" => {
            let map = parse_object(&value, what, &["points"], &[])?;
            let points = point_list(map, what, "points")?;
            if points.len() < 2 {
                return Err(malformed("custom-samples needs at least two points"));
            }
            Ok(ParamPath::from_samples(points))
        }
        other => Err(malformed(format!("unknown path kind `{other}`"))),
    }
}

/// A parsed surface descriptor; kept structural so the flux command can
/// split flat surfaces at a solenoid shell.
#[derive(Debug, Clone, Copy)]
pub enum SurfaceDescriptor {
    Disk { center: Point3, radius: f64 },
    Annulus { center: Point3, inner: f64, outer: f64 },
    Sphere { radius: f64 },
}

impl SurfaceDescriptor {
    pub fn build(&self) -> ParamSurface {
        match *self {
            SurfaceDescriptor::Disk { center, radius } => ParamSurface::disk(center, radius),
            SurfaceDescriptor::Annulus { center, inner, outer } => {
                ParamSurface::annulus(center, inner, outer)
            }
            SurfaceDescriptor::Sphere { radius } => ParamSurface::sphere(radius),
        }
    }

    /// Sub-surfaces for integrating a field that jumps across the
    /// cylinder `rho = shell`: axis-centered flat surfaces are split at
    /// the shell so no quadrature panel straddles the discontinuity.
    pub fn split_at_shell(&self, shell: f64) -> Vec<ParamSurface> {
        match *self {
            SurfaceDescriptor::Disk { center, radius }
                if center.rho() == 0.0 && radius > shell =>
            {
                vec![
                    ParamSurface::disk(center, shell),
                    ParamSurface::annulus(center, shell, radius),
                ]
            }
            SurfaceDescriptor::Annulus { center, inner, outer }
                if center.rho() == 0.0 && inner < shell && shell < outer =>
            {
                vec![
                    ParamSurface::annulus(center, inner, shell),
                    ParamSurface::annulus(center, shell, outer),
                ]
            }
            _ => vec![self.build()],
        }
    }
}

/// Parse a surface descriptor.
pub fn parse_surface(text: &str) -> std::result::Result<SurfaceDescriptor, CliError> {
    let value: Value = serde_json::from_str(text)
        .map_err(|e| malformed(format!("invalid surface JSON: {e}")))?;
    let what = "surface";
    match kind_of(&value, what)? {
        "disk" => {
            let map = parse_object(&value, what, &["radius"], &["center"])?;
            let radius = number(map, what, "radius")?;
            if radius <= 0.0 {
                return Err(malformed("disk radius must be positive"));
            }
            let center = point_or(map, what, "center", Point3::origin())?;
            Ok(SurfaceDescriptor::Disk { center, radius })
        }
        "annulus" => {
            let map = parse_object(&value, what, &["inner", "outer"], &["center"])?;
            let inner = number(map, what, "inner")?;
            let outer = number(map, what, "outer")?;
            if !(0.0 < inner && inner < outer) {
                return Err(malformed("annulus needs 0 < inner < outer"));
            }
            let center = point_or(map, what, "center", Point3::origin())?;
            Ok(SurfaceDescriptor::Annulus { center, inner, outer })
        }
        "sphere" => {
            let map = parse_object(&value, what, &["radius"], &[])?;
            let radius = number(map, what, "radius")?;
            if radius <= 0.0 {
                return Err(malformed("sphere radius must be positive"));
            }
            Ok(SurfaceDescriptor::Sphere { radius })
        }
        other => Err(malformed(format!("unknown surface kind `{other}`"))),
    }
}

/// A field descriptor resolved to an evaluation closure.
pub enum FieldDescriptor {
    Monopole { g: f64 },
    Solenoid { b: f64, radius: f64 },
    Zero,
    PotentialCurl { potential: PotentialSpec, step: Option<f64> },
}

impl FieldDescriptor {
    pub fn eval(&self, p: Point3) -> Result<FieldSample> {
        match self {
            FieldDescriptor::Monopole { g } => monopole_field(*g, p),
            FieldDescriptor::Solenoid { b, radius } => solenoid_field(*b, *radius, p),
            FieldDescriptor::Zero => Ok(FieldSample {
                value: ghl_core::Vec3::zero(),
                location: p,
            }),
            FieldDescriptor::PotentialCurl { potential, step } => {
                let h = step.unwrap_or_else(|| default_curl_step(&p));
                numeric_curl(potential, p, h)
            }
        }
    }
}

/// Parse a field descriptor for the flux command.
pub fn parse_field(text: &str) -> std::result::Result<FieldDescriptor, CliError> {
    let value: Value = serde_json::from_str(text)
        .map_err(|e| malformed(format!("invalid field JSON: {e}")))?;
    let what = "field";
    match kind_of(&value, what)? {
        "monopole" => {
            let map = parse_object(&value, what, &["g"], &[])?;
            Ok(FieldDescriptor::Monopole {
                g: number(map, what, "g")?,
            })
        }
        "solenoid" => {
            let map = parse_object(&value, what, &["B", "R"], &[])?;
            let radius = number(map, what, "R")?;
            if radius <= 0.0 {
                return Err(malformed("solenoid radius R must be positive"));
            }
            Ok(FieldDescriptor::Solenoid {
                b: number(map, what, "B")?,
                radius,
            })
        }
        "zero" => {
            parse_object(&value, what, &[], &[])?;
            Ok(FieldDescriptor::Zero)
        }
        "potential-curl" => {
            let map = parse_object(&value, what, &["potential"], &["step"])?;
            let potential = parse_potential(&map["potential"])?;
            let step = match map.get("step") {
                None => None,
                Some(_) => Some(number(map, what, "step")?),
            };
            if let Some(h) = step {
                if h <= 0.0 {
                    return Err(malformed("curl step must be positive"));
                }
            }
            Ok(FieldDescriptor::PotentialCurl { potential, step })
        }
        other => Err(malformed(format!("unknown field kind `{other}`"))),
    }
}

/// Parse a potential descriptor from a CLI argument string.
pub fn parse_potential_arg(text: &str) -> std::result::Result<PotentialSpec, CliError> {
    let value: Value = serde_json::from_str(text)
        .map_err(|e| malformed(format!("invalid potential JSON: {e}")))?;
    parse_potential(&value)
}

/// Parse `x,y,z` from a CLI argument.
pub fn parse_point_arg(text: &str) -> std::result::Result<Point3, CliError> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 3 {
        return Err(malformed("point must be given as x,y,z"));
    }
    let mut xyz = [0.0; 3];
    for (slot, part) in xyz.iter_mut().zip(&parts) {
        *slot = part
            .trim()
            .parse::<f64>()
            .map_err(|e| malformed(format!("bad coordinate `{part}`: {e}")))?;
    }
    Ok(Point3::new(xyz[0], xyz[1], xyz[2]))
}

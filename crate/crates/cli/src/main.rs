//! `ghl` — command-line front end for the gauge-potential laboratory.
//!
//! Exit codes: 0 success, 1 malformed input, 2 domain errors (point or
//! path outside a potential's patch, field undefined on the solenoid
//! shell), 3 numerical non-convergence.

mod descriptors;
mod output;

use std::fs;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use descriptors::{
    parse_field, parse_path, parse_point_arg, parse_potential_arg, parse_surface, FieldDescriptor,
};
use ghl_core::abeffect::{interference_pattern, kappa_invariance_experiment};
use ghl_core::calculus::{
    default_curl_step, line_integral_with_stats, numeric_curl, stokes_annular,
    surface_flux_with_stats,
};
use ghl_core::gauge::{charge_spectrum, dirac_condition, kappa_condition, kappa_spectrum, ChargeSpec};
use ghl_core::{
    InterferencePattern, Point3, PotentialSpec, QuadratureConfig, SolenoidConfig, TwoPathSetup,
};
use output::{to_csv, to_json};

#[derive(Debug)]
pub enum CliError {
    Malformed(String),
    Domain(String),
    NoConvergence(String),
}

impl CliError {
    fn message(&self) -> &str {
        match self {
            CliError::Malformed(m) | CliError::Domain(m) | CliError::NoConvergence(m) => m,
        }
    }

    fn exit_code(&self) -> i32 {
        match self {
            CliError::Malformed(_) => 1,
            CliError::Domain(_) => 2,
            CliError::NoConvergence(_) => 3,
        }
    }
}

impl From<ghl_core::Error> for CliError {
    fn from(err: ghl_core::Error) -> Self {
        match err {
            ghl_core::Error::NoConvergence { .. } => CliError::NoConvergence(err.to_string()),
            ghl_core::Error::InvalidN => CliError::Malformed(err.to_string()),
            other => CliError::Domain(other.to_string()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
struct NumericOpts {
    /// Relative quadrature tolerance (default 1e-10)
    #[arg(long, global = true)]
    rel_tol: Option<f64>,
    /// Maximum panel doublings (default 24)
    #[arg(long, global = true)]
    max_refinements: Option<u32>,
    /// Panels in the first quadrature estimate (default 64)
    #[arg(long, global = true)]
    base_panels: Option<usize>,
}

impl NumericOpts {
    fn config(&self) -> Result<QuadratureConfig, CliError> {
        let mut cfg = QuadratureConfig::default();
        if let Some(tol) = self.rel_tol {
            if tol <= 0.0 {
                return Err(CliError::Malformed("--rel-tol must be positive".into()));
            }
            cfg.rel_tol = tol;
        }
        if let Some(n) = self.max_refinements {
            cfg.max_refinements = n;
        }
        if let Some(p) = self.base_panels {
            if p < 4 {
                return Err(CliError::Malformed("--base-panels must be at least 4".into()));
            }
            cfg.base_panels = p;
        }
        Ok(cfg)
    }
}

/// Numerical laboratory for singular gauge potentials: evaluation, line
/// and flux integrals, charge-quantization checks, and a two-path
/// interference simulator. All quantities are in natural units
/// (hbar = c = 1, electron charge e = 1).
#[derive(Debug, Parser)]
#[command(name = "ghl", version, max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    numeric: NumericOpts,

    /// Write the result to a file instead of standard output
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Output format (default: csv for ab-pattern, json elsewhere)
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate a potential at a point
    Eval {
        /// Potential descriptor JSON (see docs/potentials.md)
        #[arg(long)]
        potential: String,
        /// Evaluation point as x,y,z
        #[arg(long)]
        point: String,
    },
    /// Central-difference curl of a potential at a point
    Curl {
        #[arg(long)]
        potential: String,
        #[arg(long)]
        point: String,
        /// Step size (default 1e-4 * max(1, |p|))
        #[arg(long)]
        step: Option<f64>,
    },
    /// Integrate a potential along a path
    LineIntegral {
        #[arg(long)]
        potential: String,
        /// Path descriptor JSON, or a named path such as `unit-circle`
        #[arg(long)]
        path: String,
    },
    /// Flux of a field through a surface
    Flux {
        /// Field descriptor JSON (monopole, solenoid, zero, potential-curl)
        #[arg(long)]
        field: String,
        /// Surface descriptor JSON (disk, annulus, sphere)
        #[arg(long)]
        surface: String,
    },
    /// Stokes flux for a surface that may meet the z-axis once
    Stokes {
        #[arg(long)]
        potential: String,
        #[arg(long)]
        surface: String,
    },
    /// Charge-quantization condition checks
    #[command(subcommand)]
    Quantize(QuantizeCommand),
    /// Allowed charges n/N (or vortex strengths N*n with --kappa)
    Spectrum {
        /// Non-zero integer denominator fixed by the reference charge
        #[arg(long = "N", allow_hyphen_values = true)]
        n: i64,
        /// Largest |numerator| to enumerate
        #[arg(long)]
        range: i64,
        /// Emit the vortex-strength spectrum instead of charges
        #[arg(long)]
        kappa: bool,
    },
    /// Two-path interference pattern around a solenoid
    AbPattern {
        /// Particle charge
        #[arg(long, allow_hyphen_values = true)]
        q: f64,
        /// Interior solenoid field
        #[arg(long = "B", allow_hyphen_values = true)]
        b: f64,
        /// Solenoid radius
        #[arg(long = "R")]
        radius: f64,
        /// Also add the exterior vortex potential of this strength
        #[arg(long, allow_hyphen_values = true)]
        kappa: Option<f64>,
        /// Number of screen points
        #[arg(long, default_value_t = 601)]
        points: usize,
    },
    /// Pattern deviation caused by the exterior vortex term
    AbInvariance {
        #[arg(long, allow_hyphen_values = true)]
        q: f64,
        #[arg(long, allow_hyphen_values = true)]
        kappa: f64,
        /// Interior solenoid field (default 100: enclosed flux pi)
        #[arg(long = "B", allow_hyphen_values = true)]
        b: Option<f64>,
        /// Solenoid radius (default 0.1)
        #[arg(long = "R")]
        radius: Option<f64>,
        /// Number of screen points
        #[arg(long, default_value_t = 601)]
        points: usize,
    },
}

#[derive(Debug, Subcommand)]
enum QuantizeCommand {
    /// Monopole condition: 2*q*g must be an integer
    Dirac {
        #[arg(long, allow_hyphen_values = true)]
        q: f64,
        #[arg(long, allow_hyphen_values = true)]
        g: f64,
    },
    /// Vortex condition: q*kappa must be an integer
    Kappa {
        #[arg(long, allow_hyphen_values = true)]
        q: f64,
        #[arg(long, allow_hyphen_values = true)]
        kappa: f64,
    },
}

#[derive(Serialize)]
struct SampleOut {
    value: ghl_core::Vec3,
    location: Point3,
}

#[derive(Serialize)]
struct CurlOut {
    value: ghl_core::Vec3,
    location: Point3,
    step: f64,
}

#[derive(Serialize)]
struct IntegralOut {
    value: f64,
    panels_used: usize,
    est_error: f64,
}

#[derive(Serialize)]
struct KappaSpectrumOut {
    #[serde(rename = "N")]
    n: i64,
    n_range: i64,
    kappa_values: Vec<f64>,
}

fn main() {
    std::process::exit(real_main());
}

fn real_main() -> i32 {
    if let Err(err) = configure_threads() {
        eprintln!("ghl: {}", err.message());
        return err.exit_code();
    }
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return code;
        }
    };
    match run(cli) {
        Ok(()) => 0,
        Err(err) => {
            eprintln!("ghl: {}", err.message());
            err.exit_code()
        }
    }
}

/// Cap rayon's worker count from GHL_THREADS when set.
fn configure_threads() -> Result<(), CliError> {
    match std::env::var("GHL_THREADS") {
        Err(_) => Ok(()),
        Ok(raw) => {
            let n: usize = raw.parse().map_err(|_| {
                CliError::Malformed(format!("GHL_THREADS must be a positive integer, got `{raw}`"))
            })?;
            if n == 0 {
                return Err(CliError::Malformed(
                    "GHL_THREADS must be a positive integer".into(),
                ));
            }
            rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build_global()
                .map_err(|e| CliError::Malformed(format!("thread pool: {e}")))
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let cfg = cli.numeric.config()?;
    let format = cli.format;
    let text = match cli.command {
        Command::Eval { potential, point } => {
            json_only(format)?;
            let spec = parse_potential_arg(&potential)?;
            let p = parse_point_arg(&point)?;
            let sample = spec.eval(p)?;
            to_json(&SampleOut {
                value: sample.value,
                location: sample.location,
            })
        }
        Command::Curl { potential, point, step } => {
            json_only(format)?;
            let spec = parse_potential_arg(&potential)?;
            let p = parse_point_arg(&point)?;
            let h = match step {
                Some(h) if h <= 0.0 => {
                    return Err(CliError::Malformed("--step must be positive".into()))
                }
                Some(h) => h,
                None => default_curl_step(&p),
            };
            let sample = numeric_curl(&spec, p, h)?;
            to_json(&CurlOut {
                value: sample.value,
                location: sample.location,
                step: h,
            })
        }
        Command::LineIntegral { potential, path } => {
            json_only(format)?;
            let spec = parse_potential_arg(&potential)?;
            let path = parse_path(&path)?;
            let (value, stats) = line_integral_with_stats(&spec, &path, &cfg)?;
            to_json(&IntegralOut {
                value,
                panels_used: stats.panels_used,
                est_error: stats.est_error,
            })
        }
        Command::Flux { field, surface } => {
            json_only(format)?;
            let field = parse_field(&field)?;
            let surface = parse_surface(&surface)?;
            let pieces = match &field {
                FieldDescriptor::Solenoid { radius, .. } => surface.split_at_shell(*radius),
                _ => vec![surface.build()],
            };
            let mut value = 0.0;
            let mut panels_used = 0;
            let mut est_error = 0.0;
            for piece in &pieces {
                let (v, stats) =
                    surface_flux_with_stats(|p| field.eval(p), piece, &cfg)?;
                value += v;
                panels_used += stats.panels_used;
                est_error += stats.est_error;
            }
            to_json(&IntegralOut {
                value,
                panels_used,
                est_error,
            })
        }
        Command::Stokes { potential, surface } => {
            json_only(format)?;
            let spec = parse_potential_arg(&potential)?;
            let surface = parse_surface(&surface)?.build();
            let report = stokes_annular(&spec, &surface, &cfg)?;
            to_json(&report)
        }
        Command::Quantize(which) => {
            json_only(format)?;
            let report = match which {
                QuantizeCommand::Dirac { q, g } => dirac_condition(ChargeSpec::new(q), g),
                QuantizeCommand::Kappa { q, kappa } => kappa_condition(ChargeSpec::new(q), kappa),
            };
            to_json(&report)
        }
        Command::Spectrum { n, range, kappa } => {
            if range < 0 {
                return Err(CliError::Malformed("--range must be non-negative".into()));
            }
            if kappa {
                let values = kappa_spectrum::<f64>(n, range)?;
                match format.unwrap_or(Format::Json) {
                    Format::Json => to_json(&KappaSpectrumOut {
                        n,
                        n_range: range,
                        kappa_values: values,
                    }),
                    Format::Csv => to_csv("kappa", values.into_iter().map(|v| vec![v])),
                }
            } else {
                let spectrum = charge_spectrum::<f64>(n, range)?;
                match format.unwrap_or(Format::Json) {
                    Format::Json => to_json(&spectrum),
                    Format::Csv => {
                        to_csv("charge", spectrum.charges.into_iter().map(|c| vec![c]))
                    }
                }
            }
        }
        Command::AbPattern { q, b, radius, kappa, points } => {
            let pattern = run_pattern(q, b, radius, kappa, points)?;
            match format.unwrap_or(Format::Csv) {
                Format::Csv => to_csv(
                    "y,intensity",
                    pattern
                        .positions
                        .iter()
                        .zip(&pattern.intensities)
                        .map(|(&y, &i)| vec![y, i]),
                ),
                Format::Json => to_json(&pattern),
            }
        }
        Command::AbInvariance { q, kappa, b, radius, points } => {
            json_only(format)?;
            let solenoid = SolenoidConfig {
                b: b.unwrap_or(100.0),
                radius: radius.unwrap_or(0.1),
            };
            let setup = build_setup(solenoid.radius, points)?;
            let report =
                kappa_invariance_experiment(ChargeSpec::new(q), &solenoid, &setup, kappa)?;
            to_json(&report)
        }
    };
    write_output(cli.out, &text)
}

fn json_only(format: Option<Format>) -> Result<(), CliError> {
    match format {
        Some(Format::Csv) => Err(CliError::Malformed(
            "csv output is only available for ab-pattern and spectrum".into(),
        )),
        _ => Ok(()),
    }
}

fn build_setup(radius: f64, points: usize) -> Result<TwoPathSetup, CliError> {
    if radius <= 0.0 {
        return Err(CliError::Malformed("solenoid radius must be positive".into()));
    }
    if points < 2 {
        return Err(CliError::Malformed("--points must be at least 2".into()));
    }
    let setup = TwoPathSetup::screen_line(points);
    if !setup.validate(radius) {
        return Err(CliError::Domain(format!(
            "a solenoid of radius {radius} does not fit between the interferometer arms"
        )));
    }
    Ok(setup)
}

fn run_pattern(
    q: f64,
    b: f64,
    radius: f64,
    kappa: Option<f64>,
    points: usize,
) -> Result<InterferencePattern, CliError> {
    let setup = build_setup(radius, points)?;
    let solenoid = PotentialSpec::AbSolenoid { b, radius };
    let spec = match kappa {
        None => solenoid,
        Some(kappa) => PotentialSpec::Superposition {
            members: vec![solenoid, PotentialSpec::SolenoidKappa { kappa, radius }],
        },
    };
    Ok(interference_pattern(ChargeSpec::new(q), &spec, &setup)?)
}

fn write_output(out: Option<PathBuf>, text: &str) -> Result<(), CliError> {
    match out {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(path) => fs::write(&path, text).map_err(|e| {
            CliError::Malformed(format!("cannot write {}: {e}", path.display()))
        }),
    }
}

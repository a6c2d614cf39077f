//! Composite Gauss-Legendre panels with successive panel doubling.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::lit;
use crate::Scalar;

/// 8-point Gauss-Legendre nodes and weights on [-1, 1] (positive half;
/// the rule is symmetric).
const GL8_NODES: [f64; 4] = [
    0.183_434_642_495_649_8,
    0.525_532_409_916_329,
    0.796_666_477_413_626_7,
    0.960_289_856_497_536_2,
];
const GL8_WEIGHTS: [f64; 4] = [
    0.362_683_783_378_362,
    0.313_706_645_877_887_29,
    0.222_381_034_453_374_47,
    0.101_228_536_290_376_26,
];

/// Absolute convergence floor for near-zero integrals.
const ABS_FLOOR: f64 = 1e-14;

/// Hard panel caps; hitting one before convergence is a [`Error::NoConvergence`].
const MAX_PANELS_1D: usize = 1 << 17;
const MAX_PANELS_PER_AXIS_2D: usize = 512;

/// Controls for the panel-doubling quadrature.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuadratureConfig<F> {
    /// Relative agreement required between successive estimates.
    pub rel_tol: F,
    /// Maximum number of panel doublings.
    pub max_refinements: u32,
    /// Panels in the first estimate (per axis squared root for surfaces).
    pub base_panels: usize,
}

impl<F: Scalar> Default for QuadratureConfig<F> {
    fn default() -> Self {
        Self {
            rel_tol: lit(1e-10),
            max_refinements: 24,
            base_panels: 64,
        }
    }
}

impl<F: Scalar> QuadratureConfig<F> {
    fn validate(&self) {
        debug_assert!(self.rel_tol > F::zero(), "rel_tol must be positive");
        debug_assert!(self.base_panels >= 4, "base_panels must be at least 4");
    }
}

/// Diagnostics from one adaptive integration.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QuadratureStats<F> {
    /// Panels in the accepted estimate (total across cells; per-axis
    /// panels squared for surfaces).
    pub panels_used: usize,
    /// Last gap between successive estimates.
    pub est_error: F,
    /// Every refinement estimate, coarsest first.
    pub estimates: Vec<F>,
}

fn converged<F: Scalar>(delta: F, value: F, rel_tol: F) -> bool {
    delta < (rel_tol * value.abs()).max(lit(ABS_FLOOR))
}

/// Composite GL8 over one span with `panels` panels.
fn gl8_span<F: Scalar, G>(f: &G, a: F, b: F, panels: usize) -> Result<F, F>
where
    G: Fn(F) -> Result<F, F>,
{
    let width = (b - a) / lit::<F>(panels as f64);
    let half = lit::<F>(0.5);
    let mut sum = F::zero();
    for k in 0..panels {
        let lo = a + width * lit::<F>(k as f64);
        let mid = lo + width * half;
        let scale = width * half;
        let mut panel = F::zero();
        for i in 0..4 {
            let x = lit::<F>(GL8_NODES[i]) * scale;
            let w = lit::<F>(GL8_WEIGHTS[i]);
            panel = panel + (f(mid + x)? + f(mid - x)?) * w;
        }
        sum = sum + panel * scale;
    }
    Ok(sum)
}

/// Integrate `f` over the given smooth cells, doubling panels until
/// successive totals agree. Summation order is fixed, so results are
/// deterministic.
pub(crate) fn integrate_cells<F: Scalar, G>(
    f: G,
    cells: &[(F, F)],
    cfg: &QuadratureConfig<F>,
) -> Result<(F, QuadratureStats<F>), F>
where
    G: Fn(F) -> Result<F, F>,
{
    cfg.validate();
    let total_width: F = cells
        .iter()
        .map(|&(a, b)| b - a)
        .fold(F::zero(), |acc, w| acc + w);
    let base: Vec<usize> = cells
        .iter()
        .map(|&(a, b)| {
            let share = ((b - a) / total_width * lit::<F>(cfg.base_panels as f64))
                .round()
                .to_usize()
                .unwrap_or(1);
            share.max(1)
        })
        .collect();

    let eval_level = |level: u32| -> Result<(F, usize), F> {
        let mut total = F::zero();
        let mut panels = 0usize;
        for (&(a, b), &n) in cells.iter().zip(&base) {
            let p = n << level;
            panels += p;
            total = total + gl8_span(&f, a, b, p)?;
        }
        Ok((total, panels))
    };

    let (mut prev, mut panels) = eval_level(0)?;
    let mut estimates = vec![prev];
    for level in 1..=cfg.max_refinements {
        if (base.iter().sum::<usize>() << level) > MAX_PANELS_1D {
            return Err(Error::NoConvergence {
                refinements: level - 1,
                last_delta: estimates
                    .last()
                    .copied()
                    .unwrap_or(F::zero())
                    .abs(),
            });
        }
        let (cur, p) = eval_level(level)?;
        estimates.push(cur);
        let delta = (cur - prev).abs();
        if converged(delta, cur, cfg.rel_tol) {
            return Ok((
                cur,
                QuadratureStats {
                    panels_used: p,
                    est_error: delta,
                    estimates,
                },
            ));
        }
        prev = cur;
        panels = p;
    }
    let last_delta = if estimates.len() >= 2 {
        (estimates[estimates.len() - 1] - estimates[estimates.len() - 2]).abs()
    } else {
        F::infinity()
    };
    let _ = panels;
    Err(Error::NoConvergence {
        refinements: cfg.max_refinements,
        last_delta,
    })
}

/// Tensor-product GL8 over `[0, 1]^2` with per-axis panel doubling.
pub(crate) fn integrate_unit_square<F: Scalar, G>(
    f: G,
    cfg: &QuadratureConfig<F>,
) -> Result<(F, QuadratureStats<F>), F>
where
    G: Fn(F, F) -> Result<F, F>,
{
    cfg.validate();
    let per_axis = ((cfg.base_panels as f64).sqrt().round() as usize).max(2);

    let eval_level = |level: u32| -> Result<(F, usize), F> {
        let n = per_axis << level;
        let width = F::one() / lit::<F>(n as f64);
        let half = lit::<F>(0.5);
        let scale = width * half;
        // Panel-local nodes, reused on both axes.
        let mut nodes = [F::zero(); 8];
        let mut weights = [F::zero(); 8];
        for i in 0..4 {
            nodes[2 * i] = lit::<F>(GL8_NODES[i]) * scale;
            nodes[2 * i + 1] = -nodes[2 * i];
            weights[2 * i] = lit::<F>(GL8_WEIGHTS[i]);
            weights[2 * i + 1] = weights[2 * i];
        }
        let mut total = F::zero();
        for ku in 0..n {
            let mu = (lit::<F>(ku as f64) + half) * width;
            for kv in 0..n {
                let mv = (lit::<F>(kv as f64) + half) * width;
                let mut panel = F::zero();
                for (ui, uw) in nodes.iter().zip(&weights) {
                    let u = mu + *ui;
                    let mut row = F::zero();
                    for (vi, vw) in nodes.iter().zip(&weights) {
                        row = row + f(u, mv + *vi)? * *vw;
                    }
                    panel = panel + row * *uw;
                }
                total = total + panel * scale * scale;
            }
        }
        Ok((total, n * n))
    };

    let (mut prev, _) = eval_level(0)?;
    let mut estimates = vec![prev];
    for level in 1..=cfg.max_refinements {
        if (per_axis << level) > MAX_PANELS_PER_AXIS_2D {
            return Err(Error::NoConvergence {
                refinements: level - 1,
                last_delta: F::infinity(),
            });
        }
        let (cur, p) = eval_level(level)?;
        estimates.push(cur);
        let delta = (cur - prev).abs();
        if converged(delta, cur, cfg.rel_tol) {
            return Ok((
                cur,
                QuadratureStats {
                    panels_used: p,
                    est_error: delta,
                    estimates,
                },
            ));
        }
        prev = cur;
    }
    let last_delta = if estimates.len() >= 2 {
        (estimates[estimates.len() - 1] - estimates[estimates.len() - 2]).abs()
    } else {
        F::infinity()
    };
    Err(Error::NoConvergence {
        refinements: cfg.max_refinements,
        last_delta,
    })
}

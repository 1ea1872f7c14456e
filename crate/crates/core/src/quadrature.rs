//! Composite Gauss-Legendre quadrature with node doubling.
//!
//! Every panel uses a fixed [`PANEL_ORDER`]-point rule. The rule is open, so
//! no node ever lands on a panel endpoint: integrands with a removable 0/0 at
//! an endpoint (the dispersion vanishes at `φ = π` when `λ = 1`) are never
//! evaluated there.

use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::{Error, Result};

/// Points per panel of the composite rule.
pub const PANEL_ORDER: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig {
    /// Node count of the first (coarsest) evaluation.
    pub initial_nodes: usize,
    /// How many times the node count may be doubled before giving up.
    pub max_doublings: u32,
    /// Accept once doubling changes the result by less than this.
    pub abs_tol: f64,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            initial_nodes: 128,
            max_doublings: 6,
            abs_tol: 1e-10,
        }
    }
}

impl QuadratureConfig {
    pub fn validate(&self) -> Result<()> {
        if self.initial_nodes < 16 {
            return Err(Error::InvalidParameter {
                name: "initial_nodes",
                value: self.initial_nodes as f64,
                reason: "must be at least 16",
            });
        }
        if self.max_doublings == 0 {
            return Err(Error::InvalidParameter {
                name: "max_doublings",
                value: 0.0,
                reason: "must be positive",
            });
        }
        if !(self.abs_tol > 0.0 && self.abs_tol <= 1e-6) {
            return Err(Error::InvalidParameter {
                name: "abs_tol",
                value: self.abs_tol,
                reason: "must lie in (0, 1e-6]",
            });
        }
        Ok(())
    }
}

/// Gauss-Legendre nodes and weights on `[-1, 1]`.
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    /// Roots of `P_order` by Newton iteration from the Tricomi-style guess.
    pub fn new(order: usize) -> Self {
        assert!(order >= 1);
        let mut nodes = alloc::vec![0.0; order];
        let mut weights = alloc::vec![0.0; order];
        let n = order as f64;
        for i in 0..order.div_ceil(2) {
            let mut x = libm::cos(PI * (i as f64 + 0.75) / (n + 0.5));
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre_with_derivative(order, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if libm::fabs(dx) < 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre_with_derivative(order, x);
            if d != 0.0 {
                dp = d;
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[order - 1 - i] = x;
            weights[i] = w;
            weights[order - 1 - i] = w;
        }
        if order % 2 == 1 {
            nodes[order / 2] = 0.0;
        }
        Self { nodes, weights }
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    /// Single-panel integral of `f` over `[a, b]`.
    pub fn integrate<F: FnMut(f64) -> f64>(&self, a: f64, b: f64, mut f: F) -> f64 {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        let mut sum = 0.0;
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            sum += w * f(mid + half * x);
        }
        sum * half
    }
}

fn legendre_with_derivative(order: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=order {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let n = order as f64;
    let dp = n * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

/// Composite rule over the sorted `breakpoints` with roughly `total_nodes`
/// nodes, split into panels proportionally to segment length.
pub fn integrate_composite<F: FnMut(f64) -> f64>(
    rule: &GaussLegendre,
    breakpoints: &[f64],
    total_nodes: usize,
    mut f: F,
) -> f64 {
    debug_assert!(breakpoints.len() >= 2);
    let start = breakpoints[0];
    let span = breakpoints[breakpoints.len() - 1] - start;
    let total_panels = total_nodes.div_ceil(rule.order()).max(1);
    let mut sum = 0.0;
    for seg in breakpoints.windows(2) {
        let (a, b) = (seg[0], seg[1]);
        if b <= a {
            continue;
        }
        let share = libm::round(total_panels as f64 * (b - a) / span) as usize;
        let panels = share.max(1);
        let h = (b - a) / panels as f64;
        for p in 0..panels {
            let lo = a + h * p as f64;
            let hi = if p + 1 == panels { b } else { lo + h };
            sum += rule.integrate(lo, hi, &mut f);
        }
    }
    sum
}

/// Integrates with `start_nodes`, then keeps doubling until two successive
/// results differ by less than `cfg.abs_tol`. Returns the finer estimate.
pub fn integrate_converged<F: FnMut(f64) -> f64>(
    breakpoints: &[f64],
    start_nodes: usize,
    cfg: &QuadratureConfig,
    mut f: F,
) -> Result<f64> {
    let rule = GaussLegendre::new(PANEL_ORDER);
    let mut nodes = start_nodes.max(cfg.initial_nodes);
    let mut previous = integrate_composite(&rule, breakpoints, nodes, &mut f);
    let mut change = f64::INFINITY;
    for _ in 0..cfg.max_doublings {
        nodes *= 2;
        let current = integrate_composite(&rule, breakpoints, nodes, &mut f);
        change = libm::fabs(current - previous);
        if change < cfg.abs_tol {
            return Ok(current);
        }
        previous = current;
    }
    Err(Error::Convergence { nodes, change })
}

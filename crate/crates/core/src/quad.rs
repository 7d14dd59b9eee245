//! Gauss-Legendre quadrature: cached rules, composite panels, and
//! grid-doubling convergence checks.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use once_cell::sync::Lazy;

use crate::error::{Error, Result};
use crate::exec;

/// Controls for the phase-space and special-function integrals.
#[derive(Debug, Clone)]
pub struct QuadratureConfig {
    /// Base node budget for one-dimensional integrals (doubled for the
    /// convergence check).
    pub radial_nodes: usize,
    /// Base nodes per axis for two-dimensional tensor grids.
    pub cartesian_nodes: usize,
    /// Envelope value below which the integrand tail is cut off.
    pub tail_eps: f64,
    /// Relative agreement required between a grid and its doubling.
    pub grid_doubling_tol: f64,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            radial_nodes: 256,
            cartesian_nodes: 128,
            tail_eps: 1e-12,
            grid_doubling_tol: 1e-6,
        }
    }
}

impl QuadratureConfig {
    pub fn validate(&self) -> Result<()> {
        if self.radial_nodes < 16 || self.cartesian_nodes < 16 {
            return Err(Error::Config("node counts must be at least 16".into()));
        }
        if !(self.tail_eps > 0.0) {
            return Err(Error::Config("tail_eps must be positive".into()));
        }
        if !(self.grid_doubling_tol > 0.0) {
            return Err(Error::Config("grid_doubling_tol must be positive".into()));
        }
        Ok(())
    }

    /// Exponent budget for tail cutoffs: integrand is kept until its
    /// envelope drops below `tail_eps` relative to the peak.
    pub(crate) fn tail_exponent(&self) -> f64 {
        -self.tail_eps.ln() + 5.0
    }
}

/// Nodes and weights of an n-point Gauss-Legendre rule on [-1, 1].
#[derive(Debug)]
pub struct GlRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

static GL_CACHE: Lazy<Mutex<HashMap<usize, Arc<GlRule>>>> = Lazy::new(|| Mutex::new(HashMap::new()));

/// Returns the cached n-point rule, computing it by Newton iteration on the
/// Legendre polynomial if needed.
pub fn gauss_legendre(n: usize) -> Arc<GlRule> {
    assert!(n >= 1, "empty quadrature rule");
    if let Some(r) = GL_CACHE.lock().unwrap().get(&n) {
        return Arc::clone(r);
    }
    let rule = Arc::new(compute_rule(n));
    GL_CACHE.lock().unwrap().insert(n, Arc::clone(&rule));
    rule
}

fn compute_rule(n: usize) -> GlRule {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        // Tricomi initial guess for the i-th positive-side root.
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_deriv(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let (_, d) = legendre_with_deriv(n, x);
        dp = d;
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    GlRule { nodes, weights }
}

fn legendre_with_deriv(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 1..n {
        let kf = k as f64;
        let p2 = ((2.0 * kf + 1.0) * x * p1 - kf * p0) / (kf + 1.0);
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Composite Gauss-Legendre integral of `f` over `[a, b]` using `panels`
/// equal panels with `nodes` points each. Panel sums are evaluated through
/// the exec layer and reduced in panel order.
pub fn integrate_1d<F>(f: &F, a: f64, b: f64, panels: usize, nodes: usize) -> f64
where
    F: Fn(f64) -> f64 + Sync + Send,
{
    let rule = gauss_legendre(nodes);
    let h = (b - a) / panels as f64;
    let partials = exec::map_collect(panels, |k| {
        let lo = a + k as f64 * h;
        let half = 0.5 * h;
        let mid = lo + half;
        let mut vals = Vec::with_capacity(nodes);
        for (x, w) in rule.nodes.iter().zip(rule.weights.iter()) {
            vals.push(w * half * f(mid + half * x));
        }
        exec::sum_ordered(&vals)
    });
    exec::sum_ordered(&partials)
}

/// A converged integral together with its grid-doubling error estimate.
#[derive(Debug, Clone, Copy)]
pub struct Converged {
    pub value: f64,
    pub rel_err: f64,
}

/// Integrates with `base_panels` panels, doubles until two successive grids
/// agree to `tol` relative, and returns the finer value.
pub fn integrate_1d_doubling<F>(
    f: &F,
    a: f64,
    b: f64,
    base_panels: usize,
    nodes: usize,
    tol: f64,
    max_doublings: usize,
) -> Result<Converged>
where
    F: Fn(f64) -> f64 + Sync + Send,
{
    let mut panels = base_panels.max(1);
    let mut prev = integrate_1d(f, a, b, panels, nodes);
    for _ in 0..max_doublings {
        panels *= 2;
        let next = integrate_1d(f, a, b, panels, nodes);
        let scale = next.abs().max(prev.abs()).max(f64::MIN_POSITIVE);
        let rel = (next - prev).abs() / scale;
        if rel <= tol {
            return Ok(Converged { value: next, rel_err: rel });
        }
        prev = next;
    }
    Err(Error::QuadratureNonConvergence {
        err: f64::NAN,
        tol,
    })
}

/// Tensor-product Gauss-Legendre integral over `[ax, bx] x [ay, by]`.
/// Rows are mapped through the exec layer and reduced in row order.
pub fn integrate_2d<F>(f: &F, ax: f64, bx: f64, ay: f64, by: f64, nodes: usize) -> f64
where
    F: Fn(f64, f64) -> f64 + Sync + Send,
{
    let rule = gauss_legendre(nodes);
    let hx = 0.5 * (bx - ax);
    let mx = 0.5 * (bx + ax);
    let hy = 0.5 * (by - ay);
    let my = 0.5 * (by + ay);
    let rows = exec::map_collect(nodes, |i| {
        let x = mx + hx * rule.nodes[i];
        let wx = rule.weights[i] * hx;
        let mut vals = Vec::with_capacity(nodes);
        for (y, wy) in rule.nodes.iter().zip(rule.weights.iter()) {
            vals.push(wx * wy * hy * f(x, my + hy * y));
        }
        exec::sum_ordered(&vals)
    });
    exec::sum_ordered(&rows)
}

/// Doubling driver for the 2D tensor rule.
pub fn integrate_2d_doubling<F>(
    f: &F,
    ax: f64,
    bx: f64,
    ay: f64,
    by: f64,
    base_nodes: usize,
    tol: f64,
    max_doublings: usize,
) -> Result<Converged>
where
    F: Fn(f64, f64) -> f64 + Sync + Send,
{
    let mut n = base_nodes.max(16);
    let mut prev = integrate_2d(f, ax, bx, ay, by, n);
    for _ in 0..max_doublings {
        n *= 2;
        let next = integrate_2d(f, ax, bx, ay, by, n);
        let scale = next.abs().max(prev.abs()).max(f64::MIN_POSITIVE);
        let rel = (next - prev).abs() / scale;
        if rel <= tol {
            return Ok(Converged { value: next, rel_err: rel });
        }
        prev = next;
    }
    Err(Error::QuadratureNonConvergence {
        err: f64::NAN,
        tol,
    })
}

//! Composite Gauss–Legendre quadrature with breakpoints and panel doubling.

use alloc::vec::Vec;

use crate::math::{cos, pairwise_sum, PI};
use crate::{Error, Result};

/// Panel and node counts of the composite rule.
///
/// `panels` is the number of panels on an interval of length π; shorter
/// intervals get proportionally fewer, never less than one.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadratureConfig {
    pub panels: usize,
    pub nodes_per_panel: usize,
    pub rel_tol: f64,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self { panels: 64, nodes_per_panel: 8, rel_tol: 1e-10 }
    }
}

impl QuadratureConfig {
    pub fn new(panels: usize, nodes_per_panel: usize, rel_tol: f64) -> Result<Self> {
        let cfg = Self { panels, nodes_per_panel, rel_tol };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.panels < 1 || self.nodes_per_panel < 2 || !(self.rel_tol > 0.0) {
            return Err(Error::InvalidQuadrature);
        }
        Ok(())
    }
}

/// Panel doublings tried before giving up.
pub const MAX_DOUBLINGS: usize = 4;

/// Gauss–Legendre nodes and weights on `[-1, 1]`.
#[derive(Clone, Debug, PartialEq)]
pub struct GaussLegendre {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussLegendre {
    /// `n`-point rule; nodes by Newton iteration on `P_n` from Chebyshev
    /// guesses.
    pub fn new(n: usize) -> Self {
        let mut nodes = Vec::with_capacity(n);
        let mut weights = Vec::with_capacity(n);
        for i in 0..n {
            let mut x = cos(PI * (i as f64 + 0.75) / (n as f64 + 0.5));
            let mut dp = 1.0;
            for _ in 0..100 {
                let (p, d) = legendre(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() <= 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre(n, x);
            if d != 0.0 {
                dp = d;
            }
            nodes.push(x);
            weights.push(2.0 / ((1.0 - x * x) * dp * dp));
        }
        Self { nodes, weights }
    }

    /// Composite rule on `[a, b]`, split at the interior `breaks`, with
    /// `panels_per_pi` panels per length π.
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F, a: f64, b: f64, breaks: &[f64], panels_per_pi: usize) -> f64 {
        if !(b > a) {
            return 0.0;
        }
        let mut cuts: Vec<f64> = Vec::with_capacity(breaks.len() + 2);
        cuts.push(a);
        cuts.extend(breaks.iter().copied().filter(|&t| t > a && t < b));
        cuts.push(b);
        let mut parts = Vec::new();
        for w in cuts.windows(2) {
            let (lo, hi) = (w[0], w[1]);
            let count = (libm::ceil(panels_per_pi as f64 * (hi - lo) / PI) as usize).max(1);
            let h = (hi - lo) / count as f64;
            for k in 0..count {
                let left = lo + k as f64 * h;
                let mid = left + 0.5 * h;
                let s: f64 = self.nodes.iter().zip(&self.weights).map(|(x, wt)| wt * f(mid + 0.5 * h * x)).sum();
                parts.push(0.5 * h * s);
            }
        }
        pairwise_sum(&parts)
    }
}

/// `(P_n(x), P_n'(x))` by the three-term recurrence.
fn legendre(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// A converged value with the estimates at each panel count.
#[derive(Clone, Debug, PartialEq)]
pub struct Converged {
    pub value: f64,
    /// Estimates at `panels`, `2·panels`, …
    pub trace: Vec<f64>,
}

/// Evaluates `estimate(panels)` with doubling panel counts until two
/// successive values agree to `cfg.rel_tol`.
pub fn converge<F: Fn(usize) -> f64>(cfg: &QuadratureConfig, estimate: F) -> Result<Converged> {
    cfg.validate()?;
    let mut panels = cfg.panels;
    let mut trace = alloc::vec![estimate(panels)];
    let mut change = f64::INFINITY;
    for _ in 0..MAX_DOUBLINGS {
        panels *= 2;
        let next = estimate(panels);
        let prev = *trace.last().expect("non-empty");
        trace.push(next);
        change = (next - prev).abs() / next.abs().max(f64::MIN_POSITIVE);
        if (next - prev).abs() <= cfg.rel_tol * next.abs() {
            return Ok(Converged { value: next, trace });
        }
    }
    Err(Error::NoConvergence { relative_change: change })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::math::sin;

    #[test]
    fn rule_integrates_polynomials_exactly() {
        let r = GaussLegendre::new(8);
        let w: f64 = r.weights.iter().sum();
        assert!((w - 2.0).abs() < 1e-14);
        // degree 15 is exact for 8 nodes
        let v = r.integrate(|x| x.powi(14), -1.0, 1.0, &[], 1);
        assert!((v - 2.0 / 15.0).abs() < 1e-15);
    }

    #[test]
    fn composite_rule_with_breakpoint() {
        let r = GaussLegendre::new(8);
        let v = r.integrate(|x| sin(2.0 * x).abs(), 0.0, PI, &[PI / 2.0], 4);
        assert!((v - 2.0).abs() < 1e-14);
    }

    #[test]
    fn rejects_bad_config() {
        assert_eq!(QuadratureConfig::new(0, 8, 1e-10), Err(Error::InvalidQuadrature));
        assert_eq!(QuadratureConfig::new(4, 1, 1e-10), Err(Error::InvalidQuadrature));
        assert_eq!(QuadratureConfig::new(4, 8, 0.0), Err(Error::InvalidQuadrature));
    }
}

//! Volumes of compact rank-one symmetric spaces and the integral identities
//! around them.
//!
//! The model space `KPⁿ` has real dimension `an` for `K` of real dimension
//! `a` and sectional curvature in `[1, 4]`. In polar coordinates about a
//! point its volume density is `sin(t)^{an−a} · |½ sin 2t|^{a−1}`. Note the
//! curvature normalization: extremal curvature is 4 here, not the 1 used for
//! curvature tensors.

mod quadrature;

pub use quadrature::{converge, Converged, GaussLegendre, QuadratureConfig, MAX_DOUBLINGS};

use crate::math::{powi, sin, sqrt, FRAC_PI_2, PI};
use crate::{Error, Result};

/// `(a, n)` selecting the model `KPⁿ(4)`.
///
/// `a = 1` is the round sphere, admitted as a degenerate case in which the
/// fiber factor is 1. The octonions only give the plane, so `a = 8` forces
/// `n = 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ModelSpaceParams {
    a: u32,
    n: u32,
}

impl ModelSpaceParams {
    pub fn new(a: u32, n: u32) -> Result<Self> {
        let valid = matches!(a, 1 | 2 | 4 | 8) && n >= 1 && (a != 8 || n == 2);
        if !valid {
            return Err(Error::InvalidModel { a, n });
        }
        Ok(Self { a, n })
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Real dimension `an`.
    pub fn dimension(&self) -> u32 {
        self.a * self.n
    }

    /// Order `an − a` of the Hölder step.
    pub fn holder_order(&self) -> u32 {
        self.a * self.n - self.a
    }
}

/// `|½ sin 2t|^{a−1}`, the Jacobi-field determinant along the totally geodesic
/// sphere through a direction.
pub fn jacobi_fiber_factor(a: u32, t: f64) -> f64 {
    powi((0.5 * sin(2.0 * t)).abs(), a as i32 - 1)
}

/// Polar volume density `sin(t)^{an−a} · |½ sin 2t|^{a−1}` of the model.
pub fn model_volume_form(p: &ModelSpaceParams, t: f64) -> f64 {
    powi(sin(t).max(0.0), p.holder_order() as i32) * jacobi_fiber_factor(p.a, t)
}

/// Breakpoint of the density's kink at `t = π/2`.
const KINK: f64 = FRAC_PI_2;

/// `∫₀^π ∫ₓ^π g(y − x) dy dx` at the given panel count, split where the
/// integrand or the inner integral has a kink.
fn triangle_integral<G: Fn(f64) -> f64>(rule: &GaussLegendre, g: &G, panels: usize) -> f64 {
    let inner = |x: f64| rule.integrate(|y| g(y - x), x, PI, &[x + KINK], panels);
    rule.integrate(inner, 0.0, PI, &[KINK], panels)
}

/// The constant `β(a, n) = ∫₀^π ∫ₓ^π f(y − x) dy dx` by two-dimensional
/// quadrature, with `f` the model density.
pub fn beta_quadrature(p: &ModelSpaceParams, cfg: &QuadratureConfig) -> Result<f64> {
    Ok(beta_quadrature_trace(p, cfg)?.value)
}

/// [`beta_quadrature`] with the estimate at each panel count.
pub fn beta_quadrature_trace(p: &ModelSpaceParams, cfg: &QuadratureConfig) -> Result<Converged> {
    cfg.validate()?;
    let rule = GaussLegendre::new(cfg.nodes_per_panel);
    let f = |u: f64| model_volume_form(p, u);
    converge(cfg, |panels| triangle_integral(&rule, &f, panels))
}

/// `Γ(x)/Γ(x + y)` for half-integer `x` and `y ∈ {½, 1, 2, 4}` by products,
/// so that large `n` neither overflows nor loses accuracy through logarithms.
fn gamma_ratio(x: f64, y: f64) -> f64 {
    if is_integer(y) {
        let mut r = 1.0;
        for k in 0..y as u32 {
            r /= x + k as f64;
        }
        return r;
    }
    // y = 1/2: Γ(x)/Γ(x + ½) with x a positive multiple of ½
    let (mut t, mut r) = if is_integer(x) { (1.0, 2.0 / sqrt(PI)) } else { (0.5, sqrt(PI)) };
    while t < x {
        r *= t / (t + 0.5);
        t += 1.0;
    }
    r
}

fn is_integer(x: f64) -> bool {
    libm::trunc(x) == x
}

/// `Γ(y)` for `y ∈ {½, 1, 2, 4}`.
fn gamma_half_small(y: f64) -> f64 {
    match (2.0 * y) as u32 {
        1 => sqrt(PI),
        2 | 4 => 1.0,
        8 => 6.0,
        _ => unreachable!("a is validated"),
    }
}

/// `β(a, n) = (π/2) · B(an/2, a/2)`.
///
/// Substituting `u = y − x` turns the double integral into
/// `∫₀^π f(u)(π − u) du`, and the symmetry `f(π − u) = f(u)` halves it to
/// `(π/2) ∫₀^π f(u) du`, an Euler Beta integral.
pub fn beta_closed_form(p: &ModelSpaceParams) -> f64 {
    let x = p.dimension() as f64 / 2.0;
    let y = p.a as f64 / 2.0;
    FRAC_PI_2 * gamma_half_small(y) * gamma_ratio(x, y)
}

/// Volume `2π^{(N+1)/2} / Γ((N+1)/2)` of the unit sphere `S^N`, via
/// `V(S^N) = 2π V(S^{N−2}) / (N − 1)`.
pub fn sphere_volume(dim: u32) -> f64 {
    let mut v = if dim % 2 == 0 { 2.0 } else { 2.0 * PI };
    let mut k = dim % 2;
    while k < dim {
        k += 2;
        v *= 2.0 * PI / (k - 1) as f64;
    }
    v
}

/// `V(KPⁿ) = β(a, n) V(S^{an−1}) / π`.
pub fn cross_volume(p: &ModelSpaceParams) -> f64 {
    beta_closed_form(p) * sphere_volume(p.dimension() - 1) / PI
}

/// Relative gap between `π V(M)²` and `V(UM) · J` for the model, where
/// `J = ∫₀^π ∫₀^{π−x} f(t) dt dx` by quadrature and
/// `V(UM) = V(S^{an−1}) V(M)`.
pub fn lemma27_residual(p: &ModelSpaceParams, cfg: &QuadratureConfig) -> Result<f64> {
    cfg.validate()?;
    let rule = GaussLegendre::new(cfg.nodes_per_panel);
    let j = converge(cfg, |panels| {
        let inner = |x: f64| rule.integrate(|t| model_volume_form(p, t), 0.0, PI - x, &[KINK], panels);
        rule.integrate(inner, 0.0, PI, &[KINK], panels)
    })?
    .value;
    let v = cross_volume(p);
    let lhs = PI * v * v;
    let rhs = sphere_volume(p.dimension() - 1) * v * j;
    Ok((lhs - rhs).abs() / lhs)
}

/// Both ends of the Hölder step for a radial profile `φ`, with
/// `p = an − a` and weight `w(u) = |½ sin 2u|^{a−1}`:
///
/// `lhs = ∬ φ^p w` and
/// `bound = (∬ φ sin^{p−1} w)^p / (∬ sin^p w)^{p−1}`,
///
/// all over `0 ≤ x ≤ y ≤ π` with `u = y − x`. Hölder gives `lhs ≥ bound`
/// with equality exactly when `φ` is proportional to `sin`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HolderChain {
    pub lhs: f64,
    pub bound: f64,
}

impl HolderChain {
    /// `(lhs − bound) / lhs`.
    pub fn relative_gap(&self) -> f64 {
        (self.lhs - self.bound) / self.lhs
    }
}

pub fn holder_chain<P: Fn(f64) -> f64>(
    p: &ModelSpaceParams,
    cfg: &QuadratureConfig,
    profile: P,
) -> Result<HolderChain> {
    let order = p.holder_order();
    if order < 2 {
        return Err(Error::HolderOrder { order });
    }
    cfg.validate()?;
    let rule = GaussLegendre::new(cfg.nodes_per_panel);
    let q = order as i32;
    let w = |u: f64| jacobi_fiber_factor(p.a, u);
    let s = |u: f64| sin(u).max(0.0);
    let lhs = converge(cfg, |n| triangle_integral(&rule, &|u| powi(profile(u), q) * w(u), n))?.value;
    let mixed = converge(cfg, |n| triangle_integral(&rule, &|u| profile(u) * powi(s(u), q - 1) * w(u), n))?.value;
    let model = converge(cfg, |n| triangle_integral(&rule, &|u| powi(s(u), q) * w(u), n))?.value;
    let bound = powi(mixed, q) / powi(model, q - 1);
    Ok(HolderChain { lhs, bound })
}

/// Relative gap of the Hölder step for the model profile `φ = sin`, where
/// it is an equality.
pub fn holder_equality_residual(p: &ModelSpaceParams, cfg: &QuadratureConfig) -> Result<f64> {
    Ok(holder_chain(p, cfg, |t| sin(t).max(0.0))?.relative_gap().abs())
}

/// Curvature data of the Berger metric `g_s` on S³, the round metric with
/// Hopf circles shrunk to length `2πs`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BergerMetricReport {
    pub s: f64,
    pub k_min: f64,
    pub k_max: f64,
    pub fiber_length: f64,
    /// Pinching `k_min / k_max`.
    pub delta: f64,
    /// `π / √k_max`.
    pub inj_bound: f64,
    /// Whether the shrunk fibers' half length `πs` is below `inj_bound`.
    pub inj_less_than_bound: bool,
}

impl BergerMetricReport {
    pub fn delta_below_ninth(&self) -> bool {
        self.delta < 1.0 / 9.0
    }
}

/// Curvature range `[s², 4 − 3s²]` of `g_s` and the derived quantities.
pub fn berger_report(s: f64) -> Result<BergerMetricReport> {
    if !(s > 0.0 && s <= 1.0) {
        return Err(Error::OutOfRange);
    }
    let k_min = s * s;
    let k_max = 4.0 - 3.0 * s * s;
    let inj_bound = PI / sqrt(k_max);
    Ok(BergerMetricReport {
        s,
        k_min,
        k_max,
        fiber_length: 2.0 * PI * s,
        delta: k_min / k_max,
        inj_bound,
        inj_less_than_bound: PI * s < inj_bound,
    })
}

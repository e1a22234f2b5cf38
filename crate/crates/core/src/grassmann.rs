//! Base surfaces of fibrations inside `G(2,4) ≅ S² × S²`.
//!
//! Each fiber spans an oriented 2-plane, i.e. a point of the Grassmannian;
//! the split into self-dual and anti-self-dual parts puts that point on
//! `S² × S²`. For a great-circle fibration the resulting surface is the graph
//! of a distance-decreasing map from one factor to the other, and for a
//! skew-Hopf fibration that map factors as projection onto a plane, a linear
//! map, and lift back to a hemisphere.

use alloc::vec::Vec;

use rand::Rng;

use crate::fibration::{fiber_through, GreatCircleFibration};
use crate::linalg::{principal_angles, solve_dense, sphere_distance, sym_eigen, Mat2, OrientedPlane2, Vec4};
use crate::math::{cross3, dot3, frame_of, normalize3, sqrt};
use crate::sampling::{jittered_fibonacci, rng_for, uniform_s2};
use crate::{Error, Result, Tolerances};

/// One point of a sampled base surface.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SurfacePoint {
    /// `(λ₃, λ₄)` of the fiber through `(1, 0, λ₃, λ₄)` in basis coordinates,
    /// when the fiber is not `span(e₃, e₄)`.
    pub lambda: Option<[f64; 2]>,
    pub xi_minus: [f64; 3],
    pub xi_plus: [f64; 3],
}

impl SurfacePoint {
    pub fn factor(&self, factor: Factor) -> &[f64; 3] {
        match factor {
            Factor::Minus => &self.xi_minus,
            Factor::Plus => &self.xi_plus,
        }
    }
}

/// A finite sample of a base surface, one point per distinct fiber.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct BaseSurfaceSample {
    pub points: Vec<SurfacePoint>,
}

/// One of the two `S²` factors of `G(2,4)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Factor {
    /// Anti-self-dual part.
    Minus,
    /// Self-dual part.
    Plus,
}

impl Factor {
    pub fn other(self) -> Self {
        match self {
            Factor::Minus => Factor::Plus,
            Factor::Plus => Factor::Minus,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Factor::Minus => "xiMinus",
            Factor::Plus => "xiPlus",
        }
    }
}

const JITTER: f64 = 0.02;

/// Samples `sample_count` fibers and records their points in `S² × S²`.
///
/// Base points are a jittered Fibonacci lattice on the great 2-sphere
/// `{y₄ = 0}` of basis coordinates, which every fiber meets. Base points on
/// a fiber already seen are dropped.
pub fn base_surface(f: &GreatCircleFibration, sample_count: usize, seed: u64) -> Result<BaseSurfaceSample> {
    if sample_count < 4 {
        return Err(Error::TooFewPoints { got: sample_count, need: 4 });
    }
    let points = (0..sample_count).map(|i| {
        let p = jittered_fibonacci(i, sample_count, JITTER, seed);
        let y = Vec4::new(p[0], p[1], p[2], 0.0);
        f.basis().apply(&y).normalized().expect("basis is invertible")
    });
    surface_from_base_points(f, points)
}

/// Base surface through explicitly chosen base points on S³.
pub fn surface_from_base_points<I>(f: &GreatCircleFibration, base_points: I) -> Result<BaseSurfaceSample>
where
    I: IntoIterator<Item = Vec4>,
{
    let mut fibers: Vec<OrientedPlane2> = Vec::new();
    let mut points = Vec::new();
    for x in base_points {
        let fiber = fiber_through(f, &x)?;
        let duplicate = fibers.iter().any(|q| {
            let (a, b) = principal_angles(&fiber, q);
            a < 1e-8 && b < 1e-8
        });
        if duplicate {
            continue;
        }
        let split = fiber.split()?;
        points.push(SurfacePoint { lambda: chart_lambda(f, &fiber), xi_minus: split.xi_minus, xi_plus: split.xi_plus });
        fibers.push(fiber);
    }
    Ok(BaseSurfaceSample { points })
}

fn chart_lambda(f: &GreatCircleFibration, fiber: &OrientedPlane2) -> Option<[f64; 2]> {
    let inv = f.basis().inverse()?;
    let (u, v) = (inv.apply(&fiber.u()), inv.apply(&fiber.v()));
    // α u + β v = (1, 0, λ₃, λ₄)
    let det = u[0] * v[1] - u[1] * v[0];
    if det.abs() < 1e-12 * u.norm() * v.norm() {
        return None;
    }
    let alpha = v[1] / det;
    let beta = -u[1] / det;
    let w = u * alpha + v * beta;
    Some([w[2], w[3]])
}

fn is_constant(sample: &BaseSurfaceSample, factor: Factor, tol: f64) -> bool {
    let Some(first) = sample.points.first() else { return true };
    let c = first.factor(factor);
    sample.points.iter().all(|p| sphere_distance(p.factor(factor), c) <= tol)
}

/// Whether one factor of the sample is constant within `tol`, i.e. the
/// surface has the Hopf form `{point} × S²`.
pub fn constant_factor(sample: &BaseSurfaceSample, tol: f64) -> Option<Factor> {
    [Factor::Plus, Factor::Minus].into_iter().find(|&f| is_constant(sample, f, tol))
}

fn single_valued_over(sample: &BaseSurfaceSample, domain: Factor, tol: f64) -> bool {
    let pts = &sample.points;
    for i in 0..pts.len() {
        for j in (i + 1)..pts.len() {
            if sphere_distance(pts[i].factor(domain), pts[j].factor(domain)) < tol
                && sphere_distance(pts[i].factor(domain.other()), pts[j].factor(domain.other())) > tol
            {
                return false;
            }
        }
    }
    true
}

/// The factor over which the sample is a graph.
///
/// A constant factor is the image. Otherwise the sample must be single-valued
/// over a factor at `1e-8`; when it is single-valued over both, the direction
/// with the smaller distance ratio is taken, since only that one can be
/// distance decreasing.
pub fn graph_domain(sample: &BaseSurfaceSample) -> Result<Factor> {
    const SINGLE_VALUED_TOL: f64 = 1e-8;
    if sample.points.len() < 4 {
        return Err(Error::TooFewPoints { got: sample.points.len(), need: 4 });
    }
    if let Some(image) = constant_factor(sample, SINGLE_VALUED_TOL) {
        return Ok(image.other());
    }
    let minus = single_valued_over(sample, Factor::Minus, SINGLE_VALUED_TOL);
    let plus = single_valued_over(sample, Factor::Plus, SINGLE_VALUED_TOL);
    match (minus, plus) {
        (true, false) => Ok(Factor::Minus),
        (false, true) => Ok(Factor::Plus),
        (false, false) => Err(Error::NotAGraph),
        (true, true) => {
            let over_minus = max_ratio(sample, Factor::Minus).map_or(0.0, |r| r.0);
            let over_plus = max_ratio(sample, Factor::Plus).map_or(0.0, |r| r.0);
            Ok(if over_plus < over_minus { Factor::Plus } else { Factor::Minus })
        }
    }
}

/// Domain pairs closer than this are skipped by [`lipschitz_check`].
pub const MIN_DOMAIN_DISTANCE: f64 = 1e-6;

const ROUNDOFF_DISTANCE: f64 = 1e-12;

/// Largest distance ratio of the graph map and the pair attaining it.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LipschitzReport {
    pub max_ratio: f64,
    /// Indices into the sample; `None` when the map is constant.
    pub witness: Option<(usize, usize)>,
}

fn max_ratio(sample: &BaseSurfaceSample, domain: Factor) -> Option<(f64, Option<(usize, usize)>)> {
    let pts = &sample.points;
    let mut best = None::<(f64, Option<(usize, usize)>)>;
    for i in 0..pts.len() {
        for j in (i + 1)..pts.len() {
            let d = sphere_distance(pts[i].factor(domain), pts[j].factor(domain));
            if d < MIN_DOMAIN_DISTANCE {
                continue;
            }
            let image = sphere_distance(pts[i].factor(domain.other()), pts[j].factor(domain.other()));
            // roundoff in a constant factor is not a stretch
            let r = if image < ROUNDOFF_DISTANCE { 0.0 } else { image / d };
            match best {
                Some((m, _)) if r <= m => {}
                _ => best = Some((r, (r > 0.0).then_some((i, j)))),
            }
        }
    }
    best
}

/// Maximum of `d(image_i, image_j) / d(domain_i, domain_j)` over all pairs.
///
/// A valid fibration gives at most `1 + tol.lipschitz`. When every domain
/// point coincides the error [`Error::DomainCollapse`] is returned; the
/// constant map then has ratio 0 by convention.
pub fn lipschitz_check(sample: &BaseSurfaceSample, domain: Factor) -> Result<LipschitzReport> {
    if sample.points.len() < 2 {
        return Err(Error::TooFewPoints { got: sample.points.len(), need: 2 });
    }
    match max_ratio(sample, domain) {
        Some((max_ratio, witness)) => Ok(LipschitzReport { max_ratio, witness }),
        None => Err(Error::DomainCollapse),
    }
}

/// Projection / linear map / lift decomposition of a base surface.
///
/// A domain point `x` is projected onto the plane orthogonal to
/// `plane_normal`, written in `plane_frame`, mapped by `linear_map`, and
/// lifted to the hemisphere around `image_normal` through `image_frame`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GageDecomposition {
    pub plane_normal: [f64; 3],
    pub plane_frame: [[f64; 3]; 2],
    /// Center of the image hemisphere; the lift of `0`.
    pub image_normal: [f64; 3],
    pub image_frame: [[f64; 3]; 2],
    pub linear_map: Mat2,
    pub singular_values: (f64, f64),
    pub domain: Factor,
    /// Root-mean-square spherical error over the fitted sample.
    pub fit_residual: f64,
    pub rank: u8,
    /// The linear map vanishes, so the projection plane is arbitrary.
    pub degenerate_plane: bool,
}

impl GageDecomposition {
    /// Predicted image of a domain point.
    pub fn predict(&self, x: &[f64; 3]) -> [f64; 3] {
        let (n1, n2) = ((self.plane_frame, self.plane_normal), (self.image_frame, self.image_normal));
        predict_with(&n1, &n2, &self.linear_map, x)
    }

    /// Root-mean-square spherical error of the prediction on another sample.
    pub fn rms_error(&self, sample: &BaseSurfaceSample) -> f64 {
        rms(sample.points.iter().map(|p| sphere_distance(&self.predict(p.factor(self.domain)), p.factor(self.domain.other()))))
    }

    /// Whether every image of the sample lies strictly inside the hemisphere
    /// around `image_normal`.
    pub fn images_in_open_hemisphere(&self, sample: &BaseSurfaceSample) -> bool {
        sample.points.iter().all(|p| dot3(p.factor(self.domain.other()), &self.image_normal) > 0.0)
    }
}

type Frame = ([[f64; 3]; 2], [f64; 3]);

fn predict_with(plane: &Frame, image: &Frame, l: &Mat2, x: &[f64; 3]) -> [f64; 3] {
    let ([a1, a2], _) = plane;
    let ([b1, b2], n2) = image;
    let q = l.apply([dot3(a1, x), dot3(a2, x)]);
    let z = sqrt((1.0 - q[0] * q[0] - q[1] * q[1]).max(0.0));
    core::array::from_fn(|k| q[0] * b1[k] + q[1] * b2[k] + z * n2[k])
}

fn rms(values: impl Iterator<Item = f64>) -> f64 {
    let (mut sum, mut n) = (0.0, 0usize);
    for v in values {
        sum += v * v;
        n += 1;
    }
    if n == 0 {
        0.0
    } else {
        sqrt(sum / n as f64)
    }
}

/// Number of fitting restarts.
pub const RESTARTS: usize = 5;
const MIN_FIT_POINTS: usize = 20;

/// Fits the projection / linear map / lift decomposition to a sample.
///
/// The image-hemisphere center is initialized in closed form: the tangential
/// part of the image is linear in the domain point, so the part of the image
/// not explained by a linear map in the domain is parallel to the normal.
/// Each restart solves for the linear part by least squares, reads the
/// projection normal off its kernel, and polishes all eight parameters by
/// damped Gauss–Newton. The best restart wins, the earliest on ties.
pub fn gage_decompose(sample: &BaseSurfaceSample, tol: &Tolerances) -> Result<GageDecomposition> {
    let n = sample.points.len();
    if n < MIN_FIT_POINTS {
        return Err(Error::TooFewPoints { got: n, need: MIN_FIT_POINTS });
    }
    let domain = graph_domain(sample)?;
    let xs: Vec<[f64; 3]> = sample.points.iter().map(|p| *p.factor(domain)).collect();
    let ys: Vec<[f64; 3]> = sample.points.iter().map(|p| *p.factor(domain.other())).collect();

    if is_constant(sample, domain.other(), tol.rank) {
        return hopf_decomposition(domain, &ys, tol);
    }

    let w = linear_regression(&xs, &ys).ok_or(Error::FitFailed { residual: f64::INFINITY })?;
    let mut scatter = [[0.0; 3]; 3];
    for (x, y) in xs.iter().zip(&ys) {
        let wx = mat3_apply(&w, x);
        let z = [y[0] - wx[0], y[1] - wx[1], y[2] - wx[2]];
        for i in 0..3 {
            for j in 0..3 {
                scatter[i][j] += z[i] * z[j];
            }
        }
    }
    let (_, vecs) = sym_eigen(&scatter);
    let closed_form = orient_toward(&[vecs[0][0], vecs[1][0], vecs[2][0]], &ys);
    let mean = normalize3(&ys.iter().fold([0.0; 3], |s, y| [s[0] + y[0], s[1] + y[1], s[2] + y[2]]))
        .unwrap_or(closed_form);

    let mut best: Option<GageDecomposition> = None;
    for restart in 0..RESTARTS {
        let n2 = match restart {
            0 => closed_form,
            1 => mean,
            _ => {
                let mut rng = rng_for(0x6A6E, restart as u64);
                let d = uniform_s2(&mut rng);
                let t: f64 = rng.gen_range(0.05..0.2);
                let p = normalize3(&core::array::from_fn(|k| closed_form[k] + t * d[k])).unwrap_or(closed_form);
                orient_toward(&p, &ys)
            }
        };
        let candidate = fit_from(&w, n2, &xs, &ys, domain, tol);
        if best.map_or(true, |b| candidate.fit_residual < b.fit_residual) {
            best = Some(candidate);
        }
    }
    let best = best.expect("at least one restart");
    if !(best.fit_residual < tol.fit) {
        return Err(Error::FitFailed { residual: best.fit_residual });
    }
    Ok(best)
}

fn hopf_decomposition(domain: Factor, ys: &[[f64; 3]], tol: &Tolerances) -> Result<GageDecomposition> {
    let n2 = normalize3(&ys.iter().fold([0.0; 3], |s, y| [s[0] + y[0], s[1] + y[1], s[2] + y[2]]))
        .unwrap_or(ys[0]);
    let n1 = [0.0, 0.0, 1.0];
    let (a1, a2) = frame_of(&n1);
    let (b1, b2) = frame_of(&n2);
    let fit_residual = rms(ys.iter().map(|y| sphere_distance(y, &n2)));
    if !(fit_residual < tol.fit) {
        return Err(Error::FitFailed { residual: fit_residual });
    }
    Ok(GageDecomposition {
        plane_normal: n1,
        plane_frame: [a1, a2],
        image_normal: n2,
        image_frame: [b1, b2],
        linear_map: Mat2::zero(),
        singular_values: (0.0, 0.0),
        domain,
        fit_residual,
        rank: 0,
        degenerate_plane: true,
    })
}

fn orient_toward(n: &[f64; 3], ys: &[[f64; 3]]) -> [f64; 3] {
    let s: f64 = ys.iter().map(|y| dot3(y, n)).sum();
    if s < 0.0 {
        [-n[0], -n[1], -n[2]]
    } else {
        *n
    }
}

fn mat3_apply(m: &[[f64; 3]; 3], x: &[f64; 3]) -> [f64; 3] {
    core::array::from_fn(|i| dot3(&m[i], x))
}

/// Least-squares `W` with `y ≈ W x`.
fn linear_regression(xs: &[[f64; 3]], ys: &[[f64; 3]]) -> Option<[[f64; 3]; 3]> {
    let mut xtx = [0.0; 9];
    let mut ytx = [[0.0; 3]; 3];
    for (x, y) in xs.iter().zip(ys) {
        for i in 0..3 {
            for j in 0..3 {
                xtx[3 * i + j] += x[i] * x[j];
                ytx[i][j] += y[i] * x[j];
            }
        }
    }
    // W = Yᵀ X (Xᵀ X)⁻¹; solve row by row against the symmetric Gram matrix
    let mut w = [[0.0; 3]; 3];
    for (row, rhs) in w.iter_mut().zip(&ytx) {
        let sol = solve_dense(3, &xtx, rhs)?;
        row.copy_from_slice(&sol);
    }
    Some(w)
}

struct Model<'a> {
    n1: [f64; 3],
    f1: ([f64; 3], [f64; 3]),
    n2: [f64; 3],
    f2: ([f64; 3], [f64; 3]),
    xs: &'a [[f64; 3]],
    ys: &'a [[f64; 3]],
}

impl Model<'_> {
    /// Normals tilted by `(p₀, p₁)` and `(p₂, p₃)` in the reference frames,
    /// with frames carried along.
    fn frames(&self, p: &[f64; 8]) -> (Frame, Frame) {
        let tilt = |n: &[f64; 3], (e1, e2): &([f64; 3], [f64; 3]), s: f64, t: f64| -> Frame {
            let m = normalize3(&core::array::from_fn(|k| n[k] + s * e1[k] + t * e2[k])).unwrap_or(*n);
            let d = dot3(e1, &m);
            let a1 = normalize3(&core::array::from_fn(|k| e1[k] - d * m[k])).unwrap_or(*e1);
            ([a1, cross3(&m, &a1)], m)
        };
        (tilt(&self.n1, &self.f1, p[0], p[1]), tilt(&self.n2, &self.f2, p[2], p[3]))
    }

    fn residuals(&self, p: &[f64; 8], out: &mut Vec<f64>) {
        out.clear();
        let (plane, image) = self.frames(p);
        let l = Mat2::new(p[4], p[5], p[6], p[7]);
        for (x, y) in self.xs.iter().zip(self.ys) {
            let q = predict_with(&plane, &image, &l, x);
            out.extend_from_slice(&[q[0] - y[0], q[1] - y[1], q[2] - y[2]]);
        }
    }
}

fn fit_from(
    w: &[[f64; 3]; 3],
    n2: [f64; 3],
    xs: &[[f64; 3]],
    ys: &[[f64; 3]],
    domain: Factor,
    tol: &Tolerances,
) -> GageDecomposition {
    let (b1, b2) = frame_of(&n2);
    // tangential image coordinates m_k · x with m_k = b_kᵀ W
    let m1: [f64; 3] = core::array::from_fn(|j| (0..3).map(|i| b1[i] * w[i][j]).sum());
    let m2: [f64; 3] = core::array::from_fn(|j| (0..3).map(|i| b2[i] * w[i][j]).sum());
    let mtm: [[f64; 3]; 3] = core::array::from_fn(|i| core::array::from_fn(|j| m1[i] * m1[j] + m2[i] * m2[j]));
    let (_, vecs) = sym_eigen(&mtm);
    let n1 = [vecs[0][2], vecs[1][2], vecs[2][2]];
    let (a1, a2) = frame_of(&n1);

    let model = Model { n1, f1: (a1, a2), n2, f2: (b1, b2), xs, ys };
    let p0 = [0.0, 0.0, 0.0, 0.0, dot3(&m1, &a1), dot3(&m1, &a2), dot3(&m2, &a1), dot3(&m2, &a2)];
    let p = levenberg_marquardt(&model, p0);

    let (plane, image) = model.frames(&p);
    let linear_map = Mat2::new(p[4], p[5], p[6], p[7]);
    let fit_residual = rms(xs.iter().zip(ys).map(|(x, y)| sphere_distance(&predict_with(&plane, &image, &linear_map, x), y)));
    let singular_values = linear_map.singular_values();
    let rank = [singular_values.0, singular_values.1].iter().filter(|&&s| s > tol.rank).count() as u8;
    GageDecomposition {
        plane_normal: plane.1,
        plane_frame: plane.0,
        image_normal: image.1,
        image_frame: image.0,
        linear_map,
        singular_values,
        domain,
        fit_residual,
        rank,
        degenerate_plane: rank == 0,
    }
}

fn levenberg_marquardt(model: &Model<'_>, mut p: [f64; 8]) -> [f64; 8] {
    const STEP: f64 = 1e-7;
    let mut r = Vec::new();
    let mut trial_r = Vec::new();
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    model.residuals(&p, &mut r);
    let mut cost: f64 = r.iter().map(|v| v * v).sum();
    let mut mu = 1e-3;
    for _ in 0..200 {
        if cost == 0.0 {
            break;
        }
        let m = r.len();
        let mut jac = alloc::vec![0.0; m * 8];
        for k in 0..8 {
            let mut q = p;
            q[k] = p[k] + STEP;
            model.residuals(&q, &mut plus);
            q[k] = p[k] - STEP;
            model.residuals(&q, &mut minus);
            for i in 0..m {
                jac[i * 8 + k] = (plus[i] - minus[i]) / (2.0 * STEP);
            }
        }
        let mut jtj = [0.0; 64];
        let mut jtr = [0.0; 8];
        for i in 0..m {
            let row = &jac[i * 8..i * 8 + 8];
            for a in 0..8 {
                jtr[a] += row[a] * r[i];
                for b in 0..8 {
                    jtj[a * 8 + b] += row[a] * row[b];
                }
            }
        }
        let mut improved = false;
        while mu < 1e12 {
            let mut lhs = jtj;
            for a in 0..8 {
                lhs[a * 8 + a] += mu * jtj[a * 8 + a].max(1e-12);
            }
            let rhs: [f64; 8] = core::array::from_fn(|a| -jtr[a]);
            let Some(delta) = solve_dense(8, &lhs, &rhs) else {
                mu *= 4.0;
                continue;
            };
            let trial: [f64; 8] = core::array::from_fn(|a| p[a] + delta[a]);
            model.residuals(&trial, &mut trial_r);
            let trial_cost: f64 = trial_r.iter().map(|v| v * v).sum();
            if trial_cost < cost {
                let small = cost - trial_cost <= 1e-15 * cost;
                p = trial;
                core::mem::swap(&mut r, &mut trial_r);
                cost = trial_cost;
                mu = (mu / 3.0).max(1e-12);
                improved = !small;
                break;
            }
            mu *= 4.0;
        }
        if !improved {
            break;
        }
    }
    p
}

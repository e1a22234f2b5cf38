//! Algebraic curvature tensors on R⁴ and the curvature characterization of
//! skew-Hopf fibrations.
//!
//! Sectional curvatures are normalized so that the extremal value is 1. A
//! tensor built from a φ-map has curvature exactly 1 on the fiber planes and
//! less on every other plane through a fiber vector; conversely the kernel
//! of the associated quadratic form recovers the φ-map.

use alloc::vec::Vec;

use rand::Rng;

use crate::fibration::{phi_fiber, PhiMap};
use crate::linalg::{principal_angles, sym_eigen, Mat2, OrientedPlane2, Vec4};
use crate::math::{cos, sin, sqrt, FRAC_PI_2, PI};
use crate::sampling::rng_for;
use crate::{Error, Result, Tolerances};

/// Index pairs `(i, j)`, `i < j`, in storage order.
pub const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

fn pair_index(i: usize, j: usize) -> Option<(usize, f64)> {
    let (lo, hi, sign) = match i.cmp(&j) {
        core::cmp::Ordering::Less => (i, j, 1.0),
        core::cmp::Ordering::Greater => (j, i, -1.0),
        core::cmp::Ordering::Equal => return None,
    };
    let k = PAIRS.iter().position(|&p| p == (lo, hi))?;
    Some((k, sign))
}

/// Extremal sectional curvature of the tensors built here.
pub const KAPPA_MAX: f64 = 1.0;

/// An algebraic curvature tensor on R⁴.
///
/// Stored as a symmetric 6×6 matrix on `Λ²R⁴`, so pair symmetry and
/// antisymmetry in each pair hold exactly; the first Bianchi identity is
/// checked, not assumed. Indices are 0-based.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CurvatureTensor4 {
    pairs: [[f64; 6]; 6],
    kappa_max: f64,
}

impl CurvatureTensor4 {
    /// Tensor from its matrix on bivectors; only the upper triangle is read.
    pub fn from_pair_matrix(m: &[[f64; 6]; 6]) -> Self {
        let mut pairs = [[0.0; 6]; 6];
        for p in 0..6 {
            for q in p..6 {
                pairs[p][q] = m[p][q];
                pairs[q][p] = m[p][q];
            }
        }
        Self { pairs, kappa_max: KAPPA_MAX }
    }

    pub fn pair_matrix(&self) -> &[[f64; 6]; 6] {
        &self.pairs
    }

    pub fn kappa_max(&self) -> f64 {
        self.kappa_max
    }

    /// `R(e_i, e_j, e_k, e_l)`.
    pub fn get(&self, i: usize, j: usize, k: usize, l: usize) -> f64 {
        match (pair_index(i, j), pair_index(k, l)) {
            (Some((p, s)), Some((q, t))) => s * t * self.pairs[p][q],
            _ => 0.0,
        }
    }

    /// Copy with `R(e_i, e_j, e_k, e_l)` and all its symmetric images set to
    /// `value`. Does not restore the Bianchi identity.
    pub fn with_component(&self, i: usize, j: usize, k: usize, l: usize, value: f64) -> Self {
        let mut out = *self;
        if let (Some((p, s)), Some((q, t))) = (pair_index(i, j), pair_index(k, l)) {
            out.pairs[p][q] = s * t * value;
            out.pairs[q][p] = s * t * value;
        }
        out
    }

    /// The tensor in the relabeled basis `e'_i = e_{perm[i]}`.
    pub fn permuted(&self, perm: [usize; 4]) -> Self {
        let mut m = [[0.0; 6]; 6];
        for (p, &(i, j)) in PAIRS.iter().enumerate() {
            for (q, &(k, l)) in PAIRS.iter().enumerate() {
                m[p][q] = self.get(perm[i], perm[j], perm[k], perm[l]);
            }
        }
        Self::from_pair_matrix(&m)
    }

    /// `R(x, y, z, w)`.
    pub fn eval(&self, x: &Vec4, y: &Vec4, z: &Vec4, w: &Vec4) -> f64 {
        let a = wedge(x, y);
        let b = wedge(z, w);
        let mut s = 0.0;
        for p in 0..6 {
            for q in 0..6 {
                s += a[p] * self.pairs[p][q] * b[q];
            }
        }
        s
    }

    /// Largest `|R_ijkl + R_kijl + R_jkil|` over all index tuples.
    pub fn bianchi_defect(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..4 {
            for j in 0..4 {
                for k in 0..4 {
                    for l in 0..4 {
                        let s = self.get(i, j, k, l) + self.get(k, i, j, l) + self.get(j, k, i, l);
                        worst = worst.max(s.abs());
                    }
                }
            }
        }
        worst
    }

    /// The 20 independent components as `(indices, value)`: the 21 entries of
    /// the upper triangle of the pair matrix minus `R₁₄₂₃`, which the Bianchi
    /// identity fixes as `R₁₃₂₄ − R₁₂₃₄`. Indices are 1-based.
    pub fn independent_components(&self) -> Vec<([usize; 4], f64)> {
        let mut out = Vec::with_capacity(20);
        for p in 0..6 {
            for q in p..6 {
                if (p, q) == (2, 3) {
                    continue;
                }
                let ((i, j), (k, l)) = (PAIRS[p], PAIRS[q]);
                out.push(([i + 1, j + 1, k + 1, l + 1], self.pairs[p][q]));
            }
        }
        out
    }
}

fn wedge(x: &Vec4, y: &Vec4) -> [f64; 6] {
    core::array::from_fn(|p| {
        let (i, j) = PAIRS[p];
        x[i] * y[j] - x[j] * y[i]
    })
}

/// The curvature tensor of a skew-Hopf fibration with parameters
/// `γ, β < 0`.
///
/// With `F = [[a, b], [c, d]]` (1-based indices):
/// `R₁₂₁ᵢ = δᵢ₂`, `R₂₁₂ᵢ = δᵢ₁`, `R₃₄₃ᵢ = δᵢ₄`, `R₄₃₄ᵢ = δᵢ₃`,
/// `R₁₃₁₃ = 1 + γ`, `R₁₄₁₄ = 1 + β`, `R₂₃₂₃ = 1 + a²γ + c²β`,
/// `R₂₄₂₄ = 1 + b²γ + d²β`, `R₁₃₂₃ = aγ`, `R₂₃₂₄ = abγ + cdβ`, `R₁₄₂₄ = dβ`,
/// `R₁₂₃₄ = (bγ − cβ)/3`, `R₂₄₃₁ = −(2bγ + cβ)/3`, `R₂₃₄₁ = −(2cβ + bγ)/3`,
/// and every component not forced by these through the symmetries is zero.
pub fn build_tensor(f: &PhiMap, gamma: f64, beta: f64) -> Result<CurvatureTensor4> {
    if !(gamma < 0.0 && beta < 0.0) || !gamma.is_finite() || !beta.is_finite() {
        return Err(Error::InvalidCurvatureParameters);
    }
    let discriminant = f.discriminant();
    if !f.is_valid() {
        return Err(Error::RealEigenvalues { discriminant });
    }
    let Mat2 { a, b, c, d } = *f.matrix();
    let mut m = [[0.0; 6]; 6];
    // pairs: 0=12 1=13 2=14 3=23 4=24 5=34
    m[0][0] = 1.0;
    m[5][5] = 1.0;
    m[1][1] = 1.0 + gamma;
    m[2][2] = 1.0 + beta;
    m[3][3] = 1.0 + a * a * gamma + c * c * beta;
    m[4][4] = 1.0 + b * b * gamma + d * d * beta;
    m[1][3] = a * gamma;
    m[3][4] = a * b * gamma + c * d * beta;
    m[2][4] = d * beta;
    m[0][5] = (b * gamma - c * beta) / 3.0;
    // R1324 = −R2431, R1423 = −R2341
    m[1][4] = (2.0 * b * gamma + c * beta) / 3.0;
    m[2][3] = (2.0 * c * beta + b * gamma) / 3.0;
    let r = CurvatureTensor4::from_pair_matrix(&m);
    let defect = r.bianchi_defect();
    if defect > 1e-12 * (1.0 + m.iter().flatten().fold(0.0f64, |s, v| s.max(v.abs()))) {
        return Err(Error::BianchiViolation { defect });
    }
    Ok(r)
}

/// Sectional curvature `R(x, y, x, y) / (|x|²|y|² − ⟨x, y⟩²)`.
pub fn sectional(r: &CurvatureTensor4, x: &Vec4, y: &Vec4) -> Result<f64> {
    let area2 = x.norm_squared() * y.norm_squared() - x.dot(y) * x.dot(y);
    if !(area2 > 1e-12) {
        return Err(Error::DegeneratePlane);
    }
    Ok(r.eval(x, y, x, y) / area2)
}

/// Symmetric matrix of the quadratic form over `(λ₃, λ₄, h₃, h₄)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QForm(pub [[f64; 4]; 4]);

impl QForm {
    pub fn eval(&self, v: &[f64; 4]) -> f64 {
        (0..4).map(|i| (0..4).map(|j| v[i] * self.0[i][j] * v[j]).sum::<f64>()).sum()
    }

    /// Eigenvalues in decreasing order and eigenvectors as columns.
    pub fn eigen(&self) -> ([f64; 4], [[f64; 4]; 4]) {
        sym_eigen(&self.0)
    }
}

/// Quadratic form whose kernel holds the vectors `(λ, h)` of fiber pairs:
/// blocks `R₂ᵢ₂ₖ − δᵢₖ` on `λ`, `R₁ⱼ₁ₚ − δⱼₚ` on `h`, and
/// `R₁₂ᵢⱼ + R₂ᵢⱼ₁` coupling `λᵢ` with `hⱼ`, over `i, j, k, p ∈ {3, 4}`.
pub fn q_form(r: &CurvatureTensor4) -> QForm {
    let mut m = [[0.0; 4]; 4];
    for (a, i) in [2usize, 3].into_iter().enumerate() {
        for (b, k) in [2usize, 3].into_iter().enumerate() {
            let delta = if a == b { 1.0 } else { 0.0 };
            m[a][b] = r.get(1, i, 1, k) - delta;
            m[2 + a][2 + b] = r.get(0, i, 0, k) - delta;
            let cross = r.get(0, 1, i, k) + r.get(1, i, k, 0);
            m[a][2 + b] = cross;
            m[2 + b][a] = cross;
        }
    }
    QForm(m)
}

const KERNEL_ZERO: f64 = 1e-8;
const KERNEL_GAP: f64 = 1e-4;

/// The φ-map whose fiber pairs span the kernel of the tensor's quadratic
/// form.
pub fn recover_fibration(r: &CurvatureTensor4) -> Result<PhiMap> {
    let (values, vecs) = q_form(r).eigen();
    let mut order = [0usize, 1, 2, 3];
    order.sort_by(|&i, &j| values[i].abs().total_cmp(&values[j].abs()));
    let singular_values = order.map(|i| values[i].abs());
    let dimension_error = Error::KernelDimension {
        singular_values: [singular_values[3], singular_values[2], singular_values[1], singular_values[0]],
    };
    if !(singular_values[1] < KERNEL_ZERO && singular_values[2] > KERNEL_GAP) {
        return Err(dimension_error);
    }
    let (u, v) = (order[0], order[1]);
    let k_lambda = Mat2::new(vecs[0][u], vecs[0][v], vecs[1][u], vecs[1][v]);
    let k_h = Mat2::new(vecs[2][u], vecs[2][v], vecs[3][u], vecs[3][v]);
    // a kernel vector with λ = 0 means h is not a function of λ
    let inv = k_lambda.inverse().ok_or(dimension_error)?;
    let f = k_h * inv;
    PhiMap::new(f)
}

/// Outcome of the Bianchi part of [`verify_r2_r3`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct R1Report {
    pub pass: bool,
    pub bianchi_defect: f64,
}

/// Outcome of the extremal-plane part of [`verify_r2_r3`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct R2Report {
    pub pass: bool,
    pub samples: usize,
    /// Largest principal angle between a maximizing plane and its fiber.
    pub worst_plane_angle: f64,
    /// Smallest gap between the top two sectional curvatures through `x`.
    pub min_eigengap: f64,
    /// Largest sectional curvature seen through a fiber vector.
    pub max_sectional: f64,
}

/// Outcome of the fiber-curvature part of [`verify_r2_r3`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct R3Report {
    pub pass: bool,
    pub samples: usize,
    /// Largest `|K(σ) − 1|` over sampled fiber planes.
    pub worst_deviation: f64,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PropertyReport {
    pub r1: R1Report,
    pub r2: R2Report,
    pub r3: R3Report,
    pub worst_residual: f64,
}

impl PropertyReport {
    pub fn pass(&self) -> bool {
        self.r1.pass && self.r2.pass && self.r3.pass
    }
}

const LAMBDA_RANGE: f64 = 2.0;
const UNIQUENESS_GAP: f64 = 1e-6;

/// Checks the curvature symmetries, that the fiber planes of `f` have
/// sectional curvature 1, and that through each fiber vector the fiber plane
/// is the unique plane of maximal curvature.
///
/// The maximizer through `x` is searched on the unit sphere of `x^⊥`: a 1°
/// prescan of a hemisphere followed by projected gradient ascent from the two
/// best well-separated prescan points. Uniqueness is read off the gap
/// between the top two eigenvalues of the Jacobi operator `y ↦ R(x, y, x, ·)`.
pub fn verify_r2_r3(
    r: &CurvatureTensor4,
    f: &PhiMap,
    samples: usize,
    seed: u64,
    tol: &Tolerances,
) -> PropertyReport {
    let bianchi_defect = r.bianchi_defect();
    let r1 = R1Report { pass: bianchi_defect <= tol.exact, bianchi_defect };

    let mut r3 = R3Report { pass: true, samples, worst_deviation: 0.0 };
    let mut r2 = R2Report {
        pass: true,
        samples,
        worst_plane_angle: 0.0,
        min_eigengap: f64::INFINITY,
        max_sectional: f64::NEG_INFINITY,
    };
    for s in 0..samples {
        let mut rng = rng_for(seed, s as u64);
        let l3 = rng.gen_range(-LAMBDA_RANGE..LAMBDA_RANGE);
        let l4 = rng.gen_range(-LAMBDA_RANGE..LAMBDA_RANGE);
        let fiber = phi_fiber(f, l3, l4);

        let t: f64 = rng.gen_range(0.0..2.0 * PI);
        let x = fiber.u() * cos(t) + fiber.v() * sin(t);
        let y = fiber.u() * -sin(t) + fiber.v() * cos(t);
        let deviation = sectional(r, &x, &y).map_or(f64::INFINITY, |k| (k - r.kappa_max).abs());
        r3.worst_deviation = r3.worst_deviation.max(deviation);

        let x = Vec4::new(1.0, 0.0, l3, l4).normalized().expect("first coordinate is 1");
        let probe = extremal_plane(r, &x);
        r2.max_sectional = r2.max_sectional.max(probe.max_sectional);
        r2.min_eigengap = r2.min_eigengap.min(probe.eigengap);
        let angle = match probe.plane {
            Some(p) => principal_angles(&p, &fiber).1,
            None => FRAC_PI_2,
        };
        r2.worst_plane_angle = r2.worst_plane_angle.max(angle);
    }
    r3.pass = r3.worst_deviation <= tol.pipeline;
    let excess = (r2.max_sectional - r.kappa_max).max(0.0);
    r2.pass = r2.worst_plane_angle < tol.extremal_plane
        && r2.min_eigengap > UNIQUENESS_GAP
        && excess <= tol.pipeline;
    let worst_residual = [bianchi_defect, r3.worst_deviation, r2.worst_plane_angle, excess]
        .into_iter()
        .fold(0.0, f64::max);
    PropertyReport { r1, r2, r3, worst_residual }
}

struct ExtremalProbe {
    plane: Option<OrientedPlane2>,
    max_sectional: f64,
    eigengap: f64,
}

fn complement_basis(x: &Vec4) -> [Vec4; 3] {
    let mut basis: Vec<Vec4> = Vec::with_capacity(3);
    let mut k = 0;
    while basis.len() < 3 && k < 4 {
        let mut w = Vec4::basis(k);
        for _ in 0..2 {
            w = w - *x * x.dot(&w);
            for b in &basis {
                w = w - *b * b.dot(&w);
            }
        }
        if let Some(n) = (w.norm() > 1e-6).then(|| w.normalized()).flatten() {
            basis.push(n);
        }
        k += 1;
    }
    [basis[0], basis[1], basis[2]]
}

fn extremal_plane(r: &CurvatureTensor4, x: &Vec4) -> ExtremalProbe {
    let e = complement_basis(x);
    let a: [[f64; 3]; 3] = core::array::from_fn(|i| core::array::from_fn(|j| r.eval(x, &e[i], x, &e[j])));
    let quad = |y: &[f64; 3]| -> f64 { (0..3).map(|i| (0..3).map(|j| y[i] * a[i][j] * y[j]).sum::<f64>()).sum() };

    // 1° prescan over the upper hemisphere; y and −y span the same plane
    let deg = PI / 180.0;
    let mut scan: Vec<(f64, [f64; 3])> = Vec::new();
    for i in 0..=90 {
        let th = i as f64 * deg;
        let steps = if i == 0 { 1 } else { 360 };
        for j in 0..steps {
            let ph = j as f64 * deg;
            let y = [sin(th) * cos(ph), sin(th) * sin(ph), cos(th)];
            scan.push((quad(&y), y));
        }
    }
    let mut max_sectional = scan.iter().fold(f64::NEG_INFINITY, |m, s| m.max(s.0));
    let first = scan.iter().fold(scan[0], |b, s| if s.0 > b.0 { *s } else { b });
    let separated = |y: &[f64; 3]| (y[0] * first.1[0] + y[1] * first.1[1] + y[2] * first.1[2]).abs() < cos(10.0 * deg);
    let second = scan.iter().filter(|s| separated(&s.1)).fold(None::<(f64, [f64; 3])>, |b, s| match b {
        Some(b) if b.0 >= s.0 => Some(b),
        _ => Some(*s),
    });

    let shift = sqrt(a.iter().flatten().map(|v| v * v).sum::<f64>()) + 1.0;
    let ascend = |mut y: [f64; 3]| -> [f64; 3] {
        for _ in 0..20_000 {
            let k = quad(&y);
            let ay: [f64; 3] = core::array::from_fn(|i| (0..3).map(|j| a[i][j] * y[j]).sum());
            // step 1/shift along the projected gradient of yᵀAy
            let next: [f64; 3] = core::array::from_fn(|i| y[i] + (ay[i] - k * y[i]) / shift);
            let n = sqrt(next.iter().map(|v| v * v).sum());
            let next = next.map(|v| v / n);
            let change: f64 = (0..3).map(|i| (next[i] - y[i]).abs()).fold(0.0, f64::max);
            y = next;
            if change < 1e-15 {
                break;
            }
        }
        y
    };
    let y1 = ascend(first.1);
    max_sectional = max_sectional.max(quad(&y1));
    let mut agree = true;
    if let Some(second) = second {
        let y2 = ascend(second.1);
        max_sectional = max_sectional.max(quad(&y2));
        let c = (y1[0] * y2[0] + y1[1] * y2[1] + y1[2] * y2[2]).abs();
        agree = c > 1.0 - 1e-9;
    }

    let (values, _) = sym_eigen(&a);
    max_sectional = max_sectional.max(values[0]);
    let eigengap = if agree { values[0] - values[1] } else { 0.0 };
    let y = e[0] * y1[0] + e[1] * y1[1] + e[2] * y1[2];
    let plane = crate::linalg::gram_schmidt_plane(*x, y).ok();
    ExtremalProbe { plane, max_sectional, eigengap }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hopf_tensor() -> CurvatureTensor4 {
        build_tensor(&PhiMap::new(Mat2::new(0.0, -1.0, 1.0, 0.0)).unwrap(), -1.0, -1.0).unwrap()
    }

    #[test]
    fn hopf_tensor_components() {
        let r = hopf_tensor();
        assert_eq!(r.get(0, 1, 0, 1), 1.0);
        assert_eq!(r.get(0, 2, 0, 2), 0.0);
        assert!((r.get(0, 1, 2, 3) - 2.0 / 3.0).abs() < 1e-15);
        assert!((r.get(1, 3, 2, 0) + 1.0 / 3.0).abs() < 1e-15);
        assert!((r.get(1, 2, 3, 0) - 1.0 / 3.0).abs() < 1e-15);
        let bianchi = r.get(0, 1, 2, 3) + r.get(1, 2, 0, 3) + r.get(2, 0, 1, 3);
        assert!(bianchi.abs() < 1e-15);
        assert!(r.bianchi_defect() < 1e-15);
    }

    #[test]
    fn symmetries_hold_exactly() {
        let f = PhiMap::new(Mat2::new(1.0, -3.0, 2.0, -1.0)).unwrap();
        let r = build_tensor(&f, -0.5, -2.0).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                for k in 0..4 {
                    for l in 0..4 {
                        let v = r.get(i, j, k, l);
                        assert_eq!(v, r.get(k, l, i, j));
                        assert_eq!(v, -r.get(i, j, l, k));
                    }
                }
            }
        }
        assert!(r.bianchi_defect() < 1e-12);
        assert_eq!(r.independent_components().len(), 20);
    }

    #[test]
    fn rejects_non_negative_parameters() {
        let f = PhiMap::new(Mat2::new(0.0, -1.0, 1.0, 0.0)).unwrap();
        assert_eq!(build_tensor(&f, 0.0, -1.0), Err(Error::InvalidCurvatureParameters));
        assert_eq!(build_tensor(&f, -1.0, 0.5), Err(Error::InvalidCurvatureParameters));
    }

    #[test]
    fn sectional_examples() {
        let f = PhiMap::new(Mat2::new(1.0, -3.0, 2.0, -1.0)).unwrap();
        let r = build_tensor(&f, -0.5, -2.0).unwrap();
        let e = Vec4::basis;
        assert!((sectional(&r, &e(0), &e(1)).unwrap() - 1.0).abs() < 1e-15);
        assert!((sectional(&r, &e(2), &e(3)).unwrap() - 1.0).abs() < 1e-15);
        assert!((sectional(&r, &e(0), &e(2)).unwrap() - 0.5).abs() < 1e-15);
        assert_eq!(sectional(&r, &e(0), &(e(0) * 2.0)), Err(Error::DegeneratePlane));
    }

    #[test]
    fn hopf_q_form_blocks() {
        let q = q_form(&hopf_tensor());
        for (a, b) in [(0, 0), (1, 1), (2, 2), (3, 3)] {
            assert!((q.0[a][b] + 1.0).abs() < 1e-15);
        }
        assert!(q.0[0][1].abs() < 1e-15 && q.0[2][3].abs() < 1e-15);
    }

    #[test]
    fn recovers_the_phi_map() {
        let f = PhiMap::new(Mat2::new(1.0, -3.0, 2.0, -1.0)).unwrap();
        let g = recover_fibration(&build_tensor(&f, -0.5, -2.0).unwrap()).unwrap();
        assert!(g.matrix().max_abs_diff(f.matrix()) < 1e-10);
        let g = recover_fibration(&hopf_tensor()).unwrap();
        assert!(g.matrix().max_abs_diff(&Mat2::new(0.0, -1.0, 1.0, 0.0)) < 1e-12);
    }

    #[test]
    fn product_tensor_has_no_two_dimensional_kernel() {
        let mut m = [[0.0; 6]; 6];
        m[0][0] = 1.0;
        m[5][5] = 1.0;
        let r = CurvatureTensor4::from_pair_matrix(&m);
        assert!(matches!(recover_fibration(&r), Err(Error::KernelDimension { .. })));
    }

    #[test]
    fn verify_passes_and_detects_perturbation() {
        let tol = Tolerances::default();
        let f = PhiMap::new(Mat2::new(1.0, -3.0, 2.0, -1.0)).unwrap();
        let r = build_tensor(&f, -0.5, -2.0).unwrap();
        let report = verify_r2_r3(&r, &f, 20, 5, &tol);
        assert!(report.pass(), "{report:?}");

        let bad = r.with_component(0, 1, 2, 3, r.get(0, 1, 2, 3) + 0.1);
        let report = verify_r2_r3(&bad, &f, 20, 5, &tol);
        assert!(!report.pass());
        assert!(!report.r1.pass);
    }
}

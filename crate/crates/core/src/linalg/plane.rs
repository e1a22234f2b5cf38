use super::decomp::singular_values4;
use super::{Mat2, Mat4, Vec4};
use crate::math::{atan2, cos, sin, sqrt, FRAC_PI_2};
use crate::{Error, Result};

const UNIT_TOL: f64 = 1e-12;
const SPLIT_TOL: f64 = 1e-10;
const INDEPENDENCE_TOL: f64 = 1e-10;

/// An oriented 2-plane of R⁴ carried by an ordered orthonormal basis.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OrientedPlane2 {
    u: Vec4,
    v: Vec4,
}

impl OrientedPlane2 {
    /// Wraps an orthonormal pair, rejecting anything off by more than `1e-12`.
    pub fn new(u: Vec4, v: Vec4) -> Result<Self> {
        let nu = u.norm();
        let nv = v.norm();
        if (nu - 1.0).abs() > UNIT_TOL {
            return Err(Error::NotUnit { norm: nu });
        }
        if (nv - 1.0).abs() > UNIT_TOL {
            return Err(Error::NotUnit { norm: nv });
        }
        if u.dot(&v).abs() > UNIT_TOL {
            return Err(Error::DegeneratePlane);
        }
        Ok(Self { u, v })
    }

    /// The coordinate plane spanned by `e_{i+1}, e_{j+1}` (0-based indices).
    pub fn coordinate(i: usize, j: usize) -> Self {
        Self { u: Vec4::basis(i), v: Vec4::basis(j) }
    }

    pub fn u(&self) -> Vec4 {
        self.u
    }

    pub fn v(&self) -> Vec4 {
        self.v
    }

    /// Same plane with the opposite orientation, basis `(v, u)`.
    pub fn reversed(&self) -> Self {
        Self { u: self.v, v: self.u }
    }

    /// Same oriented plane with its basis rotated by `angle` inside the plane.
    pub fn rotated(&self, angle: f64) -> Self {
        let (s, c) = (sin(angle), cos(angle));
        Self { u: self.u * c + self.v * s, v: self.v * c - self.u * s }
    }

    /// Image of the plane under an invertible linear map, re-orthonormalized.
    pub fn transformed(&self, m: &Mat4) -> Result<Self> {
        gram_schmidt_plane(m.apply(&self.u), m.apply(&self.v))
    }

    /// Plücker coordinates `(p12, p13, p14, p23, p24, p34)` of `u ∧ v`.
    pub fn plucker(&self) -> [f64; 6] {
        let (u, v) = (&self.u, &self.v);
        let p = |i: usize, j: usize| u[i] * v[j] - u[j] * v[i];
        [p(0, 1), p(0, 2), p(0, 3), p(1, 2), p(1, 3), p(2, 3)]
    }

    /// Distance from `x` to the plane.
    pub fn distance_to(&self, x: &Vec4) -> f64 {
        let r = *x - self.u * self.u.dot(x) - self.v * self.v.dot(x);
        r.norm()
    }

    /// Splits the unit bivector `u ∧ v` into its anti-self-dual and self-dual
    /// parts, each rescaled to a unit vector of R³.
    ///
    /// With `p_ij = u_i v_j − u_j v_i` the self-dual direction is
    /// `(p23 + p14, p31 + p24, p12 + p34)` and the anti-self-dual one is
    /// `(p23 − p14, p31 − p24, p12 − p34)`; `span(e1, e2)` maps to the pair of
    /// north poles.
    pub fn split(&self) -> Result<BivectorSplit> {
        let (minus, plus) = self.self_dual_parts();
        let target = core::f64::consts::FRAC_1_SQRT_2;
        let nm = norm3(&minus);
        let np = norm3(&plus);
        if (nm - target).abs() > SPLIT_TOL || (np - target).abs() > SPLIT_TOL {
            return Err(Error::DegeneratePlane);
        }
        Ok(BivectorSplit { xi_minus: scale3(&minus, 1.0 / nm), xi_plus: scale3(&plus, 1.0 / np) })
    }

    /// Anti-self-dual and self-dual parts of `u ∧ v` before normalization,
    /// as coefficient vectors whose Euclidean norms equal the norms of the
    /// parts in Λ²R⁴. For a simple unit bivector both norms are 1/√2.
    pub fn self_dual_parts(&self) -> ([f64; 3], [f64; 3]) {
        let [p12, p13, p14, p23, p24, p34] = self.plucker();
        let p31 = -p13;
        let h = core::f64::consts::FRAC_1_SQRT_2;
        let minus = [(p23 - p14) * h, (p31 - p24) * h, (p12 - p34) * h];
        let plus = [(p23 + p14) * h, (p31 + p24) * h, (p12 + p34) * h];
        (minus, plus)
    }
}

/// The point of S² × S² ≅ G(2,4) of an oriented plane.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BivectorSplit {
    /// Anti-self-dual factor.
    pub xi_minus: [f64; 3],
    /// Self-dual factor.
    pub xi_plus: [f64; 3],
}

/// Orthonormalizes `(u, v)` into an oriented plane whose first basis vector
/// is parallel to `u`.
pub fn gram_schmidt_plane(u: Vec4, v: Vec4) -> Result<OrientedPlane2> {
    if !u.is_finite() || !v.is_finite() {
        return Err(Error::DegeneratePlane);
    }
    if second_singular_value(&u, &v) <= INDEPENDENCE_TOL {
        return Err(Error::DegeneratePlane);
    }
    let e1 = u.normalized().ok_or(Error::DegeneratePlane)?;
    let mut w = v - e1 * e1.dot(&v);
    // second pass restores orthogonality lost to cancellation
    w = w - e1 * e1.dot(&w);
    let e2 = w.normalized().ok_or(Error::DegeneratePlane)?;
    Ok(OrientedPlane2 { u: e1, v: e2 })
}

fn second_singular_value(u: &Vec4, v: &Vec4) -> f64 {
    let p = |i: usize, j: usize| u[i] * v[j] - u[j] * v[i];
    let area = sqrt(
        [p(0, 1), p(0, 2), p(0, 3), p(1, 2), p(1, 3), p(2, 3)]
            .iter()
            .map(|x| x * x)
            .sum::<f64>(),
    );
    let s = u.norm_squared() + v.norm_squared();
    let disc = (s * s - 4.0 * area * area).max(0.0);
    let sigma1 = sqrt(0.5 * (s + sqrt(disc)));
    if sigma1 == 0.0 {
        0.0
    } else {
        area / sigma1
    }
}

/// Principal angles `(α_min, α_max)` between two planes, in `[0, π/2]`.
///
/// The cosines are the singular values of the 2×2 matrix of basis inner
/// products; the sines are the singular values of the second basis projected
/// onto the orthogonal complement of the first. Each angle is `atan2(sin, cos)`,
/// which keeps full relative accuracy for nearly coincident and nearly
/// orthogonal planes alike.
pub fn principal_angles(p: &OrientedPlane2, q: &OrientedPlane2) -> (f64, f64) {
    let gram = Mat2::new(p.u.dot(&q.u), p.u.dot(&q.v), p.v.dot(&q.u), p.v.dot(&q.v));
    let (c_max, c_min) = gram.singular_values();
    let (s_max, s_min) = complement_sines(p, q);
    let a_min = atan2(s_min, c_max.min(1.0)).clamp(0.0, FRAC_PI_2);
    let a_max = atan2(s_max.min(1.0), c_min).clamp(0.0, FRAC_PI_2);
    (a_min.min(a_max), a_max.max(a_min))
}

fn complement_sines(p: &OrientedPlane2, q: &OrientedPlane2) -> (f64, f64) {
    let project = |x: &Vec4| *x - p.u * p.u.dot(x) - p.v * p.v.dot(x);
    let w1 = project(&q.u);
    let w2 = project(&q.v);
    // thin QR of [w1 w2], then singular values of the triangular factor
    let r11 = w1.norm();
    let r = if r11 > 0.0 {
        let q1 = w1 * (1.0 / r11);
        let r12 = q1.dot(&w2);
        let r22 = (w2 - q1 * r12).norm();
        Mat2::new(r11, r12, 0.0, r22)
    } else {
        Mat2::new(w2.norm(), 0.0, 0.0, 0.0)
    };
    r.singular_values()
}

/// Smallest singular value of the 4×4 matrix whose columns are the bases of
/// `p` and `q`. It vanishes exactly when the planes share a nonzero vector.
pub fn stacked_min_singular_value(p: &OrientedPlane2, q: &OrientedPlane2) -> f64 {
    singular_values4(&Mat4::from_cols([p.u, p.v, q.u, q.v]))[3]
}

fn norm3(x: &[f64; 3]) -> f64 {
    sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2])
}

fn scale3(x: &[f64; 3], s: f64) -> [f64; 3] {
    [x[0] * s, x[1] * s, x[2] * s]
}

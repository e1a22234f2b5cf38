use core::ops::{Add, Mul, Neg, Sub};

use super::decomp::singular_values4;
use super::Vec4;
use crate::math::{hypot, sqrt};

/// A real 2×2 matrix `[[a, b], [c, d]]`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Mat2 {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl Mat2 {
    pub const fn new(a: f64, b: f64, c: f64, d: f64) -> Self {
        Self { a, b, c, d }
    }

    pub const fn identity() -> Self {
        Self::new(1.0, 0.0, 0.0, 1.0)
    }

    pub const fn zero() -> Self {
        Self::new(0.0, 0.0, 0.0, 0.0)
    }

    pub fn from_rows(r: [[f64; 2]; 2]) -> Self {
        Self::new(r[0][0], r[0][1], r[1][0], r[1][1])
    }

    pub fn rows(&self) -> [[f64; 2]; 2] {
        [[self.a, self.b], [self.c, self.d]]
    }

    pub fn det(&self) -> f64 {
        self.a * self.d - self.b * self.c
    }

    pub fn trace(&self) -> f64 {
        self.a + self.d
    }

    pub fn transpose(&self) -> Self {
        Self::new(self.a, self.c, self.b, self.d)
    }

    pub fn apply(&self, v: [f64; 2]) -> [f64; 2] {
        [self.a * v[0] + self.b * v[1], self.c * v[0] + self.d * v[1]]
    }

    pub fn inverse(&self) -> Option<Self> {
        let det = self.det();
        if det == 0.0 || !det.is_finite() {
            return None;
        }
        let s = 1.0 / det;
        Some(Self::new(self.d * s, -self.b * s, -self.c * s, self.a * s))
    }

    /// Singular values `(σ₁, σ₂)` with `σ₁ ≥ σ₂ ≥ 0`.
    ///
    /// Uses the conformal / anticonformal split, which is symmetric under
    /// transposition bit for bit.
    pub fn singular_values(&self) -> (f64, f64) {
        let conformal = hypot(self.a + self.d, self.c - self.b);
        let anticonformal = hypot(self.a - self.d, self.c + self.b);
        let s1 = 0.5 * (conformal + anticonformal);
        // |det| / σ₁ avoids the cancellation in (conformal − anticonformal).
        let s2 = if s1 > 0.0 { (self.det().abs() / s1).min(s1) } else { 0.0 };
        (s1, s2)
    }

    /// Real eigenvalues in increasing order, if any.
    pub fn real_eigenvalues(&self) -> Option<(f64, f64)> {
        let disc = super::eig2_discriminant(self);
        if disc < 0.0 {
            return None;
        }
        let half_tr = 0.5 * self.trace();
        let r = 0.5 * sqrt(disc);
        Some((half_tr - r, half_tr + r))
    }

    pub fn max_abs_diff(&self, o: &Self) -> f64 {
        [self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d]
            .iter()
            .fold(0.0, |m, x| f64::max(m, x.abs()))
    }

    pub fn is_finite(&self) -> bool {
        self.a.is_finite() && self.b.is_finite() && self.c.is_finite() && self.d.is_finite()
    }
}

impl Mul for Mat2 {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Self::new(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )
    }
}

impl Mul<f64> for Mat2 {
    type Output = Self;
    fn mul(self, s: f64) -> Self {
        Self::new(self.a * s, self.b * s, self.c * s, self.d * s)
    }
}

impl Add for Mat2 {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)
    }
}

impl Sub for Mat2 {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)
    }
}

impl Neg for Mat2 {
    type Output = Self;
    fn neg(self) -> Self {
        self * -1.0
    }
}

/// A real 4×4 matrix stored row-major.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Mat4(pub [[f64; 4]; 4]);

impl Mat4 {
    pub const fn zero() -> Self {
        Self([[0.0; 4]; 4])
    }

    pub fn identity() -> Self {
        let mut m = [[0.0; 4]; 4];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1.0;
        }
        Self(m)
    }

    /// Block-diagonal matrix `diag(upper, lower)`.
    pub fn block_diag(upper: &Mat2, lower: &Mat2) -> Self {
        let mut m = [[0.0; 4]; 4];
        m[0][0] = upper.a;
        m[0][1] = upper.b;
        m[1][0] = upper.c;
        m[1][1] = upper.d;
        m[2][2] = lower.a;
        m[2][3] = lower.b;
        m[3][2] = lower.c;
        m[3][3] = lower.d;
        Self(m)
    }

    pub fn from_cols(cols: [Vec4; 4]) -> Self {
        Self(core::array::from_fn(|i| core::array::from_fn(|j| cols[j][i])))
    }

    pub fn col(&self, j: usize) -> Vec4 {
        Vec4(core::array::from_fn(|i| self.0[i][j]))
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.0[i][j]
    }

    pub fn transpose(&self) -> Self {
        Self(core::array::from_fn(|i| core::array::from_fn(|j| self.0[j][i])))
    }

    pub fn apply(&self, v: &Vec4) -> Vec4 {
        Vec4(core::array::from_fn(|i| {
            self.0[i][0] * v[0] + self.0[i][1] * v[1] + self.0[i][2] * v[2] + self.0[i][3] * v[3]
        }))
    }

    /// Upper-left 2×2 block.
    pub fn upper_block(&self) -> Mat2 {
        Mat2::new(self.0[0][0], self.0[0][1], self.0[1][0], self.0[1][1])
    }

    /// Lower-right 2×2 block.
    pub fn lower_block(&self) -> Mat2 {
        Mat2::new(self.0[2][2], self.0[2][3], self.0[3][2], self.0[3][3])
    }

    /// Largest absolute entry of the two off-diagonal 2×2 blocks.
    pub fn off_block_max(&self) -> f64 {
        let mut m: f64 = 0.0;
        for i in 0..2 {
            for j in 2..4 {
                m = m.max(self.0[i][j].abs()).max(self.0[j][i].abs());
            }
        }
        m
    }

    pub fn max_abs_diff(&self, o: &Self) -> f64 {
        let mut m: f64 = 0.0;
        for i in 0..4 {
            for j in 0..4 {
                m = m.max((self.0[i][j] - o.0[i][j]).abs());
            }
        }
        m
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().flatten().all(|x| x.is_finite())
    }

    /// Inverse by Gauss–Jordan elimination with partial pivoting.
    pub fn inverse(&self) -> Option<Self> {
        let mut a = self.0;
        let mut inv = Self::identity().0;
        for col in 0..4 {
            let pivot = (col..4).max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))?;
            if a[pivot][col] == 0.0 {
                return None;
            }
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let p = 1.0 / a[col][col];
            for j in 0..4 {
                a[col][j] *= p;
                inv[col][j] *= p;
            }
            for row in 0..4 {
                if row != col {
                    let factor = a[row][col];
                    if factor != 0.0 {
                        for j in 0..4 {
                            a[row][j] -= factor * a[col][j];
                            inv[row][j] -= factor * inv[col][j];
                        }
                    }
                }
            }
        }
        let inv = Self(inv);
        inv.is_finite().then_some(inv)
    }

    /// Ratio of the largest to the smallest singular value.
    pub fn condition_number(&self) -> f64 {
        let s = singular_values4(self);
        if s[3] == 0.0 {
            f64::INFINITY
        } else {
            s[0] / s[3]
        }
    }
}

impl Mul for Mat4 {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Self(core::array::from_fn(|i| {
            core::array::from_fn(|j| (0..4).map(|k| self.0[i][k] * o.0[k][j]).sum())
        }))
    }
}

impl Mul<f64> for Mat4 {
    type Output = Self;
    fn mul(self, s: f64) -> Self {
        Self(self.0.map(|r| r.map(|x| x * s)))
    }
}

impl Add for Mat4 {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self(core::array::from_fn(|i| core::array::from_fn(|j| self.0[i][j] + o.0[i][j])))
    }
}

impl Sub for Mat4 {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self(core::array::from_fn(|i| core::array::from_fn(|j| self.0[i][j] - o.0[i][j])))
    }
}

impl Neg for Mat4 {
    type Output = Self;
    fn neg(self) -> Self {
        self * -1.0
    }
}

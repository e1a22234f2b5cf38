//! `no_std` float functions.

pub use core::f64::consts::{FRAC_PI_2, PI};

#[inline]
pub fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

#[inline]
pub fn sin(x: f64) -> f64 {
    libm::sin(x)
}

#[inline]
pub fn cos(x: f64) -> f64 {
    libm::cos(x)
}

#[inline]
pub fn atan2(y: f64, x: f64) -> f64 {
    libm::atan2(y, x)
}

#[inline]
pub fn powi(x: f64, n: i32) -> f64 {
    // libm has no integer power; repeated squaring keeps results
    // bit-reproducible across targets.
    let mut base = if n < 0 { 1.0 / x } else { x };
    let mut e = n.unsigned_abs();
    let mut acc = 1.0;
    while e > 0 {
        if e & 1 == 1 {
            acc *= base;
        }
        base *= base;
        e >>= 1;
    }
    acc
}

#[inline]
pub fn hypot(x: f64, y: f64) -> f64 {
    libm::hypot(x, y)
}

/// Arc distance between unit vectors of R³.
pub fn arc3(x: &[f64; 3], y: &[f64; 3]) -> f64 {
    // atan2(|x × y|, x·y) stays accurate for nearly equal and nearly
    // antipodal points, where arccos of a clamped dot product does not.
    let c = [
        x[1] * y[2] - x[2] * y[1],
        x[2] * y[0] - x[0] * y[2],
        x[0] * y[1] - x[1] * y[0],
    ];
    let s = sqrt(c[0] * c[0] + c[1] * c[1] + c[2] * c[2]);
    atan2(s, x[0] * y[0] + x[1] * y[1] + x[2] * y[2])
}

/// Pairwise (cascade) summation with a fixed association order.
pub fn pairwise_sum(v: &[f64]) -> f64 {
    match v.len() {
        0 => 0.0,
        1 => v[0],
        n if n <= 8 => v.iter().sum(),
        n => {
            let (lo, hi) = v.split_at(n / 2);
            pairwise_sum(lo) + pairwise_sum(hi)
        }
    }
}

pub fn dot3(x: &[f64; 3], y: &[f64; 3]) -> f64 {
    x[0] * y[0] + x[1] * y[1] + x[2] * y[2]
}

pub fn cross3(x: &[f64; 3], y: &[f64; 3]) -> [f64; 3] {
    [
        x[1] * y[2] - x[2] * y[1],
        x[2] * y[0] - x[0] * y[2],
        x[0] * y[1] - x[1] * y[0],
    ]
}

pub fn normalize3(x: &[f64; 3]) -> Option<[f64; 3]> {
    let n = sqrt(dot3(x, x));
    (n > 0.0 && n.is_finite()).then(|| [x[0] / n, x[1] / n, x[2] / n])
}

/// Orthonormal pair completing the unit vector `n` to a right-handed frame.
pub fn frame_of(n: &[f64; 3]) -> ([f64; 3], [f64; 3]) {
    let k = (0..3)
        .min_by(|&i, &j| n[i].abs().total_cmp(&n[j].abs()))
        .unwrap_or(0);
    let mut e = [0.0; 3];
    e[k] = 1.0;
    let d = dot3(&e, n);
    let a1 = normalize3(&[e[0] - d * n[0], e[1] - d * n[1], e[2] - d * n[2]]).unwrap_or([1.0, 0.0, 0.0]);
    (a1, cross3(n, &a1))
}

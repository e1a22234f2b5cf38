#![allow(dead_code)]

use greatcircle::fibration::PhiMap;
use greatcircle::linalg::{Mat2, Mat4};
use nalgebra::{Matrix4, SymmetricEigen};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Random 2×2 map with entries in [−5, 5] and discriminant below `-margin`.
pub fn random_phi(rng: &mut ChaCha8Rng, margin: f64) -> PhiMap {
    loop {
        let m = Mat2::new(
            rng.gen_range(-5.0..5.0),
            rng.gen_range(-5.0..5.0),
            rng.gen_range(-5.0..5.0),
            rng.gen_range(-5.0..5.0),
        );
        let d = (m.a - m.d).powi(2) + 4.0 * m.b * m.c;
        if d < -margin {
            return PhiMap::new(m).unwrap();
        }
    }
}

/// Random 2×2 map with a real eigenvalue (discriminant ≥ 0).
pub fn random_real_phi(rng: &mut ChaCha8Rng) -> PhiMap {
    loop {
        let m = Mat2::new(
            rng.gen_range(-5.0..5.0),
            rng.gen_range(-5.0..5.0),
            rng.gen_range(-5.0..5.0),
            rng.gen_range(-5.0..5.0),
        );
        if (m.a - m.d).powi(2) + 4.0 * m.b * m.c >= 0.0 {
            return PhiMap::unchecked(m);
        }
    }
}

/// Random rotation of R⁴ from the QR factorization of a Gaussian-ish matrix,
/// with determinant +1.
pub fn random_rotation(rng: &mut ChaCha8Rng) -> Mat4 {
    let m = Matrix4::from_fn(|_, _| rng.gen_range(-1.0..1.0));
    let qr = m.qr();
    let mut q = qr.q();
    if q.determinant() < 0.0 {
        for i in 0..4 {
            q[(i, 0)] = -q[(i, 0)];
        }
    }
    Mat4(core::array::from_fn(|i| core::array::from_fn(|j| q[(i, j)])))
}

pub fn to_na(m: &Mat4) -> Matrix4<f64> {
    Matrix4::from_fn(|i, j| m.0[i][j])
}

/// Rank of a point cloud on S² minus one: 0 for a point, 1 for an arc of a
/// great circle, 2 otherwise.
pub fn cloud_rank(points: &[[f64; 3]], threshold: f64) -> usize {
    let mut m = nalgebra::Matrix3::<f64>::zeros();
    for p in points {
        let v = nalgebra::Vector3::new(p[0], p[1], p[2]);
        m += v * v.transpose();
    }
    m /= points.len() as f64;
    let eig = SymmetricEigen::new(m);
    eig.eigenvalues.iter().filter(|&&e| e > threshold).count() - 1
}

//! Small fixed-dimension real linear algebra.
//!
//! Everything here lives in R² or R⁴; types are `Copy` value records.

mod decomp;
mod mat;
mod plane;
mod vec4;

pub use decomp::{singular_values4, solve_dense, sym_eigen};
pub use mat::{Mat2, Mat4};
pub use plane::{
    gram_schmidt_plane, principal_angles, stacked_min_singular_value, BivectorSplit, OrientedPlane2,
};
pub use vec4::Vec4;

/// Eigenvalue discriminant (a − d)² + 4bc of a 2×2 matrix.
///
/// Negative exactly when the matrix has a pair of complex-conjugate
/// eigenvalues.
pub fn eig2_discriminant(f: &Mat2) -> f64 {
    let diff = f.a - f.d;
    diff * diff + 4.0 * f.b * f.c
}

/// Spherical (arc) distance between unit vectors of R³.
pub fn sphere_distance(x: &[f64; 3], y: &[f64; 3]) -> f64 {
    crate::math::arc3(x, y)
}

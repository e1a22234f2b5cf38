//! Deterministic seeded sampling.
//!
//! Every sample index gets its own generator, seeded by mixing the caller's
//! seed with the index, so a sample does not depend on how many draws came
//! before it.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::Vec4;
use crate::math::{cos, sin, sqrt, PI};

/// Mixes a seed with a sample index (SplitMix64 finalizer).
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed ^ index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Generator for sample `index` under `seed`.
pub fn rng_for(seed: u64, index: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(derive_seed(seed, index))
}

/// Uniform point on S³ (Marsaglia's method).
pub fn uniform_s3<R: Rng + ?Sized>(rng: &mut R) -> Vec4 {
    let (x1, x2, s1) = disk_point(rng);
    let (x3, x4, s2) = loop {
        let p = disk_point(rng);
        if p.2 > 0.0 {
            break p;
        }
    };
    let k = sqrt((1.0 - s1) / s2);
    Vec4::new(x1, x2, x3 * k, x4 * k)
}

fn disk_point<R: Rng + ?Sized>(rng: &mut R) -> (f64, f64, f64) {
    loop {
        let x: f64 = rng.gen_range(-1.0..1.0);
        let y: f64 = rng.gen_range(-1.0..1.0);
        let s = x * x + y * y;
        if s < 1.0 {
            return (x, y, s);
        }
    }
}

/// Uniform point on S².
pub fn uniform_s2<R: Rng + ?Sized>(rng: &mut R) -> [f64; 3] {
    let z: f64 = rng.gen_range(-1.0..1.0);
    let phi: f64 = rng.gen_range(0.0..2.0 * PI);
    let r = sqrt(1.0 - z * z);
    [r * cos(phi), r * sin(phi), z]
}

/// Point `i` of the `n`-point Fibonacci lattice on S².
pub fn fibonacci_sphere(i: usize, n: usize) -> [f64; 3] {
    let golden_angle = PI * (3.0 - sqrt(5.0));
    let z = 1.0 - (2.0 * i as f64 + 1.0) / n as f64;
    let r = sqrt((1.0 - z * z).max(0.0));
    let phi = golden_angle * i as f64;
    [r * cos(phi), r * sin(phi), z]
}

/// Fibonacci point with a seeded tangential jitter of angular size `jitter`,
/// renormalized onto S².
pub fn jittered_fibonacci(i: usize, n: usize, jitter: f64, seed: u64) -> [f64; 3] {
    let p = fibonacci_sphere(i, n);
    let mut rng = rng_for(seed, i as u64);
    let d = uniform_s2(&mut rng);
    let t: f64 = rng.gen_range(0.0..jitter);
    let q = [p[0] + t * d[0], p[1] + t * d[1], p[2] + t * d[2]];
    let n = sqrt(q[0] * q[0] + q[1] * q[1] + q[2] * q[2]);
    [q[0] / n, q[1] / n, q[2] / n]
}

//! Great-circle fibrations of the 3-sphere and the integral geometry of
//! compact rank-one symmetric spaces.
//!
//! The crate is `no_std` (it needs `alloc` for sampled point sets) and is
//! organized bottom-up:
//!
//! - [`linalg`]: fixed-size vectors and matrices in dimensions 2 and 4,
//!   oriented planes of R⁴, principal angles and the splitting
//!   G(2,4) ≅ S² × S².
//! - [`fibration`]: Hopf and skew-Hopf fibrations, the correspondence
//!   between a 2×2 map without real eigenvalues and a block almost complex
//!   structure, fiber construction and the fibration (disjointness) check.
//! - [`grassmann`]: the base surface of a fibration inside S² × S², the
//!   distance-decreasing graph test and the projection / linear map / lift
//!   decomposition of skew-Hopf base surfaces.
//! - [`curvature`]: algebraic curvature tensors on R⁴ whose extremal planes
//!   are the fibers of a skew-Hopf fibration, and recovery of the fibration
//!   from such a tensor.
//! - [`volume`]: volume densities, the double-integral constant β(a, n),
//!   CROSS volumes, Hölder equality and Berger-sphere pinching arithmetic.
//!
//! All operations are pure functions of their inputs. Sampling routines take
//! an explicit seed and derive an independent stream per sample index, so
//! results do not depend on evaluation order.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod curvature;
mod error;
pub mod fibration;
pub mod grassmann;
pub mod linalg;
mod math;
pub mod sampling;
mod tol;
pub mod volume;

pub use error::{Error, Result};
pub use tol::Tolerances;

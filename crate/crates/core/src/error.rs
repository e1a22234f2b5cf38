use core::fmt;

/// Errors produced by constructions and verifications in this crate.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Error {
    /// Two vectors are (numerically) linearly dependent.
    DegeneratePlane,
    /// A 2×2 map has a real eigenvalue (discriminant `d` is not negative).
    RealEigenvalues {
        /// The eigenvalue discriminant (a − d)² + 4bc.
        discriminant: f64,
    },
    /// A matrix does not square to minus the identity.
    NotComplexStructure {
        /// Largest entry of J² + I.
        defect: f64,
    },
    /// An almost complex structure is not block diagonal in the 2+2 split.
    NotBlockForm {
        /// Largest entry of the off-diagonal blocks.
        off_block: f64,
    },
    /// The lower-left entry of the first diagonal block vanishes.
    DegenerateBlock,
    /// A basis matrix is singular or too badly conditioned.
    IllConditionedBasis {
        /// Ratio of largest to smallest singular value.
        condition: f64,
    },
    /// A vector expected to be of unit length is not.
    NotUnit {
        /// The offending norm.
        norm: f64,
    },
    /// No pair of orthogonal fibers found to within the search tolerance.
    SearchFailed {
        /// π/2 minus the best smallest principal angle reached.
        residual: f64,
    },
    /// A base-surface sample is single-valued over neither sphere factor.
    NotAGraph,
    /// All domain points of a base-surface sample coincide.
    DomainCollapse,
    /// Decomposition fit did not reach the required residual.
    FitFailed {
        /// Root-mean-square spherical error of the best fit.
        residual: f64,
    },
    /// Too few sample points for the requested operation.
    TooFewPoints {
        /// Points available.
        got: usize,
        /// Points required.
        need: usize,
    },
    /// A curvature tensor violates the first Bianchi identity.
    BianchiViolation {
        /// Largest cyclic sum over basis indices.
        defect: f64,
    },
    /// Curvature parameters outside their admissible range.
    InvalidCurvatureParameters,
    /// The quadratic form does not have a two-dimensional kernel.
    KernelDimension {
        /// Absolute eigenvalues of the form in increasing order.
        singular_values: [f64; 4],
    },
    /// Model-space parameters outside the admitted set.
    InvalidModel {
        /// Field dimension.
        a: u32,
        /// Projective dimension.
        n: u32,
    },
    /// Quadrature configuration with non-positive sizes or tolerance.
    InvalidQuadrature,
    /// Panel doubling did not reach the requested relative tolerance.
    NoConvergence {
        /// Last relative change between successive refinements.
        relative_change: f64,
    },
    /// The Hölder order an − a is below two.
    HolderOrder {
        /// The order an − a.
        order: u32,
    },
    /// A real argument outside its domain.
    OutOfRange,
}

/// Crate result alias.
pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Self::DegeneratePlane => write!(f, "vectors do not span a plane"),
            Self::RealEigenvalues { discriminant } => {
                write!(f, "map has real eigenvalues (discriminant {discriminant})")
            }
            Self::NotComplexStructure { defect } => {
                write!(f, "matrix does not square to -I (defect {defect})")
            }
            Self::NotBlockForm { off_block } => {
                write!(f, "structure is not block diagonal (off-block entry {off_block})")
            }
            Self::DegenerateBlock => write!(f, "first diagonal block has vanishing a21"),
            Self::IllConditionedBasis { condition } => {
                write!(f, "basis matrix is ill conditioned (condition number {condition})")
            }
            Self::NotUnit { norm } => write!(f, "expected a unit vector, got norm {norm}"),
            Self::SearchFailed { residual } => {
                write!(f, "no orthogonal fiber pair found (residual {residual})")
            }
            Self::NotAGraph => write!(f, "sample is not a graph over either sphere factor"),
            Self::DomainCollapse => write!(f, "all domain points coincide"),
            Self::FitFailed { residual } => {
                write!(f, "decomposition fit failed (rms residual {residual})")
            }
            Self::TooFewPoints { got, need } => {
                write!(f, "need at least {need} sample points, got {got}")
            }
            Self::BianchiViolation { defect } => {
                write!(f, "first Bianchi identity violated by {defect}")
            }
            Self::InvalidCurvatureParameters => {
                write!(f, "curvature parameters gamma and beta must be negative")
            }
            Self::KernelDimension { singular_values } => {
                write!(f, "quadratic form kernel is not two-dimensional ({singular_values:?})")
            }
            Self::InvalidModel { a, n } => write!(f, "no model space for a = {a}, n = {n}"),
            Self::InvalidQuadrature => write!(f, "invalid quadrature configuration"),
            Self::NoConvergence { relative_change } => {
                write!(f, "quadrature did not converge (relative change {relative_change})")
            }
            Self::HolderOrder { order } => {
                write!(f, "Hölder order an - a = {order} must be at least 2")
            }
            Self::OutOfRange => write!(f, "argument out of range"),
        }
    }
}

impl core::error::Error for Error {}

//! Hopf and skew-Hopf fibrations of S³.
//!
//! A skew-Hopf fibration is cut out by the invariant planes `span(x, Jx)` of
//! an almost complex structure `J`. In a special orthonormal basis, where
//! `span(e1, e2)` and `span(e3, e4)` are fibers, `J` is block diagonal and the
//! fibration is equivalently described by a 2×2 map `F` without real
//! eigenvalues: the fiber through `λ = (1, 0, λ₃, λ₄)` is spanned by `λ` and
//! `h = (0, 1, F(λ₃, λ₄))`.

use alloc::vec::Vec;

use crate::grassmann::{base_surface, gage_decompose};
use crate::linalg::{
    eig2_discriminant, gram_schmidt_plane, principal_angles, stacked_min_singular_value, Mat2, Mat4,
    OrientedPlane2, Vec4,
};
use crate::math::{cos, sin, sqrt, FRAC_PI_2, PI};
use crate::sampling::{rng_for, uniform_s3};
use crate::{Error, Result, Tolerances};

/// Discriminants at or above this value count as real eigenvalues.
pub const DISCRIMINANT_CUTOFF: f64 = -1e-12;
const SQUARE_TOL: f64 = 1e-10;
const BLOCK_TOL: f64 = 1e-10;
const A21_TOL: f64 = 1e-12;
const MAX_CONDITION: f64 = 1e8;
const UNIT_TOL: f64 = 1e-10;
/// `orthogonal_fiber_pair` gives up above this residual.
pub const ORTHOGONAL_SEARCH_TOL: f64 = 1e-4;

/// A linear operator `J` on R⁴ with `J² = −I`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AlmostComplexStructure(Mat4);

impl AlmostComplexStructure {
    pub fn new(j: Mat4) -> Result<Self> {
        let defect = (j * j).max_abs_diff(&(-Mat4::identity()));
        if !(defect <= SQUARE_TOL) {
            return Err(Error::NotComplexStructure { defect });
        }
        Ok(Self(j))
    }

    pub fn matrix(&self) -> &Mat4 {
        &self.0
    }

    pub fn apply(&self, x: &Vec4) -> Vec4 {
        self.0.apply(x)
    }

    /// Conjugate `g J g⁻¹`, again an almost complex structure.
    pub fn conjugated(&self, g: &Mat4) -> Result<Self> {
        let inv = g.inverse().ok_or(Error::IllConditionedBasis { condition: f64::INFINITY })?;
        Self::new(*g * self.0 * inv)
    }
}

/// The coordinate form of a skew-Hopf fibration in a special basis: a 2×2
/// map without real eigenvalues.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PhiMap(Mat2);

impl PhiMap {
    /// Accepts `F` only if its eigenvalue discriminant is below `-1e-12`.
    pub fn new(f: Mat2) -> Result<Self> {
        let discriminant = eig2_discriminant(&f);
        if !(discriminant < DISCRIMINANT_CUTOFF) || !f.is_finite() {
            return Err(Error::RealEigenvalues { discriminant });
        }
        Ok(Self(f))
    }

    /// Wraps `F` without checking the discriminant.
    ///
    /// Only meant for probing the verifiers with maps that have real
    /// eigenvalues; such a map does not define a fibration and every
    /// construction that needs one reports [`Error::RealEigenvalues`].
    pub fn unchecked(f: Mat2) -> Self {
        Self(f)
    }

    pub fn matrix(&self) -> &Mat2 {
        &self.0
    }

    pub fn discriminant(&self) -> f64 {
        eig2_discriminant(&self.0)
    }

    /// Whether the map passes the constructor's discriminant test.
    pub fn is_valid(&self) -> bool {
        self.discriminant() < DISCRIMINANT_CUTOFF
    }

    /// `(h₃, h₄) = F(λ₃, λ₄)`.
    pub fn apply(&self, lambda: [f64; 2]) -> [f64; 2] {
        self.0.apply(lambda)
    }
}

/// The complex structure `J e₁ = e₂, J e₂ = −e₁, J e₃ = e₄, J e₄ = −e₃`.
pub fn hopf_structure() -> AlmostComplexStructure {
    let rot = Mat2::new(0.0, -1.0, 1.0, 0.0);
    AlmostComplexStructure(Mat4::block_diag(&rot, &rot))
}

/// Block almost complex structure whose fibration has φ-map `F`.
///
/// With `s = √(−D)`: `a11 = −a22 = −(a+d)/s`, `a12 = 2(bc−ad)/s`,
/// `a21 = 2/s` in the upper block and `a33 = −a44 = (a−d)/s`, `a34 = 2b/s`,
/// `a43 = 2c/s` in the lower one.
pub fn phi_to_structure(f: &PhiMap) -> Result<AlmostComplexStructure> {
    let discriminant = f.discriminant();
    if !(discriminant < DISCRIMINANT_CUTOFF) {
        return Err(Error::RealEigenvalues { discriminant });
    }
    let Mat2 { a, b, c, d } = *f.matrix();
    let s = sqrt(-discriminant);
    let upper = Mat2::new(-(a + d) / s, 2.0 * (b * c - a * d) / s, 2.0 / s, (a + d) / s);
    let lower = Mat2::new((a - d) / s, 2.0 * b / s, 2.0 * c / s, -(a - d) / s);
    AlmostComplexStructure::new(Mat4::block_diag(&upper, &lower))
}

/// φ-map of a block almost complex structure:
/// `F = [[a33 − a11, a34], [a43, a44 − a11]] / a21`.
///
/// `a21` cannot vanish for a genuine structure: a real triangular 2×2 block
/// has real eigenvalues and cannot square to `−I`. A vanishing `a21` is
/// still reported instead of divided by.
pub fn structure_to_phi(j: &AlmostComplexStructure) -> Result<PhiMap> {
    let m = j.matrix();
    let off_block = m.off_block_max();
    if off_block > BLOCK_TOL {
        return Err(Error::NotBlockForm { off_block });
    }
    let (a11, a21) = (m.get(0, 0), m.get(1, 0));
    if a21.abs() < A21_TOL {
        return Err(Error::DegenerateBlock);
    }
    let f = Mat2::new(
        (m.get(2, 2) - a11) / a21,
        m.get(2, 3) / a21,
        m.get(3, 2) / a21,
        (m.get(3, 3) - a11) / a21,
    );
    PhiMap::new(f)
}

/// How a fibration is specified.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Representation {
    /// Fibers `span(x, J₀x)` of the standard complex structure.
    CanonicalHopf,
    /// Fibers `span(x, Jx)` of an arbitrary almost complex structure.
    SkewHopf(AlmostComplexStructure),
    /// φ-map in a special basis.
    SpecialBasis(PhiMap),
}

/// A great-circle fibration together with the basis its representation is
/// written in.
///
/// Fibers are computed in basis coordinates and always returned in ambient
/// coordinates: the ambient vector `x` has basis coordinates `M⁻¹ x`, where
/// the columns of `M` are the basis vectors.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GreatCircleFibration {
    representation: Representation,
    basis: Mat4,
    basis_inverse: Mat4,
}

impl GreatCircleFibration {
    pub fn canonical_hopf() -> Self {
        Self::from_parts(Representation::CanonicalHopf)
    }

    pub fn skew_hopf(j: AlmostComplexStructure) -> Self {
        Self::from_parts(Representation::SkewHopf(j))
    }

    pub fn special_basis(f: PhiMap) -> Self {
        Self::from_parts(Representation::SpecialBasis(f))
    }

    fn from_parts(representation: Representation) -> Self {
        Self { representation, basis: Mat4::identity(), basis_inverse: Mat4::identity() }
    }

    /// Re-expresses the representation in the basis given by the columns of
    /// `basis`, which must have condition number below `1e8`.
    pub fn with_basis(self, basis: Mat4) -> Result<Self> {
        let condition = basis.condition_number();
        if !(condition < MAX_CONDITION) {
            return Err(Error::IllConditionedBasis { condition });
        }
        let basis_inverse = basis.inverse().ok_or(Error::IllConditionedBasis { condition })?;
        Ok(Self { basis, basis_inverse, ..self })
    }

    pub fn representation(&self) -> &Representation {
        &self.representation
    }

    pub fn basis(&self) -> &Mat4 {
        &self.basis
    }

    /// The almost complex structure in basis coordinates, when one exists.
    pub fn structure(&self) -> Option<AlmostComplexStructure> {
        match self.representation {
            Representation::CanonicalHopf => Some(hopf_structure()),
            Representation::SkewHopf(j) => Some(j),
            Representation::SpecialBasis(f) => phi_to_structure(&f).ok(),
        }
    }

    fn to_ambient(&self, y: &Vec4) -> Vec4 {
        self.basis.apply(y)
    }

    fn to_basis(&self, x: &Vec4) -> Vec4 {
        self.basis_inverse.apply(x)
    }
}

/// The fiber through the unit vector `x`, as an oriented plane whose first
/// basis vector is `x`.
pub fn fiber_through(f: &GreatCircleFibration, x: &Vec4) -> Result<OrientedPlane2> {
    let norm = x.norm();
    if (norm - 1.0).abs() > UNIT_TOL {
        return Err(Error::NotUnit { norm });
    }
    let y = f.to_basis(x);
    let w = match f.structure() {
        Some(j) => j.apply(&y),
        None => match f.representation {
            Representation::SpecialBasis(phi) => chart_partner(&phi, &y)?,
            // structure() only fails for special-basis maps
            _ => unreachable!(),
        },
    };
    // J² = −I makes Jx independent of x; a failure here means the
    // representation is corrupt.
    gram_schmidt_plane(*x, f.to_ambient(&w))
}

/// Second spanning vector of the chart fiber through `y`, for maps that may
/// have real eigenvalues. Solves `(y₁ I + y₂ F) λ' = y'` for the fiber
/// `span(λ, h)` that contains `y = y₁ λ + y₂ h`.
fn chart_partner(phi: &PhiMap, y: &Vec4) -> Result<Vec4> {
    let (y1, y2) = (y[0], y[1]);
    if sqrt(y1 * y1 + y2 * y2) <= 1e-14 * y.norm() {
        // fiber span(e3, e4)
        return Ok(Vec4::new(0.0, 0.0, -y[3], y[2]));
    }
    let system = *phi.matrix() * y2 + Mat2::identity() * y1;
    let inv = system.inverse().ok_or(Error::DegeneratePlane)?;
    let lam = inv.apply([y[2], y[3]]);
    let h = phi.apply(lam);
    let lambda = Vec4::new(1.0, 0.0, lam[0], lam[1]);
    let h = Vec4::new(0.0, 1.0, h[0], h[1]);
    Ok(lambda * -y2 + h * y1)
}

/// The fiber `span(λ, h)` with `λ = (1, 0, λ₃, λ₄)` and
/// `h = (0, 1, F(λ₃, λ₄))`.
pub fn phi_fiber(f: &PhiMap, lambda3: f64, lambda4: f64) -> OrientedPlane2 {
    let h = f.apply([lambda3, lambda4]);
    gram_schmidt_plane(Vec4::new(1.0, 0.0, lambda3, lambda4), Vec4::new(0.0, 1.0, h[0], h[1]))
        .expect("first two coordinates of λ and h are independent")
}

/// Outcome of [`verify_fibration`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FibrationReport {
    /// No pair of sampled fibers meets outside the origin.
    pub clean: bool,
    /// Fiber pairs examined, including eigendirection probes.
    pub pairs: usize,
    /// Smallest singular value of the stacked bases over non-coincident pairs.
    pub min_separation_sv: f64,
    /// Base points of the first intersecting pair found.
    pub witness: Option<(Vec4, Vec4)>,
}

/// Samples pairs of base points on S³ and checks that their fibers are either
/// the same plane or meet only at the origin.
///
/// For a special-basis map with real eigenvalues, pairs of points along a real
/// eigendirection are probed as well; their fibers share the vector
/// `(−μ, 1, 0, 0)` for the eigenvalue `μ`.
pub fn verify_fibration(f: &GreatCircleFibration, pair_samples: usize, seed: u64, tol: &Tolerances) -> FibrationReport {
    let mut report = FibrationReport { clean: true, pairs: 0, min_separation_sv: f64::INFINITY, witness: None };
    for i in 0..pair_samples {
        let mut rng = rng_for(seed, i as u64);
        let x = uniform_s3(&mut rng);
        let y = uniform_s3(&mut rng);
        check_pair(f, x, y, tol, &mut report);
    }
    if let Representation::SpecialBasis(phi) = f.representation {
        for (x, y) in eigendirection_probes(f, &phi) {
            check_pair(f, x, y, tol, &mut report);
        }
    }
    report
}

fn check_pair(f: &GreatCircleFibration, x: Vec4, y: Vec4, tol: &Tolerances, report: &mut FibrationReport) {
    report.pairs += 1;
    let fibers = fiber_through(f, &x).and_then(|p| Ok((p, fiber_through(f, &y)?)));
    let sv = match fibers {
        Ok((p, q)) => {
            let (a_min, a_max) = principal_angles(&p, &q);
            if a_min < tol.separation && a_max < tol.separation {
                return;
            }
            stacked_min_singular_value(&p, &q)
        }
        // an undetermined fiber only happens for maps with real eigenvalues
        Err(_) => 0.0,
    };
    report.min_separation_sv = report.min_separation_sv.min(sv);
    if sv <= tol.separation {
        report.clean = false;
        report.witness.get_or_insert((x, y));
    }
}

fn eigendirection_probes(f: &GreatCircleFibration, phi: &PhiMap) -> Vec<(Vec4, Vec4)> {
    let Some((mu1, mu2)) = phi.matrix().real_eigenvalues() else {
        return Vec::new();
    };
    let m = phi.matrix();
    let mut probes = Vec::new();
    for mu in [mu1, mu2] {
        let v1 = [m.b, mu - m.a];
        let v2 = [mu - m.d, m.c];
        let n1 = v1[0] * v1[0] + v1[1] * v1[1];
        let n2 = v2[0] * v2[0] + v2[1] * v2[1];
        let v = if n1 >= n2 && n1 > 0.0 {
            v1
        } else if n2 > 0.0 {
            v2
        } else {
            [1.0, 0.0]
        };
        let point = |t: f64| {
            let y = Vec4::new(1.0, 0.0, t * v[0], t * v[1]);
            f.to_ambient(&y).normalized().expect("basis is invertible")
        };
        probes.push((point(1.0), point(2.0)));
    }
    probes
}

/// A pair of orthogonal fibers and how far the search is from exact
/// orthogonality.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OrthogonalPair {
    pub first: OrientedPlane2,
    pub second: OrientedPlane2,
    /// `π/2 − α_min` for the returned pair.
    pub residual: f64,
}

/// Searches for two fibers whose principal angles are both `π/2`.
///
/// Every great circle meets the great 2-sphere `{y₄ = 0}` of basis
/// coordinates, so base points are parametrized there by spherical angles.
/// Candidates are the fibers through the first and third basis vectors (an
/// orthogonal pair whenever the basis is special) and a `grid × grid` lattice
/// of angles; the best pair is refined by compass search.
pub fn orthogonal_fiber_pair(f: &GreatCircleFibration, search_grid: usize) -> Result<OrthogonalPair> {
    let g = search_grid.max(2);
    let mut candidates: Vec<[f64; 2]> = Vec::with_capacity(g * g + 2);
    candidates.push([FRAC_PI_2, 0.0]);
    candidates.push([0.0, 0.0]);
    for i in 0..g {
        for j in 0..g {
            candidates.push([(i as f64 + 0.5) * PI / g as f64, j as f64 * 2.0 * PI / g as f64]);
        }
    }
    let mut fibers: Vec<Option<OrientedPlane2>> =
        candidates.iter().map(|&[t, p]| fiber_through(f, &base_point(f, t, p)).ok()).collect();
    // the seeds exactly, without trigonometric roundoff
    for (slot, k) in [(0, 0), (1, 2)] {
        let x = f.to_ambient(&Vec4::basis(k)).normalized().expect("basis is invertible");
        fibers[slot] = fiber_through(f, &x).ok();
    }

    let mut best = (f64::INFINITY, 0, 0);
    for i in 0..fibers.len() {
        let Some(p) = &fibers[i] else { continue };
        for (j, q) in fibers.iter().enumerate().skip(i + 1) {
            let Some(q) = q else { continue };
            let residual = gram_norm(p, q);
            if residual < best.0 {
                best = (residual, i, j);
            }
        }
    }
    if !best.0.is_finite() {
        return Err(Error::SearchFailed { residual: f64::INFINITY });
    }

    let objective = |x: &[f64; 4]| -> f64 {
        let p = fiber_through(f, &base_point(f, x[0], x[1]));
        let q = fiber_through(f, &base_point(f, x[2], x[3]));
        match (p, q) {
            (Ok(p), Ok(q)) => gram_norm(&p, &q),
            _ => f64::INFINITY,
        }
    };
    let (ci, cj) = (candidates[best.1], candidates[best.2]);
    let mut x = [ci[0], ci[1], cj[0], cj[1]];
    let mut value = best.0;
    let mut step = 0.5 * PI / g as f64;
    let mut evaluations = 0;
    while value > 1e-15 && step > 1e-13 && evaluations < 40_000 {
        let mut improved = false;
        for k in 0..4 {
            for sign in [1.0, -1.0] {
                let mut trial = x;
                trial[k] += sign * step;
                let v = objective(&trial);
                evaluations += 1;
                if v < value {
                    x = trial;
                    value = v;
                    improved = true;
                }
            }
        }
        if !improved {
            step *= 0.5;
        }
    }
    let (first, second) = if value < best.0 {
        (fiber_through(f, &base_point(f, x[0], x[1]))?, fiber_through(f, &base_point(f, x[2], x[3]))?)
    } else {
        (fibers[best.1].expect("scored"), fibers[best.2].expect("scored"))
    };
    let residual = (FRAC_PI_2 - principal_angles(&first, &second).0).max(0.0);
    if residual > ORTHOGONAL_SEARCH_TOL {
        return Err(Error::SearchFailed { residual });
    }
    Ok(OrthogonalPair { first, second, residual })
}

fn gram_norm(p: &OrientedPlane2, q: &OrientedPlane2) -> f64 {
    let (pu, pv, qu, qv) = (p.u(), p.v(), q.u(), q.v());
    let g = [pu.dot(&qu), pu.dot(&qv), pv.dot(&qu), pv.dot(&qv)];
    sqrt(g.iter().map(|x| x * x).sum())
}

fn base_point(f: &GreatCircleFibration, theta: f64, phi: f64) -> Vec4 {
    let y = Vec4::new(sin(theta) * cos(phi), sin(theta) * sin(phi), cos(theta), 0.0);
    f.to_ambient(&y).normalized().expect("basis is invertible")
}

/// Sample size and seed used by [`rank_stratum`].
pub const RANK_SAMPLE_POINTS: usize = 240;
const RANK_SEED: u64 = 0x5EED;

/// Rank (0, 1 or 2) of the linear map in the projection / linear map / lift
/// decomposition of the fibration's base surface. Rank 0 is exactly the Hopf
/// case `F = ±[[0, −1], [1, 0]]`.
pub fn rank_stratum(f: &PhiMap) -> Result<u8> {
    let fibration = GreatCircleFibration::special_basis(*f);
    let sample = base_surface(&fibration, RANK_SAMPLE_POINTS, RANK_SEED)?;
    Ok(gage_decompose(&sample, &Tolerances::default())?.rank)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hopf_phi() -> PhiMap {
        PhiMap::new(Mat2::new(0.0, -1.0, 1.0, 0.0)).unwrap()
    }

    fn same_plane(p: &OrientedPlane2, q: &OrientedPlane2, tol: f64) -> bool {
        let (a, b) = principal_angles(p, q);
        a < tol && b < tol
    }

    #[test]
    fn hopf_structure_examples() {
        let j = hopf_structure();
        assert_eq!(j.apply(&Vec4::basis(0)), Vec4::basis(1));
        assert_eq!(*j.matrix() * *j.matrix(), -Mat4::identity());
        let f = structure_to_phi(&j).unwrap();
        assert_eq!(*f.matrix(), Mat2::new(0.0, -1.0, 1.0, 0.0));
    }

    #[test]
    fn phi_to_structure_examples() {
        let j = phi_to_structure(&hopf_phi()).unwrap();
        assert!(j.matrix().max_abs_diff(hopf_structure().matrix()) < 1e-15);

        // D = −16, √(−D) = 4
        let f = PhiMap::new(Mat2::new(0.0, -4.0, 1.0, 0.0)).unwrap();
        let j = phi_to_structure(&f).unwrap();
        let expected = Mat4::block_diag(&Mat2::new(0.0, -2.0, 0.5, 0.0), &Mat2::new(0.0, -2.0, 0.5, 0.0));
        assert!(j.matrix().max_abs_diff(&expected) < 1e-15);
        assert!((*j.matrix() * *j.matrix()).max_abs_diff(&-Mat4::identity()) < 1e-15);

        let id = PhiMap::unchecked(Mat2::identity());
        assert!(matches!(phi_to_structure(&id), Err(Error::RealEigenvalues { .. })));
        assert!(matches!(PhiMap::new(Mat2::identity()), Err(Error::RealEigenvalues { .. })));
    }

    #[test]
    fn structure_to_phi_round_trip_and_errors() {
        let f = PhiMap::new(Mat2::new(1.0, -3.0, 2.0, -1.0)).unwrap();
        let back = structure_to_phi(&phi_to_structure(&f).unwrap()).unwrap();
        assert!(back.matrix().max_abs_diff(f.matrix()) < 1e-12);

        let g = Mat4([
            [1.0, 0.2, 0.3, 0.0],
            [0.0, 1.0, 0.5, 0.1],
            [0.4, 0.0, 1.0, 0.0],
            [0.0, 0.3, 0.0, 1.0],
        ]);
        let skew = hopf_structure().conjugated(&g).unwrap();
        assert!(matches!(structure_to_phi(&skew), Err(Error::NotBlockForm { .. })));
    }

    #[test]
    fn almost_complex_structure_rejects_non_square_roots() {
        assert!(matches!(
            AlmostComplexStructure::new(Mat4::identity()),
            Err(Error::NotComplexStructure { .. })
        ));
    }

    #[test]
    fn hopf_fibers_through_basis_vectors() {
        let h = GreatCircleFibration::canonical_hopf();
        let p = fiber_through(&h, &Vec4::basis(0)).unwrap();
        assert!(same_plane(&p, &OrientedPlane2::coordinate(0, 1), 1e-15));
        let p = fiber_through(&h, &Vec4::basis(2)).unwrap();
        assert!(same_plane(&p, &OrientedPlane2::coordinate(2, 3), 1e-15));
        assert!(matches!(fiber_through(&h, &(Vec4::basis(0) * 2.0)), Err(Error::NotUnit { .. })));
    }

    #[test]
    fn special_basis_fiber_matches_chart_fiber() {
        let f = PhiMap::new(Mat2::new(1.0, -3.0, 2.0, -1.0)).unwrap();
        let fib = GreatCircleFibration::special_basis(f);
        let (l3, l4) = (0.7, -1.3);
        let x = Vec4::new(1.0, 0.0, l3, l4).normalized().unwrap();
        let p = fiber_through(&fib, &x).unwrap();
        // h = (0, 1, a λ3 + b λ4, c λ3 + d λ4) = (0, 1, 4.6, 2.7)
        let q = gram_schmidt_plane(Vec4::new(1.0, 0.0, l3, l4), Vec4::new(0.0, 1.0, 4.6, 2.7)).unwrap();
        assert!(same_plane(&p, &q, 1e-10));
        // orientation agrees too: a21 > 0
        assert_eq!(p.split().unwrap().xi_plus.map(|v| (v * 1e9).round()), q.split().unwrap().xi_plus.map(|v| (v * 1e9).round()));
    }

    #[test]
    fn phi_fiber_examples() {
        let p = phi_fiber(&hopf_phi(), 0.0, 0.0);
        assert!(same_plane(&p, &OrientedPlane2::coordinate(0, 1), 1e-15));
        let p = phi_fiber(&hopf_phi(), 1.0, 0.0);
        let q = gram_schmidt_plane(Vec4::new(1.0, 0.0, 1.0, 0.0), Vec4::new(0.0, 1.0, 0.0, 1.0)).unwrap();
        assert!(same_plane(&p, &q, 1e-15));
    }

    #[test]
    fn verify_fibration_examples() {
        let tol = Tolerances::default();
        let r = verify_fibration(&GreatCircleFibration::canonical_hopf(), 1000, 1, &tol);
        assert!(r.clean && r.witness.is_none() && r.pairs == 1000);

        let f = PhiMap::new(Mat2::new(0.0, -4.0, 1.0, 0.0)).unwrap();
        let r = verify_fibration(&GreatCircleFibration::special_basis(f), 1000, 2, &tol);
        assert!(r.clean, "{r:?}");
        assert!(r.min_separation_sv > 1e-8);

        let bad = PhiMap::unchecked(Mat2::new(2.0, 0.0, 0.0, 1.0));
        let r = verify_fibration(&GreatCircleFibration::special_basis(bad), 1000, 3, &tol);
        assert!(!r.clean);
        let (x, y) = r.witness.unwrap();
        let fib = GreatCircleFibration::special_basis(bad);
        let p = fiber_through(&fib, &x).unwrap();
        let q = fiber_through(&fib, &y).unwrap();
        assert!(stacked_min_singular_value(&p, &q) < 1e-8);
    }

    #[test]
    fn orthogonal_pair_of_hopf_and_special_bases() {
        let e12 = OrientedPlane2::coordinate(0, 1);
        let e34 = OrientedPlane2::coordinate(2, 3);
        let pair = orthogonal_fiber_pair(&GreatCircleFibration::canonical_hopf(), 8).unwrap();
        assert!(pair.residual < 1e-8);
        assert!(same_plane(&pair.first, &e12, 1e-12) && same_plane(&pair.second, &e34, 1e-12));

        let f = PhiMap::new(Mat2::new(1.0, -3.0, 2.0, -1.0)).unwrap();
        let pair = orthogonal_fiber_pair(&GreatCircleFibration::special_basis(f), 8).unwrap();
        assert!(same_plane(&pair.first, &e12, 1e-12) && same_plane(&pair.second, &e34, 1e-12));
    }

    #[test]
    fn orthogonal_pair_found_by_search_for_non_block_structure() {
        let g = Mat4([
            [1.0, 0.2, 0.3, 0.0],
            [0.0, 1.1, 0.5, 0.1],
            [0.4, 0.0, 0.9, 0.0],
            [0.0, 0.3, 0.0, 1.0],
        ]);
        let j = hopf_structure().conjugated(&g).unwrap();
        let pair = orthogonal_fiber_pair(&GreatCircleFibration::skew_hopf(j), 12).unwrap();
        assert!(pair.residual < 1e-4, "{}", pair.residual);
        let (a, b) = principal_angles(&pair.first, &pair.second);
        assert!(FRAC_PI_2 - a < 1e-4 && FRAC_PI_2 - b < 1e-4);
    }
}

mod common;

use common::{cloud_rank, random_phi, random_real_phi, random_rotation};
use greatcircle::fibration::{
    fiber_through, orthogonal_fiber_pair, phi_fiber, phi_to_structure, rank_stratum,
    structure_to_phi, verify_fibration, GreatCircleFibration, PhiMap,
};
use greatcircle::grassmann::base_surface;
use greatcircle::linalg::{principal_angles, Mat2, Mat4, OrientedPlane2, Vec4};
use greatcircle::sampling::{rng_for, uniform_s3};
use greatcircle::Tolerances;
use proptest::prelude::*;

fn same_plane(p: &OrientedPlane2, q: &OrientedPlane2, tol: f64) -> bool {
    let (a, b) = principal_angles(p, q);
    a < tol && b < tol
}

#[test]
fn round_trip_over_random_maps() {
    let mut rng = rng_for(11, 0);
    for _ in 0..1000 {
        let f = random_phi(&mut rng, 1e-6);
        let j = phi_to_structure(&f).unwrap();
        let square = *j.matrix() * *j.matrix();
        assert!(square.max_abs_diff(&-Mat4::identity()) <= 1e-10);
        let back = structure_to_phi(&j).unwrap();
        assert!(back.matrix().max_abs_diff(f.matrix()) <= 1e-12, "{:?} vs {:?}", back, f);
    }
}

fn valid_phi() -> impl Strategy<Value = PhiMap> {
    prop::array::uniform4(-5.0f64..5.0).prop_filter_map("complex eigenvalues", |e| {
        PhiMap::new(Mat2::new(e[0], e[1], e[2], e[3])).ok().filter(|f| f.discriminant() < -1e-3)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn points_of_a_fiber_give_the_same_fiber(f in valid_phi(), seed in any::<u64>(), t in 0.0f64..6.3) {
        let fib = GreatCircleFibration::special_basis(f);
        let x = uniform_s3(&mut rng_for(seed, 0));
        let p = fiber_through(&fib, &x).unwrap();
        let y = p.u() * t.cos() + p.v() * t.sin();
        let q = fiber_through(&fib, &y).unwrap();
        prop_assert!(same_plane(&p, &q, 1e-10));
    }

    #[test]
    fn phi_fiber_agrees_with_structure_fiber(f in valid_phi(), l3 in -3.0f64..3.0, l4 in -3.0f64..3.0) {
        let fib = GreatCircleFibration::special_basis(f);
        let x = Vec4::new(1.0, 0.0, l3, l4).normalized().unwrap();
        prop_assert!(same_plane(&phi_fiber(&f, l3, l4), &fiber_through(&fib, &x).unwrap(), 1e-10));
    }

    #[test]
    fn hopf_fibers_are_isoclinic(seed in any::<u64>()) {
        let h = GreatCircleFibration::canonical_hopf();
        let mut rng = rng_for(seed, 0);
        let p = fiber_through(&h, &uniform_s3(&mut rng)).unwrap();
        let q = fiber_through(&h, &uniform_s3(&mut rng)).unwrap();
        let (a, b) = principal_angles(&p, &q);
        prop_assert!((a - b).abs() < 1e-10);
    }

    #[test]
    fn rotated_fibration_rotates_fibers(f in valid_phi(), seed in any::<u64>()) {
        let mut rng = rng_for(seed, 0);
        let q = random_rotation(&mut rng);
        let fib = GreatCircleFibration::special_basis(f);
        let rotated = fib.with_basis(q).unwrap();
        let x = uniform_s3(&mut rng);
        let p = fiber_through(&fib, &x).unwrap().transformed(&q).unwrap();
        let r = fiber_through(&rotated, &q.apply(&x)).unwrap();
        prop_assert!(same_plane(&p, &r, 1e-10));
    }
}

#[test]
fn verify_is_clean_for_valid_maps_and_finds_witnesses_otherwise() {
    let tol = Tolerances::default();
    let mut rng = rng_for(12, 0);
    for k in 0..10 {
        let f = random_phi(&mut rng, 1e-3);
        let r = verify_fibration(&GreatCircleFibration::special_basis(f), 500, k, &tol);
        assert!(r.clean, "{f:?}: {r:?}");
        let bad = random_real_phi(&mut rng);
        let r = verify_fibration(&GreatCircleFibration::special_basis(bad), 500, k, &tol);
        assert!(!r.clean && r.witness.is_some(), "{bad:?}");
    }
}

#[test]
fn orthogonal_pair_follows_a_rotated_special_basis() {
    let mut rng = rng_for(13, 0);
    let e12 = OrientedPlane2::coordinate(0, 1);
    let e34 = OrientedPlane2::coordinate(2, 3);
    for _ in 0..5 {
        let q = random_rotation(&mut rng);
        let f = PhiMap::new(Mat2::new(1.0, -3.0, 2.0, -1.0)).unwrap();
        let fib = GreatCircleFibration::special_basis(f).with_basis(q).unwrap();
        let pair = orthogonal_fiber_pair(&fib, 8).unwrap();
        assert!(pair.residual < 1e-8);
        assert!(same_plane(&pair.first, &e12.transformed(&q).unwrap(), 1e-10));
        assert!(same_plane(&pair.second, &e34.transformed(&q).unwrap(), 1e-10));
    }
}

/// Rank of the image factor measured from the spread of the image cloud alone.
fn rank_oracle(f: &PhiMap) -> usize {
    let s = base_surface(&GreatCircleFibration::special_basis(*f), 240, 0x0AC1E).unwrap();
    let minus: Vec<_> = s.points.iter().map(|p| p.xi_minus).collect();
    let plus: Vec<_> = s.points.iter().map(|p| p.xi_plus).collect();
    cloud_rank(&minus, 1e-10).min(cloud_rank(&plus, 1e-10))
}

#[test]
fn rank_strata_match_the_point_cloud_oracle() {
    let hopf = PhiMap::new(Mat2::new(0.0, -1.0, 1.0, 0.0)).unwrap();
    assert_eq!(rank_stratum(&hopf).unwrap(), 0);
    assert_eq!(rank_oracle(&hopf), 0);
    let anti = PhiMap::new(Mat2::new(0.0, 1.0, -1.0, 0.0)).unwrap();
    assert_eq!(rank_stratum(&anti).unwrap(), 0);

    for (e, expected) in [([0.0, -4.0, 1.0, 0.0], 1), ([1.0, -3.0, 2.0, -1.0], 2), ([0.0, -2.0, 3.0, 0.0], 2)] {
        let f = PhiMap::new(Mat2::new(e[0], e[1], e[2], e[3])).unwrap();
        assert_eq!(rank_oracle(&f), expected, "{e:?}");
        assert_eq!(rank_stratum(&f).unwrap() as usize, expected, "{e:?}");
    }
}

#[test]
fn rank_zero_only_for_hopf_maps() {
    let mut rng = rng_for(14, 0);
    for _ in 0..10 {
        let f = random_phi(&mut rng, 1e-2);
        let is_hopf = f.matrix().max_abs_diff(&Mat2::new(0.0, -1.0, 1.0, 0.0)) < 1e-12
            || f.matrix().max_abs_diff(&Mat2::new(0.0, 1.0, -1.0, 0.0)) < 1e-12;
        assert!(!is_hopf);
        let r = rank_stratum(&f).unwrap();
        assert!(r > 0, "{f:?}");
        assert_eq!(r as usize, rank_oracle(&f), "{f:?}");
    }
}

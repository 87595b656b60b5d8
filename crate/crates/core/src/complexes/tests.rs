use super::*;
use crate::hopf::{builtin_finite, BeAlgebra, FiniteHopf};
use crate::lincomb::LinComb;
use crate::scalar::{parse_scalar, Scalar};
use crate::yd::{Bimodule, FiniteYd, TwistYd};

fn s(n: i64) -> Scalar {
    Scalar::from_i64(n)
}

fn twist(h: &FiniteHopf, m: &Bimodule) -> FiniteYd {
    FiniteYd::materialize(&TwistYd::new(h, m)).unwrap()
}

/// Number of orbits of `G` on `G^n` under simultaneous conjugation,
/// `|G|⁻¹ Σ_g |C(g)|^n` by Burnside.
fn conjugation_orbits(centralizers: &[usize], n: u32) -> usize {
    let total: usize = centralizers.iter().map(|c| c.pow(n)).sum();
    total / centralizers.len()
}

#[test]
fn cyclic_group_trivial_coefficients() {
    let h = builtin_finite("CZ2").unwrap();
    let gs = gs_complex(&FiniteYd::trivial(&h), 3).unwrap();
    assert_eq!(gs.complex.dims(), &[1, 2, 4, 8, 16]);
    let r = gs.report();
    assert_eq!(r.homology, vec![1, 0, 0, 0]);
    assert!(r.d_squared_zero);
}

#[test]
fn finite_groups_have_no_higher_cohomology() {
    for (name, top) in [("CZ2", 3), ("CZ3", 3), ("CZ4", 2), ("CS3", 2)] {
        let h = builtin_finite(name).unwrap();
        let r = gs_complex(&FiniteYd::trivial(&h), top).unwrap().report();
        let mut want = vec![0; top + 1];
        want[0] = 1;
        assert_eq!(r.homology, want, "{}", name);
    }
}

#[test]
fn max_degree_zero_is_rejected() {
    let h = builtin_finite("CZ2").unwrap();
    assert!(gs_complex(&FiniteYd::trivial(&h), 0).is_err());
    assert!(hochschild_complex(&h, &Bimodule::trivial(&h), 0).is_err());
}

#[test]
fn corrupted_sign_is_located() {
    let h = builtin_finite("CS3").unwrap();
    let gs = gs_complex(&twist(&h, &Bimodule::regular(&h)), 2).unwrap();
    assert!(crate::linalg::d_squared_check(&gs.complex).unwrap().pass);
    let mut ds = gs.complex.differentials().to_vec();
    let (r, c, v) = ds[1]
        .entries()
        .map(|(r, c, v)| (r, c, v.clone()))
        .find(|_| true)
        .unwrap();
    ds[1].set(r, c, -v);
    let bad = crate::linalg::CochainComplex::new_unchecked(gs.complex.dims().to_vec(), ds).unwrap();
    let rep = crate::linalg::d_squared_check(&bad).unwrap();
    assert!(!rep.pass);
    assert!(matches!(rep.failing_position, Some(0) | Some(1)));
}

#[test]
fn function_algebra_dims_count_conjugation_orbits() {
    let h = builtin_finite("OS3").unwrap();
    let gs = gs_complex(&FiniteYd::trivial(&h), 2).unwrap();
    // centralizer orders of the six elements of S3
    let cent = [6, 2, 2, 2, 3, 3];
    let want: Vec<usize> = (0..4).map(|n| conjugation_orbits(&cent, n)).collect();
    assert_eq!(gs.complex.dims(), &want[..]);
    assert_eq!(want, vec![1, 3, 11, 49]);
    assert_eq!(gs.report().homology, vec![1, 0, 0]);
}

#[test]
fn group_algebra_trivial_coefficients() {
    let h = builtin_finite("CS3").unwrap();
    let gs = gs_complex(&FiniteYd::trivial(&h), 2).unwrap();
    assert_eq!(gs.complex.dims(), &[1, 6, 36, 216]);
    assert_eq!(gs.report().homology, vec![1, 0, 0]);
}

#[test]
fn non_cosemisimple_is_rejected() {
    let h = builtin_finite("CZ2").unwrap();
    let mut t = h.tables().clone();
    t.haar = None;
    let h = FiniteHopf::from_tables(t).unwrap();
    assert!(matches!(
        gs_complex(&FiniteYd::trivial(&h), 1),
        Err(crate::Error::Invalid(_))
    ));
}

#[test]
fn budget_and_tuple_indexing() {
    assert!(cochains::check_against("C^3", 16, 16).is_ok());
    assert!(matches!(
        cochains::check_against("C^3", 17, 16),
        Err(crate::Error::Budget {
            needed: 17,
            budget: 16,
            ..
        })
    ));
    assert_eq!(pow(6, 3), 216);
    assert_eq!(tuple_of(index_of(&[2, 0, 5], 6), 6, 3), vec![2, 0, 5]);
}

#[test]
fn hochschild_of_cyclic_group() {
    let h = builtin_finite("CZ2").unwrap();
    let m = Bimodule::trivial(&h);
    let c = classical_hochschild_complex(&h, &m, 3).unwrap();
    assert_eq!(&c.homology_dims()[..4], &[1, 0, 0, 0]);
    let e = hochschild_complex(&h, &m, 3).unwrap();
    assert_eq!(&e.homology_dims()[..4], &[1, 0, 0, 0]);
}

#[test]
fn separable_algebra_has_no_higher_hochschild_cohomology() {
    let h = builtin_finite("CZ2").unwrap();
    let m = Bimodule::regular(&h);
    let c = hochschild_complex(&h, &m, 3).unwrap();
    assert_eq!(&c.homology_dims()[..4], &[2, 0, 0, 0]);
    assert!(hochschild_homotopy_check(&h, &m, 3).unwrap().pass());
}

#[test]
fn regular_bimodule_center() {
    // HH^0(A, A) is the center: 3-dimensional for CS3 and 6 for OS3
    for (name, center) in [("CS3", 3), ("OS3", 6), ("CZ3", 3)] {
        let h = builtin_finite(name).unwrap();
        let m = Bimodule::regular(&h);
        let c = classical_hochschild_complex(&h, &m, 1).unwrap();
        assert_eq!(c.homology_dims()[..2], [center, 0], "{}", name);
    }
}

#[test]
fn integral_is_a_contracting_homotopy() {
    for name in ["CZ2", "CS3", "OS3"] {
        let h = builtin_finite(name).unwrap();
        let r = hochschild_homotopy_check(&h, &Bimodule::regular(&h), 2).unwrap();
        assert!(r.pass(), "{} {:?}", name, r);
    }
}

#[test]
fn colinear_cochains_match_hochschild() {
    for name in ["CS3", "OS3", "CZ4"] {
        let h = builtin_finite(name).unwrap();
        for m in [
            Bimodule::trivial(&h),
            Bimodule::regular(&h),
            Bimodule::random(&h, 7).unwrap(),
        ] {
            let r = gs_equals_hochschild_check(&h, &m, 2).unwrap();
            assert!(r.pass(), "{} {} {:?}", name, m.name, r);
        }
    }
}

#[test]
fn bad_action_breaks_d_squared() {
    // left multiplication used as a right action of a noncommutative algebra
    let h = builtin_finite("CS3").unwrap();
    let reg = Bimodule::regular(&h);
    let bar = BarDifferential::with_counit(&h, 6, |x, a| reg.left_act(a, &LinComb::basis(x)));
    let d0 = bar.ambient_matrix(0).unwrap();
    let d1 = bar.ambient_matrix(1).unwrap();
    assert!(!d1.mul(&d0).unwrap().is_zero());
    let good = Bimodule::regular(&h);
    let bar = BarDifferential::with_counit(&h, 6, |x, a| good.right_act(&LinComb::basis(x), a));
    let d0 = bar.ambient_matrix(0).unwrap();
    let d1 = bar.ambient_matrix(1).unwrap();
    assert!(d1.mul(&d0).unwrap().is_zero());
}

#[test]
fn averaging_projects_onto_colinear_cochains() {
    for name in ["CZ2", "CS3", "OS3"] {
        let h = builtin_finite(name).unwrap();
        let v = twist(&h, &Bimodule::trivial(&h));
        for n in 1..=2 {
            let r = averaging_check(&v, n, 50, 11).unwrap();
            assert!(r.pass(), "{} n={} {:?}", name, n, r);
            assert!(r.kac);
        }
    }
}

#[test]
fn colinear_space_coordinates_round_trip() {
    let h = builtin_finite("OS3").unwrap();
    let v = twist(&h, &Bimodule::trivial(&h));
    let sp = colinear_space(&h, &v, 1).unwrap();
    for (i, b) in sp.basis.iter().enumerate() {
        assert_eq!(sp.coordinates(b), Some(vec![(i, Scalar::one())]));
    }
    let mix = sp.vector(&[(0, s(2)), (sp.dim() - 1, s(-1))]);
    assert_eq!(sp.coordinates(&mix), Some(vec![(0, s(2)), (sp.dim() - 1, s(-1))]));
    assert!(!sp.contains(&[(sp.free[0], Scalar::one()), (sp.ambient_dim - 1, s(7))]) || sp.dim() == sp.ambient_dim);
}

fn sl2(q: &str) -> BeAlgebra {
    BeAlgebra::quantum_sl2(&parse_scalar(q).unwrap(), 6).unwrap()
}

#[test]
fn sl2_complex() {
    let mut middle = Vec::new();
    for q in ["2", "3", "q"] {
        let b = sl2(q);
        let r = resolution_complex_sl2(&b, 2).unwrap();
        assert!(r.check.pass(), "{:?}", r.check);
        assert_eq!(r.report.cochain_dims, vec![1, 1, 1, 1]);
        assert_eq!(r.report.homology, vec![1, 0, 0, 1]);
        let d = r.complex.differentials();
        assert!(d[0].is_zero() && d[2].is_zero());
        middle.push(d[1].get(0, 0));
    }
    assert!(middle.iter().all(|x| !x.is_zero()));
}

#[test]
fn psl2_complex() {
    for q in ["1", "2", "3", "-2", "q"] {
        let b = sl2(q);
        let r = resolution_complex_psl2(&b, 2).unwrap();
        assert!(r.check.pass(), "{:?}", r.check);
        assert_eq!(r.report.cochain_dims, vec![2, 2, 2, 2]);
        assert_eq!(r.report.ranks, vec![1, 1, 1]);
        assert_eq!(r.report.homology, vec![1, 0, 0, 1], "q = {}", q);
    }
}

#[test]
fn corrupted_resolution_is_caught() {
    let b = sl2("2");
    let mut maps = ResolutionMaps::new(&b).unwrap();
    assert_eq!(maps.check_suite(2).unwrap(), (true, true, true));
    maps.corrupt();
    let (all, even, _) = maps.check_suite(2).unwrap();
    assert!(!all && !even);
}

#[test]
fn resolution_needs_room() {
    let b = BeAlgebra::quantum_sl2(&s(2), 3).unwrap();
    assert!(resolution_complex_sl2(&b, 2).is_err());
}

proptest::proptest! {
    #![proptest_config(proptest::prelude::ProptestConfig::with_cases(12))]
    #[test]
    fn random_bimodules_compare(seed in 0u64..10_000) {
        let h = builtin_finite("OS3").unwrap();
        let m = Bimodule::random(&h, seed).unwrap();
        let r = gs_equals_hochschild_check(&h, &m, 1).unwrap();
        proptest::prop_assert!(r.pass(), "{:?}", r);
    }
}

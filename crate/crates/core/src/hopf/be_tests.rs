use super::*;
use crate::linalg::{rank, SparseMatrix};
use crate::lincomb::LinComb;
use crate::scalar::{parse_scalar, Scalar};
use proptest::prelude::*;
use std::collections::BTreeMap;
use std::sync::OnceLock;

fn sl2_at(q: i64) -> &'static BeAlgebra {
    static CACHE: OnceLock<BTreeMap<i64, BeAlgebra>> = OnceLock::new();
    let m = CACHE.get_or_init(|| {
        [1, 2, 3, -2]
            .into_iter()
            .map(|q| (q, BeAlgebra::quantum_sl2(&Scalar::from_i64(q), 6).unwrap()))
            .collect()
    });
    &m[&q]
}

fn el(b: &BeAlgebra, s: &str) -> LinComb<Word> {
    // product of named generators, e.g. "ad"
    let mut acc = b.one();
    for ch in s.chars() {
        acc = b.mul(&acc, &b.named(&ch.to_string()).unwrap()).unwrap();
    }
    acc
}

fn exps(k: usize) -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..=k {
        for b in 0..=k - a {
            for c in 0..=k - a - b {
                out.push([a, b, c, k - a - b - c]);
            }
        }
    }
    out
}

/// Dimension of the degree-k part of ℚ[a,b,c,d]/(ad - bc) computed by
/// linear algebra on monomials.
fn commutative_count(k: usize) -> usize {
    let target = exps(k);
    if k < 2 {
        return target.len();
    }
    let index: BTreeMap<[usize; 4], usize> = target.iter().enumerate().map(|(i, e)| (*e, i)).collect();
    let source = exps(k - 2);
    let mut m = SparseMatrix::zeros(target.len(), source.len());
    for (j, e) in source.iter().enumerate() {
        let ad = [e[0] + 1, e[1], e[2], e[3] + 1];
        let bc = [e[0], e[1] + 1, e[2] + 1, e[3]];
        m.add_to(index[&ad], j, &Scalar::one());
        m.add_to(index[&bc], j, &Scalar::from_i64(-1));
    }
    target.len() - rank(&m)
}

#[test]
fn rules_at_q2() {
    let b = sl2_at(2);
    let rules: Vec<(String, String)> = b
        .system()
        .rules
        .iter()
        .map(|r| (b.word_string(&r.lhs), b.format(&r.rhs)))
        .collect();
    let want = [
        ("ba", "(2)*ab"),
        ("ca", "(2)*ac"),
        ("cb", "(-2)*1 + (2)*ad"),
        ("da", "(-3)*1 + (4)*ad"),
        ("db", "(2)*bd"),
        ("dc", "(2)*cd"),
        ("bc", "(-2)*1 + (2)*ad"),
    ];
    assert_eq!(rules.len(), want.len());
    for (l, r) in want {
        assert!(
            rules.contains(&(l.to_string(), r.to_string())),
            "missing {} -> {}: {:?}",
            l,
            r,
            rules
        );
    }
    assert!(b.system().is_confluent());
    assert!(b.system().is_parity_homogeneous());
}

#[test]
fn counts_match_commutative_oracle() {
    for q in [1, 2, 3, -2] {
        let counts = sl2_at(q).standard_monomial_counts(5);
        let oracle: Vec<usize> = (0..=5).map(commutative_count).collect();
        assert_eq!(counts, oracle, "q = {}", q);
    }
}

#[test]
fn q_one_is_commutative() {
    let b = sl2_at(1);
    for x in ["a", "b", "c", "d"] {
        for y in ["a", "b", "c", "d"] {
            assert_eq!(el(b, &format!("{}{}", x, y)), el(b, &format!("{}{}", y, x)));
        }
    }
}

#[test]
fn quantum_determinant_is_one() {
    // ad - q^{-1} bc = 1 with ba = q ab
    let b = sl2_at(3);
    let q = Scalar::from_i64(3);
    let det = el(b, "ad").sub(&el(b, "bc").scale(&Scalar::frac(1, 3)));
    assert_eq!(det, b.one());
    assert_eq!(el(b, "ba"), el(b, "ab").scale(&q));
}

#[test]
fn antipode_on_generators() {
    // S(a) = d, S(b) = -q b, S(c) = -c/q, S(d) = a
    let b = sl2_at(2);
    let s = |x: &str| b.antipode(&el(b, x)).unwrap();
    assert_eq!(s("a"), el(b, "d"));
    assert_eq!(s("d"), el(b, "a"));
    assert_eq!(s("b"), el(b, "b").scale(&Scalar::from_i64(-2)));
    assert_eq!(s("c"), el(b, "c").scale(&Scalar::frac(-1, 2)));
}

#[test]
fn coproduct_of_a() {
    let b = sl2_at(2);
    let d = b.coproduct(&el(b, "a")).unwrap();
    let mut want = LinComb::zero();
    want.add_term(vec![vec![0], vec![0]], Scalar::one());
    want.add_term(vec![vec![1], vec![2]], Scalar::one());
    assert_eq!(d, want);
}

#[test]
fn normal_form_is_idempotent_and_strategy_free() {
    let b = sl2_at(2);
    let sys = b.system();
    for w in [vec![3u8, 0, 2, 1], vec![3, 3, 0, 0], vec![2, 1, 3, 0, 1]] {
        let x = LinComb::basis(w);
        let l = sys.reduce_with(&x, super::Strategy::Leftmost).unwrap();
        let r = sys.reduce_with(&x, super::Strategy::Rightmost).unwrap();
        assert_eq!(l, r);
        assert_eq!(b.normal_form(&l).unwrap(), l);
        assert_eq!(b.normal_form(&x).unwrap(), l);
    }
}

#[test]
fn degree_overflow_is_an_error() {
    let b = sl2_at(2);
    let long = LinComb::basis(vec![0u8; 7]);
    assert!(matches!(b.normal_form(&long), Err(crate::Error::DegreeOverflow { .. })));
}

#[test]
fn axioms_hold_to_degree_three() {
    let r = check_hopf_axioms(sl2_at(2), 3).unwrap();
    assert!(r.pass(), "{:?}", r.failures);
}

#[test]
fn not_kac_unless_q_squared_one() {
    assert!(!check_kac(sl2_at(2), 2).unwrap());
    assert!(check_kac(sl2_at(1), 2).unwrap());
    // S^2(b) = q^2 b
    let b = sl2_at(3);
    let s2 = b.antipode(&b.antipode(&el(b, "b")).unwrap()).unwrap();
    assert_eq!(s2, el(b, "b").scale(&Scalar::from_i64(9)));
}

#[test]
fn parity_and_projection() {
    let b = sl2_at(2);
    let mut x = el(b, "da");
    x.add_assign(&el(b, "b"));
    let (even, odd) = b.parity_split(&x);
    assert_eq!(odd, el(b, "b"));
    assert_eq!(even, el(b, "da"));
    assert_eq!(b.project(&el(b, "a")), LinComb::basis(1));
    assert!(b.project(&el(b, "b")).is_zero());
    assert_eq!(b.project(&el(b, "ad")), LinComb::basis(0));
    assert!(b.projection_kills_relations().unwrap());
}

#[test]
fn projection_is_cocentral() {
    // p(x1) ⊗ x2 = p(x2) ⊗ x1 after the swap, for basis words up to degree 3
    let b = sl2_at(2);
    for w in b.basis_upto(3) {
        let d = b.coproduct_basis(&w).unwrap();
        let mut left: BTreeMap<(usize, Word), Scalar> = BTreeMap::new();
        let mut right: BTreeMap<(usize, Word), Scalar> = BTreeMap::new();
        for (legs, c) in d.iter() {
            for (g, e) in b.project_word(&legs[0]).iter() {
                *left.entry((*g, legs[1].clone())).or_insert_with(Scalar::zero) += &(c * e);
            }
            for (g, e) in b.project_word(&legs[1]).iter() {
                *right.entry((*g, legs[0].clone())).or_insert_with(Scalar::zero) += &(c * e);
            }
        }
        left.retain(|_, v| !v.is_zero());
        right.retain(|_, v| !v.is_zero());
        assert_eq!(left, right, "word {}", b.word_string(&w));
    }
}

#[test]
fn rejects_bad_inputs() {
    assert!(BeAlgebra::quantum_sl2(&Scalar::zero(), 4).is_err());
    assert!(BeAlgebra::new(&[vec![Scalar::one()]], 4).is_err());
    let singular = vec![vec![Scalar::one(), Scalar::one()], vec![Scalar::one(), Scalar::one()]];
    assert!(BeAlgebra::new(&singular, 4).is_err());
}

#[test]
fn symbolic_q() {
    let q = parse_scalar("q").unwrap();
    let b = BeAlgebra::quantum_sl2(&q, 4).unwrap();
    assert_eq!(b.standard_monomial_counts(4), vec![1, 4, 9, 16, 25]);
    let ba = el(&b, "ba");
    assert_eq!(ba, el(&b, "ab").scale(&q));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn counit_is_multiplicative(x in proptest::collection::vec(0u8..4, 0..4),
                                y in proptest::collection::vec(0u8..4, 0..3)) {
        // the counit of the unreduced word is the independent oracle
        let b = sl2_at(2);
        let nx = b.normal_form(&LinComb::basis(x.clone())).unwrap();
        let ny = b.normal_form(&LinComb::basis(y.clone())).unwrap();
        prop_assert_eq!(b.counit(&nx), b.counit_word(&x));
        let xy = b.mul(&nx, &ny).unwrap();
        prop_assert_eq!(b.counit(&xy), b.counit_word(&x) * b.counit_word(&y));
    }

    #[test]
    fn multiplication_is_associative(x in proptest::collection::vec(0u8..4, 0..3),
                                     y in proptest::collection::vec(0u8..4, 0..2),
                                     z in proptest::collection::vec(0u8..4, 0..2)) {
        let b = sl2_at(3);
        let f = |w: &Vec<u8>| b.normal_form(&LinComb::basis(w.clone())).unwrap();
        let l = b.mul(&b.mul(&f(&x), &f(&y)).unwrap(), &f(&z)).unwrap();
        let r = b.mul(&f(&x), &b.mul(&f(&y), &f(&z)).unwrap()).unwrap();
        prop_assert_eq!(l, r);
    }
}

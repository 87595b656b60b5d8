use super::*;
use crate::scalar::{parse_scalar, Scalar};
use proptest::prelude::*;

fn m(rows: &[&[&str]]) -> SparseMatrix {
    SparseMatrix::from_dense(
        &rows
            .iter()
            .map(|r| r.iter().map(|x| parse_scalar(x).unwrap()).collect())
            .collect::<Vec<_>>(),
    )
    .unwrap()
}

/// Textbook dense elimination with division, kept independent of the
/// sparse code.
fn dense_rank(rows: &[Vec<Scalar>]) -> usize {
    let mut a: Vec<Vec<Scalar>> = rows.to_vec();
    let ncols = a.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let f = &a[i][c] / &a[r][c];
                for k in 0..ncols {
                    let t = &f * &a[r][k];
                    a[i][k] -= &t;
                }
            }
        }
        r += 1;
    }
    r
}

#[test]
fn rank_examples() {
    assert_eq!(rank(&SparseMatrix::identity(3)), 3);
    assert_eq!(rank(&SparseMatrix::zeros(2, 3)), 0);
    assert_eq!(rank(&m(&[&["1", "q"], &["1/q", "1"]])), 1);
    assert_eq!(rank(&m(&[&["1", "q"], &["1", "1"]])), 2);
}

#[test]
fn kernel_examples() {
    assert!(kernel_basis(&SparseMatrix::identity(2)).is_empty());
    let k = kernel_basis(&m(&[&["1", "1"]]));
    assert_eq!(k.len(), 1);
    let v = &k[0];
    let dense: Vec<Scalar> = (0..2)
        .map(|i| v.iter().find(|e| e.0 == i).map(|e| e.1.clone()).unwrap_or_default())
        .collect();
    assert_eq!(&dense[0] + &dense[1], Scalar::zero());
    assert!(!dense[0].is_zero());
    assert_eq!(kernel_basis(&SparseMatrix::zeros(2, 2)).len(), 2);
}

#[test]
fn homology_examples() {
    let c = CochainComplex::new(vec![1, 1], vec![m(&[&["0"]])]).unwrap();
    assert_eq!(c.homology_dims(), vec![1, 1]);
    let c = CochainComplex::new(vec![1, 1], vec![m(&[&["1"]])]).unwrap();
    assert_eq!(c.homology_dims(), vec![0, 0]);
}

#[test]
fn non_complex_is_rejected_with_position() {
    let one = m(&[&["1"]]);
    let err = CochainComplex::new(vec![1, 1, 1], vec![one.clone(), one]).unwrap_err();
    assert_eq!(err, crate::error::Error::NotAComplex { index: 0 });
    let bad = CochainComplex::new_unchecked(vec![1, 1, 1], vec![m(&[&["0"]]), m(&[&["2"]])]).unwrap();
    assert!(d_squared_check(&bad).unwrap().pass);
}

#[test]
fn shape_errors() {
    assert!(CochainComplex::new(vec![1, 2], vec![SparseMatrix::zeros(1, 1)]).is_err());
    assert!(SparseMatrix::from_entries(1, 1, vec![(1, 0, Scalar::one())]).is_err());
}

#[test]
fn json_round_trip() {
    let a = m(&[&["1/2", "0"], &["q", "-3"]]);
    let s = serde_json::to_string(&a).unwrap();
    assert_eq!(s, r#"{"rows":2,"cols":2,"entries":[[0,0,"1/2"],[1,0,"q"],[1,1,"-3"]]}"#);
    let b: SparseMatrix = serde_json::from_str(&s).unwrap();
    assert_eq!(a, b);
}

#[test]
fn rref_has_unit_pivots() {
    let a = m(&[&["2", "4", "6"], &["1", "3", "5"], &["3", "7", "11"]]);
    let r = Rref::from_matrix(&a);
    assert_eq!(r.pivots, vec![0, 1]);
    assert_eq!(r.rows[0], vec![(0, Scalar::one()), (2, Scalar::from_i64(-1))]);
    assert_eq!(r.rows[1], vec![(1, Scalar::one()), (2, Scalar::from_i64(2))]);
}

fn small_scalar() -> impl Strategy<Value = Scalar> + Clone {
    prop_oneof![
        3 => Just(Scalar::zero()),
        4 => (-4i64..5, 1i64..4).prop_map(|(n, d)| Scalar::frac(n, d)),
    ]
}

fn symbolic_scalar() -> impl Strategy<Value = Scalar> + Clone {
    prop_oneof![
        3 => Just(Scalar::zero()),
        2 => (-3i64..4).prop_map(Scalar::from_i64),
        2 => (-2i64..3, 0i32..3).prop_map(|(c, e)| Scalar::from_i64(c) * Scalar::q().pow(e).unwrap()),
        1 => Just(Scalar::q().inv().unwrap()),
    ]
}

fn matrix_of(s: impl Strategy<Value = Scalar> + Clone) -> impl Strategy<Value = Vec<Vec<Scalar>>> {
    (1usize..6, 1usize..6)
        .prop_flat_map(move |(r, c)| proptest::collection::vec(proptest::collection::vec(s.clone(), c), r))
}

proptest! {
    #[test]
    fn rank_nullity_and_transpose(rows in matrix_of(small_scalar())) {
        let a = SparseMatrix::from_dense(&rows).unwrap();
        let r = rank(&a);
        prop_assert_eq!(r, rank(&a.transpose()));
        prop_assert_eq!(r, dense_rank(&rows));
        let k = kernel_basis(&a);
        prop_assert_eq!(r + k.len(), a.cols());
        for v in &k {
            prop_assert!(a.apply(v).is_empty());
        }
    }

    #[test]
    fn symbolic_rank_matches_oracle(rows in matrix_of(symbolic_scalar())) {
        let a = SparseMatrix::from_dense(&rows).unwrap();
        let r = rank(&a);
        prop_assert_eq!(r, dense_rank(&rows));
        prop_assert_eq!(r, rank(&a.transpose()));
        for v in kernel_basis(&a) {
            prop_assert!(a.apply(&v).is_empty());
        }
        let two = num_rational::BigRational::from_integer(2.into());
        if let Ok(s) = a.specialize(&two) {
            prop_assert!(rank(&s) <= r);
        }
    }

    #[test]
    fn field_axioms(a in symbolic_scalar(), b in symbolic_scalar(), c in symbolic_scalar()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv().unwrap(), Scalar::one());
        }
        prop_assert_eq!(parse_scalar(&a.to_string()).unwrap(), a);
    }
}

use super::*;
use proptest::prelude::*;

fn s(n: i64) -> Scalar {
    Scalar::from_i64(n)
}

/// Independent oracle for `φ̃` on `ℂⁿ` with weights: `δ = Σ w_i^{-1} e_i⊗e_i`,
/// so `φ̃(e_k) = w_k^{-1} φ(e_k) = 1`.
fn weighted_phi_tilde_oracle(weights: &[i64]) -> Vec<Scalar> {
    weights.iter().map(|w| Scalar::frac(*w, *w)).collect()
}

#[test]
fn dual_for_c2() {
    let r = MeasuredAlgebra::cn(2).unwrap();
    let d = r.frobenius_dual();
    assert_eq!(d.coeffs, vec![vec![s(1), s(0)], vec![s(0), s(1)]]);
    assert!(d.snake_left && d.snake_right);
}

#[test]
fn dual_for_weighted_c2() {
    let r = MeasuredAlgebra::weighted("w", &[s(1), s(2)]).unwrap();
    let d = r.frobenius_dual();
    assert_eq!(d.coeffs, vec![vec![s(1), s(0)], vec![s(0), Scalar::frac(1, 2)]]);
    assert!(d.snake_left && d.snake_right);
    assert_eq!(r.phi_tilde(), weighted_phi_tilde_oracle(&[1, 2]));
}

#[test]
fn snake_identities_for_matrix_algebras() {
    for r in [
        MeasuredAlgebra::matrix_trace(2).unwrap(),
        MeasuredAlgebra::matrix_trace(3).unwrap(),
        MeasuredAlgebra::trq(&s(2)).unwrap(),
        MeasuredAlgebra::matrix_weighted("w", &[s(1), s(3), Scalar::frac(1, 5)]).unwrap(),
    ] {
        let d = r.frobenius_dual();
        assert!(d.snake_left && d.snake_right, "{}", r.name());
    }
}

#[test]
fn matrix_trace_dual_is_the_transpose_pairing() {
    // tr(e_ij e_kl) = δ_jk δ_il, so δ(1) = Σ e_ij ⊗ e_ji
    let r = MeasuredAlgebra::matrix_trace(2).unwrap();
    let c = r.frobenius_dual().coeffs;
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    let want = if k == j && l == i { s(1) } else { s(0) };
                    assert_eq!(c[i * 2 + j][k * 2 + l], want);
                }
            }
        }
    }
}

#[test]
fn one_dimensional() {
    // δ = c^{-1} 1⊗1, so φ̃(1) = c^{-1} φ(1) = 1 and λ = 1/c
    let r = MeasuredAlgebra::weighted("C", &[s(5)]).unwrap();
    assert_eq!(r.phi_tilde(), vec![s(1)]);
    let rep = r.normalizability();
    assert!(rep.normalizable);
    assert_eq!(rep.lambda, Some(Scalar::frac(1, 5)));
    assert_eq!(rep.mu_squared, Some(s(1)));
}

#[test]
fn cn_table() {
    for n in 2..=9usize {
        let rep = MeasuredAlgebra::cn(n).unwrap().normalizability();
        assert!(rep.normalizable);
        assert_eq!(rep.lambda, Some(s(1)));
        assert_eq!(rep.phi1, s(n as i64));
        assert_eq!(rep.mu_squared, Some(s(n as i64)));
        assert!(rep.snake_identities);
        assert_eq!(rep.warnings.is_empty(), n >= 4);
    }
    let four = MeasuredAlgebra::cn(4).unwrap().normalizability();
    assert_eq!(four.mu, Some(s(2)));
    assert_eq!(four.q_rational_roots, vec![s(1)]);
    let nine = MeasuredAlgebra::cn(9).unwrap().normalizability();
    assert_eq!(nine.mu, Some(s(3)));
    // q + 1/q = 3 has irrational roots
    assert!(nine.q_rational_roots.is_empty());
    let five = MeasuredAlgebra::cn(5).unwrap().normalizability();
    assert_eq!(five.mu, None);
    assert_eq!(five.q_quadratic.as_deref(), Some("z^2 - mu*z + 1 with mu^2 = 5"));
}

#[test]
fn weighted_c2_is_rejected() {
    let rep = MeasuredAlgebra::weighted("w", &[s(1), s(2)]).unwrap().normalizability();
    assert!(!rep.normalizable);
    assert_eq!(rep.witness, Some(1));
    assert!(rep.lambda.is_none());
}

#[test]
fn zero_phi1_is_rejected() {
    let rep = MeasuredAlgebra::weighted("w", &[s(1), s(-1)])
        .unwrap()
        .normalizability();
    assert!(!rep.normalizable);
    assert_eq!(rep.reason.as_deref(), Some("φ(1) = 0"));
}

#[test]
fn trq_parameter() {
    // λ = φ(1) = q + 1/q, so μ = q + 1/q and the roots are q, 1/q
    for q in [s(2), s(3), Scalar::frac(2, 3)] {
        let rep = MeasuredAlgebra::trq(&q).unwrap().normalizability();
        let t = &q + &q.inv().unwrap();
        assert!(rep.normalizable);
        assert_eq!(rep.lambda.as_ref(), Some(&t));
        assert_eq!(rep.mu_squared, Some(&t * &t));
        let mut roots = vec![q.clone(), q.inv().unwrap()];
        roots.sort_by_key(|x| x.as_rational().unwrap().clone());
        assert_eq!(rep.q_rational_roots, roots);
    }
}

#[test]
fn degenerate_and_malformed_inputs() {
    assert!(MeasuredAlgebra::weighted("w", &[s(1), s(0)]).is_err());
    let bad = r#"{"dim": 2, "mult": [[[1,0],[0,0]],[[0,0],[0,1]]], "unit": [1,1]}"#;
    assert!(matches!(MeasuredAlgebra::from_json("x", bad), Err(Error::Parse(_))));
    let wrong_dim = r#"{"dim": 3, "mult": [[[1,0],[0,0]],[[0,0],[0,1]]], "unit": [1,1], "phi": [1,1]}"#;
    assert!(MeasuredAlgebra::from_json("x", wrong_dim).is_err());
    let bad_unit = r#"{"dim": 2, "mult": [[[1,0],[0,0]],[[0,0],[0,1]]], "unit": [1,0], "phi": [1,1]}"#;
    assert!(MeasuredAlgebra::from_json("x", bad_unit).is_err());
    // e2 e2 = e1 with e1 e2 = e2 e1 = 0 and no unit is not associative
    let mut mult = vec![vec![vec![s(0); 3]; 3]; 3];
    mult[0][0][0] = s(1);
    for k in 0..3 {
        mult[0][k][k] = s(1);
        mult[k][0][k] = s(1);
    }
    mult[1][1][2] = s(1);
    mult[1][2][1] = s(1);
    mult[2][1][0] = s(1);
    assert!(MeasuredAlgebra::new("x", mult, vec![s(1), s(0), s(0)], vec![s(1); 3]).is_err());
}

#[test]
fn json_round_trip() {
    let r = MeasuredAlgebra::trq(&Scalar::frac(3, 2)).unwrap();
    let js = serde_json::to_string(&r.to_input()).unwrap();
    let back = MeasuredAlgebra::from_json("back", &js).unwrap();
    assert_eq!(back.to_input(), r.to_input());
}

fn invertible_matrix(m: usize) -> impl Strategy<Value = Vec<Vec<Scalar>>> {
    proptest::collection::vec(-3i64..=3, m * m).prop_filter_map("singular", move |v| {
        let rows: Vec<Vec<Scalar>> = v.chunks(m).map(|c| c.iter().map(|&x| s(x)).collect()).collect();
        invert(&rows).map(|_| rows)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn phi_tilde_is_basis_independent(p in invertible_matrix(4), which in 0usize..3) {
        let r = match which {
            0 => MeasuredAlgebra::cn(4).unwrap(),
            1 => MeasuredAlgebra::trq(&s(2)).unwrap(),
            _ => MeasuredAlgebra::weighted("w", &[s(1), s(2), s(3), s(-1)]).unwrap(),
        };
        let moved = r.change_basis(&p).unwrap();
        let pt = moved.phi_tilde();
        // φ̃'(b'_i) = Σ_k P_ki φ̃(b_k)
        let orig = r.phi_tilde();
        for i in 0..4 {
            let want = (0..4).fold(Scalar::zero(), |acc, k| acc + &p[k][i] * &orig[k]);
            prop_assert_eq!(&pt[i], &want);
        }
        let d = moved.frobenius_dual();
        prop_assert!(d.snake_left && d.snake_right);
        prop_assert_eq!(moved.normalizability().normalizable, r.normalizability().normalizable);
    }
}

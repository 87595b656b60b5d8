//! Relation checks for the quantum permutation algebra A_s(n) and the
//! hyperoctahedral algebra A_h(n), done in the free algebra with explicit
//! ideal-membership certificates.

use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::scalar::Scalar;
use serde::Serialize;

type Word = Vec<u8>;
type FreePoly = LinComb<Word>;

#[derive(Clone, Debug, Serialize)]
pub struct PresentationReport {
    pub n: usize,
    /// The defining relations vanish on every permutation.
    pub quotient_relations: bool,
    /// Δ, ε and S of the generators agree with the group structure of S_n.
    pub quotient_hopf_structure: bool,
    pub i_respects_relations: bool,
    pub pi_respects_relations: bool,
    pub pi_i_is_identity: bool,
    pub failures: Vec<String>,
}

impl PresentationReport {
    pub fn pass(&self) -> bool {
        self.quotient_relations
            && self.quotient_hopf_structure
            && self.i_respects_relations
            && self.pi_respects_relations
            && self.pi_i_is_identity
    }
}

struct Gens {
    n: usize,
}

impl Gens {
    fn g(&self, i: usize, j: usize) -> u8 {
        (i * self.n + j) as u8
    }

    fn word(&self, idx: &[(usize, usize)]) -> FreePoly {
        LinComb::basis(idx.iter().map(|&(i, j)| self.g(i, j)).collect())
    }

    fn one(&self) -> FreePoly {
        LinComb::basis(Vec::new())
    }
}

fn mul(x: &FreePoly, y: &FreePoly) -> FreePoly {
    let mut out = FreePoly::zero();
    for (a, ca) in x.iter() {
        for (b, cb) in y.iter() {
            let mut w = a.clone();
            w.extend_from_slice(b);
            out.add_term(w, ca * cb);
        }
    }
    out
}

/// Substitutes each generator by an element (algebra map on the free algebra).
fn substitute(x: &FreePoly, image: impl Fn(u8) -> FreePoly) -> FreePoly {
    let mut out = FreePoly::zero();
    for (w, c) in x.iter() {
        let mut acc = LinComb::basis(Vec::new());
        for &g in w {
            acc = mul(&acc, &image(g));
        }
        out.add_scaled(&acc, c);
    }
    out
}

fn delta(a: usize, b: usize) -> Scalar {
    if a == b {
        Scalar::one()
    } else {
        Scalar::zero()
    }
}

/// Relations of A_s(n), keyed for certificates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum SRel {
    Col(usize),
    Row(usize),
    /// `x_ik x_ij - δ_kj x_ij`
    RowProd(usize, usize, usize),
    /// `x_ki x_ji - δ_kj x_ji`
    ColProd(usize, usize, usize),
}

fn s_rel(gs: &Gens, r: SRel) -> FreePoly {
    let n = gs.n;
    match r {
        SRel::Col(i) => {
            let mut p: FreePoly = (0..n).map(|l| (vec![gs.g(l, i)], Scalar::one())).collect();
            p.add_term(Vec::new(), Scalar::from_i64(-1));
            p
        }
        SRel::Row(i) => {
            let mut p: FreePoly = (0..n).map(|l| (vec![gs.g(i, l)], Scalar::one())).collect();
            p.add_term(Vec::new(), Scalar::from_i64(-1));
            p
        }
        SRel::RowProd(i, k, j) => {
            let mut p = gs.word(&[(i, k), (i, j)]);
            p.add_term(vec![gs.g(i, j)], -delta(k, j));
            p
        }
        SRel::ColProd(k, i, j) => {
            let mut p = gs.word(&[(k, i), (j, i)]);
            p.add_term(vec![gs.g(j, i)], -delta(k, j));
            p
        }
    }
}

fn s_relations(n: usize) -> Vec<SRel> {
    let mut out = Vec::new();
    for i in 0..n {
        out.push(SRel::Col(i));
        out.push(SRel::Row(i));
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                out.push(SRel::RowProd(i, k, j));
                out.push(SRel::ColProd(k, i, j));
            }
        }
    }
    out
}

/// Relations of A_h(n).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum HRel {
    Col(usize),
    Row(usize),
    /// `a_ik a_ij`, `k != j`
    RowProd(usize, usize, usize),
    /// `a_ji a_ki`, `j != k`
    ColProd(usize, usize, usize),
}

fn h_rel(gs: &Gens, r: HRel) -> FreePoly {
    let n = gs.n;
    match r {
        HRel::Col(i) => {
            let mut p: FreePoly = (0..n).map(|l| (vec![gs.g(l, i), gs.g(l, i)], Scalar::one())).collect();
            p.add_term(Vec::new(), Scalar::from_i64(-1));
            p
        }
        HRel::Row(i) => {
            let mut p: FreePoly = (0..n).map(|l| (vec![gs.g(i, l), gs.g(i, l)], Scalar::one())).collect();
            p.add_term(Vec::new(), Scalar::from_i64(-1));
            p
        }
        HRel::RowProd(i, k, j) => gs.word(&[(i, k), (i, j)]),
        HRel::ColProd(j, k, i) => gs.word(&[(j, i), (k, i)]),
    }
}

fn h_relations(n: usize) -> Vec<HRel> {
    let mut out = Vec::new();
    for i in 0..n {
        out.push(HRel::Col(i));
        out.push(HRel::Row(i));
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if k != j {
                    out.push(HRel::RowProd(i, k, j));
                    out.push(HRel::ColProd(j, k, i));
                }
            }
        }
    }
    out
}

/// `Σ c · left · relation · right`.
type Certificate<R> = Vec<(Scalar, FreePoly, R, FreePoly)>;

fn expand<R: Copy>(cert: &Certificate<R>, rel: impl Fn(R) -> FreePoly) -> FreePoly {
    let mut out = FreePoly::zero();
    for (c, l, r, rr) in cert {
        out.add_scaled(&mul(&mul(l, &rel(*r)), rr), c);
    }
    out
}

/// Certificate that `i(r)` lies in the ideal of A_h(n).
fn i_certificate(gs: &Gens, r: SRel) -> Certificate<HRel> {
    let n = gs.n;
    let one = gs.one();
    let a = |i, j| gs.word(&[(i, j)]);
    let minus = Scalar::from_i64(-1);
    match r {
        SRel::Col(i) => vec![(Scalar::one(), one.clone(), HRel::Col(i), one)],
        SRel::Row(i) => vec![(Scalar::one(), one.clone(), HRel::Row(i), one)],
        SRel::RowProd(i, k, j) if k != j => vec![(Scalar::one(), a(i, k), HRel::RowProd(i, k, j), a(i, j))],
        SRel::RowProd(i, _, j) => {
            // a_ij^4 - a_ij^2 = a_ij^2 (Σ_l a_il^2 - 1) - Σ_{l≠j} a_ij (a_ij a_il) a_il
            let mut c = vec![(Scalar::one(), gs.word(&[(i, j), (i, j)]), HRel::Row(i), one)];
            for l in (0..n).filter(|&l| l != j) {
                c.push((minus.clone(), a(i, j), HRel::RowProd(i, j, l), a(i, l)));
            }
            c
        }
        SRel::ColProd(k, i, j) if k != j => vec![(Scalar::one(), a(k, i), HRel::ColProd(k, j, i), a(j, i))],
        SRel::ColProd(_, i, j) => {
            // a_ji^4 - a_ji^2 = (Σ_l a_li^2 - 1) a_ji^2 - Σ_{l≠j} a_li (a_li a_ji) a_ji
            let mut c = vec![(Scalar::one(), one, HRel::Col(i), gs.word(&[(j, i), (j, i)]))];
            for l in (0..n).filter(|&l| l != j) {
                c.push((minus.clone(), a(l, i), HRel::ColProd(l, j, i), a(j, i)));
            }
            c
        }
    }
}

/// Certificate that `π(r)` lies in the ideal of A_s(n).
fn pi_certificate(gs: &Gens, r: HRel) -> Certificate<SRel> {
    let n = gs.n;
    let one = gs.one();
    match r {
        HRel::Col(i) => {
            let mut c = vec![(Scalar::one(), one.clone(), SRel::Col(i), one.clone())];
            for l in 0..n {
                c.push((Scalar::one(), one.clone(), SRel::RowProd(l, i, i), one.clone()));
            }
            c
        }
        HRel::Row(i) => {
            let mut c = vec![(Scalar::one(), one.clone(), SRel::Row(i), one.clone())];
            for l in 0..n {
                c.push((Scalar::one(), one.clone(), SRel::RowProd(i, l, l), one.clone()));
            }
            c
        }
        HRel::RowProd(i, k, j) => vec![(Scalar::one(), one.clone(), SRel::RowProd(i, k, j), one)],
        HRel::ColProd(j, k, i) => vec![(Scalar::one(), one.clone(), SRel::ColProd(j, i, k), one)],
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

/// Largest `n` for which the permutation check is attempted.
pub const MAX_PERMUTATION_N: usize = 6;

pub fn presentation_check_as_ah(n: usize) -> Result<PresentationReport> {
    if n < 2 {
        return Err(Error::Invalid(format!("presentation check needs n >= 2, got {}", n)));
    }
    if n > MAX_PERMUTATION_N {
        return Err(Error::Invalid(format!(
            "n = {} is too large for the permutation check (max {})",
            n, MAX_PERMUTATION_N
        )));
    }
    let gs = Gens { n };
    let mut failures = Vec::new();

    // x_ij is the indicator of {σ : σ(j) = i}.
    let perms = permutations(n);
    let value = |s: &[usize], g: u8| {
        let (i, j) = (g as usize / n, g as usize % n);
        delta(s[j], i)
    };
    let eval = |p: &FreePoly, s: &[usize]| {
        p.eval_linear::<()>(|w| Ok(w.iter().fold(Scalar::one(), |acc, &g| acc * value(s, g))))
            .unwrap()
    };
    let mut quotient_relations = true;
    for r in s_relations(n) {
        let p = s_rel(&gs, r);
        if let Some(s) = perms.iter().find(|s| !eval(&p, s).is_zero()) {
            quotient_relations = false;
            failures.push(format!("relation {:?} nonzero at permutation {:?}", r, s));
        }
    }
    let compose = |s: &[usize], t: &[usize]| -> Vec<usize> { (0..n).map(|k| s[t[k]]).collect() };
    let inverse = |s: &[usize]| -> Vec<usize> {
        let mut inv = vec![0; n];
        for (k, &v) in s.iter().enumerate() {
            inv[v] = k;
        }
        inv
    };
    let identity: Vec<usize> = (0..n).collect();
    let mut quotient_hopf_structure = true;
    'outer: for i in 0..n {
        for j in 0..n {
            let g = gs.g(i, j);
            if value(&identity, g) != delta(i, j) {
                quotient_hopf_structure = false;
                failures.push(format!("counit of x_{}{}", i + 1, j + 1));
                break 'outer;
            }
            for s in &perms {
                if value(&inverse(s), g) != value(s, gs.g(j, i)) {
                    quotient_hopf_structure = false;
                    failures.push(format!("antipode of x_{}{}", i + 1, j + 1));
                    break 'outer;
                }
                for t in &perms {
                    let lhs = value(&compose(s, t), g);
                    let rhs = (0..n).fold(Scalar::zero(), |acc, k| {
                        acc + value(s, gs.g(i, k)) * value(t, gs.g(k, j))
                    });
                    if lhs != rhs {
                        quotient_hopf_structure = false;
                        failures.push(format!("coproduct of x_{}{}", i + 1, j + 1));
                        break 'outer;
                    }
                }
            }
        }
    }

    let i_map = |g: u8| LinComb::basis(vec![g, g]);
    let pi_map = |g: u8| LinComb::basis(vec![g]);
    let mut i_respects_relations = true;
    for r in s_relations(n) {
        let target = substitute(&s_rel(&gs, r), i_map);
        if expand(&i_certificate(&gs, r), |h| h_rel(&gs, h)) != target {
            i_respects_relations = false;
            failures.push(format!("i does not preserve {:?}", r));
        }
    }
    let mut pi_respects_relations = true;
    for r in h_relations(n) {
        let target = substitute(&h_rel(&gs, r), pi_map);
        if expand(&pi_certificate(&gs, r), |s| s_rel(&gs, s)) != target {
            pi_respects_relations = false;
            failures.push(format!("π does not preserve {:?}", r));
        }
    }
    // π(i(x_ij)) = x_ij x_ij, which equals x_ij modulo x_ij x_ij - x_ij.
    let mut pi_i_is_identity = true;
    for i in 0..n {
        for j in 0..n {
            let g = gs.g(i, j);
            let image = substitute(&substitute(&LinComb::basis(vec![g]), i_map), pi_map);
            let diff = image.sub(&LinComb::basis(vec![g]));
            if diff != s_rel(&gs, SRel::RowProd(i, j, j)) {
                pi_i_is_identity = false;
                failures.push(format!("π i (x_{}{}) != x_{}{}", i + 1, j + 1, i + 1, j + 1));
            }
        }
    }
    Ok(PresentationReport {
        n,
        quotient_relations,
        quotient_hopf_structure,
        i_respects_relations,
        pi_respects_relations,
        pi_i_is_identity,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n3_and_n4_pass() {
        for n in [2, 3, 4] {
            let r = presentation_check_as_ah(n).unwrap();
            assert!(r.pass(), "{:?}", r.failures);
        }
    }

    #[test]
    fn n1_is_rejected() {
        assert!(presentation_check_as_ah(1).is_err());
    }

    #[test]
    fn wrong_certificate_is_detected() {
        let gs = Gens { n: 3 };
        let r = SRel::RowProd(0, 1, 1);
        let mut cert = i_certificate(&gs, r);
        cert.pop();
        let target = substitute(&s_rel(&gs, r), |g| LinComb::basis(vec![g, g]));
        assert_ne!(expand(&cert, |h| h_rel(&gs, h)), target);
    }

    #[test]
    fn permutation_count() {
        assert_eq!(permutations(4).len(), 24);
    }
}

use super::HopfAlgebra;
use crate::error::Result;
use crate::lincomb::{LinComb, Tensor};
use crate::scalar::Scalar;
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomFailure {
    pub axiom: String,
    pub witness: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct AxiomReport {
    pub algebra: String,
    pub checked: Vec<String>,
    pub failures: Vec<AxiomFailure>,
}

impl AxiomReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn failed(&self, axiom: &str) -> bool {
        self.failures.iter().any(|f| f.axiom == axiom)
    }

    fn fail(&mut self, axiom: &str, witness: String) {
        // One witness per axiom keeps reports short.
        if !self.failed(axiom) {
            self.failures.push(AxiomFailure {
                axiom: axiom.into(),
                witness,
            });
        }
    }
}

/// Checks the bialgebra and antipode axioms, plus Haar invariance when a
/// Haar state is declared, on basis elements of degree at most `d`
/// (tuples of total degree at most `d` for the multi-argument laws).
pub fn check_hopf_axioms<H: HopfAlgebra>(h: &H, d: usize) -> Result<AxiomReport> {
    let mut rep = AxiomReport {
        algebra: h.name(),
        ..Default::default()
    };
    let basis = h.basis_upto(d);
    let one = h.one();
    let lab = |b: &H::Basis| h.label(b);

    rep.checked.push("unit".into());
    for x in &basis {
        let bx = LinComb::basis(x.clone());
        if h.mul(&one, &bx)? != bx || h.mul(&bx, &one)? != bx {
            rep.fail("unit", lab(x));
        }
    }

    rep.checked.push("associativity".into());
    for x in &basis {
        for y in &basis {
            if h.degree(x) + h.degree(y) > d {
                continue;
            }
            let xy = h.mul_basis(x, y)?;
            for z in &basis {
                if h.degree(x) + h.degree(y) + h.degree(z) > d {
                    continue;
                }
                let bz = LinComb::basis(z.clone());
                let left = h.mul(&xy, &bz)?;
                let right = h.mul(&LinComb::basis(x.clone()), &h.mul_basis(y, z)?)?;
                if left != right {
                    rep.fail("associativity", format!("({}, {}, {})", lab(x), lab(y), lab(z)));
                }
            }
        }
    }

    rep.checked.push("coassociativity".into());
    rep.checked.push("counit".into());
    rep.checked.push("antipode".into());
    for x in &basis {
        let bx = LinComb::basis(x.clone());
        let dx = h.coproduct_basis(x)?;
        let l = {
            let mut out = Tensor::zero();
            for (legs, c) in dx.iter() {
                for (pair, e) in h.coproduct_basis(&legs[0])?.iter() {
                    out.add_term(vec![pair[0].clone(), pair[1].clone(), legs[1].clone()], c * e);
                }
            }
            out
        };
        let r = {
            let mut out = Tensor::zero();
            for (legs, c) in dx.iter() {
                for (pair, e) in h.coproduct_basis(&legs[1])?.iter() {
                    out.add_term(vec![legs[0].clone(), pair[0].clone(), pair[1].clone()], c * e);
                }
            }
            out
        };
        if l != r {
            rep.fail("coassociativity", lab(x));
        }
        let mut eps_left = LinComb::zero();
        let mut eps_right = LinComb::zero();
        let mut s_left = LinComb::zero();
        let mut s_right = LinComb::zero();
        for (legs, c) in dx.iter() {
            eps_left.add_term(legs[1].clone(), c * &h.counit_basis(&legs[0]));
            eps_right.add_term(legs[0].clone(), c * &h.counit_basis(&legs[1]));
            let sl = h.mul(&h.antipode_basis(&legs[0])?, &LinComb::basis(legs[1].clone()))?;
            s_left.add_scaled(&sl, c);
            let sr = h.mul(&LinComb::basis(legs[0].clone()), &h.antipode_basis(&legs[1])?)?;
            s_right.add_scaled(&sr, c);
        }
        if eps_left != bx || eps_right != bx {
            rep.fail("counit", lab(x));
        }
        let expected = one.scale(&h.counit_basis(x));
        if s_left != expected || s_right != expected {
            rep.fail("antipode", lab(x));
        }
    }

    rep.checked.push("multiplicativity".into());
    rep.checked.push("counit multiplicativity".into());
    for x in &basis {
        for y in &basis {
            if h.degree(x) + h.degree(y) > d {
                continue;
            }
            let xy = h.mul_basis(x, y)?;
            let lhs = h.coproduct(&xy)?;
            let rhs = h.mul_tensor(&h.coproduct_basis(x)?, &h.coproduct_basis(y)?)?;
            if lhs != rhs {
                rep.fail("multiplicativity", format!("({}, {})", lab(x), lab(y)));
            }
            if h.counit(&xy) != &h.counit_basis(x) * &h.counit_basis(y) {
                rep.fail("counit multiplicativity", format!("({}, {})", lab(x), lab(y)));
            }
        }
    }

    if h.haar_basis(&basis[0]).is_some() {
        rep.checked.push("haar".into());
        if h.haar(&one) != Some(Scalar::one()) {
            rep.fail("haar", "h(1) != 1".into());
        }
        for x in &basis {
            let dx = h.coproduct_basis(x)?;
            let hx = h.haar_basis(x).unwrap();
            let mut left = LinComb::zero();
            let mut right = LinComb::zero();
            for (legs, c) in dx.iter() {
                left.add_term(legs[1].clone(), c * &h.haar_basis(&legs[0]).unwrap());
                right.add_term(legs[0].clone(), c * &h.haar_basis(&legs[1]).unwrap());
            }
            let expected = one.scale(&hx);
            if left != expected || right != expected {
                rep.fail("haar", lab(x));
            }
        }
    }
    Ok(rep)
}

/// `S² = id` on basis elements of degree at most `d`.
pub fn check_kac<H: HopfAlgebra>(h: &H, d: usize) -> Result<bool> {
    for x in h.basis_upto(d) {
        let bx = LinComb::basis(x.clone());
        if h.antipode(&h.antipode(&bx)?)? != bx {
            return Ok(false);
        }
    }
    Ok(true)
}

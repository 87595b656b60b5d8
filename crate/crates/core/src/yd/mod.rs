//! Comodules, Yetter-Drinfeld modules over a Hopf algebra, and checkers
//! for their axioms. Infinite-dimensional carriers are evaluators over a
//! degree-filtered basis; nothing is materialized.

mod adjunction;
mod bimodule;
mod comodule;
mod modules;
mod splitting;

pub use adjunction::{adjunction_extend, adjunction_restrict, colinear_functionals};
pub use bimodule::{Bimodule, RightModule};
pub use comodule::{fundamental_comodule, Comodule, ComoduleReport};
pub use modules::{CoadPower, CofreeYd, FiniteYd, FreeYd, TwistYd};
pub use splitting::{
    adjoint_restriction_check, chi, chi_coinvariant_check, iota, iota_mu_check, mu, sigma_section,
    AdjointRestrictionReport, ChiReport, IotaMuReport, SigmaReport, SigmaSection,
};

use crate::error::Result;
use crate::hopf::HopfAlgebra;
use crate::lincomb::LinComb;
use serde::Serialize;
use std::fmt::Debug;

pub type HBasis<M> = <<M as YdModule>::H as HopfAlgebra>::Basis;

/// Right module and right comodule over `H`, compatible in the
/// Yetter-Drinfeld sense.
pub trait YdModule {
    type H: HopfAlgebra;
    type Key: Clone + Ord + Debug;

    fn hopf(&self) -> &Self::H;
    fn name(&self) -> String;
    fn act(&self, v: &Self::Key, a: &HBasis<Self>) -> Result<LinComb<Self::Key>>;
    fn coact(&self, v: &Self::Key) -> Result<LinComb<(Self::Key, HBasis<Self>)>>;
    /// Carrier basis vectors of filtration degree at most `degree`.
    fn carrier_basis(&self, degree: usize) -> Vec<Self::Key>;

    fn act_lin(&self, v: &LinComb<Self::Key>, a: &LinComb<HBasis<Self>>) -> Result<LinComb<Self::Key>> {
        let mut out = LinComb::zero();
        for (k, c) in v.iter() {
            for (b, d) in a.iter() {
                out.add_scaled(&self.act(k, b)?, &(c * d));
            }
        }
        Ok(out)
    }

    fn coact_lin(&self, v: &LinComb<Self::Key>) -> Result<LinComb<(Self::Key, HBasis<Self>)>> {
        v.map_linear(|k| self.coact(k))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct YdReport {
    pub module: String,
    pub carrier_size: usize,
    pub algebra_size: usize,
    pub unit_action: bool,
    pub action_associative: bool,
    pub coaction_counit: bool,
    pub coaction_coassociative: bool,
    pub compatibility: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl YdReport {
    pub fn pass(&self) -> bool {
        self.unit_action
            && self.action_associative
            && self.coaction_counit
            && self.coaction_coassociative
            && self.compatibility
    }
}

/// Checks the module, comodule and compatibility axioms on all carrier
/// vectors of degree at most `carrier_degree` against all algebra basis
/// elements of degree at most `algebra_degree`.
pub fn check_yd<M: YdModule>(m: &M, carrier_degree: usize, algebra_degree: usize) -> Result<YdReport> {
    let h = m.hopf();
    let vs = m.carrier_basis(carrier_degree);
    let alg = h.basis_upto(algebra_degree);
    let mut r = YdReport {
        module: m.name(),
        carrier_size: vs.len(),
        algebra_size: alg.len(),
        unit_action: true,
        action_associative: true,
        coaction_counit: true,
        coaction_coassociative: true,
        compatibility: true,
        witness: None,
    };
    let witness = |r: &mut YdReport, s: String| {
        if r.witness.is_none() {
            r.witness = Some(s);
        }
    };
    let one = h.one();
    for v in &vs {
        let vv = LinComb::basis(v.clone());
        if m.act_lin(&vv, &one)? != vv {
            r.unit_action = false;
            witness(&mut r, format!("{:?} <- 1", v));
        }
        let co = m.coact(v)?;
        // (id ⊗ ε) α = id
        let mut counit = LinComb::zero();
        for ((w, a), c) in co.iter() {
            counit.add_term(w.clone(), c * &h.counit_basis(a));
        }
        if counit != vv {
            r.coaction_counit = false;
            witness(&mut r, format!("counit at {:?}", v));
        }
        // (α ⊗ id) α = (id ⊗ Δ) α
        let mut lhs: LinComb<(M::Key, HBasis<M>, HBasis<M>)> = LinComb::zero();
        let mut rhs: LinComb<(M::Key, HBasis<M>, HBasis<M>)> = LinComb::zero();
        for ((w, a), c) in co.iter() {
            for ((u, b), d) in m.coact(w)?.iter() {
                lhs.add_term((u.clone(), b.clone(), a.clone()), c * d);
            }
            for (legs, d) in h.coproduct_basis(a)?.iter() {
                rhs.add_term((w.clone(), legs[0].clone(), legs[1].clone()), c * d);
            }
        }
        if lhs != rhs {
            r.coaction_coassociative = false;
            witness(&mut r, format!("coassociativity at {:?}", v));
        }
        for a in &alg {
            let va = m.act(v, a)?;
            for b in &alg {
                let l = m.act_lin(&va, &LinComb::basis(b.clone()))?;
                let ab = h.mul_basis(a, b)?;
                if l != m.act_lin(&vv, &ab)? {
                    r.action_associative = false;
                    witness(&mut r, format!("({:?} <- {:?}) <- {:?}", v, a, b));
                }
            }
            // (v ← a)₀ ⊗ (v ← a)₁ = v₀ ← a₂ ⊗ S(a₁) v₁ a₃
            let lhs = m.coact_lin(&va)?;
            let mut rhs = LinComb::zero();
            for (legs, c) in h.iterated_coproduct(&LinComb::basis(a.clone()), 3)?.iter() {
                let s = h.antipode_basis(&legs[0])?;
                let a3 = LinComb::basis(legs[2].clone());
                for ((w, x), d) in co.iter() {
                    let acted = m.act(w, &legs[1])?;
                    let right = h.mul(&h.mul(&s, &LinComb::basis(x.clone()))?, &a3)?;
                    for (u, e) in acted.iter() {
                        for (y, f) in right.iter() {
                            rhs.add_term((u.clone(), y.clone()), &(&(c * d) * e) * f);
                        }
                    }
                }
            }
            if lhs != rhs {
                r.compatibility = false;
                witness(&mut r, format!("compatibility at ({:?}, {:?})", v, a));
            }
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests;

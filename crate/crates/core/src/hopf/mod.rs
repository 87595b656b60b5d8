//! Hopf algebra kernels: structure-table algebras and the rewriting
//! kernel for B(E).

mod axioms;
mod be;
mod finite;
mod group;
mod presentation;
mod rewrite;

pub use axioms::{check_hopf_axioms, check_kac, AxiomFailure, AxiomReport};
pub use be::{e_q, BeAlgebra, EvenPart, Word};
pub use finite::{builtin_finite, FiniteHopf, FiniteHopfTables};
pub use group::{builtin_group, Group};
pub use presentation::{presentation_check_as_ah, PresentationReport};
pub use rewrite::{deglex, derive_be_relations, RewriteRule, RewriteSystem, Strategy};

use crate::error::Result;
use crate::lincomb::{LinComb, Tensor};
use crate::scalar::Scalar;
use std::fmt::Debug;
use std::hash::Hash;

/// A Hopf algebra presented by a (possibly degree-filtered) basis and the
/// structure maps on basis elements. Everything else extends linearly.
pub trait HopfAlgebra: Send + Sync {
    type Basis: Clone + Ord + Eq + Hash + Debug + Send + Sync;

    fn name(&self) -> String;

    /// All basis elements of degree at most `degree`. Finite-dimensional
    /// algebras put every basis element in degree 0.
    fn basis_upto(&self, degree: usize) -> Vec<Self::Basis>;
    fn degree(&self, b: &Self::Basis) -> usize;
    fn label(&self, b: &Self::Basis) -> String;

    fn one(&self) -> LinComb<Self::Basis>;
    fn mul_basis(&self, x: &Self::Basis, y: &Self::Basis) -> Result<LinComb<Self::Basis>>;
    /// Two-leg tensor, legs stored as `vec![x1, x2]`.
    fn coproduct_basis(&self, x: &Self::Basis) -> Result<Tensor<Self::Basis>>;
    fn counit_basis(&self, x: &Self::Basis) -> Scalar;
    fn antipode_basis(&self, x: &Self::Basis) -> Result<LinComb<Self::Basis>>;

    /// Haar state, when the algebra is declared cosemisimple.
    fn haar_basis(&self, _x: &Self::Basis) -> Option<Scalar> {
        None
    }

    fn mul(&self, x: &LinComb<Self::Basis>, y: &LinComb<Self::Basis>) -> Result<LinComb<Self::Basis>> {
        let mut out = LinComb::zero();
        for (a, ca) in x.iter() {
            for (b, cb) in y.iter() {
                out.add_scaled(&self.mul_basis(a, b)?, &(ca * cb));
            }
        }
        Ok(out)
    }

    /// Product of a list of elements, left to right.
    fn mul_all(&self, xs: &[LinComb<Self::Basis>]) -> Result<LinComb<Self::Basis>> {
        let mut acc = self.one();
        for x in xs {
            acc = self.mul(&acc, x)?;
        }
        Ok(acc)
    }

    fn coproduct(&self, x: &LinComb<Self::Basis>) -> Result<Tensor<Self::Basis>> {
        x.map_linear(|b| self.coproduct_basis(b))
    }

    fn counit(&self, x: &LinComb<Self::Basis>) -> Scalar {
        x.eval_linear::<()>(|b| Ok(self.counit_basis(b))).unwrap()
    }

    fn antipode(&self, x: &LinComb<Self::Basis>) -> Result<LinComb<Self::Basis>> {
        x.map_linear(|b| self.antipode_basis(b))
    }

    fn haar(&self, x: &LinComb<Self::Basis>) -> Option<Scalar> {
        let mut out = Scalar::zero();
        for (b, c) in x.iter() {
            out += &(c * &self.haar_basis(b)?);
        }
        Some(out)
    }

    /// `n`-fold iterated coproduct (`n` legs, `n >= 1`).
    fn iterated_coproduct(&self, x: &LinComb<Self::Basis>, n: usize) -> Result<Tensor<Self::Basis>> {
        assert!(n >= 1);
        let mut cur: Tensor<Self::Basis> = x.iter().map(|(b, c)| (vec![b.clone()], c.clone())).collect();
        for _ in 1..n {
            let mut next = Tensor::zero();
            for (legs, c) in cur.iter() {
                let (last, init) = legs.split_last().unwrap();
                for (pair, d) in self.coproduct_basis(last)?.iter() {
                    let mut k = init.to_vec();
                    k.extend(pair.iter().cloned());
                    next.add_term(k, c * d);
                }
            }
            cur = next;
        }
        Ok(cur)
    }

    /// Multiplication of tensors leg by leg.
    fn mul_tensor(&self, x: &Tensor<Self::Basis>, y: &Tensor<Self::Basis>) -> Result<Tensor<Self::Basis>> {
        let mut out = Tensor::zero();
        for (kx, cx) in x.iter() {
            for (ky, cy) in y.iter() {
                let mut prod: Tensor<Self::Basis> = Tensor::term(Vec::new(), cx * cy);
                for (a, b) in kx.iter().zip(ky) {
                    let leg = self.mul_basis(a, b)?;
                    prod = crate::lincomb::tensor_concat(
                        &prod,
                        &leg.iter().map(|(k, c)| (vec![k.clone()], c.clone())).collect(),
                    );
                }
                out.add_assign(&prod);
            }
        }
        Ok(out)
    }

    /// Right coadjoint coaction `a -> a2 ⊗ S(a1) a3`.
    fn coadjoint(&self, x: &LinComb<Self::Basis>) -> Result<Tensor<Self::Basis>> {
        let mut out = Tensor::zero();
        for (legs, c) in self.iterated_coproduct(x, 3)?.iter() {
            let s = self.antipode_basis(&legs[0])?;
            let right = self.mul(&s, &LinComb::basis(legs[2].clone()))?;
            for (k, d) in right.iter() {
                out.add_term(vec![legs[1].clone(), k.clone()], c * d);
            }
        }
        Ok(out)
    }
}

/// Applies a linear map to one leg of a tensor.
pub fn map_leg<B: Ord + Clone>(
    t: &Tensor<B>,
    leg: usize,
    mut f: impl FnMut(&B) -> Result<LinComb<B>>,
) -> Result<Tensor<B>> {
    let mut out = Tensor::zero();
    for (k, c) in t.iter() {
        for (b, d) in f(&k[leg])?.iter() {
            let mut nk = k.clone();
            nk[leg] = b.clone();
            out.add_term(nk, c * d);
        }
    }
    Ok(out)
}

/// Wraps single basis elements as one-leg tensors.
pub fn as_tensor<B: Ord + Clone>(x: &LinComb<B>) -> Tensor<B> {
    x.iter().map(|(b, c)| (vec![b.clone()], c.clone())).collect()
}

#[cfg(test)]
mod be_tests;

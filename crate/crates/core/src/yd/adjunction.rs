use super::comodule::Comodule;
use super::YdModule;
use crate::error::Result;
use crate::hopf::HopfAlgebra;
use crate::linalg::{kernel_basis, SparseMatrix, SparseVec};
use crate::lincomb::LinComb;
use std::collections::BTreeMap;

/// Basis of the colinear functionals `ψ: W → ℂ`, i.e. `ψ(w₀) w₁ = ψ(w) 1`.
/// Each vector lists the values on the basis of `W`.
pub fn colinear_functionals<H: HopfAlgebra>(h: &H, w: &Comodule<H::Basis>) -> Vec<SparseVec> {
    let n = w.dim();
    let one = h.one();
    // Row (j, b): Σ_i ψ_i [coefficient of e_i ⊗ b in α(e_j)] - ψ_j [coefficient of b in 1].
    let mut rows: BTreeMap<(usize, H::Basis), LinComb<usize>> = BTreeMap::new();
    for (j, co) in w.coaction.iter().enumerate() {
        for ((i, b), c) in co.iter() {
            rows.entry((j, b.clone())).or_default().add_term(*i, c.clone());
        }
        for (b, c) in one.iter() {
            rows.entry((j, b.clone())).or_default().add_term(j, -c);
        }
    }
    let mut m = SparseMatrix::zeros(rows.len(), n);
    for (r, eq) in rows.values().enumerate() {
        for (i, c) in eq.iter() {
            m.set(r, *i, c.clone());
        }
    }
    kernel_basis(&m)
}

/// `f̃(v ⊗ a) = f(v) ← a`: the YD map `V ⊠ A → X` attached to a colinear
/// `f: V → X`, given by the images `f[j] = f(e_j)`.
pub fn adjunction_extend<X: YdModule>(
    x: &X,
    f: &[LinComb<X::Key>],
    (j, a): &(usize, <X::H as HopfAlgebra>::Basis),
) -> Result<LinComb<X::Key>> {
    x.act_lin(&f[*j], &LinComb::basis(a.clone()))
}

/// `F ↦ F(− ⊗ 1)`, inverse to [`adjunction_extend`].
pub fn adjunction_restrict<H: HopfAlgebra, K: Ord + Clone>(
    h: &H,
    dim_v: usize,
    big_f: impl Fn(&(usize, H::Basis)) -> Result<LinComb<K>>,
) -> Result<Vec<LinComb<K>>> {
    let one = h.one();
    (0..dim_v)
        .map(|j| {
            let mut out = LinComb::zero();
            for (b, c) in one.iter() {
                out.add_scaled(&big_f(&(j, b.clone()))?, c);
            }
            Ok(out)
        })
        .collect()
}

use crate::error::{Error, Result};
use crate::hopf::{BeAlgebra, HopfAlgebra, Word};
use crate::lincomb::LinComb;
use crate::scalar::Scalar;
use serde::Serialize;

/// Finite-dimensional right comodule: `coaction[j] = Σ c e_i ⊗ a`, stored as
/// terms `(i, a)`.
#[derive(Clone, Debug)]
pub struct Comodule<B: Ord + Clone> {
    pub name: String,
    pub labels: Vec<String>,
    pub coaction: Vec<LinComb<(usize, B)>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ComoduleReport {
    pub comodule: String,
    pub counit: bool,
    pub coassociative: bool,
}

impl ComoduleReport {
    pub fn pass(&self) -> bool {
        self.counit && self.coassociative
    }
}

impl<B: Ord + Clone + std::fmt::Debug> Comodule<B> {
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    /// `ℂ` with `1 ↦ 1 ⊗ 1`.
    pub fn trivial<H: HopfAlgebra<Basis = B>>(h: &H) -> Comodule<B> {
        Comodule {
            name: "C".into(),
            labels: vec!["1".into()],
            coaction: vec![h.one().iter().map(|(b, c)| ((0, b.clone()), c.clone())).collect()],
        }
    }

    /// `α(e_i*) = Σ_j e_j* ⊗ S(a_ij)` where `α(e_j) = Σ_i e_i ⊗ a_ij`.
    pub fn dual<H: HopfAlgebra<Basis = B>>(&self, h: &H) -> Result<Comodule<B>> {
        let n = self.dim();
        let mut coaction = vec![LinComb::zero(); n];
        for (j, co) in self.coaction.iter().enumerate() {
            for ((i, a), c) in co.iter() {
                for (s, d) in h.antipode_basis(a)?.iter() {
                    coaction[*i].add_term((j, s.clone()), c * d);
                }
            }
        }
        Ok(Comodule {
            name: format!("{}*", self.name),
            labels: self.labels.iter().map(|l| format!("{}*", l)).collect(),
            coaction,
        })
    }

    /// `v ⊗ w ↦ v₀ ⊗ w₀ ⊗ v₁ w₁`; basis index `i * dim(W) + j`.
    pub fn tensor<H: HopfAlgebra<Basis = B>>(&self, other: &Comodule<B>, h: &H) -> Result<Comodule<B>> {
        let m = other.dim();
        let mut labels = Vec::new();
        let mut coaction = Vec::new();
        for (i, ci) in self.coaction.iter().enumerate() {
            for (j, cj) in other.coaction.iter().enumerate() {
                labels.push(format!("{}⊗{}", self.labels[i], other.labels[j]));
                let mut out = LinComb::zero();
                for ((k, a), c) in ci.iter() {
                    for ((l, b), d) in cj.iter() {
                        for (p, e) in h.mul_basis(a, b)?.iter() {
                            out.add_term((k * m + l, p.clone()), &(c * d) * e);
                        }
                    }
                }
                coaction.push(out);
            }
        }
        Ok(Comodule {
            name: format!("{}⊗{}", self.name, other.name),
            labels,
            coaction,
        })
    }

    pub fn check<H: HopfAlgebra<Basis = B>>(&self, h: &H) -> Result<ComoduleReport> {
        let mut counit = true;
        let mut coassociative = true;
        for (j, co) in self.coaction.iter().enumerate() {
            let mut e = LinComb::zero();
            let mut lhs: LinComb<(usize, B, B)> = LinComb::zero();
            let mut rhs: LinComb<(usize, B, B)> = LinComb::zero();
            for ((i, a), c) in co.iter() {
                e.add_term(*i, c * &h.counit_basis(a));
                for ((k, b), d) in self.coaction[*i].iter() {
                    lhs.add_term((*k, b.clone(), a.clone()), c * d);
                }
                for (legs, d) in h.coproduct_basis(a)?.iter() {
                    rhs.add_term((*i, legs[0].clone(), legs[1].clone()), c * d);
                }
            }
            counit &= e == LinComb::basis(j);
            coassociative &= lhs == rhs;
        }
        Ok(ComoduleReport {
            comodule: self.name.clone(),
            counit,
            coassociative,
        })
    }

    /// Applies the coaction to a vector, giving terms `(i, a)`.
    pub fn coact_vec(&self, v: &LinComb<usize>) -> LinComb<(usize, B)> {
        let mut out = LinComb::zero();
        for (j, c) in v.iter() {
            out.add_scaled(&self.coaction[*j], c);
        }
        out
    }

    pub fn from_table(name: &str, labels: Vec<String>, coaction: Vec<LinComb<(usize, B)>>) -> Result<Comodule<B>> {
        let n = labels.len();
        if coaction.len() != n || coaction.iter().any(|c| c.keys().any(|(i, _)| *i >= n)) {
            return Err(Error::Shape(format!(
                "comodule {}: coaction table does not match {} labels",
                name, n
            )));
        }
        Ok(Comodule {
            name: name.into(),
            labels,
            coaction,
        })
    }
}

/// `V = ℂ²` with `α(e_j) = Σ_i e_i ⊗ u_ij`.
pub fn fundamental_comodule(b: &BeAlgebra) -> Comodule<Word> {
    let n = b.size();
    let coaction = (0..n)
        .map(|j| (0..n).map(|i| ((i, vec![(i * n + j) as u8]), Scalar::one())).collect())
        .collect();
    Comodule {
        name: "V".into(),
        labels: (1..=n).map(|i| format!("e{}", i)).collect(),
        coaction,
    }
}

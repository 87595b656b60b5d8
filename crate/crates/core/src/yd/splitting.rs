//! The section `σ: ℂℤ₂ → B(E)`, the splitting maps `ι`, `μ` that exhibit
//! `W ⊠ B(E)` as relative projective over the even part, and the
//! coinvariance checks used by the PSL coordinates.

use super::comodule::Comodule;
use super::modules::FreeYd;
use super::YdModule;
use crate::error::{Error, Result};
use crate::hopf::{BeAlgebra, HopfAlgebra, Word};
use crate::linalg::dense_inverse;
use crate::lincomb::LinComb;
use crate::scalar::Scalar;
use serde::Serialize;

/// `σ(e) = 1`, `σ(g) = x = t⁻¹ Σ F_ij u_ij` with `F = E (Eᵗ)⁻¹`, `t = tr F`.
#[derive(Clone, Debug)]
pub struct SigmaSection {
    pub f: Vec<Vec<Scalar>>,
    pub t: Scalar,
    pub x: LinComb<Word>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SigmaReport {
    pub algebra: String,
    pub t: Scalar,
    pub sigma_g: String,
    /// `pσ = id`
    pub condition1: bool,
    /// `σ(x)₁ ⊗ p(σ(x)₂) = σ(x₁) ⊗ x₂`
    pub condition2: bool,
    /// `σ(x)₁ S(σ(x)₃) ⊗ σ(x)₂ = 1 ⊗ σ(x)`
    pub condition3: bool,
}

impl SigmaReport {
    pub fn pass(&self) -> bool {
        self.condition1 && self.condition2 && self.condition3
    }
}

pub fn sigma_section(b: &BeAlgebra) -> Result<SigmaSection> {
    let (f, t) = section_matrix(b.matrix_e())?;
    let n = f.len();
    let tinv = t.inv()?;
    let mut x = LinComb::zero();
    for i in 0..n {
        for j in 0..n {
            x.add_term(vec![(i * n + j) as u8], &f[i][j] * &tinv);
        }
    }
    Ok(SigmaSection { f, t, x })
}

/// `F = E (Eᵗ)⁻¹` and `t = tr F`; fails when `t = 0`.
pub(crate) fn section_matrix(e: &[Vec<Scalar>]) -> Result<(Vec<Vec<Scalar>>, Scalar)> {
    let n = e.len();
    let et: Vec<Vec<Scalar>> = (0..n).map(|i| (0..n).map(|j| e[j][i].clone()).collect()).collect();
    let et_inv = dense_inverse(&et).ok_or_else(|| Error::Invalid("E is singular".into()))?;
    let f: Vec<Vec<Scalar>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).fold(Scalar::zero(), |acc, k| acc + &e[i][k] * &et_inv[k][j]))
                .collect()
        })
        .collect();
    let t = (0..n).fold(Scalar::zero(), |acc, i| acc + &f[i][i]);
    if t.is_zero() {
        return Err(Error::Invalid("tr(E (E^t)^-1) = 0: no section of this form".into()));
    }
    Ok((f, t))
}

impl SigmaSection {
    /// `σ` on `ℂℤ₂` (basis 0 = e, 1 = g).
    pub fn apply(&self, l: &LinComb<usize>) -> LinComb<Word> {
        let mut out = LinComb::zero();
        for (k, c) in l.iter() {
            if *k == 0 {
                out.add_term(Vec::new(), c.clone());
            } else {
                out.add_scaled(&self.x, c);
            }
        }
        out
    }

    pub fn check(&self, b: &BeAlgebra) -> Result<SigmaReport> {
        let mut c1 = true;
        let mut c2 = true;
        let mut c3 = true;
        for g in 0..2usize {
            let sx = self.apply(&LinComb::basis(g));
            c1 &= b.project(&sx) == LinComb::basis(g);
            // group-like x, so σ(x₁) ⊗ x₂ = σ(x) ⊗ x
            let mut lhs: LinComb<(Word, usize)> = LinComb::zero();
            for (legs, c) in b.coproduct(&sx)?.iter() {
                for (h, d) in b.project_word(&legs[1]).iter() {
                    lhs.add_term((legs[0].clone(), *h), c * d);
                }
            }
            let rhs: LinComb<(Word, usize)> = sx.iter().map(|(w, c)| ((w.clone(), g), c.clone())).collect();
            c2 &= lhs == rhs;
            let mut lhs: LinComb<(Word, Word)> = LinComb::zero();
            for (legs, c) in b.iterated_coproduct(&sx, 3)?.iter() {
                let prod = b.mul(&LinComb::basis(legs[0].clone()), &b.antipode_basis(&legs[2])?)?;
                for (w, d) in prod.iter() {
                    lhs.add_term((w.clone(), legs[1].clone()), c * d);
                }
            }
            let rhs: LinComb<(Word, Word)> = sx.iter().map(|(w, c)| ((Vec::new(), w.clone()), c.clone())).collect();
            c3 &= lhs == rhs;
        }
        Ok(SigmaReport {
            algebra: b.name(),
            t: self.t.clone(),
            sigma_g: b.format(&self.x),
            condition1: c1,
            condition2: c2,
            condition3: c3,
        })
    }
}

/// `ι(w ⊗ a) = w ⊗ σp(a₁)₁ ⊗ S(σp(a₁)₂) a₂`, terms `(w, a', b)`.
pub fn iota(b: &BeAlgebra, sigma: &SigmaSection, (j, a): &(usize, Word)) -> Result<LinComb<(usize, Word, Word)>> {
    let mut out = LinComb::zero();
    for (legs, c) in b.coproduct_basis(a)?.iter() {
        let s = sigma.apply(&b.project_word(&legs[0]));
        if s.is_zero() {
            continue;
        }
        let a2 = LinComb::basis(legs[1].clone());
        for (sl, d) in b.coproduct(&s)?.iter() {
            let right = b.mul(&b.antipode_basis(&sl[1])?, &a2)?;
            for (r, e) in right.iter() {
                out.add_term((*j, sl[0].clone(), r.clone()), &(c * d) * e);
            }
        }
    }
    Ok(out)
}

/// `μ(w ⊗ a ⊗ b) = w ⊗ ab`.
pub fn mu(b: &BeAlgebra, (j, a, c): &(usize, Word, Word)) -> Result<LinComb<(usize, Word)>> {
    Ok(b.mul_basis(a, c)?.into_iter().map(|(p, d)| ((*j, p), d)).collect())
}

#[derive(Clone, Debug, Serialize)]
pub struct IotaMuReport {
    pub comodule: String,
    pub inputs: usize,
    pub mu_iota_identity: bool,
    /// `ι(w ⊗ ab) = ι(w ⊗ a) b` for even `b`.
    pub even_linear: bool,
    /// Checked only when the comodule takes values in the even part.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub colinear: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl IotaMuReport {
    pub fn pass(&self) -> bool {
        self.mu_iota_identity && self.even_linear && self.colinear.unwrap_or(true)
    }
}

/// Checks `μι = id`, right linearity over the even part and (for
/// comodules over the even part) colinearity of `ι`, on all `w ⊗ a` with
/// `a` of degree at most `degree`.
pub fn iota_mu_check(b: &BeAlgebra, w: &Comodule<Word>, degree: usize) -> Result<IotaMuReport> {
    let sigma = sigma_section(b)?;
    let alg = b.basis_upto(degree);
    let even: Vec<Word> = b.basis_upto(2).into_iter().filter(|x| x.len() % 2 == 0).collect();
    let is_even_comodule = w.coaction.iter().all(|c| c.keys().all(|(_, a)| a.len() % 2 == 0));
    let free = FreeYd::new(b, w.clone());
    let mut report = IotaMuReport {
        comodule: w.name.clone(),
        inputs: w.dim() * alg.len(),
        mu_iota_identity: true,
        even_linear: true,
        colinear: if is_even_comodule { Some(true) } else { None },
        witness: None,
    };
    let note = |r: &mut IotaMuReport, s: String| {
        if r.witness.is_none() {
            r.witness = Some(s);
        }
    };
    for j in 0..w.dim() {
        for a in &alg {
            let key = (j, a.clone());
            let ia = iota(b, &sigma, &key)?;
            let back = ia.map_linear(|t| mu(b, t))?;
            if back != LinComb::basis(key.clone()) {
                report.mu_iota_identity = false;
                note(&mut report, format!("μι(e{} ⊗ {}) ≠ id", j + 1, b.word_string(a)));
            }
            for c in &even {
                let lhs = b.mul_basis(a, c)?.map_linear(|p| iota(b, &sigma, &(j, p.clone())))?;
                let rhs = ia.map_linear(|(k, x, y)| {
                    Ok::<_, Error>(
                        b.mul_basis(y, c)?
                            .into_iter()
                            .map(|(p, d)| ((*k, x.clone(), p), d))
                            .collect(),
                    )
                })?;
                if lhs != rhs {
                    report.even_linear = false;
                    note(
                        &mut report,
                        format!(
                            "ι not linear at e{} ⊗ {} · {}",
                            j + 1,
                            b.word_string(a),
                            b.word_string(c)
                        ),
                    );
                }
            }
            if is_even_comodule {
                // β ι (w ⊗ a), β being the coaction of the free module on W ⊠ A
                let mut lhs: LinComb<((usize, Word, Word), Word)> = LinComb::zero();
                for ((k, x, y), c) in ia.iter() {
                    let gamma = free.coact(&(*k, x.clone()))?;
                    for (ylegs, d) in b.iterated_coproduct(&LinComb::basis(y.clone()), 3)?.iter() {
                        let s = b.antipode_basis(&ylegs[0])?;
                        for (((k0, x0), u1), e) in gamma.iter() {
                            let right = b.mul(
                                &b.mul(&s, &LinComb::basis(u1.clone()))?,
                                &LinComb::basis(ylegs[2].clone()),
                            )?;
                            let coef = &(c * d) * e;
                            for (r, f) in right.iter() {
                                lhs.add_term(((*k0, x0.clone(), ylegs[1].clone()), r.clone()), &coef * f);
                            }
                        }
                    }
                }
                let mut rhs: LinComb<((usize, Word, Word), Word)> = LinComb::zero();
                for (((k0, x0), z), c) in free.coact(&key)?.iter() {
                    for (t, d) in iota(b, &sigma, &(*k0, x0.clone()))?.iter() {
                        rhs.add_term((t.clone(), z.clone()), c * d);
                    }
                }
                if lhs != rhs {
                    report.colinear = Some(false);
                    note(
                        &mut report,
                        format!("ι not colinear at e{} ⊗ {}", j + 1, b.word_string(a)),
                    );
                }
            }
        }
    }
    Ok(report)
}

/// `χ = q⁻¹ a + q d`.
pub fn chi(b: &BeAlgebra) -> Result<LinComb<Word>> {
    let q = b
        .q()
        .ok_or_else(|| Error::Invalid("χ is defined for O(SL_q(2)) only".into()))?;
    let mut x = LinComb::zero();
    x.add_term(vec![0], q.inv()?);
    x.add_term(vec![3], q.clone());
    Ok(x)
}

#[derive(Clone, Debug, Serialize)]
pub struct ChiReport {
    pub chi: String,
    pub unit_coinvariant: bool,
    pub chi_coinvariant: bool,
    /// `ad_r(a) ≠ a ⊗ 1`, expected true.
    pub negative_control: bool,
}

impl ChiReport {
    pub fn pass(&self) -> bool {
        self.unit_coinvariant && self.chi_coinvariant && self.negative_control
    }
}

fn invariant(b: &BeAlgebra, x: &LinComb<Word>) -> Result<bool> {
    let want: LinComb<Vec<Word>> = x
        .iter()
        .map(|(w, c)| (vec![w.clone(), Vec::new()], c.clone()))
        .collect();
    Ok(b.coadjoint(x)? == want)
}

pub fn chi_coinvariant_check(b: &BeAlgebra) -> Result<ChiReport> {
    let x = chi(b)?;
    Ok(ChiReport {
        chi: b.format(&x),
        unit_coinvariant: invariant(b, &b.one())?,
        chi_coinvariant: invariant(b, &x)?,
        negative_control: !invariant(b, &b.named("a")?)?,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct AdjointRestrictionReport {
    pub pairs: usize,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// `a₂ ⊗ S(a₁) c a₃` has even second leg for every basis `a` of degree at
/// most `deg_a` and even basis `c` of degree at most `deg_c`.
pub fn adjoint_restriction_check(b: &BeAlgebra, deg_a: usize, deg_c: usize) -> Result<AdjointRestrictionReport> {
    let alg = b.basis_upto(deg_a);
    let even: Vec<Word> = b.basis_upto(deg_c).into_iter().filter(|w| w.len() % 2 == 0).collect();
    let mut report = AdjointRestrictionReport {
        pairs: alg.len() * even.len(),
        pass: true,
        witness: None,
    };
    for a in &alg {
        let d3 = b.iterated_coproduct(&LinComb::basis(a.clone()), 3)?;
        for c in &even {
            let mut second = LinComb::zero();
            for (legs, k) in d3.iter() {
                let v = b.mul(
                    &b.mul(&b.antipode_basis(&legs[0])?, &LinComb::basis(c.clone()))?,
                    &LinComb::basis(legs[2].clone()),
                )?;
                for (w, e) in v.iter() {
                    second.add_term((legs[1].clone(), w.clone()), k * e);
                }
            }
            if second.keys().any(|(_, w)| w.len() % 2 == 1) {
                report.pass = false;
                if report.witness.is_none() {
                    report.witness = Some(format!("a = {}, c = {}", b.word_string(a), b.word_string(c)));
                }
            }
        }
    }
    Ok(report)
}

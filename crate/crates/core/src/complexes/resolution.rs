//! The four-term resolution of the trivial module over `O(SL_q(2))`
//!
//! `0 → ℂ⊠A → (V*⊗V)⊠A → (V*⊗V)⊠A → ℂ⊠A → ℂ → 0`
//!
//! and the cochain complexes obtained by applying `Hom(−, ℂ)` in
//! Yetter-Drinfeld modules over `A` and over its even part `B₊`.

use super::ComplexReport;
use crate::error::{Error, Result};
use crate::hopf::{BeAlgebra, HopfAlgebra, Word};
use crate::linalg::{CochainComplex, SparseMatrix, SparseVec};
use crate::lincomb::LinComb;
use crate::scalar::Scalar;
use crate::yd::{chi, colinear_functionals, fundamental_comodule, Comodule};
use serde::Serialize;

type Elem = LinComb<(usize, Word)>;
/// `table[w]` lists `(w', y)` with `φ(w ⊗ x) = Σ w' ⊗ y x`.
type Table = Vec<Vec<(usize, LinComb<Word>)>>;

/// The maps `φ₁, φ₂, φ₃` of the resolution. `V*⊗V` is numbered
/// `e_i* ⊗ e_j ↦ 2i + j` (0-based).
pub struct ResolutionMaps<'a> {
    pub b: &'a BeAlgebra,
    tables: [Table; 3],
}

impl<'a> ResolutionMaps<'a> {
    pub fn new(b: &'a BeAlgebra) -> Result<Self> {
        let q = b
            .q()
            .ok_or_else(|| Error::Invalid("the resolution is defined for O(SL_q(2)) only".into()))?
            .clone();
        let qi = q.inv()?;
        if (&q + &qi).is_zero() {
            return Err(Error::Invalid("q + 1/q must be nonzero".into()));
        }
        let one = b.one();
        let (a, bb, c, d) = (b.gen(0, 0), b.gen(0, 1), b.gen(1, 0), b.gen(1, 1));
        let lin = |terms: &[(&LinComb<Word>, Scalar)]| -> LinComb<Word> {
            let mut out = LinComb::zero();
            for (x, s) in terms {
                out.add_scaled(x, s);
            }
            out
        };
        let m1 = Scalar::from_i64(-1);
        let phi1 = vec![vec![
            (0, lin(&[(&one, -&qi), (&d, q.clone())])),
            (1, lin(&[(&c, m1.clone())])),
            (2, lin(&[(&bb, m1.clone())])),
            (3, lin(&[(&one, -&q), (&a, qi.clone())])),
        ]];
        let phi2 = vec![
            vec![(0, one.clone()), (2, lin(&[(&bb, -&q)])), (3, a.clone())],
            vec![(0, bb.clone()), (1, lin(&[(&one, Scalar::one()), (&a, -&qi)]))],
            vec![(2, lin(&[(&one, Scalar::one()), (&d, -&q)])), (3, c.clone())],
            vec![(0, d.clone()), (1, lin(&[(&c, -&qi)])), (3, one.clone())],
        ];
        let phi3 = vec![
            vec![(0, lin(&[(&a, Scalar::one()), (&one, m1.clone())]))],
            vec![(0, bb.clone())],
            vec![(0, c.clone())],
            vec![(0, lin(&[(&d, Scalar::one()), (&one, m1)]))],
        ];
        Ok(ResolutionMaps {
            b,
            tables: [phi1, phi2, phi3],
        })
    }

    /// `φ_k` for `k = 1, 2, 3`.
    pub fn phi(&self, k: usize, x: &Elem) -> Result<Elem> {
        let table = &self.tables[k - 1];
        let mut out = LinComb::zero();
        for ((w, m), c) in x.iter() {
            let row = table
                .get(*w)
                .ok_or_else(|| Error::Invalid(format!("φ{} has no input e{}", k, w)))?;
            for (w2, y) in row {
                for (p, e) in self.b.mul(y, &LinComb::basis(m.clone()))?.iter() {
                    out.add_term((*w2, p.clone()), c * e);
                }
            }
        }
        Ok(out)
    }

    /// `w ⊗ x ↦ ε(x)` on `ℂ ⊠ A`.
    pub fn augmentation(&self, x: &Elem) -> Scalar {
        x.iter()
            .fold(Scalar::zero(), |acc, ((_, m), c)| acc + c * &self.b.counit_word(m))
    }

    /// Dimension of the source of `φ_k`.
    pub fn source_dim(&self, k: usize) -> usize {
        self.tables[k - 1].len()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ResolutionCheck {
    /// Inputs `w ⊗ m` for monomials `m` of degree at most this.
    pub degree: usize,
    /// `φ₂φ₁ = φ₃φ₂ = εφ₃ = 0` on all inputs.
    pub zero_compositions: bool,
    /// The same, restricted to even `m`.
    pub zero_compositions_even: bool,
    /// `φ(w ⊗ xy) = φ(w ⊗ x) y`.
    pub right_linear: bool,
    /// `dim Hom^H(V*⊗V, ℂ)`.
    pub colinear_functionals: usize,
    /// Reconstructed `ψ: W ⊠ A → ℂ` from a pair of functionals is linear
    /// and colinear over the even part, and kills `b`, `c`, `d - a`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reconstruction: Option<bool>,
}

impl ResolutionCheck {
    pub fn pass(&self) -> bool {
        self.zero_compositions
            && self.zero_compositions_even
            && self.right_linear
            && self.colinear_functionals == 1
            && self.reconstruction.unwrap_or(true)
    }
}

#[derive(Clone, Debug)]
pub struct ResolutionComplex {
    pub complex: CochainComplex,
    pub check: ResolutionCheck,
    pub report: ComplexReport,
}

fn check_maps(maps: &ResolutionMaps, degree: usize) -> Result<(bool, bool, bool)> {
    let b = maps.b;
    if b.degree_bound() < degree + 2 {
        return Err(Error::Invalid(format!(
            "degree bound {} is below {} (check degree + 2)",
            b.degree_bound(),
            degree + 2
        )));
    }
    let monomials = b.basis_upto(degree);
    let (mut all, mut even) = (true, true);
    for m in &monomials {
        let mut ok = true;
        for w in 0..maps.source_dim(1) {
            let x = LinComb::basis((w, m.clone()));
            ok &= maps.phi(2, &maps.phi(1, &x)?)?.is_zero();
        }
        for w in 0..maps.source_dim(2) {
            let x = LinComb::basis((w, m.clone()));
            ok &= maps.phi(3, &maps.phi(2, &x)?)?.is_zero();
        }
        for w in 0..maps.source_dim(3) {
            let x = LinComb::basis((w, m.clone()));
            ok &= maps.augmentation(&maps.phi(3, &x)?).is_zero();
        }
        all &= ok;
        if m.len() % 2 == 0 {
            even &= ok;
        }
    }
    let mut linear = true;
    let small = b.basis_upto(1);
    for k in 1..=3 {
        for w in 0..maps.source_dim(k) {
            for x in &small {
                let fx = maps.phi(k, &LinComb::basis((w, x.clone())))?;
                for y in &small {
                    let lhs = maps.phi(k, &b.mul_basis(x, y)?.into_iter().map(|(p, c)| ((w, p), c)).collect())?;
                    let rhs = fx.map_linear(|(w2, p)| {
                        Ok::<_, Error>(b.mul_basis(p, y)?.into_iter().map(|(r, c)| ((*w2, r), c)).collect())
                    })?;
                    linear &= lhs == rhs;
                }
            }
        }
    }
    Ok((all, even, linear))
}

/// The single colinear functional on `V*⊗V`, scaled to 1 at `e₁*⊗e₁`.
fn normalized_functional<H: HopfAlgebra<Basis = Word>>(h: &H, w: &Comodule<Word>) -> Result<(usize, SparseVec)> {
    let fs = colinear_functionals(h, w);
    let n = fs.len();
    if n != 1 {
        return Err(Error::Inconsistent(format!(
            "Hom^H(V*⊗V, C) has dimension {}, expected 1",
            n
        )));
    }
    let f = &fs[0];
    let lead = f
        .iter()
        .find(|(k, _)| *k == 0)
        .or_else(|| f.first())
        .map(|(_, c)| c.clone())
        .ok_or_else(|| Error::Inconsistent("zero functional".into()))?;
    let inv = lead.inv()?;
    Ok((n, f.iter().map(|(k, c)| (*k, c * &inv)).collect()))
}

fn value(f: &[(usize, Scalar)], w: usize) -> Scalar {
    f.iter()
        .find(|(k, _)| *k == w)
        .map(|(_, c)| c.clone())
        .unwrap_or_else(Scalar::zero)
}

/// Expresses `g` as a multiple of `f`.
fn ratio(g: &[Scalar], f: &[(usize, Scalar)], what: &str) -> Result<Scalar> {
    let (k, fk) = f.first().ok_or_else(|| Error::Inconsistent("zero functional".into()))?;
    let lambda = g[*k].checked_div(fk)?;
    for (w, gw) in g.iter().enumerate() {
        if *gw != &lambda * &value(f, w) {
            return Err(Error::Inconsistent(format!("{} is not colinear", what)));
        }
    }
    Ok(lambda)
}

fn ve_comodule(b: &BeAlgebra) -> Result<Comodule<Word>> {
    let v = fundamental_comodule(b);
    let vv = v.dual(b)?.tensor(&v, b)?;
    Ok(Comodule {
        name: "V*⊗V".into(),
        ..vv
    })
}

fn q_string(b: &BeAlgebra) -> Option<String> {
    b.q().map(|q| q.to_string())
}

/// Terms `C^k = Hom(P_k)` with `P_0 = P_3 = ℂ ⊠ A` and
/// `P_1 = P_2 = (V*⊗V) ⊠ A`; `d_k` is precomposition with `φ_{3-k}`.
const PHI_OF_D: [usize; 3] = [3, 2, 1];
const TERM_IS_VV: [bool; 4] = [false, true, true, false];

/// The complex over `A = O(SL_q(2))`, each term `Hom^A(W, ℂ) ≅ ℂ` through
/// `f ↦ f ⊗ ε`.
pub fn resolution_complex_sl2(b: &BeAlgebra, degree: usize) -> Result<ResolutionComplex> {
    let maps = ResolutionMaps::new(b)?;
    let (zero, zero_even, linear) = check_maps(&maps, degree)?;
    let (nfun, fvv) = normalized_functional(b, &ve_comodule(b)?)?;
    let fc: SparseVec = vec![(0, Scalar::one())];
    let f = |k: usize| if TERM_IS_VV[k] { &fvv } else { &fc };
    let wdim = |k: usize| if TERM_IS_VV[k] { 4 } else { 1 };
    let mut ds = Vec::new();
    for k in 0..3 {
        let mut g = Vec::new();
        for w in 0..wdim(k + 1) {
            let image = maps.phi(PHI_OF_D[k], &LinComb::basis((w, Vec::new())))?;
            let mut s = Scalar::zero();
            for ((w2, m), c) in image.iter() {
                s += &(&(c * &value(f(k), *w2)) * &b.counit_word(m));
            }
            g.push(s);
        }
        let lambda = ratio(&g, f(k + 1), &format!("d{} of the SL complex", k))?;
        ds.push(SparseMatrix::from_entries(1, 1, [(0, 0, lambda)])?);
    }
    let complex = CochainComplex::new(vec![1; 4], ds)?;
    let report = ComplexReport::from_complex(&b.name(), "C", q_string(b), &complex, 3);
    Ok(ResolutionComplex {
        complex,
        check: ResolutionCheck {
            degree,
            zero_compositions: zero,
            zero_compositions_even: zero_even,
            right_linear: linear,
            colinear_functionals: nfun,
            reconstruction: None,
        },
        report,
    })
}

/// `ψ(w ⊗ (y + y')) = ψ₁(w)ε(y) + s⁻¹ψ₂(w)ε(y')` for `y` even, `y'` odd
/// and `s = q + q⁻¹ = ε(χ)`.
struct Reconstructed<'a> {
    b: &'a BeAlgebra,
    f: &'a [(usize, Scalar)],
    alpha: Scalar,
    beta: Scalar,
    s_inv: Scalar,
}

impl Reconstructed<'_> {
    fn eval(&self, x: &Elem) -> Scalar {
        let mut out = Scalar::zero();
        for ((w, m), c) in x.iter() {
            let fw = value(self.f, *w);
            if fw.is_zero() {
                continue;
            }
            let e = self.b.counit_word(m);
            let part = if m.len() % 2 == 0 {
                &self.alpha * &e
            } else {
                &(&self.beta * &self.s_inv) * &e
            };
            out += &(&(c * &fw) * &part);
        }
        out
    }
}

/// Checks a reconstructed map is linear and colinear over `B₊` and kills
/// `b`, `c`, `d − a`, on inputs `w ⊗ x` with `x` of degree at most `degree`.
fn reconstruction_check(b: &BeAlgebra, w: &Comodule<Word>, psi: &Reconstructed, degree: usize) -> Result<bool> {
    let even: Vec<Word> = b.basis_upto(2).into_iter().filter(|x| x.len() % 2 == 0).collect();
    let (gb, gc) = (b.gen(0, 1), b.gen(1, 0));
    let d_minus_a = b.gen(1, 1).sub(&b.gen(0, 0));
    let mut ok = true;
    for j in 0..w.dim() {
        let at = |y: &LinComb<Word>| -> Elem { y.iter().map(|(m, c)| ((j, m.clone()), c.clone())).collect() };
        ok &= psi.eval(&at(&gb)).is_zero() && psi.eval(&at(&gc)).is_zero() && psi.eval(&at(&d_minus_a)).is_zero();
        for x in b.basis_upto(degree) {
            let base = psi.eval(&LinComb::basis((j, x.clone())));
            for y in &even {
                let prod = b.mul_basis(&x, y)?;
                ok &= psi.eval(&at(&prod)) == &base * &b.counit_word(y);
            }
            // Σ ψ(w₀ ⊗ x₂) S(x₁) w₁ x₃ = ψ(w ⊗ x) 1
            let mut lhs: LinComb<Word> = LinComb::zero();
            for (legs, c) in b.iterated_coproduct(&LinComb::basis(x.clone()), 3)?.iter() {
                let s = b.antipode_basis(&legs[0])?;
                for ((w0, w1), d) in w.coaction[j].iter() {
                    let p = psi.eval(&LinComb::basis((*w0, legs[1].clone())));
                    if p.is_zero() {
                        continue;
                    }
                    let r = b.mul(
                        &b.mul(&s, &LinComb::basis(w1.clone()))?,
                        &LinComb::basis(legs[2].clone()),
                    )?;
                    lhs.add_scaled(&r, &(&(c * d) * &p));
                }
            }
            ok &= lhs == b.one().scale(&base);
        }
    }
    Ok(ok)
}

/// The complex over `B₊ = O(PSL_q(2))`: each term is
/// `Hom^{B₊}(W, ℂ)²` through `ψ ↦ (ψ(− ⊗ 1), ψ(− ⊗ χ))`.
pub fn resolution_complex_psl2(b: &BeAlgebra, degree: usize) -> Result<ResolutionComplex> {
    let maps = ResolutionMaps::new(b)?;
    let (zero, zero_even, linear) = check_maps(&maps, degree)?;
    let chi = chi(b)?;
    let s = b.counit(&chi);
    if s.is_zero() {
        return Err(Error::Invalid("q + 1/q must be nonzero".into()));
    }
    let s_inv = s.inv()?;
    // V*⊗V takes values in B₊, so B₊-colinearity is B-colinearity
    let vv = ve_comodule(b)?;
    let (nfun, fvv) = normalized_functional(b, &vv)?;
    let fc: SparseVec = vec![(0, Scalar::one())];
    let f = |k: usize| if TERM_IS_VV[k] { &fvv } else { &fc };
    let wdim = |k: usize| if TERM_IS_VV[k] { 4 } else { 1 };
    let mut reconstruction = true;
    let spot = degree.min(b.degree_bound().saturating_sub(2) / 2);
    let mut ds = Vec::new();
    for k in 0..3 {
        let mut cols = Vec::new();
        for (alpha, beta) in [(Scalar::one(), Scalar::zero()), (Scalar::zero(), Scalar::one())] {
            let psi = Reconstructed {
                b,
                f: f(k),
                alpha,
                beta,
                s_inv: s_inv.clone(),
            };
            if k == 1 {
                let c = Comodule {
                    name: "V*⊗V".into(),
                    ..vv.clone()
                };
                reconstruction &= reconstruction_check(b, &c, &psi, spot)?;
            }
            let (mut g1, mut g2) = (Vec::new(), Vec::new());
            for w in 0..wdim(k + 1) {
                let image = maps.phi(PHI_OF_D[k], &LinComb::basis((w, Vec::new())))?;
                g1.push(psi.eval(&image));
                let times_chi = image.map_linear(|(w2, m)| {
                    Ok::<_, Error>(
                        b.mul(&LinComb::basis(m.clone()), &chi)?
                            .into_iter()
                            .map(|(p, c)| ((*w2, p), c))
                            .collect(),
                    )
                })?;
                g2.push(psi.eval(&times_chi));
            }
            let what = format!("d{} of the PSL complex", k);
            cols.push(vec![ratio(&g1, f(k + 1), &what)?, ratio(&g2, f(k + 1), &what)?]);
        }
        let entries = cols
            .into_iter()
            .enumerate()
            .flat_map(|(j, col)| col.into_iter().enumerate().map(move |(i, v)| (i, j, v)));
        ds.push(SparseMatrix::from_entries(2, 2, entries)?);
    }
    let trivial = Comodule::trivial(b);
    let c = Reconstructed {
        b,
        f: &fc,
        alpha: Scalar::one(),
        beta: Scalar::one(),
        s_inv: s_inv.clone(),
    };
    reconstruction &= reconstruction_check(b, &trivial, &c, spot)?;
    let complex = CochainComplex::new(vec![2; 4], ds)?;
    let report = ComplexReport::from_complex(&b.even_name(), "C", q_string(b), &complex, 3);
    Ok(ResolutionComplex {
        complex,
        check: ResolutionCheck {
            degree,
            zero_compositions: zero,
            zero_compositions_even: zero_even,
            right_linear: linear,
            colinear_functionals: nfun,
            reconstruction: Some(reconstruction),
        },
        report,
    })
}

impl ResolutionMaps<'_> {
    /// `(φ compositions vanish, same on even inputs, right linearity)` on
    /// inputs `w ⊗ m` with `m` of degree at most `degree`.
    pub fn check_suite(&self, degree: usize) -> Result<(bool, bool, bool)> {
        check_maps(self, degree)
    }

    /// Scales one coefficient of `φ₂` so the compositions stop vanishing.
    #[cfg(test)]
    pub(crate) fn corrupt(&mut self) {
        let y = &mut self.tables[1][0][2].1;
        *y = y.scale(&Scalar::from_i64(2));
    }
}

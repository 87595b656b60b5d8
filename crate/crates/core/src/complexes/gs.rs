//! Cochain complexes over a finite-dimensional Hopf algebra: colinear
//! cochains with Yetter-Drinfeld coefficients, and Hochschild cochains.

use super::cochains::{check_budget, colinearity_equations, pow, tuple_of, BarDifferential, HomSpace};
use super::ComplexReport;
use crate::error::{Error, Result};
use crate::hopf::{FiniteHopf, HopfAlgebra};
use crate::linalg::{rank, CochainComplex, SparseMatrix, SparseVec};
use crate::lincomb::LinComb;
use crate::yd::{Bimodule, CoadPower, FiniteYd, TwistYd, YdModule};
use serde::Serialize;

/// Coaction of `A^{⊠n}` on numbered tuples.
pub fn tuple_coaction(h: &FiniteHopf, n: usize) -> Result<Vec<LinComb<(usize, usize)>>> {
    let d = h.dim();
    let power = CoadPower::new(h, n);
    (0..pow(d, n))
        .map(|t| {
            let co = power.coact(&tuple_of(t, d, n))?;
            Ok(co
                .into_iter()
                .map(|((k, a), c)| ((super::cochains::index_of(&k, d), a), c))
                .collect())
        })
        .collect()
}

/// `Hom^A(A^{⊠n}, V)` inside `Hom(A^{⊗n}, V)`.
pub fn colinear_space(h: &FiniteHopf, v: &FiniteYd, n: usize) -> Result<HomSpace> {
    let dx = pow(h.dim(), n);
    let ambient = dx.saturating_mul(v.dim());
    check_budget(&format!("Hom(A^{}, V) ambient / 16", n), ambient / 16)?;
    let co = tuple_coaction(h, n)?;
    let eqs = colinearity_equations(dx, v.dim(), &co, &v.coact);
    let space = HomSpace::solve(ambient, eqs);
    check_budget(&format!("C^{}", n), space.dim())?;
    Ok(space)
}

/// Matrix of a differential restricted to subspaces, in their coordinates.
fn restricted(bar: &BarDifferential, n: usize, src: &HomSpace, dst: &HomSpace) -> Result<SparseMatrix> {
    let mut cols = Vec::with_capacity(src.dim());
    for (i, f) in src.basis.iter().enumerate() {
        let df = bar.apply(n, f);
        let c = dst.coordinates(&df).ok_or_else(|| {
            Error::Inconsistent(format!(
                "differential of basis cochain {} in degree {} leaves the subcomplex",
                i, n
            ))
        })?;
        cols.push(c);
    }
    SparseMatrix::from_columns(dst.dim(), &cols)
}

/// The colinear cochain complex with coefficients in `V`, degrees
/// `0..=top + 1`.
#[derive(Clone, Debug)]
pub struct GsComplex {
    pub algebra: String,
    pub coefficients: String,
    pub spaces: Vec<HomSpace>,
    pub complex: CochainComplex,
}

impl GsComplex {
    /// Homology in degrees `0..=top`.
    pub fn report(&self) -> ComplexReport {
        ComplexReport::from_complex(
            &self.algebra,
            &self.coefficients,
            None,
            &self.complex,
            self.spaces.len() - 2,
        )
    }
}

/// The right action `v ← a` of a Yetter-Drinfeld module.
pub fn yd_bar<'a>(v: &'a FiniteYd) -> BarDifferential<'a> {
    BarDifferential::with_counit(&v.h, v.dim(), |x, a| v.act[x][a].clone())
}

fn check_top(top: usize) -> Result<()> {
    if top == 0 {
        return Err(Error::Invalid("max degree must be at least 1".into()));
    }
    Ok(())
}

pub fn gs_complex(v: &FiniteYd, top: usize) -> Result<GsComplex> {
    check_top(top)?;
    let h = &v.h;
    if !h.is_cosemisimple() {
        return Err(Error::Invalid(format!("{} has no Haar state on record", h.name())));
    }
    let spaces = (0..=top + 1)
        .map(|n| colinear_space(h, v, n))
        .collect::<Result<Vec<_>>>()?;
    let bar = yd_bar(v);
    let ds = (0..=top)
        .map(|n| restricted(&bar, n, &spaces[n], &spaces[n + 1]))
        .collect::<Result<Vec<_>>>()?;
    let complex = CochainComplex::new(spaces.iter().map(HomSpace::dim).collect(), ds)?;
    Ok(GsComplex {
        algebra: h.name(),
        coefficients: v.name.clone(),
        spaces,
        complex,
    })
}

/// Hochschild cochains `Hom(A^{⊗n}, M′)` with `x ← a = S(a₁)·x·a₂` and
/// first term `ε(a₁) f(a₂ ⊗ ⋯)`.
pub fn ext_bar<'a>(h: &'a FiniteHopf, m: &'a Bimodule) -> BarDifferential<'a> {
    BarDifferential::with_counit(h, m.dim, move |x, a| m.twisted(h, x, a))
}

/// Classical Hochschild cochains with `(δf)(a₁…) = a₁·f(a₂…) + ⋯ + (-1)^{n+1} f(…)·a_{n+1}`.
pub fn classical_bar<'a>(h: &'a FiniteHopf, m: &'a Bimodule) -> BarDifferential<'a> {
    BarDifferential::with_left(
        h,
        m.dim,
        move |a, x| m.left_act(a, &LinComb::basis(x)),
        move |x, a| m.right_act(&LinComb::basis(x), a),
    )
}

fn full_complex(bar: &BarDifferential, top: usize) -> Result<CochainComplex> {
    check_top(top)?;
    let dims: Vec<usize> = (0..=top + 1).map(|n| bar.ambient_dim(n)).collect();
    for (n, d) in dims.iter().enumerate() {
        check_budget(&format!("C^{}", n), *d)?;
    }
    let ds = (0..=top).map(|n| bar.ambient_matrix(n)).collect::<Result<Vec<_>>>()?;
    CochainComplex::new(dims, ds)
}

/// `Hom(A^{⊗n}, M′)` for `n ≤ top + 1`.
pub fn hochschild_complex(h: &FiniteHopf, m: &Bimodule, top: usize) -> Result<CochainComplex> {
    full_complex(&ext_bar(h, m), top)
}

pub fn classical_hochschild_complex(h: &FiniteHopf, m: &Bimodule, top: usize) -> Result<CochainComplex> {
    full_complex(&classical_bar(h, m), top)
}

#[derive(Clone, Debug, Serialize)]
pub struct HomotopyReport {
    pub algebra: String,
    pub degrees: Vec<usize>,
    /// `∂h + h∂ = id` in each listed degree.
    pub holds: Vec<bool>,
}

impl HomotopyReport {
    pub fn pass(&self) -> bool {
        self.holds.iter().all(|b| *b)
    }
}

/// `(hf)(a₁…a_{n-1}) = f(Λ ⊗ a₁ ⊗ ⋯)` for the normalized integral `Λ`
/// (two-sided, since semisimple Hopf algebras are unimodular).
fn homotopy_matrix(h: &FiniteHopf, dim_v: usize, lambda: &SparseVec, n: usize) -> Result<SparseMatrix> {
    let d = h.dim();
    let block = pow(d, n - 1);
    let mut m = SparseMatrix::zeros(block * dim_v, pow(d, n) * dim_v);
    for t in 0..block {
        for v in 0..dim_v {
            for (l, c) in lambda {
                m.add_to(t * dim_v + v, (l * block + t) * dim_v + v, c);
            }
        }
    }
    Ok(m)
}

/// Checks that the integral gives a contracting homotopy of the
/// Hochschild complex in degrees `1..=top`.
pub fn hochschild_homotopy_check(h: &FiniteHopf, m: &Bimodule, top: usize) -> Result<HomotopyReport> {
    let lambda = h
        .normalized_left_integral()
        .ok_or_else(|| Error::Invalid(format!("{} is not semisimple", h.name())))?;
    let bar = ext_bar(h, m);
    let mut holds = Vec::new();
    for n in 1..=top {
        check_budget(&format!("C^{}", n + 1), bar.ambient_dim(n + 1))?;
        let dn = bar.ambient_matrix(n)?;
        let dprev = bar.ambient_matrix(n - 1)?;
        let hn = homotopy_matrix(h, m.dim, &lambda, n)?;
        let hnext = homotopy_matrix(h, m.dim, &lambda, n + 1)?;
        let lhs = dprev.mul(&hn)?;
        let rhs = hnext.mul(&dn)?;
        let mut sum = lhs;
        for (r, c, v) in rhs.entries() {
            sum.add_to(r, c, v);
        }
        holds.push(sum == SparseMatrix::identity(bar.ambient_dim(n)));
    }
    Ok(HomotopyReport {
        algebra: h.name(),
        degrees: (1..=top).collect(),
        holds,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ComparisonReport {
    pub algebra: String,
    pub bimodule: String,
    pub gs_dims: Vec<usize>,
    pub hochschild_dims: Vec<usize>,
    /// `(id ⊗ ε)∘−` is bijective in each degree.
    pub isomorphism: Vec<bool>,
    /// The map commutes with the differentials in each degree.
    pub chain_map: Vec<bool>,
    pub gs_homology: Vec<usize>,
    pub hochschild_homology: Vec<usize>,
    pub classical_homology: Vec<usize>,
}

impl ComparisonReport {
    pub fn pass(&self) -> bool {
        self.isomorphism.iter().all(|b| *b)
            && self.chain_map.iter().all(|b| *b)
            && self.gs_homology == self.hochschild_homology
            && self.hochschild_homology == self.classical_homology
    }
}

/// Compares the colinear complex with coefficients `M′ # A` against the
/// Hochschild complex of `M` through `f ↦ (id ⊗ ε)∘f`.
pub fn gs_equals_hochschild_check(h: &FiniteHopf, m: &Bimodule, top: usize) -> Result<ComparisonReport> {
    let v = FiniteYd::materialize(&TwistYd::new(h, m))?;
    let gs = gs_complex(&v, top)?;
    let hoch = hochschild_complex(h, m, top)?;
    let classical = classical_hochschild_complex(h, m, top)?;
    let d = h.dim();
    // carrier index x * d + a of M′ # A; (id ⊗ ε)(x ⊗ a) = ε(a) x
    let collapse = |f: &SparseVec| -> SparseVec {
        crate::linalg::collect_sparse(f.iter().filter_map(|(k, c)| {
            let (t, w) = (k / v.dim(), k % v.dim());
            let (x, a) = (w / d, w % d);
            let e = h.counit_table(a);
            (!e.is_zero()).then(|| (t * m.dim + x, c * e))
        }))
    };
    let phis: Vec<SparseMatrix> = gs
        .spaces
        .iter()
        .enumerate()
        .map(|(n, s)| {
            let cols: Vec<SparseVec> = s.basis.iter().map(collapse).collect();
            SparseMatrix::from_columns(hoch.dims()[n], &cols)
        })
        .collect::<Result<_>>()?;
    let isomorphism = phis
        .iter()
        .enumerate()
        .map(|(n, p)| p.rows() == p.cols() && rank(p) == gs.complex.dims()[n])
        .collect();
    let mut chain_map = Vec::new();
    for n in 0..=top {
        let lhs = hoch.differentials()[n].mul(&phis[n])?;
        let rhs = phis[n + 1].mul(&gs.complex.differentials()[n])?;
        chain_map.push(lhs == rhs);
    }
    let cut = |c: &CochainComplex| c.homology_dims()[..=top].to_vec();
    Ok(ComparisonReport {
        algebra: h.name(),
        bimodule: m.name.clone(),
        gs_dims: gs.complex.dims().to_vec(),
        hochschild_dims: hoch.dims().to_vec(),
        isomorphism,
        chain_map,
        gs_homology: cut(&gs.complex),
        hochschild_homology: cut(&hoch),
        classical_homology: cut(&classical),
    })
}

//! The averaging map `M(f)(x) = h(f(x₀)₁ S(x₁)) f(x₀)₀` on cochains
//! `A^{⊗n} → V`, a projection onto the colinear ones.

use super::cochains::{check_budget, pow, HomSpace};
use super::gs::{colinear_space, tuple_coaction, yd_bar};
use crate::error::{Error, Result};
use crate::hopf::{FiniteHopf, HopfAlgebra};
use crate::linalg::{SparseMatrix, SparseVec};
use crate::lincomb::LinComb;
use crate::scalar::Scalar;
use crate::yd::FiniteYd;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

fn haar_pairing(h: &FiniteHopf) -> Result<Vec<Vec<Scalar>>> {
    let d = h.dim();
    let mut out = vec![vec![Scalar::zero(); d]; d];
    for (x, row) in out.iter_mut().enumerate() {
        for (y, slot) in row.iter_mut().enumerate() {
            let p = h.mul(&LinComb::basis(x), &h.antipode_basis(&y)?)?;
            *slot = h
                .haar(&p)
                .ok_or_else(|| Error::Invalid(format!("{} has no Haar state on record", h.name())))?;
        }
    }
    Ok(out)
}

/// Matrix of the averaging map in degree `n`.
pub fn averaging_matrix(v: &FiniteYd, n: usize) -> Result<SparseMatrix> {
    let h = &v.h;
    let dv = v.dim();
    let dx = pow(h.dim(), n);
    check_budget(&format!("averaging in degree {}", n), dx.saturating_mul(dv))?;
    let hs = haar_pairing(h)?;
    let co = tuple_coaction(h, n)?;
    let mut entries = Vec::new();
    for (t, cx) in co.iter().enumerate() {
        for ((t2, c), e) in cx.iter() {
            for (w, cv) in v.coact.iter().enumerate() {
                for ((w2, c2), e2) in cv.iter() {
                    let k = &hs[*c2][*c];
                    if !k.is_zero() {
                        entries.push((t * dv + w2, t2 * dv + w, &(e * e2) * k));
                    }
                }
            }
        }
    }
    SparseMatrix::from_entries(dx * dv, dx * dv, entries)
}

#[derive(Clone, Debug, Serialize)]
pub struct AveragingReport {
    pub algebra: String,
    pub coefficients: String,
    pub degree: usize,
    pub samples: usize,
    pub seed: u64,
    pub kac: bool,
    /// `∂M(f) = M(∂f)` on every sample.
    pub commutes: bool,
    pub idempotent: bool,
    /// `M(f)` is colinear for every sample.
    pub image_colinear: bool,
    /// `M(f) = f` for every colinear basis cochain.
    pub fixes_colinear: bool,
    /// `M(f) ≠ f` for every non-colinear sample.
    pub moves_noncolinear: bool,
    pub noncolinear_samples: usize,
}

impl AveragingReport {
    pub fn pass(&self) -> bool {
        self.commutes && self.idempotent && self.image_colinear && self.fixes_colinear && self.moves_noncolinear
    }
}

fn random_cochain(rng: &mut ChaCha8Rng, dim: usize) -> SparseVec {
    (0..dim)
        .filter_map(|i| {
            let x: i64 = rng.gen_range(-3..=3);
            (x != 0).then(|| (i, Scalar::from_i64(x)))
        })
        .collect()
}

/// Checks the averaging identities in degree `n` on `samples` seeded
/// random cochains.
pub fn averaging_check(v: &FiniteYd, n: usize, samples: usize, seed: u64) -> Result<AveragingReport> {
    let h = &v.h;
    let dv = v.dim();
    let m_n = averaging_matrix(v, n)?;
    let m_next = averaging_matrix(v, n + 1)?;
    let space: HomSpace = colinear_space(h, v, n)?;
    let bar = yd_bar(v);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ambient = pow(h.dim(), n) * dv;
    let (mut commutes, mut idempotent, mut image_colinear, mut moves) = (true, true, true, true);
    let mut noncolinear = 0;
    for _ in 0..samples {
        let f = random_cochain(&mut rng, ambient);
        let mf = m_n.apply(&f);
        commutes &= bar.apply(n, &mf) == m_next.apply(&bar.apply(n, &f));
        idempotent &= m_n.apply(&mf) == mf;
        image_colinear &= space.contains(&mf);
        if !space.contains(&f) {
            noncolinear += 1;
            moves &= mf != f;
        }
    }
    let fixes = space.basis.iter().all(|b| &m_n.apply(b) == b);
    Ok(AveragingReport {
        algebra: h.name(),
        coefficients: v.name.clone(),
        degree: n,
        samples,
        seed,
        kac: h.is_kac(),
        commutes,
        idempotent,
        image_colinear,
        fixes_colinear: fixes,
        moves_noncolinear: moves && noncolinear > 0,
        noncolinear_samples: noncolinear,
    })
}

//! Cochains `A^{⊗n} → V` over a finite-dimensional algebra, stored as
//! vectors indexed by `tuple * dim_v + v`, and the bar-type differential
//! `ε(a₁)f(a₂…) + Σ(-1)^i f(…a_i a_{i+1}…) + (-1)^{n+1} f(…)·a_{n+1}`.

use crate::error::{Error, Result};
use crate::hopf::FiniteHopf;
use crate::linalg::{collect_sparse, Rref, SparseMatrix, SparseVec};
use crate::lincomb::LinComb;
use crate::scalar::Scalar;
use std::collections::BTreeMap;

/// Cap on cochain space dimensions, from `HOPFGS_BUDGET` (default 5000).
pub fn budget() -> usize {
    std::env::var("HOPFGS_BUDGET")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(5000)
}

pub(crate) fn check_budget(what: &str, needed: usize) -> Result<()> {
    check_against(what, needed, budget())
}

pub(crate) fn check_against(what: &str, needed: usize, b: usize) -> Result<()> {
    if needed > b {
        return Err(Error::Budget {
            what: what.into(),
            needed,
            budget: b,
        });
    }
    Ok(())
}

pub fn pow(d: usize, n: usize) -> usize {
    (0..n).fold(1usize, |acc, _| acc.saturating_mul(d))
}

/// Digits of a tuple index, most significant first.
pub fn tuple_of(mut t: usize, d: usize, n: usize) -> Vec<usize> {
    let mut out = vec![0; n];
    for k in (0..n).rev() {
        out[k] = t % d;
        t /= d;
    }
    out
}

pub fn index_of(tuple: &[usize], d: usize) -> usize {
    tuple.iter().fold(0, |acc, &x| acc * d + x)
}

/// Structure needed by the differential: the algebra and the two outer
/// actions on the coefficient space.
pub struct BarDifferential<'a> {
    pub h: &'a FiniteHopf,
    pub dim_v: usize,
    /// `first[a][v]`: the vector `a ▷ v` used in the first term.
    first: Vec<Vec<SparseVec>>,
    /// `last[v][a]`: the vector `v ← a` used in the last term.
    last: Vec<Vec<SparseVec>>,
}

fn to_sparse(x: &LinComb<usize>) -> SparseVec {
    x.iter().map(|(k, c)| (*k, c.clone())).collect()
}

impl<'a> BarDifferential<'a> {
    /// First term `ε(a₁) f(a₂ ⊗ ⋯)`, last term through `act`.
    pub fn with_counit(h: &'a FiniteHopf, dim_v: usize, act: impl Fn(usize, usize) -> LinComb<usize>) -> Self {
        let first = (0..h.dim())
            .map(|a| {
                (0..dim_v)
                    .map(|v| collect_sparse([(v, h.counit_table(a).clone())]))
                    .collect()
            })
            .collect();
        Self::with_first(h, dim_v, first, act)
    }

    /// First term `a₁ · f(a₂ ⊗ ⋯)` for a left action, as in the classical
    /// Hochschild complex.
    pub fn with_left(
        h: &'a FiniteHopf,
        dim_v: usize,
        left: impl Fn(usize, usize) -> LinComb<usize>,
        act: impl Fn(usize, usize) -> LinComb<usize>,
    ) -> Self {
        let first = (0..h.dim())
            .map(|a| (0..dim_v).map(|v| to_sparse(&left(a, v))).collect())
            .collect();
        Self::with_first(h, dim_v, first, act)
    }

    fn with_first(
        h: &'a FiniteHopf,
        dim_v: usize,
        first: Vec<Vec<SparseVec>>,
        act: impl Fn(usize, usize) -> LinComb<usize>,
    ) -> Self {
        let last = (0..dim_v)
            .map(|v| (0..h.dim()).map(|a| to_sparse(&act(v, a))).collect())
            .collect();
        BarDifferential { h, dim_v, first, last }
    }

    pub fn ambient_dim(&self, n: usize) -> usize {
        pow(self.h.dim(), n).saturating_mul(self.dim_v)
    }

    /// `∂f` for `f` of degree `n`, by pushing each entry forward.
    pub fn apply(&self, n: usize, f: &[(usize, Scalar)]) -> SparseVec {
        let d = self.h.dim();
        let dv = self.dim_v;
        let block = pow(d, n);
        let mut out: BTreeMap<usize, Scalar> = BTreeMap::new();
        let mut add = |idx: usize, c: Scalar| {
            *out.entry(idx).or_insert_with(Scalar::zero) += &c;
        };
        let sign = |k: usize| {
            if k.is_multiple_of(2) {
                Scalar::one()
            } else {
                Scalar::from_i64(-1)
            }
        };
        for (idx, c) in f {
            let (t, v) = (idx / dv, idx % dv);
            let tuple = tuple_of(t, d, n);
            // first term: target (a₁, t), value a₁ ▷ f(t)
            for a in 0..d {
                for (w, e) in &self.first[a][v] {
                    add((a * block + t) * dv + w, c * e);
                }
            }
            // middle terms: f(…, a_i a_{i+1}, …) with the product at slot i
            for i in 0..n {
                let s = sign(i + 1);
                for (x, y, e) in self.h.mult_preimage(tuple[i]) {
                    let mut target = Vec::with_capacity(n + 1);
                    target.extend_from_slice(&tuple[..i]);
                    target.push(*x);
                    target.push(*y);
                    target.extend_from_slice(&tuple[i + 1..]);
                    add(index_of(&target, d) * dv + v, &(&s * c) * e);
                }
            }
            // last term: target (t, a), value (-1)^{n+1} f(t) ← a
            let s = sign(n + 1);
            for a in 0..d {
                for (w, e) in &self.last[v][a] {
                    add((t * d + a) * dv + w, &(&s * c) * e);
                }
            }
        }
        out.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    /// Matrix of `∂` on the full ambient space in degree `n`.
    pub fn ambient_matrix(&self, n: usize) -> Result<SparseMatrix> {
        let cols: Vec<SparseVec> = (0..self.ambient_dim(n))
            .map(|i| self.apply(n, &[(i, Scalar::one())]))
            .collect();
        SparseMatrix::from_columns(self.ambient_dim(n + 1), &cols)
    }
}

/// A subspace of an ambient coordinate space, stored as an RREF kernel
/// basis so coordinates can be read off the free positions.
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub ambient_dim: usize,
    pub basis: Vec<SparseVec>,
    /// `free[i]` is the ambient position where `basis[i]` has a 1 and every
    /// other basis vector has a 0.
    pub free: Vec<usize>,
}

impl HomSpace {
    pub fn full(ambient_dim: usize) -> HomSpace {
        HomSpace {
            ambient_dim,
            basis: (0..ambient_dim).map(|i| vec![(i, Scalar::one())]).collect(),
            free: (0..ambient_dim).collect(),
        }
    }

    /// Kernel of a set of linear equations over the ambient space, solved
    /// separately on each connected block of unknowns.
    pub fn solve(ambient_dim: usize, equations: Vec<SparseVec>) -> HomSpace {
        let mut parent: Vec<usize> = (0..ambient_dim).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for eq in &equations {
            if let Some((first, _)) = eq.first() {
                let r = find(&mut parent, *first);
                for (k, _) in eq.iter().skip(1) {
                    let s = find(&mut parent, *k);
                    parent[s] = r;
                }
            }
        }
        let mut blocks: BTreeMap<usize, (Vec<usize>, Vec<SparseVec>)> = BTreeMap::new();
        for k in 0..ambient_dim {
            let r = find(&mut parent, k);
            blocks.entry(r).or_default().0.push(k);
        }
        for eq in equations {
            if let Some((first, _)) = eq.first() {
                let r = find(&mut parent, *first);
                blocks.get_mut(&r).unwrap().1.push(eq);
            }
        }
        let mut pairs: Vec<(usize, SparseVec)> = Vec::new();
        for (_, (vars, eqs)) in blocks {
            let local: BTreeMap<usize, usize> = vars.iter().enumerate().map(|(i, v)| (*v, i)).collect();
            let rows: Vec<SparseVec> = eqs
                .into_iter()
                .map(|e| e.into_iter().map(|(k, c)| (local[&k], c)).collect())
                .collect();
            let rref = Rref::from_rows(vars.len(), rows);
            for (f, kv) in rref.free_columns().into_iter().zip(rref.kernel()) {
                pairs.push((vars[f], kv.into_iter().map(|(k, c)| (vars[k], c)).collect()));
            }
        }
        pairs.sort_by_key(|(f, _)| *f);
        let (free, basis) = pairs.into_iter().unzip();
        HomSpace {
            ambient_dim,
            basis,
            free,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of `f` in this basis, or `None` if `f` is not in the space.
    pub fn coordinates(&self, f: &[(usize, Scalar)]) -> Option<SparseVec> {
        let lookup: BTreeMap<usize, &Scalar> = f.iter().map(|(k, c)| (*k, c)).collect();
        let coords: SparseVec = self
            .free
            .iter()
            .enumerate()
            .filter_map(|(i, p)| lookup.get(p).map(|c| (i, (*c).clone())))
            .collect();
        let mut rebuilt: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (i, c) in &coords {
            for (k, v) in &self.basis[*i] {
                *rebuilt.entry(*k).or_insert_with(Scalar::zero) += &(c * v);
            }
        }
        rebuilt.retain(|_, v| !v.is_zero());
        let same = rebuilt.len() == f.len() && f.iter().all(|(k, c)| rebuilt.get(k) == Some(c));
        same.then_some(coords)
    }

    pub fn contains(&self, f: &[(usize, Scalar)]) -> bool {
        self.coordinates(f).is_some()
    }

    /// The ambient vector with the given coordinates.
    pub fn vector(&self, coords: &[(usize, Scalar)]) -> SparseVec {
        let mut out: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (i, c) in coords {
            for (k, v) in &self.basis[*i] {
                *out.entry(*k).or_insert_with(Scalar::zero) += &(c * v);
            }
        }
        out.into_iter().filter(|(_, v)| !v.is_zero()).collect()
    }
}

/// Colinearity equations for `f: X → V` given the coactions
/// `x_t ↦ Σ c x_{t'} ⊗ b_a` and `v ↦ Σ c v' ⊗ b_a`:
/// `Σ_v f[v][t] α_V(v)[v', a] = Σ_{t'} α_X(t)[t', a] f[v'][t']`.
pub fn colinearity_equations(
    dim_x: usize,
    dim_v: usize,
    coact_x: &[LinComb<(usize, usize)>],
    coact_v: &[LinComb<(usize, usize)>],
) -> Vec<SparseVec> {
    let mut out = Vec::new();
    for t in 0..dim_x {
        let mut rows: BTreeMap<(usize, usize), BTreeMap<usize, Scalar>> = BTreeMap::new();
        for (v, co) in coact_v.iter().enumerate() {
            for ((w, a), c) in co.iter() {
                *rows
                    .entry((*w, *a))
                    .or_default()
                    .entry(t * dim_v + v)
                    .or_insert_with(Scalar::zero) += c;
            }
        }
        for ((t2, a), c) in coact_x[t].iter() {
            for w in 0..dim_v {
                *rows
                    .entry((w, *a))
                    .or_default()
                    .entry(t2 * dim_v + w)
                    .or_insert_with(Scalar::zero) -= c;
            }
        }
        for (_, row) in rows {
            let r: SparseVec = row.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            if !r.is_empty() {
                out.push(r);
            }
        }
    }
    out
}

use crate::error::{Error, Result};
use crate::hopf::{FiniteHopf, HopfAlgebra};
use crate::linalg::SparseMatrix;
use crate::lincomb::LinComb;
use crate::scalar::Scalar;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type ActFn<'a, B> = dyn Fn(usize, &B) -> Result<LinComb<usize>> + Send + Sync + 'a;

/// Finite-dimensional right module given by an action evaluator.
pub struct RightModule<'a, B> {
    pub name: String,
    pub dim: usize,
    act: Box<ActFn<'a, B>>,
}

impl<'a, B> RightModule<'a, B> {
    pub fn new(name: &str, dim: usize, act: impl Fn(usize, &B) -> Result<LinComb<usize>> + Send + Sync + 'a) -> Self {
        RightModule {
            name: name.into(),
            dim,
            act: Box::new(act),
        }
    }

    /// `ℂ_ε`.
    pub fn trivial<H: HopfAlgebra<Basis = B>>(h: &'a H) -> Self {
        RightModule::new("C_eps", 1, move |_, a| Ok(LinComb::term(0, h.counit_basis(a))))
    }

    pub fn act(&self, x: usize, a: &B) -> Result<LinComb<usize>> {
        (self.act)(x, a)
    }
}

/// Bimodule over a finite-dimensional Hopf algebra. `left[a]` has entry
/// `(i, j)` equal to the coefficient of `m_i` in `b_a · m_j`; `right[a]`
/// likewise for `m_j · b_a`.
#[derive(Clone, Debug)]
pub struct Bimodule {
    pub name: String,
    pub dim: usize,
    pub left: Vec<SparseMatrix>,
    pub right: Vec<SparseMatrix>,
}

fn vec_of(m: &SparseMatrix, j: usize) -> LinComb<usize> {
    m.entries()
        .filter(|(_, c, _)| *c == j)
        .map(|(r, _, v)| (r, v.clone()))
        .collect()
}

impl Bimodule {
    pub fn new(h: &FiniteHopf, name: &str, left: Vec<SparseMatrix>, right: Vec<SparseMatrix>) -> Result<Bimodule> {
        let n = h.dim();
        let dim = left.first().map(|m| m.rows()).unwrap_or(0);
        let square = |m: &SparseMatrix| m.rows() == dim && m.cols() == dim;
        if left.len() != n || right.len() != n || !left.iter().all(square) || !right.iter().all(square) {
            return Err(Error::Shape(format!(
                "bimodule {}: need {} square action matrices per side",
                name, n
            )));
        }
        let b = Bimodule {
            name: name.into(),
            dim,
            left,
            right,
        };
        b.validate(h)?;
        Ok(b)
    }

    fn combine(mats: &[SparseMatrix], x: &LinComb<usize>, dim: usize) -> SparseMatrix {
        let mut out = SparseMatrix::zeros(dim, dim);
        for (a, c) in x.iter() {
            for (i, j, v) in mats[*a].entries() {
                out.add_to(i, j, &(c * v));
            }
        }
        out
    }

    fn validate(&self, h: &FiniteHopf) -> Result<()> {
        let n = h.dim();
        let id = SparseMatrix::identity(self.dim);
        let one = h.one();
        if Self::combine(&self.left, &one, self.dim) != id || Self::combine(&self.right, &one, self.dim) != id {
            return Err(Error::Invalid(format!(
                "bimodule {}: unit does not act as identity",
                self.name
            )));
        }
        for a in 0..n {
            for b in 0..n {
                let ab = h.mul_basis(&a, &b)?;
                if Self::combine(&self.left, &ab, self.dim) != self.left[a].mul(&self.left[b])? {
                    return Err(Error::Invalid(format!(
                        "bimodule {}: left action not associative",
                        self.name
                    )));
                }
                if Self::combine(&self.right, &ab, self.dim) != self.right[b].mul(&self.right[a])? {
                    return Err(Error::Invalid(format!(
                        "bimodule {}: right action not associative",
                        self.name
                    )));
                }
                if self.left[a].mul(&self.right[b])? != self.right[b].mul(&self.left[a])? {
                    return Err(Error::Invalid(format!(
                        "bimodule {}: actions do not commute",
                        self.name
                    )));
                }
            }
        }
        Ok(())
    }

    /// `ℂ` with `a·1·b = ε(a)ε(b)`.
    pub fn trivial(h: &FiniteHopf) -> Bimodule {
        let mats: Vec<SparseMatrix> = (0..h.dim())
            .map(|a| {
                let mut m = SparseMatrix::zeros(1, 1);
                m.set(0, 0, h.counit_basis(&a));
                m
            })
            .collect();
        Bimodule::new(h, "trivial", mats.clone(), mats).unwrap()
    }

    /// `A` acting on itself by multiplication.
    pub fn regular(h: &FiniteHopf) -> Bimodule {
        let n = h.dim();
        let mut left = vec![SparseMatrix::zeros(n, n); n];
        let mut right = vec![SparseMatrix::zeros(n, n); n];
        for a in 0..n {
            for j in 0..n {
                for (k, c) in h.mult_table(a, j) {
                    left[a].add_to(*k, j, c);
                }
                for (k, c) in h.mult_table(j, a) {
                    right[a].add_to(*k, j, c);
                }
            }
        }
        Bimodule::new(h, "regular", left, right).unwrap()
    }

    /// Direct sum of two one-dimensional bimodules (pairs of characters
    /// picked by the seed), conjugated by a random invertible matrix.
    pub fn random(h: &FiniteHopf, seed: u64) -> Result<Bimodule> {
        let chars = h.characters();
        if chars.is_empty() {
            return Err(Error::Invalid(format!("{} has no characters on record", h.name())));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let pick: Vec<usize> = (0..4).map(|_| rng.gen_range(0..chars.len())).collect();
        let (p, pinv) = loop {
            let e: Vec<i64> = (0..4).map(|_| rng.gen_range(-3..=3)).collect();
            let det = e[0] * e[3] - e[1] * e[2];
            if det != 0 {
                let s = |x: i64| Scalar::from_i64(x);
                let p = SparseMatrix::from_dense(&[vec![s(e[0]), s(e[1])], vec![s(e[2]), s(e[3])]])?;
                let pinv = SparseMatrix::from_dense(&[
                    vec![Scalar::frac(e[3], det), Scalar::frac(-e[1], det)],
                    vec![Scalar::frac(-e[2], det), Scalar::frac(e[0], det)],
                ])?;
                break (p, pinv);
            }
        };
        let conj = |x: &Scalar, y: &Scalar| -> Result<SparseMatrix> {
            let d = SparseMatrix::from_dense(&[vec![x.clone(), Scalar::zero()], vec![Scalar::zero(), y.clone()]])?;
            p.mul(&d)?.mul(&pinv)
        };
        let n = h.dim();
        let left = (0..n)
            .map(|a| conj(&chars[pick[0]][a], &chars[pick[1]][a]))
            .collect::<Result<Vec<_>>>()?;
        let right = (0..n)
            .map(|a| conj(&chars[pick[2]][a], &chars[pick[3]][a]))
            .collect::<Result<Vec<_>>>()?;
        Bimodule::new(h, &format!("random(seed={})", seed), left, right)
    }

    pub fn left_act(&self, a: usize, m: &LinComb<usize>) -> LinComb<usize> {
        let mut out = LinComb::zero();
        for (j, c) in m.iter() {
            out.add_scaled(&vec_of(&self.left[a], *j), c);
        }
        out
    }

    pub fn right_act(&self, m: &LinComb<usize>, a: usize) -> LinComb<usize> {
        let mut out = LinComb::zero();
        for (j, c) in m.iter() {
            out.add_scaled(&vec_of(&self.right[a], *j), c);
        }
        out
    }

    /// `x ← a = S(a₁)·x·a₂`.
    pub fn twisted(&self, h: &FiniteHopf, x: usize, a: usize) -> LinComb<usize> {
        let mut out = LinComb::zero();
        for (a1, a2, c) in h.coproduct_table(a) {
            let mx = self.right_act(&LinComb::basis(x), *a2);
            for (s, d) in h.antipode_table(*a1) {
                out.add_scaled(&self.left_act(*s, &mx), &(c * d));
            }
        }
        out
    }

    /// The right module `M′`.
    pub fn twisted_module<'a>(&'a self, h: &'a FiniteHopf) -> RightModule<'a, usize> {
        RightModule::new(&format!("{}'", self.name), self.dim, move |x, a| {
            Ok(self.twisted(h, x, *a))
        })
    }
}

//! B(E) through its rewriting system, with memoized normal forms.

use super::rewrite::{be_relations, complete, generator_names, RewriteSystem};
use super::HopfAlgebra;
use crate::error::{Error, Result};
use crate::lincomb::{LinComb, Tensor};
use crate::scalar::Scalar;
use std::collections::HashMap;
use std::sync::{Arc, RwLock};

pub use super::rewrite::Word;

/// Default cap on the number of rewrite rules produced by completion.
pub const RULE_BUDGET: usize = 64;

pub struct BeAlgebra {
    sys: RewriteSystem,
    n: usize,
    e: Vec<Vec<Scalar>>,
    q: Option<Scalar>,
    gen_antipode: Vec<LinComb<Word>>,
    mul_cache: RwLock<HashMap<(Word, u8), LinComb<Word>>>,
    delta_cache: RwLock<HashMap<Word, Tensor<Word>>>,
    antipode_cache: RwLock<HashMap<Word, LinComb<Word>>>,
}

impl std::fmt::Debug for BeAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("BeAlgebra")
            .field("n", &self.n)
            .field("q", &self.q.as_ref().map(|q| q.to_string()))
            .field("rules", &self.sys.rules.len())
            .finish()
    }
}

/// `E_q = [[0, 1], [-1/q, 0]]`.
pub fn e_q(q: &Scalar) -> Result<Vec<Vec<Scalar>>> {
    Ok(vec![
        vec![Scalar::zero(), Scalar::one()],
        vec![-q.inv()?, Scalar::zero()],
    ])
}

impl BeAlgebra {
    pub fn new(e: &[Vec<Scalar>], degree_bound: usize) -> Result<BeAlgebra> {
        let data = be_relations(e)?;
        let sys = complete(&data.relations, generator_names(data.n), degree_bound, RULE_BUDGET)?;
        if !sys.is_confluent() {
            return Err(Error::Inconsistent("rewriting system is not confluent".into()));
        }
        let n = data.n;
        let u = |i: usize, j: usize| (i * n + j) as u8;
        // S(u) = E^{-1} u^t E
        let mut gen_antipode = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let mut s = LinComb::zero();
                for k in 0..n {
                    for l in 0..n {
                        s.add_term(vec![u(l, k)], &data.e_inv[i][k] * &data.e[l][j]);
                    }
                }
                gen_antipode.push(s);
            }
        }
        Ok(BeAlgebra {
            sys,
            n,
            e: data.e,
            q: None,
            gen_antipode,
            mul_cache: RwLock::new(HashMap::new()),
            delta_cache: RwLock::new(HashMap::new()),
            antipode_cache: RwLock::new(HashMap::new()),
        })
    }

    /// O(SL_q(2)) = B(E_q).
    pub fn quantum_sl2(q: &Scalar, degree_bound: usize) -> Result<BeAlgebra> {
        if q.is_zero() {
            return Err(Error::Invalid("q must be nonzero".into()));
        }
        let mut b = BeAlgebra::new(&e_q(q)?, degree_bound)?;
        b.q = Some(q.clone());
        Ok(b)
    }

    pub fn system(&self) -> &RewriteSystem {
        &self.sys
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn matrix_e(&self) -> &[Vec<Scalar>] {
        &self.e
    }

    pub fn q(&self) -> Option<&Scalar> {
        self.q.as_ref()
    }

    /// Name of the even subalgebra.
    pub fn even_name(&self) -> String {
        match &self.q {
            Some(q) if !q.is_rational() => "O(PSL_q(2)) over Q(q)".into(),
            Some(q) => format!("O(PSL_q(2)) at q = {}", q),
            None => "B+(E)".into(),
        }
    }

    pub fn degree_bound(&self) -> usize {
        self.sys.degree_bound
    }

    /// Generator `u_ij` (0-based) as an element.
    pub fn gen(&self, i: usize, j: usize) -> LinComb<Word> {
        LinComb::basis(vec![(i * self.n + j) as u8])
    }

    /// Generator by name (`a`, `b`, `c`, `d` when n = 2).
    pub fn named(&self, name: &str) -> Result<LinComb<Word>> {
        let k = self
            .sys
            .generators
            .iter()
            .position(|g| g == name)
            .ok_or_else(|| Error::Invalid(format!("unknown generator {:?}", name)))?;
        Ok(LinComb::basis(vec![k as u8]))
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len > self.sys.degree_bound {
            Err(Error::DegreeOverflow {
                degree: len,
                bound: self.sys.degree_bound,
            })
        } else {
            Ok(())
        }
    }

    /// Normal form of `u * g` for a normal word `u`.
    fn mul_word_gen(&self, u: &Word, g: u8) -> Result<LinComb<Word>> {
        self.check_len(u.len() + 1)?;
        let key = (u.clone(), g);
        if let Some(v) = self.mul_cache.read().unwrap().get(&key) {
            return Ok(v.clone());
        }
        let mut ug = u.clone();
        ug.push(g);
        // u is normal, so any reducible subword of ug is a suffix.
        let rule = self.sys.rules.iter().find(|r| ug.ends_with(&r.lhs));
        let result = match rule {
            None => LinComb::basis(ug),
            Some(r) => {
                let prefix: Word = ug[..ug.len() - r.lhs.len()].to_vec();
                let mut acc = LinComb::zero();
                for (rw, c) in r.rhs.iter() {
                    let mut cur = LinComb::basis(prefix.clone());
                    for &h in rw {
                        cur = cur.map_linear(|w| self.mul_word_gen(w, h))?;
                    }
                    acc.add_scaled(&cur, c);
                }
                acc
            }
        };
        self.mul_cache.write().unwrap().insert(key, result.clone());
        Ok(result)
    }

    fn mul_words(&self, x: &Word, y: &Word) -> Result<LinComb<Word>> {
        self.check_len(x.len() + y.len())?;
        let mut cur = LinComb::basis(x.clone());
        for &h in y {
            cur = cur.map_linear(|w| self.mul_word_gen(w, h))?;
        }
        Ok(cur)
    }

    /// Normal form of an arbitrary (possibly unreduced) element.
    pub fn normal_form(&self, x: &LinComb<Word>) -> Result<LinComb<Word>> {
        x.map_linear(|w| self.mul_words(&Vec::new(), w))
    }

    /// Splits by word length parity into (even, odd).
    pub fn parity_split(&self, x: &LinComb<Word>) -> (LinComb<Word>, LinComb<Word>) {
        (x.filter(|w| w.len() % 2 == 0), x.filter(|w| w.len() % 2 == 1))
    }

    fn is_diagonal(&self, g: u8) -> bool {
        let g = g as usize;
        g / self.n == g % self.n
    }

    /// The cocentral map `u_ij -> δ_ij g` into ℂℤ₂ (basis 0 = e, 1 = g),
    /// evaluated as an algebra map on words.
    pub fn project_word(&self, w: &[u8]) -> LinComb<usize> {
        if w.iter().all(|&g| self.is_diagonal(g)) {
            LinComb::basis(w.len() % 2)
        } else {
            LinComb::zero()
        }
    }

    pub fn project(&self, x: &LinComb<Word>) -> LinComb<usize> {
        x.map_linear::<usize, ()>(|w| Ok(self.project_word(w))).unwrap()
    }

    /// Each defining relation maps to zero under the projection.
    pub fn projection_kills_relations(&self) -> Result<bool> {
        let data = be_relations(&self.e)?;
        Ok(data.relations.iter().all(|r| self.project(r).is_zero()))
    }

    /// `ε` as the algebra map `u_ij -> δ_ij` on any word.
    pub fn counit_word(&self, w: &[u8]) -> Scalar {
        if w.iter().all(|&g| self.is_diagonal(g)) {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    }

    pub fn standard_monomial_counts(&self, d: usize) -> Vec<usize> {
        self.sys.standard_monomials(d).iter().map(|l| l.len()).collect()
    }

    pub fn word_string(&self, w: &[u8]) -> String {
        self.sys.word_string(w)
    }

    pub fn format(&self, x: &LinComb<Word>) -> String {
        if x.is_zero() {
            return "0".into();
        }
        x.iter()
            .map(|(w, c)| format!("({})*{}", c, self.word_string(w)))
            .collect::<Vec<_>>()
            .join(" + ")
    }

    fn coproduct_word(&self, w: &Word) -> Result<Tensor<Word>> {
        if let Some(v) = self.delta_cache.read().unwrap().get(w) {
            return Ok(v.clone());
        }
        let result = match w.split_last() {
            None => Tensor::basis(vec![Vec::new(), Vec::new()]),
            Some((&g, prefix)) => {
                let left = self.coproduct_word(&prefix.to_vec())?;
                let (i, j) = (g as usize / self.n, g as usize % self.n);
                let mut out = Tensor::zero();
                for (legs, c) in left.iter() {
                    for k in 0..self.n {
                        let x = self.mul_words(&legs[0], &vec![(i * self.n + k) as u8])?;
                        let y = self.mul_words(&legs[1], &vec![(k * self.n + j) as u8])?;
                        for (xw, xc) in x.iter() {
                            for (yw, yc) in y.iter() {
                                out.add_term(vec![xw.clone(), yw.clone()], &(c * xc) * yc);
                            }
                        }
                    }
                }
                out
            }
        };
        self.delta_cache.write().unwrap().insert(w.clone(), result.clone());
        Ok(result)
    }

    fn antipode_word(&self, w: &Word) -> Result<LinComb<Word>> {
        if let Some(v) = self.antipode_cache.read().unwrap().get(w) {
            return Ok(v.clone());
        }
        let result = match w.split_first() {
            None => LinComb::basis(Vec::new()),
            // S(g w') = S(w') S(g)
            Some((&g, rest)) => {
                let tail = self.antipode_word(&rest.to_vec())?;
                self.mul(&tail, &self.gen_antipode[g as usize])?
            }
        };
        self.antipode_cache.write().unwrap().insert(w.clone(), result.clone());
        Ok(result)
    }
}

impl HopfAlgebra for BeAlgebra {
    type Basis = Word;

    fn name(&self) -> String {
        match &self.q {
            Some(q) if !q.is_rational() => "O(SL_q(2)) over Q(q)".into(),
            Some(q) => format!("O(SL_q(2)) at q = {}", q),
            None => format!("B(E), n = {}", self.n),
        }
    }

    fn basis_upto(&self, degree: usize) -> Vec<Word> {
        self.sys
            .standard_monomials(degree.min(self.sys.degree_bound))
            .into_iter()
            .flatten()
            .collect()
    }

    fn degree(&self, b: &Word) -> usize {
        b.len()
    }

    fn label(&self, b: &Word) -> String {
        self.word_string(b)
    }

    fn one(&self) -> LinComb<Word> {
        LinComb::basis(Vec::new())
    }

    fn mul_basis(&self, x: &Word, y: &Word) -> Result<LinComb<Word>> {
        self.mul_words(x, y)
    }

    fn coproduct_basis(&self, x: &Word) -> Result<Tensor<Word>> {
        self.coproduct_word(x)
    }

    fn counit_basis(&self, x: &Word) -> Scalar {
        self.counit_word(x)
    }

    fn antipode_basis(&self, x: &Word) -> Result<LinComb<Word>> {
        self.antipode_word(x)
    }
}

/// The even subalgebra B₊(E), spanned by normal words of even length.
#[derive(Clone, Debug)]
pub struct EvenPart(pub Arc<BeAlgebra>);

impl HopfAlgebra for EvenPart {
    type Basis = Word;

    fn name(&self) -> String {
        self.0.even_name()
    }

    fn basis_upto(&self, degree: usize) -> Vec<Word> {
        self.0
            .basis_upto(degree)
            .into_iter()
            .filter(|w| w.len() % 2 == 0)
            .collect()
    }

    fn degree(&self, b: &Word) -> usize {
        b.len()
    }

    fn label(&self, b: &Word) -> String {
        self.0.label(b)
    }

    fn one(&self) -> LinComb<Word> {
        self.0.one()
    }

    fn mul_basis(&self, x: &Word, y: &Word) -> Result<LinComb<Word>> {
        self.0.mul_basis(x, y)
    }

    fn coproduct_basis(&self, x: &Word) -> Result<Tensor<Word>> {
        self.0.coproduct_basis(x)
    }

    fn counit_basis(&self, x: &Word) -> Scalar {
        self.0.counit_basis(x)
    }

    fn antipode_basis(&self, x: &Word) -> Result<LinComb<Word>> {
        self.0.antipode_basis(x)
    }
}

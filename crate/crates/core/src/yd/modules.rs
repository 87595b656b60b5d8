use super::bimodule::{Bimodule, RightModule};
use super::comodule::Comodule;
use super::YdModule;
use crate::error::{Error, Result};
use crate::hopf::{FiniteHopf, HopfAlgebra};
use crate::lincomb::LinComb;
use crate::scalar::Scalar;

/// Terms `(a₁, a₂, a₃, c)` of an iterated coproduct.
type Leg3<B> = (B, B, B, Scalar);
/// A coaction on tensor words, `v ↦ Σ v₀ ⊗ v₁`.
type Coaction<B> = LinComb<(Vec<B>, B)>;

/// `Δ²(a)` as terms `(a₁, a₂, a₃, c)`.
fn delta3<H: HopfAlgebra>(h: &H, a: &H::Basis) -> Result<Vec<Leg3<H::Basis>>> {
    Ok(h.iterated_coproduct(&LinComb::basis(a.clone()), 3)?
        .into_iter()
        .map(|(mut l, c)| {
            let a3 = l.pop().unwrap();
            let a2 = l.pop().unwrap();
            let a1 = l.pop().unwrap();
            (a1, a2, a3, c)
        })
        .collect())
}

/// `S(x) y z` for basis elements.
fn sandwich<H: HopfAlgebra>(h: &H, x: &H::Basis, y: &LinComb<H::Basis>, z: &H::Basis) -> Result<LinComb<H::Basis>> {
    let s = h.antipode_basis(x)?;
    h.mul(&h.mul(&s, y)?, &LinComb::basis(z.clone()))
}

/// `V ⊠ A`: right multiplication on `A`, coaction
/// `v ⊗ a ↦ v₀ ⊗ a₂ ⊗ S(a₁) v₁ a₃`.
pub struct FreeYd<'a, H: HopfAlgebra> {
    pub h: &'a H,
    pub v: Comodule<H::Basis>,
}

impl<'a, H: HopfAlgebra> FreeYd<'a, H> {
    pub fn new(h: &'a H, v: Comodule<H::Basis>) -> Self {
        FreeYd { h, v }
    }
}

impl<'a, H: HopfAlgebra> YdModule for FreeYd<'a, H> {
    type H = H;
    type Key = (usize, H::Basis);

    fn hopf(&self) -> &H {
        self.h
    }

    fn name(&self) -> String {
        format!("{} ⊠ {}", self.v.name, self.h.name())
    }

    fn act(&self, (i, a): &Self::Key, b: &H::Basis) -> Result<LinComb<Self::Key>> {
        Ok(self.h.mul_basis(a, b)?.into_iter().map(|(p, c)| ((*i, p), c)).collect())
    }

    fn coact(&self, (i, a): &Self::Key) -> Result<LinComb<(Self::Key, H::Basis)>> {
        let mut out = LinComb::zero();
        for (a1, a2, a3, c) in delta3(self.h, a)? {
            for ((l, v1), d) in self.v.coaction[*i].iter() {
                let right = sandwich(self.h, &a1, &LinComb::basis(v1.clone()), &a3)?;
                for (r, e) in right.iter() {
                    out.add_term(((*l, a2.clone()), r.clone()), &(&c * d) * e);
                }
            }
        }
        Ok(out)
    }

    fn carrier_basis(&self, degree: usize) -> Vec<Self::Key> {
        let alg = self.h.basis_upto(degree);
        (0..self.v.dim())
            .flat_map(|i| alg.iter().map(move |a| (i, a.clone())))
            .collect()
    }
}

/// `M # A` for a right module `M`: `(x ⊗ a) ← b = x·b₂ ⊗ S(b₁) a b₃`,
/// coaction `id ⊗ Δ`.
pub struct CofreeYd<'a, H: HopfAlgebra> {
    pub h: &'a H,
    pub m: RightModule<'a, H::Basis>,
}

impl<'a, H: HopfAlgebra> CofreeYd<'a, H> {
    pub fn new(h: &'a H, m: RightModule<'a, H::Basis>) -> Self {
        CofreeYd { h, m }
    }
}

impl<'a, H: HopfAlgebra> YdModule for CofreeYd<'a, H> {
    type H = H;
    type Key = (usize, H::Basis);

    fn hopf(&self) -> &H {
        self.h
    }

    fn name(&self) -> String {
        format!("{} # {}", self.m.name, self.h.name())
    }

    fn act(&self, (x, a): &Self::Key, b: &H::Basis) -> Result<LinComb<Self::Key>> {
        let mut out = LinComb::zero();
        for (b1, b2, b3, c) in delta3(self.h, b)? {
            let xb = self.m.act(*x, &b2)?;
            let right = sandwich(self.h, &b1, &LinComb::basis(a.clone()), &b3)?;
            for (y, d) in xb.iter() {
                for (r, e) in right.iter() {
                    out.add_term((*y, r.clone()), &(&c * d) * e);
                }
            }
        }
        Ok(out)
    }

    fn coact(&self, (x, a): &Self::Key) -> Result<LinComb<(Self::Key, H::Basis)>> {
        Ok(self
            .h
            .coproduct_basis(a)?
            .into_iter()
            .map(|(mut l, c)| {
                let a2 = l.pop().unwrap();
                let a1 = l.pop().unwrap();
                (((*x, a1), a2), c)
            })
            .collect())
    }

    fn carrier_basis(&self, degree: usize) -> Vec<Self::Key> {
        let alg = self.h.basis_upto(degree);
        (0..self.m.dim)
            .flat_map(|x| alg.iter().map(move |a| (x, a.clone())))
            .collect()
    }
}

/// `A^{⊠n}`: right multiplication on the last leg, coaction built as
/// `A^{⊠n} = A^{⊠(n-1)} ⊠ A`. `A^{⊠0} = ℂ` with trivial structure.
pub struct CoadPower<'a, H: HopfAlgebra> {
    pub h: &'a H,
    pub n: usize,
}

impl<'a, H: HopfAlgebra> CoadPower<'a, H> {
    pub fn new(h: &'a H, n: usize) -> Self {
        CoadPower { h, n }
    }

    fn coact_rec(&self, v: &[H::Basis]) -> Result<Coaction<H::Basis>> {
        let Some((last, init)) = v.split_last() else {
            return Ok(self.h.one().into_iter().map(|(b, c)| ((Vec::new(), b), c)).collect());
        };
        let inner = self.coact_rec(init)?;
        let mut out = LinComb::zero();
        for (a1, a2, a3, c) in delta3(self.h, last)? {
            for ((x0, x1), d) in inner.iter() {
                let right = sandwich(self.h, &a1, &LinComb::basis(x1.clone()), &a3)?;
                let mut key = x0.clone();
                key.push(a2.clone());
                for (r, e) in right.iter() {
                    out.add_term((key.clone(), r.clone()), &(&c * d) * e);
                }
            }
        }
        Ok(out)
    }

    /// `a_{1(2)} ⊗ ⋯ ⊗ a_{n(2)} ⊗ S(a_{1(1)} ⋯ a_{n(1)}) a_{1(3)} ⋯ a_{n(3)}`,
    /// evaluated directly for comparison with the recursive coaction.
    pub fn coact_closed(&self, v: &[H::Basis]) -> Result<Coaction<H::Basis>> {
        // (middle legs, product of first legs, product of third legs)
        type Acc<B> = Vec<(Vec<B>, LinComb<B>, LinComb<B>, Scalar)>;
        let mut acc: Acc<H::Basis> = vec![(Vec::new(), self.h.one(), self.h.one(), Scalar::one())];
        for a in v {
            let mut next = Vec::new();
            for (mid, first, third, c) in &acc {
                for (a1, a2, a3, d) in delta3(self.h, a)? {
                    let mut m = mid.clone();
                    m.push(a2);
                    next.push((
                        m,
                        self.h.mul(first, &LinComb::basis(a1))?,
                        self.h.mul(third, &LinComb::basis(a3))?,
                        c * &d,
                    ));
                }
            }
            acc = next;
        }
        let mut out = LinComb::zero();
        for (mid, first, third, c) in acc {
            let right = self.h.mul(&self.h.antipode(&first)?, &third)?;
            for (r, e) in right.iter() {
                out.add_term((mid.clone(), r.clone()), &c * e);
            }
        }
        Ok(out)
    }
}

impl<'a, H: HopfAlgebra> YdModule for CoadPower<'a, H> {
    type H = H;
    type Key = Vec<H::Basis>;

    fn hopf(&self) -> &H {
        self.h
    }

    fn name(&self) -> String {
        format!("{}^⊠{}", self.h.name(), self.n)
    }

    fn act(&self, v: &Self::Key, b: &H::Basis) -> Result<LinComb<Self::Key>> {
        match v.split_last() {
            None => Ok(LinComb::term(Vec::new(), self.h.counit_basis(b))),
            Some((last, init)) => Ok(self
                .h
                .mul_basis(last, b)?
                .into_iter()
                .map(|(p, c)| {
                    let mut k = init.to_vec();
                    k.push(p);
                    (k, c)
                })
                .collect()),
        }
    }

    fn coact(&self, v: &Self::Key) -> Result<LinComb<(Self::Key, H::Basis)>> {
        self.coact_rec(v)
    }

    /// Tensors whose total degree is at most `degree`.
    fn carrier_basis(&self, degree: usize) -> Vec<Self::Key> {
        let alg = self.h.basis_upto(degree);
        let mut out: Vec<(Vec<H::Basis>, usize)> = vec![(Vec::new(), 0)];
        for _ in 0..self.n {
            let mut next = Vec::new();
            for (k, d) in &out {
                for a in &alg {
                    let da = d + self.h.degree(a);
                    if da <= degree {
                        let mut k2 = k.clone();
                        k2.push(a.clone());
                        next.push((k2, da));
                    }
                }
            }
            out = next;
        }
        out.into_iter().map(|(k, _)| k).collect()
    }
}

/// `M′ # A` for a bimodule `M`: `(m ⊗ a) ← b = S(b₂)·m·b₃ ⊗ S(b₁) a b₄`,
/// coaction `m ⊗ a ↦ m ⊗ a₁ ⊗ a₂`.
pub struct TwistYd<'a> {
    pub h: &'a FiniteHopf,
    pub m: &'a Bimodule,
}

impl<'a> TwistYd<'a> {
    pub fn new(h: &'a FiniteHopf, m: &'a Bimodule) -> Self {
        TwistYd { h, m }
    }
}

impl<'a> YdModule for TwistYd<'a> {
    type H = FiniteHopf;
    type Key = (usize, usize);

    fn hopf(&self) -> &FiniteHopf {
        self.h
    }

    fn name(&self) -> String {
        format!("{}' # {}", self.m.name, self.h.name())
    }

    fn act(&self, (x, a): &Self::Key, b: &usize) -> Result<LinComb<Self::Key>> {
        let mut out = LinComb::zero();
        for (legs, c) in self.h.iterated_coproduct(&LinComb::basis(*b), 4)?.iter() {
            let (b1, b2, b3, b4) = (legs[0], legs[1], legs[2], legs[3]);
            let xb = self.m.right_act(&LinComb::basis(*x), b3);
            let mut mx = LinComb::zero();
            for (s, d) in self.h.antipode_table(b2) {
                mx.add_scaled(&self.m.left_act(*s, &xb), d);
            }
            let right = sandwich(self.h, &b1, &LinComb::basis(*a), &b4)?;
            for (y, d) in mx.iter() {
                for (r, e) in right.iter() {
                    out.add_term((*y, *r), &(c * d) * e);
                }
            }
        }
        Ok(out)
    }

    fn coact(&self, (x, a): &Self::Key) -> Result<LinComb<(Self::Key, usize)>> {
        Ok(self
            .h
            .coproduct_table(*a)
            .iter()
            .map(|(a1, a2, c)| (((*x, *a1), *a2), c.clone()))
            .collect())
    }

    fn carrier_basis(&self, _degree: usize) -> Vec<Self::Key> {
        (0..self.m.dim)
            .flat_map(|x| (0..self.h.dim()).map(move |a| (x, a)))
            .collect()
    }
}

/// A Yetter-Drinfeld module over a finite-dimensional Hopf algebra with
/// action and coaction tables over a numbered basis.
#[derive(Clone, Debug)]
pub struct FiniteYd {
    pub name: String,
    pub h: FiniteHopf,
    pub labels: Vec<String>,
    /// `act[v][a] = v ← b_a`.
    pub act: Vec<Vec<LinComb<usize>>>,
    /// `coact[v] = Σ c w ⊗ b_a`, terms `(w, a)`.
    pub coact: Vec<LinComb<(usize, usize)>>,
}

impl FiniteYd {
    /// Tabulates a module whose carrier is finite.
    pub fn materialize<M>(m: &M) -> Result<FiniteYd>
    where
        M: YdModule<H = FiniteHopf>,
    {
        let h = m.hopf().clone();
        let keys = m.carrier_basis(0);
        let index = |k: &M::Key| -> Result<usize> {
            keys.binary_search(k)
                .map_err(|_| Error::Inconsistent(format!("{:?} is outside the carrier", k)))
        };
        if keys.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Inconsistent("carrier basis must be sorted".into()));
        }
        let mut act = Vec::new();
        let mut coact = Vec::new();
        for k in &keys {
            let mut row = Vec::new();
            for a in 0..h.dim() {
                let mut v = LinComb::zero();
                for (t, c) in m.act(k, &a)?.iter() {
                    v.add_term(index(t)?, c.clone());
                }
                row.push(v);
            }
            act.push(row);
            let mut co = LinComb::zero();
            for ((t, a), c) in m.coact(k)?.iter() {
                co.add_term((index(t)?, *a), c.clone());
            }
            coact.push(co);
        }
        Ok(FiniteYd {
            name: m.name(),
            labels: keys.iter().map(|k| format!("{:?}", k)).collect(),
            h,
            act,
            coact,
        })
    }

    /// `ℂ` with trivial action and coaction.
    pub fn trivial(h: &FiniteHopf) -> FiniteYd {
        FiniteYd {
            name: "C".into(),
            h: h.clone(),
            labels: vec!["1".into()],
            act: vec![(0..h.dim()).map(|a| LinComb::term(0, h.counit_basis(&a))).collect()],
            coact: vec![h.one().into_iter().map(|(e, c)| ((0, e), c)).collect()],
        }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }
}

impl YdModule for FiniteYd {
    type H = FiniteHopf;
    type Key = usize;

    fn hopf(&self) -> &FiniteHopf {
        &self.h
    }

    fn name(&self) -> String {
        self.name.clone()
    }

    fn act(&self, v: &usize, a: &usize) -> Result<LinComb<usize>> {
        Ok(self.act[*v][*a].clone())
    }

    fn coact(&self, v: &usize) -> Result<LinComb<(usize, usize)>> {
        Ok(self.coact[*v].clone())
    }

    fn carrier_basis(&self, _degree: usize) -> Vec<usize> {
        (0..self.dim()).collect()
    }
}

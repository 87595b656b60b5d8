use super::group::Group;
use super::HopfAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{Rref, SparseVec};
use crate::lincomb::{LinComb, Tensor};
use crate::scalar::Scalar;
use serde::{Deserialize, Serialize};

/// Raw structure constants of a finite-dimensional Hopf algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteHopfTables {
    pub name: String,
    pub labels: Vec<String>,
    /// `mult[x][y]` is the product `b_x b_y`.
    pub mult: Vec<Vec<SparseVec>>,
    pub unit: SparseVec,
    /// `coproduct[x]` lists `(i, j, c)` with `Δ(b_x) = Σ c b_i ⊗ b_j`.
    pub coproduct: Vec<Vec<(usize, usize, Scalar)>>,
    pub counit: Vec<Scalar>,
    pub antipode: Vec<SparseVec>,
    #[serde(default)]
    pub haar: Option<Vec<Scalar>>,
    /// One-dimensional representations (algebra maps to the scalars).
    #[serde(default)]
    pub characters: Vec<Vec<Scalar>>,
}

/// Finite-dimensional Hopf algebra backed by structure tables.
#[derive(Clone, Debug)]
pub struct FiniteHopf {
    t: FiniteHopfTables,
    /// `(x, y, c)` with `b_x b_y` containing `c b_k`, indexed by `k`.
    mult_preimage: Vec<Vec<(usize, usize, Scalar)>>,
    kac: bool,
}

impl FiniteHopf {
    pub fn from_tables(t: FiniteHopfTables) -> Result<FiniteHopf> {
        let n = t.labels.len();
        let shape_ok = t.mult.len() == n
            && t.mult.iter().all(|r| r.len() == n)
            && t.coproduct.len() == n
            && t.counit.len() == n
            && t.antipode.len() == n
            && t.haar.as_ref().is_none_or(|h| h.len() == n)
            && t.characters.iter().all(|c| c.len() == n);
        let in_range = t.mult.iter().flatten().flatten().all(|(k, _)| *k < n)
            && t.unit.iter().all(|(k, _)| *k < n)
            && t.coproduct.iter().flatten().all(|(i, j, _)| *i < n && *j < n)
            && t.antipode.iter().flatten().all(|(k, _)| *k < n);
        if !shape_ok || !in_range {
            return Err(Error::Invalid(format!("malformed structure tables for {}", t.name)));
        }
        let mut mult_preimage = vec![Vec::new(); n];
        for x in 0..n {
            for y in 0..n {
                for (k, c) in &t.mult[x][y] {
                    mult_preimage[*k].push((x, y, c.clone()));
                }
            }
        }
        let mut h = FiniteHopf {
            t,
            mult_preimage,
            kac: false,
        };
        h.kac = (0..n).all(|x| {
            let s2 = h.antipode(&h.antipode(&LinComb::basis(x)).unwrap()).unwrap();
            s2 == LinComb::basis(x)
        });
        Ok(h)
    }

    /// ℂΓ: group-like basis, Haar state picks out the identity.
    pub fn group_algebra(g: &Group, name: &str) -> FiniteHopf {
        let n = g.order;
        let e = g.identity();
        let one = Scalar::one();
        let t = FiniteHopfTables {
            name: name.to_string(),
            labels: (0..n).map(|x| g.name(x)).collect(),
            mult: (0..n)
                .map(|x| (0..n).map(|y| vec![(g.mul(x, y), one.clone())]).collect())
                .collect(),
            unit: vec![(e, one.clone())],
            coproduct: (0..n).map(|x| vec![(x, x, one.clone())]).collect(),
            counit: vec![one.clone(); n],
            antipode: (0..n).map(|x| vec![(g.inverse(x), one.clone())]).collect(),
            haar: Some(
                (0..n)
                    .map(|x| if x == e { Scalar::one() } else { Scalar::zero() })
                    .collect(),
            ),
            characters: g
                .sign_characters()
                .into_iter()
                .map(|c| c.into_iter().map(Scalar::from_i64).collect())
                .collect(),
        };
        FiniteHopf::from_tables(t).expect("group algebra tables are well formed")
    }

    /// O(Γ): indicator functions with the coproduct dual to the group law.
    pub fn function_algebra(g: &Group, name: &str) -> FiniteHopf {
        let n = g.order;
        let e = g.identity();
        let one = Scalar::one();
        let mut coproduct = vec![Vec::new(); n];
        for x in 0..n {
            for y in 0..n {
                coproduct[g.mul(x, y)].push((x, y, one.clone()));
            }
        }
        let t = FiniteHopfTables {
            name: name.to_string(),
            labels: (0..n).map(|x| format!("δ{}", g.name(x))).collect(),
            mult: (0..n)
                .map(|x| {
                    (0..n)
                        .map(|y| if x == y { vec![(x, one.clone())] } else { Vec::new() })
                        .collect()
                })
                .collect(),
            unit: (0..n).map(|x| (x, one.clone())).collect(),
            coproduct,
            counit: (0..n)
                .map(|x| if x == e { Scalar::one() } else { Scalar::zero() })
                .collect(),
            antipode: (0..n).map(|x| vec![(g.inverse(x), one.clone())]).collect(),
            haar: Some(vec![Scalar::frac(1, n as i64); n]),
            characters: (0..n)
                .map(|p| {
                    (0..n)
                        .map(|x| if x == p { Scalar::one() } else { Scalar::zero() })
                        .collect()
                })
                .collect(),
        };
        FiniteHopf::from_tables(t).expect("function algebra tables are well formed")
    }

    pub fn tables(&self) -> &FiniteHopfTables {
        &self.t
    }

    pub fn dim(&self) -> usize {
        self.t.labels.len()
    }

    pub fn mult_table(&self, x: usize, y: usize) -> &SparseVec {
        &self.t.mult[x][y]
    }

    /// Pairs `(x, y, c)` such that `b_x b_y` has coefficient `c` on `b_k`.
    pub fn mult_preimage(&self, k: usize) -> &[(usize, usize, Scalar)] {
        &self.mult_preimage[k]
    }

    pub fn coproduct_table(&self, x: usize) -> &[(usize, usize, Scalar)] {
        &self.t.coproduct[x]
    }

    pub fn counit_table(&self, x: usize) -> &Scalar {
        &self.t.counit[x]
    }

    pub fn antipode_table(&self, x: usize) -> &SparseVec {
        &self.t.antipode[x]
    }

    pub fn haar_table(&self) -> Option<&[Scalar]> {
        self.t.haar.as_deref()
    }

    pub fn is_cosemisimple(&self) -> bool {
        self.t.haar.is_some()
    }

    pub fn is_kac(&self) -> bool {
        self.kac
    }

    pub fn characters(&self) -> &[Vec<Scalar>] {
        &self.t.characters
    }

    pub fn unit_vec(&self) -> &SparseVec {
        &self.t.unit
    }

    /// Left integral `Λ` with `aΛ = ε(a)Λ` and `ε(Λ) = 1`; exists iff the
    /// algebra is semisimple.
    pub fn normalized_left_integral(&self) -> Option<SparseVec> {
        let n = self.dim();
        // Unknown Λ = Σ λ_k b_k. Row (a, i): coefficient of b_i in aΛ - ε(a)Λ.
        let mut rows: Vec<Vec<(usize, Scalar)>> = Vec::new();
        for a in 0..n {
            let mut eqs: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); n];
            for k in 0..n {
                for (i, c) in &self.t.mult[a][k] {
                    eqs[*i].push((k, c.clone()));
                }
                eqs[k].push((k, -&self.t.counit[a]));
            }
            rows.extend(eqs.into_iter().map(crate::linalg::collect_sparse));
        }
        let kernel = Rref::from_rows(n, rows).kernel();
        for v in kernel {
            let e = v
                .iter()
                .fold(Scalar::zero(), |acc, (k, c)| acc + c * &self.t.counit[*k]);
            if !e.is_zero() {
                let inv = e.inv().unwrap();
                return Some(v.into_iter().map(|(k, c)| (k, c * &inv)).collect());
            }
        }
        None
    }

    /// Copy with the antipode images of `x` and `y` exchanged.
    pub fn with_swapped_antipode(&self, x: usize, y: usize) -> FiniteHopf {
        let mut t = self.t.clone();
        t.antipode.swap(x, y);
        t.name = format!("{} (corrupted)", t.name);
        FiniteHopf::from_tables(t).unwrap()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.t.labels.iter().position(|l| l == label)
    }
}

impl HopfAlgebra for FiniteHopf {
    type Basis = usize;

    fn name(&self) -> String {
        self.t.name.clone()
    }

    fn basis_upto(&self, _degree: usize) -> Vec<usize> {
        (0..self.dim()).collect()
    }

    fn degree(&self, _b: &usize) -> usize {
        0
    }

    fn label(&self, b: &usize) -> String {
        self.t.labels[*b].clone()
    }

    fn one(&self) -> LinComb<usize> {
        self.t.unit.iter().cloned().collect()
    }

    fn mul_basis(&self, x: &usize, y: &usize) -> Result<LinComb<usize>> {
        Ok(self.t.mult[*x][*y].iter().cloned().collect())
    }

    fn coproduct_basis(&self, x: &usize) -> Result<Tensor<usize>> {
        Ok(self.t.coproduct[*x]
            .iter()
            .map(|(i, j, c)| (vec![*i, *j], c.clone()))
            .collect())
    }

    fn counit_basis(&self, x: &usize) -> Scalar {
        self.t.counit[*x].clone()
    }

    fn antipode_basis(&self, x: &usize) -> Result<LinComb<usize>> {
        Ok(self.t.antipode[*x].iter().cloned().collect())
    }

    fn haar_basis(&self, x: &usize) -> Option<Scalar> {
        self.t.haar.as_ref().map(|h| h[*x].clone())
    }
}

/// `CG` is the group algebra and `OG` the function algebra of the
/// built-in group `G` (`Z2`, `Z3`, `Z4`, `S3`).
pub fn builtin_finite(name: &str) -> Result<FiniteHopf> {
    let (kind, group) = name.split_at(name.len().min(1));
    let g = super::group::builtin_group(group)
        .map_err(|_| Error::Invalid(format!("unknown finite Hopf algebra {:?}", name)))?;
    match kind {
        "C" => Ok(FiniteHopf::group_algebra(&g, &format!("C{}", group))),
        "O" => Ok(FiniteHopf::function_algebra(&g, &format!("O({})", group))),
        _ => Err(Error::Invalid(format!("unknown finite Hopf algebra {:?}", name))),
    }
}

#[cfg(test)]
mod tests {
    use super::super::{check_hopf_axioms, check_kac};
    use super::*;

    #[test]
    fn builtins_satisfy_axioms() {
        for name in ["CZ2", "CZ3", "CS3", "OZ2", "OS3"] {
            let h = builtin_finite(name).unwrap();
            let r = check_hopf_axioms(&h, 0).unwrap();
            assert!(r.pass(), "{}: {:?}", name, r.failures);
            assert!(r.checked.iter().any(|c| c == "haar"));
            assert!(h.is_kac() && check_kac(&h, 0).unwrap());
        }
        assert!(builtin_finite("CQ8").is_err());
        assert!(builtin_finite("XS3").is_err());
    }

    #[test]
    fn swapped_antipode_is_caught() {
        let h = builtin_finite("CS3").unwrap();
        // [132] and [231] are not mutually inverse with [213]
        let bad = h.with_swapped_antipode(1, 3);
        let r = check_hopf_axioms(&bad, 0).unwrap();
        assert!(r.failed("antipode"), "{:?}", r);
        let o = builtin_finite("OS3").unwrap().with_swapped_antipode(0, 1);
        assert!(check_hopf_axioms(&o, 0).unwrap().failed("antipode"));
    }

    #[test]
    fn bad_haar_is_caught() {
        let h = builtin_finite("OZ3").unwrap();
        let mut t = h.tables().clone();
        t.haar = Some(vec![Scalar::one(), Scalar::zero(), Scalar::zero()]);
        let bad = FiniteHopf::from_tables(t).unwrap();
        assert!(check_hopf_axioms(&bad, 0).unwrap().failed("haar"));
    }

    #[test]
    fn left_integrals() {
        // ℂΓ: Λ = average of the group; O(Γ): Λ = δ_e
        let c = builtin_finite("CS3").unwrap();
        let l = c.normalized_left_integral().unwrap();
        assert_eq!(l.len(), 6);
        assert!(l.iter().all(|(_, v)| *v == Scalar::frac(1, 6)));
        let o = builtin_finite("OS3").unwrap();
        assert_eq!(o.normalized_left_integral().unwrap(), vec![(0, Scalar::one())]);
    }

    #[test]
    fn tables_round_trip_through_json() {
        let h = builtin_finite("OZ2").unwrap();
        let s = serde_json::to_string(h.tables()).unwrap();
        let back: FiniteHopfTables = serde_json::from_str(&s).unwrap();
        assert_eq!(&back, h.tables());
    }

    #[test]
    fn malformed_tables_are_rejected() {
        let mut t = builtin_finite("CZ2").unwrap().tables().clone();
        t.counit.pop();
        assert!(FiniteHopf::from_tables(t).is_err());
        let mut t = builtin_finite("CZ2").unwrap().tables().clone();
        t.mult[0][0] = vec![(7, Scalar::one())];
        assert!(FiniteHopf::from_tables(t).is_err());
    }
}

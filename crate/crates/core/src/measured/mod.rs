//! Finite-dimensional measured algebras `(R, φ)`: dual bases for the
//! pairing `φ(xy)`, the functional `φ̃`, and the normalizability test.

use crate::error::{Error, Result};
use crate::linalg::dense_inverse as invert;
use crate::scalar::Scalar;
use serde::{Deserialize, Serialize};

/// Serialized form: `mult[i][j][k]` is the coefficient of `b_k` in `b_i b_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MeasuredAlgebraInput {
    pub dim: usize,
    pub mult: Vec<Vec<Vec<Scalar>>>,
    pub unit: Vec<Scalar>,
    pub phi: Vec<Scalar>,
}

#[derive(Clone, Debug)]
pub struct MeasuredAlgebra {
    name: String,
    m: usize,
    mult: Vec<Vec<Vec<Scalar>>>,
    unit: Vec<Scalar>,
    phi: Vec<Scalar>,
    gram_inv: Vec<Vec<Scalar>>,
}

/// `δ(1) = Σ coeffs[i][j] b_i ⊗ b_j` and the result of checking both
/// snake identities on every basis vector.
#[derive(Clone, Debug, Serialize)]
pub struct FrobeniusDual {
    pub coeffs: Vec<Vec<Scalar>>,
    pub snake_left: bool,
    pub snake_right: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct NormalizabilityReport {
    pub algebra: String,
    pub dim: usize,
    pub normalizable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    /// Basis index where `φ̃` and `λφ` disagree.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<usize>,
    /// The same basis vector as `e1, e2, …`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_basis: Option<String>,
    pub phi1: Scalar,
    pub phi_tilde: Vec<Scalar>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Scalar>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu_squared: Option<Scalar>,
    /// Present only when `μ²` is the square of a rational.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu: Option<Scalar>,
    /// `z^2 - μ z + 1`, written with `μ² = ...` when `μ` is irrational.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q_quadratic: Option<String>,
    /// Rational solutions of `q + 1/q = μ`.
    pub q_rational_roots: Vec<Scalar>,
    pub snake_identities: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

impl MeasuredAlgebra {
    pub fn new(
        name: &str,
        mult: Vec<Vec<Vec<Scalar>>>,
        unit: Vec<Scalar>,
        phi: Vec<Scalar>,
    ) -> Result<MeasuredAlgebra> {
        let m = unit.len();
        if m == 0
            || phi.len() != m
            || mult.len() != m
            || mult.iter().any(|r| r.len() != m || r.iter().any(|v| v.len() != m))
        {
            return Err(Error::Shape(format!(
                "measured algebra {}: inconsistent dimensions",
                name
            )));
        }
        let mut r = MeasuredAlgebra {
            name: name.to_string(),
            m,
            mult,
            unit,
            phi,
            gram_inv: Vec::new(),
        };
        for i in 0..m {
            let e = r.basis(i);
            if r.mul(&r.unit, &e) != e || r.mul(&e, &r.unit) != e {
                return Err(Error::Invalid(format!("{}: unit law fails at b_{}", name, i + 1)));
            }
            for j in 0..m {
                for k in 0..m {
                    let l = r.mul(&r.mul(&e, &r.basis(j)), &r.basis(k));
                    let rr = r.mul(&e, &r.mul(&r.basis(j), &r.basis(k)));
                    if l != rr {
                        return Err(Error::Invalid(format!(
                            "{}: not associative at (b_{}, b_{}, b_{})",
                            name,
                            i + 1,
                            j + 1,
                            k + 1
                        )));
                    }
                }
            }
        }
        r.gram_inv = invert(&r.gram())
            .ok_or_else(|| Error::Invalid(format!("{}: degenerate measure (Gram matrix is singular)", name)))?;
        Ok(r)
    }

    pub fn from_input(name: &str, input: MeasuredAlgebraInput) -> Result<MeasuredAlgebra> {
        if input.dim != input.unit.len() {
            return Err(Error::Shape(format!(
                "dim is {} but the unit has {} entries",
                input.dim,
                input.unit.len()
            )));
        }
        MeasuredAlgebra::new(name, input.mult, input.unit, input.phi)
    }

    pub fn from_json(name: &str, json: &str) -> Result<MeasuredAlgebra> {
        let input: MeasuredAlgebraInput =
            serde_json::from_str(json).map_err(|e| Error::Parse(format!("measured algebra JSON: {}", e)))?;
        MeasuredAlgebra::from_input(name, input)
    }

    pub fn to_input(&self) -> MeasuredAlgebraInput {
        MeasuredAlgebraInput {
            dim: self.m,
            mult: self.mult.clone(),
            unit: self.unit.clone(),
            phi: self.phi.clone(),
        }
    }

    /// `ℂⁿ` with `φ(e_i) = w_i`.
    pub fn weighted(name: &str, weights: &[Scalar]) -> Result<MeasuredAlgebra> {
        let n = weights.len();
        let mut mult = vec![vec![vec![Scalar::zero(); n]; n]; n];
        for (i, row) in mult.iter_mut().enumerate() {
            row[i][i] = Scalar::one();
        }
        MeasuredAlgebra::new(name, mult, vec![Scalar::one(); n], weights.to_vec())
    }

    /// `(ℂⁿ, φₙ)` with `φₙ(e_i) = 1`.
    pub fn cn(n: usize) -> Result<MeasuredAlgebra> {
        MeasuredAlgebra::weighted(&format!("C^{}", n), &vec![Scalar::one(); n])
    }

    /// `M_n` on matrix units `e_ij` (index `i n + j`) with `φ(e_ii) = w_i`.
    pub fn matrix_weighted(name: &str, weights: &[Scalar]) -> Result<MeasuredAlgebra> {
        let n = weights.len();
        let m = n * n;
        let mut mult = vec![vec![vec![Scalar::zero(); m]; m]; m];
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    mult[i * n + j][j * n + l][i * n + l] = Scalar::one();
                }
            }
        }
        let mut unit = vec![Scalar::zero(); m];
        let mut phi = vec![Scalar::zero(); m];
        for i in 0..n {
            unit[i * n + i] = Scalar::one();
            phi[i * n + i] = weights[i].clone();
        }
        MeasuredAlgebra::new(name, mult, unit, phi)
    }

    /// `(M_n, tr)`.
    pub fn matrix_trace(n: usize) -> Result<MeasuredAlgebra> {
        MeasuredAlgebra::matrix_weighted(&format!("M_{} with trace", n), &vec![Scalar::one(); n])
    }

    /// `(M_2, tr_q)`, `tr_q(g) = q g_11 + q^{-1} g_22`.
    pub fn trq(q: &Scalar) -> Result<MeasuredAlgebra> {
        MeasuredAlgebra::matrix_weighted(&format!("M_2 with tr_q, q = {}", q), &[q.clone(), q.inv()?])
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.m
    }

    pub fn phi(&self) -> &[Scalar] {
        &self.phi
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    fn basis(&self, i: usize) -> Vec<Scalar> {
        (0..self.m)
            .map(|k| if k == i { Scalar::one() } else { Scalar::zero() })
            .collect()
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.m];
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let c = xi * yj;
                for (k, s) in self.mult[i][j].iter().enumerate() {
                    if !s.is_zero() {
                        out[k] += &(&c * s);
                    }
                }
            }
        }
        out
    }

    pub fn measure(&self, x: &[Scalar]) -> Scalar {
        x.iter().zip(&self.phi).fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
    }

    /// `G_ij = φ(b_i b_j)`.
    pub fn gram(&self) -> Vec<Vec<Scalar>> {
        (0..self.m)
            .map(|i| {
                (0..self.m)
                    .map(|j| self.measure(&self.mul(&self.basis(i), &self.basis(j))))
                    .collect()
            })
            .collect()
    }

    /// The copairing dual to `φ∘m`, with both snake identities checked.
    pub fn frobenius_dual(&self) -> FrobeniusDual {
        let c = &self.gram_inv;
        let m = self.m;
        let mut left = true;
        let mut right = true;
        for k in 0..m {
            let x = self.basis(k);
            // Σ c_ij φ(x b_i) b_j and Σ c_ij b_i φ(b_j x)
            let mut l = vec![Scalar::zero(); m];
            let mut r = vec![Scalar::zero(); m];
            for i in 0..m {
                for j in 0..m {
                    if c[i][j].is_zero() {
                        continue;
                    }
                    l[j] += &(&c[i][j] * &self.measure(&self.mul(&x, &self.basis(i))));
                    r[i] += &(&c[i][j] * &self.measure(&self.mul(&self.basis(j), &x)));
                }
            }
            left &= l == x;
            right &= r == x;
        }
        FrobeniusDual {
            coeffs: c.clone(),
            snake_left: left,
            snake_right: right,
        }
    }

    /// `φ̃(x) = Σ c_ij φ(x b_i b_j)`.
    pub fn phi_tilde(&self) -> Vec<Scalar> {
        let c = &self.gram_inv;
        (0..self.m)
            .map(|k| {
                let x = self.basis(k);
                let mut acc = Scalar::zero();
                for i in 0..self.m {
                    let xi = self.mul(&x, &self.basis(i));
                    for j in 0..self.m {
                        if !c[i][j].is_zero() {
                            acc += &(&c[i][j] * &self.measure(&self.mul(&xi, &self.basis(j))));
                        }
                    }
                }
                acc
            })
            .collect()
    }

    pub fn normalizability(&self) -> NormalizabilityReport {
        let mut r = self.analyze();
        r.witness_basis = r.witness.map(|k| format!("e{}", k + 1));
        r
    }

    fn analyze(&self) -> NormalizabilityReport {
        let phi1 = self.measure(&self.unit);
        let phi_tilde = self.phi_tilde();
        let dual = self.frobenius_dual();
        let mut report = NormalizabilityReport {
            algebra: self.name.clone(),
            dim: self.m,
            normalizable: false,
            reason: None,
            witness: None,
            witness_basis: None,
            phi1: phi1.clone(),
            phi_tilde: phi_tilde.clone(),
            lambda: None,
            mu_squared: None,
            mu: None,
            q_quadratic: None,
            q_rational_roots: Vec::new(),
            snake_identities: dual.snake_left && dual.snake_right,
            warnings: Vec::new(),
        };
        if self.m < 4 {
            report.warnings.push(format!(
                "dim(R) = {} < 4: the monoidal parameter is only meaningful in dimension at least 4",
                self.m
            ));
        }
        if phi1.is_zero() {
            report.reason = Some("φ(1) = 0".into());
            return report;
        }
        let lambda = &phi_tilde
            .iter()
            .zip(&self.phi)
            .find(|(_, p)| !p.is_zero())
            .map(|(t, p)| t / p);
        let lambda = match lambda {
            Some(l) if !l.is_zero() => l.clone(),
            _ => {
                report.reason = Some("φ̃ is not a nonzero multiple of φ".into());
                report.witness = phi_tilde.iter().position(|t| !t.is_zero()).or(Some(0));
                return report;
            }
        };
        if let Some(k) = (0..self.m).find(|&k| phi_tilde[k] != &lambda * &self.phi[k]) {
            report.reason = Some(format!(
                "φ̃ is not proportional to φ: φ̃(b_{}) = {} but λφ(b_{}) = {}",
                k + 1,
                phi_tilde[k],
                k + 1,
                &lambda * &self.phi[k]
            ));
            report.witness = Some(k);
            return report;
        }
        let mu2 = &lambda * &phi1;
        report.normalizable = true;
        report.lambda = Some(lambda);
        report.mu = mu2.rational_sqrt();
        report.q_quadratic = Some(match &report.mu {
            Some(mu) => format!("z^2 - ({})*z + 1", mu),
            None => format!("z^2 - mu*z + 1 with mu^2 = {}", mu2),
        });
        if let Some(mu) = &report.mu {
            let disc = mu * mu - Scalar::from_i64(4);
            if let Some(r) = disc.rational_sqrt() {
                let two = Scalar::from_i64(2);
                let mut roots = vec![(mu - &r) / &two, (mu + &r) / &two];
                roots.dedup();
                report.q_rational_roots = roots;
            }
        }
        report.mu_squared = Some(mu2);
        report
    }

    /// The same algebra in the basis `b'_i = Σ_k P_ki b_k`.
    pub fn change_basis(&self, p: &[Vec<Scalar>]) -> Result<MeasuredAlgebra> {
        let m = self.m;
        let pinv = invert(p).ok_or_else(|| Error::Invalid("change of basis is singular".into()))?;
        let column = |j: usize| -> Vec<Scalar> { (0..m).map(|k| p[k][j].clone()).collect() };
        let to_new = |v: &[Scalar]| -> Vec<Scalar> {
            (0..m)
                .map(|i| (0..m).fold(Scalar::zero(), |acc, k| acc + &pinv[i][k] * &v[k]))
                .collect()
        };
        let mult = (0..m)
            .map(|i| (0..m).map(|j| to_new(&self.mul(&column(i), &column(j)))).collect())
            .collect();
        let phi = (0..m).map(|i| self.measure(&column(i))).collect();
        MeasuredAlgebra::new(&self.name, mult, to_new(&self.unit), phi)
    }
}

#[cfg(test)]
mod tests;

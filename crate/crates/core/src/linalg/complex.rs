use super::elim::{kernel_basis, rank};
use super::matrix::SparseMatrix;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Finite cochain complex `C^0 -> C^1 -> ... -> C^k` with `d[i]` of
/// shape `dims[i+1] x dims[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CochainComplex {
    dims: Vec<usize>,
    ds: Vec<SparseMatrix>,
}

impl CochainComplex {
    pub fn new(dims: Vec<usize>, ds: Vec<SparseMatrix>) -> Result<Self> {
        let c = Self::new_unchecked(dims, ds)?;
        if let Some(i) = c.first_nonzero_composition()? {
            return Err(Error::NotAComplex { index: i });
        }
        Ok(c)
    }

    /// Checks shapes only; `d[i+1] d[i] = 0` is left to
    /// [`CochainComplex::first_nonzero_composition`].
    pub fn new_unchecked(dims: Vec<usize>, ds: Vec<SparseMatrix>) -> Result<Self> {
        if dims.is_empty() || ds.len() + 1 != dims.len() {
            return Err(Error::Shape(format!(
                "{} dimensions need {} differentials, got {}",
                dims.len(),
                dims.len().saturating_sub(1),
                ds.len()
            )));
        }
        for (i, d) in ds.iter().enumerate() {
            if d.rows() != dims[i + 1] || d.cols() != dims[i] {
                return Err(Error::Shape(format!(
                    "d{} is {}x{}, expected {}x{}",
                    i,
                    d.rows(),
                    d.cols(),
                    dims[i + 1],
                    dims[i]
                )));
            }
        }
        Ok(CochainComplex { dims, ds })
    }

    pub fn first_nonzero_composition(&self) -> Result<Option<usize>> {
        for i in 0..self.ds.len().saturating_sub(1) {
            if !self.ds[i + 1].mul(&self.ds[i])?.is_zero() {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn differentials(&self) -> &[SparseMatrix] {
        &self.ds
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.ds.iter().map(rank).collect()
    }

    /// `dim ker d[i] - rank d[i-1]` at every position.
    pub fn homology_dims(&self) -> Vec<usize> {
        let ranks = self.ranks();
        self.homology_from_ranks(&ranks)
    }

    pub fn homology_from_ranks(&self, ranks: &[usize]) -> Vec<usize> {
        (0..self.dims.len())
            .map(|i| {
                let out = if i < ranks.len() { ranks[i] } else { 0 };
                let inc = if i > 0 { ranks[i - 1] } else { 0 };
                self.dims[i] - out - inc
            })
            .collect()
    }

    /// Cocycle representatives of degree `i` (not reduced modulo coboundaries).
    pub fn cocycles(&self, i: usize) -> Vec<super::SparseVec> {
        match self.ds.get(i) {
            Some(d) => kernel_basis(d),
            None => (0..self.dims[i])
                .map(|k| vec![(k, crate::scalar::Scalar::one())])
                .collect(),
        }
    }

    pub fn specialize(&self, q: &num_rational::BigRational) -> Result<CochainComplex> {
        let ds = self.ds.iter().map(|d| d.specialize(q)).collect::<Result<Vec<_>>>()?;
        CochainComplex::new_unchecked(self.dims.clone(), ds)
    }
}

#[derive(Deserialize)]
struct ComplexJson {
    dims: Vec<usize>,
    ds: Vec<SparseMatrix>,
}

impl<'de> Deserialize<'de> for CochainComplex {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let c = ComplexJson::deserialize(d)?;
        CochainComplex::new(c.dims, c.ds).map_err(D::Error::custom)
    }
}

/// Outcome of checking `d[i+1] d[i] = 0` everywhere.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DSquaredReport {
    pub pass: bool,
    /// First index `i` with `d[i+1] d[i] != 0`.
    pub failing_position: Option<usize>,
}

pub fn d_squared_check(c: &CochainComplex) -> Result<DSquaredReport> {
    let f = c.first_nonzero_composition()?;
    Ok(DSquaredReport {
        pass: f.is_none(),
        failing_position: f,
    })
}

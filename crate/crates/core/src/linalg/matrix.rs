use crate::error::{Error, Result};
use crate::scalar::Scalar;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Sorted sparse vector without zero entries.
pub type SparseVec = Vec<(usize, Scalar)>;

/// `a + c * b` for sorted sparse vectors.
pub fn axpy(a: &[(usize, Scalar)], c: &Scalar, b: &[(usize, Scalar)]) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, c * &b[j].1));
            j += 1;
        } else {
            let v = &a[i].1 + &(c * &b[j].1);
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Builds a sorted sparse vector from unsorted, possibly repeated entries.
pub fn collect_sparse(entries: impl IntoIterator<Item = (usize, Scalar)>) -> SparseVec {
    let mut m: BTreeMap<usize, Scalar> = BTreeMap::new();
    for (i, v) in entries {
        *m.entry(i).or_default() += &v;
    }
    m.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), Scalar>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_dense(rows: &[Vec<Scalar>]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::Shape(format!(
                    "row {} has length {}, expected {}",
                    i,
                    r.len(),
                    cols
                )));
            }
            for (j, v) in r.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        Ok(m)
    }

    pub fn from_entries(
        rows: usize,
        cols: usize,
        entries: impl IntoIterator<Item = (usize, usize, Scalar)>,
    ) -> Result<Self> {
        let mut m = Self::zeros(rows, cols);
        for (r, c, v) in entries {
            if r >= rows || c >= cols {
                return Err(Error::Shape(format!("entry ({}, {}) outside {}x{}", r, c, rows, cols)));
            }
            m.add_to(r, c, &v);
        }
        Ok(m)
    }

    /// Matrix whose columns are the given sparse vectors.
    pub fn from_columns(rows: usize, columns: &[SparseVec]) -> Result<Self> {
        Self::from_entries(
            rows,
            columns.len(),
            columns
                .iter()
                .enumerate()
                .flat_map(|(j, col)| col.iter().map(move |(i, v)| (*i, j, v.clone()))),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        self.entries.get(&(r, c)).cloned().unwrap_or_default()
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        if v.is_zero() {
            self.entries.remove(&(r, c));
        } else {
            self.entries.insert((r, c), v);
        }
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: &Scalar) {
        let cur = self.get(r, c);
        self.set(r, c, cur + v);
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.entries.iter().map(|((r, c), v)| (*r, *c, v))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn transpose(&self) -> Self {
        SparseMatrix {
            rows: self.cols,
            cols: self.rows,
            entries: self.entries.iter().map(|((r, c), v)| ((*c, *r), v.clone())).collect(),
        }
    }

    pub fn row_vectors(&self) -> Vec<SparseVec> {
        let mut out = vec![Vec::new(); self.rows];
        for ((r, c), v) in &self.entries {
            out[*r].push((*c, v.clone()));
        }
        out
    }

    pub fn column_vectors(&self) -> Vec<SparseVec> {
        let mut out = vec![Vec::new(); self.cols];
        for ((r, c), v) in &self.entries {
            out[*c].push((*r, v.clone()));
        }
        out
    }

    pub fn mul(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let rhs_rows = other.row_vectors();
        let mut out = SparseMatrix::zeros(self.rows, other.cols);
        for (r, row) in self.row_vectors().into_iter().enumerate() {
            let mut acc: SparseVec = Vec::new();
            for (k, v) in &row {
                acc = axpy(&acc, v, &rhs_rows[*k]);
            }
            for (c, v) in acc {
                out.entries.insert((r, c), v);
            }
        }
        Ok(out)
    }

    pub fn apply(&self, x: &[(usize, Scalar)]) -> SparseVec {
        let cols = self.column_vectors();
        let mut acc = Vec::new();
        for (j, v) in x {
            acc = axpy(&acc, v, &cols[*j]);
        }
        acc
    }

    pub fn scale(&self, c: &Scalar) -> SparseMatrix {
        let mut out = SparseMatrix::zeros(self.rows, self.cols);
        for ((r, k), v) in &self.entries {
            out.set(*r, *k, v * c);
        }
        out
    }

    pub fn sub(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::Shape("subtraction of differently shaped matrices".into()));
        }
        let mut out = self.clone();
        for ((r, c), v) in &other.entries {
            out.add_to(*r, *c, &-v);
        }
        Ok(out)
    }

    pub fn specialize(&self, q: &num_rational::BigRational) -> Result<SparseMatrix> {
        let mut out = SparseMatrix::zeros(self.rows, self.cols);
        for ((r, c), v) in &self.entries {
            out.set(*r, *c, v.specialize(q)?);
        }
        Ok(out)
    }

    pub fn to_dense_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c).to_string()).collect())
            .collect()
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    rows: usize,
    cols: usize,
    entries: Vec<(usize, usize, Scalar)>,
}

impl Serialize for SparseMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixJson {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries().map(|(r, c, v)| (r, c, v.clone())).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SparseMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let m = MatrixJson::deserialize(d)?;
        SparseMatrix::from_entries(m.rows, m.cols, m.entries).map_err(D::Error::custom)
    }
}

/// Inverse of a square dense matrix by Gauss-Jordan; `None` if singular.
pub fn dense_inverse(m: &[Vec<Scalar>]) -> Option<Vec<Vec<Scalar>>> {
    let n = m.len();
    let mut a: Vec<Vec<Scalar>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }));
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !a[i][c].is_zero())?;
        a.swap(c, p);
        let inv = a[c][c].inv().ok()?;
        for v in a[c].iter_mut() {
            *v = &*v * &inv;
        }
        for i in 0..n {
            if i != c && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for k in 0..2 * n {
                    let t = &f * &a[c][k];
                    a[i][k] -= &t;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

//! Sparse row reduction. Rational matrices are eliminated fraction-free
//! over the integers (each row kept primitive); matrices with rational
//! function entries fall back to ordinary field elimination. Pivots are
//! chosen by smallest leading column, then fewest nonzeros, then the
//! earliest row.

use super::matrix::{axpy, SparseMatrix, SparseVec};
use crate::scalar::Scalar;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

type IntRow = Vec<(usize, BigInt)>;

fn to_primitive_int(row: &SparseVec) -> IntRow {
    let mut lcm = BigInt::one();
    for (_, v) in row {
        lcm = lcm.lcm(v.as_rational().unwrap().denom());
    }
    let ints: IntRow = row
        .iter()
        .map(|(c, v)| {
            let r = v.as_rational().unwrap();
            (*c, r.numer() * (&lcm / r.denom()))
        })
        .collect();
    make_primitive(ints)
}

fn make_primitive(mut row: IntRow) -> IntRow {
    let mut g = BigInt::zero();
    for (_, v) in &row {
        g = g.gcd(v);
        if g.is_one() {
            break;
        }
    }
    if !g.is_zero() && !g.is_one() {
        for (_, v) in row.iter_mut() {
            *v = &*v / &g;
        }
    }
    row
}

/// Removes the leading entry of `r` using `p` (same leading column):
/// `r <- (p0/g) r - (r0/g) p`, then divides out the content.
fn int_eliminate(r: &IntRow, p: &IntRow) -> IntRow {
    let g = r[0].1.gcd(&p[0].1);
    let fr = &p[0].1 / &g;
    let fp = &r[0].1 / &g;
    let mut out = Vec::with_capacity(r.len() + p.len());
    let (mut i, mut j) = (1, 1);
    while i < r.len() || j < p.len() {
        if j == p.len() || (i < r.len() && r[i].0 < p[j].0) {
            out.push((r[i].0, &fr * &r[i].1));
            i += 1;
        } else if i == r.len() || p[j].0 < r[i].0 {
            out.push((p[j].0, -(&fp * &p[j].1)));
            j += 1;
        } else {
            let v = &fr * &r[i].1 - &fp * &p[j].1;
            if !v.is_zero() {
                out.push((r[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    make_primitive(out)
}

fn field_eliminate(r: &SparseVec, p: &SparseVec) -> SparseVec {
    let c = -(&r[0].1 / &p[0].1);
    axpy(r, &c, p)
}

/// Generic bucketed echelon reduction. `elim(r, p)` must cancel the
/// leading entry of `r` against pivot row `p`.
fn echelon_by<R>(
    rows: Vec<R>,
    len: impl Fn(&R) -> usize,
    lead: impl Fn(&R) -> Option<usize>,
    elim: impl Fn(&R, &R) -> R,
) -> Vec<(usize, R)> {
    let mut buckets: BTreeMap<usize, Vec<(usize, R)>> = BTreeMap::new();
    for (id, r) in rows.into_iter().enumerate() {
        if let Some(c) = lead(&r) {
            buckets.entry(c).or_default().push((id, r));
        }
    }
    let mut pivots = Vec::new();
    while let Some((col, mut group)) = buckets.pop_first() {
        let best = (0..group.len())
            .min_by_key(|&i| (len(&group[i].1), group[i].0))
            .unwrap();
        let (_, pivot) = group.swap_remove(best);
        for (id, r) in group {
            let reduced = elim(&r, &pivot);
            if let Some(c) = lead(&reduced) {
                buckets.entry(c).or_default().push((id, reduced));
            }
        }
        pivots.push((col, pivot));
    }
    pivots
}

fn all_rational(rows: &[SparseVec]) -> bool {
    rows.iter().all(|r| r.iter().all(|(_, v)| v.is_rational()))
}

/// Row echelon form: pivot columns in increasing order with their rows,
/// each row normalized to a leading 1.
pub fn echelon(rows: Vec<SparseVec>) -> Vec<(usize, SparseVec)> {
    let rows: Vec<SparseVec> = rows.into_iter().filter(|r| !r.is_empty()).collect();
    if all_rational(&rows) {
        let int_rows: Vec<IntRow> = rows.iter().map(to_primitive_int).collect();
        echelon_by(int_rows, |r| r.len(), |r| r.first().map(|e| e.0), int_eliminate)
            .into_iter()
            .map(|(c, r)| {
                let lead = r[0].1.clone();
                let row = r
                    .into_iter()
                    .map(|(k, v)| (k, Scalar::Rational(BigRational::new(v, lead.clone()))))
                    .collect();
                (c, row)
            })
            .collect()
    } else {
        echelon_by(rows, |r| r.len(), |r| r.first().map(|e| e.0), field_eliminate)
            .into_iter()
            .map(|(c, r)| {
                let inv = r[0].1.inv().expect("pivot is nonzero");
                (c, r.into_iter().map(|(k, v)| (k, &v * &inv)).collect())
            })
            .collect()
    }
}

/// Reduced row echelon form of a list of rows.
#[derive(Clone, Debug)]
pub struct Rref {
    pub cols: usize,
    /// Pivot columns in increasing order.
    pub pivots: Vec<usize>,
    /// Row `i` has a 1 at `pivots[i]` and zeros at every other pivot column.
    pub rows: Vec<SparseVec>,
}

impl Rref {
    pub fn from_rows(cols: usize, rows: Vec<SparseVec>) -> Rref {
        let ech = echelon(rows);
        let pivots: Vec<usize> = ech.iter().map(|(c, _)| *c).collect();
        let pivot_index: BTreeMap<usize, usize> = pivots.iter().enumerate().map(|(i, c)| (*c, i)).collect();
        let mut reduced: Vec<SparseVec> = vec![Vec::new(); ech.len()];
        for (i, (_, row)) in ech.into_iter().enumerate().rev() {
            let mut acc = row.clone();
            for (k, v) in row.iter().skip(1) {
                if let Some(&j) = pivot_index.get(k) {
                    if j > i {
                        acc = axpy(&acc, &-v, &reduced[j]);
                    }
                }
            }
            reduced[i] = acc;
        }
        Rref {
            cols,
            pivots,
            rows: reduced,
        }
    }

    pub fn from_matrix(m: &SparseMatrix) -> Rref {
        Rref::from_rows(m.cols(), m.row_vectors())
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn free_columns(&self) -> Vec<usize> {
        let mut it = self.pivots.iter().peekable();
        (0..self.cols)
            .filter(|c| {
                if it.peek() == Some(&c) {
                    it.next();
                    false
                } else {
                    true
                }
            })
            .collect()
    }

    /// Null space basis: one vector per free column, with a 1 at that
    /// column and zeros at the other free columns.
    pub fn kernel(&self) -> Vec<SparseVec> {
        let free = self.free_columns();
        let free_index: BTreeMap<usize, usize> = free.iter().enumerate().map(|(i, c)| (*c, i)).collect();
        let mut vecs: Vec<Vec<(usize, Scalar)>> = free.iter().map(|f| vec![(*f, Scalar::one())]).collect();
        for (p, row) in self.pivots.iter().zip(&self.rows) {
            for (k, v) in row.iter() {
                if let Some(&fi) = free_index.get(k) {
                    vecs[fi].push((*p, -v));
                }
            }
        }
        for v in vecs.iter_mut() {
            v.sort_by_key(|e| e.0);
        }
        vecs
    }
}

pub fn rank(m: &SparseMatrix) -> usize {
    echelon(m.row_vectors()).len()
}

pub fn kernel_basis(m: &SparseMatrix) -> Vec<SparseVec> {
    Rref::from_matrix(m).kernel()
}

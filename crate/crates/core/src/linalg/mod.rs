//! Exact sparse linear algebra over ℚ and ℚ(q).

mod complex;
mod elim;
mod matrix;

pub use complex::{d_squared_check, CochainComplex, DSquaredReport};
pub use elim::{echelon, kernel_basis, rank, Rref};
pub use matrix::{axpy, collect_sparse, dense_inverse, SparseMatrix, SparseVec};

#[cfg(test)]
mod tests;

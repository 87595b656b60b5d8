//! Exact computations of Gerstenhaber-Schack, bialgebra and Hochschild
//! cohomology for finite-dimensional Hopf algebras and for quantum SL(2)
//! and PSL(2) at generic parameter.

#![allow(clippy::needless_range_loop)]

pub mod cli;
pub mod complexes;
pub mod error;
pub mod hopf;
pub mod linalg;
pub mod lincomb;
pub mod measured;
pub mod scalar;
pub mod yd;

pub use error::{Error, Result};
pub use lincomb::{LinComb, Tensor};
pub use scalar::Scalar;

//! Cochain complexes computing Yetter-Drinfeld cohomology: the explicit
//! four-term complexes for the quantum `SL(2)` and `PSL(2)` families,
//! colinear cochains over finite-dimensional Hopf algebras, Hochschild
//! cochains, and the averaging map relating them.

mod averaging;
mod cochains;
mod gs;
mod resolution;

pub use averaging::{averaging_check, averaging_matrix, AveragingReport};
pub use cochains::{budget, colinearity_equations, index_of, pow, tuple_of, BarDifferential, HomSpace};
pub use gs::{
    classical_hochschild_complex, colinear_space, gs_complex, gs_equals_hochschild_check, hochschild_complex,
    hochschild_homotopy_check, tuple_coaction, ComparisonReport, GsComplex, HomotopyReport,
};
pub use resolution::{
    resolution_complex_psl2, resolution_complex_sl2, ResolutionCheck, ResolutionComplex, ResolutionMaps,
};

use crate::linalg::{d_squared_check, CochainComplex};
use serde::Serialize;

/// Dimensions, ranks and homology of a cochain complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComplexReport {
    pub algebra: String,
    pub coefficients: String,
    pub q: Option<String>,
    pub cochain_dims: Vec<usize>,
    pub ranks: Vec<usize>,
    pub homology: Vec<usize>,
    pub d_squared_zero: bool,
}

impl ComplexReport {
    /// Homology is reported in degrees `0..=top`.
    pub fn from_complex(
        algebra: &str,
        coefficients: &str,
        q: Option<String>,
        c: &CochainComplex,
        top: usize,
    ) -> ComplexReport {
        let ranks = c.ranks();
        let homology = c.homology_from_ranks(&ranks);
        let top = top.min(homology.len() - 1);
        ComplexReport {
            algebra: algebra.into(),
            coefficients: coefficients.into(),
            q,
            cochain_dims: c.dims().to_vec(),
            ranks,
            homology: homology[..=top].to_vec(),
            d_squared_zero: d_squared_check(c).map(|r| r.pass).unwrap_or(false),
        }
    }
}

#[cfg(test)]
mod tests;

//! S-polynomials, multivariate division, weight-truncated Buchberger
//! completion for weighted-homogeneous ideals, and the two explicit element
//! families: the `F_{x_2 x_k^2}` chain of the double-point ideal and the
//! determinant family of the node ideal.
//!
//! Truncation soundness: for a weighted-homogeneous ideal, an S-pair whose
//! lcm weight exceeds the bound `W` can only resolve cancellations in
//! weights `> W`, so discarding it cannot lose leading monomials of weight
//! `<= W`. The dimension oracle in [`crate::dimension`] cross-checks this.

mod buchberger;
mod division;
mod ffamily;
mod gdet;

pub use buchberger::{buchberger_truncated, Basis, BasisCertificate, BasisElementView, InitialIdeal};
pub use division::{reduce, s_polynomial};
pub use ffamily::{f_family, f_family_chain, ndf_witness, DivisibilityCheck, FChainStep, NdfWitness};
pub use gdet::{expected_leading_monomial, g_determinant, index_lists};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroebnerError {
    /// S-polynomials are undefined for the zero polynomial.
    #[error("zero polynomial has no leading term")]
    ZeroPolynomial,
    /// The truncated completion is only sound for weighted-homogeneous input.
    #[error("generator {index} is not weighted homogeneous")]
    NonHomogeneousGenerator { index: usize },
    /// F-family indices start at 2 (`k = 2` is the seed S-polynomial).
    #[error("F-family index must be >= 2 (got {0})")]
    FFamilyIndexTooSmall(u32),
    /// Determinant index lists must be weakly increasing and positive, with
    /// at least two entries.
    #[error("invalid determinant indices: {0}")]
    InvalidDeterminantIndices(String),
}

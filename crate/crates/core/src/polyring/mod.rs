//! Sparse multivariate polynomials over exact rationals in the weighted
//! variable universe `{x_i} ∪ {y_i}` (weight of `x_i` and `y_i` is `i`),
//! with the shift derivation `D(x_i) = x_{i+1}`, `D(y_i) = y_{i+1}` and the
//! weighted lex / revlex monomial orders.
//!
//! The variable ranking is `x_1 > x_2 > ... > y_1 > y_2 > ...`: the x family
//! outranks the y family and smaller indices outrank larger ones. Both
//! orders compare total weight first; lex breaks ties at the first ranked
//! variable with differing exponent (larger exponent wins), revlex at the
//! last ranked variable with differing exponent (smaller exponent wins).
//! Any monomial of weight `<= W` only involves variables of index `<= W`,
//! so the infinite ranking is well-defined under weight truncation.

mod generators;
mod monomial;
mod order;
mod polynomial;

pub use generators::{f_x2, f_xy};
pub use monomial::{Monomial, VarFamily, Variable};
pub use order::MonomialOrder;
pub use polynomial::{Polynomial, PolynomialParseError};

use thiserror::Error;

/// Errors from generator constructors.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    /// Generator families start at weight 2.
    #[error("generator index must be >= 2 (got {0})")]
    GeneratorIndexTooSmall(u32),
}

//! Exact computer algebra for arc spaces of plane-curve singularities and the
//! partition identities attached to them.
//!
//! The crate has three layers that cross-check each other:
//!
//! - [`qseries`]: truncated power series in `q` with exact integer
//!   coefficients, plus constructors for the closed-form generating series
//!   (Rogers-Ramanujan sums, bounded-partition series, the node series).
//! - [`partitions`]: enumeration and counting of the constrained partition
//!   families appearing on both sides of each identity, including two-color
//!   partitions. Enumeration is the trusted oracle; dynamic programming is
//!   the fast path.
//! - [`polyring`], [`groebner`], [`hilbert`], [`dimension`]: sparse
//!   polynomials over exact rationals in the weighted variable universe
//!   `{x_i, y_i}`, the shift derivation, weighted lex/revlex orders,
//!   weight-truncated Buchberger completion, and standard-monomial counting
//!   for the pattern initial ideals.
//!
//! Every identity can therefore be checked on three independent routes:
//! closed-form series coefficient, constrained partition count, and
//! standard-monomial dimension of an initial ideal.

pub mod dimension;
pub mod groebner;
pub mod hilbert;
pub mod partitions;
pub mod polyring;
pub mod qseries;

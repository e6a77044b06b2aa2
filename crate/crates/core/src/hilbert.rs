//! Standard-monomial counting for the pattern monomial ideals, truncated
//! Hilbert-Poincare series, and the colon-ideal recursions that tie the
//! series together.
//!
//! An [`IdealPattern`] is a decidable membership predicate for an infinite
//! family of monomial generators; membership is read off the exponent
//! multiset, never from an explicit generator list. Standard monomials
//! (those outside the ideal) of weight `w` form a basis of the weight-`w`
//! piece of the quotient, so counting them computes Hilbert series
//! coefficients.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::partitions::{self, Family};
use crate::polyring::{Monomial, VarFamily, Variable};
use crate::qseries::QSeries;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HilbertError {
    /// `verify_colon_recursion` only knows the instances whose three
    /// quotients have pattern realizations.
    #[error("no colon recursion instance for pattern `{pattern}` and variable `{variable}`")]
    UnknownColonInstance { pattern: String, variable: String },
}

/// The catalog of pattern monomial ideals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdealPattern {
    /// Generated by all products `x_{i_1} ... x_{i_n}` with `i_j >= l`,
    /// inside `k[x_l, x_{l+1}, ...]`. Standard monomials of weight `w` are
    /// the partitions of `w` with parts `>= l` and at most `n - 1` parts.
    MaxProducts { n: u64, l: u64 },
    /// Generated by all `x_{i_1} ... x_{i_k} x_k` with
    /// `i_1 >= ... >= i_k >= k >= j`, inside `k[x_j, x_{j+1}, ...]`.
    SizeVsSmallest { j: u64 },
    /// Generated by `x_i^2` and `x_i x_{i+1}` for `i >= k`, inside
    /// `k[x_k, x_{k+1}, ...]`.
    Gap2 { k: u64 },
    /// Generated by all `x_{i_1} ... x_{i_k} y_k` with `i_j >= 1`,
    /// `k >= n0`, inside `k[x_i, y_j | i >= 1, j >= n0]`.
    Node { n0: u64 },
}

impl IdealPattern {
    /// Ideal membership, decided from the exponent multiset.
    pub fn contains(&self, m: &Monomial) -> bool {
        match *self {
            IdealPattern::MaxProducts { n, l } => {
                let factors: u64 = m
                    .exponents()
                    .iter()
                    .filter(|(v, _)| v.family() == VarFamily::X && v.weight() >= l)
                    .map(|(_, e)| u64::from(*e))
                    .sum();
                factors >= n
            }
            IdealPattern::SizeVsSmallest { j } => {
                // Some x_k with k >= j present, together with at least k
                // further factors of index >= k.
                m.exponents().iter().any(|(v, _)| {
                    if v.family() != VarFamily::X || v.weight() < j {
                        return false;
                    }
                    let k = v.weight();
                    let at_least_k: u64 = m
                        .exponents()
                        .iter()
                        .filter(|(w, _)| w.family() == VarFamily::X && w.weight() >= k)
                        .map(|(_, e)| u64::from(*e))
                        .sum();
                    at_least_k >= k + 1
                })
            }
            IdealPattern::Gap2 { k } => m.exponents().iter().any(|(v, e)| {
                v.family() == VarFamily::X
                    && v.weight() >= k
                    && (*e >= 2 || m.exponent(Variable::x(v.index() + 1)) >= 1)
            }),
            IdealPattern::Node { n0 } => {
                let x_degree = m.x_degree();
                m.exponents().iter().any(|(v, _)| {
                    v.family() == VarFamily::Y && v.weight() >= n0 && x_degree >= v.weight()
                })
            }
        }
    }

    /// The ambient variables of weight at most `w`.
    pub fn ambient_vars(&self, w: u64) -> Vec<Variable> {
        let x_from = |l: u64| -> Vec<Variable> {
            (l..=w).map(|i| Variable::x(i as u32)).collect()
        };
        match *self {
            IdealPattern::MaxProducts { l, .. } => x_from(l.max(1)),
            IdealPattern::SizeVsSmallest { j } => x_from(j.max(1)),
            IdealPattern::Gap2 { k } => x_from(k.max(1)),
            IdealPattern::Node { n0 } => {
                let mut vars = x_from(1);
                vars.extend((n0.max(1)..=w).map(|i| Variable::y(i as u32)));
                vars
            }
        }
    }

    /// Number of weight-`w` monomials of the ambient ring outside the
    /// ideal.
    ///
    /// The x-only patterns delegate to the audited partition enumerator and
    /// apply the membership predicate monomial by monomial; the node
    /// pattern (whose two-family monomial count grows far faster) uses a
    /// dynamic program over (blue partition size, red minimum).
    pub fn standard_monomial_dim(&self, w: u64) -> BigUint {
        match *self {
            IdealPattern::MaxProducts { l, .. } => self.count_by_enumeration(w, l),
            IdealPattern::SizeVsSmallest { j } => self.count_by_enumeration(w, j),
            IdealPattern::Gap2 { k } => self.count_by_enumeration(w, k),
            IdealPattern::Node { n0 } => node_standard_dim(n0, w),
        }
    }

    fn count_by_enumeration(&self, w: u64, min_part: u64) -> BigUint {
        if min_part > w {
            // Only the empty monomial survives at w = 0.
            return if w == 0 && !self.contains(&Monomial::one()) {
                BigUint::one()
            } else {
                BigUint::zero()
            };
        }
        let ambient = Family::MinPartMaxSize {
            min_part,
            max_size: w as usize,
        };
        let count = partitions::enumerate(w, &ambient)
            .iter()
            .map(partition_monomial)
            .filter(|m| !self.contains(m))
            .count();
        BigUint::from(count)
    }

    /// The truncated Hilbert-Poincare series of the quotient by this
    /// pattern: coefficient at `w` is `standard_monomial_dim(w)`.
    pub fn hp_truncated(&self, order: usize) -> QSeries {
        QSeries::from_coeffs(
            (0..=order as u64)
                .map(|w| self.standard_monomial_dim(w).into())
                .collect(),
        )
    }

    /// Divisibility-minimal generators of the pattern ideal up to weight
    /// `w`, sorted by weight then structurally.
    pub fn minimal_generators_up_to(&self, w: u64) -> Vec<Monomial> {
        let vars = self.ambient_vars(w);
        let mut out = Vec::new();
        for weight in 1..=w {
            for m in crate::dimension::monomials_of_weight(&vars, weight) {
                if !self.contains(&m) {
                    continue;
                }
                let minimal = m.exponents().iter().all(|&(v, _)| {
                    let quotient = m.div(&Monomial::var(v)).unwrap();
                    !self.contains(&quotient)
                });
                if minimal {
                    out.push(m);
                }
            }
        }
        out.sort_by(|a, b| a.weight().cmp(&b.weight()).then_with(|| a.cmp(b)));
        out
    }

    pub fn name(&self) -> String {
        match *self {
            IdealPattern::MaxProducts { n, l } => format!("max-products(n={n},l={l})"),
            IdealPattern::SizeVsSmallest { j } => format!("size-vs-smallest(j={j})"),
            IdealPattern::Gap2 { k } => format!("gap2(k={k})"),
            IdealPattern::Node { n0 } => format!("node(n0={n0})"),
        }
    }
}

fn partition_monomial(p: &crate::partitions::Partition) -> Monomial {
    Monomial::from_exponents(p.parts().iter().map(|&v| (Variable::x(v as u32), 1)))
}

/// Standard monomials of the node pattern at weight `w`: choose the blue
/// (x) part multiset with `b` parts and weight `m`, then a red (y)
/// partition of `w - m` with all parts at least `max(n0, b + 1)`.
fn node_standard_dim(n0: u64, w: u64) -> BigUint {
    let at_most = partitions::at_most_parts_table(w);
    let min_from = partitions::min_part_table(w);
    let mut total = BigUint::zero();
    for m in 0..=w {
        for b in 0..=m {
            // Exactly b blue parts of total weight m.
            let blues = if b == 0 {
                if m == 0 { BigUint::one() } else { BigUint::zero() }
            } else {
                partitions::at_most_parts(&at_most, m - b, b)
            };
            if blues.is_zero() {
                continue;
            }
            let r_min = n0.max(b + 1);
            let u = w - m;
            let reds = if u == 0 {
                BigUint::one()
            } else if r_min > u {
                BigUint::zero()
            } else {
                min_from[r_min as usize][u as usize].clone()
            };
            total += blues * reds;
        }
    }
    total
}

/// The two sides of the colon recursion
/// `HP(R/I) = HP(R/(I + v)) + q^{weight(v)} HP(R/(I : v))` for the three
/// instances whose quotients have pattern realizations:
///
/// - max-products with `v = x_l`: colon gives max-products with `n - 1`,
///   adding `x_l` gives `l + 1`;
/// - size-vs-smallest with `v = x_j`: colon gives max-products `(j, j)`,
///   adding `x_j` gives `j + 1`;
/// - node with `v = y_{n0}`: colon gives the full partition ring (the
///   unrestricted partition series), adding `y_{n0}` gives `n0 + 1`.
pub fn colon_recursion_sides(
    pattern: &IdealPattern,
    v: Variable,
    order: usize,
) -> Result<(QSeries, QSeries), HilbertError> {
    let unknown = || HilbertError::UnknownColonInstance {
        pattern: pattern.name(),
        variable: v.to_string(),
    };
    let (killed, colon): (QSeries, QSeries) = match *pattern {
        IdealPattern::MaxProducts { n, l }
            if n >= 1 && v == Variable::x(l as u32) =>
        {
            (
                IdealPattern::MaxProducts { n, l: l + 1 }.hp_truncated(order),
                IdealPattern::MaxProducts { n: n - 1, l }.hp_truncated(order),
            )
        }
        IdealPattern::SizeVsSmallest { j } if v == Variable::x(j as u32) => (
            IdealPattern::SizeVsSmallest { j: j + 1 }.hp_truncated(order),
            IdealPattern::MaxProducts { n: j, l: j }.hp_truncated(order),
        ),
        IdealPattern::Node { n0 } if v == Variable::y(n0 as u32) => (
            IdealPattern::Node { n0: n0 + 1 }.hp_truncated(order),
            QSeries::partition_gf(order),
        ),
        _ => return Err(unknown()),
    };
    let lhs = pattern.hp_truncated(order);
    let rhs = &killed + &colon.shift(v.weight() as usize);
    Ok((lhs, rhs))
}

/// Checks the colon recursion coefficientwise to the truncation order.
pub fn verify_colon_recursion(
    pattern: &IdealPattern,
    v: Variable,
    order: usize,
) -> Result<bool, HilbertError> {
    let (lhs, rhs) = colon_recursion_sides(pattern, v, order)?;
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{count_gap2, count_minpart_maxsize, count_size_le_smallest, count_2c_right};

    #[test]
    fn standard_dim_examples() {
        // Partitions of 6 with size <= smallest part: {6}, {4,2}, {3,3}.
        assert_eq!(
            IdealPattern::SizeVsSmallest { j: 1 }.standard_monomial_dim(6),
            BigUint::from(3u32)
        );
        // Weight 2 in the node ring: x_2, x_1^2, y_2, y_1^2 survive.
        assert_eq!(
            IdealPattern::Node { n0: 1 }.standard_monomial_dim(2),
            BigUint::from(4u32)
        );
        for pattern in [
            IdealPattern::MaxProducts { n: 3, l: 2 },
            IdealPattern::SizeVsSmallest { j: 2 },
            IdealPattern::Gap2 { k: 1 },
            IdealPattern::Node { n0: 3 },
        ] {
            assert_eq!(pattern.standard_monomial_dim(0), BigUint::one(), "{}", pattern.name());
        }
    }

    #[test]
    fn pattern_dims_match_partition_counts() {
        for w in 0..=30u64 {
            assert_eq!(
                IdealPattern::SizeVsSmallest { j: 1 }.standard_monomial_dim(w),
                count_size_le_smallest(w, 1),
                "pattern (b) at {w}"
            );
            for k in 1..=3 {
                assert_eq!(
                    IdealPattern::Gap2 { k }.standard_monomial_dim(w),
                    count_gap2(w, k),
                    "pattern (c) at {w}, k={k}"
                );
            }
            assert_eq!(
                IdealPattern::Node { n0: 1 }.standard_monomial_dim(w),
                count_2c_right(w, 1),
                "pattern (d) at {w}"
            );
            for (n, l) in [(2u64, 1u64), (3, 2), (4, 3)] {
                assert_eq!(
                    IdealPattern::MaxProducts { n, l }.standard_monomial_dim(w),
                    count_minpart_maxsize(w, l, (n - 1) as usize),
                    "pattern (a) at {w}, n={n}, l={l}"
                );
            }
        }
    }

    #[test]
    fn hp_matches_closed_form_series() {
        let order = 25;
        assert_eq!(
            IdealPattern::MaxProducts { n: 4, l: 2 }.hp_truncated(order),
            QSeries::h_n_l(4, 2, order).unwrap()
        );
        assert_eq!(
            IdealPattern::SizeVsSmallest { j: 1 }.hp_truncated(order),
            QSeries::h_k(1, order).unwrap()
        );
        assert_eq!(
            IdealPattern::Node { n0: 1 }.hp_truncated(order),
            QSeries::node(order)
        );
        // Closed form of H_n^1: 1/((1-q)...(1-q^{n-1})).
        let mut prod = QSeries::one(order);
        for i in 1..=4usize {
            prod = &prod * &QSeries::inv_one_minus(i, order).unwrap();
        }
        assert_eq!(
            IdealPattern::MaxProducts { n: 5, l: 1 }.hp_truncated(order),
            prod
        );
    }

    #[test]
    fn minimal_generators_of_gap2_slice() {
        let gens = IdealPattern::Gap2 { k: 1 }.minimal_generators_up_to(9);
        let shown: Vec<String> = gens.iter().map(|m| m.to_string()).collect();
        assert_eq!(
            shown,
            vec!["x1^2", "x1*x2", "x2^2", "x2*x3", "x3^2", "x3*x4", "x4^2", "x4*x5"]
        );
    }

    #[test]
    fn minimal_generators_of_node_slice() {
        let gens = IdealPattern::Node { n0: 1 }.minimal_generators_up_to(4);
        let shown: Vec<String> = gens.iter().map(|m| m.to_string()).collect();
        assert_eq!(shown, vec!["x1*y1", "x2*y1", "x1^2*y2", "x3*y1"]);
    }

    #[test]
    fn colon_recursions_hold() {
        let order = 30;
        assert!(verify_colon_recursion(
            &IdealPattern::MaxProducts { n: 3, l: 2 },
            Variable::x(2),
            order
        )
        .unwrap());
        assert!(verify_colon_recursion(
            &IdealPattern::SizeVsSmallest { j: 2 },
            Variable::x(2),
            order
        )
        .unwrap());
        assert!(verify_colon_recursion(&IdealPattern::Node { n0: 1 }, Variable::y(1), order)
            .unwrap());
    }

    #[test]
    fn colon_recursion_negative_control_and_unknown_instance() {
        // Shifting the colon piece by one extra power of q must break the
        // identity.
        let order = 20;
        let pattern = IdealPattern::Node { n0: 1 };
        let lhs = pattern.hp_truncated(order);
        let wrong = &IdealPattern::Node { n0: 2 }.hp_truncated(order)
            + &QSeries::partition_gf(order).shift(2);
        assert_ne!(lhs, wrong);

        assert!(matches!(
            verify_colon_recursion(&pattern, Variable::y(3), order),
            Err(HilbertError::UnknownColonInstance { .. })
        ));
        assert!(matches!(
            verify_colon_recursion(&IdealPattern::Gap2 { k: 1 }, Variable::x(1), order),
            Err(HilbertError::UnknownColonInstance { .. })
        ));
    }
}

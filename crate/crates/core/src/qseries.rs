//! Truncated formal power series in one variable `q` with exact integer
//! coefficients.
//!
//! A [`QSeries`] stores the coefficients of `q^0 .. q^N` where `N` is the
//! truncation order (inclusive). All arithmetic truncates to the minimum
//! order of the operands, and the truncation order is always an explicit
//! argument of the constructors: there is no implicit default.
//!
//! The named constructors build the generating series used throughout the
//! crate: the partition generating function, the bounded-partition series
//! `H_n^l`, the gap-2 series `H_k`, the node series, and the `(A, B)`
//! cofactor pair of the `H_k` two-term recursion.

use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Errors from the series constructors.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum QSeriesError {
    /// A parameter that must be at least 1 was 0.
    #[error("parameter `{name}` must be >= 1 (got {value})")]
    NonPositiveParameter { name: &'static str, value: usize },
    /// Malformed JSON payload for a series.
    #[error("invalid series payload: {0}")]
    InvalidPayload(String),
}

/// A power series in `q` truncated at order `N` (inclusive), with exact
/// integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QSeries {
    /// Coefficients of `q^0 .. q^order`; always `order + 1` entries.
    coeffs: Vec<BigInt>,
    order: usize,
}

impl QSeries {
    /// The zero series at the given truncation order.
    pub fn zero(order: usize) -> Self {
        QSeries {
            coeffs: vec![BigInt::zero(); order + 1],
            order,
        }
    }

    /// The constant series 1.
    pub fn one(order: usize) -> Self {
        Self::monomial(BigInt::one(), 0, order)
    }

    /// The series `c * q^exp`, zero if `exp` exceeds the truncation order.
    pub fn monomial(c: BigInt, exp: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if exp <= order {
            s.coeffs[exp] = c;
        }
        s
    }

    /// Builds a series from explicit coefficients of `q^0 .. q^len-1`.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the q^0 coefficient");
        let order = coeffs.len() - 1;
        QSeries { coeffs, order }
    }

    /// Truncation order `N` (inclusive).
    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficient of `q^n`. Panics if `n` exceeds the truncation order.
    pub fn coeff(&self, n: usize) -> &BigInt {
        assert!(
            n <= self.order,
            "coefficient {n} requested beyond truncation order {}",
            self.order
        );
        &self.coeffs[n]
    }

    /// All stored coefficients, `q^0` first.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Restricts the series to a lower truncation order.
    pub fn truncate(&self, order: usize) -> QSeries {
        let order = order.min(self.order);
        QSeries {
            coeffs: self.coeffs[..=order].to_vec(),
            order,
        }
    }

    /// Multiplies by `q^exp` (shifting coefficients up), keeping the order.
    pub fn shift(&self, exp: usize) -> QSeries {
        let mut out = Self::zero(self.order);
        for n in exp..=self.order {
            out.coeffs[n] = self.coeffs[n - exp].clone();
        }
        out
    }

    /// The series `1/(1 - q^j)` truncated at `order`: coefficient 1 at every
    /// multiple of `j`, 0 elsewhere. Rejects `j = 0`.
    pub fn inv_one_minus(j: usize, order: usize) -> Result<QSeries, QSeriesError> {
        if j == 0 {
            return Err(QSeriesError::NonPositiveParameter { name: "j", value: j });
        }
        let mut s = Self::zero(order);
        let mut n = 0;
        while n <= order {
            s.coeffs[n] = BigInt::one();
            n += j;
        }
        Ok(s)
    }

    /// The partition generating function `prod_{i>=1} 1/(1 - q^i)` truncated
    /// at `order`. Factors with `i > order` do not affect coefficients
    /// `<= order`, so the product stops there.
    pub fn partition_gf(order: usize) -> QSeries {
        let mut s = Self::one(order);
        for i in 1..=order {
            s = s.mul_inv_one_minus(i);
        }
        s
    }

    /// The bounded-partition series
    /// `H_n^l = 1 + q^l/(1-q) + ... + q^{(n-1)l}/((1-q)...(1-q^{n-1}))`:
    /// generating series of partitions with parts `>= l` and at most `n - 1`
    /// parts. Rejects `n = 0` and `l = 0`.
    pub fn h_n_l(n: usize, l: usize, order: usize) -> Result<QSeries, QSeriesError> {
        if n == 0 {
            return Err(QSeriesError::NonPositiveParameter { name: "n", value: n });
        }
        if l == 0 {
            return Err(QSeriesError::NonPositiveParameter { name: "l", value: l });
        }
        let mut sum = Self::one(order);
        // Running term q^{ml} / ((1-q)...(1-q^m)).
        let mut term = Self::one(order);
        for m in 1..n {
            if m * l > order {
                break;
            }
            term = term.shift(l).mul_inv_one_minus(m);
            sum = &sum + &term;
        }
        Ok(sum)
    }

    /// The gap-2 series
    /// `H_k = 1 + sum_{n>=1} q^{n(n+k-1)} / ((1-q)...(1-q^n))`:
    /// generating series of partitions with parts `>= k` and no equal or
    /// consecutive parts. The sum terminates once `n(n+k-1)` exceeds the
    /// truncation order. Rejects `k = 0`.
    pub fn h_k(k: usize, order: usize) -> Result<QSeries, QSeriesError> {
        if k == 0 {
            return Err(QSeriesError::NonPositiveParameter { name: "k", value: k });
        }
        let mut sum = Self::one(order);
        // Running factor 1 / ((1-q)...(1-q^n)), shifted by q^{n(n+k-1)}.
        let mut denom = Self::one(order);
        let mut n = 1;
        while n * (n + k - 1) <= order {
            denom = denom.mul_inv_one_minus(n);
            sum = &sum + &denom.shift(n * (n + k - 1));
            n += 1;
        }
        Ok(sum)
    }

    /// The node series `1/(1-q) * prod_{i>=1} 1/(1-q^i)`: coefficient at `n`
    /// is the cumulative partition count `p(0) + ... + p(n)`.
    pub fn node(order: usize) -> QSeries {
        Self::partition_gf(order).mul_inv_one_minus(1)
    }

    /// The cofactor pair `(A_{k+i}, B_{k+i+1})` of the recursion
    /// `H_k = A_{k+i} H_{k+i} + B_{k+i+1} H_{k+i+1}`, computed from the
    /// initial conditions `A_{k+1} = 1`, `B_{k+2} = q^k` by
    /// `A_{k+i} = A_{k+i-1} + B_{k+i}` and `B_{k+i+1} = q^{k+i-1} A_{k+i-1}`.
    /// Rejects `k = 0` and `i = 0`.
    pub fn ab_pair(k: usize, i: usize, order: usize) -> Result<(QSeries, QSeries), QSeriesError> {
        if k == 0 {
            return Err(QSeriesError::NonPositiveParameter { name: "k", value: k });
        }
        if i == 0 {
            return Err(QSeriesError::NonPositiveParameter { name: "i", value: i });
        }
        let mut a = Self::one(order);
        let mut b = Self::monomial(BigInt::one(), k, order);
        for depth in 2..=i {
            let next_a = &a + &b;
            let next_b = a.shift(k + depth - 1);
            a = next_a;
            b = next_b;
        }
        Ok((a, b))
    }

    /// Multiplies by `1/(1 - q^j)` in place-ish: running prefix sums with
    /// stride `j`. Cheaper than a full Cauchy product against the geometric
    /// series.
    fn mul_inv_one_minus(&self, j: usize) -> QSeries {
        assert!(j >= 1);
        let mut out = self.clone();
        for n in j..=self.order {
            let prev = out.coeffs[n - j].clone();
            out.coeffs[n] += prev;
        }
        out
    }
}

impl Add for &QSeries {
    type Output = QSeries;

    fn add(self, rhs: &QSeries) -> QSeries {
        let order = self.order.min(rhs.order);
        let mut out = QSeries::zero(order);
        for n in 0..=order {
            out.coeffs[n] = &self.coeffs[n] + &rhs.coeffs[n];
        }
        out
    }
}

impl Mul for &QSeries {
    type Output = QSeries;

    fn mul(self, rhs: &QSeries) -> QSeries {
        let order = self.order.min(rhs.order);
        let mut out = QSeries::zero(order);
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=order - i {
                if rhs.coeffs[j].is_zero() {
                    continue;
                }
                let prod = &self.coeffs[i] * &rhs.coeffs[j];
                out.coeffs[i + j] += prod;
            }
        }
        out
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                first = false;
            } else {
                write!(f, " + ")?;
            }
            match n {
                0 => write!(f, "{c}")?,
                1 if c.is_one() => write!(f, "q")?,
                1 => write!(f, "{c}*q")?,
                _ if c.is_one() => write!(f, "q^{n}")?,
                _ => write!(f, "{c}*q^{n}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order + 1)
    }
}

// Wire format: {"order": N, "coeffs": ["c0", ..., "cN"]} with coefficients
// as decimal strings so arbitrary-precision values survive JSON.
#[derive(Serialize, Deserialize)]
struct QSeriesWire {
    order: usize,
    coeffs: Vec<String>,
}

impl Serialize for QSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        QSeriesWire {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c.to_string()).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for QSeries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let wire = QSeriesWire::deserialize(deserializer)?;
        if wire.coeffs.len() != wire.order + 1 {
            return Err(D::Error::custom(format!(
                "expected {} coefficients, got {}",
                wire.order + 1,
                wire.coeffs.len()
            )));
        }
        let coeffs = wire
            .coeffs
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(D::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(QSeries {
            coeffs,
            order: wire.order,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coeffs_u64(s: &QSeries) -> Vec<u64> {
        s.coeffs().iter().map(|c| u64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn add_is_coefficientwise_and_truncates_to_min_order() {
        let a = QSeries::from_coeffs(vec![1.into(), 1.into()]);
        let b = QSeries::from_coeffs(vec![1.into(), 1.into(), 1.into()]);
        assert_eq!(coeffs_u64(&(&a + &a)), vec![2, 2]);
        assert_eq!(&a + &QSeries::zero(1), a);
        let c = &a + &b;
        assert_eq!(c.order(), 1);
        assert_eq!(coeffs_u64(&c), vec![2, 2]);
    }

    #[test]
    fn mul_is_truncated_cauchy_product() {
        let one_plus_q = QSeries::from_coeffs(vec![1.into(), 1.into(), 0.into()]);
        let one_minus_q = QSeries::from_coeffs(vec![1.into(), (-1).into(), 0.into()]);
        let p = &one_plus_q * &one_minus_q;
        assert_eq!(p.coeffs(), &[1.into(), 0.into(), (-1).into()]);
        assert_eq!(&one_plus_q * &QSeries::one(2), one_plus_q);
    }

    #[test]
    fn mul_matches_brute_force_convolution() {
        // geometric(1)^2 at order 3: independent convolution oracle.
        let g = QSeries::inv_one_minus(1, 3).unwrap();
        let mut expect = [BigInt::zero(), BigInt::zero(), BigInt::zero(), BigInt::zero()];
        for i in 0..=3usize {
            for j in 0..=3 - i {
                expect[i + j] += g.coeff(i) * g.coeff(j);
            }
        }
        assert_eq!((&g * &g).coeffs(), &expect);
        assert_eq!(coeffs_u64(&(&g * &g)), vec![1, 2, 3, 4]);
    }

    #[test]
    fn inv_one_minus_examples() {
        assert_eq!(coeffs_u64(&QSeries::inv_one_minus(1, 3).unwrap()), vec![1, 1, 1, 1]);
        assert_eq!(coeffs_u64(&QSeries::inv_one_minus(2, 4).unwrap()), vec![1, 0, 1, 0, 1]);
        assert_eq!(coeffs_u64(&QSeries::inv_one_minus(3, 2).unwrap()), vec![1, 0, 0]);
        assert!(matches!(
            QSeries::inv_one_minus(0, 5),
            Err(QSeriesError::NonPositiveParameter { name: "j", .. })
        ));
    }

    #[test]
    fn partition_gf_counts_partitions() {
        let gf = QSeries::partition_gf(10);
        assert_eq!(gf.coeff(0), &BigInt::one());
        // 4 -> {4},{3,1},{2,2},{2,1,1},{1,1,1,1}
        assert_eq!(gf.coeff(4), &BigInt::from(5));
        assert_eq!(gf.coeff(10), &BigInt::from(42));
        assert_eq!(
            coeffs_u64(&gf),
            vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
        );
    }

    #[test]
    fn h_n_l_examples() {
        // n = 1: the constant series 1 for every l.
        for l in 1..5 {
            assert_eq!(QSeries::h_n_l(1, l, 8).unwrap(), QSeries::one(8));
        }
        // n = 2, l = 1: 1/(1-q).
        assert_eq!(
            QSeries::h_n_l(2, 1, 8).unwrap(),
            QSeries::inv_one_minus(1, 8).unwrap()
        );
        // n = 3, l = 2, coefficient at 4: {4}, {2+2}.
        assert_eq!(QSeries::h_n_l(3, 2, 8).unwrap().coeff(4), &BigInt::from(2));
        assert!(QSeries::h_n_l(0, 1, 4).is_err());
        assert!(QSeries::h_n_l(2, 0, 4).is_err());
    }

    #[test]
    fn h_k_examples() {
        // k = 1: the Rogers-Ramanujan sum with exponents n^2.
        let h1 = QSeries::h_k(1, 6).unwrap();
        assert_eq!(coeffs_u64(&h1), vec![1, 1, 1, 1, 2, 2, 3]);
        // k = 2, coefficient at 2: only {2}.
        assert_eq!(QSeries::h_k(2, 4).unwrap().coeff(2), &BigInt::one());
        assert!(QSeries::h_k(0, 4).is_err());
    }

    #[test]
    fn node_series_is_cumulative_partition_count() {
        let node = QSeries::node(12);
        let gf = QSeries::partition_gf(12);
        let mut running = BigInt::zero();
        for n in 0..=12 {
            running += gf.coeff(n);
            assert_eq!(node.coeff(n), &running, "cumulative count at {n}");
        }
        assert_eq!(node.coeff(0), &BigInt::one());
        assert_eq!(node.coeff(2), &BigInt::from(4));
        assert_eq!(node.coeff(5), &BigInt::from(19));
    }

    #[test]
    fn ab_pair_initial_conditions_and_unfolding() {
        let (a1, b1) = QSeries::ab_pair(3, 1, 10).unwrap();
        assert_eq!(a1, QSeries::one(10));
        assert_eq!(b1, QSeries::monomial(BigInt::one(), 3, 10));

        // i = 2, k = 1: A_3 = 1 + q, B_4 = q^2.
        let (a2, b2) = QSeries::ab_pair(1, 2, 10).unwrap();
        assert_eq!(coeffs_u64(&a2)[..3], [1, 1, 0]);
        assert_eq!(b2, QSeries::monomial(BigInt::one(), 2, 10));

        assert!(QSeries::ab_pair(1, 0, 4).is_err());
    }

    #[test]
    fn ab_pair_has_nonnegative_coefficients() {
        for k in 1..4usize {
            for i in 1..7usize {
                let (a, b) = QSeries::ab_pair(k, i, 30).unwrap();
                assert!(a.coeffs().iter().all(|c| c >= &BigInt::zero()));
                assert!(b.coeffs().iter().all(|c| c >= &BigInt::zero()));
            }
        }
    }

    #[test]
    fn h_recursion_in_n_and_l() {
        // H_n^l = q^l H_{n-1}^l + H_n^{l+1}, coefficientwise at order 30.
        let order = 30;
        for n in 2..6usize {
            for l in 1..5usize {
                let lhs = QSeries::h_n_l(n, l, order).unwrap();
                let rhs = &QSeries::h_n_l(n - 1, l, order).unwrap().shift(l)
                    + &QSeries::h_n_l(n, l + 1, order).unwrap();
                assert_eq!(lhs, rhs, "H recursion failed at n={n}, l={l}");
            }
        }
    }

    #[test]
    fn h_k_two_term_recursion() {
        // H_k = H_{k+1} + q^k H_{k+2}.
        let order = 40;
        for k in 1..6usize {
            let lhs = QSeries::h_k(k, order).unwrap();
            let rhs = &QSeries::h_k(k + 1, order).unwrap()
                + &QSeries::h_k(k + 2, order).unwrap().shift(k);
            assert_eq!(lhs, rhs, "two-term recursion failed at k={k}");
        }
    }

    #[test]
    fn h_k_cofactor_recursion() {
        // H_k = A_{k+i} H_{k+i} + B_{k+i+1} H_{k+i+1}.
        let order = 40;
        for k in 1..4usize {
            for i in 1..6usize {
                let (a, b) = QSeries::ab_pair(k, i, order).unwrap();
                let lhs = QSeries::h_k(k, order).unwrap();
                let rhs = &(&a * &QSeries::h_k(k + i, order).unwrap())
                    + &(&b * &QSeries::h_k(k + i + 1, order).unwrap());
                assert_eq!(lhs, rhs, "cofactor recursion failed at k={k}, i={i}");
            }
        }
    }

    #[test]
    fn constructors_agree_across_truncation_orders() {
        // Computing at order N then restricting to N' equals computing at N'.
        let full = QSeries::h_k(2, 50).unwrap();
        assert_eq!(full.truncate(20), QSeries::h_k(2, 20).unwrap());
        let full = QSeries::partition_gf(50);
        assert_eq!(full.truncate(33), QSeries::partition_gf(33));
        let full = QSeries::node(50);
        assert_eq!(full.truncate(7), QSeries::node(7));
        let full = QSeries::h_n_l(4, 3, 50).unwrap();
        assert_eq!(full.truncate(11), QSeries::h_n_l(4, 3, 11).unwrap());
    }

    #[test]
    fn json_round_trip_uses_decimal_strings() {
        let s = QSeries::partition_gf(6);
        let json = serde_json::to_value(&s).unwrap();
        assert_eq!(json["order"], 6);
        assert_eq!(json["coeffs"][4], "5");
        let back: QSeries = serde_json::from_value(json).unwrap();
        assert_eq!(back, s);

        let bad: Result<QSeries, _> =
            serde_json::from_str(r#"{"order": 2, "coeffs": ["1"]}"#);
        assert!(bad.is_err());
    }

    #[test]
    fn display_is_readable() {
        let s = QSeries::h_k(1, 4).unwrap();
        assert_eq!(s.to_string(), "1 + q + q^2 + q^3 + 2*q^4 + O(q^5)");
    }
}

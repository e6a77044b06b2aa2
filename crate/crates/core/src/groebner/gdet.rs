//! The determinant elements of the node ideal.
//!
//! For `1 <= i_1 <= ... <= i_k`, `k >= 2`, the element is the k x k
//! determinant whose row `r` is
//! `(x_{i_r + r + 1 - k}, x_{i_r + r + 2 - k}, ..., x_{i_r + r - 1}, f_{i_r + r})`,
//! where `f_n` is the node generator and an `x` entry with subscript `<= 0`
//! is the scalar 0. Expanding along the last column shows these lie in the
//! node ideal. Their leading monomial under weighted revlex is
//! `x_{i_1} x_{i_2} ... x_{i_k} y_k`.

use super::GroebnerError;
use crate::polyring::{f_xy, Monomial, Polynomial, Variable};

/// Builds the determinant element for a weakly increasing index list.
pub fn g_determinant(indices: &[u32]) -> Result<Polynomial, GroebnerError> {
    let k = indices.len();
    if k < 2 {
        return Err(GroebnerError::InvalidDeterminantIndices(format!(
            "need at least 2 indices, got {k}"
        )));
    }
    if indices[0] < 1 {
        return Err(GroebnerError::InvalidDeterminantIndices(
            "indices must be >= 1".into(),
        ));
    }
    if indices.windows(2).any(|w| w[0] > w[1]) {
        return Err(GroebnerError::InvalidDeterminantIndices(format!(
            "indices must be weakly increasing: {indices:?}"
        )));
    }

    let mut matrix: Vec<Vec<Polynomial>> = Vec::with_capacity(k);
    for (r0, &i_r) in indices.iter().enumerate() {
        let r = r0 as i64 + 1;
        let mut row = Vec::with_capacity(k);
        for c in 1..=(k as i64 - 1) {
            let sub = i_r as i64 + r + c - k as i64;
            row.push(if sub >= 1 {
                Polynomial::var(Variable::x(sub as u32))
            } else {
                Polynomial::zero()
            });
        }
        row.push(f_xy(i_r + r as u32).expect("index >= 2"));
        matrix.push(row);
    }
    Ok(determinant(&matrix))
}

/// The leading monomial the family is built to have:
/// `x_{i_1} ... x_{i_k} y_k`.
pub fn expected_leading_monomial(indices: &[u32]) -> Monomial {
    let k = indices.len() as u32;
    Monomial::from_exponents(
        indices
            .iter()
            .map(|&i| (Variable::x(i), 1))
            .chain(std::iter::once((Variable::y(k), 1))),
    )
}

/// All weakly increasing positive index lists of length `k` with sum at
/// most `max_sum` (so the corresponding determinant elements have weight at
/// most `max_sum + k`).
pub fn index_lists(k: usize, max_sum: u64) -> Vec<Vec<u32>> {
    fn build(k: usize, min: u32, budget: u64, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k == 0 {
            out.push(cur.clone());
            return;
        }
        let mut v = min;
        while u64::from(v) * k as u64 <= budget {
            cur.push(v);
            build(k - 1, v, budget - u64::from(v), cur, out);
            cur.pop();
            v += 1;
        }
    }
    let mut out = Vec::new();
    build(k, 1, max_sum, &mut Vec::new(), &mut out);
    out
}

/// Cofactor expansion along the first row.
fn determinant(m: &[Vec<Polynomial>]) -> Polynomial {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut det = Polynomial::zero();
    for (c, entry) in m[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<Vec<Polynomial>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(j, _)| *j != c)
                    .map(|(_, e)| e.clone())
                    .collect()
            })
            .collect();
        let cofactor = entry * &determinant(&minor);
        det = if c % 2 == 0 { &det + &cofactor } else { &det - &cofactor };
    }
    det
}

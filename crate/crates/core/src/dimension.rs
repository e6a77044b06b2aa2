//! Rank-based dimensions of graded ideal pieces, by exact Gaussian
//! elimination over the rationals.
//!
//! For a homogeneous ideal `I = (g_1, ..., g_r)` the weight-`w` piece is
//! spanned by the products `m * g_i` with `weight(m * g_i) = w`; its
//! dimension is the rank of the coefficient matrix of those products. This
//! is the independent oracle against which the truncated Groebner machinery
//! is checked: it never looks at leading terms.

use num_rational::BigRational;
use num_traits::Zero;

use crate::polyring::{Monomial, Polynomial, Variable};

/// All monomials of total weight exactly `w` over the given variables, in a
/// deterministic order.
pub fn monomials_of_weight(vars: &[Variable], w: u64) -> Vec<Monomial> {
    fn build(
        vars: &[Variable],
        pos: usize,
        remaining: u64,
        stack: &mut Vec<(Variable, u32)>,
        out: &mut Vec<Monomial>,
    ) {
        if remaining == 0 {
            out.push(Monomial::from_exponents(stack.iter().copied()));
            return;
        }
        if pos == vars.len() {
            return;
        }
        let v = vars[pos];
        let max_e = remaining / v.weight();
        for e in 0..=max_e {
            if e > 0 {
                stack.push((v, e as u32));
            }
            build(vars, pos + 1, remaining - e * v.weight(), stack, out);
            if e > 0 {
                stack.pop();
            }
        }
    }
    let mut out = Vec::new();
    build(vars, 0, w, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// The variable set `x_1..x_{up_to}`.
pub fn x_variables(up_to: u64) -> Vec<Variable> {
    (1..=up_to as u32).map(Variable::x).collect()
}

/// The variable set `x_1..x_{up_to}, y_1..y_{up_to}` of the node ring.
pub fn xy_variables(up_to: u64) -> Vec<Variable> {
    let mut vars = x_variables(up_to);
    vars.extend((1..=up_to as u32).map(Variable::y));
    vars
}

/// Row-reduces in place; returns the rank.
fn row_reduce(rows: &mut Vec<Vec<BigRational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].recip();
        for c in col..cols {
            let scaled = &rows[rank][c] * &inv;
            rows[rank][c] = scaled;
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in col..cols {
                    let sub = &rows[rank][c] * &factor;
                    rows[r][c] -= sub;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    rank
}

fn product_rows(
    gens: &[Polynomial],
    vars: &[Variable],
    w: u64,
    columns: &[Monomial],
) -> Vec<Vec<BigRational>> {
    let col_index: std::collections::HashMap<&Monomial, usize> =
        columns.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut rows = Vec::new();
    for g in gens {
        let Some(gw) = g.homogeneous_weight() else {
            continue;
        };
        if gw > w {
            continue;
        }
        for m in monomials_of_weight(vars, w - gw) {
            let prod = g.mul_term(&m, &BigRational::from_integer(1.into()));
            let mut row = vec![BigRational::zero(); columns.len()];
            for (mon, c) in prod.terms() {
                let idx = *col_index
                    .get(mon)
                    .expect("product monomial outside the ambient variable set");
                row[idx] = c.clone();
            }
            rows.push(row);
        }
    }
    rows
}

/// Dimension of the weight-`w` piece of the ideal generated by `gens`
/// inside the polynomial ring on `vars`.
pub fn ideal_graded_dim(gens: &[Polynomial], vars: &[Variable], w: u64) -> usize {
    let columns = monomials_of_weight(vars, w);
    let mut rows = product_rows(gens, vars, w, &columns);
    row_reduce(&mut rows)
}

/// Dimension of the weight-`w` piece of the quotient ring.
pub fn quotient_graded_dim(gens: &[Polynomial], vars: &[Variable], w: u64) -> usize {
    monomials_of_weight(vars, w).len() - ideal_graded_dim(gens, vars, w)
}

/// A row-reduced basis of the weight-`w` piece of the ideal, as
/// polynomials. Every weight-`w` ideal element is a rational combination of
/// these.
pub fn ideal_graded_basis(gens: &[Polynomial], vars: &[Variable], w: u64) -> Vec<Polynomial> {
    let columns = monomials_of_weight(vars, w);
    let mut rows = product_rows(gens, vars, w, &columns);
    row_reduce(&mut rows);
    rows.into_iter()
        .map(|row| {
            Polynomial::from_terms(
                row.into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(i, c)| (columns[i].clone(), c)),
            )
        })
        .collect()
}

/// Number of weight-`w` monomials over `vars` not divisible by any of the
/// given monomial generators.
pub fn standard_monomial_count(generators: &[Monomial], vars: &[Variable], w: u64) -> usize {
    monomials_of_weight(vars, w)
        .iter()
        .filter(|m| !generators.iter().any(|g| g.divides(m)))
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::f_x2;

    #[test]
    fn monomial_enumeration_counts_partitions() {
        // Monomials of weight w in x_1..x_w correspond to partitions of w.
        let expect = [1usize, 1, 2, 3, 5, 7, 11, 15, 22, 30];
        for (w, &e) in expect.iter().enumerate() {
            let vars = x_variables(w as u64);
            assert_eq!(monomials_of_weight(&vars, w as u64).len(), e, "at {w}");
        }
        // Mixed ring at weight 2: x_2, x_1^2, x_1 y_1, y_2, y_1^2.
        assert_eq!(monomials_of_weight(&xy_variables(2), 2).len(), 5);
    }

    #[test]
    fn rank_of_simple_systems() {
        let one = BigRational::from_integer(1.into());
        let two = BigRational::from_integer(2.into());
        let four = BigRational::from_integer(4.into());
        let mut rows = vec![vec![one.clone(), two.clone()], vec![two.clone(), four]];
        assert_eq!(row_reduce(&mut rows), 1);
        let mut rows = vec![
            vec![one.clone(), BigRational::zero()],
            vec![BigRational::zero(), one],
        ];
        assert_eq!(row_reduce(&mut rows), 2);
    }

    #[test]
    fn double_point_graded_dims_match_gap2_counts() {
        // dim of the quotient by [x_1^2] at weight w equals the number of
        // partitions of w with no equal or consecutive parts.
        let gens: Vec<Polynomial> = (2..=8).map(|n| f_x2(n).unwrap()).collect();
        let vars = x_variables(8);
        for w in 0..=8u64 {
            let dim = quotient_graded_dim(&gens, &vars, w);
            let expect = crate::partitions::count_gap2(w, 1);
            assert_eq!(num_bigint::BigUint::from(dim), expect, "at weight {w}");
        }
    }

    #[test]
    fn graded_basis_spans_the_piece() {
        let gens: Vec<Polynomial> = (2..=6).map(|n| f_x2(n).unwrap()).collect();
        let vars = x_variables(6);
        let basis6 = ideal_graded_basis(&gens, &vars, 6);
        assert_eq!(basis6.len(), ideal_graded_dim(&gens, &vars, 6));
        for b in &basis6 {
            assert_eq!(b.homogeneous_weight(), Some(6));
        }
    }

    #[test]
    fn standard_monomials_of_explicit_initial_ideal() {
        // Against (x_1^2, x_1 x_2) at weight 3, only x_3 and x_2 x_1...:
        // weight-3 monomials are x_3, x_1 x_2, x_1^3; the last two are
        // divisible, leaving x_3.
        let gens = vec![
            Monomial::from_exponents([(Variable::x(1), 2)]),
            Monomial::from_exponents([(Variable::x(1), 1), (Variable::x(2), 1)]),
        ];
        let vars = x_variables(3);
        assert_eq!(standard_monomial_count(&gens, &vars, 3), 1);
    }
}

//! S-polynomials and multivariate division.


use super::GroebnerError;
use crate::polyring::{MonomialOrder, Polynomial};

/// The cancellation combination
/// `S(f, g) = (x^γ / LT(f)) f - (x^γ / LT(g)) g` with `x^γ` the lcm of the
/// leading monomials. Weighted homogeneous whenever `f` and `g` are, of
/// weight equal to the lcm weight. Rejects zero inputs.
pub fn s_polynomial(
    f: &Polynomial,
    g: &Polynomial,
    ord: MonomialOrder,
) -> Result<Polynomial, GroebnerError> {
    let (lm_f, lc_f) = f.leading_term(ord).ok_or(GroebnerError::ZeroPolynomial)?;
    let (lm_g, lc_g) = g.leading_term(ord).ok_or(GroebnerError::ZeroPolynomial)?;
    let lcm = lm_f.lcm(lm_g);
    let mf = lcm.div(lm_f).expect("lcm divisible by lm(f)");
    let mg = lcm.div(lm_g).expect("lcm divisible by lm(g)");
    let left = f.mul_term(&mf, &lc_f.recip());
    let right = g.mul_term(&mg, &lc_g.recip());
    Ok(&left - &right)
}

/// Normal form of `f` against `basis`: repeatedly cancels the current
/// leading term by the earliest basis element (in list order) whose leading
/// monomial divides it, and moves irreducible leading terms to the
/// remainder (full tail reduction). The remainder has no monomial divisible
/// by any basis leading monomial, and `f - remainder` lies in the ideal
/// generated by the basis. Deterministic given the basis order.
pub fn reduce(f: &Polynomial, basis: &[Polynomial], ord: MonomialOrder) -> Polynomial {
    let lms: Vec<_> = basis
        .iter()
        .map(|g| {
            g.leading_term(ord)
                .map(|(m, c)| (m.clone(), c.clone()))
                .expect("basis elements must be nonzero")
        })
        .collect();
    let mut rest = f.clone();
    let mut remainder = Polynomial::zero();
    while let Some((lm, lc)) = rest.leading_term(ord) {
        let lm = lm.clone();
        let lc = lc.clone();
        match lms.iter().position(|(m, _)| m.divides(&lm)) {
            Some(i) => {
                let quot = lm.div(&lms[i].0).unwrap();
                let scale = &lc / &lms[i].1;
                rest = &rest - &basis[i].mul_term(&quot, &scale);
            }
            None => {
                remainder = &remainder + &Polynomial::term(lm.clone(), lc.clone());
                rest = &rest - &Polynomial::term(lm, lc);
            }
        }
    }
    remainder
}

//! The two differential-ideal generator families: iterated derivatives of
//! `x_1^2` (double point) and of `x_1 y_1` (node), in closed binomial form.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::monomial::{Monomial, Variable};
use super::polynomial::Polynomial;
use super::PolyError;

/// `f_n = D^{n-2}(x_1^2) = sum_{i=0}^{n-2} C(n-2, i) x_{1+i} x_{n-1-i}`,
/// weighted homogeneous of weight `n`. Rejects `n < 2`.
pub fn f_x2(n: u32) -> Result<Polynomial, PolyError> {
    binomial_pair(n, Variable::x)
}

/// `D^{n-2}(x_1 y_1) = sum_{i=0}^{n-2} C(n-2, i) x_{1+i} y_{n-1-i}`,
/// weighted homogeneous of weight `n`. Rejects `n < 2`.
pub fn f_xy(n: u32) -> Result<Polynomial, PolyError> {
    binomial_pair(n, Variable::y)
}

fn binomial_pair(n: u32, second: fn(u32) -> Variable) -> Result<Polynomial, PolyError> {
    if n < 2 {
        return Err(PolyError::GeneratorIndexTooSmall(n));
    }
    let mut terms = Vec::new();
    let mut binom = BigInt::from(1);
    for i in 0..=n - 2 {
        let m = Monomial::from_exponents([(Variable::x(1 + i), 1), (second(n - 1 - i), 1)]);
        terms.push((m, BigRational::from(binom.clone())));
        // C(n-2, i+1) from C(n-2, i).
        binom = binom * BigInt::from(n - 2 - i) / BigInt::from(i + 1);
    }
    Ok(Polynomial::from_terms(terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::MonomialOrder;

    #[test]
    fn f_x2_small_cases() {
        assert_eq!(f_x2(2).unwrap().to_string(), "x1^2");
        assert_eq!(f_x2(3).unwrap().to_string(), "2*x1*x2");
        assert_eq!(f_x2(4).unwrap().to_string(), "2*x1*x3 + 2*x2^2");
        assert_eq!(f_x2(5).unwrap().to_string(), "2*x1*x4 + 6*x2*x3");
        assert!(f_x2(1).is_err());
    }

    #[test]
    fn f_xy_small_cases() {
        assert_eq!(f_xy(2).unwrap().to_string(), "x1*y1");
        assert_eq!(f_xy(3).unwrap(), "x2*y1 + x1*y2".parse().unwrap());
        assert_eq!(f_xy(4).unwrap(), "x3*y1 + 2*x2*y2 + x1*y3".parse().unwrap());
        assert!(f_xy(0).is_err());
    }

    #[test]
    fn closed_form_equals_iterated_derivative() {
        let mut dx = f_x2(2).unwrap();
        let mut dy = f_xy(2).unwrap();
        for n in 2..=40u32 {
            assert_eq!(f_x2(n).unwrap(), dx, "f_x2 mismatch at n={n}");
            assert_eq!(f_xy(n).unwrap(), dy, "f_xy mismatch at n={n}");
            dx = dx.derivative();
            dy = dy.derivative();
        }
    }

    #[test]
    fn leading_monomials_match_the_families() {
        for n in 2..=12u32 {
            let lm = f_x2(n)
                .unwrap()
                .leading_monomial(MonomialOrder::WeightedLex)
                .unwrap()
                .clone();
            let expect = Monomial::from_exponents([(Variable::x(1), 1), (Variable::x(n - 1), 1)]);
            assert_eq!(lm, expect, "LT(f_{n}) under wlex");

            let lm = f_xy(n)
                .unwrap()
                .leading_monomial(MonomialOrder::WeightedRevlex)
                .unwrap()
                .clone();
            let expect = Monomial::from_exponents([(Variable::x(n - 1), 1), (Variable::y(1), 1)]);
            assert_eq!(lm, expect, "LT of node generator {n} under wrevlex");
        }
    }

    #[test]
    fn generators_are_weighted_homogeneous() {
        for n in 2..=20u32 {
            assert_eq!(f_x2(n).unwrap().homogeneous_weight(), Some(u64::from(n)));
            assert_eq!(f_xy(n).unwrap().homogeneous_weight(), Some(u64::from(n)));
            assert_eq!(f_x2(n).unwrap().degree(), 2);
        }
    }
}

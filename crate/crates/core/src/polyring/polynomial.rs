//! Sparse polynomials with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use super::monomial::{Monomial, Variable};
use super::order::MonomialOrder;

/// A sparse polynomial: monomial -> nonzero rational coefficient.
///
/// Terms are stored in the structural monomial order, which makes iteration
/// deterministic but is unrelated to the mathematical monomial orders; use
/// [`Polynomial::leading_term`] with an explicit order for those.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigRational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        Polynomial { terms }
    }

    pub fn var(v: Variable) -> Self {
        Polynomial::term(Monomial::var(v), BigRational::one())
    }

    pub fn term(m: Monomial, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigRational)>>(iter: I) -> Self {
        let mut p = Polynomial::zero();
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(acc) => {
                *acc += c;
                if acc.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&BigRational> {
        self.terms.get(m)
    }

    /// The order-maximal term, or `None` for the zero polynomial.
    pub fn leading_term(&self, ord: MonomialOrder) -> Option<(&Monomial, &BigRational)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| ord.compare(a, b))
    }

    pub fn leading_monomial(&self, ord: MonomialOrder) -> Option<&Monomial> {
        self.leading_term(ord).map(|(m, _)| m)
    }

    /// Scales so the leading coefficient under `ord` becomes 1. Returns the
    /// zero polynomial unchanged.
    pub fn monic(&self, ord: MonomialOrder) -> Polynomial {
        match self.leading_term(ord) {
            None => Polynomial::zero(),
            Some((_, lc)) => {
                let inv = lc.recip();
                self.scale(&inv)
            }
        }
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k * c))
                .collect(),
        }
    }

    /// Multiplies by a single term `c * m`.
    pub fn mul_term(&self, m: &Monomial, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.mul(m), v * c))
                .collect(),
        }
    }

    /// Common weight of all monomials if the polynomial is weighted
    /// homogeneous; `None` for the zero polynomial or mixed weights.
    pub fn homogeneous_weight(&self) -> Option<u64> {
        let mut it = self.terms.keys();
        let w = it.next()?.weight();
        it.all(|m| m.weight() == w).then_some(w)
    }

    pub fn is_weighted_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_weight().is_some()
    }

    /// Maximal usual degree over the terms; 0 for the zero polynomial.
    pub fn degree(&self) -> u64 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// The Leibniz extension of the variable shift `x_i -> x_{i+1}`,
    /// `y_i -> y_{i+1}`. Raises the weight of every weighted-homogeneous
    /// polynomial by exactly 1 and preserves the usual degree.
    pub fn derivative(&self) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            for &(v, e) in m.exponents() {
                let mut pairs: Vec<(Variable, u32)> = m
                    .exponents()
                    .iter()
                    .copied()
                    .map(|(w, k)| if w == v { (w, k - 1) } else { (w, k) })
                    .collect();
                pairs.push((v.shifted(), 1));
                let shifted = Monomial::from_exponents(pairs);
                out.add_term(shifted, c * BigRational::from(BigInt::from(e)));
            }
        }
        out
    }

    /// `n`-th iterated derivative.
    pub fn derivative_n(&self, n: u32) -> Polynomial {
        let mut p = self.clone();
        for _ in 0..n {
            p = p.derivative();
        }
        p
    }

    /// Terms sorted descending under `ord`; used for rendering and
    /// certificates.
    pub fn terms_desc(&self, ord: MonomialOrder) -> Vec<(&Monomial, &BigRational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| ord.compare(b, a));
        v
    }

    /// Renders with terms descending under `ord`.
    pub fn render(&self, ord: MonomialOrder) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms_desc(ord).into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&m.to_string());
            } else {
                out.push_str(&format!("{abs}*{m}"));
            }
        }
        out
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    /// Default rendering uses weighted lex descending.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(MonomialOrder::WeightedLex))
    }
}

/// Parse error for the polynomial text grammar
/// `coeff '*' var ('^' exp)? ('*' var ('^' exp)?)*` joined by `+`/`-`.
#[derive(Debug, Error, PartialEq, Eq)]
#[error("invalid polynomial at byte {position}: {message}")]
pub struct PolynomialParseError {
    pub position: usize,
    pub message: String,
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T, PolynomialParseError> {
        Err(PolynomialParseError {
            position: self.pos,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn integer(&mut self) -> Result<BigInt, PolynomialParseError> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("expected a digit");
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(text.parse().unwrap())
    }

    fn index_u32(&mut self) -> Result<u32, PolynomialParseError> {
        let n = self.integer()?;
        u32::try_from(&n).map_or_else(|_| self.err("index out of range"), Ok)
    }

    fn variable(&mut self) -> Result<Variable, PolynomialParseError> {
        let fam = match self.peek() {
            Some(b'x') => VarFamilyTag::X,
            Some(b'y') => VarFamilyTag::Y,
            _ => return self.err("expected a variable (x<i> or y<i>)"),
        };
        self.pos += 1;
        let index = self.index_u32()?;
        if index == 0 {
            return self.err("variable indices start at 1");
        }
        Ok(match fam {
            VarFamilyTag::X => Variable::x(index),
            VarFamilyTag::Y => Variable::y(index),
        })
    }

    /// One term: optional coefficient, then `*`-joined variable powers.
    fn term(&mut self) -> Result<(Monomial, BigRational), PolynomialParseError> {
        self.skip_ws();
        let mut coeff = BigRational::one();
        let mut saw_coeff = false;
        if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            let numer = self.integer()?;
            let denom = if self.peek() == Some(b'/') {
                self.pos += 1;
                self.integer()?
            } else {
                BigInt::one()
            };
            if denom.is_zero() {
                return self.err("zero denominator");
            }
            coeff = BigRational::new(numer, denom);
            saw_coeff = true;
        }
        let mut pairs = Vec::new();
        loop {
            self.skip_ws();
            if saw_coeff || !pairs.is_empty() {
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                    self.skip_ws();
                } else {
                    break;
                }
            }
            let v = self.variable()?;
            let e = if self.peek() == Some(b'^') {
                self.pos += 1;
                self.index_u32()?
            } else {
                1
            };
            pairs.push((v, e));
        }
        if !saw_coeff && pairs.is_empty() {
            return self.err("expected a term");
        }
        Ok((Monomial::from_exponents(pairs), coeff))
    }

    fn polynomial(&mut self) -> Result<Polynomial, PolynomialParseError> {
        let mut p = Polynomial::zero();
        self.skip_ws();
        let mut negate = false;
        if self.peek() == Some(b'-') {
            negate = true;
            self.pos += 1;
        } else if self.peek() == Some(b'+') {
            self.pos += 1;
        }
        loop {
            let (m, c) = self.term()?;
            p.add_term(m, if negate { -c } else { c });
            self.skip_ws();
            match self.peek() {
                None => return Ok(p),
                Some(b'+') => negate = false,
                Some(b'-') => negate = true,
                Some(_) => return self.err("expected '+', '-' or end of input"),
            }
            self.pos += 1;
        }
    }
}

enum VarFamilyTag {
    X,
    Y,
}

impl FromStr for Polynomial {
    type Err = PolynomialParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parser = Parser { src: s.as_bytes(), pos: 0 };
        parser.skip_ws();
        if parser.peek() == Some(b'0') && s.trim() == "0" {
            return Ok(Polynomial::zero());
        }
        parser.polynomial()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn parse_render_round_trip() {
        let f = p("7/3*x2*x4^2 + 7/2*x3^2*x4");
        assert_eq!(f.num_terms(), 2);
        assert_eq!(f.render(MonomialOrder::WeightedLex), "7/3*x2*x4^2 + 7/2*x3^2*x4");
        let g = p("x2^2*x4 - 3*x2*x3^2");
        assert_eq!(g.to_string(), "x2^2*x4 - 3*x2*x3^2");
        assert_eq!(p(&g.to_string()), g);
        assert_eq!(p("-x1 + x1"), Polynomial::zero());
        assert_eq!(p("0"), Polynomial::zero());
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert!("x0".parse::<Polynomial>().is_err());
        assert!("3//2*x1".parse::<Polynomial>().is_err());
        assert!("x1 & x2".parse::<Polynomial>().is_err());
    }

    #[test]
    fn arithmetic_keeps_terms_reduced() {
        let a = p("x1*x3 + x2^2");
        let b = p("x1*x3 - x2^2");
        assert_eq!(&a - &a, Polynomial::zero());
        let s = &a + &b;
        assert_eq!(s, p("2*x1*x3"));
        let prod = &a * &b;
        assert_eq!(prod, p("x1^2*x3^2 - x2^4"));
    }

    #[test]
    fn leading_term_depends_on_order() {
        // f_4 = 2 x_1 x_3 + 2 x_2^2.
        let f4 = p("2*x1*x3 + 2*x2^2");
        let lex = f4.leading_term(MonomialOrder::WeightedLex).unwrap();
        assert_eq!(lex.0.to_string(), "x1*x3");
        assert_eq!(lex.1, &BigRational::from(BigInt::from(2)));
        let revlex = f4.leading_term(MonomialOrder::WeightedRevlex).unwrap();
        assert_eq!(revlex.0.to_string(), "x2^2");
        assert!(Polynomial::zero().leading_term(MonomialOrder::WeightedLex).is_none());

        let single = p("5*x3^4");
        assert_eq!(
            single.leading_term(MonomialOrder::WeightedLex).unwrap().0.to_string(),
            "x3^4"
        );
    }

    #[test]
    fn monic_normalizes_leading_coefficient() {
        let g = p("5*x2*x3^2").monic(MonomialOrder::WeightedLex);
        assert_eq!(g, p("x2*x3^2"));
        let h = p("-2*x2^3 + 4*x1*x2*x3");
        let m = h.monic(MonomialOrder::WeightedLex);
        assert_eq!(
            m.leading_term(MonomialOrder::WeightedLex).unwrap().1,
            &BigRational::one()
        );
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(p("x1^2").derivative(), p("2*x1*x2"));
        assert_eq!(p("3").derivative(), Polynomial::zero());
        assert_eq!(p("x1*y1").derivative(), p("x2*y1 + x1*y2"));
        // D(x_2 x_3^2) = x_3^3 + 2 x_2 x_3 x_4.
        assert_eq!(p("x2*x3^2").derivative(), p("x3^3 + 2*x2*x3*x4"));
    }

    #[test]
    fn derivative_raises_weight_preserves_degree() {
        let f = p("x2*x3^2 + 2*x4^2").derivative();
        assert!(!f.is_weighted_homogeneous() || f.homogeneous_weight() == Some(9));
        let g = p("x2*x3^2");
        for n in 0..5 {
            let d = g.derivative_n(n);
            assert_eq!(d.homogeneous_weight(), Some(8 + u64::from(n)));
            assert_eq!(d.degree(), 3);
        }
    }

    #[test]
    fn homogeneity_flags() {
        assert!(p("x1*x3 + x2^2").is_weighted_homogeneous());
        assert!(!p("x1 + x2").is_weighted_homogeneous());
        assert!(Polynomial::zero().is_weighted_homogeneous());
    }
}

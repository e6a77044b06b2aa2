//! The two weighted monomial orders.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::monomial::Monomial;

/// A total monomial order: weight compared first, ties broken along the
/// variable ranking `x_1 > x_2 > ... > y_1 > y_2 > ...`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonomialOrder {
    /// Tie-break at the first ranked variable with differing exponent; the
    /// larger exponent wins.
    #[serde(rename = "wlex")]
    WeightedLex,
    /// Tie-break at the last ranked variable with differing exponent; the
    /// smaller exponent wins.
    #[serde(rename = "wrevlex")]
    WeightedRevlex,
}

impl MonomialOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match a.weight().cmp(&b.weight()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        match self {
            MonomialOrder::WeightedLex => lex_tiebreak(a, b),
            MonomialOrder::WeightedRevlex => revlex_tiebreak(a, b),
        }
    }

    /// The order-maximum of two monomials, by reference.
    pub fn max<'a>(&self, a: &'a Monomial, b: &'a Monomial) -> &'a Monomial {
        if self.compare(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            MonomialOrder::WeightedLex => "wlex",
            MonomialOrder::WeightedRevlex => "wrevlex",
        }
    }
}

impl std::fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Walk the ranking from the top (`x_1` onward); at the first variable where
/// the exponents differ, the larger exponent wins. A variable missing from
/// one side counts as exponent 0 there.
fn lex_tiebreak(a: &Monomial, b: &Monomial) -> Ordering {
    let ea = a.exponents();
    let eb = b.exponents();
    let (mut i, mut j) = (0, 0);
    loop {
        match (ea.get(i), eb.get(j)) {
            (None, None) => return Ordering::Equal,
            (Some(_), None) => return Ordering::Greater,
            (None, Some(_)) => return Ordering::Less,
            (Some(&(va, xa)), Some(&(vb, xb))) => match va.cmp(&vb) {
                // va is higher-ranked: a has positive exponent where b has 0.
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
                Ordering::Equal => {
                    if xa != xb {
                        return xa.cmp(&xb);
                    }
                    i += 1;
                    j += 1;
                }
            },
        }
    }
}

/// Walk the ranking from the bottom (largest canonical variable first); at
/// the first variable where the exponents differ, the smaller exponent wins.
fn revlex_tiebreak(a: &Monomial, b: &Monomial) -> Ordering {
    let ea = a.exponents();
    let eb = b.exponents();
    let (mut i, mut j) = (ea.len(), eb.len());
    loop {
        match (i.checked_sub(1), j.checked_sub(1)) {
            (None, None) => return Ordering::Equal,
            // a still has a lower-ranked variable with positive exponent.
            (Some(_), None) => return Ordering::Less,
            (None, Some(_)) => return Ordering::Greater,
            (Some(pi), Some(pj)) => {
                let (va, xa) = ea[pi];
                let (vb, xb) = eb[pj];
                match va.cmp(&vb) {
                    // va is lower-ranked than vb: the last differing
                    // variable is va, where a has the larger exponent.
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Equal => {
                        if xa != xb {
                            return xb.cmp(&xa);
                        }
                        i = pi;
                        j = pj;
                    }
                }
            }
        }
    }
}

//! Variables and sparse monomials.

use std::fmt;

/// The two variable families of the node ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VarFamily {
    X,
    Y,
}

/// A ring variable `x_i` or `y_i` with `i >= 1`; its weight is `i`.
///
/// The derived `Ord` is the variable ranking read top-down:
/// `x_1 < x_2 < ... < y_1 < y_2 < ...`, i.e. canonically smaller means
/// higher-ranked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Variable {
    family: VarFamily,
    index: u32,
}

impl Variable {
    pub fn x(index: u32) -> Self {
        assert!(index >= 1, "variable indices start at 1");
        Variable { family: VarFamily::X, index }
    }

    pub fn y(index: u32) -> Self {
        assert!(index >= 1, "variable indices start at 1");
        Variable { family: VarFamily::Y, index }
    }

    pub fn family(&self) -> VarFamily {
        self.family
    }

    pub fn index(&self) -> u32 {
        self.index
    }

    pub fn weight(&self) -> u64 {
        u64::from(self.index)
    }

    /// The image under the derivation: `x_i -> x_{i+1}`, `y_i -> y_{i+1}`.
    pub fn shifted(&self) -> Variable {
        Variable {
            family: self.family,
            index: self.index + 1,
        }
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.family {
            VarFamily::X => 'x',
            VarFamily::Y => 'y',
        };
        write!(f, "{c}{}", self.index)
    }
}

/// A monomial as a sparse exponent mapping; zero exponents are never stored.
///
/// The derived `Ord`/`Hash` over the sorted exponent vector is a structural
/// order used for canonical term storage and deterministic iteration. The
/// mathematical monomial orders live in [`super::MonomialOrder`].
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    /// Sorted by `Variable`; exponents are `>= 1`.
    exps: Vec<(Variable, u32)>,
}

impl Monomial {
    /// The monomial 1.
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: Variable) -> Self {
        Monomial { exps: vec![(v, 1)] }
    }

    /// Builds a monomial from (variable, exponent) pairs in any order;
    /// repeated variables accumulate and zero exponents drop out.
    pub fn from_exponents<I: IntoIterator<Item = (Variable, u32)>>(pairs: I) -> Self {
        let mut exps: Vec<(Variable, u32)> = Vec::new();
        for (v, e) in pairs {
            if e == 0 {
                continue;
            }
            match exps.iter_mut().find(|(w, _)| *w == v) {
                Some((_, acc)) => *acc += e,
                None => exps.push((v, e)),
            }
        }
        exps.sort_by_key(|&(v, _)| v);
        Monomial { exps }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    /// Exponent pairs sorted along the ranking (`x_1` first).
    pub fn exponents(&self) -> &[(Variable, u32)] {
        &self.exps
    }

    pub fn exponent(&self, v: Variable) -> u32 {
        self.exps
            .iter()
            .find(|(w, _)| *w == v)
            .map_or(0, |&(_, e)| e)
    }

    /// Total weight: sum of index times exponent.
    pub fn weight(&self) -> u64 {
        self.exps
            .iter()
            .map(|(v, e)| v.weight() * u64::from(*e))
            .sum()
    }

    /// Usual degree: sum of exponents.
    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|(_, e)| u64::from(*e)).sum()
    }

    /// Total exponent over the X family.
    pub fn x_degree(&self) -> u64 {
        self.exps
            .iter()
            .filter(|(v, _)| v.family() == VarFamily::X)
            .map(|(_, e)| u64::from(*e))
            .sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            let (va, ea) = self.exps[i];
            let (vb, eb) = other.exps[j];
            if va == vb {
                exps.push((va, ea + eb));
                i += 1;
                j += 1;
            } else if va < vb {
                exps.push((va, ea));
                i += 1;
            } else {
                exps.push((vb, eb));
                j += 1;
            }
        }
        exps.extend_from_slice(&self.exps[i..]);
        exps.extend_from_slice(&other.exps[j..]);
        Monomial { exps }
    }

    /// Exact division: `self / other` if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut exps = Vec::with_capacity(self.exps.len());
        let mut j = 0;
        for &(v, e) in &self.exps {
            let mut rem = e;
            if j < other.exps.len() && other.exps[j].0 == v {
                if other.exps[j].1 > e {
                    return None;
                }
                rem = e - other.exps[j].1;
                j += 1;
            }
            if rem > 0 {
                exps.push((v, rem));
            }
        }
        if j < other.exps.len() {
            return None; // other has a variable self lacks
        }
        Some(Monomial { exps })
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        other.div(self).is_some()
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut exps = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            let (va, ea) = self.exps[i];
            let (vb, eb) = other.exps[j];
            if va == vb {
                exps.push((va, ea.max(eb)));
                i += 1;
                j += 1;
            } else if va < vb {
                exps.push((va, ea));
                i += 1;
            } else {
                exps.push((vb, eb));
                j += 1;
            }
        }
        exps.extend_from_slice(&self.exps[i..]);
        exps.extend_from_slice(&other.exps[j..]);
        Monomial { exps }
    }

    /// True when the two monomials share no variable.
    pub fn is_coprime_with(&self, other: &Monomial) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            match self.exps[i].0.cmp(&other.exps[j].0) {
                std::cmp::Ordering::Equal => return false,
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
            }
        }
        true
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (i, (v, e)) in self.exps.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

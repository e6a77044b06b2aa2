//! Weight-truncated Buchberger completion.


use serde::Serialize;

use super::division::{reduce, s_polynomial};
use super::GroebnerError;
use crate::polyring::{Monomial, MonomialOrder, Polynomial};

/// A weight-truncated Groebner basis: monic weighted-homogeneous elements of
/// weight `<= weight_bound` whose leading monomials are pairwise
/// non-divisible and generate every leading monomial of an ideal element of
/// weight `<= weight_bound`.
#[derive(Debug, Clone)]
pub struct Basis {
    elements: Vec<Polynomial>,
    order: MonomialOrder,
    weight_bound: u64,
}

impl Basis {
    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn weight_bound(&self) -> u64 {
        self.weight_bound
    }

    /// Normal form against this basis.
    pub fn reduce(&self, f: &Polynomial) -> Polynomial {
        reduce(f, &self.elements, self.order)
    }

    /// The minimal monomial generators of the leading-term ideal up to the
    /// weight bound.
    pub fn initial_ideal(&self) -> InitialIdeal {
        let lms: Vec<Monomial> = self
            .elements
            .iter()
            .map(|g| g.leading_monomial(self.order).unwrap().clone())
            .collect();
        InitialIdeal {
            generators: minimalize(lms, self.order),
            order: self.order,
            weight_bound: self.weight_bound,
        }
    }
}

/// Minimal generating monomials of an initial ideal up to a weight bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InitialIdeal {
    generators: Vec<Monomial>,
    order: MonomialOrder,
    weight_bound: u64,
}

impl InitialIdeal {
    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn weight_bound(&self) -> u64 {
        self.weight_bound
    }

    /// Ideal membership: divisibility by some generator.
    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }
}

/// Drops monomials divisible by another in the list and sorts the survivors
/// by (weight, order).
fn minimalize(mut monomials: Vec<Monomial>, ord: MonomialOrder) -> Vec<Monomial> {
    monomials.sort_by(|a, b| {
        a.weight()
            .cmp(&b.weight())
            .then_with(|| ord.compare(a, b))
    });
    monomials.dedup();
    let mut kept: Vec<Monomial> = Vec::new();
    for m in monomials {
        if !kept.iter().any(|g| g.divides(&m)) {
            kept.push(m);
        }
    }
    kept
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Completes `gens` to a weight-truncated Groebner basis under `ord`.
///
/// All generators must be weighted homogeneous; generators of weight above
/// the bound are dropped (they cannot contribute leading monomials of
/// weight `<= weight_bound`), as are S-pairs whose lcm weight exceeds it.
/// The caller is responsible for supplying every required derivative of
/// weight `<= weight_bound` when the target is a differential ideal.
///
/// Pair selection is the normal strategy: smallest lcm weight first, ties by
/// the monomial order on the lcm, then by pair index. The returned basis is
/// reduced (monic, tails in normal form) and sorted by (weight, order) of
/// the leading monomials.
pub fn buchberger_truncated(
    gens: &[Polynomial],
    ord: MonomialOrder,
    weight_bound: u64,
) -> Result<Basis, GroebnerError> {
    for (index, g) in gens.iter().enumerate() {
        if !g.is_weighted_homogeneous() {
            return Err(GroebnerError::NonHomogeneousGenerator { index });
        }
    }

    let mut basis: Vec<Polynomial> = Vec::new();
    let mut lms: Vec<Monomial> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let insert = |p: Polynomial,
                      basis: &mut Vec<Polynomial>,
                      lms: &mut Vec<Monomial>,
                      pairs: &mut Vec<Pair>| {
        let lm = p.leading_monomial(ord).unwrap().clone();
        let t = basis.len();
        for (i, other) in lms.iter().enumerate() {
            let lcm = other.lcm(&lm);
            if lcm.weight() <= weight_bound {
                pairs.push(Pair { i, j: t, lcm });
            }
        }
        basis.push(p);
        lms.push(lm);
    };

    for g in gens {
        if g.is_zero() || g.homogeneous_weight().unwrap() > weight_bound {
            continue;
        }
        let r = reduce(g, &basis, ord);
        if !r.is_zero() {
            insert(r.monic(ord), &mut basis, &mut lms, &mut pairs);
        }
    }

    while !pairs.is_empty() {
        // Normal selection: (lcm weight, lcm under ord, i, j) minimal.
        let best = pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.lcm
                    .weight()
                    .cmp(&b.lcm.weight())
                    .then_with(|| ord.compare(&a.lcm, &b.lcm))
                    .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
            })
            .map(|(idx, _)| idx)
            .unwrap();
        let pair = pairs.swap_remove(best);

        // Buchberger's first criterion: coprime leading monomials reduce to
        // zero automatically.
        if lms[pair.i].is_coprime_with(&lms[pair.j]) {
            continue;
        }
        let s = s_polynomial(&basis[pair.i], &basis[pair.j], ord).unwrap();
        let r = reduce(&s, &basis, ord);
        if !r.is_zero() {
            insert(r.monic(ord), &mut basis, &mut lms, &mut pairs);
        }
    }

    Ok(finalize(basis, ord, weight_bound))
}

/// Inter-reduces the completed set: keeps only elements with
/// divisibility-minimal leading monomials, tail-reduces each against the
/// others until stable, and sorts.
fn finalize(elements: Vec<Polynomial>, ord: MonomialOrder, weight_bound: u64) -> Basis {
    let mut tagged: Vec<(Monomial, Polynomial)> = elements
        .into_iter()
        .map(|p| (p.leading_monomial(ord).unwrap().clone(), p))
        .collect();
    tagged.sort_by(|(a, _), (b, _)| {
        a.weight()
            .cmp(&b.weight())
            .then_with(|| ord.compare(a, b))
    });

    let mut kept: Vec<(Monomial, Polynomial)> = Vec::new();
    for (lm, p) in tagged {
        if !kept.iter().any(|(g, _)| g.divides(&lm)) {
            kept.push((lm, p));
        }
    }

    loop {
        let mut changed = false;
        for i in 0..kept.len() {
            let others: Vec<Polynomial> = kept
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, (_, p))| p.clone())
                .collect();
            let reduced = reduce(&kept[i].1, &others, ord).monic(ord);
            if reduced != kept[i].1 {
                debug_assert_eq!(reduced.leading_monomial(ord), Some(&kept[i].0));
                kept[i].1 = reduced;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }

    Basis {
        elements: kept.into_iter().map(|(_, p)| p).collect(),
        order: ord,
        weight_bound,
    }
}

/// Serializable view of a basis for certificates.
#[derive(Debug, Serialize)]
pub struct BasisCertificate {
    pub order: String,
    pub weight_bound: u64,
    pub elements: Vec<BasisElementView>,
}

#[derive(Debug, Serialize)]
pub struct BasisElementView {
    pub weight: u64,
    pub leading_monomial: String,
    pub polynomial: String,
}

impl Basis {
    pub fn certificate(&self) -> BasisCertificate {
        BasisCertificate {
            order: self.order.name().to_string(),
            weight_bound: self.weight_bound,
            elements: self
                .elements
                .iter()
                .map(|p| BasisElementView {
                    weight: p.homogeneous_weight().unwrap_or(0),
                    leading_monomial: p.leading_monomial(self.order).unwrap().to_string(),
                    polynomial: p.render(self.order),
                })
                .collect(),
        }
    }
}

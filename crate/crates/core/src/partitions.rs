//! Enumeration and counting of constrained integer partitions, including
//! two-color partitions.
//!
//! Enumeration by bounded recursive descent is the trusted oracle; the
//! `count_*` functions are independent dynamic-programming fast paths good
//! for weights up to a few thousand. Tests cross-check the two against each
//! other and against the series coefficients from [`crate::qseries`].

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

/// An integer partition: weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    /// Builds a partition, asserting the parts are weakly decreasing and
    /// positive.
    pub fn new(parts: Vec<u64>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]) && parts.iter().all(|&p| p >= 1),
            "parts must be weakly decreasing and positive"
        );
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn weight(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn size(&self) -> usize {
        self.parts.len()
    }

    /// The smallest (last) part, if any.
    pub fn smallest(&self) -> Option<u64> {
        self.parts.last().copied()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// Part color for two-color partitions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Color {
    #[serde(rename = "b")]
    Blue,
    #[serde(rename = "r")]
    Red,
}

/// One colored part.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ColoredPart {
    #[serde(rename = "v")]
    pub value: u64,
    #[serde(rename = "c")]
    pub color: Color,
}

impl ColoredPart {
    /// Rank used for the canonical ordering: larger values first, blue
    /// before red at equal value.
    fn rank(&self) -> (u64, u8) {
        (self.value, if self.color == Color::Blue { 1 } else { 0 })
    }
}

/// A two-color partition in canonical form: parts sorted by value
/// descending, blue before red at equal value, so each multiset of colored
/// parts has exactly one representative.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ColoredPartition {
    parts: Vec<ColoredPart>,
}

impl ColoredPartition {
    /// Builds a colored partition, sorting the parts into canonical form.
    pub fn new(mut parts: Vec<ColoredPart>) -> Self {
        parts.sort_by(|a, b| b.rank().cmp(&a.rank()));
        ColoredPartition { parts }
    }

    pub fn parts(&self) -> &[ColoredPart] {
        &self.parts
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|p| p.value).sum()
    }

    pub fn blue_count(&self) -> usize {
        self.parts.iter().filter(|p| p.color == Color::Blue).count()
    }

    /// The smallest red value, if any red part exists.
    pub fn smallest_red(&self) -> Option<u64> {
        self.parts
            .iter()
            .filter(|p| p.color == Color::Red)
            .map(|p| p.value)
            .min()
    }
}

impl fmt::Display for ColoredPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            let c = if p.color == Color::Blue { 'b' } else { 'r' };
            write!(f, "{}{}", p.value, c)?;
        }
        write!(f, "]")
    }
}

/// Membership predicates for the one-color partition families on the two
/// sides of each identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// All partitions.
    Unrestricted,
    /// Parts `>= min_part`, at most `max_size` parts.
    MinPartMaxSize { min_part: u64, max_size: usize },
    /// Parts `>= min_part`, successive parts differing by at least 2
    /// (no equal and no consecutive parts).
    Gap2 { min_part: u64 },
    /// Parts congruent to 1 or 4 modulo 5.
    Mod5Is1Or4,
    /// Parts `>= shift` and size at most (smallest part) - (shift - 1).
    /// `shift = 1` is the plain "size <= smallest part" family.
    SizeLeSmallest { shift: u64 },
}

impl Family {
    /// Decides membership by inspecting the parts only. The empty partition
    /// belongs to every family here.
    pub fn contains(&self, p: &Partition) -> bool {
        match *self {
            Family::Unrestricted => true,
            Family::MinPartMaxSize { min_part, max_size } => {
                p.size() <= max_size && p.parts().iter().all(|&v| v >= min_part)
            }
            Family::Gap2 { min_part } => {
                p.parts().iter().all(|&v| v >= min_part)
                    && p.parts().windows(2).all(|w| w[0] >= w[1] + 2)
            }
            Family::Mod5Is1Or4 => p.parts().iter().all(|&v| v % 5 == 1 || v % 5 == 4),
            Family::SizeLeSmallest { shift } => match p.smallest() {
                None => true,
                Some(s) => {
                    p.parts().iter().all(|&v| v >= shift)
                        && p.size() as u64 + (shift - 1) <= s
                }
            },
        }
    }

    /// A sound lower bound on part values: no member has a part below it.
    /// Used only to prune enumeration.
    fn min_part(&self) -> u64 {
        match *self {
            Family::Unrestricted | Family::Mod5Is1Or4 => 1,
            Family::MinPartMaxSize { min_part, .. } => min_part,
            Family::Gap2 { min_part } => min_part,
            // Smallest part >= size + shift - 1 >= shift for nonempty members.
            Family::SizeLeSmallest { shift } => shift,
        }
    }

    pub fn name(&self) -> String {
        match *self {
            Family::Unrestricted => "unrestricted".into(),
            Family::MinPartMaxSize { min_part, max_size } => {
                format!("minpart>={min_part},size<={max_size}")
            }
            Family::Gap2 { min_part } => format!("gap2,minpart>={min_part}"),
            Family::Mod5Is1Or4 => "parts=1or4mod5".into(),
            Family::SizeLeSmallest { shift } => format!("size<=smallest-{}", shift - 1),
        }
    }
}

/// Membership predicates for the two-color families of the node identities.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ColoredFamily {
    /// Blue permitted only on values `1..=2j-1`; red permitted everywhere.
    TwoColorLeft { j: u64 },
    /// If any red part exists, (number of blue parts) must be strictly less
    /// than (smallest red value) - (j - 1). No red part qualifies
    /// unconditionally.
    TwoColorRight { j: u64 },
    /// Like `TwoColorRight`, but the constraint only involves parts of
    /// value `>= j`: if any red part `>= j` exists, the number of blue
    /// parts `>= j` must be strictly less than (smallest such red value)
    /// - (j - 1). Parts below `j` of either color are unconstrained. This
    /// is the standard-monomial family of the initial ideal of the shifted
    /// node ideal over the full ring; for `j = 1` it coincides with
    /// `TwoColorRight`.
    TwoColorRightMinFiltered { j: u64 },
}

impl ColoredFamily {
    pub fn contains(&self, p: &ColoredPartition) -> bool {
        match *self {
            ColoredFamily::TwoColorLeft { j } => p
                .parts()
                .iter()
                .all(|cp| cp.color == Color::Red || cp.value <= 2 * j - 1),
            ColoredFamily::TwoColorRight { j } => match p.smallest_red() {
                None => true,
                Some(r) => p.blue_count() as u64 + (j - 1) < r,
            },
            ColoredFamily::TwoColorRightMinFiltered { j } => {
                let smallest_big_red = p
                    .parts()
                    .iter()
                    .filter(|cp| cp.color == Color::Red && cp.value >= j)
                    .map(|cp| cp.value)
                    .min();
                match smallest_big_red {
                    None => true,
                    Some(r) => {
                        let big_blues = p
                            .parts()
                            .iter()
                            .filter(|cp| cp.color == Color::Blue && cp.value >= j)
                            .count() as u64;
                        big_blues + (j - 1) < r
                    }
                }
            }
        }
    }

    pub fn name(&self) -> String {
        match *self {
            ColoredFamily::TwoColorLeft { j } => format!("2c-left,j={j}"),
            ColoredFamily::TwoColorRight { j } => format!("2c-right,j={j}"),
            ColoredFamily::TwoColorRightMinFiltered { j } => {
                format!("2c-right-min-filtered,j={j}")
            }
        }
    }
}

/// Enumerates exactly the partitions of `n` in the family, in descending
/// lexicographic order on part sequences, without duplicates.
pub fn enumerate(n: u64, family: &Family) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    let min = family.min_part();
    descend(n, n, min, &mut stack, family, &mut out);
    out
}

fn descend(
    remaining: u64,
    max_part: u64,
    min_part: u64,
    stack: &mut Vec<u64>,
    family: &Family,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        let p = Partition { parts: stack.clone() };
        if family.contains(&p) {
            out.push(p);
        }
        return;
    }
    let hi = remaining.min(max_part);
    if hi < min_part {
        return;
    }
    let mut v = hi;
    while v >= min_part {
        stack.push(v);
        descend(remaining - v, v, min_part, stack, family, out);
        stack.pop();
        if v == min_part {
            break;
        }
        v -= 1;
    }
}

/// Enumerates the two-color partitions of `n` in the family, in descending
/// lexicographic order on canonical part sequences (value descending, blue
/// above red at equal value).
pub fn enumerate_colored(n: u64, family: &ColoredFamily) -> Vec<ColoredPartition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    // Ranks are (value, blue=1 > red=0); start above everything.
    descend_colored(n, (n, 1), &mut stack, family, &mut out);
    out
}

fn descend_colored(
    remaining: u64,
    max_rank: (u64, u8),
    stack: &mut Vec<ColoredPart>,
    family: &ColoredFamily,
    out: &mut Vec<ColoredPartition>,
) {
    if remaining == 0 {
        let p = ColoredPartition { parts: stack.clone() };
        if family.contains(&p) {
            out.push(p);
        }
        return;
    }
    let mut v = remaining.min(max_rank.0);
    while v >= 1 {
        for color_rank in [1u8, 0u8] {
            if (v, color_rank) > max_rank {
                continue;
            }
            let color = if color_rank == 1 { Color::Blue } else { Color::Red };
            stack.push(ColoredPart { value: v, color });
            descend_colored(remaining - v, (v, color_rank), stack, family, out);
            stack.pop();
        }
        v -= 1;
    }
}

// ---------------------------------------------------------------------------
// Dynamic-programming counts. Each family gets its own recurrence so the
// fast paths stay independent of one another; the enumeration above is the
// common oracle.
// ---------------------------------------------------------------------------

/// Table of partitions of `m` into at most `t` parts, for `m, t <= n`.
/// `table[t][m]`; row 0 is the empty-partition row.
pub(crate) fn at_most_parts_table(n: u64) -> Vec<Vec<BigUint>> {
    let n = n as usize;
    let mut table = vec![vec![BigUint::zero(); n + 1]; n + 2];
    table[0][0] = BigUint::one();
    for t in 1..=n + 1 {
        for m in 0..=n {
            // At most t parts: either at most t-1 parts, or remove 1 from
            // each of exactly t parts (conjugate recurrence).
            let mut v = table[t - 1][m].clone();
            if m >= t {
                v += table[t][m - t].clone();
            }
            table[t][m] = v;
        }
    }
    table
}

pub(crate) fn at_most_parts(table: &[Vec<BigUint>], m: u64, t: u64) -> BigUint {
    let m = m as usize;
    let t = (t as usize).min(m).min(table.len() - 1);
    table[t][m].clone()
}

/// Table of partitions of `u` with all parts `>= r`, for `u, r <= n`;
/// `table[r][u]`, with `table[r][0] = 1`.
pub(crate) fn min_part_table(n: u64) -> Vec<Vec<BigUint>> {
    let n = n as usize;
    let mut table = vec![vec![BigUint::zero(); n + 1]; n + 2];
    for row in table.iter_mut() {
        row[0] = BigUint::one();
    }
    for r in (1..=n).rev() {
        for u in r..=n {
            let acc = table[r + 1][u].clone() + table[r][u - r].clone();
            table[r][u] = acc;
        }
    }
    table
}

/// Number of partitions of `n` with every part `>= min_part` and at most
/// `max_size` parts.
pub fn count_minpart_maxsize(n: u64, min_part: u64, max_size: usize) -> BigUint {
    assert!(min_part >= 1);
    let table = at_most_parts_table(n);
    let mut total = BigUint::zero();
    for t in 0..=(max_size as u64) {
        if t * min_part > n {
            break;
        }
        // Exactly t parts each >= min_part: subtract min_part from each,
        // leaving at most t parts.
        total += at_most_parts(&table, n - t * min_part, t);
    }
    total
}

/// Number of partitions of `n` with all parts `>= min_part` and successive
/// parts differing by at least 2.
pub fn count_gap2(n: u64, min_part: u64) -> BigUint {
    assert!(min_part >= 1);
    let n = n as usize;
    let min = min_part as usize;
    // g[m][v]: gap-2 partitions of v with all parts >= m. Either no part
    // equals m (all >= m+1) or the smallest part is m and the rest form a
    // gap-2 partition of v-m with parts >= m+2.
    let mut g = vec![vec![BigUint::zero(); n + 1]; n + 3];
    for row in g.iter_mut() {
        row[0] = BigUint::one();
    }
    for m in (min..=n).rev() {
        for v in m..=n {
            let mut acc = g[m + 1][v].clone();
            if m + 2 < g.len() {
                acc += g[m + 2][v - m].clone();
            }
            g[m][v] = acc;
        }
    }
    g[min.min(n + 1)][n].clone()
}

/// Number of partitions of `n` whose parts are congruent to 1 or 4 mod 5.
pub fn count_mod5_14(n: u64) -> BigUint {
    let n = n as usize;
    let mut ways = vec![BigUint::zero(); n + 1];
    ways[0] = BigUint::one();
    for v in 1..=n {
        if v % 5 != 1 && v % 5 != 4 {
            continue;
        }
        for m in v..=n {
            let add = ways[m - v].clone();
            ways[m] += add;
        }
    }
    ways[n].clone()
}

/// Number of partitions of `n` with all parts `>= shift` and size at most
/// (smallest part) - (shift - 1). `shift = 1` recovers the plain
/// "size <= smallest part" family.
pub fn count_size_le_smallest(n: u64, shift: u64) -> BigUint {
    assert!(shift >= 1);
    let table = at_most_parts_table(n);
    // Exactly t parts, each >= t + shift - 1 (the smallest-part bound
    // implies the min-part bound).
    let mut total = BigUint::zero();
    let mut t = 0u64;
    while t * (t + shift - 1) <= n {
        total += at_most_parts(&table, n - t * (t + shift - 1), t);
        t += 1;
    }
    total
}

/// Number of two-color partitions of `n` with blue permitted only on values
/// `1..=2j-1` and red permitted on all values.
pub fn count_2c_left(n: u64, j: u64) -> BigUint {
    assert!(j >= 1);
    let n = n as usize;
    let mut ways = vec![BigUint::zero(); n + 1];
    ways[0] = BigUint::one();
    // One unbounded item type per allowed colored value.
    for v in 1..=n {
        let copies = if (v as u64) <= 2 * j - 1 { 2 } else { 1 };
        for _ in 0..copies {
            for m in v..=n {
                let add = ways[m - v].clone();
                ways[m] += add;
            }
        }
    }
    ways[n].clone()
}

/// Number of two-color partitions of `n` such that, if any red part exists,
/// the number of blue parts is strictly less than (smallest red value)
/// - (j - 1). Partitions without red parts qualify unconditionally.
pub fn count_2c_right(n: u64, j: u64) -> BigUint {
    assert!(j >= 1);
    let at_most = at_most_parts_table(n);
    let min_from = min_part_table(n);

    // No red part at all: any all-blue partition of n.
    let mut total = at_most_parts(&at_most, n, n);
    // Smallest red value exactly r carries weight m in red (one forced copy
    // of r plus parts >= r), and the blue remainder has at most r - j parts.
    for r in j..=n {
        for m in r..=n {
            let reds = &min_from[r as usize][(m - r) as usize];
            if reds.is_zero() {
                continue;
            }
            let blues = at_most_parts(&at_most, n - m, r - j);
            total += reds * blues;
        }
    }
    total
}

/// Number of two-color partitions of `n` satisfying the
/// [`ColoredFamily::TwoColorRightMinFiltered`] predicate: parts below `j`
/// are free in both colors; among parts `>= j`, if any red exists then
/// #blue < (smallest red) - (j - 1).
pub fn count_2c_right_min_filtered(n: u64, j: u64) -> BigUint {
    assert!(j >= 1);
    let at_most = at_most_parts_table(n);
    let min_from = min_part_table(n);
    let nn = n as usize;

    // Parts below j, one color: partitions into parts <= j - 1, i.e. (by
    // conjugation) into at most j - 1 parts.
    let small: Vec<BigUint> = (0..=n).map(|w| at_most_parts(&at_most, w, j - 1)).collect();
    let mut small2 = vec![BigUint::zero(); nn + 1];
    for a in 0..=nn {
        if small[a].is_zero() {
            continue;
        }
        for b in 0..=nn - a {
            let add = &small[a] * &small[b];
            small2[a + b] += add;
        }
    }

    // Parts >= j of both colors, coupled by the size/smallest constraint:
    // exactly b blue parts >= j, red partition with parts >= b + j.
    let mut big = vec![BigUint::zero(); nn + 1];
    for w3 in 0..=n {
        let mut b = 0u64;
        while b * j <= w3 {
            let blues = if b == 0 {
                if w3 == 0 { BigUint::one() } else { BigUint::zero() }
            } else {
                at_most_parts(&at_most, w3 - b * j, b)
            };
            if !blues.is_zero() {
                for w4 in 0..=n - w3 {
                    let r_min = b + j;
                    let reds = if w4 == 0 {
                        BigUint::one()
                    } else if r_min > w4 {
                        BigUint::zero()
                    } else {
                        min_from[r_min as usize][w4 as usize].clone()
                    };
                    if !reds.is_zero() {
                        big[(w3 + w4) as usize] += &blues * &reds;
                    }
                }
            }
            b += 1;
        }
    }

    let mut total = BigUint::zero();
    for a in 0..=nn {
        if !small2[a].is_zero() && !big[nn - a].is_zero() {
            total += &small2[a] * &big[nn - a];
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::QSeries;
    use num_bigint::BigInt;

    fn parts(p: &Partition) -> Vec<u64> {
        p.parts().to_vec()
    }

    #[test]
    fn enumerate_zero_is_single_empty_partition() {
        for family in [
            Family::Unrestricted,
            Family::Gap2 { min_part: 3 },
            Family::Mod5Is1Or4,
            Family::SizeLeSmallest { shift: 2 },
        ] {
            let got = enumerate(0, &family);
            assert_eq!(got, vec![Partition::empty()], "family {}", family.name());
        }
    }

    #[test]
    fn enumerate_unrestricted_4() {
        let got = enumerate(4, &Family::Unrestricted);
        let expect: Vec<Vec<u64>> = vec![
            vec![4],
            vec![3, 1],
            vec![2, 2],
            vec![2, 1, 1],
            vec![1, 1, 1, 1],
        ];
        assert_eq!(got.iter().map(parts).collect::<Vec<_>>(), expect);
    }

    #[test]
    fn enumerate_gap2_6() {
        let got = enumerate(6, &Family::Gap2 { min_part: 1 });
        let expect: Vec<Vec<u64>> = vec![vec![6], vec![5, 1], vec![4, 2]];
        assert_eq!(got.iter().map(parts).collect::<Vec<_>>(), expect);
    }

    #[test]
    fn count_minpart_maxsize_examples() {
        assert_eq!(count_minpart_maxsize(4, 2, 2), BigUint::from(2u32));
        assert_eq!(count_minpart_maxsize(3, 4, 5), BigUint::zero());
        for n in 0..10u64 {
            let expect = if n == 0 { 1u32 } else { 0 };
            assert_eq!(count_minpart_maxsize(n, 1, 0), BigUint::from(expect));
        }
    }

    #[test]
    fn count_gap2_examples() {
        assert_eq!(count_gap2(6, 1), BigUint::from(3u32));
        assert_eq!(count_gap2(3, 1), BigUint::one());
        assert_eq!(count_gap2(2, 2), BigUint::one());
    }

    #[test]
    fn count_mod5_examples() {
        // 6 -> {6}, {4,1,1}, {1x6}
        assert_eq!(count_mod5_14(6), BigUint::from(3u32));
        assert_eq!(count_mod5_14(0), BigUint::one());
        assert_eq!(count_mod5_14(3), BigUint::one());
    }

    #[test]
    fn count_size_le_smallest_examples() {
        // {6},{4,2},{3,3}
        assert_eq!(count_size_le_smallest(6, 1), BigUint::from(3u32));
        assert_eq!(count_size_le_smallest(1, 1), BigUint::one());
        // {4} qualifies; {2,2} fails since 2 > 2-1.
        assert_eq!(count_size_le_smallest(4, 2), BigUint::one());
    }

    #[test]
    fn colored_partitions_of_2_match_worked_example() {
        // 2b, 2r, 1b+1b, 1b+1r, 1r+1r -- five canonical colored partitions.
        let all = enumerate_colored(2, &ColoredFamily::TwoColorLeft { j: 2 });
        assert_eq!(all.len(), 5);
        let shown: Vec<String> = all.iter().map(|p| p.to_string()).collect();
        assert_eq!(shown, vec!["[2b]", "[2r]", "[1b,1b]", "[1b,1r]", "[1r,1r]"]);
    }

    #[test]
    fn colored_canonical_form_is_unique() {
        let a = ColoredPartition::new(vec![
            ColoredPart { value: 1, color: Color::Blue },
            ColoredPart { value: 1, color: Color::Red },
        ]);
        let b = ColoredPartition::new(vec![
            ColoredPart { value: 1, color: Color::Red },
            ColoredPart { value: 1, color: Color::Blue },
        ]);
        assert_eq!(a, b);
        assert_eq!(a.parts()[0].color, Color::Blue);
    }

    #[test]
    fn two_color_counts_match_paper_example() {
        assert_eq!(count_2c_left(2, 1), BigUint::from(4u32));
        assert_eq!(count_2c_right(2, 1), BigUint::from(4u32));
        assert_eq!(count_2c_left(1, 1), BigUint::from(2u32));
        assert_eq!(count_2c_right(1, 1), BigUint::from(2u32));
        assert_eq!(count_2c_left(0, 3), BigUint::one());
        assert_eq!(count_2c_right(0, 3), BigUint::one());
    }

    #[test]
    fn counts_agree_with_enumeration_oracle() {
        for n in 0..=24u64 {
            assert_eq!(
                count_minpart_maxsize(n, 2, 3),
                enumerate(n, &Family::MinPartMaxSize { min_part: 2, max_size: 3 }).len().into(),
                "minpart/maxsize at n={n}"
            );
            for k in 1..=3u64 {
                assert_eq!(
                    count_gap2(n, k),
                    enumerate(n, &Family::Gap2 { min_part: k }).len().into(),
                    "gap2 at n={n}, k={k}"
                );
                assert_eq!(
                    count_size_le_smallest(n, k),
                    enumerate(n, &Family::SizeLeSmallest { shift: k }).len().into(),
                    "size<=smallest at n={n}, k={k}"
                );
            }
            assert_eq!(
                count_mod5_14(n),
                enumerate(n, &Family::Mod5Is1Or4).len().into(),
                "mod5 at n={n}"
            );
        }
        for n in 0..=16u64 {
            for j in 1..=3u64 {
                assert_eq!(
                    count_2c_left(n, j),
                    enumerate_colored(n, &ColoredFamily::TwoColorLeft { j }).len().into(),
                    "2c-left at n={n}, j={j}"
                );
                assert_eq!(
                    count_2c_right(n, j),
                    enumerate_colored(n, &ColoredFamily::TwoColorRight { j }).len().into(),
                    "2c-right at n={n}, j={j}"
                );
                assert_eq!(
                    count_2c_right_min_filtered(n, j),
                    enumerate_colored(n, &ColoredFamily::TwoColorRightMinFiltered { j })
                        .len()
                        .into(),
                    "2c-right-min-filtered at n={n}, j={j}"
                );
            }
        }
    }

    #[test]
    fn printed_right_family_fails_for_j_2_but_filtered_variant_matches_left() {
        // Minimal counterexample to the printed statement: n = 1, j = 2.
        assert_eq!(count_2c_left(1, 2), BigUint::from(2u32));
        assert_eq!(count_2c_right(1, 2), BigUint::one());
        // With the constraint applied only to parts >= j, equality holds.
        for j in 1..=3u64 {
            for n in 0..=30u64 {
                assert_eq!(
                    count_2c_left(n, j),
                    count_2c_right_min_filtered(n, j),
                    "filtered two-color identity at n={n}, j={j}"
                );
            }
        }
        // j = 1: the filtered variant coincides with the printed one.
        for n in 0..=30u64 {
            assert_eq!(count_2c_right(n, 1), count_2c_right_min_filtered(n, 1));
        }
    }

    #[test]
    fn identities_hold_on_small_ranges() {
        for n in 0..=40u64 {
            assert_eq!(count_size_le_smallest(n, 1), count_gap2(n, 1), "RRNM1 at {n}");
            assert_eq!(count_gap2(n, 1), count_mod5_14(n), "first RR at {n}");
            for k in 2..=4u64 {
                assert_eq!(count_size_le_smallest(n, k), count_gap2(n, k), "RRNM2 at {n},{k}");
            }
            assert_eq!(count_2c_left(n, 1), count_2c_right(n, 1), "two-color at {n}");
        }
    }

    #[test]
    fn counts_agree_with_series_coefficients() {
        let order = 30;
        let hk1 = QSeries::h_k(1, order).unwrap();
        let hk3 = QSeries::h_k(3, order).unwrap();
        let hnl = QSeries::h_n_l(4, 2, order).unwrap();
        let node = QSeries::node(order);
        for n in 0..=order as u64 {
            assert_eq!(BigInt::from(count_gap2(n, 1)), hk1.coeff(n as usize).clone());
            assert_eq!(BigInt::from(count_gap2(n, 3)), hk3.coeff(n as usize).clone());
            assert_eq!(
                BigInt::from(count_minpart_maxsize(n, 2, 3)),
                hnl.coeff(n as usize).clone()
            );
            assert_eq!(BigInt::from(count_2c_left(n, 1)), node.coeff(n as usize).clone());
        }
    }

    #[test]
    fn partition_json_shape() {
        let p = Partition::new(vec![3, 1]);
        let v = serde_json::json!({"n": p.weight(), "parts": p.parts()});
        assert_eq!(v.to_string(), r#"{"n":4,"parts":[3,1]}"#);

        let cp = ColoredPartition::new(vec![
            ColoredPart { value: 2, color: Color::Red },
            ColoredPart { value: 1, color: Color::Blue },
        ]);
        assert_eq!(
            serde_json::to_string(&cp).unwrap(),
            r#"{"parts":[{"v":2,"c":"r"},{"v":1,"c":"b"}]}"#
        );
        let back: ColoredPartition =
            serde_json::from_str(r#"{"parts":[{"v":1,"c":"b"},{"v":2,"c":"r"}]}"#).unwrap();
        assert_eq!(back.parts()[0].value, 1);
    }
}

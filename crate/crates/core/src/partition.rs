//! Integer partitions and the cycle-type bookkeeping built on them.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::counting::factorial;
use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// Partitions index irreducible characters, cycle types and symmetric
/// function bases. The multiplicity vector is cached because `z` and the
/// plethysm code consult it far more often than the parts themselves.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
    // mults[i] = number of parts equal to i + 1
    mults: Vec<usize>,
}

impl Partition {
    /// The empty partition of 0.
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a partition from arbitrary positive parts, sorting them.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Parse(format!("partition parts must be positive: {parts:?}")));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self::from_sorted(parts))
    }

    /// Builds a partition from parts already known to be weakly decreasing
    /// and positive.
    pub(crate) fn from_sorted(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        let mut mults = vec![0; parts.first().copied().unwrap_or(0)];
        for &p in &parts {
            mults[p - 1] += 1;
        }
        Self { parts, mults }
    }

    /// The one-part partition `(n)`; empty when `n == 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Self::from_sorted(vec![n])
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Self::from_sorted(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn largest_part(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Number of parts equal to `part`.
    pub fn multiplicity(&self, part: usize) -> usize {
        if part == 0 {
            0
        } else {
            self.mults.get(part - 1).copied().unwrap_or(0)
        }
    }

    /// `(part, multiplicity)` pairs for the parts that occur, largest first.
    pub fn multiplicities(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.mults
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &m)| m > 0)
            .map(|(i, &m)| (i + 1, m))
    }

    /// `z = prod_i i^{m_i} m_i!`, the order of the centralizer of a
    /// permutation with this cycle type.
    pub fn z(&self) -> BigUint {
        let mut z = BigUint::one();
        for (part, m) in self.multiplicities() {
            z *= BigUint::from(part).pow(m as u32) * factorial(m);
        }
        z
    }

    /// Size of the conjugacy class of `S_n` with this cycle type.
    pub fn class_size(&self) -> BigUint {
        factorial(self.weight()) / self.z()
    }

    /// The transpose of the Young diagram.
    pub fn conjugate(&self) -> Self {
        let cols = self.largest_part();
        let parts = (1..=cols)
            .map(|c| self.parts.iter().take_while(|&&p| p >= c).count())
            .collect();
        Self::from_sorted(parts)
    }

    /// Union of the parts of two partitions (the product index of `p_ρ p_σ`).
    pub fn union(&self, other: &Self) -> Self {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.len() && j < other.len() {
            if self.parts[i] >= other.parts[j] {
                parts.push(self.parts[i]);
                i += 1;
            } else {
                parts.push(other.parts[j]);
                j += 1;
            }
        }
        parts.extend_from_slice(&self.parts[i..]);
        parts.extend_from_slice(&other.parts[j..]);
        Self::from_sorted(parts)
    }

    /// Every part multiplied by `k`.
    pub fn dilate(&self, k: usize) -> Self {
        Self::from_sorted(self.parts.iter().map(|&p| p * k).collect())
    }

    /// Whether the Young diagram of `self` fits inside that of `other`.
    pub fn is_contained_in(&self, other: &Self) -> bool {
        self.len() <= other.len() && self.parts.iter().zip(&other.parts).all(|(a, b)| a <= b)
    }

    /// Sign of a permutation with this cycle type.
    pub fn sign(&self) -> i64 {
        if (self.weight() - self.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

/// Graded reverse-lexicographic order: smaller weight first, and within a
/// weight `(3) < (2,1) < (1,1,1)`.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses the bracketed form `[3,1,1]`. Parts may appear in any order and
/// surrounding whitespace is ignored.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("partition must be bracketed: {s:?}")))?;
        if inner.trim().is_empty() {
            return Ok(Self::empty());
        }
        let parts = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad partition part {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        check_parsed_parts(&parts)?;
        Self::new(parts)
    }
}

/// Parsed input may not name parts or weights beyond this, since the
/// multiplicity vector is as long as the largest part.
pub const MAX_PARSE_WEIGHT: usize = 4096;

fn check_parsed_parts(parts: &[usize]) -> Result<()> {
    let weight = parts.iter().try_fold(0usize, |acc, &p| acc.checked_add(p));
    match weight {
        Some(w) if w <= MAX_PARSE_WEIGHT => Ok(()),
        _ => Err(Error::Parse(format!("partition weight exceeds {MAX_PARSE_WEIGHT}"))),
    }
}

impl serde::Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> serde::Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        check_parsed_parts(&parts).map_err(serde::de::Error::custom)?;
        Self::new(parts).map_err(serde::de::Error::custom)
    }
}

/// All partitions of `n`, reverse-lexicographic: `(n)` first, `(1^n)` last.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, &mut current, &mut out);
    out
}

fn fill(remaining: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition::from_sorted(current.clone()));
        return;
    }
    for p in (1..=remaining.min(max)).rev() {
        current.push(p);
        fill(remaining - p, p, current, out);
        current.pop();
    }
}

/// Partitions of `n` with exactly `k` parts, in reverse-lexicographic order.
pub fn partitions_with_parts(n: usize, k: usize) -> Vec<Partition> {
    if k > n {
        return Vec::new();
    }
    partitions_of(n).into_iter().filter(|p| p.len() == k).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn small_partition_lists() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(3), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        assert_eq!(partitions_of(6).len(), 11);
        let counts: Vec<usize> = (0..=10).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn partitions_with_fixed_length() {
        assert_eq!(partitions_with_parts(4, 2), vec![p(&[3, 1]), p(&[2, 2])]);
        assert_eq!(partitions_with_parts(5, 2), vec![p(&[4, 1]), p(&[3, 2])]);
        assert_eq!(partitions_with_parts(7, 7), vec![Partition::column(7)]);
        assert!(partitions_with_parts(3, 4).is_empty());
    }

    #[test]
    fn z_and_class_sizes() {
        assert_eq!(p(&[1, 1, 1]).z(), BigUint::from(6u32));
        assert_eq!(p(&[2, 1]).z(), BigUint::from(2u32));
        assert_eq!(p(&[2, 1]).class_size(), BigUint::from(3u32));
        assert_eq!(p(&[3]).z(), BigUint::from(3u32));
        assert_eq!(p(&[3]).class_size(), BigUint::from(2u32));
        assert_eq!(Partition::empty().z(), BigUint::one());
    }

    #[test]
    fn class_sizes_partition_the_group() {
        for n in 0..=10 {
            let total: BigUint = partitions_of(n).iter().map(Partition::class_size).sum();
            assert_eq!(total, factorial(n), "n = {n}");
        }
    }

    #[test]
    fn conjugation() {
        assert_eq!(p(&[5]).conjugate(), Partition::column(5));
        assert_eq!(p(&[2, 1]).conjugate(), p(&[2, 1]));
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        for n in 0..=12 {
            for lambda in partitions_of(n) {
                assert_eq!(lambda.conjugate().conjugate(), lambda);
            }
        }
    }

    #[test]
    fn no_duplicates_and_correct_weight() {
        for n in 0..=12 {
            let list = partitions_of(n);
            let set: std::collections::BTreeSet<_> = list.iter().cloned().collect();
            assert_eq!(set.len(), list.len());
            assert!(list.iter().all(|l| l.weight() == n));
            assert!(list.windows(2).all(|w| w[0] < w[1]), "sorted in crate order");
        }
    }

    #[test]
    fn text_form() {
        assert_eq!(p(&[3, 1, 1]).to_string(), "[3,1,1]");
        assert_eq!(Partition::empty().to_string(), "[]");
        assert_eq!("[1, 3,1]".parse::<Partition>().unwrap(), p(&[3, 1, 1]));
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert!("[0,1]".parse::<Partition>().is_err());
        assert!("3,1".parse::<Partition>().is_err());
        assert!("[3,,1]".parse::<Partition>().is_err());
        assert!("[4097]".parse::<Partition>().is_err());
        assert!("[18446744073709551615,1]".parse::<Partition>().is_err());
        assert!(serde_json::from_str::<Partition>("[5000]").is_err());
    }

    #[test]
    fn multiplicities_and_union() {
        let l = p(&[3, 3, 1]);
        assert_eq!(l.multiplicity(3), 2);
        assert_eq!(l.multiplicity(2), 0);
        assert_eq!(l.multiplicities().collect::<Vec<_>>(), vec![(3, 2), (1, 1)]);
        assert_eq!(l.union(&p(&[2, 1])), p(&[3, 3, 2, 1, 1]));
        assert_eq!(p(&[2, 1]).dilate(3), p(&[6, 3]));
        assert!(p(&[2, 1]).is_contained_in(&p(&[3, 1, 1])));
        assert!(!p(&[2, 2]).is_contained_in(&p(&[3, 1, 1])));
    }
}

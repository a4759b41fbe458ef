//! Exact partition arithmetic.
//!
//! [`Partition`] is the universal currency of this crate: nilpotent orbits of
//! classical groups, wavefront components, and markings are all partitions.
//! The operations here are the transpose, multiset union, pointwise sum,
//! dominance order, the B/C/D parity-validity predicates, and the classical
//! collapses. Everything is exact integer arithmetic on immutable values.

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::OrbitError;

/// A partition: a weakly decreasing sequence of positive integers.
///
/// The empty sequence is the zero partition. Parts are stored largest first
/// and zeros are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from arbitrary entries: zeros are dropped and the
    /// rest is sorted into weakly decreasing order.
    pub fn new(parts: impl Into<Vec<u32>>) -> Self {
        let mut parts = parts.into();
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|x, y| y.cmp(x));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The partition (1,1,...,1) with `n` parts; the zero nilpotent orbit in
    /// type A convention.
    pub fn ones(n: u32) -> Self {
        Partition {
            parts: vec![1; n as usize],
        }
    }

    /// Strict constructor for wire input: entries must already be positive
    /// and weakly decreasing.
    pub fn from_descending(parts: Vec<u32>) -> Result<Self, OrbitError> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if ok {
            Ok(Partition { parts })
        } else {
            Err(OrbitError::NotAPartition(parts))
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn total(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Runs of equal parts, largest value first: (value, multiplicity).
    pub fn runs(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Transpose (conjugate) of the Young diagram: column lengths become rows.
    pub fn transpose(&self) -> Partition {
        let Some(&first) = self.parts.first() else {
            return Partition::empty();
        };
        let mut cols = vec![0u32; first as usize];
        for &p in &self.parts {
            for c in &mut cols[..p as usize] {
                *c += 1;
            }
        }
        // column lengths are automatically weakly decreasing
        Partition { parts: cols }
    }

    /// Multiset union: merge the parts of both partitions.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut merged = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.len() && j < other.len() {
            if self.parts[i] >= other.parts[j] {
                merged.push(self.parts[i]);
                i += 1;
            } else {
                merged.push(other.parts[j]);
                j += 1;
            }
        }
        merged.extend_from_slice(&self.parts[i..]);
        merged.extend_from_slice(&other.parts[j..]);
        Partition { parts: merged }
    }

    /// Componentwise sum, padding the shorter partition with zeros.
    ///
    /// Equals `transpose(union(transpose(p), transpose(q)))`; that identity is
    /// kept as a property test.
    pub fn pointwise_sum(&self, other: &Partition) -> Partition {
        let n = self.len().max(other.len());
        let part = |p: &Partition, i: usize| p.parts.get(i).copied().unwrap_or(0);
        let parts: Vec<u32> = (0..n).map(|i| part(self, i) + part(other, i)).collect();
        Partition { parts }
    }

    /// Dominance order on partitions of equal total: every prefix sum of
    /// `self` is at least the corresponding prefix sum of `other`.
    pub fn dominates(&self, other: &Partition) -> Result<bool, OrbitError> {
        let (s, t) = (self.total(), other.total());
        if s != t {
            return Err(OrbitError::UnequalTotals(s, t));
        }
        let n = self.len().max(other.len());
        let (mut acc_self, mut acc_other) = (0u32, 0u32);
        for i in 0..n {
            acc_self += self.parts.get(i).copied().unwrap_or(0);
            acc_other += other.parts.get(i).copied().unwrap_or(0);
            if acc_self < acc_other {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Increments the largest part by one; on the empty partition returns (1).
    pub fn add_box_top(&self) -> Partition {
        let mut parts = self.parts.clone();
        match parts.first_mut() {
            Some(p) => *p += 1,
            None => parts.push(1),
        }
        Partition { parts }
    }

    /// Decrements the smallest part by one, deleting it if it reaches zero.
    pub fn remove_box_bottom(&self) -> Result<Partition, OrbitError> {
        let mut parts = self.parts.clone();
        let last = parts.last_mut().ok_or(OrbitError::EmptyPartition)?;
        *last -= 1;
        if *last == 0 {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// The kind-validity predicate of [`ClassicalKind`].
    pub fn is_valid_for(&self, kind: ClassicalKind) -> bool {
        let total = self.total();
        match kind {
            ClassicalKind::A => true,
            ClassicalKind::B => total % 2 == 1 && self.parity_multiplicities_even(0),
            ClassicalKind::C => total.is_multiple_of(2) && self.parity_multiplicities_even(1),
            ClassicalKind::D => total.is_multiple_of(2) && self.parity_multiplicities_even(0),
        }
    }

    /// True when every part of the given parity (0 = even, 1 = odd) occurs
    /// with even multiplicity.
    pub(crate) fn parity_multiplicities_even(&self, parity: u32) -> bool {
        self.runs()
            .iter()
            .all(|&(v, m)| v % 2 != parity || m % 2 == 0)
    }

    /// The X-collapse: the unique kind-valid partition of the same total that
    /// is dominance-greatest among kind-valid partitions dominated by `self`.
    ///
    /// Identity for kind A and for already-valid input. The box-moving loop
    /// below takes a box from the last row of the largest wrong-parity value
    /// with odd multiplicity and drops it on the first later row that can
    /// absorb it; the brute-force dominance-maximum oracle in the acceptance
    /// suite pins this down for all totals <= 14.
    pub fn collapse(&self, kind: ClassicalKind) -> Result<Partition, OrbitError> {
        let (bad_parity, total_parity) = match kind {
            ClassicalKind::A => return Ok(self.clone()),
            ClassicalKind::B => (0, 1),
            ClassicalKind::C => (1, 0),
            ClassicalKind::D => (0, 0),
        };
        if self.total() % 2 != total_parity {
            return Err(OrbitError::WrongParity {
                kind,
                total: self.total(),
            });
        }
        let mut parts = self.parts.clone();
        loop {
            let bad = largest_bad_value(&parts, bad_parity);
            let Some(v) = bad else { break };
            debug_assert!(v >= 2, "total parity rules out a lone bad part of 1");
            // last row of value v loses a box ...
            let i = parts.iter().rposition(|&x| x == v).expect("value present");
            parts[i] = v - 1;
            // ... and the first later row short enough to stay sorted gains it
            match parts[i + 1..].iter().position(|&x| x + 2 <= v) {
                Some(off) => parts[i + 1 + off] += 1,
                None => parts.push(1),
            }
        }
        Ok(Partition { parts })
    }
}

/// Largest value of the given parity occurring with odd multiplicity.
fn largest_bad_value(parts: &[u32], parity: u32) -> Option<u32> {
    let mut i = 0;
    while i < parts.len() {
        let v = parts[i];
        let mut m = 0;
        while i < parts.len() && parts[i] == v {
            m += 1;
            i += 1;
        }
        if v % 2 == parity && m % 2 == 1 {
            return Some(v);
        }
    }
    None
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(deserializer)?;
        Partition::from_descending(parts).map_err(D::Error::custom)
    }
}

/// The classical families at the level of partition parity constraints.
///
/// * B: partitions of odd total, even parts with even multiplicity;
/// * C: partitions of even total, odd parts with even multiplicity;
/// * D: partitions of even total, even parts with even multiplicity;
/// * A: no constraint.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ClassicalKind {
    A,
    B,
    C,
    D,
}

impl ClassicalKind {
    /// Kind of the Langlands-dual side: A<->A, B<->C, D<->D.
    pub fn dual(self) -> ClassicalKind {
        match self {
            ClassicalKind::A => ClassicalKind::A,
            ClassicalKind::B => ClassicalKind::C,
            ClassicalKind::C => ClassicalKind::B,
            ClassicalKind::D => ClassicalKind::D,
        }
    }

    /// Total of a kind-valid partition at rank `n`: n, 2n+1, 2n, 2n.
    pub fn ambient_total(self, n: u32) -> u32 {
        match self {
            ClassicalKind::A => n,
            ClassicalKind::B => 2 * n + 1,
            ClassicalKind::C | ClassicalKind::D => 2 * n,
        }
    }
}

impl fmt::Display for ClassicalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ClassicalKind::A => "A",
            ClassicalKind::B => "B",
            ClassicalKind::C => "C",
            ClassicalKind::D => "D",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for ClassicalKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "A" | "a" => Ok(ClassicalKind::A),
            "B" | "b" => Ok(ClassicalKind::B),
            "C" | "c" => Ok(ClassicalKind::C),
            "D" | "d" => Ok(ClassicalKind::D),
            other => Err(format!("unknown classical kind {other:?}")),
        }
    }
}

/// A nilpotent orbit of a classical group: a kind-valid partition together
/// with its rank. Construction validates, so a `TypedOrbit` is always valid.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct TypedOrbit {
    kind: ClassicalKind,
    n: u32,
    partition: Partition,
}

impl TypedOrbit {
    pub fn new(kind: ClassicalKind, n: u32, partition: Partition) -> Result<Self, OrbitError> {
        if partition.total() == kind.ambient_total(n) && partition.is_valid_for(kind) {
            Ok(TypedOrbit { kind, n, partition })
        } else {
            Err(OrbitError::InvalidOrbit {
                kind,
                n,
                partition: partition.to_string(),
            })
        }
    }

    pub fn kind(&self) -> ClassicalKind {
        self.kind
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }
}

impl fmt::Display for TypedOrbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.kind, self.n, self.partition)
    }
}

impl<'de> Deserialize<'de> for TypedOrbit {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            kind: ClassicalKind,
            n: u32,
            partition: Partition,
        }
        let raw = Raw::deserialize(deserializer)?;
        TypedOrbit::new(raw.kind, raw.n, raw.partition).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(Partition::empty().transpose(), Partition::empty());
        assert_eq!(p(&[6, 4, 2, 2]).transpose(), p(&[4, 4, 2, 2, 1, 1]));
        assert_eq!(p(&[9, 5, 1]).transpose(), p(&[3, 2, 2, 2, 2, 1, 1, 1, 1]));
        // self-transpose hook
        assert_eq!(p(&[3, 1, 1]).transpose(), p(&[3, 1, 1]));
    }

    #[test]
    fn union_examples() {
        assert_eq!(p(&[3, 1]).union(&p(&[3, 1])), p(&[3, 3, 1, 1]));
        assert_eq!(p(&[2]).union(&p(&[6, 4, 2])), p(&[6, 4, 2, 2]));
        assert_eq!(
            p(&[5, 3, 3, 1, 1]).union(&p(&[1, 1])),
            p(&[5, 3, 3, 1, 1, 1, 1])
        );
        assert_eq!(p(&[3, 1]).union(&Partition::empty()), p(&[3, 1]));
    }

    #[test]
    fn pointwise_sum_examples() {
        assert_eq!(
            p(&[1, 1]).pointwise_sum(&p(&[3, 3, 2, 2, 1, 1])),
            p(&[4, 4, 2, 2, 1, 1])
        );
        assert_eq!(Partition::empty().pointwise_sum(&p(&[3, 1])), p(&[3, 1]));
        assert_eq!(p(&[2, 1]).pointwise_sum(&p(&[2, 1])), p(&[4, 2]));
    }

    #[test]
    fn dominance_examples() {
        assert!(p(&[3, 2, 2, 1]).dominates(&p(&[2, 2, 2, 2])).unwrap());
        assert!(p(&[2, 2]).dominates(&p(&[2, 2])).unwrap());
        assert!(!p(&[2, 2, 2, 2, 2, 2, 2])
            .dominates(&p(&[3, 2, 2, 2, 2, 1, 1, 1]))
            .unwrap());
        assert_eq!(
            p(&[2, 1]).dominates(&p(&[2, 2])),
            Err(OrbitError::UnequalTotals(3, 4))
        );
    }

    #[test]
    fn validity_examples() {
        assert!(p(&[3, 3, 1, 1]).is_valid_for(ClassicalKind::D));
        assert!(p(&[2, 2, 1]).is_valid_for(ClassicalKind::B));
        assert!(!p(&[3, 1]).is_valid_for(ClassicalKind::C));
        // zero partition conventions
        assert!(Partition::empty().is_valid_for(ClassicalKind::C));
        assert!(Partition::empty().is_valid_for(ClassicalKind::D));
        assert!(!Partition::empty().is_valid_for(ClassicalKind::B));
        assert!(p(&[1]).is_valid_for(ClassicalKind::B));
    }

    #[test]
    fn collapse_examples() {
        assert_eq!(
            p(&[3, 2, 2, 1]).collapse(ClassicalKind::C).unwrap(),
            p(&[2, 2, 2, 2])
        );
        assert_eq!(
            p(&[5, 4, 2, 2, 1, 1]).collapse(ClassicalKind::B).unwrap(),
            p(&[5, 3, 3, 1, 1, 1, 1])
        );
        assert_eq!(
            p(&[4, 2, 2, 2, 2]).collapse(ClassicalKind::D).unwrap(),
            p(&[3, 3, 2, 2, 1, 1])
        );
        // identity on valid input
        assert_eq!(
            p(&[3, 3, 1, 1]).collapse(ClassicalKind::D).unwrap(),
            p(&[3, 3, 1, 1])
        );
        assert_eq!(
            p(&[3, 2, 2]).collapse(ClassicalKind::C),
            Err(OrbitError::WrongParity {
                kind: ClassicalKind::C,
                total: 7
            })
        );
    }

    #[test]
    fn box_moves() {
        assert_eq!(p(&[4, 4, 2, 2, 1, 1]).add_box_top(), p(&[5, 4, 2, 2, 1, 1]));
        assert_eq!(Partition::empty().add_box_top(), p(&[1]));
        assert_eq!(
            p(&[3, 2, 2, 2, 2, 1, 1, 1, 1]).remove_box_bottom().unwrap(),
            p(&[3, 2, 2, 2, 2, 1, 1, 1])
        );
        assert_eq!(p(&[1]).remove_box_bottom().unwrap(), Partition::empty());
        assert_eq!(
            Partition::empty().remove_box_bottom(),
            Err(OrbitError::EmptyPartition)
        );
    }

    #[test]
    fn typed_orbit_validation() {
        assert!(TypedOrbit::new(ClassicalKind::C, 2, p(&[2, 2])).is_ok());
        // wrong total for the rank
        assert!(TypedOrbit::new(ClassicalKind::C, 3, p(&[2, 2])).is_err());
        // parity-invalid partition
        assert!(TypedOrbit::new(ClassicalKind::C, 2, p(&[3, 1])).is_err());
    }

    #[test]
    fn strict_constructor_rejects_unsorted() {
        assert!(Partition::from_descending(vec![1, 3]).is_err());
        assert!(Partition::from_descending(vec![3, 0]).is_err());
        assert!(Partition::from_descending(vec![3, 1]).is_ok());
    }
}

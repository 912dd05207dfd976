//! Integer partitions: the index set for symplectic irreducibles.
//!
//! - [`Partition`]: weakly decreasing positive parts; the empty partition is
//!   allowed and denotes the trivial representation.
//! - [`enumerate_partitions`]: all partitions of `n` in graded
//!   reverse-lexicographic order.
//!
//! The `Ord` instance is the canonical order used everywhere for cache keys
//! and deterministic iteration: by size first, then reverse-lexicographic
//! (so `4 < 3,1 < 2,2 < 2,1,1 < 1,1,1,1` within size 4).

use crate::error::CoreError;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Build from a weakly decreasing list of positive parts.
    pub fn new(parts: Vec<u32>) -> Result<Self, CoreError> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if ok {
            Ok(Partition(parts))
        } else {
            Err(CoreError::InvalidPartition(parts))
        }
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The single-column partition `<1^j>`.
    pub fn column(j: u32) -> Self {
        Partition(vec![1; j as usize])
    }

    /// The two-column partition `<2^a 1^b>`.
    pub fn two_column(a: u32, b: u32) -> Self {
        let mut parts = vec![2; a as usize];
        parts.extend(std::iter::repeat(1).take(b as usize));
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn num_parts(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn largest_part(&self) -> u32 {
        self.0.first().copied().unwrap_or(0)
    }

    /// True when every part equals 1 (includes the empty partition).
    pub fn is_column(&self) -> bool {
        self.0.iter().all(|&p| p == 1)
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let m = self.largest_part();
        let parts = (1..=m)
            .map(|i| self.0.iter().filter(|&&p| p >= i).count() as u32)
            .collect();
        Partition(parts)
    }

    /// Part-value -> multiplicity map; reconstructing from it yields the
    /// partition back.
    pub fn multiplicity_form(&self) -> BTreeMap<u32, u32> {
        let mut m = BTreeMap::new();
        for &p in &self.0 {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// Containment of Young diagrams (self inside other).
    pub fn contained_in(&self, other: &Partition) -> bool {
        self.0.len() <= other.0.len()
            && self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// Serialization used by the coefficient cache: comma-joined parts,
    /// empty string for the empty partition.
    pub fn to_cache_field(&self) -> String {
        self.0
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            write!(f, "-")
        } else {
            write!(f, "{}", self.to_cache_field())
        }
    }
}

impl FromStr for Partition {
    type Err = CoreError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() || s == "-" {
            return Ok(Partition::empty());
        }
        let parts: Result<Vec<u32>, _> = s.split(',').map(|t| t.trim().parse()).collect();
        let parts = parts.map_err(|_| CoreError::InvalidPartition(Vec::new()))?;
        Partition::new(parts)
    }
}

/// All partitions of `n`, each exactly once, in graded reverse-lexicographic
/// order: `(n)` first, `(1,...,1)` last.
pub fn enumerate_partitions(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    rec(n, n, &mut current, &mut out);
    return out;

    fn rec(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(current.clone()));
            return;
        }
        let hi = remaining.min(max_part);
        for first in (1..=hi).rev() {
            current.push(first);
            rec(remaining - first, first, current, out);
            current.pop();
        }
    }
}

/// Partitions of every size `0..=n`, in the canonical order.
pub fn enumerate_partitions_up_to(n: u32) -> Vec<Partition> {
    (0..=n).flat_map(enumerate_partitions).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// p(n) by Euler's pentagonal recurrence, independent of the enumerator.
    fn euler_p(n: usize) -> u64 {
        let mut p = vec![0i64; n + 1];
        p[0] = 1;
        for i in 1..=n {
            let mut sum = 0i64;
            let mut k = 1i64;
            loop {
                let g1 = (k * (3 * k - 1) / 2) as usize;
                if g1 > i {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                sum += sign * p[i - g1];
                let g2 = (k * (3 * k + 1) / 2) as usize;
                if g2 <= i {
                    sum += sign * p[i - g2];
                }
                k += 1;
            }
            p[i] = sum;
        }
        p[n] as u64
    }

    #[test]
    fn enumeration_matches_euler_counts() {
        for n in 0..=30 {
            assert_eq!(
                enumerate_partitions(n).len() as u64,
                euler_p(n as usize),
                "p({n})"
            );
        }
    }

    #[test]
    fn enumeration_order_and_small_cases() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        let four: Vec<Vec<u32>> = enumerate_partitions(4)
            .iter()
            .map(|p| p.parts().to_vec())
            .collect();
        assert_eq!(
            four,
            vec![vec![4], vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]
        );
        assert_eq!(enumerate_partitions(10).len(), 42);
    }

    #[test]
    fn conjugate_examples_and_involution() {
        let p = |v: &[u32]| Partition::new(v.to_vec()).unwrap();
        assert_eq!(p(&[2, 1]).conjugate(), p(&[2, 1]));
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(p(&[1, 1, 1]).conjugate(), p(&[3]));
        for n in 0..=20 {
            for lam in enumerate_partitions(n) {
                assert_eq!(lam.conjugate().conjugate(), lam);
                assert_eq!(lam.conjugate().size(), lam.size());
            }
        }
    }

    #[test]
    fn multiplicity_form_round_trips() {
        let p = |v: &[u32]| Partition::new(v.to_vec()).unwrap();
        let m = p(&[2, 1, 1]).multiplicity_form();
        assert_eq!(m.get(&1), Some(&2));
        assert_eq!(m.get(&2), Some(&1));
        assert!(Partition::empty().multiplicity_form().is_empty());
        let m = p(&[3, 3, 1]).multiplicity_form();
        assert_eq!(m.get(&1), Some(&1));
        assert_eq!(m.get(&3), Some(&2));
        for n in 0..=15 {
            for lam in enumerate_partitions(n) {
                let total: u32 = lam
                    .multiplicity_form()
                    .iter()
                    .map(|(t, l)| t * l)
                    .sum();
                assert_eq!(total, lam.size());
            }
        }
    }

    #[test]
    fn invalid_parts_rejected() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn canonical_order_matches_enumeration() {
        let mut all = enumerate_partitions_up_to(8);
        let sorted = {
            let mut v = all.clone();
            v.sort();
            v
        };
        assert_eq!(all, sorted);
        all.dedup();
        assert_eq!(all.len(), sorted.len());
    }

    #[test]
    fn display_and_parse_round_trip() {
        for n in 0..=10 {
            for lam in enumerate_partitions(n) {
                let s = lam.to_cache_field();
                assert_eq!(s.parse::<Partition>().unwrap(), lam);
            }
        }
        assert_eq!("-".parse::<Partition>().unwrap(), Partition::empty());
    }
}

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use core::fmt;

use crate::error::{Error, Result};

/// A multiset of positive edge lengths, the object `L` being realized.
///
/// Invariants: no zero lengths, no zero multiplicities stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LengthMultiset {
    entries: BTreeMap<usize, usize>,
}

impl LengthMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    /// Build from `(length, multiplicity)` pairs, merging repeats.
    pub fn from_pairs<I: IntoIterator<Item = (usize, usize)>>(pairs: I) -> Self {
        let mut m = Self::new();
        for (len, mult) in pairs {
            m.insert(len, mult);
        }
        m
    }

    /// Multiset of the lengths in a slice.
    pub fn from_lengths(lengths: &[usize]) -> Self {
        let mut m = Self::new();
        for &len in lengths {
            m.insert(len, 1);
        }
        m
    }

    pub fn insert(&mut self, length: usize, multiplicity: usize) {
        assert!(length > 0, "length 0 not allowed");
        if multiplicity > 0 {
            *self.entries.entry(length).or_insert(0) += multiplicity;
        }
    }

    /// Remove `multiplicity` copies of `length`; error if not present.
    pub fn remove(&mut self, length: usize, multiplicity: usize) -> Result<()> {
        let have = self.count(length);
        if have < multiplicity {
            return Err(Error::SizeMismatch {
                expected: multiplicity,
                got: have,
            });
        }
        if have == multiplicity {
            self.entries.remove(&length);
        } else {
            self.entries.insert(length, have - multiplicity);
        }
        Ok(())
    }

    pub fn count(&self, length: usize) -> usize {
        self.entries.get(&length).copied().unwrap_or(0)
    }

    /// Total number of elements counted with multiplicity.
    pub fn size(&self) -> usize {
        self.entries.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The set of distinct lengths.
    pub fn support(&self) -> BTreeSet<usize> {
        self.entries.keys().copied().collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.entries.iter().map(|(&l, &m)| (l, m))
    }

    pub fn max_length(&self) -> Option<usize> {
        self.entries.keys().next_back().copied()
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut m = self.clone();
        for (l, c) in other.iter() {
            m.insert(l, c);
        }
        m
    }

    /// `self − other`, failing if `other ⊄ self`.
    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        let mut m = self.clone();
        for (l, c) in other.iter() {
            m.remove(l, c)?;
        }
        Ok(m)
    }

    pub fn contains_sub(&self, other: &Self) -> bool {
        other.iter().all(|(l, c)| self.count(l) >= c)
    }

    /// L1 distance over multiplicities; the move-search progress measure.
    pub fn distance_l1(&self, other: &Self) -> usize {
        let mut d = 0;
        for l in self.support().union(&other.support()) {
            let a = self.count(*l);
            let b = other.count(*l);
            d += a.abs_diff(b);
        }
        d
    }

    /// Cyclic reduction: each length `x` maps to `min(x, v-x)`.
    pub fn reduce_cyclic(&self, v: usize) -> Result<Self> {
        let mut m = Self::new();
        for (l, c) in self.iter() {
            if l >= v {
                return Err(Error::LengthOutOfRange { length: l, v });
            }
            m.insert(l.min(v - l), c);
        }
        Ok(m)
    }

    /// BHR admissibility: for every divisor `d` of `v`, the number of
    /// multiples of `d` in the multiset is at most `v − d`.
    pub fn admissible(&self, v: usize) -> Result<bool> {
        if self.size() != v - 1 {
            return Err(Error::SizeMismatch {
                expected: v - 1,
                got: self.size(),
            });
        }
        for l in self.support() {
            if l > v / 2 {
                return Err(Error::LengthOutOfRange { length: l, v });
            }
        }
        for d in 2..=v {
            if v % d != 0 {
                continue;
            }
            let multiples: usize = self
                .iter()
                .filter(|(l, _)| l % d == 0)
                .map(|(_, c)| c)
                .sum();
            if multiples > v - d {
                return Ok(false);
            }
        }
        // d = 1: every element is a multiple; size is v-1 <= v-1 always.
        Ok(true)
    }

    /// Parse the `len^mult` comma-joined grammar, e.g. `1^5,7^2,8^6` or `3`.
    pub fn parse(s: &str) -> Result<Self> {
        let mut m = Self::new();
        let s = s.trim();
        if s.is_empty() {
            return Ok(m);
        }
        for part in s.split(',') {
            let part = part.trim();
            let (len_s, mult_s) = match part.split_once('^') {
                Some((a, b)) => (a, b),
                None => (part, "1"),
            };
            let len: usize = len_s
                .trim()
                .parse()
                .map_err(|_| Error::Parse(String::from(part)))?;
            let mult: usize = mult_s
                .trim()
                .parse()
                .map_err(|_| Error::Parse(String::from(part)))?;
            if len == 0 {
                return Err(Error::Parse(String::from("length 0 not allowed")));
            }
            m.insert(len, mult);
        }
        Ok(m)
    }
}

impl fmt::Display for LengthMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (l, c) in self.iter() {
            if !first {
                write!(f, ",")?;
            }
            first = false;
            if c == 1 {
                write!(f, "{l}")?;
            } else {
                write!(f, "{l}^{c}")?;
            }
        }
        Ok(())
    }
}

/// Convenience constructor used throughout the tests: `ms![(1,5),(7,2)]`.
#[macro_export]
macro_rules! ms {
    ($(($l:expr, $c:expr)),* $(,)?) => {
        $crate::multiset::LengthMultiset::from_pairs([$(($l, $c)),*])
    };
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduce_cyclic_examples() {
        let m = ms![(17, 2)].reduce_cyclic(20).unwrap();
        assert_eq!(m, ms![(3, 2)]);
        let m = ms![(5, 15), (14, 4)].reduce_cyclic(20).unwrap();
        assert_eq!(m, ms![(5, 15), (6, 4)]);
        let m = ms![(1, 4)].reduce_cyclic(8).unwrap();
        assert_eq!(m, ms![(1, 4)]);
        assert!(ms![(9, 1)].reduce_cyclic(8).is_err());
    }

    #[test]
    fn reduce_cyclic_idempotent() {
        let m = ms![(5, 15), (14, 4), (1, 3)];
        let r1 = m.reduce_cyclic(20).unwrap();
        let r2 = r1.reduce_cyclic(20).unwrap();
        assert_eq!(r1, r2);
    }

    #[test]
    fn admissible_examples() {
        // {3^5} in K_6: divisor 3 has 5 multiples > 6-3.
        assert!(!ms![(3, 5)].admissible(6).unwrap());
        // {1^(v-1)} admissible for any v.
        for v in 2..12 {
            assert!(ms![(1, v - 1)].admissible(v).unwrap());
        }
        // v = 43 prime support work.
        let m = ms![(1, 8), (15, 19), (16, 14)];
        assert_eq!(m.size(), 41);
        assert!(m.admissible(43).is_err()); // size mismatch vs v
        let m = ms![(1, 8), (15, 19), (16, 15)];
        assert!(m.admissible(43).unwrap());
    }

    #[test]
    fn parse_print_round_trip() {
        let m = ms![(1, 5), (7, 2), (8, 6)];
        let s = alloc::format!("{m}");
        assert_eq!(s, "1^5,7^2,8^6");
        assert_eq!(LengthMultiset::parse(&s).unwrap(), m);
        let m = ms![(3, 1)];
        assert_eq!(alloc::format!("{m}"), "3");
        assert_eq!(LengthMultiset::parse("3").unwrap(), m);
        assert_eq!(LengthMultiset::parse("").unwrap(), LengthMultiset::new());
        assert!(LengthMultiset::parse("0^2").is_err());
        assert!(LengthMultiset::parse("x").is_err());
    }

    #[test]
    fn sub_and_union() {
        let a = ms![(1, 5), (7, 2)];
        let b = ms![(1, 2), (7, 2)];
        assert_eq!(a.checked_sub(&b).unwrap(), ms![(1, 3)]);
        assert!(b.checked_sub(&a).is_err());
        assert_eq!(b.union(&ms![(1, 3)]), a);
        assert_eq!(a.distance_l1(&b), 3);
    }
}

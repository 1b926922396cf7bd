use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::multiset::LengthMultiset;

/// A Hamiltonian path in `K_v` on the labels `0..v`.
///
/// Standard means the first element is 0; perfect means standard and the
/// final element is `v-1`. Partial (sub-`K_v`) paths never appear here; they
/// live as raw `Vec<usize>` inside the transform internals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Realization {
    v: usize,
    path: Vec<usize>,
}

impl Realization {
    /// Wrap a path, checking it is a permutation of `0..v`.
    pub fn new(v: usize, path: Vec<usize>) -> Result<Self> {
        if path.len() != v || !is_permutation(&path, v) {
            return Err(Error::VerifyFailed(format!(
                "path of length {} is not a permutation of 0..{v}",
                path.len()
            )));
        }
        Ok(Self { v, path })
    }

    /// Wrap a path and check it realizes `expected` exactly.
    pub fn verified(v: usize, path: Vec<usize>, expected: &LengthMultiset) -> Result<Self> {
        let r = Self::new(v, path)?;
        let rep = r.verify(expected);
        if !rep.passed() {
            return Err(Error::VerifyFailed(format!(
                "expected {expected}, realized {} (v={v})",
                rep.realized
            )));
        }
        Ok(r)
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn path(&self) -> &[usize] {
        &self.path
    }

    pub fn into_path(self) -> Vec<usize> {
        self.path
    }

    pub fn first(&self) -> usize {
        self.path[0]
    }

    pub fn last(&self) -> usize {
        *self.path.last().unwrap()
    }

    pub fn is_standard(&self) -> bool {
        self.first() == 0
    }

    pub fn is_perfect(&self) -> bool {
        self.is_standard() && self.last() == self.v - 1
    }

    /// The multiset of linear lengths `|path[i+1] - path[i]|`.
    pub fn lengths(&self) -> LengthMultiset {
        lengths_of(&self.path)
    }

    /// Reverse orientation; realizes the same multiset.
    pub fn reverse(&self) -> Self {
        let mut path = self.path.clone();
        path.reverse();
        Self { v: self.v, path }
    }

    /// Replace each vertex `x` with `v-1-x`; realizes the same multiset.
    pub fn complement(&self) -> Self {
        Self {
            v: self.v,
            path: complement_path(&self.path, self.v),
        }
    }

    /// If either end is 0, orient the path to start there.
    pub fn oriented_standard(self) -> Self {
        if self.last() == 0 {
            self.reverse()
        } else {
            self
        }
    }

    /// Full recomputation from the raw path; constructors never self-certify.
    pub fn verify(&self, expected: &LengthMultiset) -> VerifyReport {
        let hamiltonian = is_permutation(&self.path, self.v) && self.path.len() == self.v;
        let realized = self.lengths();
        let standard = hamiltonian && self.is_standard();
        let perfect = standard && self.last() == self.v - 1;
        let cyclic_realized = realized.reduce_cyclic(self.v).unwrap_or_default();
        let matches_expected = &realized == expected;
        VerifyReport {
            hamiltonian,
            realized,
            standard,
            perfect,
            cyclic_realized,
            matches_expected,
        }
    }

    /// Does the path contain the (undirected) edge `{a, b}`?
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.path
            .windows(2)
            .any(|w| (w[0] == a && w[1] == b) || (w[0] == b && w[1] == a))
    }

    /// Type `C_y` check: the ladder of top 1-edges enabling repeated
    /// addition of `y`-edges.
    ///
    /// Even `y`: edges between `v+1-i` and `v-i` for all even `i` in `[2, y]`.
    /// Odd `y`: `v-1` is an end-vertex and edges between `v-i` and `v-i-1`
    /// for all even `i` in `[2, y-1]`.
    pub fn is_type_cy(&self, y: usize) -> bool {
        let v = self.v;
        if y < 2 || v < y + 2 {
            return false;
        }
        if y % 2 == 0 {
            (2..=y)
                .step_by(2)
                .all(|i| self.has_edge(v + 1 - i, v - i))
        } else {
            let end_ok = self.first() == v - 1 || self.last() == v - 1;
            end_ok
                && (2..=y - 1)
                    .step_by(2)
                    .all(|i| self.has_edge(v - i, v - i - 1))
        }
    }
}

/// Everything `verify` recomputes from the raw path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub hamiltonian: bool,
    pub realized: LengthMultiset,
    pub standard: bool,
    pub perfect: bool,
    pub cyclic_realized: LengthMultiset,
    pub matches_expected: bool,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.hamiltonian && self.matches_expected
    }
}

/// Multiset of `|p[i+1] - p[i]|` over consecutive entries; empty for a
/// single vertex.
pub fn lengths_of(path: &[usize]) -> LengthMultiset {
    let mut m = LengthMultiset::new();
    for w in path.windows(2) {
        m.insert(w[0].abs_diff(w[1]), 1);
    }
    m
}

pub(crate) fn is_permutation(path: &[usize], v: usize) -> bool {
    if path.len() != v {
        return false;
    }
    let mut seen = alloc::vec![false; v];
    for &x in path {
        if x >= v || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

pub(crate) fn complement_path(path: &[usize], v: usize) -> Vec<usize> {
    path.iter().map(|&x| v - 1 - x).collect()
}

/// Embedded translation: add `t` to every label. The result is a partial
/// (non-Hamiltonian) path in any larger complete graph.
pub fn translate(path: &[usize], t: usize) -> Vec<usize> {
    path.iter().map(|&x| x + t).collect()
}

//! Exhaustive backtracking search for linear realizations of small
//! instances: the independent ground truth for derived values and the
//! dispatcher fallback of last resort.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::multiset::LengthMultiset;
use crate::realization::Realization;

pub const DEFAULT_CAP: usize = 32;
pub const DEFAULT_BUDGET: u64 = 50_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Any,
    Standard,
    Perfect,
}

/// Outcome of an exhaustive run. `None` is a certified nonexistence;
/// budget exhaustion is a distinct outcome, never conflated with it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Search {
    Found(Realization),
    None,
}

struct Dfs {
    v: usize,
    mode: Mode,
    budget: u64,
    nodes: u64,
    visited: Vec<bool>,
    path: Vec<usize>,
    remaining: Vec<usize>, // remaining multiplicity per length, index = length
    remaining_total: usize,
    lengths: Vec<usize>, // distinct lengths ascending
}

impl Dfs {
    fn new(v: usize, mode: Mode, budget: u64, remaining: Vec<usize>, lengths: Vec<usize>) -> Self {
        let total = remaining.iter().sum();
        Dfs {
            v,
            mode,
            budget,
            nodes: 0,
            visited: alloc::vec![false; v],
            path: Vec::with_capacity(v),
            remaining,
            remaining_total: total,
            lengths,
        }
    }

    /// Run the exhaustive search, invoking `on_complete` for every full
    /// path; a `true` return stops the exploration.
    fn run(&mut self, on_complete: &mut dyn FnMut(&[usize]) -> bool) -> Result<bool> {
        let roots: Vec<usize> = match self.mode {
            Mode::Standard | Mode::Perfect => alloc::vec![0],
            // Symmetry reduction: root at a vertex <= (v-1)/2; the
            // complement maps any path onto one of these roots.
            Mode::Any => (0..=(self.v - 1) / 2).collect(),
        };
        for root in roots {
            self.visited[root] = true;
            self.path.push(root);
            let stop = self.extend(on_complete)?;
            self.path.pop();
            self.visited[root] = false;
            if stop {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn extend(&mut self, on_complete: &mut dyn FnMut(&[usize]) -> bool) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExhausted { budget: self.budget });
        }
        if self.remaining_total == 0 {
            if self.mode == Mode::Perfect && *self.path.last().unwrap() != self.v - 1 {
                return Ok(false);
            }
            return Ok(on_complete(&self.path));
        }
        let u = *self.path.last().unwrap();
        for li in 0..self.lengths.len() {
            let l = self.lengths[li];
            if self.remaining[l] == 0 {
                continue;
            }
            // Lower candidate first, then upper.
            for next in [u.checked_sub(l), u.checked_add(l)] {
                let Some(n) = next else { continue };
                if n >= self.v || self.visited[n] {
                    continue;
                }
                self.visited[n] = true;
                self.path.push(n);
                self.remaining[l] -= 1;
                self.remaining_total -= 1;
                let stop = self.extend(on_complete)?;
                self.remaining_total += 1;
                self.remaining[l] += 1;
                self.path.pop();
                self.visited[n] = false;
                if stop {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }
}

fn prepare(l: &LengthMultiset, cap: usize) -> Result<(usize, Vec<usize>, Vec<usize>)> {
    let v = l.size() + 1;
    if v > cap {
        return Err(Error::OracleCapExceeded { v, cap });
    }
    if let Some(max) = l.max_length() {
        if max >= v {
            return Err(Error::LengthOutOfRange { length: max, v });
        }
    }
    let mut remaining = alloc::vec![0usize; v];
    for (len, c) in l.iter() {
        remaining[len] = c;
    }
    let lengths: Vec<usize> = l.support().into_iter().collect();
    Ok((v, remaining, lengths))
}

/// Depth-first search for one realization of `L`.
///
/// Returns `Found` with the first path under the fixed expansion order
/// (ascending length, lower vertex before upper), or certified `None`
/// after full exhaustion.
pub fn search(l: &LengthMultiset, mode: Mode, budget: u64) -> Result<Search> {
    search_capped(l, mode, budget, DEFAULT_CAP)
}

pub fn search_capped(l: &LengthMultiset, mode: Mode, budget: u64, cap: usize) -> Result<Search> {
    let (v, remaining, lengths) = prepare(l, cap)?;
    if v == 1 {
        return Ok(Search::Found(Realization::new(1, alloc::vec![0])?));
    }
    let mut dfs = Dfs::new(v, mode, budget, remaining, lengths);
    let mut first: Option<Vec<usize>> = None;
    dfs.run(&mut |path| {
        first = Some(path.to_vec());
        true
    })?;
    match first {
        Some(p) => Ok(Search::Found(Realization::verified(v, p, l)?)),
        None => Ok(Search::None),
    }
}

/// Like [`search`], but return the first realization satisfying an extra
/// structural predicate. Used to pin table entries for the small-`y`
/// special cases.
pub fn search_where(
    l: &LengthMultiset,
    mode: Mode,
    budget: u64,
    mut pred: impl FnMut(&Realization) -> bool,
) -> Result<Search> {
    let (v, remaining, lengths) = prepare(l, cap_for(l))?;
    if v == 1 {
        return Ok(Search::Found(Realization::new(1, alloc::vec![0])?));
    }
    let mut dfs = Dfs::new(v, mode, budget, remaining, lengths);
    let mut hit: Option<Realization> = None;
    dfs.run(&mut |path| {
        let Ok(r) = Realization::new(path.len(), path.to_vec()) else {
            return false;
        };
        if pred(&r) {
            hit = Some(r);
            true
        } else {
            false
        }
    })?;
    match hit {
        Some(r) => Ok(Search::Found(r)),
        None => Ok(Search::None),
    }
}

fn cap_for(l: &LengthMultiset) -> usize {
    (l.size() + 1).max(DEFAULT_CAP)
}

/// Exhaustive count of realizations of `L` in the given mode.
///
/// In `Any` mode, paths are counted up to the complement symmetry used for
/// rooting: each complement pair is counted once per rooted representative.
pub fn count(l: &LengthMultiset, mode: Mode, budget: u64) -> Result<u64> {
    let (v, remaining, lengths) = prepare(l, DEFAULT_CAP)?;
    if v == 1 {
        return Ok(1);
    }
    let mut dfs = Dfs::new(v, mode, budget, remaining, lengths);
    let mut n = 0u64;
    dfs.run(&mut |_| {
        n += 1;
        false
    })?;
    Ok(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ms;

    #[test]
    fn search_first_found_path() {
        let r = search(&ms![(1, 2), (2, 2)], Mode::Standard, 1 << 20).unwrap();
        match r {
            Search::Found(r) => assert_eq!(r.path(), &[0, 1, 3, 2, 4]),
            Search::None => panic!("expected a realization"),
        }
    }

    #[test]
    fn search_certifies_nonexistence() {
        // Length-2 edges split K_5 by parity.
        let r = search(&ms![(2, 4)], Mode::Any, 1 << 20).unwrap();
        assert_eq!(r, Search::None);
        // ...while the cyclic reading has a realization.
        let c = Realization::new(5, alloc::vec![0, 2, 4, 1, 3]).unwrap();
        let rep = c.verify(&ms![(2, 3), (3, 1)]);
        assert!(rep.passed());
        assert_eq!(rep.cyclic_realized, ms![(2, 4)]);
    }

    #[test]
    fn search_perfect_chain() {
        for v in 2..8 {
            let r = search(&ms![(1, v - 1)], Mode::Perfect, 1 << 20).unwrap();
            match r {
                Search::Found(r) => assert_eq!(r.path(), (0..v).collect::<Vec<_>>().as_slice()),
                Search::None => panic!(),
            }
        }
    }

    #[test]
    fn count_examples() {
        assert_eq!(count(&ms![(1, 2)], Mode::Standard, 1 << 20).unwrap(), 1);
        assert!(count(&ms![(2, 2), (3, 3)], Mode::Perfect, 1 << 20).unwrap() >= 1);
    }

    #[test]
    fn existence_implications() {
        // perfect ⊆ standard ⊆ any, on a small family.
        for b in 0..4usize {
            for c in 0..4usize {
                let mut l = ms![(1, 2)];
                l.insert(2, b);
                l.insert(3, c);
                let a = search(&l, Mode::Any, 1 << 22).unwrap();
                let s = search(&l, Mode::Standard, 1 << 22).unwrap();
                let p = search(&l, Mode::Perfect, 1 << 22).unwrap();
                if matches!(p, Search::Found(_)) {
                    assert!(matches!(s, Search::Found(_)));
                }
                if matches!(s, Search::Found(_)) {
                    assert!(matches!(a, Search::Found(_)));
                }
            }
        }
    }

    #[test]
    fn search_where_filters() {
        let r = search_where(&ms![(1, 8), (8, 2)], Mode::Standard, 1 << 24, |r| {
            r.is_type_cy(8)
        })
        .unwrap();
        match r {
            Search::Found(r) => assert!(r.is_type_cy(8)),
            Search::None => panic!("a type-C_8 realization exists"),
        }
    }

    #[test]
    fn budget_is_distinct_from_nonexistence() {
        let err = search(&ms![(1, 20), (2, 4), (3, 4)], Mode::Standard, 10).unwrap_err();
        assert!(matches!(err, Error::BudgetExhausted { .. }));
    }
}

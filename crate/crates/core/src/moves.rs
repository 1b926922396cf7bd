//! Local rewrites on paths: the 5-vertex β-moves exchanging `(y-2)`-edges
//! for `y`-edges, single-vertex γ-relocations exchanging a `y`-edge for a
//! `(y-1)`-edge, and a best-first search over both.

use alloc::collections::{BTreeSet, BinaryHeap};
use alloc::vec::Vec;
use core::cmp::Reverse;

use crate::error::{Error, Result};
use crate::multiset::LengthMultiset;
use crate::realization::{lengths_of, Realization};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BetaDirection {
    /// `{1^2, (y-2)^2} -> {1^2, y-2, y}` or `{1^2, y-2, y} -> {1^2, y^2}`.
    TowardY,
    /// The inverse rewrites.
    TowardYm2,
}

fn beta_patterns(y: usize, j: usize, dir: BetaDirection) -> Option<[([usize; 5], [usize; 5]); 2]> {
    if j == 0 {
        return None;
    }
    let p1 = [j - 1, j, y + j - 2, y + j - 1, j + 1];
    let r1 = [j - 1, y + j - 1, y + j - 2, j, j + 1];
    let p2 = [j - 1, j, y + j, y + j - 1, j + 1];
    let r2 = [j - 1, y + j - 1, y + j, j, j + 1];
    Some(match dir {
        BetaDirection::TowardY => [(p1, r1), (p2, r2)],
        BetaDirection::TowardYm2 => [(r1, p1), (r2, p2)],
    })
}

/// Apply a β-move at pivot `j`: find the 5-vertex pattern (forward or
/// reversed) as a contiguous subsequence and replace it in place.
pub fn beta_apply(path: &[usize], y: usize, dir: BetaDirection, j: usize) -> Result<Vec<usize>> {
    let pats = beta_patterns(y, j, dir).ok_or(Error::PatternNotFound)?;
    for (pat, rep) in pats {
        for i in 0..path.len().saturating_sub(4) {
            let w = &path[i..i + 5];
            if w == pat {
                let mut out = path.to_vec();
                out[i..i + 5].copy_from_slice(&rep);
                return Ok(out);
            }
            let rev: [usize; 5] = [pat[4], pat[3], pat[2], pat[1], pat[0]];
            if w == rev {
                let mut out = path.to_vec();
                let rep_rev: [usize; 5] = [rep[4], rep[3], rep[2], rep[1], rep[0]];
                out[i..i + 5].copy_from_slice(&rep_rev);
                return Ok(out);
            }
        }
    }
    Err(Error::PatternNotFound)
}

/// A single-vertex relocation: detach `vertex`, splice its neighbors, and
/// reinsert it at the described slot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaMove {
    pub vertex: usize,
    pub from: usize,
    /// Insert before this position in the spliced path (0 = new first
    /// vertex, spliced-length = new last vertex).
    pub to: usize,
}

/// Enumerate all single-vertex relocations whose net effect on the realized
/// multiset is exactly one `y`-edge for one `(y-1)`-edge or vice versa.
pub fn gamma_moves(path: &[usize], y: usize) -> Vec<(GammaMove, Vec<usize>)> {
    gamma_moves_upto(path, y, 1)
}

/// Like [`gamma_moves`], but also admitting relocations that exchange two
/// `y`-edges for two `(y-1)`-edges at once (or vice versa) — the
/// column-top relocations that drive the ω-construction conversions.
pub(crate) fn gamma_moves_upto(
    path: &[usize],
    y: usize,
    max_swaps: i32,
) -> Vec<(GammaMove, Vec<usize>)> {
    let mut out = Vec::new();
    let n = path.len();
    if n < 3 || y < 2 {
        return out;
    }
    for from in 0..n {
        let vertex = path[from];
        let mut removed: Vec<usize> = Vec::with_capacity(3);
        let mut added: Vec<usize> = Vec::with_capacity(3);
        if from > 0 {
            removed.push(path[from - 1].abs_diff(vertex));
        }
        if from + 1 < n {
            removed.push(path[from + 1].abs_diff(vertex));
        }
        if from > 0 && from + 1 < n {
            added.push(path[from - 1].abs_diff(path[from + 1]));
        }
        let mut spliced = path.to_vec();
        spliced.remove(from);
        for to in 0..=spliced.len() {
            if to == from {
                continue; // identity relocation
            }
            let mut rem2 = removed.clone();
            let mut add2 = added.clone();
            if to > 0 {
                add2.push(spliced[to - 1].abs_diff(vertex));
            }
            if to < spliced.len() {
                add2.push(spliced[to].abs_diff(vertex));
            }
            if to > 0 && to < spliced.len() {
                rem2.push(spliced[to - 1].abs_diff(spliced[to]));
            }
            match gamma_swaps(&rem2, &add2, y) {
                Some(k) if k != 0 && k.abs() <= max_swaps => {}
                _ => continue,
            }
            let mut cand = spliced.clone();
            cand.insert(to, vertex);
            out.push((GammaMove { vertex, from, to }, cand));
        }
    }
    out
}

/// If removing `removed` and adding `added` changes the multiset by
/// exactly `k` copies of `{y} -> {y-1}` (negative `k`: the reverse) and
/// nothing else, return `k`.
fn gamma_swaps(removed: &[usize], added: &[usize], y: usize) -> Option<i32> {
    let mut delta: alloc::collections::BTreeMap<usize, i32> = alloc::collections::BTreeMap::new();
    for &l in added {
        *delta.entry(l).or_insert(0) += 1;
    }
    for &l in removed {
        *delta.entry(l).or_insert(0) -= 1;
    }
    delta.retain(|_, d| *d != 0);
    if delta.is_empty() {
        return Some(0);
    }
    if delta.len() != 2 {
        return None;
    }
    let up = delta.get(&y).copied().unwrap_or(0);
    let down = delta.get(&(y - 1)).copied().unwrap_or(0);
    if up + down == 0 && up != 0 {
        Some(down)
    } else {
        None
    }
}

/// Best-first search over β/γ moves from `start` to a realization of
/// `target`, ordered by L1 multiset distance, ties by depth then insertion.
///
/// Failure after budget exhaustion is not a nonexistence claim.
pub fn local_search(
    start: &Realization,
    target: &LengthMultiset,
    budget: u64,
) -> Result<Realization> {
    if start.lengths().size() != target.size() {
        return Err(Error::SizeMismatch {
            expected: target.size(),
            got: start.lengths().size(),
        });
    }
    let y = target.max_length().unwrap_or(1);
    let dist0 = start.lengths().distance_l1(target);
    if dist0 == 0 {
        return Ok(start.clone());
    }
    let mut heap: BinaryHeap<Reverse<(usize, usize, u64, Vec<usize>)>> = BinaryHeap::new();
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut seq = 0u64;
    seen.insert(start.path().to_vec());
    heap.push(Reverse((dist0, 0, seq, start.path().to_vec())));
    let mut nodes = 0u64;
    while let Some(Reverse((_, depth, _, path))) = heap.pop() {
        nodes += 1;
        if nodes > budget {
            return Err(Error::BudgetExhausted { budget });
        }
        let mut neighbors: Vec<Vec<usize>> = Vec::new();
        for (_, cand) in gamma_moves_upto(&path, y, 2) {
            neighbors.push(cand);
        }
        let vmax = path.len();
        for j in 1..=vmax.saturating_sub(y) {
            for dir in [BetaDirection::TowardY, BetaDirection::TowardYm2] {
                if let Ok(cand) = beta_apply(&path, y, dir, j) {
                    neighbors.push(cand);
                }
            }
        }
        for cand in neighbors {
            if seen.contains(&cand) {
                continue;
            }
            let d = lengths_of(&cand).distance_l1(target);
            // Accept only standard-orientable hits; keep exploring past
            // realizations whose 0 drifted inside.
            if d == 0 && (cand[0] == 0 || *cand.last().unwrap() == 0) {
                let mut p = cand;
                if *p.last().unwrap() == 0 {
                    p.reverse();
                }
                return Realization::verified(p.len(), p, target);
            }
            seen.insert(cand.clone());
            seq += 1;
            heap.push(Reverse((d, depth + 1, seq, cand)));
        }
    }
    Err(Error::BudgetExhausted { budget })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ms;
    use alloc::vec;

    #[test]
    fn beta_examples() {
        // y = 5: {1^3, 3^2} -> {1^3, 3, 5} at pivot 2.
        let p = vec![0, 1, 2, 5, 6, 3];
        let q = beta_apply(&p, 5, BetaDirection::TowardY, 2).unwrap();
        assert_eq!(q, vec![0, 1, 6, 5, 2, 3]);
        assert_eq!(lengths_of(&q), ms![(1, 3), (3, 1), (5, 1)]);
        // Second form at pivot 1 -> {1^3, 5^2}.
        let r = beta_apply(&q, 5, BetaDirection::TowardY, 1).unwrap();
        assert_eq!(r, vec![0, 5, 6, 1, 2, 3]);
        assert_eq!(lengths_of(&r), ms![(1, 3), (5, 2)]);
        // Applying then reverse-applying at the same pivot is the identity.
        let back = beta_apply(&q, 5, BetaDirection::TowardYm2, 2).unwrap();
        assert_eq!(back, p);
        assert!(beta_apply(&p, 5, BetaDirection::TowardY, 3).is_err());
    }

    #[test]
    fn beta_preserves_vertex_set() {
        let p = vec![0, 1, 2, 5, 6, 3];
        let q = beta_apply(&p, 5, BetaDirection::TowardY, 2).unwrap();
        let mut a = p.clone();
        let mut b = q.clone();
        a.sort_unstable();
        b.sort_unstable();
        assert_eq!(a, b);
        assert_eq!(q.len(), p.len());
    }

    #[test]
    fn gamma_moves_examples() {
        // Every returned move keeps the path Hamiltonian and swaps exactly
        // one 3-edge for a 2-edge or vice versa.
        let p = vec![0, 3, 1, 4, 2, 5];
        let before = lengths_of(&p);
        for (_, cand) in gamma_moves(&p, 3) {
            assert!(Realization::new(6, cand.clone()).is_ok());
            let after = lengths_of(&cand);
            let d3 = before.count(3).abs_diff(after.count(3));
            let d2 = before.count(2).abs_diff(after.count(2));
            assert_eq!((d3, d2), (1, 1));
            assert_eq!(before.count(1), after.count(1));
        }
        // On an ω-construction the relocations are plentiful.
        let start = crate::fauxset::omega(12, 6, 6).unwrap();
        let moves = gamma_moves(start.path(), 6);
        assert!(!moves.is_empty());
        for (_, cand) in &moves {
            assert!(Realization::new(12, cand.clone()).is_ok());
        }
        assert!(gamma_moves(&[0, 1], 3).is_empty());
    }

    #[test]
    fn local_search_trivial_and_rejection() {
        let r = Realization::new(6, vec![0, 3, 1, 4, 2, 5]).unwrap();
        let same = local_search(&r, &r.lengths(), 10).unwrap();
        assert_eq!(same, r);
        let err = local_search(&r, &ms![(1, 1)], 10).unwrap_err();
        assert!(matches!(err, Error::SizeMismatch { .. }));
    }

    #[test]
    fn local_search_from_omega() {
        // Turn {1^5, 6^6} into {1^5, 5^2, 6^4} by two gamma moves.
        let start = crate::fauxset::omega(12, 6, 6).unwrap();
        let target = ms![(1, 5), (5, 2), (6, 4)];
        let found = local_search(&start, &target, 100_000).unwrap();
        assert!(found.verify(&target).passed());
    }
}

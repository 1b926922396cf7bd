//! Fauxsets and the ω-constructions: Hamiltonian paths with support `{1, x}`
//! made of fauxset traversals joined by 1-edges, plus the tail curl.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::ms;
use crate::realization::Realization;
use crate::transform::{bridge, edges_to_path, prepend_ones};

/// Blueprint for an ω-style build: the fauxset order and bridge lengths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FauxsetPlan {
    pub v: usize,
    pub x: usize,
    pub residue_order: Vec<usize>,
    pub bridge_lengths: Vec<usize>,
}

impl FauxsetPlan {
    pub fn new(v: usize, x: usize, residue_order: Vec<usize>, bridge_lengths: Vec<usize>) -> Result<Self> {
        let mut seen = alloc::vec![false; x];
        if residue_order.len() != x || residue_order.iter().any(|&r| r >= x || core::mem::replace(&mut seen[r], true)) {
            return Err(Error::Inapplicable("residue order is not a permutation"));
        }
        if bridge_lengths.len() + 1 != x {
            return Err(Error::SizeMismatch { expected: x - 1, got: bridge_lengths.len() });
        }
        Ok(Self { v, x, residue_order, bridge_lengths })
    }

    /// Assemble the plan into a path by bridging full fauxset traversals.
    pub fn assemble(&self) -> Result<Vec<usize>> {
        let traversals: Vec<Vec<usize>> = self
            .residue_order
            .iter()
            .map(|&i| traversal(self.v, self.x, i))
            .collect();
        bridge(&traversals, &self.bridge_lengths)
    }
}

/// The vertices of `K_v` congruent to `i` mod `x`, ascending.
pub fn fauxset(v: usize, x: usize, i: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut u = i;
    while u < v {
        out.push(u);
        u += x;
    }
    out
}

/// The ascending traversal of a fauxset; realizes `{x^(|φ_i|-1)}`.
pub fn traversal(v: usize, x: usize, i: usize) -> Vec<usize> {
    fauxset(v, x, i)
}

/// With `v = qx + r`, the value making `q*·x + i` the largest element of
/// `φ_i`: `q` if `i < r`, else `q - 1`.
pub fn qstar(v: usize, x: usize, i: usize) -> usize {
    let q = v / x;
    let r = v % x;
    if i < r {
        q
    } else {
        q - 1
    }
}

/// Fauxset order for the ω-construction `h1`: increasing from 0.
fn h1_order(x: usize) -> Vec<usize> {
    (0..x).collect()
}

/// Fauxset order for `h2`: 0 then decreasing from `x-1`.
fn h2_order(x: usize) -> Vec<usize> {
    core::iter::once(0).chain((1..x).rev()).collect()
}

/// ω-construction for `{1^(x-1), x^b}` in `K_v` with `v = b + x`.
///
/// `h1` (increasing residue order) when `r'` is even and `h2` (0 then
/// decreasing) when `r'` is odd, where `b = q'x + r'`. The assembly is
/// attempted and verified rather than trusting the parity classification;
/// a failed 1-edge junction reports the construction inapplicable.
pub fn omega(v: usize, x: usize, b: usize) -> Result<Realization> {
    if v != b + x {
        return Err(Error::SizeMismatch { expected: b + x, got: v });
    }
    if b == 0 {
        return Realization::verified(x, (0..x).collect(), &ms![(1, x - 1)]);
    }
    if x == 1 {
        return Realization::verified(v, (0..v).collect(), &ms![(1, b)]);
    }
    let order = if (b % x) % 2 == 0 { h1_order(x) } else { h2_order(x) };
    assemble_omega(v, x, b, order)
}

fn assemble_omega(v: usize, x: usize, b: usize, order: Vec<usize>) -> Result<Realization> {
    let plan = FauxsetPlan::new(v, x, order, alloc::vec![1; x - 1])?;
    let path = plan
        .assemble()
        .map_err(|_| Error::Inapplicable("omega junctions are not all 1-edges"))?;
    Realization::verified(v, path, &ms![(1, x - 1), (x, b)])
}

/// Tail curl: a standard realization of `{1^x, x^b}` in `K_v`, `v = x+b+1`.
///
/// Prefers prepending a 1-edge to the ω-construction for `{1^(x-1), x^b}`;
/// when that construction is unavailable, falls back to the rewiring route
/// on a donor for `{1^(x-1), x^(b+1)}`.
pub fn tail_curl(v: usize, x: usize, b: usize) -> Result<Realization> {
    if v != x + b + 1 {
        return Err(Error::SizeMismatch { expected: x + b + 1, got: v });
    }
    if b == 0 || x == 1 {
        return Realization::verified(v, (0..v).collect(), &ms![(1, v - 1)]);
    }
    if let Ok(r) = omega(v - 1, x, b) {
        return prepend_ones(&r, 1);
    }
    tail_curl_rewired(v, x, b)
}

/// The rewiring route of the tail curl: take an ω-construction for
/// `{1^(x-1), x^(b+1)}`, add a 1-edge from its final vertex into the
/// previously traversed fauxset, and remove one internal `x`-edge of that
/// fauxset so that a Hamiltonian path results.
pub fn tail_curl_rewired(v: usize, x: usize, b: usize) -> Result<Realization> {
    if v != x + b + 1 {
        return Err(Error::SizeMismatch { expected: x + b + 1, got: v });
    }
    if x < 2 {
        return Err(Error::Inapplicable("tail curl needs x >= 2"));
    }
    let preferred_h1 = ((b + 1) % x) % 2 == 0;
    let attempts = if preferred_h1 { [true, false] } else { [false, true] };
    let expected = ms![(1, x), (x, b)];
    for use_h1 in attempts {
        let order = if use_h1 { h1_order(x) } else { h2_order(x) };
        // Residue of the next-to-last fauxset in the traversal order.
        let prev_residue = order[x - 2];
        let donor = match assemble_omega(v, x, b + 1, order) {
            Ok(d) => d,
            Err(_) => continue,
        };
        let f = donor.last();
        let curl_target = [f.wrapping_sub(1), f + 1]
            .into_iter()
            .find(|&t| t < v && t % x == prev_residue && f.abs_diff(t) == 1);
        let Some(t) = curl_target else { continue };
        let mut edges: Vec<(usize, usize)> = donor
            .path()
            .windows(2)
            .map(|w| (w[0].min(w[1]), w[0].max(w[1])))
            .collect();
        edges.push((f.min(t), f.max(t)));
        // Try removing each internal x-edge of the previous fauxset.
        let members = fauxset(v, x, prev_residue);
        for pair in members.windows(2) {
            let rm = (pair[0], pair[1]);
            let Some(pos) = edges.iter().position(|&e| e == rm) else { continue };
            let mut trial = edges.clone();
            trial.remove(pos);
            if let Some(mut path) = edges_to_path(&trial, v) {
                if *path.last().unwrap() == 0 {
                    path.reverse();
                }
                if let Ok(r) = Realization::verified(v, path, &expected) {
                    return Ok(r);
                }
            }
        }
    }
    Err(Error::Inapplicable("no tail-curl rewiring yields a Hamiltonian path"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn fauxset_examples() {
        assert_eq!(fauxset(12, 7, 6), vec![6]);
        assert_eq!(fauxset(25, 7, 0), vec![0, 7, 14, 21]);
        assert_eq!(crate::realization::lengths_of(&traversal(25, 7, 0)), ms![(7, 3)]);
        assert_eq!(qstar(25, 7, 5), 2);
        assert_eq!(qstar(25, 7, 0), 3);
    }

    #[test]
    fn omega_figure_paths() {
        let r = omega(25, 7, 18).unwrap();
        assert_eq!(
            r.path(),
            &[0, 7, 14, 21, 22, 15, 8, 1, 2, 9, 16, 23, 24, 17, 10, 3, 4, 11, 18, 19, 12, 5, 6, 13, 20]
        );
        assert!(r.is_standard());

        let r = omega(12, 7, 5).unwrap();
        assert_eq!(r.path(), &[0, 7, 6, 5, 4, 11, 10, 3, 2, 9, 8, 1]);

        let r = omega(29, 8, 21).unwrap();
        assert!(r.verify(&ms![(1, 7), (8, 21)]).passed());
        let r = omega(22, 7, 15).unwrap();
        assert!(r.verify(&ms![(1, 6), (7, 15)]).passed());

        let r = omega(7, 7, 0).unwrap();
        assert_eq!(r.path(), &[0, 1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn omega_exception_is_the_lemma_exception() {
        // Whenever omega reports inapplicable in this range, both x and r'
        // are odd with r' > 1.
        for x in 2..=9usize {
            for b in 1..=40usize {
                let v = b + x;
                if v > 40 {
                    continue;
                }
                if omega(v, x, b).is_err() {
                    let r = b % x;
                    assert!(
                        x % 2 == 1 && r % 2 == 1 && r > 1,
                        "omega({v},{x},{b}) inapplicable outside the exception"
                    );
                }
            }
        }
    }

    #[test]
    fn tail_curl_examples() {
        let r = tail_curl(25, 7, 17).unwrap();
        assert!(r.verify(&ms![(1, 7), (7, 17)]).passed());
        assert!(r.is_standard());
        // The rewired route reproduces the figure path exactly.
        let r = tail_curl_rewired(25, 7, 17).unwrap();
        assert_eq!(
            r.path(),
            &[0, 7, 14, 21, 22, 15, 8, 1, 2, 9, 16, 23, 24, 17, 10, 3, 4, 11, 18, 19, 20, 13, 6, 5, 12]
        );

        let r = tail_curl(12, 7, 4).unwrap();
        assert!(r.verify(&ms![(1, 7), (7, 4)]).passed());
        let r = tail_curl_rewired(12, 7, 4).unwrap();
        assert_eq!(r.path(), &[0, 7, 6, 5, 4, 11, 10, 3, 2, 1, 8, 9]);

        let r = tail_curl_rewired(22, 7, 14).unwrap();
        assert_eq!(
            r.path(),
            &[0, 7, 14, 21, 20, 13, 6, 5, 12, 19, 18, 11, 4, 3, 10, 17, 16, 15, 8, 1, 2, 9]
        );
        let r = tail_curl(29, 8, 20).unwrap();
        assert!(r.verify(&ms![(1, 8), (8, 20)]).passed());

        let r = tail_curl(8, 7, 0).unwrap();
        assert_eq!(r.path(), &[0, 1, 2, 3, 4, 5, 6, 7]);
    }

    #[test]
    fn grow_at_on_tail_curl_constructions() {
        // {1^7, 7^16} is 7-growable at m = 17.
        let r = tail_curl(24, 7, 16).unwrap();
        let g = crate::transform::grow_at(&r, 7, 17).unwrap();
        assert!(g.verify(&ms![(1, 7), (7, 23)]).passed());
        // {1^7, 7^14} (rewired form) is 7-growable at m = 6.
        let r = tail_curl_rewired(22, 7, 14).unwrap();
        let g = crate::transform::grow_at(&r, 7, 6).unwrap();
        assert!(g.verify(&ms![(1, 7), (7, 21)]).passed());
    }
}

//! Trapezoid paths: two-row partial paths realizing `{1^s, (t-2)^b, t^c}`,
//! built from the all-`(t-2)` base by successive β-moves. These are the
//! interchange widgets behind the `{1, y-2, y}` constructions.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::moves::{beta_apply, BetaDirection};

/// Build on a virtual top row `tv >= s+2` so the two rows and the β-move
/// patterns stay disjoint; callers shift the top row down afterwards.
fn theta_virtual(s: usize, tv: usize, b: usize, c: usize) -> Result<Vec<usize>> {
    if s < 3 || s % 2 == 0 {
        return Err(Error::Inapplicable("theta needs odd s >= 3"));
    }
    if b + c != s - 1 {
        return Err(Error::SizeMismatch { expected: s - 1, got: b + c });
    }
    debug_assert!(tv >= s + 2);
    let mut path = Vec::with_capacity(2 * s);
    path.push(0);
    let mut i = 0;
    while i + 3 <= s {
        path.extend_from_slice(&[i + 1, i + 2, tv + i, tv + i + 1]);
        i += 2;
    }
    path.push(s);
    // β-moves from the top block down: first form at even pivots
    // s-1, s-3, ..., then second form at odd pivots s-2, s-4, ...
    let blocks = (s - 1) / 2;
    let first_moves = c.min(blocks);
    for k in 0..first_moves {
        let j = s - 1 - 2 * k;
        path = beta_apply(&path, tv, BetaDirection::TowardY, j)?;
    }
    for k in 0..c - first_moves {
        let j = s - 2 - 2 * k;
        path = beta_apply(&path, tv, BetaDirection::TowardY, j)?;
    }
    Ok(path)
}

fn shift_top(path: &mut [usize], tv: usize, t: usize) {
    let shift = tv - t;
    if shift == 0 {
        return;
    }
    for u in path.iter_mut() {
        if *u >= tv {
            *u -= shift;
        }
    }
}

/// The isosceles trapezoid `Θ_{s,t,b,c}`: a path on
/// `{0..=s} ∪ {t..=s+t-2}` from 0 to `s` realizing `{1^s, (t-2)^b, t^c}`,
/// carrying the 1-edges `(t+i, t+i+1)` for even `i <= s-3`.
///
/// Requires odd `s >= 3`, `b + c = s - 1` and `t > s`.
pub fn theta(s: usize, t: usize, b: usize, c: usize) -> Result<Vec<usize>> {
    if t < s + 1 {
        return Err(Error::Inapplicable("theta needs t > s"));
    }
    let tv = t.max(s + 2);
    let mut path = theta_virtual(s, tv, b, c)?;
    shift_top(&mut path, tv, t);
    Ok(path)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrimEnd {
    /// Drop the final vertex `s` (needs `c >= 1`).
    High,
    /// Drop the first vertex 0 (needs `b >= 1`).
    Low,
}

/// The right trapezoid `Θ'`: `theta(s,t,b,c)` with one terminal 1-edge
/// removed. With `TrimEnd::High` the result runs from 0 to `s-1` on
/// `{0..=s-1} ∪ {t..=s+t-2}` and realizes `{1^(s-1), (t-2)^b, t^c}`.
/// Because the vertex `s` is gone, `t = s` is allowed.
pub fn theta_prime(s: usize, t: usize, b: usize, c: usize, end: TrimEnd) -> Result<Vec<usize>> {
    if b == 0 || c == 0 {
        return Err(Error::Inapplicable("theta_prime needs b, c > 0"));
    }
    match end {
        TrimEnd::High => trim_high(s, t, b, c),
        TrimEnd::Low => {
            if t == s {
                return Err(Error::Inapplicable("low trim keeps the vertex s"));
            }
            let tv = t.max(s + 2);
            let mut path = theta_virtual(s, tv, b, c)?;
            let first = path.remove(0);
            debug_assert_eq!(first, 0);
            debug_assert_eq!(path[0], 1);
            shift_top(&mut path, tv, t);
            Ok(path)
        }
    }
}

/// High-trimmed trapezoid with the relaxed precondition `c >= 1` only
/// (`b = 0` gives the all-`t` slants). The assembly internals lean on
/// this; the public [`theta_prime`] keeps the `b, c > 0` contract.
pub(crate) fn trim_high(s: usize, t: usize, b: usize, c: usize) -> Result<Vec<usize>> {
    if c == 0 {
        return Err(Error::Inapplicable("high trim needs c >= 1"));
    }
    if t < s {
        return Err(Error::Inapplicable("trapezoid needs t >= s"));
    }
    let tv = t.max(s + 2);
    let mut path = theta_virtual(s, tv, b, c)?;
    let last = path.pop().unwrap();
    debug_assert_eq!(last, s);
    debug_assert_eq!(*path.last().unwrap(), s - 1);
    shift_top(&mut path, tv, t);
    Ok(path)
}

/// The mirrored right trapezoid, slanting the other way: a path on
/// `{0..=S} ∪ {t..=S+t-1}` from `S` to 0 realizing
/// `{1^S, (t+1)^b, (t-1)^c}`, with the same top 1-edges as `Θ'`.
///
/// Mirroring maps bottom `u` to `S-u` and top `u` to `2t+S-1-u`; because
/// the bottom row has one more vertex than the top, the two slant lengths
/// `t-2, t` become `t+1, t-1`. `b = 0` is allowed.
pub fn theta_prime_mirror(s_minus_1: usize, t: usize, b: usize, c: usize) -> Result<Vec<usize>> {
    let s = s_minus_1 + 1;
    let path = trim_high(s, t, b, c)?;
    let top_sum = 2 * t + s_minus_1 - 1;
    Ok(path
        .into_iter()
        .map(|u| if u >= t { top_sum - u } else { s_minus_1 - u })
        .collect())
}

/// The rectangle `Θ''`: `theta(s,t,b,c)` with a 1-edge removed from each
/// end, relabeled down by one. Runs from 0 to `s-2` on
/// `{0..=s-2} ∪ {t-1..=s+t-3}` and realizes `{1^(s-2), (t-2)^b, t^c}`.
pub fn theta_double(s: usize, t: usize, b: usize, c: usize) -> Result<Vec<usize>> {
    if b == 0 || c == 0 {
        return Err(Error::Inapplicable("theta_double needs b, c > 0"));
    }
    if t < s {
        return Err(Error::Inapplicable("theta_double needs t >= s"));
    }
    let tv = t.max(s + 2);
    let mut path = theta_virtual(s, tv, b, c)?;
    let last = path.pop().unwrap();
    debug_assert_eq!(last, s);
    let first = path.remove(0);
    debug_assert_eq!(first, 0);
    shift_top(&mut path, tv, t);
    for u in path.iter_mut() {
        *u -= 1;
    }
    Ok(path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ms;
    use crate::realization::lengths_of;
    use alloc::vec;

    #[test]
    fn theta_examples() {
        assert_eq!(theta(3, 5, 2, 0).unwrap(), vec![0, 1, 2, 5, 6, 3]);
        assert_eq!(theta(3, 5, 0, 2).unwrap(), vec![0, 5, 6, 1, 2, 3]);
        // First pattern of the s=9 figure.
        let t = 11;
        assert_eq!(
            theta(9, t, 8, 0).unwrap(),
            vec![0, 1, 2, t, t + 1, 3, 4, t + 2, t + 3, 5, 6, t + 4, t + 5, 7, 8, t + 6, t + 7, 9]
        );
    }

    #[test]
    fn theta_terminal_edges() {
        // The first edge is a 1-edge except when b = 0; the final edge is a
        // 1-edge except when c = 0.
        for s in [3usize, 5, 7, 9] {
            for t in [s + 1, s + 3] {
                for c in 0..s {
                    let b = s - 1 - c;
                    let p = theta(s, t, b, c).unwrap();
                    assert_eq!(p[0].abs_diff(p[1]) == 1, b != 0, "s={s} t={t} c={c}");
                    let n = p.len();
                    assert_eq!(p[n - 2].abs_diff(p[n - 1]) == 1, c != 0);
                }
            }
        }
    }

    #[test]
    fn theta_prime_example() {
        let p = theta_prime(3, 5, 1, 1, TrimEnd::High).unwrap();
        assert_eq!(p, vec![0, 1, 6, 5, 2]);
        assert_eq!(lengths_of(&p), ms![(1, 2), (3, 1), (5, 1)]);
        assert!(theta_prime(3, 5, 2, 0, TrimEnd::High).is_err());
        // Contiguous rows: t = s.
        let p = theta_prime(5, 5, 2, 2, TrimEnd::High).unwrap();
        assert_eq!(lengths_of(&p), ms![(1, 4), (3, 2), (5, 2)]);
        let mut sorted = p.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, (0..=8).collect::<Vec<_>>());
    }

    #[test]
    fn theta_prime_mirror_lengths() {
        // Mirror realizes {1^S, (t+1)^b, (t-1)^c} from S to 0.
        for (sm1, t, b, c) in [(4usize, 8usize, 2usize, 2usize), (6, 8, 3, 3), (6, 7, 5, 1)] {
            let p = theta_prime_mirror(sm1, t, b, c).unwrap();
            assert_eq!(p[0], sm1);
            assert_eq!(*p.last().unwrap(), 0);
            let mut want = ms![(1, sm1)];
            want.insert(t + 1, b);
            want.insert(t - 1, c);
            assert_eq!(lengths_of(&p), want);
            // Same top 1-edges as the unmirrored path.
            for i in (0..=sm1.saturating_sub(2)).step_by(2) {
                assert!(
                    p.windows(2)
                        .any(|w| w[0].min(w[1]) == t + i && w[0].max(w[1]) == t + i + 1),
                    "missing 1-edge ({},{})",
                    t + i,
                    t + i + 1
                );
            }
        }
    }

    #[test]
    fn theta_double_example() {
        let p = theta_double(5, 7, 2, 2).unwrap();
        assert_eq!(p[0], 0);
        assert_eq!(*p.last().unwrap(), 3);
        assert_eq!(p.len(), 8);
        assert_eq!(lengths_of(&p), ms![(1, 3), (5, 2), (7, 2)]);
    }
}

//! Constructions for support `{1, y-2, y}`: the small-`b`-and-`c`,
//! small-`b` and small-`c` families built from trapezoid paths, and the
//! `a >= y` dispatcher.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::fauxset::{omega, tail_curl};
use crate::k2_table::{self, SpecialGrowth};
use crate::multiset::LengthMultiset;
use crate::oracle::{self, Mode, Search};

const FALLBACK_BUDGET: u64 = 8_000_000;
use crate::pair::{perfect_two, perfect_two_split};
use crate::realization::Realization;
use crate::transform::{concat, grow_at, grow_cy, prepend_ones, replace_one_edge};
use crate::trapezoid::{theta, theta_double, theta_prime_mirror, trim_high};

fn k2_multiset(y: usize, a: usize, b: usize, c: usize) -> LengthMultiset {
    let mut m = LengthMultiset::new();
    if a > 0 {
        m.insert(1, a);
    }
    if b > 0 {
        m.insert(y - 2, b);
    }
    if c > 0 {
        m.insert(y, c);
    }
    m
}

/// Verify a raw path against `{1^(v-1-b-c), (y-2)^b, y^c}` and wrap it.
fn certify(y: usize, b: usize, c: usize, path: Vec<usize>) -> Result<Realization> {
    let v = path.len();
    let a = v - 1 - b - c;
    Realization::verified(v, path, &k2_multiset(y, a, b, c))
}

fn reversed(mut path: Vec<usize>) -> Vec<usize> {
    path.reverse();
    path
}

/// Grow `times` times by `step`-edges via `grow_at`, finding a workable
/// standardness-preserving anchor on the first round and keeping it
/// (growing preserves growability at the same anchor).
fn grow_at_times(
    mut r: Realization,
    step: usize,
    times: usize,
    hint: Option<usize>,
) -> Result<Realization> {
    if times == 0 {
        return Ok(r);
    }
    let try_grow = |r: &Realization, m: usize| -> Option<Realization> {
        grow_at(r, step, m)
            .ok()
            .filter(|g| g.is_standard() || !r.is_standard())
    };
    let mut anchor = None;
    if let Some(m) = hint {
        if let Some(g) = try_grow(&r, m) {
            r = g;
            anchor = Some(m);
        }
    }
    if anchor.is_none() {
        for m in (step - 1..r.v()).rev() {
            if let Some(g) = try_grow(&r, m) {
                r = g;
                anchor = Some(m);
                break;
            }
        }
    }
    let m = anchor.ok_or(Error::NotGrowable { m: step })?;
    for _ in 1..times {
        r = grow_at(&r, step, m)?;
        if !r.is_standard() {
            return Err(Error::NotStandard);
        }
    }
    Ok(r)
}

/// Extend a type-`C_step` base by `fulls` full growths and one partial
/// growth of `partial` (even) `step`-edges.
fn grow_cy_times(
    mut r: Realization,
    step: usize,
    fulls: usize,
    partial: usize,
) -> Result<Realization> {
    for _ in 0..fulls {
        r = grow_cy(&r, step, step)?;
    }
    if partial > 0 {
        r = grow_cy(&r, step, partial)?;
    }
    Ok(r)
}

fn ensure_type_cy(r: Realization, y: usize) -> Result<Realization> {
    if r.is_type_cy(y) {
        Ok(r)
    } else {
        Err(Error::VerifyFailed(alloc::format!(
            "constructed base is not of type C_{y}"
        )))
    }
}

/// Standard realization of `{1^(y-1), (y-2)^b, y^c}` for `b + c < y`
/// (the `c = 1`, `b + c = y - 1` subsidiary produces `a = y - 3`).
pub fn small_bc(y: usize, b: usize, c: usize) -> Result<Realization> {
    if y < 4 || b + c >= y {
        return Err(Error::Inapplicable("small_bc needs b + c < y"));
    }
    if b == 0 && c == 0 {
        return certify(y, 0, 0, (0..y).collect());
    }
    if c == 0 {
        // ω-construction for {1^(y-3), (y-2)^b} plus two prepended 1-edges.
        let base = omega(y - 2 + b, y - 2, b)?;
        let r = prepend_ones(&base, 2)?;
        return certify(y, b, 0, r.into_path());
    }
    if b == 0 {
        return omega(y + c, y, c);
    }
    if b + c < y - 1 || (b + c == y - 1 && y % 2 == 0) {
        if (b + c) % 2 == 0 {
            // (Θ_(b+c+1,y,b,c), b+c+2, …, y-1)
            let mut path = theta(b + c + 1, y, b, c)?;
            path.extend(b + c + 2..=y - 1);
            return certify(y, b, c, path);
        }
        // (Θ_(b+c,y,b,c-1) + 1, b+c+2, …, y, 0), reversed.
        let mut path: Vec<usize> = theta(b + c, y, b, c - 1)?.iter().map(|u| u + 1).collect();
        path.extend(b + c + 2..=y);
        path.push(0);
        return certify(y, b, c, reversed(path));
    }
    // b + c = y - 1 with y odd.
    if c == 1 {
        // (y-1, reverse(Θ'ᴹ_(y-3,y-1) + 1), 0), reversed; a = y - 3.
        let piece = theta_prime_mirror(y - 3, y - 1, 1, y - 4)?;
        let mut path = alloc::vec![y - 1];
        path.extend(piece.iter().rev().map(|u| u + 1));
        path.push(0);
        return certify(y, b, c, reversed(path));
    }
    // (y+1, 1, Θ_(y-2,y,b,c-2) + 2, 0), reversed.
    let mut path = alloc::vec![y + 1, 1];
    path.extend(theta(y - 2, y, b, c - 2)?.iter().map(|u| u + 2));
    path.push(0);
    certify(y, b, c, reversed(path))
}

/// Standard realization of `{1^a, (y-2)^b, y^c}` with `a <= y`, for
/// `0 < b <= y-1` and `b + c >= y`; `c` is unbounded (the type-`C_y` and
/// growth machinery absorbs it).
pub fn small_b(y: usize, b: usize, c: usize) -> Result<Realization> {
    if y < 4 || b == 0 || b > y - 1 || c == 0 || b + c < y {
        return Err(Error::Inapplicable("small_b needs 0 < b <= y-1 and b+c >= y"));
    }
    let r = (b + c) % y;
    let q = (b + c) / y;
    if y == 4 || (y == 5 && r % 2 == 1) || (y == 7 && r % 2 == 1 && r > 1) {
        return small_b_special(y, b, c, r, q);
    }
    if y % 2 == 0 {
        if r % 2 == 0 {
            let base = small_b_base_even(y, b, y - b)?;
            grow_cy_times(base, y, q - 1, r)
        } else {
            let base = small_b_base_even_shifted(y, b, y + 1 - b)?;
            grow_cy_times(base, y, q - 1, r - 1)
        }
    } else if r % 2 == 0 {
        let base = small_b_base_odd(y, b, y - b)?;
        grow_cy_times(base, y, q - 1, r)
    } else if r == 1 {
        let base = small_b_base_4a(y, b, y + 1 - b)?;
        grow_at_times(base, y, q - 1, None)
    } else {
        let (base, hint) = small_b_base_4b(y, b, y + 3 - b)?;
        let grown = add_top_y_pairs(base, y, b, (r - 3) / 2)?;
        grow_at_times(grown, y, q - 1, Some(hint))
    }
}

/// Replace `k` of the 1-edges `(v0-y+2j, v0-y+2j+1)` with the merlon
/// through the fresh pair `(v0+2j, v0+2j+1)`, each adding two `y`-edges.
fn add_top_y_pairs(r: Realization, y: usize, b: usize, k: usize) -> Result<Realization> {
    if k == 0 {
        return Ok(r);
    }
    let v0 = r.v();
    let c_now = r.lengths().count(y);
    let mut path = r.into_path();
    for j in 0..k {
        replace_one_edge(&mut path, v0 - y + 2 * j, v0 + 2 * j)?;
    }
    certify(y, b, c_now + 2 * k, path)
}

/// Case 1 of the small-`b` family (`y` and `r` even): type-`C_y` bases
/// with `b + c0 = y` in `K_2y`.
fn small_b_base_even(y: usize, b: usize, c0: usize) -> Result<Realization> {
    let path = if b <= y - 3 {
        // (Θ'_(y-2,y,b,c0-2), 2y-2, 2y-1, y-1)
        let mut path = trim_high(y - 1, y, b, c0 - 2)?;
        path.extend_from_slice(&[2 * y - 2, 2 * y - 1, y - 1]);
        path
    } else {
        // (0, y-2, 2y-4, 2y-3, 2y-2, 2y-1, y-1, reverse(Θ'ᴹ + 1))
        let piece = theta_prime_mirror(y - 4, y - 1, c0 - 1, b - 3)?;
        let mut path = alloc::vec![0, y - 2, 2 * y - 4, 2 * y - 3, 2 * y - 2, 2 * y - 1, y - 1];
        path.extend(piece.iter().rev().map(|u| u + 1));
        path
    };
    ensure_type_cy(certify(y, b, c0, path)?, y)
}

/// Case 2 (`y` even, `r` odd): translate the case-1 shapes up by one and
/// close with an edge to 0; `b + c0 = y + 1` in `K_(2y+1)`.
fn small_b_base_even_shifted(y: usize, b: usize, c0: usize) -> Result<Realization> {
    let path = if b <= y - 3 {
        // (Θ'_(y-2,y,b,c0-3) + 1, 2y-1, 2y, y, 0), reversed
        let mut path: Vec<usize> =
            trim_high(y - 1, y, b, c0 - 3)?.iter().map(|u| u + 1).collect();
        path.extend_from_slice(&[2 * y - 1, 2 * y, y, 0]);
        reversed(path)
    } else if b >= 5 {
        // (1, y-1, 2y-3, 2y-2, 2y-1, 2y, y, reverse(Θ'ᴹ + 2), 0), reversed
        let piece = theta_prime_mirror(y - 4, y - 1, c0 - 1, b - 4)?;
        let mut path = alloc::vec![1, y - 1, 2 * y - 3, 2 * y - 2, 2 * y - 1, 2 * y, y];
        path.extend(piece.iter().rev().map(|u| u + 2));
        path.push(0);
        reversed(path)
    } else {
        // y = 6, b = 4: outside both shapes; the dispatcher reroutes.
        return Err(Error::Inapplicable("no case-2 construction at this b"));
    };
    ensure_type_cy(certify(y, b, c0, path)?, y)
}

/// Case 3 (`y` odd, `r` even): type-`C_y` bases with `b + c0 = y` in
/// `K_2y`.
fn small_b_base_odd(y: usize, b: usize, c0: usize) -> Result<Realization> {
    let path = if b <= y - 2 {
        // (Θ'_(y-1,y,b,c0-1), 2y-1)
        let mut path = trim_high(y, y, b, c0 - 1)?;
        path.push(2 * y - 1);
        path
    } else {
        // (0, Θ'ᴹ + 1 forward, y-1, 2y-3, 2y-2, 2y-1)
        let piece = theta_prime_mirror(y - 3, y - 1, c0, b - 3)?;
        let mut path = alloc::vec![0];
        path.extend(piece.iter().map(|u| u + 1));
        path.extend_from_slice(&[y - 1, 2 * y - 3, 2 * y - 2, 2 * y - 1]);
        path
    };
    ensure_type_cy(certify(y, b, c0, path)?, y)
}

/// Case 4a (`y` odd, `r = 1`): `y`-growable bases with `b + c0 = y + 1`.
fn small_b_base_4a(y: usize, b: usize, c0: usize) -> Result<Realization> {
    let path = if b + 4 <= y {
        // (y+1, 1, Θ'_(y-3,y,b,c0-4) + 2, 2y-1, 2y, y, 0), reversed
        let mut path = alloc::vec![y + 1, 1];
        path.extend(trim_high(y - 2, y, b, c0 - 4)?.iter().map(|u| u + 2));
        path.extend_from_slice(&[2 * y - 1, 2 * y, y, 0]);
        reversed(path)
    } else if b <= y - 2 {
        // (y-1, Θ''_(y-4,y-1,b-2,c0-2) + 1, 2y-3, 2y-2, y-2, 0), reversed
        let mut path = alloc::vec![y - 1];
        path.extend(theta_double(y - 2, y, b - 2, c0 - 2)?.iter().map(|u| u + 1));
        path.extend_from_slice(&[2 * y - 3, 2 * y - 2, y - 2, 0]);
        reversed(path)
    } else {
        // b = y-1 (c0 = 2) and the bonus b = y (c0 = 1): a fixed
        // single-`y`-edge right-trapezoid tail.
        let piece = theta_prime_mirror(y - 5, y - 1, 1, y - 6)?;
        let mut path = if b == y - 1 {
            alloc::vec![y, 2, 1, y - 1, 2 * y - 3, 2 * y - 2, 2 * y - 1, 2 * y, 2 * y + 1, y + 1]
        } else {
            alloc::vec![y, 2, 1, y - 1, 2 * y - 3, 2 * y - 2, 2 * y - 1, y + 1]
        };
        path.extend(piece.iter().rev().map(|u| u + 3));
        path.push(0);
        reversed(path)
    };
    certify(y, b, c0, path)
}

/// Case 4b (`y` odd, `r` odd `> 1`): `y`-growable bases with
/// `b + c0 = y + 3`, carrying replaceable top 1-edges. Returns the base
/// and its growth anchor.
fn small_b_base_4b(y: usize, b: usize, c0: usize) -> Result<(Realization, usize)> {
    if y < 9 {
        return Err(Error::Inapplicable("the 4b constructions need y >= 9"));
    }
    let ty = 2 * y;
    if b <= y - 6 {
        // Growable at 2y.
        let mut path = alloc::vec![y + 2, 2, 1, y + 1, ty + 1, ty + 2, ty + 3, y + 3, 3];
        path.extend(trim_high(y - 4, y, b, c0 - 8)?.iter().map(|u| u + 4));
        path.extend_from_slice(&[ty - 1, ty, y, 0]);
        return Ok((certify(y, b, c0, reversed(path))?, ty));
    }
    if b <= y - 4 {
        // Growable at 2y.
        let piece = theta_prime_mirror(y - 7, y - 1, c0 - 7, b - 3)?;
        let mut path = alloc::vec![y + 2, 4, 3, 2, 1, y + 1, ty + 1, ty + 2, ty + 3, y + 3];
        path.extend(piece.iter().rev().map(|u| u + 5));
        path.extend_from_slice(&[ty - 2, ty - 3, y - 1, ty - 1, ty, y, 0]);
        return Ok((certify(y, b, c0, reversed(path))?, ty));
    }
    if b <= y - 2 {
        // Growable at 2y-2.
        let piece = theta_prime_mirror(y - 7, y - 1, c0 - 5, b - 5)?;
        let mut path = alloc::vec![y, 2, 1, y - 1, ty - 1, ty, ty + 1, y + 1];
        path.extend(piece.iter().rev().map(|u| u + 3));
        path.extend_from_slice(&[ty - 4, ty - 5, y - 3, ty - 3, ty - 2, y - 2, 0]);
        return Ok((certify(y, b, c0, reversed(path))?, ty - 2));
    }
    // b in {y-1, y}; growable at 2y-1.
    let piece = theta_prime_mirror(y - 7, y - 1, c0 - 3, b - 7)?;
    let mut path = alloc::vec![
        y, 2, 1, y - 1, ty - 3, ty - 2, ty - 1, ty, ty + 1, y + 1, 3, 4, y + 2, ty + 2,
        ty + 3, y + 3,
    ];
    path.extend(piece.iter().rev().map(|u| u + 5));
    path.push(0);
    Ok((certify(y, b, c0, reversed(path))?, ty - 1))
}

/// Standard realization of `{1^a, (y-2)^b, y^c}` with `a <= y`, for
/// `0 < c <= y-2` and `b + c >= y`; `b` is unbounded (type-`C_(y-2)` and
/// `(y-2)`-growth absorb it).
pub fn small_c(y: usize, b: usize, c: usize) -> Result<Realization> {
    if y < 5 || c == 0 || b == 0 || b + c < y - 2 {
        return Err(Error::Inapplicable("small_c needs 0 < c and b+c >= y-2"));
    }
    let x2 = y - 2;
    let r = (b + c) % x2;
    let q = (b + c) / x2;
    // The shifted even-y case reaches c = y-1; everything else caps at y-2.
    let shifted_even = y % 2 == 0 && r % 2 == 1;
    if c > y - 2 && !(shifted_even && c == y - 1) {
        return Err(Error::Inapplicable("small_c needs c <= y-2"));
    }
    if y == 7 && r % 2 == 1 && r > 1 && (2..=3).contains(&c) {
        return small_c_special(y, b, c, r, q);
    }
    if y % 2 == 0 {
        if r % 2 == 0 {
            let base = ensure_type_cy(certify(y, x2 - c, c, theta(y - 1, y, x2 - c, c)?)?, x2)?;
            grow_cy_times(base, x2, q - 1, r)
        } else {
            // Translate the case-1 shape up by one, close to 0, reverse.
            let mut path: Vec<usize> =
                theta(y - 1, y, y - 1 - c, c - 1)?.iter().map(|u| u + 1).collect();
            path.push(0);
            let base = ensure_type_cy(certify(y, y - 1 - c, c, reversed(path))?, x2)?;
            grow_cy_times(base, x2, q - 1, r - 1)
        }
    } else if r % 2 == 0 {
        if c <= y - 3 {
            // (Θ_(y-2,y,·,c), y-1, 2y-3): type C_(y-2) ending at v-1.
            let mut path = theta(y - 2, y, x2 - c - 1, c)?;
            path.extend_from_slice(&[y - 1, 2 * y - 3]);
            let base = ensure_type_cy(certify(y, x2 - c, c, path)?, x2)?;
            grow_cy_times(base, x2, q - 1, r)
        } else {
            small_c_merlon_patch(y, b, r, q)
        }
    } else if r == 1 {
        let b0 = y - 1 - c;
        let path = if c + 4 <= y {
            // (y-1, reverse(Θ'ᴹ_(y-3,y-1) + 1), 0), reversed
            let piece = theta_prime_mirror(y - 3, y - 1, c, b0 - 2)?;
            let mut path = alloc::vec![y - 1];
            path.extend(piece.iter().rev().map(|u| u + 1));
            path.push(0);
            reversed(path)
        } else {
            // (y+1, 1, Θ_(y-2,y,b0,c-2) + 2, 0), reversed
            let mut path = alloc::vec![y + 1, 1];
            path.extend(theta(y - 2, y, b0, c - 2)?.iter().map(|u| u + 2));
            path.push(0);
            reversed(path)
        };
        let base = certify(y, b0, c, path)?;
        grow_at_times(base, x2, q - 1, Some(2 * y - 4))
    } else {
        // r odd > 1: (y-2)-growable bases at b0 + c = y + 1 with
        // replaceable 1-edges (y+i, y+i+1).
        let b0 = y + 1 - c;
        let (path, i0) = if c + 6 <= y {
            let piece = theta_prime_mirror(y - 5, y - 1, c, b0 - 6)?;
            let mut path = alloc::vec![y, 2, 1, y - 1, 2 * y - 3, 2 * y - 2, 2 * y - 1, y + 1];
            path.extend(piece.iter().rev().map(|u| u + 3));
            path.push(0);
            (reversed(path), 2usize)
        } else if c >= 4 {
            let mut path = alloc::vec![y + 2, 2, 1, y + 1, 2 * y - 1, 2 * y, 2 * y + 1, y + 3, 3];
            path.extend(theta(y - 4, y, b0 - 2, c - 4)?.iter().map(|u| u + 4));
            path.push(0);
            (reversed(path), 4usize)
        } else {
            return Err(Error::Inapplicable("no small-c 4b construction at this c"));
        };
        let base = certify(y, b0, c, path)?;
        let v0 = base.v();
        let k = (r - 3) / 2;
        let mut path = base.into_path();
        for j in 0..k {
            // (y+i, 2y+i-2, 2y+i-1, y+i+1): two more (y-2)-edges through
            // the fresh pair.
            replace_one_edge(&mut path, y + i0 + 2 * j, v0 + 2 * j)?;
        }
        let base = certify(y, b0 + 2 * k, c, path)?;
        grow_at_times(base, x2, q - 1, Some(2 * y - 4))
    }
}

/// The `c = y-2`, even-`r` hole of the small-`c` family: build the case-3
/// base at `(r, y-2-r)`, raise `c` with `r/2` merlons through fresh top
/// pairs, then grow `b` with `(y-2)`-growth.
fn small_c_merlon_patch(y: usize, b: usize, r: usize, q: usize) -> Result<Realization> {
    let x2 = y - 2;
    if r < 2 {
        return Err(Error::Inapplicable("no base for c = y-2 with r = 0"));
    }
    let c0 = x2 - r;
    let mut path = theta(y - 2, y, r - 1, c0)?;
    path.extend_from_slice(&[y - 1, 2 * y - 3]);
    let base = certify(y, r, c0, path)?;
    let v0 = base.v();
    let mut path = base.into_path();
    for j in 0..r / 2 {
        // Merlon at (v0-y+2j, v0-y+2j+1): two more y-edges.
        replace_one_edge(&mut path, v0 - y + 2 * j, v0 + 2 * j)?;
    }
    let base = certify(y, r, x2, path)?;
    let grown = grow_at_times(base, x2, q - 1, None)?;
    certify(y, b, x2, grown.into_path())
}

/// Small-`b` cases served from the pinned specials table
/// (`y = 4` entirely; odd `r` for `y = 5`; odd `r > 1` for `y = 7`).
fn small_b_special(y: usize, b: usize, c: usize, r: usize, q: usize) -> Result<Realization> {
    let (kc, fulls, partial) = match (y, r % 2) {
        (4, 0) => (y - b, q - 1, r),
        (4, 1) => (y + 1 - b, q - 1, r - 1),
        (_, 1) => (y + r - b, q - 1, 0),
        _ => return Err(Error::Inapplicable("no special route for these parameters")),
    };
    let entry = k2_table::lookup(y, b, kc)
        .ok_or(Error::Inapplicable("no pinned special for these parameters"))?;
    let base = certify(y, b, kc, entry.path.to_vec())?;
    match entry.growth {
        SpecialGrowth::TypeCy(step) => grow_cy_times(base, step, fulls, partial),
        SpecialGrowth::GrowAt { step, m } => grow_at_times(base, step, fulls, Some(m)),
    }
    .and_then(|g| certify(y, b, c, g.into_path()))
}

/// Small-`c` cases served from the pinned table (`y = 7`, `r = 3`,
/// `c` in the gap between the two 4b shapes).
fn small_c_special(y: usize, b: usize, c: usize, r: usize, q: usize) -> Result<Realization> {
    let b0 = (y - 2) + r - c;
    let entry = k2_table::lookup(y, b0, c)
        .ok_or(Error::Inapplicable("no pinned special for these parameters"))?;
    let base = certify(y, b0, c, entry.path.to_vec())?;
    match entry.growth {
        SpecialGrowth::TypeCy(step) => grow_cy_times(base, step, q - 1, 0),
        SpecialGrowth::GrowAt { step, m } => grow_at_times(base, step, q - 1, Some(m)),
    }
    .and_then(|g| certify(y, b, c, g.into_path()))
}

/// Standard realization of `{1^a, (y-2)^b, y^c}`, guaranteed for `a >= y`
/// and attempted best-effort below.
pub fn k2_dispatch(y: usize, a: usize, b: usize, c: usize) -> Result<Realization> {
    let target = k2_multiset(y, a, b, c);
    if y < 3 {
        return Err(Error::Inapplicable("k2 needs y >= 3"));
    }
    if y == 3 {
        // y - 2 = 1: the support collapses to {1, 3}.
        let r = crate::k1::k1_dispatch(3, a + b, 0, c)?;
        return Realization::verified(r.v(), r.into_path(), &target);
    }
    let residual = k2_routes(y, a, b, c)?;
    let a0 = residual.lengths().count(1);
    if a < a0 {
        // Small instances may still be serviced exhaustively.
        let v = target.size() + 1;
        if v <= oracle::DEFAULT_CAP {
            if let Search::Found(r) = oracle::search(&target, Mode::Standard, FALLBACK_BUDGET)? {
                return Ok(r);
            }
        }
        return Err(Error::Inapplicable("too few 1-edges for the k2 constructions"));
    }
    let r = prepend_ones(&residual, a - a0)?;
    Realization::verified(r.v(), r.into_path(), &target)
}

/// Produce a standard realization of `{1^a0, (y-2)^b, y^c}` for some
/// natural `a0` at most `max(a, y)`.
fn k2_routes(y: usize, a: usize, b: usize, c: usize) -> Result<Realization> {
    if b == 0 && c == 0 {
        return Realization::verified(a + 1, (0..=a).collect(), &k2_multiset(y, a, 0, 0));
    }
    if b == 0 {
        return two_support(y, a, c);
    }
    if c == 0 {
        return two_support(y - 2, a, b);
    }
    if b + c < y {
        return small_bc(y, b, c);
    }
    if y % 2 == 1 {
        // Peel perfect {(y-2)^(y-1), y^(y-1)} blocks while both are large.
        let mut bp = b;
        let mut cp = c;
        let mut j = 0;
        while bp > y - 1 && cp > y - 2 {
            bp -= y - 1;
            cp -= y - 1;
            j += 1;
        }
        let residual = k2_residual_odd(y, a, bp, cp)?;
        if j == 0 {
            return Ok(residual);
        }
        let block = perfect_two(y - 2, y)?;
        let mut acc = block.clone();
        for _ in 1..j {
            acc = concat(&acc, &block)?;
        }
        return concat(&acc, &residual);
    }
    // Even y: fall through the direct families, then the growth reroutes.
    if b <= y - 1 {
        if let Ok(r) = small_b(y, b, c) {
            return Ok(r);
        }
    }
    if c <= y - 1 {
        if let Ok(r) = small_c(y, b, c) {
            return Ok(r);
        }
    }
    // Pull c down modulo y and regrow, else pull b down modulo y-2 and
    // regrow.
    let c0 = c % y;
    let route_a = || -> Result<Realization> {
        let base = if c0 == 0 {
            two_support(y - 2, y, b)?
        } else if b + c0 < y {
            small_bc(y, b, c0)?
        } else {
            let direct = if b <= y - 1 {
                small_b(y, b, c0)
            } else {
                Err(Error::Inapplicable("b out of small_b range"))
            };
            direct.or_else(|_| small_c(y, b, c0))?
        };
        grow_at_times(base, y, (c - c0) / y, None)
    };
    let route_b = || -> Result<Realization> {
        let b0m = b % (y - 2);
        let b0 = if b0m == 0 { y - 2 } else { b0m };
        if b0 > b {
            return Err(Error::Inapplicable("b too small to reroute"));
        }
        let base = if b0 + c < y {
            small_bc(y, b0, c)?
        } else {
            small_b(y, b0, c)?
        };
        grow_at_times(base, y - 2, (b - b0) / (y - 2), None)
    };
    route_a()
        .and_then(|r| certify(y, b, c, r.into_path()))
        .or_else(|_| route_b().and_then(|r| certify(y, b, c, r.into_path())))
}

fn k2_residual_odd(y: usize, a: usize, b: usize, c: usize) -> Result<Realization> {
    if b == 0 && c == 0 {
        return Realization::verified(a + 1, (0..=a).collect(), &k2_multiset(y, a, 0, 0));
    }
    if b == 0 {
        return two_support(y, a, c);
    }
    if c == 0 {
        return two_support(y - 2, a, b);
    }
    if b + c < y {
        return small_bc(y, b, c);
    }
    if b <= y - 1 {
        if let Ok(r) = small_b(y, b, c) {
            return Ok(r);
        }
    }
    if c <= y - 2 {
        if let Ok(r) = small_c(y, b, c) {
            return Ok(r);
        }
    }
    // Split-form peel: {(y-2)^(y+1), y^(y-3)} once, then retry.
    if b >= y + 1 && c >= y - 3 && y >= 5 {
        if let Ok((_, split)) = perfect_two_split(y - 2, y) {
            if let Ok(rest) = k2_residual_odd(y, a, b - (y + 1), c - (y - 3)) {
                return concat(&split, &rest);
            }
        }
    }
    // Oracle for small instances.
    let probe = k2_multiset(y, a.min(y), b, c);
    if probe.size() + 1 <= oracle::DEFAULT_CAP {
        if let Ok(Search::Found(r)) = oracle::search(&probe, Mode::Standard, FALLBACK_BUDGET)
        {
            return Ok(r);
        }
    }
    Err(Error::Inapplicable("k2 construction chain exhausted"))
}

/// `{1^a0, x^m}` via the ω-constructions (`a0 = x-1`, or `x` through the
/// tail curl when the caller can afford it).
fn two_support(x: usize, a: usize, m: usize) -> Result<Realization> {
    match omega(x + m, x, m) {
        Ok(r) => Ok(r),
        Err(_) if a >= x => tail_curl(x + m + 1, x, m),
        Err(e) => Err(e),
    }
}

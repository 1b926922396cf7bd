//! Core perfect realizations for two-length supports and the spanning
//! linear forests built from them.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::fauxset::fauxset;
use crate::ms;
use crate::multiset::LengthMultiset;
use crate::realization::Realization;
use crate::transform::bridge;

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Perfect realization of `{x^(y-1), y^(x+1)}` in `K_(x+y+1)` for coprime
/// `x, y > 1` (either order of magnitude).
///
/// Full fauxsets with respect to `y` joined by `x`-edge bridges; when
/// `y ∤ v` the fauxsets are taken in the order `0, t, 2t, …` in `Z_y`
/// with `t = qy - x`.
pub fn perfect_two(x: usize, y: usize) -> Result<Realization> {
    if x < 2 || y < 2 {
        return Err(Error::Inapplicable("perfect_two needs x, y > 1"));
    }
    if gcd(x, y) != 1 {
        return Err(Error::NotCoprime { x, y });
    }
    let v = x + y + 1;
    let r = v % y;
    let order: Vec<usize> = if r == 0 {
        (0..y).collect()
    } else {
        let t = y - r + 1;
        (0..y).map(|i| (i * t) % y).collect()
    };
    let traversals: Vec<Vec<usize>> = order.iter().map(|&g| fauxset(v, y, g)).collect();
    let path = bridge(&traversals, &alloc::vec![x; y - 1])?;
    let expected = ms![(x, y - 1), (y, x + 1)];
    let r = Realization::verified(v, path, &expected)?;
    if !r.is_perfect() {
        return Err(Error::NotPerfect);
    }
    Ok(r)
}

/// Interior reversal `[p_0, p_(v-2), …, p_1, p_(v-1)]`, exchanging two
/// `y`-edges for two `x`-edges at the ends.
pub fn interior_reversal(r: &Realization) -> Realization {
    let p = r.path();
    let v = r.v();
    let mut out = Vec::with_capacity(v);
    out.push(p[0]);
    out.extend(p[1..v - 1].iter().rev());
    out.push(p[v - 1]);
    Realization::new(v, out).expect("interior reversal keeps the permutation")
}

/// The split form: for `1 < x < y` coprime, perfect realizations of
/// `{x^(y-1), y^(x+1)}` and `{x^(y+1), y^(x-1)}` (the second is the
/// interior reversal of the first).
pub fn perfect_two_split(x: usize, y: usize) -> Result<(Realization, Realization)> {
    if !(1 < x && x < y) {
        return Err(Error::Inapplicable("split form needs 1 < x < y"));
    }
    let first = perfect_two(x, y)?;
    let second = interior_reversal(&first);
    let rep = second.verify(&ms![(x, y + 1), (y, x - 1)]);
    if !(rep.passed() && rep.perfect) {
        return Err(Error::VerifyFailed(alloc::format!(
            "interior reversal realized {}",
            rep.realized
        )));
    }
    Ok((first, second))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Which {
    First,
    Second,
}

/// Final-edge-removed forms: standard realizations of `{x^(y-1), y^x}`
/// and `{x^y, y^(x-1)}` for `1 < x < y` coprime.
pub fn standard_two(x: usize, y: usize, which: Which) -> Result<Realization> {
    let (first, second) = perfect_two_split(x, y)?;
    let (donor, expected) = match which {
        Which::First => (first, ms![(x, y - 1), (y, x)]),
        Which::Second => (second, ms![(x, y), (y, x - 1)]),
    };
    let mut path = donor.into_path();
    path.pop();
    let v = path.len();
    let r = Realization::verified(v, path, &expected)?;
    debug_assert!(r.is_standard() && !r.is_perfect());
    Ok(r)
}

fn permutations(items: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permutations(items, k + 1, f);
        items.swap(k, i);
    }
}

/// A spanning linear forest of `K_v`: vertex-disjoint paths covering all
/// labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearForest {
    pub v: usize,
    pub paths: Vec<Vec<usize>>,
}

impl LinearForest {
    pub fn k(&self) -> usize {
        self.paths.len()
    }

    pub fn lengths(&self) -> LengthMultiset {
        let mut m = LengthMultiset::new();
        for p in &self.paths {
            for w in p.windows(2) {
                m.insert(w[0].abs_diff(w[1]), 1);
            }
        }
        m
    }
}

/// The forest `Γ^(j)_(k,y)` in `K_v`, `v = j(2y-k) + k`: `k` paths
/// realizing `{(y-k)^(j(y-k)), y^(jy)}`, each running from one end in
/// `{0..k}` to one end in `{v-k..v}`.
pub fn gamma_forest(k: usize, y: usize, j: usize) -> Result<LinearForest> {
    if k == 0 || k >= y || j == 0 {
        return Err(Error::Inapplicable("gamma_forest needs 0 < k < y and j >= 1"));
    }
    let v = j * (2 * y - k) + k;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for level in 0..j {
        let off = level * (2 * y - k);
        for i in 0..y {
            edges.push((off + i, off + y + i));
        }
        for i in 0..y - k {
            edges.push((off + k + i, off + y + i));
        }
    }
    // Walk out the k paths from the lower ends 0..k.
    let mut adj: Vec<Vec<usize>> = alloc::vec![Vec::new(); v];
    for &(a, b) in &edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut paths = Vec::with_capacity(k);
    let mut seen = alloc::vec![false; v];
    for start in 0..k {
        let mut p = alloc::vec![start];
        seen[start] = true;
        let mut prev = usize::MAX;
        let mut cur = start;
        while let Some(&next) = adj[cur].iter().find(|&&n| n != prev) {
            prev = cur;
            cur = next;
            if seen[cur] {
                return Err(Error::VerifyFailed(alloc::format!(
                    "forest walk revisited {cur}"
                )));
            }
            seen[cur] = true;
            p.push(cur);
        }
        paths.push(p);
    }
    if seen.iter().any(|&s| !s) {
        return Err(Error::VerifyFailed(alloc::string::String::from(
            "forest paths do not cover all vertices",
        )));
    }
    let forest = LinearForest { v, paths };
    let expected = ms![(y - k, j * (y - k)), (y, j * y)];
    if forest.lengths() != expected {
        return Err(Error::VerifyFailed(alloc::format!(
            "forest realizes {}",
            forest.lengths()
        )));
    }
    Ok(forest)
}

/// Standard realization of `{1^(k-1), (y-k)^(j(y-k)), y^(jy)}` obtained by
/// 1-edge bridging of the forest's paths: the natural order when the upper
/// ends line up (always when `k | y`), otherwise the case order
/// `p_0 ⊎ p_(k-1) ⊎ … ⊎ p_1` for `k ∈ {2,3,4}`.
pub fn forest_realization(k: usize, y: usize, j: usize) -> Result<Realization> {
    let divisible = k >= 1 && y % k == 0 && y / k > 1;
    let small_k = (2..=4).contains(&k) && y > k + 1;
    if !(divisible || small_k) {
        return Err(Error::Inapplicable(
            "forest bridging needs k | y with m > 1, or k in {2,3,4} with y > k+1",
        ));
    }
    let forest = gamma_forest(k, y, j)?;
    let v = forest.v;
    let natural = forest
        .paths
        .iter()
        .enumerate()
        .all(|(i, p)| *p.last().unwrap() == v - k + i);
    let mut expected = ms![(y - k, j * (y - k)), (y, j * y)];
    if k > 1 {
        expected.insert(1, k - 1);
    }
    // The natural order serves the divisible case; otherwise the end
    // order is a cyclic shift and the workable bridge order depends on
    // the shift, so try the candidate orders starting from p_0.
    let mut orders: Vec<Vec<usize>> = Vec::new();
    if natural || k == 1 {
        orders.push((0..k).collect());
    }
    orders.push(core::iter::once(0).chain((1..k).rev()).collect());
    if k <= 4 {
        let mut rest: Vec<usize> = (1..k).collect();
        permutations(&mut rest, 0, &mut |perm| {
            let mut o = alloc::vec![0];
            o.extend_from_slice(perm);
            orders.push(o);
        });
    }
    let mut last_err = Error::Inapplicable("no bridge order");
    for order in orders {
        let ordered: Vec<Vec<usize>> = order.iter().map(|&i| forest.paths[i].clone()).collect();
        match bridge(&ordered, &alloc::vec![1; k - 1]) {
            Ok(path) => match Realization::verified(v, path, &expected) {
                Ok(r) if r.is_standard() => return Ok(r),
                Ok(_) => last_err = Error::NotStandard,
                Err(e) => last_err = e,
            },
            Err(e) => last_err = e,
        }
    }
    Err(last_err)
}

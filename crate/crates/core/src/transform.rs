//! The concatenation calculus and growth operators that combine small
//! realizations into large ones.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::multiset::LengthMultiset;
use crate::realization::{complement_path, translate, Realization};

/// Concatenation `g ⊕ h`: in `K_{v+w-1}`, the complement of `g` followed by
/// the translation of `h` by `v-1`, with the two vertices labeled `v-1`
/// identified. Realizes `L ∪ M`. When `g` is perfect the result starts at 0.
pub fn concat(g: &Realization, h: &Realization) -> Result<Realization> {
    if !g.is_standard() || !h.is_standard() {
        return Err(Error::NotStandard);
    }
    let v = g.v();
    let w = h.v();
    // complement(g) runs from v-1 down to v-1-g_end; reverse it so the
    // identified vertex v-1 sits at the junction.
    let mut path = complement_path(g.path(), v);
    path.reverse();
    path.extend_from_slice(&translate(h.path(), v - 1)[1..]);
    let expected = g.lengths().union(&h.lengths());
    Realization::verified(v + w - 1, path, &expected)
}

/// Prepend `s` 1-edges: `concat([0,1,…,s], h)`. Preserves standard and
/// perfect flags.
pub fn prepend_ones(h: &Realization, s: usize) -> Result<Realization> {
    if !h.is_standard() {
        return Err(Error::NotStandard);
    }
    if s == 0 {
        return Ok(h.clone());
    }
    let chain = Realization::new(s + 1, (0..=s).collect())?;
    concat(&chain, h)
}

/// Bridge concatenation of several paths. `lengths[i]` is the linear length
/// of the new edge between path `i` and path `i+1`. Each subsequent path is
/// entered at whichever end sits at the requested distance (and traversed
/// from there); no vertex is relabeled.
pub fn bridge(paths: &[Vec<usize>], lengths: &[usize]) -> Result<Vec<usize>> {
    if paths.is_empty() {
        return Err(Error::Inapplicable("bridge of zero paths"));
    }
    if lengths.len() + 1 != paths.len() {
        return Err(Error::SizeMismatch {
            expected: paths.len() - 1,
            got: lengths.len(),
        });
    }
    let mut out = paths[0].clone();
    for (i, p) in paths.iter().enumerate().skip(1) {
        let want = lengths[i - 1];
        let end = *out.last().unwrap();
        let first = *p.first().unwrap();
        let last = *p.last().unwrap();
        if end.abs_diff(first) == want {
            out.extend_from_slice(p);
        } else if end.abs_diff(last) == want {
            out.extend(p.iter().rev());
        } else {
            return Err(Error::JunctionMismatch {
                index: i - 1,
                wanted: want,
            });
        }
    }
    Ok(out)
}

/// Positions of the guaranteed type-`C_y` 1-edges `(v-j, v-j+1)`, as the
/// list of `j` values, largest first (the growth order).
fn cy_js(_v: usize, y: usize) -> Vec<usize> {
    if y % 2 == 0 {
        // j = y, y-2, ..., 2
        (1..=y / 2).map(|k| y + 2 - 2 * k).collect()
    } else {
        // j = y, y-2, ..., 3
        (0..(y - 1) / 2).map(|k| y - 2 * k).collect()
    }
}

/// Replace the 1-edge `(a, a+1)` in `path` with `(a, b, b+1, a+1)`,
/// respecting the edge's orientation in the path.
pub(crate) fn replace_one_edge(path: &mut Vec<usize>, a: usize, b: usize) -> Result<()> {
    for i in 0..path.len() - 1 {
        if path[i] == a && path[i + 1] == a + 1 {
            path.splice(i + 1..i + 1, [b, b + 1]);
            return Ok(());
        }
        if path[i] == a + 1 && path[i + 1] == a {
            path.splice(i + 1..i + 1, [b + 1, b]);
            return Ok(());
        }
    }
    Err(Error::PatternNotFound)
}

/// Growth of a type-`C_y` realization.
///
/// `extra = y` is the full growth, yielding a type-`C_y` realization of
/// `L ∪ {y^y}` in `K_{v+y}`. Even `extra < y` is the partial variant: the
/// guaranteed 1-edges are consumed starting with the largest `j`, adding
/// `extra` new `y`-edges in `K_{v+extra}`.
pub fn grow_cy(r: &Realization, y: usize, extra: usize) -> Result<Realization> {
    if extra == 0 {
        return Ok(r.clone());
    }
    if !r.is_type_cy(y) {
        return Err(Error::Inapplicable("input is not of type C_y"));
    }
    if extra != y && (extra % 2 != 0 || extra > y) {
        return Err(Error::Inapplicable("partial growth amount must be even and < y"));
    }
    let v = r.v();
    let full = extra == y;
    let mut path = r.path().to_vec();
    let js = cy_js(v, y);
    let replacements = if full { js.len() } else { extra / 2 };
    for (k, &j) in js.iter().take(replacements).enumerate() {
        // Replacement at j introduces the fresh pair (v+y-j, v+y-j+1); with
        // js in descending order that is (v+2k, v+2k+1).
        debug_assert_eq!(v + y - j, v + 2 * k);
        replace_one_edge(&mut path, v - j, v + y - j)?;
    }
    if full && y % 2 == 1 {
        // Odd y: a final y-edge from the end-vertex v-1 to v+y-1.
        if path[0] == v - 1 {
            path.reverse();
        }
        if *path.last().unwrap() != v - 1 {
            return Err(Error::Inapplicable("odd-y growth needs v-1 as an end-vertex"));
        }
        path.push(v + y - 1);
    }
    let expected = r.lengths().union(&LengthMultiset::from_pairs([(y, extra)]));
    let grown = Realization::verified(v + extra, path, &expected)?;
    if full && !grown.is_type_cy(y) {
        return Err(Error::VerifyFailed(alloc::format!(
            "full C_{y} growth lost the type"
        )));
    }
    Ok(grown)
}

/// Growth at an interior anchor `m` (`y`-growability), for
/// `y - 1 <= m < v`.
///
/// Embeds the subgraph on `{0..=m}` as-is and the subgraph on
/// `{m-y+1..v}` translated up by `y`, adds the `y`-edges
/// `(m-y+i, m+i)` for `1 <= i <= y`, and removes one copy of each
/// duplicated window edge so that a Hamiltonian path results. All
/// `2^d` removal choices are tried in lexicographic order.
pub fn grow_at(r: &Realization, y: usize, m: usize) -> Result<Realization> {
    let v = r.v();
    if m + 1 < y || m >= v {
        return Err(Error::NotGrowable { m });
    }
    let lo = m + 1 - y; // window is [lo, m]
    let mut fixed: Vec<(usize, usize)> = Vec::new();
    let mut dup: Vec<(usize, usize)> = Vec::new();
    for w in r.path().windows(2) {
        let (a, b) = (w[0].min(w[1]), w[0].max(w[1]));
        let in_low = b <= m;
        let in_high = a >= lo;
        match (in_low, in_high) {
            (true, true) => dup.push((a, b)),
            (true, false) => fixed.push((a, b)),
            (false, true) => fixed.push((a + y, b + y)),
            (false, false) => return Err(Error::NotGrowable { m }),
        }
    }
    for i in 1..=y {
        fixed.push((m + i - y, m + i));
    }
    if dup.len() > 20 {
        return Err(Error::NotGrowable { m });
    }
    let nv = v + y;
    let expected = r.lengths().union(&LengthMultiset::from_pairs([(y, y)]));
    for mask in 0u32..(1 << dup.len()) {
        let mut edges = fixed.clone();
        for (k, &(a, b)) in dup.iter().enumerate() {
            if mask & (1 << k) == 0 {
                edges.push((a, b));
            } else {
                edges.push((a + y, b + y));
            }
        }
        if let Some(path) = edges_to_path(&edges, nv) {
            let oriented = orient_like(path, r);
            if let Ok(grown) = Realization::verified(nv, oriented, &expected) {
                return Ok(grown);
            }
        }
    }
    Err(Error::NotGrowable { m })
}

/// Keep the grown path aligned with the input's orientation: start at the
/// original start label when it is still an end.
fn orient_like(mut path: Vec<usize>, r: &Realization) -> Vec<usize> {
    let want = r.first();
    if *path.last().unwrap() == want {
        path.reverse();
    }
    path
}

/// Reconstruct a path from an edge list, if the edges form one.
pub(crate) fn edges_to_path(edges: &[(usize, usize)], v: usize) -> Option<Vec<usize>> {
    if edges.len() + 1 != v {
        return None;
    }
    let mut adj: Vec<Vec<usize>> = alloc::vec![Vec::new(); v];
    for &(a, b) in edges {
        if a >= v || b >= v {
            return None;
        }
        adj[a].push(b);
        adj[b].push(a);
        if adj[a].len() > 2 || adj[b].len() > 2 {
            return None;
        }
    }
    let start = (0..v).find(|&u| adj[u].len() == 1)?;
    let mut path = Vec::with_capacity(v);
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        path.push(cur);
        let next = adj[cur].iter().copied().find(|&n| n != prev);
        match next {
            Some(n) => {
                prev = cur;
                cur = n;
            }
            None => break,
        }
        if path.len() > v {
            return None;
        }
    }
    if path.len() == v {
        Some(path)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ms;
    use alloc::vec;

    #[test]
    fn concat_two_perfect_ones() {
        let p = Realization::new(2, vec![0, 1]).unwrap();
        let c = concat(&p, &p).unwrap();
        let rep = c.verify(&ms![(1, 2)]);
        assert!(rep.passed() && rep.perfect);
        assert_eq!(c.path(), &[0, 1, 2]);
    }

    #[test]
    fn concat_flag_propagation() {
        // g perfect, h standard-not-perfect: result standard.
        let g = Realization::new(4, vec![0, 2, 1, 3]).unwrap();
        let h = Realization::new(5, vec![0, 3, 1, 4, 2]).unwrap();
        let c = concat(&g, &h).unwrap();
        assert!(c.is_standard() && !c.is_perfect());
        assert_eq!(c.lengths(), g.lengths().union(&h.lengths()));
        // Non-standard input rejected.
        let bad = Realization::new(3, vec![1, 0, 2]).unwrap();
        assert!(concat(&bad, &h).is_err());
    }

    #[test]
    fn prepend_ones_examples() {
        let r = Realization::new(6, vec![0, 3, 1, 4, 2, 5]).unwrap();
        assert_eq!(prepend_ones(&r, 0).unwrap(), r);
        let e = prepend_ones(&r, 2).unwrap();
        let rep = e.verify(&ms![(1, 2), (2, 2), (3, 3)]);
        assert!(rep.passed() && rep.perfect);

        let s = Realization::new(5, vec![0, 3, 1, 4, 2]).unwrap();
        let e = prepend_ones(&s, 3).unwrap();
        let rep = e.verify(&ms![(1, 3), (2, 2), (3, 2)]);
        assert!(rep.passed() && rep.standard && !rep.perfect);
    }

    #[test]
    fn bridge_examples() {
        let p = bridge(
            &[vec![0, 3], vec![1, 4], vec![2, 5]],
            &[2, 2],
        )
        .unwrap();
        assert_eq!(p, vec![0, 3, 1, 4, 2, 5]);
        assert_eq!(bridge(&[vec![0]], &[]).unwrap(), vec![0]);
        let err = bridge(&[vec![0, 3], vec![1, 4]], &[5]).unwrap_err();
        assert!(matches!(err, Error::JunctionMismatch { index: 0, .. }));
    }

    #[test]
    fn grow_cy_reproduces_omega_figures() {
        // {1^6, 7^7} grown fully then partially by 4 gives the first
        // omega-construction figure exactly.
        let base =
            Realization::new(14, vec![0, 7, 8, 1, 2, 9, 10, 3, 4, 11, 12, 5, 6, 13]).unwrap();
        let full = grow_cy(&base, 7, 7).unwrap();
        assert!(full.is_type_cy(7));
        assert_eq!(full.lengths(), ms![(1, 6), (7, 14)]);
        let part = grow_cy(&full, 7, 4).unwrap();
        assert_eq!(
            part.path(),
            &[0, 7, 14, 21, 22, 15, 8, 1, 2, 9, 16, 23, 24, 17, 10, 3, 4, 11, 18, 19, 12, 5, 6, 13, 20]
        );

        // {1^8, 8^2} grown fully twice then partially by 2 gives the second
        // tail-curl figure exactly.
        let base = Realization::new(11, vec![0, 8, 7, 6, 5, 4, 3, 2, 1, 9, 10]).unwrap();
        let g1 = grow_cy(&base, 8, 8).unwrap();
        let g2 = grow_cy(&g1, 8, 8).unwrap();
        assert!(g2.is_type_cy(8));
        let g3 = grow_cy(&g2, 8, 2).unwrap();
        assert_eq!(
            g3.path(),
            &[0, 8, 16, 24, 23, 15, 7, 6, 14, 22, 21, 13, 5, 4, 12, 20, 28, 27, 19, 11, 3, 2, 1, 9, 17, 25, 26, 18, 10]
        );
        assert_eq!(g3.lengths(), ms![(1, 8), (8, 20)]);
    }

    #[test]
    fn grow_cy_identity_and_rejection() {
        let base = Realization::new(11, vec![0, 8, 7, 6, 5, 4, 3, 2, 1, 9, 10]).unwrap();
        assert_eq!(grow_cy(&base, 8, 0).unwrap(), base);
        assert!(grow_cy(&base, 8, 3).is_err());
        let not_cy = Realization::new(4, vec![0, 2, 1, 3]).unwrap();
        assert!(grow_cy(&not_cy, 2, 2).is_err());
    }

    #[test]
    fn grow_at_examples() {
        // Tail-curl construction for {1^7, 7^14} (rewired route), growable
        // at m = 6.
        let r = Realization::new(
            22,
            vec![0, 7, 14, 21, 20, 13, 6, 5, 12, 19, 18, 11, 4, 3, 10, 17, 16, 15, 8, 1, 2, 9],
        )
        .unwrap();
        let g = grow_at(&r, 7, 6).unwrap();
        let rep = g.verify(&ms![(1, 7), (7, 21)]);
        assert!(rep.passed() && rep.standard);
        // Growing twice composes.
        let g2 = grow_at(&g, 7, 6).unwrap();
        assert_eq!(g2.lengths(), ms![(1, 7), (7, 28)]);
        assert_eq!(g2.v(), 36);
    }
}

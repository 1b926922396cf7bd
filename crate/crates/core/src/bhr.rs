//! Equivalence arithmetic for supports of size 3: unit multiplication in
//! `Z_v`, the realizability bound `f`, and counterexample windows.


use crate::error::{Error, Result};

/// The bound of the select known results: `{1^a, x^b, y^c}` is linearly
/// realizable whenever `a >= f(x, y)`, for `1 < x < y`.
pub fn f(x: usize, y: usize) -> Result<usize> {
    if !(1 < x && x < y) {
        return Err(Error::Inapplicable("f needs 1 < x < y"));
    }
    Ok(if x % 2 == 0 && y % 2 == 0 {
        y - 1
    } else if x == 3 || (x % 2 == 0 && y % 2 == 1) {
        x + y - 2
    } else {
        x + y - 1
    })
}

/// If `v >= 2y^2 + 9y`, the coprime conjecture holds for `{1, y-1, y}`.
pub fn large_v_holds(y: usize, v: usize) -> bool {
    v >= 2 * y * y + 9 * y
}

fn egcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = egcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

/// Multiplicative inverse mod `v`, if `gcd(u, v) = 1`.
pub fn mod_inverse(u: usize, v: usize) -> Option<usize> {
    let (g, x, _) = egcd(u as i64, v as i64);
    if g != 1 {
        return None;
    }
    Some(x.rem_euclid(v as i64) as usize)
}

fn reduce(x: usize, v: usize) -> usize {
    let x = x % v;
    x.min(v - x)
}

/// Which original multiplicity slot (`a`, `b` or `c`) a value carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Slot {
    A,
    B,
    C,
}

/// One equivalent multiset pattern: elements ascending, each tagged with
/// the original slot whose multiplicity it carries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalentSupport {
    /// The unit the original support was multiplied by.
    pub unit: usize,
    /// `(element, slot)` pairs, elements ascending; `elements[0]` is 1.
    pub elements: [(usize, Slot); 3],
}

impl EquivalentSupport {
    pub fn support(&self) -> [usize; 3] {
        [self.elements[0].0, self.elements[1].0, self.elements[2].0]
    }

    /// The non-1 pair `(x, y)` with `x < y`.
    pub fn pair(&self) -> (usize, usize) {
        (self.elements[1].0, self.elements[2].0)
    }

    /// The slot whose multiplicity lands on the element 1.
    pub fn one_slot(&self) -> Slot {
        self.elements[0].1
    }
}

/// The equivalence report for a support `{1, x, y}` modulo `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub v: usize,
    pub base: [usize; 3],
    /// Images under multiplication by `x^-1` and `y^-1`.
    pub equivalents: [EquivalentSupport; 2],
    /// `f` of the base pair and of the two equivalent pairs.
    pub f_values: [usize; 3],
    pub f_sum: usize,
}

/// Multiply `{1, x, y}` by `x^-1` and `y^-1` mod `v` and reduce.
pub fn equivalents(x: usize, y: usize, v: usize) -> Result<EquivalenceReport> {
    if !(1 < x && x < y && y <= v / 2) {
        return Err(Error::Inapplicable("support must satisfy 1 < x < y <= v/2"));
    }
    let make = |unit: usize| -> Result<EquivalentSupport> {
        let mut elems = [
            (reduce(unit, v), Slot::A),
            (reduce(unit * x % v, v), Slot::B),
            (reduce(unit * y % v, v), Slot::C),
        ];
        elems.sort_by_key(|&(e, _)| e);
        if elems[0].0 != 1 || elems[0].0 == elems[1].0 || elems[1].0 == elems[2].0 {
            return Err(Error::Inapplicable("equivalent support is degenerate"));
        }
        Ok(EquivalentSupport { unit, elements: elems })
    };
    let xi = mod_inverse(x, v).ok_or(Error::NotCoprime { x, y: v })?;
    let yi = mod_inverse(y, v).ok_or(Error::NotCoprime { x: y, y: v })?;
    let e1 = make(xi)?;
    let e2 = make(yi)?;
    let f0 = f(x, y)?;
    let f1 = {
        let (a, b) = e1.pair();
        f(a, b)?
    };
    let f2 = {
        let (a, b) = e2.pair();
        f(a, b)?
    };
    Ok(EquivalenceReport {
        v,
        base: [1, x, y],
        equivalents: [e1, e2],
        f_values: [f0, f1, f2],
        f_sum: f0 + f1 + f2,
    })
}

/// Inclusive bounds `[lo, hi]` on each of the multiplicities `a, b, c` that
/// a counterexample must satisfy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Window {
    /// `f_sum < v + 2`: no counterexample window exists for this `v`.
    ConjectureHolds { f_sum: usize, needed: usize },
    Bounds { lo: [usize; 3], hi: [usize; 3] },
}

/// The counterexample window for `{1^a, x^b, y^c}` of size `v-1`: each
/// slot is bounded by the `f`-value of the equivalent multiset in which it
/// multiplies 1, and from below by `v - 1` minus the other two bounds.
pub fn window(x: usize, y: usize, v: usize) -> Result<Window> {
    window_with(x, y, v, |_, _| None)
}

/// Same as [`window`], with an extra per-pair bound (used by the `{1,z-1,z}`
/// drivers, where `a >= z` already forces realizability).
pub fn window_with(
    x: usize,
    y: usize,
    v: usize,
    extra_bound: impl Fn(usize, usize) -> Option<usize>,
) -> Result<Window> {
    let rep = equivalents(x, y, v)?;
    if rep.f_sum < v + 2 {
        return Ok(Window::ConjectureHolds { f_sum: rep.f_sum, needed: v + 2 });
    }
    let mut hi = [0usize; 3];
    let bound = |pair: (usize, usize), fv: usize| -> usize {
        let cap = extra_bound(pair.0, pair.1).unwrap_or(usize::MAX);
        fv.min(cap) - 1
    };
    hi[0] = bound((x, y), rep.f_values[0]);
    for (i, eq) in rep.equivalents.iter().enumerate() {
        let slot = match eq.one_slot() {
            Slot::A => 0,
            Slot::B => 1,
            Slot::C => 2,
        };
        hi[slot] = bound(eq.pair(), rep.f_values[i + 1]);
    }
    let total = v - 1;
    let mut lo = [0usize; 3];
    for i in 0..3 {
        let others: usize = (0..3).filter(|&j| j != i).map(|j| hi[j]).sum();
        lo[i] = total.saturating_sub(others);
    }
    Ok(Window::Bounds { lo, hi })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f_triples() {
        assert_eq!(f(17, 19).unwrap(), 35);
        assert_eq!(f(6, 11).unwrap(), 15);
        assert_eq!(f(28, 38).unwrap(), 37);
        assert_eq!(f(3, 10).unwrap(), 11);
        assert!(f(1, 5).is_err());
        assert!(f(5, 5).is_err());
    }

    #[test]
    fn large_v_boundary() {
        assert!(large_v_holds(16, 656));
        assert!(!large_v_holds(16, 655));
        assert!(!large_v_holds(12, 41));
    }

    #[test]
    fn equivalents_examples() {
        let rep = equivalents(17, 19, 103).unwrap();
        assert_eq!(rep.equivalents[0].support(), [1, 6, 11]);
        assert_eq!(rep.equivalents[1].support(), [1, 28, 38]);
        assert_eq!(rep.f_values, [35, 15, 37]);
        assert_eq!(rep.f_sum, 87);

        let rep = equivalents(17, 19, 105).unwrap();
        assert_eq!(rep.equivalents[0].support(), [1, 32, 37]);
        assert_eq!(rep.equivalents[1].support(), [1, 11, 23]);
        assert_eq!(rep.f_sum, 135);

        // {1,2,3} mod 7 is self-equivalent.
        let rep = equivalents(2, 3, 7).unwrap();
        assert_eq!(rep.equivalents[0].support(), [1, 2, 3]);
        assert_eq!(rep.equivalents[1].support(), [1, 2, 3]);

        assert!(equivalents(2, 4, 8).is_err());
    }

    #[test]
    fn equivalents_involution() {
        // Multiplying an equivalent by the corresponding inverse returns
        // the original support.
        for v in 11..=60usize {
            for x in 2..v / 2 {
                for y in x + 1..=v / 2 {
                    let Ok(rep) = equivalents(x, y, v) else { continue };
                    for eq in &rep.equivalents {
                        let inv = mod_inverse(eq.unit, v).unwrap();
                        let mut back: Vec<usize> =
                            eq.support().iter().map(|&e| reduce(e * inv % v, v)).collect();
                        back.sort_unstable();
                        // The image of the equivalent support under the
                        // inverse unit is the original support.
                        assert_eq!(back, alloc::vec![1, x, y].iter().map(|&e| reduce(e, v)).collect::<Vec<_>>());
                    }
                }
            }
        }
    }

    #[test]
    fn window_examples() {
        match window(17, 19, 103).unwrap() {
            Window::ConjectureHolds { f_sum, needed } => {
                assert_eq!((f_sum, needed), (87, 105));
            }
            _ => panic!("v=103 should settle the conjecture"),
        }
        match window(17, 19, 105).unwrap() {
            Window::Bounds { lo, hi } => {
                assert_eq!(hi, [34, 66, 32]);
                assert_eq!(lo[0], 6);
            }
            _ => panic!(),
        }
        match window(17, 19, 127).unwrap() {
            Window::Bounds { lo, hi } => {
                assert_eq!(hi[0], 34);
                assert_eq!(lo[0], 24);
            }
            _ => panic!(),
        }
    }
}

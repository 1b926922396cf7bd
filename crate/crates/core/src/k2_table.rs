//! Pinned realizations for the small-`y` special cases of the
//! `{1, y-2, y}` constructions, found by exhaustive oracle search and
//! validated against their growth hooks. See the `gen_k2_table`
//! integration test for the generator.

/// How a pinned base extends to larger multiplicities.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpecialGrowth {
    /// Grow with the type-`C_y` ladder (`grow_cy`), step `.0`.
    TypeCy(usize),
    /// Grow with `grow_at(step, m)`.
    GrowAt { step: usize, m: usize },
}

#[derive(Debug, Clone, Copy)]
pub struct Special {
    pub y: usize,
    pub b: usize,
    pub c: usize,
    pub growth: SpecialGrowth,
    pub path: &'static [usize],
}

pub fn lookup(y: usize, b: usize, c: usize) -> Option<&'static Special> {
    SPECIALS.iter().find(|s| s.y == y && s.b == b && s.c == c)
}

/// Generated by the `gen_table` test; do not edit by hand.
pub const SPECIALS: &[Special] = &[
    Special { y: 4, b: 1, c: 3, growth: SpecialGrowth::TypeCy(4), path: &[0, 1, 5, 4, 2, 6, 7, 3] },
    Special { y: 4, b: 2, c: 2, growth: SpecialGrowth::TypeCy(4), path: &[0, 1, 3, 7, 6, 2, 4, 5] },
    Special { y: 4, b: 3, c: 1, growth: SpecialGrowth::TypeCy(4), path: &[0, 1, 3, 5, 4, 2, 6, 7] },
    Special { y: 4, b: 1, c: 4, growth: SpecialGrowth::TypeCy(4), path: &[0, 1, 5, 6, 2, 4, 8, 7, 3] },
    Special { y: 4, b: 2, c: 3, growth: SpecialGrowth::TypeCy(4), path: &[0, 1, 3, 7, 8, 4, 2, 6, 5] },
    Special { y: 4, b: 3, c: 2, growth: SpecialGrowth::TypeCy(4), path: &[0, 1, 3, 5, 6, 2, 4, 8, 7] },
    Special { y: 5, b: 1, c: 5, growth: SpecialGrowth::GrowAt { step: 5, m: 10 }, path: &[0, 1, 6, 7, 2, 5, 10, 9, 4, 3, 8] },
    Special { y: 5, b: 2, c: 4, growth: SpecialGrowth::GrowAt { step: 5, m: 4 }, path: &[0, 1, 2, 7, 6, 9, 4, 3, 8, 5, 10] },
    Special { y: 5, b: 3, c: 3, growth: SpecialGrowth::GrowAt { step: 5, m: 10 }, path: &[0, 1, 2, 5, 10, 9, 4, 7, 6, 3, 8] },
    Special { y: 5, b: 4, c: 2, growth: SpecialGrowth::GrowAt { step: 5, m: 10 }, path: &[0, 1, 2, 3, 6, 9, 4, 7, 8, 5, 10] },
    Special { y: 5, b: 1, c: 7, growth: SpecialGrowth::GrowAt { step: 5, m: 12 }, path: &[0, 1, 6, 11, 10, 5, 4, 9, 12, 7, 2, 3, 8] },
    Special { y: 5, b: 2, c: 6, growth: SpecialGrowth::GrowAt { step: 5, m: 4 }, path: &[0, 1, 2, 7, 12, 11, 6, 9, 4, 3, 8, 5, 10] },
    Special { y: 5, b: 3, c: 5, growth: SpecialGrowth::GrowAt { step: 5, m: 5 }, path: &[0, 1, 2, 3, 8, 11, 6, 9, 4, 5, 10, 7, 12] },
    Special { y: 5, b: 4, c: 4, growth: SpecialGrowth::GrowAt { step: 5, m: 4 }, path: &[0, 1, 2, 3, 4, 9, 6, 11, 8, 5, 10, 7, 12] },
    Special { y: 7, b: 1, c: 9, growth: SpecialGrowth::GrowAt { step: 7, m: 16 }, path: &[0, 1, 8, 15, 14, 7, 6, 13, 12, 5, 4, 11, 16, 9, 2, 3, 10] },
    Special { y: 7, b: 2, c: 8, growth: SpecialGrowth::GrowAt { step: 7, m: 16 }, path: &[0, 1, 2, 9, 16, 11, 4, 3, 10, 15, 8, 7, 14, 13, 6, 5, 12] },
    Special { y: 7, b: 3, c: 7, growth: SpecialGrowth::GrowAt { step: 7, m: 16 }, path: &[0, 1, 2, 7, 14, 13, 6, 5, 12, 11, 4, 9, 16, 15, 8, 3, 10] },
    Special { y: 7, b: 4, c: 6, growth: SpecialGrowth::GrowAt { step: 7, m: 6 }, path: &[0, 1, 2, 3, 4, 11, 10, 15, 8, 13, 6, 5, 12, 7, 14, 9, 16] },
    Special { y: 7, b: 5, c: 5, growth: SpecialGrowth::GrowAt { step: 7, m: 6 }, path: &[0, 1, 2, 3, 4, 9, 16, 11, 10, 15, 8, 13, 6, 5, 12, 7, 14] },
    Special { y: 7, b: 6, c: 4, growth: SpecialGrowth::GrowAt { step: 7, m: 15 }, path: &[0, 1, 2, 3, 4, 9, 14, 7, 8, 15, 10, 5, 12, 13, 6, 11, 16] },
    Special { y: 7, b: 1, c: 11, growth: SpecialGrowth::GrowAt { step: 7, m: 18 }, path: &[0, 5, 12, 13, 6, 7, 14, 15, 8, 1, 2, 9, 16, 17, 10, 3, 4, 11, 18] },
    Special { y: 7, b: 2, c: 10, growth: SpecialGrowth::GrowAt { step: 7, m: 6 }, path: &[0, 1, 2, 9, 16, 17, 10, 3, 4, 11, 18, 13, 6, 5, 12, 7, 14, 15, 8] },
    Special { y: 7, b: 3, c: 9, growth: SpecialGrowth::GrowAt { step: 7, m: 7 }, path: &[0, 1, 2, 3, 10, 17, 12, 5, 4, 11, 18, 13, 6, 7, 14, 9, 16, 15, 8] },
    Special { y: 7, b: 4, c: 8, growth: SpecialGrowth::GrowAt { step: 7, m: 6 }, path: &[0, 1, 2, 3, 4, 11, 18, 17, 10, 15, 8, 13, 6, 5, 12, 7, 14, 9, 16] },
    Special { y: 7, b: 5, c: 7, growth: SpecialGrowth::GrowAt { step: 7, m: 7 }, path: &[0, 1, 2, 3, 4, 5, 12, 17, 10, 15, 8, 13, 6, 7, 14, 9, 16, 11, 18] },
    Special { y: 7, b: 6, c: 6, growth: SpecialGrowth::GrowAt { step: 7, m: 6 }, path: &[0, 1, 2, 3, 4, 5, 6, 13, 8, 15, 10, 17, 12, 7, 14, 9, 16, 11, 18] },
    Special { y: 7, b: 6, c: 2, growth: SpecialGrowth::GrowAt { step: 5, m: 5 }, path: &[0, 1, 2, 3, 8, 13, 12, 7, 14, 9, 10, 5, 4, 11, 6] },
    Special { y: 7, b: 5, c: 3, growth: SpecialGrowth::GrowAt { step: 5, m: 4 }, path: &[0, 1, 2, 3, 4, 9, 8, 13, 6, 11, 10, 5, 12, 7, 14] },
];

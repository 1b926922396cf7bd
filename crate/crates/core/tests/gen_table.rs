//! Generator for the pinned small-`y` specials table (`k2_table.rs`).
//! Run with:
//!   cargo test -p linreal-core --test gen_table -- --ignored --nocapture

use linreal_core::multiset::LengthMultiset;
use linreal_core::oracle::{search_where, Mode, Search};
use linreal_core::realization::Realization;
use linreal_core::transform::{grow_at, grow_cy};

fn multiset(y: usize, a: usize, b: usize, c: usize) -> LengthMultiset {
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

fn growable_anchor(r: &Realization, step: usize) -> Option<usize> {
    ((step - 1)..r.v()).rev().find(|&m| {
        grow_at(r, step, m).ok().map_or(false, |g| {
            g.is_standard()
                && grow_at(&g, step, m).map_or(false, |g2| g2.is_standard())
        })
    })
}

fn emit(y: usize, b: usize, c: usize, growth: &str, path: &[usize]) {
    let joined: Vec<String> = path.iter().map(|u| u.to_string()).collect();
    println!(
        "    Special {{ y: {y}, b: {b}, c: {c}, growth: {growth}, path: &[{}] }},",
        joined.join(", ")
    );
}

fn find_type_cy(y: usize, b: usize, c: usize) {
    let a = 3; // y = 4 entries all sit at a = y - 1
    let ms = multiset(y, a, b, c);
    let found = search_where(&ms, Mode::Standard, 1 << 33, |r| {
        r.is_type_cy(y)
            && grow_cy(r, y, y)
                .and_then(|g| grow_cy(&g, y, y))
                .and_then(|g| grow_cy(&g, y, 2))
                .is_ok()
    })
    .expect("search failed");
    match found {
        Search::Found(r) => emit(y, b, c, &format!("SpecialGrowth::TypeCy({y})"), r.path()),
        Search::None => println!("    // NOT FOUND: y={y} b={b} c={c} (type C)"),
    }
}

fn find_growable(y: usize, step: usize, b: usize, c: usize, a_candidates: &[usize]) {
    for &a in a_candidates {
        let ms = multiset(y, a, b, c);
        let mut anchor = None;
        let found = search_where(&ms, Mode::Standard, 1 << 33, |r| {
            match growable_anchor(r, step) {
                Some(m) => {
                    anchor = Some(m);
                    true
                }
                None => false,
            }
        });
        if let Ok(Search::Found(r)) = found {
            let m = anchor.unwrap();
            emit(
                y,
                b,
                c,
                &format!("SpecialGrowth::GrowAt {{ step: {step}, m: {m} }}"),
                r.path(),
            );
            return;
        }
    }
    println!("    // NOT FOUND: y={y} b={b} c={c} (growable)");
}

#[test]
#[ignore = "table generator; run manually and paste into k2_table.rs"]
fn generate_specials() {
    println!("pub const SPECIALS: &[Special] = &[");
    // y = 4 (small_b): all residues, base sums 4 and 5, type C_4.
    for b in 1..=3usize {
        find_type_cy(4, b, 4 - b);
    }
    for b in 1..=3usize {
        find_type_cy(4, b, 5 - b);
    }
    // y = 5 (small_b): odd residues, base sums 6 and 8, 5-growable.
    for b in 1..=4usize {
        find_growable(5, 5, b, 6 - b, &[4, 5, 3]);
    }
    for b in 1..=4usize {
        find_growable(5, 5, b, 8 - b, &[4, 5, 3]);
    }
    // y = 7 (small_b): odd residues > 1, base sums 10 and 12, 7-growable.
    for b in 1..=6usize {
        find_growable(7, 7, b, 10 - b, &[6, 7, 5, 4]);
    }
    for b in 1..=6usize {
        find_growable(7, 7, b, 12 - b, &[6, 7, 5, 4]);
    }
    // y = 7 (small_c): r = 3 gap at c in {2, 3}, base sum 8, 5-growable.
    for c in 2..=3usize {
        find_growable(7, 5, 8 - c, c, &[6, 7, 5, 4]);
    }
    println!("];");
}

use linreal_core::k1::sawtooth_base;
use linreal_core::transform::grow_at;
use linreal_core::realization::Realization;
use linreal_core::multiset::LengthMultiset;

fn k1_ms(y: usize, a: usize, b: usize, c: usize) -> LengthMultiset {
    let mut m = LengthMultiset::new();
    if a > 0 { m.insert(1, a); }
    if b > 0 { m.insert(y - 1, b); }
    if c > 0 { m.insert(y, c); }
    m
}

#[test]
#[ignore]
fn debug_12_30_1() {
    // Hand assembly of (19, 1) at y = 12.
    let p = vec![0usize,11,22,23,12,1,2,13,24,25,14,3,4,15,26,27,16,5,6,17,28,29,18,7,19,8,9,20,21,10];
    match Realization::verified(30, p, &k1_ms(12, 9, 19, 1)) {
        Ok(r) => {
            eprintln!("hand (19,1) base ok");
            let mut any = false;
            for m in (10..r.v()).rev() {
                if let Ok(g) = grow_at(&r, 11, m) {
                    eprintln!("  growable at {m}, standard {}", g.is_standard());
                    any = true;
                }
            }
            if !any { eprintln!("  not growable anywhere"); }
        }
        Err(e) => eprintln!("hand base bad: {e}"),
    }
    // What does sawtooth_base(12, 19, 1) say?
    eprintln!("sawtooth_base(12,19,1): {:?}", sawtooth_base(12, 19, 1).map(|r| r.path().to_vec()));
}

//! Timing probe for individual dispatcher calls.
use std::time::Instant;

#[test]
#[ignore]
fn time_k1_cases() {
    for (y, b, c) in [(8usize, 3usize, 21usize), (8, 17, 7), (9, 7, 15), (9, 6, 21), (12, 1, 30), (12, 30, 1)] {
        let t = Instant::now();
        let r = linreal_core::k1::k1_dispatch(y, y, b, c);
        eprintln!("k1({y},{y},{b},{c}) -> {} in {:?}", r.is_ok(), t.elapsed());
    }
}

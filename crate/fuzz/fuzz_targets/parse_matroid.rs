#![no_main]

use bergman_core::json::parse_matroid;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(m) = parse_matroid(text) else { return };
    let ground = m.ground();
    assert_eq!(m.rank(ground).unwrap(), m.full_rank());
    assert!(m.closure(m.loops()).unwrap() == m.loops());
});

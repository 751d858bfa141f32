#![no_main]

use bergman_core::json::{flag_json, parse_flag};
use libfuzzer_sys::fuzz_target;

// Input: the ground set size on the first line, the flag JSON after it.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Some((n, body)) = text.split_once('\n') else { return };
    let Ok(n) = n.trim().parse::<usize>() else { return };
    let Ok(flag) = parse_flag(body, n) else { return };
    assert_eq!(parse_flag(&flag_json(&flag).to_string(), n).unwrap(), flag);
});

#![no_main]

use bergman_core::json::{parse_weights, weights_json};
use bergman_core::weights::flag_of;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(w) = parse_weights(text) else { return };
    assert_eq!(parse_weights(&weights_json(&w).to_string()).unwrap(), w);
    if (1..=64).contains(&w.len()) {
        let flag = flag_of(&w).unwrap();
        assert_eq!(flag_of(&flag.representative_weights()).unwrap(), flag);
    }
});

#![no_main]

use bergman_core::json::{distance_json, parse_distance_matrix};
use bergman_core::treespace::{is_ultrametric, tree_to_ultrametric, ultrametric_to_tree};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(delta) = parse_distance_matrix(text) else { return };
    assert_eq!(parse_distance_matrix(&distance_json(&delta).to_string()).unwrap(), delta);
    match ultrametric_to_tree(&delta) {
        Ok(tree) => assert_eq!(tree_to_ultrametric(&tree), delta),
        Err(_) => assert!(!is_ultrametric(&delta) || delta.n() < 2),
    }
});

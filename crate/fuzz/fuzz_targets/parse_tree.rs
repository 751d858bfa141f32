#![no_main]

use bergman_core::json::{parse_tree, tree_json};
use bergman_core::treespace::{tree_to_ultrametric, ultrametric_to_tree};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(tree) = parse_tree(text) else { return };
    assert_eq!(parse_tree(&tree_json(&tree).to_string()).unwrap(), tree);
    assert_eq!(ultrametric_to_tree(&tree_to_ultrametric(&tree)).unwrap(), tree);
    let _ = tree.to_newick(4);
});

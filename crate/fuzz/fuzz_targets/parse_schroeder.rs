#![no_main]

use libfuzzer_sys::fuzz_target;
use tamari::schroeder::SchroederTree;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(t) = s.parse::<SchroederTree>() {
        let again: SchroederTree = t.to_string().parse().expect("printed tree parses");
        assert_eq!(again, t);
        assert!(t.min_tree().size() == t.max_tree().size());
    }
});

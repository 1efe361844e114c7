#![no_main]

use libfuzzer_sys::fuzz_target;
use tamari::BinaryTree;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(t) = s.parse::<BinaryTree>() {
        let again: BinaryTree = t.to_string().parse().expect("printed tree parses");
        assert_eq!(again, t);
        if !t.is_empty() {
            assert_eq!(t.des().unwrap() + t.asc().unwrap(), t.size() - 1);
        }
    }
});

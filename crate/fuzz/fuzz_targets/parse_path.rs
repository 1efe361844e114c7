#![no_main]

use libfuzzer_sys::fuzz_target;
use tamari::paths::LatticePath;

fuzz_target!(|data: &[u8]| {
    let Some((&m, rest)) = data.split_first() else { return };
    let m = usize::from(m % 8);
    let Ok(s) = std::str::from_utf8(rest) else { return };
    if let Ok(p) = LatticePath::parse(s, m) {
        assert_eq!(LatticePath::parse(&p.to_string(), m).expect("printed path parses"), p);
        for q in p.covers_up() {
            assert_eq!(q.n(), p.n());
        }
    }
});

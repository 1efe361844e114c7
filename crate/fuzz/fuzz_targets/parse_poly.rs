#![no_main]

use libfuzzer_sys::fuzz_target;
use tamari::mpoly::parse_poly;

const VARS: [char; 3] = ['t', 'z', 'X'];

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(p) = parse_poly(s, &VARS) {
        let printed = p.display(&VARS).to_string();
        assert_eq!(parse_poly(&printed, &VARS).expect("printed polynomial parses"), p);
    }
});

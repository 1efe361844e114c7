#![no_main]

use libfuzzer_sys::fuzz_target;
use tamari_cli::expr::Expr;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(e) = Expr::parse(s) {
        assert_eq!(Expr::parse(&e.to_string()).expect("printed expression parses"), e);
    }
});

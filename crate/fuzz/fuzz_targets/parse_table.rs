#![no_main]

use libfuzzer_sys::fuzz_target;
use tamari::equation::PolynomialEquation;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(eq) = PolynomialEquation::parse_table(s) {
        let printed: String = eq.terms().map(|((a, b, c), k)| format!("{a} {b} {c} {k}\n")).collect();
        assert_eq!(
            PolynomialEquation::parse_table(&printed).expect("printed table parses"),
            eq
        );
    }
});

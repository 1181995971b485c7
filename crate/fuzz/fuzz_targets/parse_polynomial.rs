#![no_main]

use libfuzzer_sys::fuzz_target;
use psalg::tutte::io::{parse_polynomial, polynomial_to_json};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(p) = parse_polynomial(text) {
        let again = parse_polynomial(&polynomial_to_json(&p).to_string()).expect("re-parse");
        assert_eq!(again, p);
    }
});

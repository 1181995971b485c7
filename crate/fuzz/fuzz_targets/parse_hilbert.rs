#![no_main]

use libfuzzer_sys::fuzz_target;
use psalg::tutte::io::{hilbert_to_json, parse_hilbert};
use psalg::tutte::reconstruct_tutte;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(hs) = parse_hilbert(text) {
        let again = parse_hilbert(&hilbert_to_json(&hs).to_string()).expect("re-parse");
        assert_eq!(again, hs);
        // Arbitrary series must be rejected cleanly, never panic.
        if hs.dims().len() <= 64 {
            let _ = reconstruct_tutte(&hs, 3, 3);
        }
    }
});

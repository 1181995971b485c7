#![no_main]

use libfuzzer_sys::fuzz_target;
use psalg::hypergraphs::io::{hypergraph_to_json, parse_hypergraph};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(h) = parse_hypergraph(text) {
        let again = parse_hypergraph(&hypergraph_to_json(&h).to_string()).expect("re-parse");
        assert_eq!(again, h);
    }
});

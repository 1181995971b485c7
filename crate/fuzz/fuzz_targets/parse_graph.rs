#![no_main]

use libfuzzer_sys::fuzz_target;
use psalg::graphs::io::{graph_to_json, parse_graph};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(g) = parse_graph(text) {
        let again = parse_graph(&graph_to_json(&g).to_string()).expect("re-parse");
        assert_eq!(again, g);
    }
});

//! The graph6 decoder must never panic on arbitrary bytes, and anything it
//! accepts must survive an encode/decode round-trip unchanged.

#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(g) = algdeg::graph6::parse_graph6(text) {
        let emitted = algdeg::graph6::write_graph6(&g);
        let back = algdeg::graph6::parse_graph6(&emitted).expect("emitted graph6 parses");
        assert_eq!(back, g, "graph6 round-trip changed the graph");
    }
});

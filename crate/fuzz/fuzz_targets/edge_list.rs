//! The edge-list parser must never panic on arbitrary bytes; accepted
//! inputs must round-trip through the writer.

#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(g) = algdeg::edgelist::parse_edge_list(text) {
        let emitted = algdeg::edgelist::write_edge_list(&g);
        let back = algdeg::edgelist::parse_edge_list(&emitted).expect("emitted list parses");
        assert_eq!(back, g, "edge list round-trip changed the graph");
    }
});

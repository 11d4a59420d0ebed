//! The polynomial text parser must never panic and must round-trip through
//! the canonical display form.

#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(p) = algdeg::polytext::parse_poly(text) {
        let emitted = p.to_string();
        let back = algdeg::polytext::parse_poly(&emitted).expect("canonical form parses");
        assert_eq!(back, p, "polynomial text round-trip changed the polynomial");
    }
});

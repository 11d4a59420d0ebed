//! The JSON coefficient decoder must never panic on arbitrary JSON and must
//! round-trip through the encoder.

#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(strings) = serde_json::from_slice::<Vec<String>>(data) else { return };
    if let Ok(p) = algdeg::polytext::poly_from_json_coeffs(&strings) {
        let emitted = algdeg::polytext::poly_to_json_coeffs(&p);
        let back =
            algdeg::polytext::poly_from_json_coeffs(&emitted).expect("emitted coeffs parse");
        assert_eq!(back, p, "JSON coefficient round-trip changed the polynomial");
    }
});

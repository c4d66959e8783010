#![no_main]

use libfuzzer_sys::fuzz_target;
use qeslab::output::{format_complex, parse_complex};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(z) = parse_complex(text) {
        // Anything accepted must round-trip through the canonical form.
        let back = parse_complex(&format_complex(z)).expect("canonical form parses");
        assert_eq!(z, back);
    }
});

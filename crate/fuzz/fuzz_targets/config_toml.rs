#![no_main]

use libfuzzer_sys::fuzz_target;
use qeslab::config::ConfigFile;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    // Partial per-family tables: parsing must never panic, and any value it
    // accepts must be representable.
    let _ = toml::from_str::<ConfigFile>(text);
});

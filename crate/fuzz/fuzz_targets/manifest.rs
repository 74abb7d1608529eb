#![no_main]

use libfuzzer_sys::fuzz_target;
use spreadrank::manifest::parse_manifest;

fuzz_target!(|data: &[u8]| {
    if let Ok(entries) = parse_manifest(std::io::Cursor::new(data)) {
        for entry in &entries {
            assert!(entry.radius >= 1);
            assert!(!entry.name.is_empty());
        }
    }
});

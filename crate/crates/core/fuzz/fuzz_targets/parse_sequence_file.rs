#![no_main]

use libfuzzer_sys::fuzz_target;
use mixbound::mixing::SequenceFamily;
use mixbound::parse::parse_sequence_file;

fuzz_target!(|data: &[u8]| {
    let text = String::from_utf8_lossy(data);
    if let Ok(entries) = parse_sequence_file(&text) {
        let _ = SequenceFamily::new(entries);
    }
});

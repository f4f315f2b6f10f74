#![no_main]

use libfuzzer_sys::fuzz_target;
use mixbound::parse::parse_poly;
use mixbound::Field;

// first byte picks the prime, the rest is the expression
fuzz_target!(|data: &[u8]| {
    let Some((&sel, rest)) = data.split_first() else {
        return;
    };
    let field = Field::new([2, 3, 5, 7, 65521][sel as usize % 5]).unwrap();
    let text = String::from_utf8_lossy(rest);
    if let Ok(f) = parse_poly(&text, field) {
        let again = parse_poly(&f.to_string(), field).expect("canonical string must parse");
        assert_eq!(again, f);
    }
});

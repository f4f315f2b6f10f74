#![no_main]

use libfuzzer_sys::fuzz_target;
use mixbound::parse::parse_univariate;
use mixbound::Field;

fuzz_target!(|data: &[u8]| {
    let Some((&sel, rest)) = data.split_first() else {
        return;
    };
    let field = Field::new([2, 3, 5, 7, 65521][sel as usize % 5]).unwrap();
    let _ = parse_univariate(&String::from_utf8_lossy(rest), field);
});

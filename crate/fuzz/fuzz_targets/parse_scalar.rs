#![no_main]

use detident::parse_scalar;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(x) = parse_scalar(text) {
        assert_eq!(parse_scalar(&x.to_string()).expect("display parses"), x);
    }
});

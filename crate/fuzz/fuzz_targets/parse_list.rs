#![no_main]

use detident::vandermonde::ExponentSequence;
use detident::{parse_list, Scalar};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(xs) = parse_list::<Scalar>(text) {
        let joined = xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        assert_eq!(parse_list::<Scalar>(&joined).expect("joined list parses"), xs);
    }
    let _ = parse_list::<usize>(text);
    let _ = text.parse::<ExponentSequence>();
});

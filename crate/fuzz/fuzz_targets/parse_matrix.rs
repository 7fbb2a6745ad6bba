#![no_main]

use detident::{det_oracle, parse_matrix};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(m) = parse_matrix(text) else { return };
    // keep determinants small enough to stay fast
    if m.is_square() && m.rows() <= 6 {
        let _ = det_oracle(&m);
    }
    let round = m.to_string_rows().iter().map(|r| r.join(" ")).collect::<Vec<_>>().join("\n");
    assert_eq!(parse_matrix(&round).expect("printed matrix parses"), m);
});

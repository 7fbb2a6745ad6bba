#![no_main]

use detident::cli::run;
use libfuzzer_sys::fuzz_target;

// NUL-separated argv; commands that read files or run long suites are skipped.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let args: Vec<&str> = text.split('\0').collect();
    if matches!(args.first(), Some(&("det" | "fib-step" | "seed-verify" | "fuzz"))) {
        return;
    }
    if text.len() > 64 {
        return;
    }
    let mut out = Vec::new();
    let code = run(std::iter::once("detident").chain(args), &mut out);
    assert!(matches!(code, 0..=2));
});

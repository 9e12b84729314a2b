#![no_main]

use forestrep::symfunc::{Basis, SymFunc};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(f) = text.parse::<SymFunc>() else { return };
    let again: SymFunc = f.to_text(Basis::P).parse().expect("printed form parses");
    assert_eq!(again, f);
});

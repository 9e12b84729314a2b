#![no_main]

use forestrep::Odun;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(o) = text.parse::<Odun>() else { return };
    let code = o.code();
    let again: Odun = code.parse().expect("canonical code parses");
    assert_eq!(again.code(), code);
    let _ = o.as_tree();
    let _ = forestrep::odun::is_blossoming(&o);
});

#![no_main]

use forestrep::forest_rep::{import_frobenius_cache, FrobeniusCacheJson};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(json) = serde_json::from_slice::<FrobeniusCacheJson>(data) else { return };
    let _ = import_frobenius_cache(&json);
});

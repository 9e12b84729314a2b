#![no_main]

use forestrep::symfunc::{SymFunc, SymFuncJson};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(json) = serde_json::from_slice::<SymFuncJson>(data) else { return };
    let _ = SymFunc::from_json(&json);
});

#![no_main]

use forestrep::character::{DecompositionEntry, IrredDecomposition};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Some((&n, rest)) = data.split_first() else { return };
    let Ok(entries) = serde_json::from_slice::<Vec<DecompositionEntry>>(rest) else { return };
    if let Ok(d) = IrredDecomposition::from_json(usize::from(n % 16), &entries) {
        assert_eq!(IrredDecomposition::from_json(d.n(), &d.to_json()).unwrap(), d);
    }
});

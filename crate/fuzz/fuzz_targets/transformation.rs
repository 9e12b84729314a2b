#![no_main]

use forestrep::forest::{forest_of, odun_of, transformation_of};
use forestrep::PartialTransformation;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let parsed = text
        .parse::<PartialTransformation>()
        .ok()
        .or_else(|| serde_json::from_str::<PartialTransformation>(text).ok());
    let Some(f) = parsed else { return };
    assert_eq!(f.to_string().parse::<PartialTransformation>().unwrap(), f);
    if f.n() <= 64 && f.is_nilpotent() {
        let forest = forest_of(&f).unwrap();
        assert_eq!(transformation_of(&forest), f);
        assert_eq!(odun_of(&forest).vertex_count(), f.n());
    }
});

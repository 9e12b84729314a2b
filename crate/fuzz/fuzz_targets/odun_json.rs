#![no_main]

use forestrep::odun::OdunJson;
use forestrep::Odun;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(json) = serde_json::from_slice::<OdunJson>(data) else { return };
    if let Ok(o) = Odun::from_json(&json) {
        assert_eq!(Odun::from_json(&o.to_json()).unwrap(), o);
    }
});

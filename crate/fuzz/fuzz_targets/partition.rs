#![no_main]

use forestrep::Partition;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(p) = text.parse::<Partition>() {
        let again: Partition = p.to_string().parse().expect("display output parses");
        assert_eq!(again, p);
        assert_eq!(p.conjugate().conjugate(), p);
    }
    if let Ok(p) = serde_json::from_str::<Partition>(text) {
        assert_eq!(serde_json::from_str::<Partition>(&serde_json::to_string(&p).unwrap()).unwrap(), p);
    }
});

#![no_main]

use forestrep::tables::{format_table_line, parse_table_line, parse_tables};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(Some((n, k, d))) = parse_table_line(text) {
        let line = format_table_line(n, k, &d);
        assert_eq!(parse_table_line(&line).unwrap(), Some((n, k, d)));
    }
    let _ = parse_tables(text);
});

//! Replays the checked-in fuzz seeds through the same entry points the fuzz
//! targets call, so the seeds stay meaningful on a stable toolchain.

use std::fs;
use std::path::PathBuf;

use forestrep::character::{DecompositionEntry, IrredDecomposition};
use forestrep::forest_rep::{import_frobenius_cache, FrobeniusCacheJson};
use forestrep::odun::OdunJson;
use forestrep::symfunc::{Basis, SymFunc, SymFuncJson};
use forestrep::tables::{format_table_line, parse_table_line, parse_tables};
use forestrep::{Odun, PartialTransformation, Partition};

fn seeds(target: &str) -> Vec<Vec<u8>> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut files: Vec<_> = fs::read_dir(&dir).unwrap_or_else(|e| panic!("{}: {e}", dir.display())).map(|e| e.unwrap().path()).collect();
    files.sort();
    assert!(!files.is_empty(), "no seeds for {target}");
    files.into_iter().map(|p| fs::read(p).unwrap()).collect()
}

fn text(data: &[u8]) -> &str {
    std::str::from_utf8(data).expect("seeds are UTF-8")
}

#[test]
fn partition_seeds() {
    let mut parsed = 0;
    for data in seeds("partition") {
        if let Ok(p) = text(&data).parse::<Partition>() {
            assert_eq!(p.to_string().parse::<Partition>().unwrap(), p);
            parsed += 1;
        }
    }
    assert!(parsed >= 3);
}

#[test]
fn transformation_seeds() {
    for data in seeds("transformation") {
        let t = text(&data);
        if let Some(f) = t.parse::<PartialTransformation>().ok().or_else(|| serde_json::from_str(t).ok()) {
            assert_eq!(f.to_string().parse::<PartialTransformation>().unwrap(), f);
        }
    }
}

#[test]
fn odun_seeds() {
    let mut parsed = 0;
    for data in seeds("odun") {
        if let Ok(o) = text(&data).parse::<Odun>() {
            assert_eq!(o.code().parse::<Odun>().unwrap(), o);
            parsed += 1;
        }
    }
    assert!(parsed >= 3);
    for data in seeds("odun_json") {
        let json: OdunJson = serde_json::from_slice(&data).unwrap();
        let o = Odun::from_json(&json).unwrap();
        assert_eq!(Odun::from_json(&o.to_json()).unwrap(), o);
    }
}

#[test]
fn symfunc_seeds() {
    for data in seeds("symfunc_text") {
        let f: SymFunc = text(&data).parse().unwrap();
        assert_eq!(f.to_text(Basis::P).parse::<SymFunc>().unwrap(), f);
    }
    for data in seeds("symfunc_json") {
        let json: SymFuncJson = serde_json::from_slice(&data).unwrap();
        SymFunc::from_json(&json).unwrap();
    }
}

#[test]
fn table_seeds() {
    for data in seeds("table_line") {
        let t = text(&data);
        if let Ok(Some((n, k, d))) = parse_table_line(t) {
            assert_eq!(parse_table_line(&format_table_line(n, k, &d)).unwrap(), Some((n, k, d)));
        }
        parse_tables(t).unwrap();
    }
}

#[test]
fn decomposition_seeds() {
    for data in seeds("decomposition_json") {
        let (&n, rest) = data.split_first().unwrap();
        let entries: Vec<DecompositionEntry> = serde_json::from_slice(rest).unwrap();
        let d = IrredDecomposition::from_json(usize::from(n), &entries).unwrap();
        assert_eq!(IrredDecomposition::from_json(d.n(), &d.to_json()).unwrap(), d);
    }
}

#[test]
fn cache_seeds() {
    let results: Vec<bool> = seeds("cache_json")
        .iter()
        .map(|data| {
            let json: FrobeniusCacheJson = serde_json::from_slice(data).unwrap();
            import_frobenius_cache(&json).is_ok()
        })
        .collect();
    // one valid entry, one with the wrong dimension
    assert_eq!(results.iter().filter(|ok| **ok).count(), 1);
    assert_eq!(results.len(), 2);
}

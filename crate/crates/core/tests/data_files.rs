use std::fs;
use std::path::PathBuf;

use twofactor::constructions::{named, CATALOG_KEYS};
use twofactor::io::{parse_graph6, write_graph6};
use twofactor::Error;

fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

#[test]
fn shipped_graph6_files_match_the_catalog() {
    let mut found = 0;
    for key in CATALOG_KEYS {
        let path = data_dir().join(format!("{key}.g6"));
        match named(key) {
            Ok(ng) => {
                let text =
                    fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
                assert_eq!(
                    text,
                    format!("{}\n", write_graph6(&ng.graph).unwrap()),
                    "{key}"
                );
                assert_eq!(parse_graph6(&text).unwrap(), ng.graph, "{key}");
                found += 1;
            }
            Err(Error::NoData(_)) => assert!(!path.exists(), "{key}"),
            Err(e) => panic!("{key}: {e}"),
        }
    }
    assert_eq!(found, CATALOG_KEYS.len() - 1);
}

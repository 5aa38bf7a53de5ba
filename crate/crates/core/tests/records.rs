use std::io::Write;
use std::sync::Arc;

use tamedeg_core::classify::DeltaBoundRegistry;
use tamedeg_core::degree::Weight;
use tamedeg_core::search::{self, load, persist, run_search, SearchConfig, SearchError, SearchMode, SearchRecord};

fn sample_records(n: usize) -> Vec<SearchRecord> {
    let config = SearchConfig {
        mode: SearchMode::Randomized { sample_count: n },
        max_word_length: 4,
        degree_cap: 32,
        weights: vec![Weight::standard()],
        seed: 11,
        ..SearchConfig::default()
    };
    let (records, stats) = run_search(&config, &DeltaBoundRegistry::builtin()).unwrap();
    assert_eq!(stats.emitted, n);
    records
}

#[test]
fn hundred_records_round_trip() {
    let records = sample_records(100);
    assert_eq!(records.len(), 100);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("records.jsonl");
    persist(&records, &path).unwrap();
    let back = load(&path).unwrap();
    assert_eq!(back, records);
    assert!(back.iter().all(SearchRecord::reverify));
}

#[test]
fn appending_keeps_earlier_lines() {
    let records = sample_records(10);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("records.jsonl");
    persist(&records[..4], &path).unwrap();
    persist(&records[4..], &path).unwrap();
    assert_eq!(load(&path).unwrap(), records);
}

#[test]
fn schema_mismatch_is_reported() {
    let records = sample_records(2);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("records.jsonl");
    persist(&records, &path).unwrap();
    let mut old = serde_json::to_value(&records[0]).unwrap();
    old["schema_version"] = serde_json::json!(search::SCHEMA_VERSION + 1);
    let mut f = std::fs::OpenOptions::new().append(true).open(&path).unwrap();
    writeln!(f, "{old}").unwrap();
    match load(&path) {
        Err(SearchError::SchemaVersion { line, found, expected }) => {
            assert_eq!(line, 3);
            assert_eq!(found, u64::from(search::SCHEMA_VERSION + 1));
            assert_eq!(expected, search::SCHEMA_VERSION);
        }
        other => panic!("expected a schema error, got {other:?}"),
    }
}

#[test]
fn garbage_line_is_reported_with_its_number() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("records.jsonl");
    std::fs::write(&path, "\n{not json\n").unwrap();
    assert!(matches!(load(&path), Err(SearchError::Record { line: 2, .. })));
}

#[test]
fn tampered_multidegree_fails_reverification() {
    let mut r = sample_records(1).remove(0);
    r.mdeg[0] = &r.mdeg[0] + &r.mdeg[0];
    assert!(!r.reverify());
}

#[test]
fn concurrent_appends_do_not_interleave() {
    let records = Arc::new(sample_records(50));
    let dir = tempfile::tempdir().unwrap();
    let path = Arc::new(dir.path().join("records.jsonl"));
    let handles: Vec<_> = (0..2)
        .map(|_| {
            let records = Arc::clone(&records);
            let path = Arc::clone(&path);
            std::thread::spawn(move || {
                for r in records.iter() {
                    persist(std::slice::from_ref(r), &path).unwrap();
                }
            })
        })
        .collect();
    for h in handles {
        h.join().unwrap();
    }
    let back = load(&path).unwrap();
    assert_eq!(back.len(), 100);
    for r in records.iter() {
        assert_eq!(back.iter().filter(|b| *b == r).count(), 2);
    }
}

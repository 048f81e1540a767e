//! Runs every acceptance criterion over the built-in ring families and prints one line per
//! criterion. Run with `--nocapture` to see the table.

use e2homlab::check::{check_suite, family, Status, Verdict, CRITERIA, CSV_HEADER};
use e2homlab::Caps;

fn table(verdicts: &[Verdict]) -> String {
    let mut s = format!("{CSV_HEADER}\n");
    for v in verdicts {
        s.push_str(&v.csv_row(false));
        s.push('\n');
    }
    s
}

#[test]
fn acceptance() {
    let rings = family("all").unwrap();
    let ids: Vec<u8> = CRITERIA.iter().map(|(i, _)| *i).collect();
    let verdicts = check_suite(&rings, Caps::default(), &ids, 1).expect("suite runs");
    assert_eq!(verdicts.len(), rings.len() * ids.len());

    let mut failed = Vec::new();
    for (id, name) in CRITERIA {
        let rows: Vec<&Verdict> = verdicts.iter().filter(|v| v.criterion == id).collect();
        let bad: Vec<String> = rows
            .iter()
            .filter(|v| matches!(v.status, Status::Fail | Status::Error))
            .map(|v| format!("{} ({} vs {})", v.ring, v.expected, v.got))
            .collect();
        let ran = rows.iter().filter(|v| v.status != Status::Skip).count();
        let skipped = rows.len() - ran;
        if bad.is_empty() {
            println!("criterion {id:>2} {name:<22} PASS  {ran} rings, {skipped} not applicable");
        } else {
            println!("criterion {id:>2} {name:<22} FAIL  {}", bad.join("; "));
            failed.push(id);
        }
    }
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}

#[test]
fn parallel_run_matches_serial() {
    let rings = family("fields-small").unwrap();
    let ids = [1, 2, 3, 4, 5, 9];
    let serial = check_suite(&rings, Caps::default(), &ids, 1).unwrap();
    let parallel = check_suite(&rings, Caps::default(), &ids, 3).unwrap();
    assert_eq!(table(&serial), table(&parallel));
}

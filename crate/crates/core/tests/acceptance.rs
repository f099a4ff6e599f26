//! One pass/fail line per acceptance criterion.

use std::process::ExitCode;
use std::time::Instant;

use tanabe_core::verify::{run_tag, Record, VerifyConfig};

const CRITERIA: [(u32, &str, &[&str]); 10] = [
    (1, "diagram-product example", &["product-example"]),
    (2, "A_2 classification tables", &["classification"]),
    (3, "multiplyX structure-constant oracle", &["mult-oracle"]),
    (4, "closure grid", &["closure"]),
    (5, "Schur-Weyl grid", &["schur-weyl"]),
    (6, "Bratteli figures", &["bratteli-figures"]),
    (7, "dimension identities", &["dims"]),
    (8, "JM operator identities", &["zkr", "central", "containment", "jm-commute"]),
    (9, "(2,2,2k) specials", &["mk22"]),
    (10, "JM joint spectra", &["jm-spectra"]),
];

fn main() -> ExitCode {
    let config = VerifyConfig { seed: 2024, ..Default::default() };
    let mut all = true;
    for (id, name, tags) in CRITERIA {
        let start = Instant::now();
        let mut records: Vec<Record> = Vec::new();
        let mut error = None;
        for tag in tags {
            match run_tag(tag, &config) {
                Ok(rs) => records.extend(rs),
                Err(e) => error = Some(format!("{tag}: {e}")),
            }
        }
        let failed: Vec<&Record> = records.iter().filter(|r| !r.pass).collect();
        let pass = error.is_none() && failed.is_empty() && !records.is_empty();
        all &= pass;
        println!(
            "criterion {id:>2} [{}] {name}: {} records, {} failed ({:.2?})",
            if pass { "PASS" } else { "FAIL" },
            records.len(),
            failed.len(),
            start.elapsed()
        );
        if let Some(e) = error {
            println!("    error: {e}");
        }
        for r in failed {
            println!("    {} {}: {}", r.tag, r.point, r.detail);
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

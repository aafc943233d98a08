//! Runs the shipped corpus and prints the verdict counts.

use eugroups::corpus::{load_corpus, run_entries, RunOptions};
use eugroups::theorems::Verdict;

fn main() {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/data/corpus.json").to_string());
    let entries = match load_corpus(&path) {
        Ok(e) => e,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(2);
        }
    };
    let result = run_entries(&entries, &RunOptions::default());
    let count = |f: &dyn Fn(&Verdict) -> bool| {
        result
            .reports
            .iter()
            .filter(|r| f(&r.theorem_a.verdict))
            .count()
    };
    println!(
        "{} entries analysed, {} skipped",
        result.reports.len(),
        result.skipped.len()
    );
    println!("CONFIRMS_A: {}", count(&|v| *v == Verdict::ConfirmsA));
    println!(
        "not applicable (supersoluble): {}",
        count(&|v| *v == Verdict::NotApplicable)
    );
    println!("violations: {}", result.violations());
    println!("expectation mismatches: {}", result.mismatches());
    let eu: Vec<&str> = result
        .reports
        .iter()
        .filter(|r| r.brute_eu.applicable && r.brute_eu.holds)
        .map(|r| r.name.as_str())
        .collect();
    println!("E_U groups: {}", eu.join(", "));
}

//! Run every verifier over the bundled corpus and print a summary table.

use std::time::Instant;

use spectra::harness::corpus::default_corpus;
use spectra::harness::{run_corpus, Verdict};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let start = Instant::now();
    let report = run_corpus(&default_corpus())?;
    for entry in &report.entries {
        let cells: Vec<String> = entry
            .reports
            .iter()
            .map(|r| {
                let mark = match &r.verdict {
                    Verdict::Pass => "ok",
                    Verdict::Fail => "FAIL",
                    Verdict::Skipped(_) => "-",
                    Verdict::Error(_) => "ERR",
                };
                format!("{}:{mark}", r.theorem)
            })
            .collect();
        println!("{:<16} {}", entry.expr, cells.join(" "));
    }
    println!(
        "passed {} failed {} skipped {} errors {} in {:?}",
        report.passed(),
        report.failed(),
        report.skipped(),
        report.errors(),
        start.elapsed()
    );
    Ok(())
}

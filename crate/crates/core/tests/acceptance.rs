//! Runs the numbered acceptance criteria and prints one PASS/FAIL line each.
//!
//! Reports listed in `DOCUMENTED` fail on purpose: the computed value is
//! checked against a printed constant that is wrong, and the correct value
//! is asserted in `examples.rs`. They still make their criterion FAIL here;
//! only failures outside the list give a nonzero exit, so that the rest of
//! `cargo test` keeps running.

use std::process::ExitCode;
use std::time::Instant;

use minuscule::verify::suite::{acceptance_criteria, run_criterion};
use minuscule::verify::Status;

const TOTAL_LIMIT_SECS: f64 = 900.0;

const DOCUMENTED: &[(&str, &str)] = &[
    ("E7.identity.translated_root_sum", "printed 54(a+1), exact 72a+54"),
    ("E6.plus.identity.translated_root_sum", "printed 32(b+1), exact 48b+32"),
    ("E6.minus.identity.translated_root_sum", "printed 32(b+1), exact 48b+32"),
];

fn main() -> ExitCode {
    let only: Vec<u32> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let start = Instant::now();
    let mut failed = Vec::new();
    let mut unexpected = Vec::new();
    for c in acceptance_criteria() {
        if !only.is_empty() && !only.contains(&c.number) {
            continue;
        }
        let r = run_criterion(&c);
        println!("{}", r.line());
        if r.passed() {
            continue;
        }
        failed.push(r.number);
        let over_time = r.limit.is_some_and(|l| r.seconds > l);
        let odd: Vec<String> = r
            .reports
            .iter()
            .filter(|x| x.status != Status::Pass && !DOCUMENTED.iter().any(|(id, _)| *id == x.check_id))
            .map(|x| x.check_id.clone())
            .collect();
        if over_time {
            unexpected.push(format!("criterion {} over its time limit", r.number));
        }
        if r.reports.is_empty() {
            unexpected.push(format!("criterion {} produced no reports", r.number));
        }
        unexpected.extend(odd);
    }
    let total = start.elapsed().as_secs_f64();
    println!("total {total:.1}s");
    if total > TOTAL_LIMIT_SECS {
        unexpected.push(format!("total runtime over {TOTAL_LIMIT_SECS}s"));
    }
    if !failed.is_empty() {
        println!("failed criteria: {failed:?}");
        for (id, why) in DOCUMENTED {
            println!("  documented: {id}: {why}");
        }
    }
    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("unexpected failures: {unexpected:?}");
        ExitCode::FAILURE
    }
}

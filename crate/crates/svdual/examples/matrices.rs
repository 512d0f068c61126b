//! Runs the explicit-matrix identity suite and prints failures.
use svdual::matrixlab::check_all;

fn main() {
    let max_n = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(8);
    let report = check_all(max_n);
    let failures = report.failures();
    println!("{} checks, {} failures", report.results.len(), failures.len());
    for f in failures {
        println!("FAIL {} {} {}", f.id, f.params, f.detail.as_deref().unwrap_or(""));
    }
}

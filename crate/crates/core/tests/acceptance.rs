//! Exit criteria, one line per criterion. Runs as a plain binary so that
//! every row is reported even when an earlier one fails.

use std::process::ExitCode;
use std::time::Instant;

use tricenter::verification::{run, Status, VerifyOptions};

fn main() -> ExitCode {
    let started = Instant::now();
    let reports = run(&VerifyOptions::full());
    for r in &reports {
        println!("{r}");
    }
    let failed = reports.iter().filter(|r| r.status != Status::Pass).count();
    println!(
        "acceptance: {} passed, {failed} failed in {:.1?}",
        reports.len() - failed,
        started.elapsed()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

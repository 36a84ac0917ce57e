//! One line per acceptance criterion; exits nonzero if any fails.

use std::process::ExitCode;

use legvar::acceptance::{run_one, CRITERIA};

fn main() -> ExitCode {
    let seed = std::env::var("LEGVAR_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(0);
    let mut failed = 0;
    for c in CRITERIA {
        let o = run_one(c, seed);
        println!("{}", o.line());
        failed += usize::from(!o.passed());
    }
    println!("{} of {} criteria passed", CRITERIA.len() - failed, CRITERIA.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

//! Verification harness over `qhl-core`: identity suites, `compute`, and
//! the self-test, each producing deterministic reports.

use std::fmt;

pub mod compute;
pub mod report;
pub mod selftest;
pub mod suites;

pub use report::{CaseResult, VerificationReport};
pub use suites::{verify, verify_all, Bounds, Suite, LIMITS};

/// Bad flags or out-of-range bounds. Exit code 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

/// Size the global rayon pool from `QHL_THREADS`, if set. Later calls are
/// no-ops.
pub fn init_threads() -> Result<(), UsageError> {
    let Ok(raw) = std::env::var("QHL_THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| UsageError(format!("QHL_THREADS={raw:?} is not a positive integer")))?;
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    Ok(())
}

//! Verification harness: corpora, theorem suites, conjecture search and
//! single computations, all reporting JSON lines.

pub mod compute;
pub mod corpus;
pub mod error;
pub mod report;
pub mod search;
pub mod verify;

pub use error::{exit, HarnessError, Result};

/// Runs `f` on a thread pool of `jobs` workers; `0` picks the default size.
pub fn with_jobs<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| HarnessError::input(format!("cannot build a pool of {jobs} threads: {e}")))?;
    Ok(pool.install(f))
}

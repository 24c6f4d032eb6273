//! Shared fixtures for the benchmark targets.

use hanoi_core::PuzzleParams;

/// Benchmark instances, chosen so a full scan stays in the low milliseconds
/// to low seconds range in release builds.
pub fn instance(k: u8, n: u8) -> PuzzleParams {
    PuzzleParams::new(k, n).expect("benchmark instance is valid")
}

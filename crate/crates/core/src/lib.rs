//! Tower of Hanoi graphs as implicit state-space graphs.
//!
//! The graph `H(k, n)` has one vertex per legal configuration of `n` disks on
//! `k` pegs and one edge per legal single-disk move. This crate exposes the
//! graph implicitly (neighbor generation by digit surgery on packed codes),
//! computes exact BFS distances and geodesic structure, enumerates the full
//! automorphism group without assuming it is the set of peg relabelings, and
//! synthesizes Frame-Stewart move plans for comparison against exact
//! distances.

pub mod check;
pub mod error;
pub mod graph;
pub mod metric;
pub mod params;
pub mod solver;
pub mod state;
pub mod symmetry;

pub use check::CheckResult;
pub use error::{Error, IllegalMoveReason, Result};
pub use graph::{DotOptions, EdgeMatrix};
pub use metric::{CornerTables, DistanceTable, GeodesicDag, NearestCornerReport};
pub use params::PuzzleParams;
pub use solver::{ComparisonReport, FsCount, MovePlan};
pub use state::{Move, State, TopmostProfile};
pub use symmetry::{AutomorphismSet, GroupReport, PegPermutation, VertexMap};

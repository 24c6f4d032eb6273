//! Crate-wide error type.

use crate::state::Move;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Why a move is not legal in a given state.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IllegalMoveReason {
    DiskOutOfRange,
    PegOutOfRange,
    SamePeg,
    DiskNotOnFromPeg,
    DiskNotTopmost,
    DestinationBlocked,
}

impl std::fmt::Display for IllegalMoveReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let msg = match self {
            Self::DiskOutOfRange => "disk index out of range",
            Self::PegOutOfRange => "peg index out of range",
            Self::SamePeg => "source and destination pegs are equal",
            Self::DiskNotOnFromPeg => "disk does not sit on the source peg",
            Self::DiskNotTopmost => "disk is not the topmost disk of its peg",
            Self::DestinationBlocked => "destination peg holds a smaller disk",
        };
        f.write_str(msg)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("need at least 3 pegs, got {pegs}")]
    TooFewPegs { pegs: u8 },

    #[error("need at least 1 disk")]
    NoDisks,

    #[error("state space {pegs}^{disks} exceeds the 2^48 packed-code limit")]
    StateSpaceTooLarge { pegs: u8, disks: u8 },

    #[error("peg index {peg} out of range for {pegs} pegs")]
    PegOutOfRange { peg: u8, pegs: u8 },

    #[error("packed code {code} out of range for a state space of {vertices} vertices")]
    CodeOutOfRange { code: u64, vertices: u64 },

    #[error("state text has {got} digits, expected {expected}")]
    StateWrongLength { expected: usize, got: usize },

    #[error("digit {digit} at position {position} is not below the peg count {pegs}")]
    StateDigitTooLarge {
        position: usize,
        digit: u64,
        pegs: u8,
    },

    #[error("malformed state text: {detail}")]
    StateMalformed { detail: String },

    #[error("illegal move {mv}: {reason}")]
    IllegalMove { mv: Move, reason: IllegalMoveReason },

    #[error("instance has {vertices} vertices, above the exhaustive-scan cap of {cap}")]
    TooLargeForScan { vertices: u64, cap: u64 },

    #[error("instance has {vertices} vertices, above the explicit-materialization cap of {cap}")]
    TooLargeToMaterialize { vertices: u64, cap: u64 },

    #[error("bidirectional search visited more than {budget} vertices")]
    SearchBudgetExceeded { budget: u64 },

    #[error("automorphism enumeration over {pegs} pegs exceeds the {cap}-peg cap")]
    TooManyPegsForEnumeration { pegs: u8, cap: u8 },

    #[error("operation needs at least {needed} disks, instance has {got}")]
    TooFewDisks { needed: u8, got: u8 },

    #[error("distance {distance} does not fit a 16-bit table entry")]
    DistanceOverflow { distance: u64 },

    #[error("states belong to different puzzle instances")]
    ParamsMismatch,

    #[error("move count for {disks} disks on {pegs} pegs overflows u64")]
    CountOverflow { disks: u32, pegs: u32 },

    #[error("plan endpoints must be distinct pegs")]
    PlanEndpointsEqual,

    #[error("plan of {moves} moves exceeds the synthesis cap of {cap}")]
    PlanTooLong { moves: u64, cap: u64 },

    #[error("plan replay failed at step {step}: {reason} (state {state}, move {mv})")]
    PlanReplay {
        step: usize,
        state: String,
        mv: Move,
        reason: IllegalMoveReason,
    },

    #[error("vertex map table has {got} entries, expected {expected}")]
    MapWrongLength { expected: u64, got: usize },

    #[error("peg permutation images are not a bijection on 0..{pegs}")]
    NotAPermutation { pegs: u8 },

    #[error("group axiom violated: {detail}")]
    GroupAxiomViolated { detail: String },

    #[error("internal consistency check failed in {context}: {detail}")]
    Inconsistency {
        context: &'static str,
        detail: String,
    },

    #[error("i/o failure: {0}")]
    Io(#[from] std::io::Error),
}

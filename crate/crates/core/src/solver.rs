//! Frame–Stewart move counting and plan synthesis, compared against exact
//! BFS distances. The recursion: split off the top t disks, park them on a
//! spare peg using all pegs, move the rest with one peg fewer, then bring the
//! t disks over; three-peg subproblems collapse to the classic 2^n − 1.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::metric::corner_distance;
use crate::params::PuzzleParams;
use crate::state::{perfect_state, Move, State};

/// Refuse to synthesize plans longer than this many moves.
pub const PLAN_MOVE_CAP: u64 = 1 << 24;

/// A Frame–Stewart move count plus the split that achieves it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FsCount {
    pub moves: u64,
    /// Smallest minimizing top-group size t; `None` when the recurrence has
    /// no split to choose (n ≤ 1, or the closed-form three-peg case).
    pub split: Option<u8>,
}

/// Bottom-up table of (moves, split) for all peg counts 3..=pegs and disk
/// counts 0..=disks. Values kept in u128 so oversized entries stay ordered
/// instead of wrapping; the public API rejects anything beyond u64.
fn fs_table(disks: u8, pegs: u8) -> Vec<Vec<(u128, Option<u8>)>> {
    let n = disks as usize;
    let mut table: Vec<Vec<(u128, Option<u8>)>> = Vec::with_capacity(pegs as usize - 2);
    let three: Vec<(u128, Option<u8>)> = (0..=n)
        .map(|d| {
            let moves = if d < 127 { (1u128 << d) - 1 } else { u128::MAX };
            (moves, None)
        })
        .collect();
    table.push(three);
    for k in 4..=pegs {
        let prev = &table[k as usize - 4];
        let mut row: Vec<(u128, Option<u8>)> = Vec::with_capacity(n + 1);
        row.push((0, None));
        if n >= 1 {
            row.push((1, None));
        }
        for d in 2..=n {
            let mut best = (u128::MAX, None);
            for t in 1..d {
                let cost = row[t].0.saturating_mul(2).saturating_add(prev[d - t].0);
                if cost < best.0 {
                    best = (cost, Some(t as u8));
                }
            }
            row.push(best);
        }
        table.push(row);
    }
    table
}

fn fs_cell(table: &[Vec<(u128, Option<u8>)>], disks: usize, pegs: u8) -> (u128, Option<u8>) {
    table[pegs as usize - 3][disks]
}

/// Frame–Stewart move count for `disks` disks on `pegs` pegs, with the
/// smallest minimizing split.
pub fn frame_stewart_count(disks: u8, pegs: u8) -> Result<FsCount> {
    if pegs < 3 {
        return Err(Error::TooFewPegs { pegs });
    }
    let table = fs_table(disks, pegs);
    let (moves, split) = fs_cell(&table, disks as usize, pegs);
    if moves > u64::MAX as u128 {
        return Err(Error::CountOverflow {
            disks: disks as u32,
            pegs: pegs as u32,
        });
    }
    Ok(FsCount {
        moves: moves as u64,
        split,
    })
}

/// A validated move sequence: replaying `moves` from `start` is legal at
/// every step (checked at construction).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MovePlan {
    params: PuzzleParams,
    start: State,
    moves: Vec<Move>,
    end: State,
}

impl MovePlan {
    /// Builds a plan, validating every step by replay.
    pub fn new(params: PuzzleParams, start: State, moves: Vec<Move>) -> Result<Self> {
        let end = replay(params, start, &moves)?;
        Ok(Self {
            params,
            start,
            moves,
            end,
        })
    }

    pub fn params(&self) -> PuzzleParams {
        self.params
    }

    pub fn start(&self) -> State {
        self.start
    }

    /// Final state after all moves.
    pub fn end(&self) -> State {
        self.end
    }

    pub fn moves(&self) -> &[Move] {
        &self.moves
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }
}

fn replay(params: PuzzleParams, start: State, moves: &[Move]) -> Result<State> {
    if start.params() != params {
        return Err(Error::ParamsMismatch);
    }
    let mut current = start;
    for (step, &mv) in moves.iter().enumerate() {
        current = current.apply(mv).map_err(|err| match err {
            Error::IllegalMove { mv, reason } => Error::PlanReplay {
                step,
                state: current.to_string(),
                mv,
                reason,
            },
            other => other,
        })?;
    }
    Ok(current)
}

/// Applies a plan's moves from an arbitrary start, failing with the step
/// index, state and move of the first illegal step.
pub fn replay_plan(params: PuzzleParams, start: State, plan: &MovePlan) -> Result<State> {
    if plan.params() != params {
        return Err(Error::ParamsMismatch);
    }
    replay(params, start, plan.moves())
}

/// Emits moves transferring disks lo..hi from `from` to `to`, using exactly
/// the pegs in `allowed` (which contains both endpoints). All disks below lo
/// are parked outside `allowed`; disks above hi are larger and never block.
fn emit_group(
    table: &[Vec<(u128, Option<u8>)>],
    lo: u8,
    hi: u8,
    from: u8,
    to: u8,
    allowed: &[u8],
    out: &mut Vec<Move>,
) {
    let m = hi - lo;
    if m == 0 {
        return;
    }
    if m == 1 {
        out.push(Move {
            disk: lo,
            from_peg: from,
            to_peg: to,
        });
        return;
    }
    let spare = *allowed
        .iter()
        .find(|&&p| p != from && p != to)
        .expect("at least three allowed pegs");
    if allowed.len() == 3 {
        emit_group(table, lo, hi - 1, from, spare, allowed, out);
        out.push(Move {
            disk: hi - 1,
            from_peg: from,
            to_peg: to,
        });
        emit_group(table, lo, hi - 1, spare, to, allowed, out);
    } else {
        let t = fs_cell(table, m as usize, allowed.len() as u8)
            .1
            .expect("split defined for m >= 2 on >= 4 pegs");
        let without_spare: Vec<u8> = allowed.iter().copied().filter(|&p| p != spare).collect();
        emit_group(table, lo, lo + t, from, spare, allowed, out);
        emit_group(table, lo + t, hi, from, to, &without_spare, out);
        emit_group(table, lo, lo + t, spare, to, allowed, out);
    }
}

/// Synthesizes the Frame–Stewart plan moving all disks from one corner to
/// another: exactly `frame_stewart_count` moves, legal at every step.
pub fn frame_stewart_plan(params: PuzzleParams, from_peg: u8, to_peg: u8) -> Result<MovePlan> {
    let k = params.pegs();
    for peg in [from_peg, to_peg] {
        if peg >= k {
            return Err(Error::PegOutOfRange { peg, pegs: k });
        }
    }
    if from_peg == to_peg {
        return Err(Error::PlanEndpointsEqual);
    }
    let n = params.disks();
    let count = frame_stewart_count(n, k)?;
    if count.moves > PLAN_MOVE_CAP {
        return Err(Error::PlanTooLong {
            moves: count.moves,
            cap: PLAN_MOVE_CAP,
        });
    }
    let table = fs_table(n, k);
    let allowed: Vec<u8> = (0..k).collect();
    let mut moves = Vec::with_capacity(count.moves as usize);
    emit_group(&table, 0, n, from_peg, to_peg, &allowed, &mut moves);
    if moves.len() as u64 != count.moves {
        return Err(Error::Inconsistency {
            context: "plan synthesis",
            detail: format!(
                "emitted {} moves, recurrence says {}",
                moves.len(),
                count.moves
            ),
        });
    }
    let start = perfect_state(params, from_peg)?;
    let plan = MovePlan::new(params, start, moves)?;
    if plan.end() != perfect_state(params, to_peg)? {
        return Err(Error::Inconsistency {
            context: "plan synthesis",
            detail: format!("plan ends at {}, not the target corner", plan.end()),
        });
    }
    Ok(plan)
}

/// Frame–Stewart count next to the exact corner-to-corner distance.
#[derive(Debug, Clone, Serialize)]
pub struct ComparisonReport {
    pub params: PuzzleParams,
    pub from_peg: u8,
    pub to_peg: u8,
    pub fs_count: u64,
    pub exact_distance: u16,
    pub equal: bool,
}

/// Compares the recurrence value against the exact BFS distance between two
/// corners.
pub fn compare_exact(params: PuzzleParams, from_peg: u8, to_peg: u8) -> Result<ComparisonReport> {
    if from_peg == to_peg {
        return Err(Error::PlanEndpointsEqual);
    }
    let fs = frame_stewart_count(params.disks(), params.pegs())?;
    let exact = corner_distance(params, from_peg, to_peg)?;
    Ok(ComparisonReport {
        params,
        from_peg,
        to_peg,
        fs_count: fs.moves,
        exact_distance: exact,
        equal: fs.moves == exact as u64,
    })
}

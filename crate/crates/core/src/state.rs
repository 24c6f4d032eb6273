//! Legal states, legal moves, degrees and substructure indexing.
//!
//! A state assigns each disk a peg; the stacking order on a peg is forced by
//! disk size, so every n-digit base-k word is a legal state. Digit i is the
//! peg of disk i (disk 0 is the smallest disk and the least significant
//! digit), and the packed code is the base-k value of the word.

use crate::error::{Error, IllegalMoveReason, Result};
use crate::params::PuzzleParams;

const NO_DISK: u8 = u8::MAX;

/// One legal configuration of the puzzle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct State {
    params: PuzzleParams,
    code: u64,
}

/// One legal disk transfer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Move {
    pub disk: u8,
    pub from_peg: u8,
    pub to_peg: u8,
}

impl Move {
    /// The move undoing `self`.
    pub fn reversed(&self) -> Move {
        Move {
            disk: self.disk,
            from_peg: self.to_peg,
            to_peg: self.from_peg,
        }
    }
}

impl std::fmt::Display for Move {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "disk {}: {}->{}", self.disk, self.from_peg, self.to_peg)
    }
}

/// Per-peg topmost (smallest) disk, or empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopmostProfile {
    tops: Vec<Option<u8>>,
}

impl TopmostProfile {
    pub fn top_of(&self, peg: u8) -> Option<u8> {
        self.tops[peg as usize]
    }

    /// Number of occupied pegs; always in 1..=min(k, n).
    pub fn occupied_pegs(&self) -> usize {
        self.tops.iter().filter(|t| t.is_some()).count()
    }

    /// (peg, topmost disk) pairs in ascending peg order.
    pub fn iter(&self) -> impl Iterator<Item = (u8, u8)> + '_ {
        self.tops
            .iter()
            .enumerate()
            .filter_map(|(peg, top)| top.map(|d| (peg as u8, d)))
    }
}

impl State {
    /// State with the given packed code.
    pub fn from_code(params: PuzzleParams, code: u64) -> Result<Self> {
        let vertices = params.vertex_count();
        if code >= vertices {
            return Err(Error::CodeOutOfRange { code, vertices });
        }
        Ok(Self { params, code })
    }

    pub fn params(&self) -> PuzzleParams {
        self.params
    }

    pub fn code(&self) -> u64 {
        self.code
    }

    /// Peg holding `disk`.
    pub fn digit(&self, disk: u8) -> u8 {
        debug_assert!(disk < self.params.disks());
        (self.code / self.params.pow(disk) % self.params.pegs() as u64) as u8
    }

    /// Pegs of all disks, indexed by disk (disk 0 first).
    pub fn digits(&self) -> Vec<u8> {
        let k = self.params.pegs() as u64;
        let mut c = self.code;
        (0..self.params.disks())
            .map(|_| {
                let d = (c % k) as u8;
                c /= k;
                d
            })
            .collect()
    }

    /// Peg of the largest disk; the state lies in substructure [i] iff this
    /// returns i.
    pub fn substructure_index(&self) -> u8 {
        self.digit(self.params.disks() - 1)
    }

    /// True iff all disks sit on one peg (a corner vertex).
    pub fn is_perfect(&self) -> bool {
        self.perfect_peg().is_some()
    }

    /// The peg of a perfect state, if this is one.
    pub fn perfect_peg(&self) -> Option<u8> {
        let digits = self.digits();
        let first = digits[0];
        digits.iter().all(|&d| d == first).then_some(first)
    }

    /// Per-peg topmost disks.
    pub fn topmost_profile(&self) -> TopmostProfile {
        let mut tops = vec![None; self.params.pegs() as usize];
        for (disk, peg) in self.digits().into_iter().enumerate() {
            // ascending disk order: the first disk seen on a peg is its smallest
            if tops[peg as usize].is_none() {
                tops[peg as usize] = Some(disk as u8);
            }
        }
        TopmostProfile { tops }
    }

    /// All legal moves, sorted by (disk, destination peg).
    ///
    /// With the topmost disks sorted ascending as b_0 < b_1 < ..., disk b_t
    /// can go to every peg except its own and the t pegs holding a smaller
    /// topmost disk, contributing exactly k-1-t moves.
    pub fn legal_moves(&self) -> Vec<Move> {
        let profile = self.topmost_profile();
        let mut tops: Vec<(u8, u8)> = profile.iter().map(|(peg, disk)| (disk, peg)).collect();
        tops.sort_unstable();
        let mut moves = Vec::new();
        for &(disk, from_peg) in &tops {
            for to_peg in 0..self.params.pegs() {
                if to_peg == from_peg {
                    continue;
                }
                match profile.top_of(to_peg) {
                    Some(other) if other < disk => {}
                    _ => moves.push(Move {
                        disk,
                        from_peg,
                        to_peg,
                    }),
                }
            }
        }
        moves
    }

    /// Applies a move after validating its legality.
    pub fn apply(&self, mv: Move) -> Result<State> {
        let k = self.params.pegs();
        let reason = if mv.disk >= self.params.disks() {
            Some(IllegalMoveReason::DiskOutOfRange)
        } else if mv.from_peg >= k || mv.to_peg >= k {
            Some(IllegalMoveReason::PegOutOfRange)
        } else if mv.from_peg == mv.to_peg {
            Some(IllegalMoveReason::SamePeg)
        } else if self.digit(mv.disk) != mv.from_peg {
            Some(IllegalMoveReason::DiskNotOnFromPeg)
        } else {
            let profile = self.topmost_profile();
            if profile.top_of(mv.from_peg) != Some(mv.disk) {
                Some(IllegalMoveReason::DiskNotTopmost)
            } else {
                match profile.top_of(mv.to_peg) {
                    Some(other) if other < mv.disk => Some(IllegalMoveReason::DestinationBlocked),
                    _ => None,
                }
            }
        };
        if let Some(reason) = reason {
            return Err(Error::IllegalMove { mv, reason });
        }
        let pow = self.params.pow(mv.disk);
        let code = self.code - mv.from_peg as u64 * pow + mv.to_peg as u64 * pow;
        Ok(State {
            params: self.params,
            code,
        })
    }

    /// Number of legal moves, via the closed form m(k-1) - m(m-1)/2 over the
    /// occupied-peg count m.
    pub fn degree(&self) -> u32 {
        let m = self.topmost_profile().occupied_pegs() as u32;
        let k = self.params.pegs() as u32;
        m * (k - 1) - m * (m - 1) / 2
    }
}

impl std::fmt::Display for State {
    /// Renders the digit word a_{n-1}...a_0, contiguous for k <= 10 and
    /// comma-separated for larger peg alphabets.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let digits = self.digits();
        if self.params.pegs() <= 10 {
            for &d in digits.iter().rev() {
                write!(f, "{d}")?;
            }
        } else {
            for (i, &d) in digits.iter().rev().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{d}")?;
            }
        }
        Ok(())
    }
}

/// Parses the digit word a_{n-1}...a_0: exactly n contiguous digits for
/// k <= 10, or n comma-separated decimal values for larger k.
pub fn parse_state(text: &str, params: PuzzleParams) -> Result<State> {
    let k = params.pegs();
    let n = params.disks() as usize;
    let mut digits_msd_first = Vec::with_capacity(n);
    if k <= 10 {
        let chars: Vec<char> = text.chars().collect();
        if chars.len() != n {
            return Err(Error::StateWrongLength {
                expected: n,
                got: chars.len(),
            });
        }
        for (position, c) in chars.into_iter().enumerate() {
            let digit = c.to_digit(10).ok_or_else(|| Error::StateMalformed {
                detail: format!("non-digit character {c:?} at position {position}"),
            })? as u64;
            if digit >= k as u64 {
                return Err(Error::StateDigitTooLarge {
                    position,
                    digit,
                    pegs: k,
                });
            }
            digits_msd_first.push(digit);
        }
    } else {
        let fields: Vec<&str> = text.split(',').collect();
        if fields.len() != n {
            return Err(Error::StateWrongLength {
                expected: n,
                got: fields.len(),
            });
        }
        for (position, field) in fields.into_iter().enumerate() {
            if field.is_empty() || !field.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::StateMalformed {
                    detail: format!(
                        "field {field:?} at position {position} is not a decimal value"
                    ),
                });
            }
            let digit: u64 = field.parse().map_err(|_| Error::StateMalformed {
                detail: format!("field {field:?} at position {position} is out of range"),
            })?;
            if digit >= k as u64 {
                return Err(Error::StateDigitTooLarge {
                    position,
                    digit,
                    pegs: k,
                });
            }
            digits_msd_first.push(digit);
        }
    }
    let code = digits_msd_first
        .into_iter()
        .fold(0u64, |acc, d| acc * k as u64 + d);
    State::from_code(params, code)
}

/// The perfect state with every disk on `peg`.
pub fn perfect_state(params: PuzzleParams, peg: u8) -> Result<State> {
    if peg >= params.pegs() {
        return Err(Error::PegOutOfRange {
            peg,
            pegs: params.pegs(),
        });
    }
    Ok(State {
        params,
        code: perfect_code(params, peg),
    })
}

/// Packed code of the perfect state on `peg`.
pub(crate) fn perfect_code(params: PuzzleParams, peg: u8) -> u64 {
    // peg * (k^n - 1) / (k - 1), the all-`peg` digit word
    peg as u64 * ((params.vertex_count() - 1) / (params.pegs() as u64 - 1))
}

/// Precomputed powers and buffers for code-level scans over one instance.
/// Everything hot (BFS, degree scans, enumeration) goes through this to avoid
/// per-vertex allocation.
pub(crate) struct CodeSpace {
    params: PuzzleParams,
    k: u64,
    n: usize,
    pows: Vec<u64>,
}

impl CodeSpace {
    pub fn new(params: PuzzleParams) -> Self {
        let k = params.pegs() as u64;
        let n = params.disks() as usize;
        let mut pows = Vec::with_capacity(n);
        let mut p = 1u64;
        for _ in 0..n {
            pows.push(p);
            p *= k;
        }
        Self { params, k, n, pows }
    }

    pub fn vertex_count(&self) -> u64 {
        self.params.vertex_count()
    }

    /// Leading digit a_{n-1}, the substructure index.
    pub fn substructure_index(&self, code: u64) -> u8 {
        (code / self.pows[self.n - 1]) as u8
    }

    pub fn perfect_peg(&self, code: u64) -> Option<u8> {
        let first = (code % self.k) as u8;
        (code == first as u64 * ((self.vertex_count() - 1) / (self.k - 1))).then_some(first)
    }

    /// Fills `tops[peg]` with the peg's smallest disk (NO_DISK when empty)
    /// and returns the occupied-peg count.
    fn tops_into(&self, code: u64, tops: &mut [u8]) -> u32 {
        tops[..self.k as usize].fill(NO_DISK);
        let mut occupied = 0u32;
        let mut c = code;
        for disk in 0..self.n {
            let peg = (c % self.k) as usize;
            c /= self.k;
            if tops[peg] == NO_DISK {
                tops[peg] = disk as u8;
                occupied += 1;
                if occupied == self.k as u32 {
                    break;
                }
            }
        }
        occupied
    }

    pub fn occupied_pegs(&self, code: u64) -> u32 {
        let mut tops = [NO_DISK; 256];
        self.tops_into(code, &mut tops)
    }

    /// Degree by the closed form m(k-1) - m(m-1)/2.
    pub fn degree(&self, code: u64) -> u32 {
        let m = self.occupied_pegs(code);
        let k = self.k as u32;
        m * (k - 1) - m * (m - 1) / 2
    }

    /// Visits neighbor codes in (disk, destination peg) order.
    pub fn for_each_neighbor(&self, code: u64, mut f: impl FnMut(u64)) {
        let mut tops = [NO_DISK; 256];
        self.tops_into(code, &mut tops);
        let k = self.k as usize;
        let mut pairs = [(NO_DISK, 0u8); 256];
        let mut m = 0;
        for (peg, &top) in tops[..k].iter().enumerate() {
            if top != NO_DISK {
                pairs[m] = (top, peg as u8);
                m += 1;
            }
        }
        pairs[..m].sort_unstable();
        for &(disk, from) in &pairs[..m] {
            let pow = self.pows[disk as usize];
            let base = code - from as u64 * pow;
            for (to, &dest_top) in tops[..k].iter().enumerate() {
                if to == from as usize {
                    continue;
                }
                if dest_top == NO_DISK || dest_top > disk {
                    f(base + to as u64 * pow);
                }
            }
        }
    }

    /// Neighbor count by explicit enumeration (the dual route to `degree`).
    pub fn count_moves(&self, code: u64) -> u32 {
        let mut count = 0;
        self.for_each_neighbor(code, |_| count += 1);
        count
    }
}

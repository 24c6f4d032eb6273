//! Puzzle parameters: the pair (pegs, disks) fixing one graph.

use crate::error::{Error, Result};
use serde::Serialize;

/// Packed codes are base-k positional values, so the whole state space must
/// fit well inside a u64. Anything above 2^48 vertices is rejected outright:
/// the exhaustive operations this crate exists for could never finish there.
pub const PACKED_CODE_LIMIT: u64 = 1 << 48;

/// Cap for operations that touch every vertex (BFS tables, degree scans).
/// Kept low enough that no reachable instance has a diameter overflowing the
/// 16-bit distance entries (the 3-peg diameter doubles per disk and hits
/// 2^15 - 1 at the largest 3-peg instance under this cap).
pub const SCAN_VERTEX_CAP: u64 = 1 << 24;

/// Cap for O(N^2)-memory materializations (edge matrices, DOT export) and for
/// holding explicit vertex-map tables during automorphism enumeration.
pub const MATERIALIZE_VERTEX_CAP: u64 = 20_000;

/// Automorphism enumeration searches one root per peg permutation, so its
/// work grows with k!; eight pegs (40 320 roots) is the practical ceiling.
pub const ENUM_PEG_CAP: u8 = 8;

/// The pair (k pegs, n disks) identifying one Tower of Hanoi graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PuzzleParams {
    pegs: u8,
    disks: u8,
}

impl PuzzleParams {
    /// Validates pegs >= 3, disks >= 1 and the packed-code feasibility guard.
    pub fn new(pegs: u8, disks: u8) -> Result<Self> {
        if pegs < 3 {
            return Err(Error::TooFewPegs { pegs });
        }
        if disks == 0 {
            return Err(Error::NoDisks);
        }
        let mut count: u128 = 1;
        for _ in 0..disks {
            count *= pegs as u128;
            if count > PACKED_CODE_LIMIT as u128 {
                return Err(Error::StateSpaceTooLarge { pegs, disks });
            }
        }
        Ok(Self { pegs, disks })
    }

    pub fn pegs(&self) -> u8 {
        self.pegs
    }

    pub fn disks(&self) -> u8 {
        self.disks
    }

    /// Number of vertices, exactly pegs^disks.
    pub fn vertex_count(&self) -> u64 {
        (self.pegs as u64).pow(self.disks as u32)
    }

    /// pegs^exp for exp <= disks.
    pub(crate) fn pow(&self, exp: u8) -> u64 {
        debug_assert!(exp <= self.disks);
        (self.pegs as u64).pow(exp as u32)
    }

    /// All packed codes in canonical (ascending) order.
    pub fn codes(&self) -> impl Iterator<Item = u64> {
        0..self.vertex_count()
    }

    pub fn ensure_scannable(&self) -> Result<()> {
        let vertices = self.vertex_count();
        if vertices > SCAN_VERTEX_CAP {
            return Err(Error::TooLargeForScan {
                vertices,
                cap: SCAN_VERTEX_CAP,
            });
        }
        Ok(())
    }

    pub fn ensure_materializable(&self) -> Result<()> {
        let vertices = self.vertex_count();
        if vertices > MATERIALIZE_VERTEX_CAP {
            return Err(Error::TooLargeToMaterialize {
                vertices,
                cap: MATERIALIZE_VERTEX_CAP,
            });
        }
        Ok(())
    }
}

impl std::fmt::Display for PuzzleParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "k={}, n={}", self.pegs, self.disks)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_degenerate_parameters() {
        assert!(matches!(
            PuzzleParams::new(2, 5),
            Err(Error::TooFewPegs { pegs: 2 })
        ));
        assert!(matches!(PuzzleParams::new(3, 0), Err(Error::NoDisks)));
    }

    #[test]
    fn feasibility_guard_is_distinct() {
        // 3^30 < 2^48 < 3^31
        assert!(PuzzleParams::new(3, 30).is_ok());
        assert!(matches!(
            PuzzleParams::new(3, 31),
            Err(Error::StateSpaceTooLarge { pegs: 3, disks: 31 })
        ));
        // 2^48 itself is allowed: 4^24 == 2^48
        assert!(PuzzleParams::new(4, 24).is_ok());
        assert!(PuzzleParams::new(4, 25).is_err());
    }

    #[test]
    fn vertex_counts() {
        assert_eq!(PuzzleParams::new(3, 3).unwrap().vertex_count(), 27);
        assert_eq!(PuzzleParams::new(4, 8).unwrap().vertex_count(), 65536);
        assert_eq!(PuzzleParams::new(5, 1).unwrap().vertex_count(), 5);
    }
}

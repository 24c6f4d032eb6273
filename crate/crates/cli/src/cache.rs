//! Binary distance-table cache.
//!
//! Layout: 4 bytes ASCII magic "HGDT", 1 byte version (= 1), 1 byte k,
//! 1 byte n, 8 bytes source packed code (little-endian), then k^n entries of
//! 2 little-endian bytes each — a 15-byte header, 15 + 2·k^n bytes in all.
//! Files are keyed by (k, n, source) in the name and never invalidated: the
//! contents are immutable mathematical facts.

use std::fs;
use std::path::{Path, PathBuf};

use hanoi_core::{metric::DistanceTable, Error, PuzzleParams, Result};

const MAGIC: &[u8; 4] = b"HGDT";
const VERSION: u8 = 1;
const HEADER_LEN: usize = 15;

/// File name carrying the cache key: hgdt_K_N_SOURCE.bin.
pub fn cache_file_name(params: PuzzleParams, source: u64) -> String {
    format!("hgdt_{}_{}_{}.bin", params.pegs(), params.disks(), source)
}

fn malformed(detail: String) -> Error {
    Error::Inconsistency {
        context: "cache file",
        detail,
    }
}

/// Writes `table` into `directory` and returns the file path.
pub fn save_distance_table(table: &DistanceTable, directory: &Path) -> Result<PathBuf> {
    let params = table.params();
    let entries = table.as_slice();
    let mut bytes = Vec::with_capacity(HEADER_LEN + 2 * entries.len());
    bytes.extend_from_slice(MAGIC);
    bytes.push(VERSION);
    bytes.push(params.pegs());
    bytes.push(params.disks());
    bytes.extend_from_slice(&table.source_code().to_le_bytes());
    for &d in entries {
        bytes.extend_from_slice(&d.to_le_bytes());
    }
    let path = directory.join(cache_file_name(params, table.source_code()));
    fs::write(&path, bytes)?;
    Ok(path)
}

/// Reads a table back, validating magic, version, length and the table's own
/// invariants.
pub fn load_distance_table(path: &Path) -> Result<DistanceTable> {
    let bytes = fs::read(path)?;
    if bytes.len() < HEADER_LEN {
        return Err(malformed(format!(
            "{} bytes is shorter than the {HEADER_LEN}-byte header",
            bytes.len()
        )));
    }
    if &bytes[0..4] != MAGIC {
        return Err(malformed(format!("bad magic {:?}", &bytes[0..4])));
    }
    if bytes[4] != VERSION {
        return Err(malformed(format!("unsupported version {}", bytes[4])));
    }
    let params = PuzzleParams::new(bytes[5], bytes[6])?;
    let expected = HEADER_LEN as u128 + 2 * params.vertex_count() as u128;
    if bytes.len() as u128 != expected {
        return Err(malformed(format!(
            "expected {expected} bytes for {params}, found {}",
            bytes.len()
        )));
    }
    let source = u64::from_le_bytes(bytes[7..15].try_into().expect("8 header bytes"));
    let dist: Vec<u16> = bytes[HEADER_LEN..]
        .chunks_exact(2)
        .map(|pair| u16::from_le_bytes([pair[0], pair[1]]))
        .collect();
    DistanceTable::from_raw(params, source, dist)
}

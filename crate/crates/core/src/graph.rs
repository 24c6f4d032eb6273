//! Explicit views of the implicit puzzle graph: neighbor lists, edge counts,
//! dense edge matrices and text exports.

use std::io::Write;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::params::PuzzleParams;
use crate::state::{CodeSpace, State};

/// Neighbor states in deterministic (disk, destination peg) move order.
pub fn neighbors(state: State) -> Vec<State> {
    let params = state.params();
    let space = CodeSpace::new(params);
    let mut out = Vec::new();
    space.for_each_neighbor(state.code(), |code| {
        out.push(State::from_code(params, code).expect("neighbor code in range"));
    });
    out
}

/// Total edge count, by summing degrees in parallel and halving.
pub fn edge_count(params: PuzzleParams) -> Result<u64> {
    params.ensure_scannable()?;
    let space = CodeSpace::new(params);
    let degree_sum: u64 = (0..params.vertex_count())
        .into_par_iter()
        .map(|code| space.degree(code) as u64)
        .sum();
    debug_assert_eq!(degree_sum % 2, 0);
    Ok(degree_sum / 2)
}

/// Vertex count per degree value, over the whole instance.
pub fn degree_histogram(params: PuzzleParams) -> Result<std::collections::BTreeMap<u32, u64>> {
    params.ensure_scannable()?;
    let space = CodeSpace::new(params);
    let histogram = (0..params.vertex_count())
        .into_par_iter()
        .fold(std::collections::BTreeMap::new, |mut acc, code| {
            *acc.entry(space.degree(code)).or_insert(0u64) += 1;
            acc
        })
        .reduce(std::collections::BTreeMap::new, |mut a, b| {
            for (deg, count) in b {
                *a.entry(deg).or_insert(0) += count;
            }
            a
        });
    Ok(histogram)
}

/// Dense symmetric 0/1 adjacency matrix over all k^n vertices, indexed by
/// packed code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeMatrix {
    params: PuzzleParams,
    order: usize,
    bits: Vec<u8>,
}

impl EdgeMatrix {
    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn params(&self) -> PuzzleParams {
        self.params
    }

    /// Entry (u, v); true iff the states with codes u and v are adjacent.
    pub fn adjacent(&self, u: u64, v: u64) -> bool {
        self.bits[u as usize * self.order + v as usize] != 0
    }

    /// Checks symmetry, zero diagonal and 0/1 entries; `Inconsistency` on the
    /// first violation.
    pub fn validate(&self) -> Result<()> {
        for u in 0..self.order {
            for v in 0..self.order {
                let e = self.bits[u * self.order + v];
                if e > 1 {
                    return Err(Error::Inconsistency {
                        context: "edge matrix",
                        detail: format!("entry ({u}, {v}) is {e}, not 0 or 1"),
                    });
                }
                if u == v && e != 0 {
                    return Err(Error::Inconsistency {
                        context: "edge matrix",
                        detail: format!("nonzero diagonal entry at {u}"),
                    });
                }
                if e != self.bits[v * self.order + u] {
                    return Err(Error::Inconsistency {
                        context: "edge matrix",
                        detail: format!("asymmetric pair ({u}, {v})"),
                    });
                }
            }
        }
        Ok(())
    }
}

/// Materializes the adjacency matrix; refuses instances above
/// `MATERIALIZE_VERTEX_CAP` vertices.
pub fn edge_matrix(params: PuzzleParams) -> Result<EdgeMatrix> {
    params.ensure_materializable()?;
    let order = params.vertex_count() as usize;
    let space = CodeSpace::new(params);
    let mut bits = vec![0u8; order * order];
    for u in 0..order as u64 {
        space.for_each_neighbor(u, |v| {
            bits[u as usize * order + v as usize] = 1;
        });
    }
    let matrix = EdgeMatrix {
        params,
        order,
        bits,
    };
    debug_assert!(matrix.validate().is_ok());
    Ok(matrix)
}

/// Rendering options for [`export_dot`].
#[derive(Debug, Clone, Copy, Default)]
pub struct DotOptions {
    /// Color each vertex by the peg of its largest disk.
    pub color_substructures: bool,
}

const DOT_PALETTE: [&str; 12] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
    "#bcbd22", "#17becf", "#aec7e8", "#ffbb78",
];

/// Writes the graph in DOT format: one node line per vertex labeled with its
/// digit word, one edge line per undirected edge (u -- v with u < v by code).
pub fn export_dot(params: PuzzleParams, options: DotOptions, out: &mut impl Write) -> Result<()> {
    params.ensure_materializable()?;
    let space = CodeSpace::new(params);
    writeln!(out, "graph hanoi_k{}_n{} {{", params.pegs(), params.disks())?;
    for code in params.codes() {
        let state = State::from_code(params, code).expect("scan code in range");
        if options.color_substructures {
            let color = DOT_PALETTE[state.substructure_index() as usize % DOT_PALETTE.len()];
            writeln!(
                out,
                "  v{code} [label=\"{state}\", style=filled, fillcolor=\"{color}\"];"
            )?;
        } else {
            writeln!(out, "  v{code} [label=\"{state}\"];")?;
        }
    }
    for code in params.codes() {
        space.for_each_neighbor(code, |nbr| {
            if code < nbr {
                // each undirected edge once, from its smaller endpoint
                writeln!(out, "  v{code} -- v{nbr};").expect("dot edge write");
            }
        });
    }
    writeln!(out, "}}")?;
    Ok(())
}

/// Writes one JSON object per vertex, in code order:
/// `{"v": "<word>", "nbrs": ["<word>", ...]}` with neighbors in move order.
pub fn export_adjacency_jsonl(params: PuzzleParams, out: &mut impl Write) -> Result<()> {
    params.ensure_materializable()?;
    for code in params.codes() {
        let state = State::from_code(params, code).expect("scan code in range");
        let nbrs: Vec<String> = neighbors(state).iter().map(|s| s.to_string()).collect();
        let line = serde_json::json!({ "v": state.to_string(), "nbrs": nbrs });
        writeln!(out, "{line}")?;
    }
    Ok(())
}

/// Compressed sparse adjacency over packed codes: neighbors of `v` are
/// `targets[offsets[v]..offsets[v + 1]]` in move order.
pub(crate) struct AdjacencyCsr {
    pub offsets: Vec<u64>,
    pub targets: Vec<u32>,
}

impl AdjacencyCsr {
    pub fn neighbors(&self, code: u64) -> &[u32] {
        &self.targets
            [self.offsets[code as usize] as usize..self.offsets[code as usize + 1] as usize]
    }
}

/// Materializes CSR adjacency for scan-sized instances (codes must fit u32,
/// guaranteed by the scan cap).
pub(crate) fn adjacency_csr(params: PuzzleParams) -> Result<AdjacencyCsr> {
    params.ensure_scannable()?;
    let space = CodeSpace::new(params);
    let order = params.vertex_count() as usize;
    let mut offsets = Vec::with_capacity(order + 1);
    offsets.push(0u64);
    let mut total = 0u64;
    for code in params.codes() {
        total += space.degree(code) as u64;
        offsets.push(total);
    }
    let mut targets = vec![0u32; total as usize];
    for code in params.codes() {
        let mut at = offsets[code as usize] as usize;
        space.for_each_neighbor(code, |nbr| {
            targets[at] = nbr as u32;
            at += 1;
        });
        debug_assert_eq!(at as u64, offsets[code as usize + 1]);
    }
    Ok(AdjacencyCsr { offsets, targets })
}

//! Peg-permutation induced maps, exhaustive automorphism enumeration, and
//! the structural checks on degrees, corners and substructures.
//!
//! The enumerator never assumes the group is the set of peg relabelings: it
//! asserts the degree dichotomy (so corners must permute), tries all k!
//! corner assignments, extends each over the remaining vertices by
//! backtracking with corner-distance filtering, and verifies every completed
//! map edge-by-edge.

use std::collections::{HashMap, HashSet};
use std::time::Instant;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::check::CheckResult;
use crate::error::{Error, Result};
use crate::graph::{adjacency_csr, AdjacencyCsr};
use crate::metric::CornerTables;
use crate::params::{PuzzleParams, ENUM_PEG_CAP};
use crate::state::{perfect_code, CodeSpace, State};

/// Distances from one vertex to all k corners, in peg order.
pub type DistanceVector = Vec<u16>;

/// A bijection on peg indices 0..k.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PegPermutation {
    images: Vec<u8>,
}

impl PegPermutation {
    pub fn identity(pegs: u8) -> Self {
        Self {
            images: (0..pegs).collect(),
        }
    }

    /// Builds from the image list: `images[p]` is where peg p goes.
    pub fn from_images(images: Vec<u8>) -> Result<Self> {
        let k = images.len();
        let mut seen = vec![false; k];
        for &img in &images {
            if img as usize >= k || seen[img as usize] {
                return Err(Error::NotAPermutation { pegs: k as u8 });
            }
            seen[img as usize] = true;
        }
        Ok(Self { images })
    }

    /// The permutation swapping pegs `a` and `b`.
    pub fn transposition(pegs: u8, a: u8, b: u8) -> Result<Self> {
        for peg in [a, b] {
            if peg >= pegs {
                return Err(Error::PegOutOfRange { peg, pegs });
            }
        }
        let mut images: Vec<u8> = (0..pegs).collect();
        images.swap(a as usize, b as usize);
        Ok(Self { images })
    }

    /// Number of pegs acted on.
    pub fn degree(&self) -> u8 {
        self.images.len() as u8
    }

    pub fn apply(&self, peg: u8) -> u8 {
        self.images[peg as usize]
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(p, &img)| p as u8 == img)
    }

    /// Composition applying `other` first: (self ∘ other)(p) = self(other(p)).
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(
            self.degree(),
            other.degree(),
            "composing permutations of different degree"
        );
        Self {
            images: other
                .images
                .iter()
                .map(|&p| self.images[p as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0u8; self.images.len()];
        for (p, &img) in self.images.iter().enumerate() {
            images[img as usize] = p as u8;
        }
        Self { images }
    }

    /// All k! permutations in lexicographic image order.
    pub fn all(pegs: u8) -> Vec<Self> {
        (0..pegs)
            .permutations(pegs as usize)
            .map(|images| Self { images })
            .collect()
    }
}

impl std::fmt::Display for PegPermutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.images.iter().join(","))
    }
}

#[derive(Debug, Clone)]
enum MapRepr {
    Table(Vec<u64>),
    Induced(PegPermutation),
}

/// A total map from packed codes to packed codes, either materialized as a
/// table or evaluated digitwise from a peg permutation.
#[derive(Debug, Clone)]
pub struct VertexMap {
    params: PuzzleParams,
    repr: MapRepr,
}

impl VertexMap {
    pub fn identity(params: PuzzleParams) -> Self {
        Self {
            params,
            repr: MapRepr::Induced(PegPermutation::identity(params.pegs())),
        }
    }

    /// Materialized map; validates length and code range, not bijectivity
    /// (that is `is_automorphism`'s job).
    pub fn from_table(params: PuzzleParams, table: Vec<u64>) -> Result<Self> {
        let vertices = params.vertex_count();
        if table.len() as u64 != vertices {
            return Err(Error::MapWrongLength {
                expected: vertices,
                got: table.len(),
            });
        }
        if let Some(&code) = table.iter().find(|&&c| c >= vertices) {
            return Err(Error::CodeOutOfRange { code, vertices });
        }
        Ok(Self {
            params,
            repr: MapRepr::Table(table),
        })
    }

    pub fn params(&self) -> PuzzleParams {
        self.params
    }

    pub fn apply_code(&self, code: u64) -> u64 {
        match &self.repr {
            MapRepr::Table(table) => table[code as usize],
            MapRepr::Induced(sigma) => {
                let k = self.params.pegs() as u64;
                let mut c = code;
                let mut out = 0;
                let mut pow = 1;
                for _ in 0..self.params.disks() {
                    out += sigma.apply((c % k) as u8) as u64 * pow;
                    c /= k;
                    pow *= k;
                }
                out
            }
        }
    }

    pub fn apply(&self, state: State) -> Result<State> {
        if state.params() != self.params {
            return Err(Error::ParamsMismatch);
        }
        State::from_code(self.params, self.apply_code(state.code()))
    }

    /// Full image table in code order.
    pub fn to_table(&self) -> Vec<u64> {
        self.params.codes().map(|c| self.apply_code(c)).collect()
    }

    /// The permutation of pegs read off the images of the corner states;
    /// errors if some corner maps to a non-corner.
    pub fn corner_action(&self) -> Result<PegPermutation> {
        let params = self.params;
        let k = params.pegs();
        let mut images = Vec::with_capacity(k as usize);
        for i in 0..k {
            let img = self.apply_code(perfect_code(params, i));
            let peg = (0..k)
                .find(|&j| perfect_code(params, j) == img)
                .ok_or_else(|| Error::Inconsistency {
                    context: "corner action",
                    detail: format!("corner {i} maps to non-corner code {img}"),
                })?;
            images.push(peg);
        }
        PegPermutation::from_images(images)
    }
}

/// The digitwise map sending each disk's peg through `sigma`.
pub fn induced_map(sigma: &PegPermutation, params: PuzzleParams) -> Result<VertexMap> {
    if sigma.degree() != params.pegs() {
        return Err(Error::ParamsMismatch);
    }
    Ok(VertexMap {
        params,
        repr: MapRepr::Induced(sigma.clone()),
    })
}

/// Checks that `map` is an adjacency-preserving bijection: no image
/// collisions, and the image of every neighbor list equals the neighbor list
/// of the image. Fails with a concrete witness.
pub fn is_automorphism(map: &VertexMap, params: PuzzleParams) -> Result<CheckResult> {
    if map.params() != params {
        return Err(Error::ParamsMismatch);
    }
    params.ensure_scannable()?;
    let order = params.vertex_count();
    let space = CodeSpace::new(params);

    let mut taken = vec![0u64; (order as usize).div_ceil(64)];
    for code in params.codes() {
        let img = map.apply_code(code);
        let (word, bit) = (img as usize >> 6, img & 63);
        if taken[word] >> bit & 1 == 1 {
            let other = params
                .codes()
                .find(|&c| map.apply_code(c) == img)
                .expect("collision has an earlier preimage");
            let show = |c| {
                State::from_code(params, c)
                    .expect("code in range")
                    .to_string()
            };
            return Ok(CheckResult::fail(format!(
                "not injective: {} and {} both map to {}",
                show(other),
                show(code),
                show(img)
            )));
        }
        taken[word] |= 1 << bit;
    }

    let witness = (0..order)
        .into_par_iter()
        .filter_map(|u| {
            let img_u = map.apply_code(u);
            let mut mapped = Vec::new();
            space.for_each_neighbor(u, |w| mapped.push(map.apply_code(w)));
            mapped.sort_unstable();
            let mut actual = Vec::new();
            space.for_each_neighbor(img_u, |w| actual.push(w));
            actual.sort_unstable();
            if mapped == actual {
                return None;
            }
            // some edge (u, w) maps onto a non-edge
            let mut bad = None;
            space.for_each_neighbor(u, |w| {
                if bad.is_none() && actual.binary_search(&map.apply_code(w)).is_err() {
                    bad = Some(w);
                }
            });
            Some((u, bad))
        })
        .min_by_key(|&(u, _)| u);
    if let Some((u, bad)) = witness {
        let show = |c| {
            State::from_code(params, c)
                .expect("code in range")
                .to_string()
        };
        let detail = match bad {
            Some(w) => format!(
                "edge ({}, {}) maps to non-edge ({}, {})",
                show(u),
                show(w),
                show(map.apply_code(u)),
                show(map.apply_code(w))
            ),
            None => format!(
                "image of {} has extra neighbors not induced by edges at {}",
                show(map.apply_code(u)),
                show(u)
            ),
        };
        return Ok(CheckResult::fail(detail));
    }
    Ok(CheckResult::pass())
}

/// Distances from `v` to every corner, via precomputed tables.
pub fn corner_fingerprint(tables: &CornerTables, v: State) -> Result<DistanceVector> {
    if v.params() != tables.params() {
        return Err(Error::ParamsMismatch);
    }
    Ok(tables.fingerprint(v.code()))
}

/// The complete automorphism group of one instance: materialized vertex maps
/// plus the peg permutation each induces on the corners, sorted by that
/// corner action.
pub struct AutomorphismSet {
    params: PuzzleParams,
    maps: Vec<VertexMap>,
    corner_actions: Vec<PegPermutation>,
}

impl AutomorphismSet {
    pub fn params(&self) -> PuzzleParams {
        self.params
    }

    pub fn order(&self) -> usize {
        self.maps.len()
    }

    pub fn maps(&self) -> &[VertexMap] {
        &self.maps
    }

    pub fn corner_actions(&self) -> &[PegPermutation] {
        &self.corner_actions
    }
}

/// Packed adjacency bits over order^2 vertex pairs.
struct AdjacencyBits {
    order: usize,
    words: Vec<u64>,
}

impl AdjacencyBits {
    fn build(order: usize, adj: &AdjacencyCsr) -> Self {
        let mut words = vec![0u64; (order * order).div_ceil(64)];
        for u in 0..order {
            for &w in adj.neighbors(u as u64) {
                let idx = u * order + w as usize;
                words[idx >> 6] |= 1 << (idx & 63);
            }
        }
        Self { order, words }
    }

    fn adjacent(&self, a: usize, b: usize) -> bool {
        let idx = a * self.order + b;
        self.words[idx >> 6] >> (idx & 63) & 1 == 1
    }
}

const UNSET: u64 = u64::MAX;

/// One backtracking search root: all completed assignments extending the
/// corner assignment `sigma`, subject to fingerprint, degree, bijectivity
/// and assigned-neighbor adjacency constraints.
struct SearchContext<'a> {
    sigma: &'a PegPermutation,
    positions: &'a [u32],
    fps: &'a [u16],
    buckets: &'a HashMap<&'a [u16], Vec<u32>>,
    degrees: &'a [u32],
    adj: &'a AdjacencyCsr,
    bits: &'a AdjacencyBits,
}

impl SearchContext<'_> {
    fn candidates(&self, v: u32, image: &[u64], used: &[bool]) -> Vec<u32> {
        let k = self.sigma.degree() as usize;
        // an automorphism sending corner i to sigma(i) is an isometry, so the
        // image of v must sit at distance d(v, ī) from corner sigma(i)
        let mut target = vec![0u16; k];
        for i in 0..k {
            target[self.sigma.apply(i as u8) as usize] = self.fps[v as usize * k + i];
        }
        let Some(bucket) = self.buckets.get(target.as_slice()) else {
            return Vec::new();
        };
        bucket
            .iter()
            .copied()
            .filter(|&c| {
                !used[c as usize]
                    && self.degrees[c as usize] == self.degrees[v as usize]
                    && self.adj.neighbors(v as u64).iter().all(|&w| {
                        let img_w = image[w as usize];
                        img_w == UNSET || self.bits.adjacent(img_w as usize, c as usize)
                    })
            })
            .collect()
    }

    /// Depth-first over `positions` with explicit stack; returns every
    /// completed image table, in deterministic candidate order.
    fn run(&self, mut image: Vec<u64>, mut used: Vec<bool>) -> Vec<Vec<u64>> {
        let mut results = Vec::new();
        if self.positions.is_empty() {
            results.push(image);
            return results;
        }
        let mut stack: Vec<(Vec<u32>, usize)> =
            vec![(self.candidates(self.positions[0], &image, &used), 0)];
        let mut placed: Vec<Option<u32>> = vec![None; self.positions.len()];
        while !stack.is_empty() {
            let depth = stack.len() - 1;
            let v = self.positions[depth] as usize;
            if let Some(c) = placed[depth].take() {
                image[v] = UNSET;
                used[c as usize] = false;
            }
            let (cands, next) = stack.last_mut().expect("nonempty stack");
            if *next >= cands.len() {
                stack.pop();
                continue;
            }
            let c = cands[*next];
            *next += 1;
            image[v] = c as u64;
            used[c as usize] = true;
            placed[depth] = Some(c);
            if depth + 1 == self.positions.len() {
                results.push(image.clone());
            } else {
                let cands = self.candidates(self.positions[depth + 1], &image, &used);
                stack.push((cands, 0));
            }
        }
        results
    }
}

/// Discovers the full automorphism group by search.
///
/// Steps: (1) assert that the degree-(k−1) vertices are exactly the corners,
/// so every automorphism permutes corners; (2) for each of the k! corner
/// assignments, extend over the remaining vertices in BFS order using
/// corner-fingerprint candidate filtering and adjacency-consistent
/// backtracking; (3) verify every completed map with `is_automorphism` and
/// keep the survivors.
pub fn enumerate_automorphisms(params: PuzzleParams) -> Result<AutomorphismSet> {
    params.ensure_materializable()?;
    let k = params.pegs();
    if k > ENUM_PEG_CAP {
        return Err(Error::TooManyPegsForEnumeration {
            pegs: k,
            cap: ENUM_PEG_CAP,
        });
    }
    let order = params.vertex_count() as usize;
    let space = CodeSpace::new(params);

    let corner_codes: Vec<u64> = (0..k).map(|i| perfect_code(params, i)).collect();
    let low_degree: Vec<u64> = params
        .codes()
        .filter(|&c| space.degree(c) == k as u32 - 1)
        .collect();
    if low_degree != corner_codes {
        return Err(Error::Inconsistency {
            context: "degree dichotomy",
            detail: format!(
                "expected the {} corners to be exactly the degree-{} vertices, found {:?}",
                k,
                k - 1,
                low_degree
            ),
        });
    }

    let tables = CornerTables::compute(params)?;
    let ku = k as usize;
    let mut fps = vec![0u16; order * ku];
    for peg in 0..k {
        let t = tables.table(peg);
        for (v, chunk) in fps.chunks_exact_mut(ku).enumerate() {
            chunk[peg as usize] = t.get(v as u64);
        }
    }
    let mut buckets: HashMap<&[u16], Vec<u32>> = HashMap::new();
    for v in 0..order {
        buckets
            .entry(&fps[v * ku..(v + 1) * ku])
            .or_default()
            .push(v as u32);
    }

    let degrees: Vec<u32> = (0..order).map(|v| space.degree(v as u64)).collect();
    let adj = adjacency_csr(params)?;
    let bits = AdjacencyBits::build(order, &adj);

    let dist0 = tables.table(0);
    let mut positions: Vec<u32> = (0..order as u32)
        .filter(|&v| !corner_codes.contains(&(v as u64)))
        .collect();
    positions.sort_unstable_by_key(|&v| (dist0.get(v as u64), v));

    let sigmas = PegPermutation::all(k);
    let per_sigma: Vec<Vec<Vec<u64>>> = sigmas
        .par_iter()
        .map(|sigma| {
            let mut image = vec![UNSET; order];
            let mut used = vec![false; order];
            for (i, &v) in corner_codes.iter().enumerate() {
                let img = corner_codes[sigma.apply(i as u8) as usize];
                image[v as usize] = img;
                used[img as usize] = true;
            }
            let ctx = SearchContext {
                sigma,
                positions: &positions,
                fps: &fps,
                buckets: &buckets,
                degrees: &degrees,
                adj: &adj,
                bits: &bits,
            };
            ctx.run(image, used)
        })
        .collect();

    let mut maps = Vec::new();
    let mut corner_actions = Vec::new();
    for (sigma, found) in sigmas.iter().zip(per_sigma) {
        let mut found = found;
        found.sort_unstable();
        for table in found {
            let map = VertexMap::from_table(params, table)?;
            if is_automorphism(&map, params)?.pass {
                corner_actions.push(sigma.clone());
                maps.push(map);
            }
        }
    }
    Ok(AutomorphismSet {
        params,
        maps,
        corner_actions,
    })
}

/// Summary of the group-structure verification, shaped for JSON output.
#[derive(Debug, Clone, Serialize)]
pub struct GroupReport {
    pub k: u8,
    pub n: u8,
    pub order: u64,
    pub is_symmetric_group: bool,
    pub elapsed_ms: u64,
}

fn factorial(k: u8) -> u64 {
    (1..=k as u64).product()
}

/// Checks the group axioms on the set (identity, inverses, closure under
/// composition) and whether the corner action identifies it with the full
/// symmetric group on pegs. Axiom failures are errors: they mean the
/// enumeration is broken, not that the instance is interesting.
pub fn verify_group_structure(set: &AutomorphismSet) -> Result<GroupReport> {
    let start = Instant::now();
    let params = set.params();
    let order = set.order();
    let tables: Vec<Vec<u64>> = set.maps().iter().map(|m| m.to_table()).collect();
    let index: HashMap<&[u64], usize> = tables
        .iter()
        .enumerate()
        .map(|(i, t)| (t.as_slice(), i))
        .collect();

    let identity: Vec<u64> = params.codes().collect();
    if !index.contains_key(identity.as_slice()) {
        return Err(Error::GroupAxiomViolated {
            detail: "identity map is missing".into(),
        });
    }
    for (i, table) in tables.iter().enumerate() {
        let mut inv = vec![0u64; table.len()];
        for (a, &b) in table.iter().enumerate() {
            inv[b as usize] = a as u64;
        }
        if !index.contains_key(inv.as_slice()) {
            return Err(Error::GroupAxiomViolated {
                detail: format!("member {i} has no inverse in the set"),
            });
        }
    }
    let unclosed = (0..order * order).into_par_iter().find_first(|&pq| {
        let (p, q) = (pq / order, pq % order);
        let composed: Vec<u64> = tables[q].iter().map(|&x| tables[p][x as usize]).collect();
        !index.contains_key(composed.as_slice())
    });
    if let Some(pq) = unclosed {
        return Err(Error::GroupAxiomViolated {
            detail: format!(
                "composition of members {} and {} is not in the set",
                pq / order,
                pq % order
            ),
        });
    }

    let distinct: HashSet<&PegPermutation> = set.corner_actions().iter().collect();
    let injective = distinct.len() == order;
    let surjective = injective && order as u64 == factorial(params.pegs());
    Ok(GroupReport {
        k: params.pegs(),
        n: params.disks(),
        order: order as u64,
        is_symmetric_group: injective && surjective,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

/// Asserts that exactly one enumerated automorphism fixes every corner and
/// that it fixes every vertex.
pub fn corner_fixing_is_identity(params: PuzzleParams) -> Result<CheckResult> {
    let set = enumerate_automorphisms(params)?;
    Ok(corner_fixing_is_identity_in(&set))
}

/// Same check against an already-enumerated set.
pub fn corner_fixing_is_identity_in(set: &AutomorphismSet) -> CheckResult {
    let params = set.params();
    let fixers: Vec<usize> = set
        .corner_actions()
        .iter()
        .enumerate()
        .filter(|(_, action)| action.is_identity())
        .map(|(i, _)| i)
        .collect();
    if fixers.len() != 1 {
        return CheckResult::fail(format!(
            "{} members fix all corners; expected exactly 1",
            fixers.len()
        ));
    }
    let map = &set.maps()[fixers[0]];
    for code in params.codes() {
        if map.apply_code(code) != code {
            let state = State::from_code(params, code).expect("code in range");
            return CheckResult::fail(format!("the corner-fixing member moves vertex {state}"));
        }
    }
    CheckResult::pass()
}

/// Asserts that every enumerated automorphism fixing corner ī maps the
/// substructure [i] onto itself.
pub fn substructure_preservation_check(params: PuzzleParams) -> Result<CheckResult> {
    let set = enumerate_automorphisms(params)?;
    Ok(substructure_preservation_check_in(&set))
}

/// Same check against an already-enumerated set.
pub fn substructure_preservation_check_in(set: &AutomorphismSet) -> CheckResult {
    let params = set.params();
    let space = CodeSpace::new(params);
    for (map, action) in set.maps().iter().zip(set.corner_actions()) {
        for code in params.codes() {
            let i = space.substructure_index(code);
            if action.apply(i) != i {
                continue;
            }
            let img = map.apply_code(code);
            if space.substructure_index(img) != i {
                let show = |c| {
                    State::from_code(params, c)
                        .expect("code in range")
                        .to_string()
                };
                return CheckResult::fail(format!(
                    "member with corner action ({action}) fixes corner {i} but maps {} out of \
                     its substructure to {}",
                    show(code),
                    show(img)
                ));
            }
        }
    }
    CheckResult::pass()
}

/// Asserts the blocked-substructure adjacency pattern: with all smaller disks
/// stacked on peg j, the vertex i·j̄ has no neighbor whose largest disk is on
/// j, has a neighbor in every other substructure, and is adjacent to l·j̄ for
/// each peg l outside {i, j}.
pub fn adjacency_observation_check(params: PuzzleParams) -> Result<CheckResult> {
    if params.disks() < 2 {
        return Err(Error::TooFewDisks {
            needed: 2,
            got: params.disks(),
        });
    }
    params.ensure_scannable()?;
    let space = CodeSpace::new(params);
    let k = params.pegs();
    let top_pow = params.pow(params.disks() - 1);
    let tail_unit = (top_pow - 1) / (k as u64 - 1);
    for i in 0..k {
        for j in 0..k {
            if j == i {
                continue;
            }
            let v = i as u64 * top_pow + j as u64 * tail_unit;
            let mut nbrs = Vec::new();
            space.for_each_neighbor(v, |w| nbrs.push(w));
            let show = |c| {
                State::from_code(params, c)
                    .expect("code in range")
                    .to_string()
            };
            if let Some(&w) = nbrs.iter().find(|&&w| space.substructure_index(w) == j) {
                return Ok(CheckResult::fail(format!(
                    "{} has neighbor {} inside the blocked substructure [{j}]",
                    show(v),
                    show(w)
                )));
            }
            for l in 0..k {
                if l == j {
                    continue;
                }
                if !nbrs.iter().any(|&w| space.substructure_index(w) == l) {
                    return Ok(CheckResult::fail(format!(
                        "{} has no neighbor in substructure [{l}]",
                        show(v)
                    )));
                }
                if l != i {
                    let expected = l as u64 * top_pow + j as u64 * tail_unit;
                    if !nbrs.contains(&expected) {
                        return Ok(CheckResult::fail(format!(
                            "{} is not adjacent to {}",
                            show(v),
                            show(expected)
                        )));
                    }
                }
            }
        }
    }
    Ok(CheckResult::pass())
}

/// Exhaustive degree scan: explicit move enumeration equals the closed form
/// m(k−1) − m(m−1)/2, corners have degree exactly k−1, and every non-corner
/// has degree at least 2k−3.
pub fn degree_dichotomy_check(params: PuzzleParams) -> Result<CheckResult> {
    params.ensure_scannable()?;
    let space = CodeSpace::new(params);
    let k = params.pegs() as u32;
    let bad = (0..params.vertex_count())
        .into_par_iter()
        .find_first(|&code| {
            let closed = space.degree(code);
            if closed != space.count_moves(code) {
                return true;
            }
            match space.perfect_peg(code) {
                Some(_) => closed != k - 1,
                None => closed < 2 * k - 3,
            }
        });
    match bad {
        Some(code) => {
            let state = State::from_code(params, code).expect("code in range");
            Ok(CheckResult::fail(format!(
                "vertex {state}: closed-form degree {}, enumerated moves {}, corner = {}",
                space.degree(code),
                space.count_moves(code),
                state.is_perfect()
            )))
        }
        None => Ok(CheckResult::pass()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::state::{parse_state, perfect_state};

    fn params(k: u8, n: u8) -> PuzzleParams {
        PuzzleParams::new(k, n).unwrap()
    }

    #[test]
    fn permutation_basics() {
        let id = PegPermutation::identity(4);
        assert!(id.is_identity());
        let t = PegPermutation::transposition(4, 0, 2).unwrap();
        assert_eq!(t.images(), &[2, 1, 0, 3]);
        assert_eq!(t.compose(&t), id);
        assert_eq!(t.inverse(), t);
        assert!(PegPermutation::from_images(vec![0, 0, 1]).is_err());
        assert!(PegPermutation::from_images(vec![0, 3, 1]).is_err());
        assert!(PegPermutation::transposition(3, 0, 3).is_err());
    }

    #[test]
    fn all_permutations_lexicographic() {
        let all = PegPermutation::all(3);
        assert_eq!(all.len(), 6);
        let images: Vec<&[u8]> = all.iter().map(|p| p.images()).collect();
        assert_eq!(
            images,
            vec![
                &[0, 1, 2][..],
                &[0, 2, 1],
                &[1, 0, 2],
                &[1, 2, 0],
                &[2, 0, 1],
                &[2, 1, 0]
            ]
        );
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(sorted, all);
        assert_eq!(PegPermutation::all(5).len(), 120);
    }

    #[test]
    fn composition_order_is_right_to_left() {
        // f = (0 1), g = (1 2): (f ∘ g)(2) = f(1) = 0
        let f = PegPermutation::transposition(3, 0, 1).unwrap();
        let g = PegPermutation::transposition(3, 1, 2).unwrap();
        let fg = f.compose(&g);
        assert_eq!(fg.apply(2), 0);
        assert_eq!(fg.apply(1), 2);
        assert_eq!(fg.apply(0), 1);
    }

    #[test]
    fn induced_map_examples() {
        let p = params(3, 3);
        let swap01 = PegPermutation::transposition(3, 0, 1).unwrap();
        let g = induced_map(&swap01, p).unwrap();
        let zero = perfect_state(p, 0).unwrap();
        assert_eq!(g.apply(zero).unwrap().to_string(), "111");

        let p = params(4, 8);
        let swap01 = PegPermutation::transposition(4, 0, 1).unwrap();
        let g = induced_map(&swap01, p).unwrap();
        let v = parse_state("03112333", p).unwrap();
        assert_eq!(g.apply(v).unwrap().to_string(), "13002333");

        let id = induced_map(&PegPermutation::identity(4), p).unwrap();
        for code in [0u64, 1, 99, 65535] {
            assert_eq!(id.apply_code(code), code);
        }
    }

    #[test]
    fn induced_composition_matches_code_composition() {
        let p = params(4, 3);
        let f = PegPermutation::transposition(4, 0, 3).unwrap();
        let g = PegPermutation::transposition(4, 1, 2).unwrap();
        let fg = induced_map(&f.compose(&g), p).unwrap();
        let mf = induced_map(&f, p).unwrap();
        let mg = induced_map(&g, p).unwrap();
        for code in p.codes() {
            assert_eq!(fg.apply_code(code), mf.apply_code(mg.apply_code(code)));
        }
    }

    #[test]
    fn induced_maps_are_automorphisms() {
        for (k, n) in [(3, 1), (3, 3), (4, 2), (5, 2)] {
            let p = params(k, n);
            for sigma in PegPermutation::all(k) {
                let map = induced_map(&sigma, p).unwrap();
                let res = is_automorphism(&map, p).unwrap();
                assert!(
                    res.pass,
                    "k={k} n={n} sigma={sigma}: {:?}",
                    res.counterexample
                );
            }
        }
    }

    #[test]
    fn vertex_swap_is_not_an_automorphism() {
        // swapping "01" and "02" breaks the edge ("01", "21")
        let p = params(3, 2);
        let a = parse_state("01", p).unwrap().code();
        let b = parse_state("02", p).unwrap().code();
        let mut table: Vec<u64> = p.codes().collect();
        table.swap(a as usize, b as usize);
        let map = VertexMap::from_table(p, table).unwrap();
        let res = is_automorphism(&map, p).unwrap();
        assert!(!res.pass);
        let witness = res.counterexample.unwrap();
        assert!(witness.contains("non-edge"), "witness: {witness}");
    }

    #[test]
    fn non_injective_table_is_rejected_with_witness() {
        let p = params(3, 1);
        let map = VertexMap::from_table(p, vec![0, 0, 2]).unwrap();
        let res = is_automorphism(&map, p).unwrap();
        assert!(!res.pass);
        assert!(res.counterexample.unwrap().contains("not injective"));
    }

    #[test]
    fn corner_action_reads_off_sigma() {
        let p = params(4, 3);
        for sigma in PegPermutation::all(4) {
            let map = induced_map(&sigma, p).unwrap();
            assert_eq!(map.corner_action().unwrap(), sigma);
        }
    }

    #[test]
    fn fingerprint_equivariance() {
        let p = params(3, 3);
        let tables = CornerTables::compute(p).unwrap();
        let zero = perfect_state(p, 0).unwrap();
        assert_eq!(corner_fingerprint(&tables, zero).unwrap(), vec![0, 7, 7]);
        for sigma in PegPermutation::all(3) {
            let g = induced_map(&sigma, p).unwrap();
            for code in p.codes() {
                let v = State::from_code(p, code).unwrap();
                let fv = corner_fingerprint(&tables, v).unwrap();
                let fg = corner_fingerprint(&tables, g.apply(v).unwrap()).unwrap();
                for i in 0..3 {
                    assert_eq!(fg[sigma.apply(i) as usize], fv[i as usize]);
                }
            }
        }
    }

    #[test]
    fn enumeration_finds_full_group() {
        for (k, n, expect) in [(3, 1, 6), (3, 2, 6), (3, 3, 6), (4, 2, 24), (5, 2, 120)] {
            let set = enumerate_automorphisms(params(k, n)).unwrap();
            assert_eq!(set.order(), expect, "k={k} n={n}");
            let report = verify_group_structure(&set).unwrap();
            assert!(report.is_symmetric_group, "k={k} n={n}");
            assert_eq!(report.order, expect as u64);
        }
    }

    #[test]
    fn enumerated_maps_match_induced_maps() {
        let p = params(3, 3);
        let set = enumerate_automorphisms(p).unwrap();
        for (map, action) in set.maps().iter().zip(set.corner_actions()) {
            let induced = induced_map(action, p).unwrap();
            for code in p.codes() {
                assert_eq!(map.apply_code(code), induced.apply_code(code));
            }
        }
    }

    #[test]
    fn group_verification_catches_missing_members() {
        let p = params(3, 2);
        let set = enumerate_automorphisms(p).unwrap();
        // drop the identity: the axiom check must fail
        let broken = AutomorphismSet {
            params: p,
            maps: set
                .maps()
                .iter()
                .zip(set.corner_actions())
                .filter(|(_, a)| !a.is_identity())
                .map(|(m, _)| m.clone())
                .collect(),
            corner_actions: set
                .corner_actions()
                .iter()
                .filter(|a| !a.is_identity())
                .cloned()
                .collect(),
        };
        assert!(matches!(
            verify_group_structure(&broken),
            Err(Error::GroupAxiomViolated { .. })
        ));
    }

    #[test]
    fn corner_fixing_checks_pass() {
        for (k, n) in [(3, 3), (4, 2), (5, 1), (6, 1)] {
            let res = corner_fixing_is_identity(params(k, n)).unwrap();
            assert!(res.pass, "k={k} n={n}: {:?}", res.counterexample);
        }
    }

    #[test]
    fn substructure_preservation_passes() {
        for (k, n) in [(3, 3), (4, 2), (4, 3)] {
            let res = substructure_preservation_check(params(k, n)).unwrap();
            assert!(res.pass, "k={k} n={n}: {:?}", res.counterexample);
        }
    }

    #[test]
    fn adjacency_observation_passes() {
        for (k, n) in [(3, 2), (3, 3), (4, 3), (5, 2)] {
            let res = adjacency_observation_check(params(k, n)).unwrap();
            assert!(res.pass, "k={k} n={n}: {:?}", res.counterexample);
        }
        assert!(matches!(
            adjacency_observation_check(params(4, 1)),
            Err(Error::TooFewDisks { needed: 2, got: 1 })
        ));
    }

    #[test]
    fn degree_scan_passes() {
        for (k, n) in [(3, 4), (4, 3), (5, 2), (6, 2)] {
            let res = degree_dichotomy_check(params(k, n)).unwrap();
            assert!(res.pass, "k={k} n={n}: {:?}", res.counterexample);
        }
    }

    #[test]
    fn enumeration_respects_caps() {
        assert!(matches!(
            enumerate_automorphisms(params(3, 10)),
            Err(Error::TooLargeToMaterialize { .. })
        ));
        assert!(matches!(
            enumerate_automorphisms(params(9, 1)),
            Err(Error::TooManyPegsForEnumeration {
                pegs: 9,
                cap: ENUM_PEG_CAP
            })
        ));
    }
}

//! Exact hop distances, geodesic structure, and the metric facts that drive
//! the verification suite: largest-disk move counts along geodesics and
//! nearest-corner dominance.

use std::collections::HashMap;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use crate::check::CheckResult;
use crate::error::{Error, Result};
use crate::params::PuzzleParams;
use crate::state::{perfect_state, CodeSpace, State};

const UNVISITED: u16 = u16::MAX;
/// Frontier size above which BFS expansion fans out to worker threads. The
/// resulting table is level-determined either way.
const PARALLEL_FRONTIER: usize = 2048;
/// Default ceiling on total visited states in bidirectional search.
pub const DEFAULT_SEARCH_BUDGET: u64 = 1 << 24;

/// Single-source table of exact hop distances, indexed by packed code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceTable {
    params: PuzzleParams,
    source: u64,
    dist: Vec<u16>,
}

impl DistanceTable {
    pub fn params(&self) -> PuzzleParams {
        self.params
    }

    pub fn source_code(&self) -> u64 {
        self.source
    }

    pub fn source(&self) -> State {
        State::from_code(self.params, self.source).expect("source code in range")
    }

    /// Distance from the source to `target`.
    pub fn distance_to(&self, target: State) -> Result<u16> {
        if target.params() != self.params {
            return Err(Error::ParamsMismatch);
        }
        Ok(self.dist[target.code() as usize])
    }

    /// Distance entry by packed code.
    pub fn get(&self, code: u64) -> u16 {
        self.dist[code as usize]
    }

    pub fn as_slice(&self) -> &[u16] {
        &self.dist
    }

    /// Eccentricity of the source.
    pub fn max_distance(&self) -> u16 {
        self.dist.iter().copied().max().unwrap_or(0)
    }

    /// Rebuilds a table from raw parts (the cache loader); checks length,
    /// source range, a zero source entry and no sentinel entries.
    pub fn from_raw(params: PuzzleParams, source: u64, dist: Vec<u16>) -> Result<Self> {
        let vertices = params.vertex_count();
        if source >= vertices {
            return Err(Error::CodeOutOfRange {
                code: source,
                vertices,
            });
        }
        if dist.len() as u64 != vertices {
            return Err(Error::Inconsistency {
                context: "distance table",
                detail: format!("expected {} entries, got {}", vertices, dist.len()),
            });
        }
        if dist[source as usize] != 0 {
            return Err(Error::Inconsistency {
                context: "distance table",
                detail: format!("source entry is {}, not 0", dist[source as usize]),
            });
        }
        if let Some(at) = dist.iter().position(|&d| d == UNVISITED) {
            return Err(Error::Inconsistency {
                context: "distance table",
                detail: format!("entry {at} holds the unreachable sentinel"),
            });
        }
        Ok(Self {
            params,
            source,
            dist,
        })
    }
}

/// Level-synchronous BFS over packed codes. Distances are level numbers, so
/// the table is identical however the frontier expansion is scheduled.
fn bfs_codes(space: &CodeSpace, source: u64) -> Result<Vec<u16>> {
    let order = space.vertex_count() as usize;
    let mut dist = vec![UNVISITED; order];
    dist[source as usize] = 0;
    let mut frontier = vec![source];
    let mut level: u32 = 0;
    while !frontier.is_empty() {
        level += 1;
        if level >= UNVISITED as u32 {
            return Err(Error::DistanceOverflow {
                distance: level as u64,
            });
        }
        let candidates: Vec<u64> = if frontier.len() >= PARALLEL_FRONTIER {
            frontier
                .par_chunks(1024)
                .map(|chunk| {
                    let mut out = Vec::new();
                    for &u in chunk {
                        space.for_each_neighbor(u, |v| {
                            if dist[v as usize] == UNVISITED {
                                out.push(v);
                            }
                        });
                    }
                    out
                })
                .collect::<Vec<_>>()
                .concat()
        } else {
            let mut out = Vec::new();
            for &u in &frontier {
                space.for_each_neighbor(u, |v| {
                    if dist[v as usize] == UNVISITED {
                        out.push(v);
                    }
                });
            }
            out
        };
        let mut next = Vec::with_capacity(candidates.len());
        for v in candidates {
            if dist[v as usize] == UNVISITED {
                dist[v as usize] = level as u16;
                next.push(v);
            }
        }
        frontier = next;
    }
    if dist.contains(&UNVISITED) {
        return Err(Error::Inconsistency {
            context: "bfs",
            detail: "some states were never reached".into(),
        });
    }
    Ok(dist)
}

/// Exhaustive BFS from `source` over the whole instance.
pub fn bfs_from(params: PuzzleParams, source: State) -> Result<DistanceTable> {
    if source.params() != params {
        return Err(Error::ParamsMismatch);
    }
    params.ensure_scannable()?;
    let space = CodeSpace::new(params);
    let dist = bfs_codes(&space, source.code())?;
    Ok(DistanceTable {
        params,
        source: source.code(),
        dist,
    })
}

/// Exact distance by bidirectional search with the default budget.
pub fn distance(params: PuzzleParams, u: State, v: State) -> Result<u16> {
    distance_with_budget(params, u, v, DEFAULT_SEARCH_BUDGET)
}

/// Exact distance without materializing a full table: expands the smaller
/// frontier (source side on ties) until the best meeting point is provably
/// optimal. `budget` caps the total number of visited states.
pub fn distance_with_budget(params: PuzzleParams, u: State, v: State, budget: u64) -> Result<u16> {
    if u.params() != params || v.params() != params {
        return Err(Error::ParamsMismatch);
    }
    if u == v {
        return Ok(0);
    }
    let space = CodeSpace::new(params);
    let mut seen_s: HashMap<u64, u32> = HashMap::from([(u.code(), 0)]);
    let mut seen_t: HashMap<u64, u32> = HashMap::from([(v.code(), 0)]);
    let mut frontier_s = vec![u.code()];
    let mut frontier_t = vec![v.code()];
    let (mut level_s, mut level_t) = (0u32, 0u32);
    let mut best = u32::MAX;
    while best > level_s + level_t {
        let expand_source = frontier_s.len() <= frontier_t.len();
        let (frontier, seen, other, level) = if expand_source {
            (&mut frontier_s, &mut seen_s, &seen_t, &mut level_s)
        } else {
            (&mut frontier_t, &mut seen_t, &seen_s, &mut level_t)
        };
        if frontier.is_empty() {
            break;
        }
        *level += 1;
        let depth = *level;
        let mut next = Vec::new();
        for &x in frontier.iter() {
            space.for_each_neighbor(x, |w| {
                if let std::collections::hash_map::Entry::Vacant(e) = seen.entry(w) {
                    e.insert(depth);
                    next.push(w);
                    if let Some(&d_other) = other.get(&w) {
                        best = best.min(depth + d_other);
                    }
                }
            });
        }
        *frontier = next;
        if (seen_s.len() + seen_t.len()) as u64 > budget {
            return Err(Error::SearchBudgetExceeded { budget });
        }
    }
    if best == u32::MAX {
        return Err(Error::Inconsistency {
            context: "bidirectional search",
            detail: format!("no path between {u} and {v}"),
        });
    }
    if best >= UNVISITED as u32 {
        return Err(Error::DistanceOverflow {
            distance: best as u64,
        });
    }
    Ok(best as u16)
}

/// BFS predecessor DAG from one source: the edges u→v with
/// dist(u) + 1 = dist(v). Source-to-v paths in the DAG are exactly the
/// geodesics of the graph.
#[derive(Debug, Clone)]
pub struct GeodesicDag {
    params: PuzzleParams,
    source: u64,
    dist: Vec<u16>,
    offsets: Vec<u64>,
    preds: Vec<u32>,
}

impl GeodesicDag {
    pub fn params(&self) -> PuzzleParams {
        self.params
    }

    pub fn source_code(&self) -> u64 {
        self.source
    }

    pub fn distance_to(&self, target: State) -> Result<u16> {
        if target.params() != self.params {
            return Err(Error::ParamsMismatch);
        }
        Ok(self.dist[target.code() as usize])
    }

    /// Predecessors of `code` on geodesics from the source, ascending.
    pub fn preds_of(&self, code: u64) -> &[u32] {
        &self.preds[self.offsets[code as usize] as usize..self.offsets[code as usize + 1] as usize]
    }

    /// Vertices lying on at least one source→target geodesic (the backward
    /// closure of `target` under predecessor edges), unordered.
    fn ancestors_of(&self, target: u64) -> Vec<u32> {
        let mut seen = vec![false; self.dist.len()];
        seen[target as usize] = true;
        let mut stack = vec![target as u32];
        let mut out = Vec::new();
        while let Some(v) = stack.pop() {
            out.push(v);
            for &p in self.preds_of(v as u64) {
                if !seen[p as usize] {
                    seen[p as usize] = true;
                    stack.push(p);
                }
            }
        }
        out
    }

    /// Number of distinct geodesics from the source to `target`, by dynamic
    /// programming over the target's ancestor cone in distance order.
    pub fn count_paths_to(&self, target: State) -> Result<BigUint> {
        if target.params() != self.params {
            return Err(Error::ParamsMismatch);
        }
        let mut cone = self.ancestors_of(target.code());
        cone.sort_unstable_by_key(|&v| (self.dist[v as usize], v));
        let mut counts: HashMap<u32, BigUint> = HashMap::with_capacity(cone.len());
        for &v in &cone {
            let count = if v as u64 == self.source {
                BigUint::from(1u32)
            } else {
                let mut sum = BigUint::ZERO;
                for &p in self.preds_of(v as u64) {
                    sum += &counts[&p];
                }
                sum
            };
            counts.insert(v, count);
        }
        Ok(counts
            .remove(&(target.code() as u32))
            .expect("target in its own cone"))
    }

    /// (min, max) number of largest-disk moves over all geodesics from the
    /// source to `target`.
    pub fn largest_disk_change_bounds(&self, target: State) -> Result<(u32, u32)> {
        if target.params() != self.params {
            return Err(Error::ParamsMismatch);
        }
        let top_pow = self.params.pow(self.params.disks() - 1);
        let mut cone = self.ancestors_of(target.code());
        cone.sort_unstable_by_key(|&v| (self.dist[v as usize], v));
        let mut bounds: HashMap<u32, (u32, u32)> = HashMap::with_capacity(cone.len());
        for &v in &cone {
            let entry = if v as u64 == self.source {
                (0, 0)
            } else {
                let (mut lo, mut hi) = (u32::MAX, 0);
                for &p in self.preds_of(v as u64) {
                    let w = (p as u64 / top_pow != v as u64 / top_pow) as u32;
                    let (plo, phi) = bounds[&p];
                    lo = lo.min(plo + w);
                    hi = hi.max(phi + w);
                }
                (lo, hi)
            };
            bounds.insert(v, entry);
        }
        Ok(bounds[&(target.code() as u32)])
    }

    /// Largest-disk move bounds for every vertex at once, in code order.
    fn change_bounds_all(&self) -> (Vec<u32>, Vec<u32>) {
        let order = self.dist.len();
        let top_pow = self.params.pow(self.params.disks() - 1);
        let mut by_level: Vec<Vec<u32>> = Vec::new();
        for v in 0..order {
            let d = self.dist[v] as usize;
            if by_level.len() <= d {
                by_level.resize_with(d + 1, Vec::new);
            }
            by_level[d].push(v as u32);
        }
        let mut lo = vec![0u32; order];
        let mut hi = vec![0u32; order];
        for level in by_level.into_iter().skip(1) {
            for v in level {
                let (mut l, mut h) = (u32::MAX, 0);
                for &p in self.preds_of(v as u64) {
                    let w = (p as u64 / top_pow != v as u64 / top_pow) as u32;
                    l = l.min(lo[p as usize] + w);
                    h = h.max(hi[p as usize] + w);
                }
                lo[v as usize] = l;
                hi[v as usize] = h;
            }
        }
        (lo, hi)
    }
}

/// Builds the geodesic DAG from `source` over the whole instance.
pub fn geodesic_dag(params: PuzzleParams, source: State) -> Result<GeodesicDag> {
    if source.params() != params {
        return Err(Error::ParamsMismatch);
    }
    params.ensure_scannable()?;
    let space = CodeSpace::new(params);
    let dist = bfs_codes(&space, source.code())?;
    let order = dist.len();
    let counts: Vec<u32> = (0..order as u64)
        .into_par_iter()
        .map(|v| {
            let dv = dist[v as usize];
            let mut c = 0;
            space.for_each_neighbor(v, |u| {
                if dist[u as usize] + 1 == dv {
                    c += 1;
                }
            });
            c
        })
        .collect();
    let mut offsets = Vec::with_capacity(order + 1);
    let mut total = 0u64;
    offsets.push(0);
    for c in counts {
        total += c as u64;
        offsets.push(total);
    }
    let mut preds = vec![0u32; total as usize];
    for v in 0..order as u64 {
        let dv = dist[v as usize];
        let mut at = offsets[v as usize] as usize;
        space.for_each_neighbor(v, |u| {
            if dist[u as usize] + 1 == dv {
                preds[at] = u as u32;
                at += 1;
            }
        });
        preds[offsets[v as usize] as usize..at].sort_unstable();
    }
    Ok(GeodesicDag {
        params,
        source: source.code(),
        dist,
        offsets,
        preds,
    })
}

/// Number of distinct geodesics between `u` and `v`, exactly.
pub fn count_geodesics(params: PuzzleParams, u: State, v: State) -> Result<BigUint> {
    geodesic_dag(params, u)?.count_paths_to(v)
}

/// (min, max) largest-disk moves over all geodesics from corner `corner_peg`
/// to `target`.
pub fn largest_disk_move_range(
    params: PuzzleParams,
    corner_peg: u8,
    target: State,
) -> Result<(u32, u32)> {
    let corner = perfect_state(params, corner_peg)?;
    geodesic_dag(params, corner)?.largest_disk_change_bounds(target)
}

/// Distance tables from all k corners, in peg order.
pub struct CornerTables {
    params: PuzzleParams,
    tables: Vec<DistanceTable>,
}

impl CornerTables {
    pub fn compute(params: PuzzleParams) -> Result<Self> {
        params.ensure_scannable()?;
        let tables = (0..params.pegs())
            .into_par_iter()
            .map(|peg| bfs_from(params, perfect_state(params, peg)?))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { params, tables })
    }

    pub fn params(&self) -> PuzzleParams {
        self.params
    }

    pub fn table(&self, peg: u8) -> &DistanceTable {
        &self.tables[peg as usize]
    }

    /// Distances from the state with this code to every corner, peg order.
    pub fn fingerprint(&self, code: u64) -> Vec<u16> {
        self.tables.iter().map(|t| t.get(code)).collect()
    }
}

/// Witness against nearest-corner dominance: a vertex whose own-substructure
/// corner is not strictly nearest.
#[derive(Debug, Clone, Serialize)]
pub struct NearestCornerWitness {
    pub vertex: String,
    pub home_corner: u8,
    pub other_corner: u8,
    pub home_distance: u16,
    pub other_distance: u16,
}

/// Outcome of the exhaustive nearest-corner scan.
#[derive(Debug, Clone, Serialize)]
pub struct NearestCornerReport {
    pub params: PuzzleParams,
    pub pass: bool,
    pub counterexample: Option<NearestCornerWitness>,
}

/// Checks, for every vertex v in substructure [i] and every other peg j, that
/// d(v, ī) < d(v, j̄); reports the smallest (code, j) violation if any.
pub fn nearest_corner_report(params: PuzzleParams) -> Result<NearestCornerReport> {
    let tables = CornerTables::compute(params)?;
    let space = CodeSpace::new(params);
    let k = params.pegs();
    let violation = (0..params.vertex_count())
        .into_par_iter()
        .filter_map(|code| {
            let home = space.substructure_index(code);
            let d_home = tables.table(home).get(code);
            (0..k)
                .find(|&j| j != home && d_home >= tables.table(j).get(code))
                .map(|j| (code, j))
        })
        .min();
    let counterexample = violation.map(|(code, j)| {
        let state = State::from_code(params, code).expect("scan code in range");
        let home = state.substructure_index();
        NearestCornerWitness {
            vertex: state.to_string(),
            home_corner: home,
            other_corner: j,
            home_distance: tables.table(home).get(code),
            other_distance: tables.table(j).get(code),
        }
    });
    Ok(NearestCornerReport {
        params,
        pass: counterexample.is_none(),
        counterexample,
    })
}

/// Exhaustively checks largest-disk move counts along geodesics: from each
/// corner ī, every geodesic to a vertex in [i] moves the largest disk zero
/// times, and every geodesic elsewhere moves it exactly once.
pub fn largest_disk_move_check(params: PuzzleParams) -> Result<CheckResult> {
    params.ensure_scannable()?;
    for corner in 0..params.pegs() {
        let dag = geodesic_dag(params, perfect_state(params, corner)?)?;
        let (lo, hi) = dag.change_bounds_all();
        let space = CodeSpace::new(params);
        let bad = (0..params.vertex_count())
            .into_par_iter()
            .find_first(|&code| {
                let expect = (space.substructure_index(code) != corner) as u32;
                lo[code as usize] != expect || hi[code as usize] != expect
            });
        if let Some(code) = bad {
            let state = State::from_code(params, code).expect("scan code in range");
            let expect = (state.substructure_index() != corner) as u32;
            return Ok(CheckResult::fail(format!(
                "geodesics from corner {corner} to {state} move the largest disk \
                 between {} and {} times; expected exactly {expect}",
                lo[code as usize], hi[code as usize]
            )));
        }
    }
    Ok(CheckResult::pass())
}

/// Distance between two corner states: one full BFS when the instance is
/// scannable, bidirectional search beyond that.
pub fn corner_distance(params: PuzzleParams, from_peg: u8, to_peg: u8) -> Result<u16> {
    let from = perfect_state(params, from_peg)?;
    let to = perfect_state(params, to_peg)?;
    if params.ensure_scannable().is_ok() {
        bfs_from(params, from)?.distance_to(to)
    } else {
        distance(params, from, to)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::state::parse_state;

    fn params(k: u8, n: u8) -> PuzzleParams {
        PuzzleParams::new(k, n).unwrap()
    }

    fn state(text: &str, p: PuzzleParams) -> State {
        parse_state(text, p).unwrap()
    }

    #[test]
    fn single_disk_distances() {
        let p = params(3, 1);
        let t = bfs_from(p, state("0", p)).unwrap();
        assert_eq!(t.distance_to(state("0", p)).unwrap(), 0);
        assert_eq!(t.distance_to(state("1", p)).unwrap(), 1);
        assert_eq!(t.distance_to(state("2", p)).unwrap(), 1);
    }

    #[test]
    fn classic_three_peg_distances() {
        // d(0̄, 1̄) = 2^n - 1 on three pegs
        for n in 1..=12 {
            let p = params(3, n);
            let t = bfs_from(p, perfect_state(p, 0).unwrap()).unwrap();
            let d = t.distance_to(perfect_state(p, 1).unwrap()).unwrap();
            assert_eq!(d as u64, (1u64 << n) - 1, "n = {n}");
        }
    }

    #[test]
    fn unit_distance_for_single_move() {
        let p = params(3, 3);
        let t = bfs_from(p, state("000", p)).unwrap();
        assert_eq!(t.distance_to(state("001", p)).unwrap(), 1);
        assert_eq!(t.distance_to(state("111", p)).unwrap(), 7);
        assert_eq!(t.max_distance(), 7);
    }

    #[test]
    fn bfs_layer_property() {
        let p = params(4, 4);
        let t = bfs_from(p, state("0123", p)).unwrap();
        let space = CodeSpace::new(p);
        for code in p.codes() {
            let d = t.get(code) as i32;
            space.for_each_neighbor(code, |nbr| {
                assert!((t.get(nbr) as i32 - d).abs() <= 1);
            });
        }
    }

    #[test]
    fn bidirectional_agrees_with_bfs() {
        let p = params(4, 4);
        let t = bfs_from(p, perfect_state(p, 0).unwrap()).unwrap();
        for code in (0..p.vertex_count()).step_by(7) {
            let v = State::from_code(p, code).unwrap();
            let d = distance(p, perfect_state(p, 0).unwrap(), v).unwrap();
            assert_eq!(d, t.get(code), "to {v}");
            let back = distance(p, v, perfect_state(p, 0).unwrap()).unwrap();
            assert_eq!(back, d);
        }
    }

    #[test]
    fn bidirectional_trivial_cases() {
        let p = params(4, 8);
        let u = state("03112333", p);
        let v = state("03102333", p);
        assert_eq!(distance(p, u, u).unwrap(), 0);
        assert_eq!(distance(p, u, v).unwrap(), 1);
        // known exact for four pegs: d(0̄, 1̄) = FS(8, 4) = 33
        let d = distance(
            p,
            perfect_state(p, 0).unwrap(),
            perfect_state(p, 1).unwrap(),
        )
        .unwrap();
        assert_eq!(d, 33);
    }

    #[test]
    fn search_budget_is_enforced() {
        let p = params(4, 6);
        let u = perfect_state(p, 0).unwrap();
        let v = perfect_state(p, 1).unwrap();
        assert!(matches!(
            distance_with_budget(p, u, v, 8),
            Err(Error::SearchBudgetExceeded { budget: 8 })
        ));
    }

    #[test]
    fn dag_structure_single_disk() {
        let p = params(3, 1);
        let dag = geodesic_dag(p, state("0", p)).unwrap();
        assert_eq!(dag.preds_of(0), &[] as &[u32]);
        assert_eq!(dag.preds_of(1), &[0]);
        assert_eq!(dag.preds_of(2), &[0]);
    }

    #[test]
    fn dag_reaches_source_in_dist_steps() {
        let p = params(3, 2);
        let dag = geodesic_dag(p, state("00", p)).unwrap();
        let far = state("11", p);
        assert_eq!(dag.distance_to(far).unwrap(), 3);
        assert!(!dag.preds_of(far.code()).is_empty());
        // every predecessor chain shortens distance by one per step
        for code in p.codes() {
            let d = dag.distance_to(State::from_code(p, code).unwrap()).unwrap();
            if code == dag.source_code() {
                assert!(dag.preds_of(code).is_empty());
                assert_eq!(d, 0);
            } else {
                assert!(!dag.preds_of(code).is_empty());
                for &pd in dag.preds_of(code) {
                    assert_eq!(dag.dist[pd as usize] + 1, d);
                }
            }
        }
    }

    #[test]
    fn three_peg_corner_geodesics_are_unique() {
        for n in 1..=8 {
            let p = params(3, n);
            let a = perfect_state(p, 0).unwrap();
            let b = perfect_state(p, 1).unwrap();
            assert_eq!(
                count_geodesics(p, a, b).unwrap(),
                BigUint::from(1u32),
                "n = {n}"
            );
        }
    }

    #[test]
    fn geodesic_count_examples() {
        let p = params(4, 2);
        let c = count_geodesics(p, state("00", p), state("11", p)).unwrap();
        // d("00","11") = 3 on H(4,2); exhaustive enumeration gives 2 geodesics
        assert_eq!(c, BigUint::from(2u32));
        // empty path
        let c = count_geodesics(p, state("12", p), state("12", p)).unwrap();
        assert_eq!(c, BigUint::from(1u32));
    }

    #[test]
    fn geodesic_count_matches_exhaustive_walk() {
        // enumerate all geodesics by DFS over the DAG and compare
        let p = params(4, 2);
        let source = state("00", p);
        let dag = geodesic_dag(p, source).unwrap();
        fn walk(dag: &GeodesicDag, v: u64) -> u64 {
            if v == dag.source_code() {
                return 1;
            }
            dag.preds_of(v).iter().map(|&u| walk(dag, u as u64)).sum()
        }
        for code in p.codes() {
            let v = State::from_code(p, code).unwrap();
            assert_eq!(
                dag.count_paths_to(v).unwrap(),
                BigUint::from(walk(&dag, code)),
                "target {v}"
            );
        }
    }

    #[test]
    fn largest_disk_bounds_examples() {
        let p = params(3, 2);
        assert_eq!(
            largest_disk_move_range(p, 0, state("00", p)).unwrap(),
            (0, 0)
        );
        assert_eq!(
            largest_disk_move_range(p, 0, state("01", p)).unwrap(),
            (0, 0)
        );
        let p = params(4, 3);
        assert_eq!(
            largest_disk_move_range(p, 0, state("333", p)).unwrap(),
            (1, 1)
        );
    }

    #[test]
    fn per_target_bounds_match_full_scan() {
        let p = params(4, 3);
        let dag = geodesic_dag(p, perfect_state(p, 2).unwrap()).unwrap();
        let (lo, hi) = dag.change_bounds_all();
        for code in p.codes() {
            let v = State::from_code(p, code).unwrap();
            let (l, h) = dag.largest_disk_change_bounds(v).unwrap();
            assert_eq!((l, h), (lo[code as usize], hi[code as usize]), "target {v}");
        }
    }

    #[test]
    fn largest_disk_check_passes_small_grid() {
        for (k, n) in [(3, 1), (3, 4), (4, 3), (5, 2)] {
            let res = largest_disk_move_check(params(k, n)).unwrap();
            assert!(res.pass, "k={k} n={n}: {:?}", res.counterexample);
        }
    }

    #[test]
    fn corner_fingerprints() {
        let p = params(3, 3);
        let tables = CornerTables::compute(p).unwrap();
        assert_eq!(tables.fingerprint(0), vec![0, 7, 7]);
        let v = state("001", p);
        let f = tables.fingerprint(v.code());
        assert_eq!(f[0], 1);
        assert_eq!(f.len(), 3);
    }

    #[test]
    fn nearest_corner_scan_passes() {
        for (k, n) in [(3, 3), (4, 4), (5, 3)] {
            let report = nearest_corner_report(params(k, n)).unwrap();
            assert!(report.pass, "k={k} n={n}: {:?}", report.counterexample);
        }
    }

    #[test]
    fn distance_table_raw_validation() {
        let p = params(3, 1);
        assert!(DistanceTable::from_raw(p, 0, vec![0, 1, 1]).is_ok());
        assert!(matches!(
            DistanceTable::from_raw(p, 3, vec![0, 1, 1]),
            Err(Error::CodeOutOfRange { .. })
        ));
        assert!(DistanceTable::from_raw(p, 0, vec![0, 1]).is_err());
        assert!(DistanceTable::from_raw(p, 0, vec![1, 1, 1]).is_err());
        assert!(DistanceTable::from_raw(p, 0, vec![0, u16::MAX, 1]).is_err());
    }
}

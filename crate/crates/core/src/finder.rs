//! Proof-guided rainbow-cycle extraction.
//!
//! The finder reduces the input to an edge-minimal subgraph, fixes a vertex
//! and color `(z, ζ)` attaining the replication number, builds a set `X` of
//! `δᶜ − 1` neighbors of `z` with distinct ζ-free colors toward `z`, and
//! then splits on the colors inside `X`:
//!
//! * **Case 1** (some edge inside `X` avoids ζ): grow greedy rainbow-path
//!   reach layers from `z` that forbid the repeating colors of
//!   `X⁺ = X ∪ N_ζ(z)` and close a cycle through an `X⁺` vertex.
//! * **Case 2** (every edge inside `X` is ζ-colored): partition the rest of
//!   the graph, discard the low-color-degree part `Y_H` and the doubly
//!   `D`-covered part `Y_D`, and grow an alternating rainbow path through
//!   `X` and `Y₀ = Y \ (Y_H ∪ Y_D)` that closes at `z`.
//!
//! Give the finder a graph with minimum color degree at least `(n+1)/2` on
//! enough vertices (`n > 432ℓ`) and the extraction succeeds; on anything
//! else it runs the same pipeline and reports exhaustion honestly, with an
//! optional exact-oracle fallback for small graphs.

use crate::graph::{EdgeColoredGraph, VertexSet};
use crate::minimality::edge_minimal_reduce;
use crate::reach::{close_cycle_from_reach, layered_reach, ReachMode};
use crate::search::find_rainbow_cycle_exact;
use crate::separation::repeating_colors;
use crate::witness::RainbowWitness;
use serde::Serialize;
use std::collections::HashSet;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FinderError {
    #[error("cycle length must be at least 3, got {0}")]
    BadLength(usize),
    #[error("Case 1 applies: edge ({0}, {1}) inside X is not colored zeta")]
    Case1Applies(u32, u32),
    #[error("X must be a subset of N({z}); vertex {x} is not a neighbor")]
    XNotInNeighborhood { z: u32, x: u32 },
}

#[derive(Clone, Copy, Debug)]
pub struct FinderConfig {
    /// Run the exact oracle on the *input* graph when the proof-guided
    /// attempt exhausts its candidates.
    pub fallback: bool,
    /// Largest vertex count on which the fallback oracle may run.
    pub fallback_cap: usize,
    /// Record full intermediate sets and path states in the trace.
    pub record_sets: bool,
}

impl Default for FinderConfig {
    fn default() -> Self {
        FinderConfig { fallback: true, fallback_cap: 16, record_sets: false }
    }
}

impl FinderConfig {
    pub fn no_fallback() -> Self {
        FinderConfig { fallback: false, ..FinderConfig::default() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FinderCase {
    Case1,
    Case2A,
    Case2B,
    Fallback,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExtendSide {
    IntoY0,
    IntoX,
}

/// One greedy extension step of the Case-2 path.
#[derive(Clone, Debug, Serialize)]
pub struct ExtensionStep {
    pub side: ExtendSide,
    pub from: u32,
    pub chosen: Option<u32>,
    /// Number of feasible extensions at this step.
    pub feasible: usize,
    /// Twice the counting lower bound for `feasible` (kept integral):
    /// `2d − 2e − (e − 2)` into Y₀ and `2d − 4e − (e − 2)` into X, where
    /// `d` is the relevant H₀ color degree and `e` the path's edge count
    /// before the step. `None` for the start-up picks.
    pub bound_doubled: Option<i64>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FinderOutcome {
    Found { witness: RainbowWitness, via_fallback: bool },
    Exhausted { reason: String },
}

/// Optional full set dumps, enabled by [`FinderConfig::record_sets`].
#[derive(Clone, Debug, Default, Serialize)]
pub struct RecordedSets {
    pub x_plus: Option<Vec<u32>>,
    pub y_h: Option<Vec<u32>>,
    pub y_d: Option<Vec<u32>>,
    pub y0: Option<Vec<u32>>,
    /// Successive Q_k vertex sequences of the Case-2 path.
    pub path_states: Vec<Vec<u32>>,
}

/// Linear narrative of one finder run.
#[derive(Clone, Debug, Serialize)]
pub struct FinderTrace {
    pub n: usize,
    pub ell: usize,
    /// Minimum color degree of the reduced graph (equals the input's).
    pub delta_c: usize,
    /// Whether `δᶜ ≥ (n+1)/2` holds (exact integer comparison).
    pub hypothesis_met: bool,
    pub replication: usize,
    pub z: Option<u32>,
    pub zeta: Option<u32>,
    pub x: Vec<u32>,
    pub case: Option<FinderCase>,
    /// Case-1 witness edge inside X with a non-ζ color.
    pub e0: Option<(u32, u32)>,
    pub c_rep: Vec<u32>,
    pub x_plus_len: Option<usize>,
    /// Greedy reach layer sizes (Case 1), layers 1..=ℓ−1.
    pub reach_layer_sizes: Option<Vec<usize>>,
    pub y_h_len: Option<usize>,
    pub y_d_len: Option<usize>,
    pub y0_len: Option<usize>,
    pub steps: Vec<ExtensionStep>,
    pub sets: Option<RecordedSets>,
    pub outcome: FinderOutcome,
}

// ---------------------------------------------------------------------------
// Case 2 machinery
// ---------------------------------------------------------------------------

/// The Case-2 partition of `Y = V \ ({z} ∪ X)`.
///
/// `Y_H` sends at most `(5/2)ℓ` distinct colors into `X`; `Y_D` receives at
/// least two D-edges (edges `{x, y}` with `c({x,y}) = c({x,z})`); `Y₀` is
/// the rest. Together with `d_edges` this describes the bipartite working
/// graph `H₀ = H[X, Y₀] \ D`.
#[derive(Clone, Debug)]
pub struct Case2Partition {
    pub y: Vec<u32>,
    pub y_h: Vec<u32>,
    pub y_d: Vec<u32>,
    pub y0: Vec<u32>,
    pub d_edges: Vec<(u32, u32)>,
}

/// Splits `Y` per the Case-2 definitions. Errors when some edge inside `X`
/// carries a non-ζ color, which sends the caller to Case 1 instead.
pub fn case2_partition(
    g: &EdgeColoredGraph,
    ell: usize,
    z: u32,
    zeta: u32,
    x_set: &VertexSet,
) -> Result<Case2Partition, FinderError> {
    if ell < 3 {
        return Err(FinderError::BadLength(ell));
    }
    for x in x_set.iter() {
        if !g.contains_edge(z, x) {
            return Err(FinderError::XNotInNeighborhood { z, x });
        }
    }
    for x in x_set.iter() {
        for &(w, c) in g.neighbors(x) {
            if w > x && x_set.contains(w) && c != zeta {
                return Err(FinderError::Case1Applies(x, w));
            }
        }
    }

    let n = g.vertex_count();
    let y: Vec<u32> = (0..n as u32).filter(|&v| v != z && !x_set.contains(v)).collect();
    let y_members = VertexSet::from_iter(n, y.iter().copied());

    let mut d_edges = Vec::new();
    let mut d_deg = vec![0u32; n];
    for x in x_set.iter() {
        let cxz = g.color_of(x, z).expect("x in N(z)");
        for &(w, c) in g.neighbors(x) {
            if y_members.contains(w) && c == cxz {
                d_edges.push((x, w));
                d_deg[w as usize] += 1;
            }
        }
    }

    let mut y_h = Vec::new();
    let mut y_d = Vec::new();
    let mut y0 = Vec::new();
    for &yy in &y {
        let dh = g.color_degree_within(yy, x_set);
        let in_h = 2 * dh <= 5 * ell;
        let in_d = d_deg[yy as usize] >= 2;
        if in_h {
            y_h.push(yy);
        }
        if in_d {
            y_d.push(yy);
        }
        if !in_h && !in_d {
            y0.push(yy);
        }
    }
    Ok(Case2Partition { y, y_h, y_d, y0, d_edges })
}

/// Shared context for the Case-2 greedy extension.
pub struct Case2Context<'a> {
    pub g: &'a EdgeColoredGraph,
    pub z: u32,
    pub zeta: u32,
    pub x_set: VertexSet,
    pub y0_set: VertexSet,
}

impl Case2Context<'_> {
    /// Distinct colors `x` sends into Y₀ along non-D edges.
    pub fn h0_color_degree_from_x(&self, x: u32) -> usize {
        let cxz = self.g.color_of(x, self.z).expect("x in N(z)");
        let mut colors: Vec<u32> = self
            .g
            .neighbors(x)
            .iter()
            .filter(|&&(w, c)| self.y0_set.contains(w) && c != cxz)
            .map(|&(_, c)| c)
            .collect();
        colors.sort_unstable();
        colors.dedup();
        colors.len()
    }

    /// Distinct colors `y` sends into X along non-D edges.
    pub fn h0_color_degree_from_y(&self, y: u32) -> usize {
        let mut colors: Vec<u32> = self
            .g
            .neighbors(y)
            .iter()
            .filter(|&&(x, c)| {
                self.x_set.contains(x) && Some(c) != self.g.color_of(x, self.z)
            })
            .map(|&(_, c)| c)
            .collect();
        colors.sort_unstable();
        colors.dedup();
        colors.len()
    }
}

/// A partial rainbow path rooted at `z`.
#[derive(Clone, Debug, Default)]
pub struct PathState {
    pub vertices: Vec<u32>,
    pub colors: Vec<u32>,
}

#[derive(Clone, Debug)]
pub struct ExtendResult {
    /// First feasible `(vertex, edge color)` in ascending vertex order.
    pub chosen: Option<(u32, u32)>,
    pub feasible: usize,
    /// Twice the counting lower bound on `feasible`.
    pub bound_doubled: i64,
}

/// One deterministic first-feasible extension of the Case-2 path.
///
/// Into Y₀ the step walks H₀ edges from the path's last vertex (an `X`
/// vertex); into X it additionally keeps `c({x, z})` off the path colors so
/// the cycle can always close at `z`.
pub fn greedy_extend(ctx: &Case2Context, state: &PathState, side: ExtendSide) -> ExtendResult {
    let last = *state.vertices.last().expect("path starts at z");
    let edge_count = state.colors.len() as i64;
    let mut chosen = None;
    let mut feasible = 0usize;
    match side {
        ExtendSide::IntoY0 => {
            let clast = ctx.g.color_of(last, ctx.z).expect("path X vertices neighbor z");
            for &(w, c) in ctx.g.neighbors(last) {
                if !ctx.y0_set.contains(w)
                    || c == clast
                    || state.vertices.contains(&w)
                    || state.colors.contains(&c)
                {
                    continue;
                }
                feasible += 1;
                if chosen.is_none() {
                    chosen = Some((w, c));
                }
            }
        }
        ExtendSide::IntoX => {
            for &(x, c) in ctx.g.neighbors(last) {
                if !ctx.x_set.contains(x) || state.vertices.contains(&x) {
                    continue;
                }
                let cxz = ctx.g.color_of(x, ctx.z).expect("x in N(z)");
                if c == cxz || state.colors.contains(&c) || state.colors.contains(&cxz) {
                    continue;
                }
                feasible += 1;
                if chosen.is_none() {
                    chosen = Some((x, c));
                }
            }
        }
    }
    let d = match side {
        ExtendSide::IntoY0 => ctx.h0_color_degree_from_x(last) as i64,
        ExtendSide::IntoX => ctx.h0_color_degree_from_y(last) as i64,
    };
    let bound_doubled = match side {
        ExtendSide::IntoY0 => 2 * d - 2 * edge_count - (edge_count - 2),
        ExtendSide::IntoX => 2 * d - 4 * edge_count - (edge_count - 2),
    };
    ExtendResult { chosen, feasible, bound_doubled }
}

// ---------------------------------------------------------------------------
// The finder pipeline
// ---------------------------------------------------------------------------

/// Runs the full extraction pipeline. The returned witness, when present,
/// is always a valid rainbow `ell`-cycle of the *input* graph; exhaustion
/// is reported in the trace, never as an error.
pub fn find_rainbow_cycle(
    g: &EdgeColoredGraph,
    ell: usize,
    config: &FinderConfig,
) -> Result<(Option<RainbowWitness>, FinderTrace), FinderError> {
    if ell < 3 {
        return Err(FinderError::BadLength(ell));
    }
    let reduced = edge_minimal_reduce(g);
    let n = g.vertex_count();
    let delta_c = if n == 0 { 0 } else { reduced.min_color_degree() };
    let mut trace = FinderTrace {
        n,
        ell,
        delta_c,
        hypothesis_met: 2 * delta_c >= n + 1,
        replication: 0,
        z: None,
        zeta: None,
        x: Vec::new(),
        case: None,
        e0: None,
        c_rep: Vec::new(),
        x_plus_len: None,
        reach_layer_sizes: None,
        y_h_len: None,
        y_d_len: None,
        y0_len: None,
        steps: Vec::new(),
        sets: config.record_sets.then(RecordedSets::default),
        outcome: FinderOutcome::Exhausted { reason: String::new() },
    };

    match attempt_proof(&reduced, ell, &mut trace) {
        Ok(witness) => {
            debug_assert!(witness.validate(g).is_ok());
            trace.outcome = FinderOutcome::Found { witness: witness.clone(), via_fallback: false };
            Ok((Some(witness), trace))
        }
        Err(reason) => {
            if config.fallback {
                if n <= config.fallback_cap {
                    trace.case = Some(FinderCase::Fallback);
                    // The fallback answers for the input graph, not the
                    // reduction: reduction preserves delta_c but can drop
                    // rainbow cycles.
                    match find_rainbow_cycle_exact(g, ell).expect("ell checked") {
                        Some(witness) => {
                            trace.outcome = FinderOutcome::Found {
                                witness: witness.clone(),
                                via_fallback: true,
                            };
                            return Ok((Some(witness), trace));
                        }
                        None => {
                            trace.outcome = FinderOutcome::Exhausted {
                                reason: format!(
                                    "{reason}; exact fallback confirms there is no rainbow {ell}-cycle"
                                ),
                            };
                            return Ok((None, trace));
                        }
                    }
                }
                trace.outcome = FinderOutcome::Exhausted {
                    reason: format!(
                        "{reason}; fallback skipped (n = {n} exceeds cap {})",
                        config.fallback_cap
                    ),
                };
                return Ok((None, trace));
            }
            trace.outcome = FinderOutcome::Exhausted { reason };
            Ok((None, trace))
        }
    }
}

/// The proof-guided attempt on the reduced graph. Returns the witness or a
/// human-readable exhaustion reason.
fn attempt_proof(
    h: &EdgeColoredGraph,
    ell: usize,
    trace: &mut FinderTrace,
) -> Result<RainbowWitness, String> {
    let (r, (z, zeta)) = h
        .replication()
        .map_err(|_| "graph has no edges".to_string())?;
    trace.replication = r;
    trace.z = Some(z);
    trace.zeta = Some(zeta);

    // X: scan N(z) in id order, first representative per color, skip zeta.
    let want = trace.delta_c.saturating_sub(1);
    let mut x = Vec::with_capacity(want);
    let mut seen = HashSet::new();
    for &(w, c) in h.neighbors(z) {
        if x.len() == want {
            break;
        }
        if c != zeta && seen.insert(c) {
            x.push(w);
        }
    }
    if x.len() != want {
        return Err(format!(
            "hypothesis violation: only {} distinct zeta-free colors at z = {z}, need {want}",
            x.len()
        ));
    }
    trace.x = x.clone();
    let x_set = VertexSet::from_iter(h.vertex_count(), x.iter().copied());

    let e0 = x_set.iter().find_map(|a| {
        h.neighbors(a)
            .iter()
            .find(|&&(b, c)| b > a && x_set.contains(b) && c != zeta)
            .map(|&(b, _)| (a, b))
    });

    if let Some((a, b)) = e0 {
        trace.case = Some(FinderCase::Case1);
        trace.e0 = Some((a, b));
        case1(h, ell, z, zeta, &x, &x_set, trace)
    } else {
        trace.case = Some(if ell % 2 == 1 { FinderCase::Case2A } else { FinderCase::Case2B });
        case2(h, ell, z, zeta, &x, &x_set, trace)
    }
}

fn case1(
    h: &EdgeColoredGraph,
    ell: usize,
    z: u32,
    zeta: u32,
    x: &[u32],
    x_set: &VertexSet,
    trace: &mut FinderTrace,
) -> Result<RainbowWitness, String> {
    let n = h.vertex_count();
    let mut x_plus: Vec<u32> = x.to_vec();
    x_plus.extend(h.alpha_neighborhood(z, zeta).filter(|&w| !x_set.contains(w)));
    x_plus.sort_unstable();
    let x_plus_set = VertexSet::from_iter(n, x_plus.iter().copied());
    let c_rep = repeating_colors(h, z, &x_plus_set).expect("X+ inside N(z)");
    debug_assert!(c_rep.iter().all(|&c| c == zeta), "only zeta can repeat in X+");

    trace.c_rep = c_rep.clone();
    trace.x_plus_len = Some(x_plus.len());
    if let Some(sets) = trace.sets.as_mut() {
        sets.x_plus = Some(x_plus.clone());
    }

    let reach = layered_reach(h, z, &c_rep, ell - 1, &VertexSet::new(n), ReachMode::Greedy)
        .expect("anchor not avoided");
    trace.reach_layer_sizes = Some((1..=ell - 1).map(|i| reach.layer(i).len()).collect());

    close_cycle_from_reach(h, z, &x_plus_set, &reach, ell, &c_rep)
        .expect("reach built for this call")
        .ok_or_else(|| {
            format!(
                "Case 1 exhausted: no closing pair over {} reach endpoints",
                reach.layer(ell - 1).len()
            )
        })
}

fn case2(
    h: &EdgeColoredGraph,
    ell: usize,
    z: u32,
    zeta: u32,
    x: &[u32],
    x_set: &VertexSet,
    trace: &mut FinderTrace,
) -> Result<RainbowWitness, String> {
    let n = h.vertex_count();
    let part = case2_partition(h, ell, z, zeta, x_set).expect("case split established");
    trace.y_h_len = Some(part.y_h.len());
    trace.y_d_len = Some(part.y_d.len());
    trace.y0_len = Some(part.y0.len());
    if let Some(sets) = trace.sets.as_mut() {
        sets.y_h = Some(part.y_h.clone());
        sets.y_d = Some(part.y_d.clone());
        sets.y0 = Some(part.y0.clone());
    }
    let ctx = Case2Context {
        g: h,
        z,
        zeta,
        x_set: x_set.clone(),
        y0_set: VertexSet::from_iter(n, part.y0.iter().copied()),
    };

    let mut state = PathState::default();
    if ell % 2 == 1 {
        // Odd start (z, y0, x1) with y0 in the zeta class of z and a
        // non-zeta edge to X. When ell = 3 this x1 already closes the
        // cycle, so the non-D condition applies to it as well.
        let y0 = h
            .alpha_neighborhood(z, zeta)
            .next()
            .expect("replication class is nonempty");
        let closing = ell == 3;
        let mut chosen = None;
        let mut feasible = 0usize;
        for &(xx, c) in h.neighbors(y0) {
            if !x_set.contains(xx) || c == zeta {
                continue;
            }
            if closing && Some(c) == h.color_of(xx, z) {
                continue;
            }
            feasible += 1;
            if chosen.is_none() {
                chosen = Some((xx, c));
            }
        }
        trace.steps.push(ExtensionStep {
            side: ExtendSide::IntoX,
            from: y0,
            chosen: chosen.map(|(v, _)| v),
            feasible,
            bound_doubled: None,
        });
        let Some((x1, c1)) = chosen else {
            return Err(format!("Case 2A exhausted: no zeta-free edge from y0 = {y0} into X"));
        };
        state.vertices = vec![z, y0, x1];
        state.colors = vec![zeta, c1];
    } else {
        let Some(&x1) = x.first() else {
            return Err("Case 2B exhausted: X is empty".into());
        };
        state.vertices = vec![z, x1];
        state.colors = vec![h.color_of(z, x1).expect("x1 in N(z)")];
    }
    if let Some(sets) = trace.sets.as_mut() {
        sets.path_states.push(state.vertices.clone());
    }

    while state.vertices.len() < ell {
        let last = *state.vertices.last().expect("nonempty");
        let side = if x_set.contains(last) { ExtendSide::IntoY0 } else { ExtendSide::IntoX };
        let result = greedy_extend(&ctx, &state, side);
        trace.steps.push(ExtensionStep {
            side,
            from: last,
            chosen: result.chosen.map(|(v, _)| v),
            feasible: result.feasible,
            bound_doubled: Some(result.bound_doubled),
        });
        let Some((w, c)) = result.chosen else {
            return Err(format!(
                "Case 2 exhausted: no feasible extension {side:?} from {last} at {} vertices",
                state.vertices.len()
            ));
        };
        state.vertices.push(w);
        state.colors.push(c);
        if let Some(sets) = trace.sets.as_mut() {
            sets.path_states.push(state.vertices.clone());
        }
    }

    let x_last = *state.vertices.last().expect("nonempty");
    let closing = h.color_of(x_last, z).expect("path ends in X");
    debug_assert!(!state.colors.contains(&closing));
    let mut colors = state.colors;
    colors.push(closing);
    Ok(RainbowWitness::cycle(state.vertices, colors))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{
        boost_min_color_degree, rainbow_complete, rainbow_complete_bipartite,
        random_colored_graph,
    };

    #[test]
    fn rejects_short_lengths() {
        let g = rainbow_complete(4);
        assert!(matches!(
            find_rainbow_cycle(&g, 2, &FinderConfig::default()),
            Err(FinderError::BadLength(2))
        ));
    }

    #[test]
    fn finds_triangles_on_boosted_random_instances() {
        for seed in 0..20u64 {
            let n = 40;
            let base = random_colored_graph(n, 0.5, 30, seed);
            let g = boost_min_color_degree(&base, (n + 2) / 2, seed ^ 0xabc).unwrap();
            let (w, trace) = find_rainbow_cycle(&g, 3, &FinderConfig::no_fallback()).unwrap();
            let w = w.unwrap_or_else(|| panic!("seed {seed}: {:?}", trace.outcome));
            w.validate(&g).unwrap();
            assert_eq!(w.len(), 3);
            assert!(trace.hypothesis_met);
            assert!(!matches!(trace.case, Some(FinderCase::Fallback)));
        }
    }

    #[test]
    fn bipartite_below_threshold_reports_exhaustion() {
        let g = rainbow_complete_bipartite(6, 6);
        let (w, trace) = find_rainbow_cycle(&g, 3, &FinderConfig::no_fallback()).unwrap();
        assert!(w.is_none());
        assert!(!trace.hypothesis_met, "delta_c = n/2 misses (n+1)/2");
        assert_eq!(trace.case, Some(FinderCase::Case2A));
        assert!(matches!(trace.outcome, FinderOutcome::Exhausted { .. }));
    }

    #[test]
    fn fallback_agrees_with_oracle_on_small_instances() {
        for seed in 0..40u64 {
            let g = random_colored_graph(10, 0.5, 6, seed);
            for ell in [3usize, 4, 5] {
                let oracle = crate::search::find_rainbow_cycle_exact(&g, ell).unwrap();
                let (found, _trace) =
                    find_rainbow_cycle(&g, ell, &FinderConfig::default()).unwrap();
                assert_eq!(oracle.is_some(), found.is_some(), "seed {seed} ell {ell}");
                if let Some(w) = found {
                    w.validate(&g).unwrap();
                }
            }
        }
    }

    #[test]
    fn case2_partition_demands_case2_condition() {
        let g = rainbow_complete(5);
        let x_set = VertexSet::from_iter(5, [1, 2]);
        // Edge {1,2} of rainbow K5 is not colored like anything at z = 0.
        assert!(matches!(
            case2_partition(&g, 3, 0, 0, &x_set),
            Err(FinderError::Case1Applies(1, 2))
        ));
    }

    #[test]
    fn case2_partition_without_d_edges() {
        // Star-like host: X = {1, 2} has no internal edges (Case 2 holds
        // vacuously), and no colors coincide, so Y_D is empty.
        let g = EdgeColoredGraph::build(
            5,
            [(0, 1, 0), (0, 2, 1), (1, 3, 2), (2, 4, 3), (3, 4, 4), (1, 4, 5), (2, 3, 6)],
        )
        .unwrap();
        let x_set = VertexSet::from_iter(5, [1, 2]);
        let part = case2_partition(&g, 3, 0, 7, &x_set).unwrap();
        assert_eq!(part.y, vec![3, 4]);
        assert!(part.y_d.is_empty());
        assert!(part.d_edges.is_empty());
    }

    /// A hand-built Case-2 instance: z = 0, zeta = 0 on {0,11} and {0,12},
    /// X = {1..10} with distinct zeta-free colors toward z and a single
    /// internal edge {1,2} colored zeta, and Y = {11..18} sending ten
    /// distinct fresh colors each into X (so none lands in Y_H or Y_D).
    fn case2_instance() -> (EdgeColoredGraph, VertexSet) {
        let mut edges = vec![(0u32, 11u32, 0u32), (0, 12, 0), (1, 2, 0)];
        for x in 1..=10u32 {
            edges.push((0, x, x));
        }
        let mut c = 200;
        for y in 11..=18u32 {
            for x in 1..=10u32 {
                edges.push((x, y, c));
                c += 1;
            }
        }
        let g = EdgeColoredGraph::build(19, edges).unwrap();
        let x_set = VertexSet::from_iter(19, 1..=10);
        (g, x_set)
    }

    #[test]
    fn case2_partition_classifies_rich_y_vertices() {
        let (g, x_set) = case2_instance();
        let part = case2_partition(&g, 3, 0, 0, &x_set).unwrap();
        assert_eq!(part.y, (11..=18).collect::<Vec<u32>>());
        assert!(part.y_h.is_empty(), "every y sends 10 > 5l/2 colors into X");
        assert!(part.y_d.is_empty());
        assert_eq!(part.y0, part.y);
    }

    #[test]
    fn greedy_extend_respects_paper_counting() {
        let (g, x_set) = case2_instance();
        let part = case2_partition(&g, 3, 0, 0, &x_set).unwrap();
        let ctx = Case2Context {
            g: &g,
            z: 0,
            zeta: 0,
            x_set,
            y0_set: VertexSet::from_iter(19, part.y0.iter().copied()),
        };
        // Path (z, y0, x1) = (0, 11, 1); the edge {1, 11} got color 200.
        let state = PathState { vertices: vec![0, 11, 1], colors: vec![0, 200] };
        let step = greedy_extend(&ctx, &state, ExtendSide::IntoY0);
        let (w, _) = step.chosen.expect("an extension into Y0 exists");
        assert!(part.y0.contains(&w));
        assert_eq!(step.feasible, 7, "all other y vertices remain feasible");
        assert!(2 * step.feasible as i64 >= step.bound_doubled);

        // One step further: from the chosen y, back into X.
        let state = PathState {
            vertices: vec![0, 11, 1, w],
            colors: vec![0, 200, g.color_of(1, w).unwrap()],
        };
        let step = greedy_extend(&ctx, &state, ExtendSide::IntoX);
        assert!(step.chosen.is_some());
        assert!(2 * step.feasible as i64 >= step.bound_doubled);
    }

    /// The full pipeline enters Case 2A on the structured instance and
    /// closes a triangle through the zeta class.
    #[test]
    fn finder_walks_case2a_on_structured_instance() {
        let (g, _) = case2_instance();
        let (w, trace) = find_rainbow_cycle(&g, 3, &FinderConfig::no_fallback()).unwrap();
        assert_eq!(trace.case, Some(FinderCase::Case2A), "{:?}", trace.outcome);
        let w = w.expect("closing at z must succeed here");
        w.validate(&g).unwrap();
    }

    #[test]
    fn fallback_covers_case2_exhaustion_on_even_cycles() {
        // Rainbow K_{5,5} with ell = 4: X has no internal edges so Case 2B
        // runs, but Y0 is empty (every y sends only 4 < 10 colors into X);
        // the exact fallback still recovers the rainbow 4-cycle.
        let g = rainbow_complete_bipartite(5, 5);
        let (w, trace) = find_rainbow_cycle(&g, 4, &FinderConfig::default()).unwrap();
        assert_eq!(trace.case, Some(FinderCase::Fallback));
        assert!(matches!(
            trace.outcome,
            FinderOutcome::Found { via_fallback: true, .. }
        ));
        w.unwrap().validate(&g).unwrap();
    }
}

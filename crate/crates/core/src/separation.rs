//! Separation and restriction statistics, the auxiliary digraphs D and F,
//! and executable forms of the displayed inequalities built on them.
//!
//! For an anchor `v` and `X ⊆ N(v)`, a color `α` *X-separates* a vertex `y`
//! from `v` when some `x ∈ N(y) ∩ X` has `α = c({x,y}) ≠ c({v,x})`; it is
//! additionally *restricted* for `y` when `α` appears on no edge from `y`
//! leaving `X`. All inequality checks here compare exact integers (averages
//! are carried as numerator/denominator pairs), never floats.

use crate::digraph::Digraph;
use crate::graph::{ColorStats, EdgeColoredGraph, VertexSet};
use crate::minimality::check_no_mono_3path;
use crate::witness::{RainbowWitness, WitnessError, WitnessKind};
use serde::Serialize;
use std::cmp::Ordering;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SeparationError {
    #[error("X must be a subset of N({v}); vertex {x} is not a neighbor")]
    XNotInNeighborhood { v: u32, x: u32 },
    #[error("y = {0} must differ from the anchor")]
    YEqualsAnchor(u32),
    #[error("Y must be nonempty")]
    EmptyY,
    #[error("Y must not contain the anchor {0}")]
    AnchorInY(u32),
    #[error("graph admits three commonly colored edges forming a path; not edge-minimal")]
    NotEdgeMinimal,
    #[error("cycle length must be at least 3, got {0}")]
    BadCycleLength(usize),
    #[error("C_rep is missing color {color}, which repeats from {v} into X")]
    IncompleteCrep { v: u32, color: u32 },
    #[error("witness for y = {y} fails validation: {source}")]
    BadWitness { y: u32, source: WitnessError },
    #[error("witness for y = {y} has the wrong shape: {msg}")]
    BadWitnessShape { y: u32, msg: String },
}

fn require_x_in_neighborhood(
    g: &EdgeColoredGraph,
    v: u32,
    x_set: &VertexSet,
) -> Result<(), SeparationError> {
    for x in x_set.iter() {
        if !g.contains_edge(v, x) {
            return Err(SeparationError::XNotInNeighborhood { v, x });
        }
    }
    Ok(())
}

/// Exact rational with a positive denominator, compared by cross
/// multiplication.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct Ratio {
    pub num: i64,
    pub den: i64,
}

impl Ratio {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den > 0, "denominator must be positive");
        Ratio { num, den }
    }
}

impl PartialEq for Ratio {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Ratio {}

impl PartialOrd for Ratio {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ratio {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as i128 * other.den as i128).cmp(&(other.num as i128 * self.den as i128))
    }
}

/// Outcome of a conditional property check. `Vacuous` means a hypothesis of
/// the statement did not hold, so nothing was actually tested.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum CheckOutcome {
    Holds,
    Violated,
    Vacuous { reason: String },
}

// ---------------------------------------------------------------------------
// Separation / restriction
// ---------------------------------------------------------------------------

/// Colors that X-separate `y` from `v`: each `α` such that some
/// `x ∈ N(y) ∩ X` has `α = c({x,y}) ≠ c({v,x})`. Sorted ascending.
pub fn separating_colors(
    g: &EdgeColoredGraph,
    v: u32,
    x_set: &VertexSet,
    y: u32,
) -> Result<Vec<u32>, SeparationError> {
    if y == v {
        return Err(SeparationError::YEqualsAnchor(y));
    }
    require_x_in_neighborhood(g, v, x_set)?;
    let mut colors: Vec<u32> = g
        .neighbors(y)
        .iter()
        .filter(|&&(x, cxy)| {
            x_set.contains(x) && g.color_of(v, x).expect("x in N(v)") != cxy
        })
        .map(|&(_, cxy)| cxy)
        .collect();
    colors.sort_unstable();
    colors.dedup();
    Ok(colors)
}

/// The separating colors that additionally appear on no edge from `y` to a
/// vertex outside `X`. Sorted ascending; always a subset of
/// [`separating_colors`].
pub fn restricted_colors(
    g: &EdgeColoredGraph,
    v: u32,
    x_set: &VertexSet,
    y: u32,
) -> Result<Vec<u32>, SeparationError> {
    let separating = separating_colors(g, v, x_set, y)?;
    let mut outside: Vec<u32> = g
        .neighbors(y)
        .iter()
        .filter(|&&(w, _)| !x_set.contains(w))
        .map(|&(_, c)| c)
        .collect();
    outside.sort_unstable();
    Ok(separating
        .into_iter()
        .filter(|c| outside.binary_search(c).is_err())
        .collect())
}

/// Colors `c({v,x})` that repeat among `x ∈ X`. Sorted ascending.
pub fn repeating_colors(
    g: &EdgeColoredGraph,
    v: u32,
    x_set: &VertexSet,
) -> Result<Vec<u32>, SeparationError> {
    require_x_in_neighborhood(g, v, x_set)?;
    let mut colors: Vec<u32> = x_set
        .iter()
        .map(|x| g.color_of(v, x).expect("x in N(v)"))
        .collect();
    colors.sort_unstable();
    let mut repeats = Vec::new();
    let mut i = 0;
    while i < colors.len() {
        let mut j = i + 1;
        while j < colors.len() && colors[j] == colors[i] {
            j += 1;
        }
        if j - i >= 2 {
            repeats.push(colors[i]);
        }
        i = j;
    }
    Ok(repeats)
}

// ---------------------------------------------------------------------------
// Auxiliary digraphs
// ---------------------------------------------------------------------------

/// The digraph D on `X ∪ Y` with an arc `(x, y)` for each edge `{x, y}`,
/// `x ∈ X`, `y ∈ Y`, whose color equals `c({v, x})`.
pub fn build_digraph_d(
    g: &EdgeColoredGraph,
    v: u32,
    x_set: &VertexSet,
    y_set: &VertexSet,
) -> Result<Digraph, SeparationError> {
    require_x_in_neighborhood(g, v, x_set)?;
    if y_set.is_empty() {
        return Err(SeparationError::EmptyY);
    }
    if y_set.contains(v) {
        return Err(SeparationError::AnchorInY(v));
    }
    let mut members = x_set.clone();
    for y in y_set.iter() {
        members.insert(y);
    }
    let mut d = Digraph::new(members);
    for x in x_set.iter() {
        let cvx = g.color_of(v, x).expect("x in N(v)");
        for &(w, cxw) in g.neighbors(x) {
            if y_set.contains(w) && cxw == cvx {
                d.add_arc(x, w);
            }
        }
    }
    Ok(d)
}

/// The special case of D used for rainbow triangles: vertex set `N(z)`,
/// with an arc `(x, y)` for each edge of `G[N(z)]` whose head lies in
/// `N₁(z)` and whose color equals `c({x, z})`.
pub fn build_digraph_d_sec2(g: &EdgeColoredGraph, z: u32) -> Digraph {
    let n = g.vertex_count();
    let members = VertexSet::from_iter(n, g.neighbors(z).iter().map(|&(w, _)| w));
    let unique = VertexSet::from_iter(n, g.unique_neighbors(z));
    let mut d = Digraph::new(members.clone());
    for x in members.iter() {
        let cxz = g.color_of(x, z).expect("x in N(z)");
        for &(y, cxy) in g.neighbors(x) {
            if members.contains(y) && unique.contains(y) && cxy == cxz {
                d.add_arc(x, y);
            }
        }
    }
    d
}

/// The digraph F on all of `V` with arcs `(x, y) ∈ X⁺ × V` for edges
/// `{x, y}` whose color differs from `c({x, z})`.
pub fn build_digraph_f(
    g: &EdgeColoredGraph,
    z: u32,
    x_plus: &VertexSet,
) -> Result<Digraph, SeparationError> {
    require_x_in_neighborhood(g, z, x_plus)?;
    let mut f = Digraph::new(VertexSet::full(g.vertex_count()));
    for x in x_plus.iter() {
        let cxz = g.color_of(x, z).expect("x in N(z)");
        for &(y, cxy) in g.neighbors(x) {
            if cxy != cxz {
                f.add_arc(x, y);
            }
        }
    }
    Ok(f)
}

// ---------------------------------------------------------------------------
// Averaging bound
// ---------------------------------------------------------------------------

/// Per-vertex separation record inside a [`SeparationReport`].
#[derive(Clone, Debug, Serialize)]
pub struct SeparationRecord {
    pub y: u32,
    pub sigma: usize,
    pub rho: usize,
    pub separating: Vec<u32>,
    pub restricted: Vec<u32>,
}

/// Exact report of the averaging bound
/// `ρ̄ ≥ δᶜ(G) + |X| − n − (R−1)·|X ∩ N₁(v)| / |Y|`.
#[derive(Clone, Debug, Serialize)]
pub struct SeparationReport {
    pub anchor: u32,
    pub n: usize,
    pub delta_c: usize,
    pub replication: usize,
    pub x: Vec<u32>,
    pub y: Vec<u32>,
    pub x_unique_overlap: usize,
    pub records: Vec<SeparationRecord>,
    pub sigma_avg: Ratio,
    pub rho_avg: Ratio,
    pub bound_rhs: Ratio,
    /// True when `σ̄ ≥ ρ̄ ≥ bound_rhs` under exact comparison.
    pub holds: bool,
}

/// Evaluates the averaging bound for `(v, X, Y)` on an edge-minimal graph.
///
/// Refuses graphs failing [`check_no_mono_3path`], the cheap necessary
/// consequence of edge-minimality the bound's proof relies on.
pub fn check_averaging_bound(
    g: &EdgeColoredGraph,
    v: u32,
    x_set: &VertexSet,
    y_set: &VertexSet,
) -> Result<SeparationReport, SeparationError> {
    if !check_no_mono_3path(g) {
        return Err(SeparationError::NotEdgeMinimal);
    }
    require_x_in_neighborhood(g, v, x_set)?;
    if y_set.is_empty() {
        return Err(SeparationError::EmptyY);
    }
    if y_set.contains(v) {
        return Err(SeparationError::AnchorInY(v));
    }

    let stats = ColorStats::compute(g);
    let replication = stats.replication();
    let overlap = stats
        .unique_neighborhood(v)
        .iter()
        .filter(|&&x| x_set.contains(x))
        .count();

    let mut records = Vec::with_capacity(y_set.len());
    let (mut sigma_sum, mut rho_sum) = (0i64, 0i64);
    for y in y_set.iter() {
        let separating = separating_colors(g, v, x_set, y)?;
        let restricted = restricted_colors(g, v, x_set, y)?;
        sigma_sum += separating.len() as i64;
        rho_sum += restricted.len() as i64;
        records.push(SeparationRecord {
            y,
            sigma: separating.len(),
            rho: restricted.len(),
            separating,
            restricted,
        });
    }

    let n = g.vertex_count() as i64;
    let delta_c = g.min_color_degree() as i64;
    let y_len = y_set.len() as i64;
    let rhs_num = (delta_c + x_set.len() as i64 - n) * y_len
        - (replication as i64 - 1) * overlap as i64;

    let sigma_avg = Ratio::new(sigma_sum, y_len);
    let rho_avg = Ratio::new(rho_sum, y_len);
    let bound_rhs = Ratio::new(rhs_num, y_len);
    let holds = sigma_avg >= rho_avg && rho_avg >= bound_rhs;

    Ok(SeparationReport {
        anchor: v,
        n: g.vertex_count(),
        delta_c: delta_c as usize,
        replication,
        x: x_set.iter().collect(),
        y: y_set.iter().collect(),
        x_unique_overlap: overlap,
        records,
        sigma_avg,
        rho_avg,
        bound_rhs,
        holds,
    })
}

// ---------------------------------------------------------------------------
// Sigma cap
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, Serialize)]
pub struct SigmaCapRecord {
    pub y: u32,
    pub sigma: usize,
    /// `sigma <= 3 * ell`.
    pub holds: bool,
}

/// Checks `σ_{v,X}(y) ≤ 3ℓ` for each supplied `y`, after validating that
/// `y`'s witness really is an `(ℓ−1)`-vertex, C_rep-free rainbow
/// `{v,y}`-path and that `c_rep` covers every color repeating from `v`
/// into `X`.
///
/// The absence of a rainbow ℓ-cycle in `g` is a hypothesis of the cap; it
/// must be certified by the exact oracle upstream.
pub fn check_sigma_cap(
    g: &EdgeColoredGraph,
    ell: usize,
    v: u32,
    x_set: &VertexSet,
    c_rep: &[u32],
    witnesses: &[(u32, RainbowWitness)],
) -> Result<Vec<SigmaCapRecord>, SeparationError> {
    if ell < 3 {
        return Err(SeparationError::BadCycleLength(ell));
    }
    if !check_no_mono_3path(g) {
        return Err(SeparationError::NotEdgeMinimal);
    }
    require_x_in_neighborhood(g, v, x_set)?;
    for color in repeating_colors(g, v, x_set)? {
        if !c_rep.contains(&color) {
            return Err(SeparationError::IncompleteCrep { v, color });
        }
    }

    let mut out = Vec::with_capacity(witnesses.len());
    for (y, wit) in witnesses {
        let y = *y;
        wit.validate(g)
            .map_err(|source| SeparationError::BadWitness { y, source })?;
        let shape_err = |msg: String| SeparationError::BadWitnessShape { y, msg };
        if wit.kind != WitnessKind::Path {
            return Err(shape_err("witness must be a path".into()));
        }
        if wit.len() != ell - 1 {
            return Err(shape_err(format!(
                "path must have {} vertices, has {}",
                ell - 1,
                wit.len()
            )));
        }
        if wit.start() != Some(v) || wit.end() != Some(y) {
            return Err(shape_err(format!("path must run from {v} to {y}")));
        }
        if let Some(c) = wit.colors.iter().find(|c| c_rep.contains(c)) {
            return Err(shape_err(format!("path uses forbidden repeating color {c}")));
        }
        let sigma = separating_colors(g, v, x_set, y)?.len();
        out.push(SigmaCapRecord { y, sigma, holds: sigma <= 3 * ell });
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Maximum-degree bound
// ---------------------------------------------------------------------------

/// Checks `δᶜ(G) < n/2  or  Δ(G) < δᶜ(G) + 4R + 3ℓ` on an edge-minimal
/// graph with `δᶜ(G) ≥ 5R + 27ℓ`. Gates that fail make the check vacuous;
/// absence of a rainbow ℓ-cycle must be certified by the caller.
pub fn check_maxdeg_bound(g: &EdgeColoredGraph, ell: usize) -> CheckOutcome {
    if g.edge_count() == 0 {
        return CheckOutcome::Vacuous { reason: "graph has no edges".into() };
    }
    if !check_no_mono_3path(g) {
        return CheckOutcome::Vacuous { reason: "graph is not edge-minimal".into() };
    }
    let (r, _) = g.replication().expect("graph has edges");
    let delta_c = g.min_color_degree();
    if delta_c < 5 * r + 27 * ell {
        return CheckOutcome::Vacuous {
            reason: format!("delta_c = {delta_c} below the 5R + 27l = {} gate", 5 * r + 27 * ell),
        };
    }
    let n = g.vertex_count();
    if 2 * delta_c < n || g.max_degree() < delta_c + 4 * r + 3 * ell {
        CheckOutcome::Holds
    } else {
        CheckOutcome::Violated
    }
}

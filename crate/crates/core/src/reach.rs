//! Layered rainbow-path reachability.
//!
//! `layers[i]` (1-based) holds, for each vertex `y`, one `i`-vertex rainbow
//! path from the anchor to `y` that uses no forbidden color and whose
//! vertices other than the anchor stay outside the `avoid` set. Exact mode
//! enumerates every such path so membership is exact; greedy mode only
//! extends stored witnesses layer by layer, giving a subset of the true
//! layer but staying cheap enough for large graphs.

use crate::graph::{EdgeColoredGraph, VertexSet};
use crate::search::SearchError;
use crate::witness::RainbowWitness;
use serde::Serialize;
use std::collections::BTreeMap;

/// Largest vertex count accepted by exact-mode enumeration by default.
pub const EXACT_REACH_CAP: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ReachMode {
    Exact,
    Greedy,
}

#[derive(Clone, Debug)]
pub struct LayeredReach {
    anchor: u32,
    forbidden: Vec<u32>,
    avoid: Vec<u32>,
    mode: ReachMode,
    layers: Vec<BTreeMap<u32, RainbowWitness>>,
}

impl LayeredReach {
    pub fn anchor(&self) -> u32 {
        self.anchor
    }

    pub fn mode(&self) -> ReachMode {
        self.mode
    }

    /// Sorted forbidden colors.
    pub fn forbidden(&self) -> &[u32] {
        &self.forbidden
    }

    pub fn avoid(&self) -> &[u32] {
        &self.avoid
    }

    pub fn max_layer(&self) -> usize {
        self.layers.len()
    }

    /// Layer `i` (1-based: layer 1 is the anchor alone), keyed by endpoint.
    pub fn layer(&self, i: usize) -> &BTreeMap<u32, RainbowWitness> {
        &self.layers[i - 1]
    }

    pub fn members(&self, i: usize) -> impl Iterator<Item = u32> + '_ {
        self.layer(i).keys().copied()
    }

    pub fn witness(&self, i: usize, y: u32) -> Option<&RainbowWitness> {
        self.layer(i).get(&y)
    }
}

/// Builds the reach layers with the default exact-mode cap.
pub fn layered_reach(
    g: &EdgeColoredGraph,
    v: u32,
    forbidden: &[u32],
    max_layer: usize,
    avoid: &VertexSet,
    mode: ReachMode,
) -> Result<LayeredReach, SearchError> {
    layered_reach_with_cap(g, v, forbidden, max_layer, avoid, mode, EXACT_REACH_CAP)
}

pub fn layered_reach_with_cap(
    g: &EdgeColoredGraph,
    v: u32,
    forbidden: &[u32],
    max_layer: usize,
    avoid: &VertexSet,
    mode: ReachMode,
    exact_cap: usize,
) -> Result<LayeredReach, SearchError> {
    assert!(max_layer >= 1, "at least the anchor layer is required");
    if avoid.contains(v) {
        return Err(SearchError::Precondition(format!(
            "anchor {v} lies in the avoid set"
        )));
    }
    if mode == ReachMode::Exact && g.vertex_count() > exact_cap {
        return Err(SearchError::ReachCapExceeded { n: g.vertex_count(), cap: exact_cap });
    }
    let mut forbidden = forbidden.to_vec();
    forbidden.sort_unstable();
    forbidden.dedup();

    let mut layers: Vec<BTreeMap<u32, RainbowWitness>> = vec![BTreeMap::new(); max_layer];
    layers[0].insert(v, RainbowWitness::path(vec![v], vec![]));

    match mode {
        ReachMode::Greedy => {
            for i in 1..max_layer {
                let (done, rest) = layers.split_at_mut(i);
                let prev = &done[i - 1];
                let next = &mut rest[0];
                for wit in prev.values() {
                    let u = wit.end().expect("stored paths are nonempty");
                    for &(w, c) in g.neighbors(u) {
                        if avoid.contains(w)
                            || wit.vertices.contains(&w)
                            || forbidden.binary_search(&c).is_ok()
                            || wit.colors.contains(&c)
                        {
                            continue;
                        }
                        next.entry(w).or_insert_with(|| {
                            let mut vs = wit.vertices.clone();
                            let mut cs = wit.colors.clone();
                            vs.push(w);
                            cs.push(c);
                            RainbowWitness::path(vs, cs)
                        });
                    }
                }
            }
        }
        ReachMode::Exact => {
            let mut vertices = vec![v];
            let mut colors = Vec::new();
            exact_dfs(g, avoid, &forbidden, max_layer, &mut vertices, &mut colors, &mut layers);
        }
    }

    Ok(LayeredReach { anchor: v, forbidden, avoid: avoid.iter().collect(), mode, layers })
}

fn exact_dfs(
    g: &EdgeColoredGraph,
    avoid: &VertexSet,
    forbidden: &[u32],
    max_layer: usize,
    vertices: &mut Vec<u32>,
    colors: &mut Vec<u32>,
    layers: &mut [BTreeMap<u32, RainbowWitness>],
) {
    let len = vertices.len();
    let end = *vertices.last().expect("path is nonempty");
    layers[len - 1]
        .entry(end)
        .or_insert_with(|| RainbowWitness::path(vertices.clone(), colors.clone()));
    if len == max_layer {
        return;
    }
    for &(w, c) in g.neighbors(end) {
        if avoid.contains(w)
            || vertices.contains(&w)
            || forbidden.binary_search(&c).is_ok()
            || colors.contains(&c)
        {
            continue;
        }
        vertices.push(w);
        colors.push(c);
        exact_dfs(g, avoid, forbidden, max_layer, vertices, colors, layers);
        colors.pop();
        vertices.pop();
    }
}

/// Tries to close a rainbow `ell`-cycle from the reach's layer `ell - 1`:
/// scan each endpoint `y` and each `x ∈ N(y) ∩ X`, and return
/// `P_vy + {x,y} + {v,x}` as soon as none of the four failure conditions
/// holds: (A) `x` on the path, (B) `c({x,y})` on the path, (C) `c({v,x})`
/// on the path, (D) `c({x,y}) = c({v,x})`.
pub fn close_cycle_from_reach(
    g: &EdgeColoredGraph,
    v: u32,
    x_set: &VertexSet,
    reach: &LayeredReach,
    ell: usize,
    c_rep: &[u32],
) -> Result<Option<RainbowWitness>, SearchError> {
    if ell < 3 {
        return Err(SearchError::BadLength(ell));
    }
    if reach.anchor() != v {
        return Err(SearchError::MalformedReach(format!(
            "reach is anchored at {}, expected {v}",
            reach.anchor()
        )));
    }
    if reach.max_layer() < ell - 1 {
        return Err(SearchError::MalformedReach(format!(
            "reach stops at layer {}, need layer {}",
            reach.max_layer(),
            ell - 1
        )));
    }
    if let Some(c) = c_rep.iter().find(|c| reach.forbidden().binary_search(c).is_err()) {
        return Err(SearchError::MalformedReach(format!(
            "reach does not forbid repeating color {c}"
        )));
    }
    for x in x_set.iter() {
        if !g.contains_edge(v, x) {
            return Err(SearchError::Precondition(format!(
                "X must be a subset of N({v}); vertex {x} is not a neighbor"
            )));
        }
    }

    for (&y, wit) in reach.layer(ell - 1) {
        for &(x, cxy) in g.neighbors(y) {
            if !x_set.contains(x) {
                continue;
            }
            if wit.vertices.contains(&x) {
                continue; // (A)
            }
            if wit.colors.contains(&cxy) {
                continue; // (B)
            }
            let cvx = g.color_of(v, x).expect("x in N(v)");
            if wit.colors.contains(&cvx) {
                continue; // (C)
            }
            if cxy == cvx {
                continue; // (D)
            }
            let mut vertices = wit.vertices.clone();
            let mut colors = wit.colors.clone();
            vertices.push(x);
            colors.push(cxy);
            colors.push(cvx);
            return Ok(Some(RainbowWitness::cycle(vertices, colors)));
        }
    }
    Ok(None)
}

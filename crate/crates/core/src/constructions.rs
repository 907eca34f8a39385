//! Generators for extremal, random and boosted edge-colored instances.

use crate::graph::EdgeColoredGraph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("target color degree {target} exceeds n - 1 = {max}")]
    InfeasibleTarget { target: usize, max: usize },
    #[error("vertex {0} is adjacent to every other vertex but still below the target")]
    Saturated(u32),
}

/// Complete bipartite graph with sides `0..a` and `a..a+b`, every edge
/// distinctly colored. For `a = ⌊n/2⌋, b = ⌈n/2⌉` this is the sharpness
/// construction: minimum color degree `⌊n/2⌋` and no odd cycles at all.
pub fn rainbow_complete_bipartite(a: usize, b: usize) -> EdgeColoredGraph {
    assert!(a >= 1 && b >= 1, "both sides must be nonempty");
    let mut edges = Vec::with_capacity(a * b);
    for u in 0..a as u32 {
        for v in 0..b as u32 {
            edges.push((u, a as u32 + v, edges.len() as u32));
        }
    }
    EdgeColoredGraph::build(a + b, edges).expect("bipartite construction is simple")
}

/// Complete graph on `n` vertices with all edges distinctly colored.
pub fn rainbow_complete(n: usize) -> EdgeColoredGraph {
    let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            edges.push((u, v, edges.len() as u32));
        }
    }
    EdgeColoredGraph::build(n, edges).expect("complete construction is simple")
}

/// Erdős–Rényi graph: each pair is an edge with probability `edge_prob`,
/// colors drawn uniformly from `0..palette_size`. Deterministic under
/// `seed`.
pub fn random_colored_graph(
    n: usize,
    edge_prob: f64,
    palette_size: usize,
    seed: u64,
) -> EdgeColoredGraph {
    assert!((0.0..=1.0).contains(&edge_prob), "edge_prob must lie in [0, 1]");
    assert!(palette_size >= 1, "palette must be nonempty");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            if rng.random_bool(edge_prob) {
                edges.push((u, v, rng.random_range(0..palette_size as u32)));
            }
        }
    }
    EdgeColoredGraph::build(n, edges).expect("generator emits each pair once")
}

/// Erdős–Rényi graph with an all-distinct color assignment: every edge
/// gets its own color, so color degree equals degree. With `edge_prob = 1`
/// this is the rainbow complete graph.
pub fn random_rainbow_graph(n: usize, edge_prob: f64, seed: u64) -> EdgeColoredGraph {
    assert!((0.0..=1.0).contains(&edge_prob), "edge_prob must lie in [0, 1]");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            if rng.random_bool(edge_prob) {
                edges.push((u, v, edges.len() as u32));
            }
        }
    }
    EdgeColoredGraph::build(n, edges).expect("generator emits each pair once")
}

/// Adds fresh-colored edges at vertices below `target` until every vertex
/// has color degree at least `target`. Original edges and colors are left
/// untouched; each added edge gets a brand-new color, so it raises the
/// color degree of both endpoints.
pub fn boost_min_color_degree(
    g: &EdgeColoredGraph,
    target: usize,
    seed: u64,
) -> Result<EdgeColoredGraph, ConstructionError> {
    let n = g.vertex_count();
    if n == 0 {
        return Ok(g.clone());
    }
    if target > n - 1 {
        return Err(ConstructionError::InfeasibleTarget { target, max: n - 1 });
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut degc: Vec<usize> = (0..n).map(|v| g.color_degree(v as u32)).collect();
    let mut adjacent: Vec<crate::graph::VertexSet> =
        (0..n).map(|_| crate::graph::VertexSet::new(n)).collect();
    for &(u, v, _) in g.edges() {
        adjacent[u as usize].insert(v);
        adjacent[v as usize].insert(u);
    }
    let mut fresh = g.palette().last().map_or(0, |&c| {
        c.checked_add(1).expect("color ids exhausted")
    });
    let mut added: Vec<(u32, u32, u32)> = Vec::new();

    for v in 0..n as u32 {
        while degc[v as usize] < target {
            // Rejection-sample a non-neighbor; fall back to a scan when the
            // vertex is nearly saturated.
            let mut partner = None;
            for _ in 0..4 * n.max(8) {
                let w = rng.random_range(0..n as u32);
                if w != v && !adjacent[v as usize].contains(w) {
                    partner = Some(w);
                    break;
                }
            }
            let w = match partner {
                Some(w) => w,
                None => (0..n as u32)
                    .find(|&w| w != v && !adjacent[v as usize].contains(w))
                    .ok_or(ConstructionError::Saturated(v))?,
            };
            added.push((v.min(w), v.max(w), fresh));
            adjacent[v as usize].insert(w);
            adjacent[w as usize].insert(v);
            degc[v as usize] += 1;
            degc[w as usize] += 1;
            fresh = fresh.checked_add(1).expect("color ids exhausted");
        }
    }

    let all = g.edges().iter().copied().chain(added);
    Ok(EdgeColoredGraph::build(n, all).expect("added edges avoid existing pairs"))
}

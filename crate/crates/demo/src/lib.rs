//! Wasm bindings for the browser demo: three interactive operations over
//! edge-colored graphs, exchanging JSON strings with the page.

use rainbow_core::finder::{find_rainbow_cycle, FinderConfig};
use rainbow_core::graph::EdgeColoredGraph;
use rainbow_core::search::find_rainbow_cycle_exact;
use rainbow_core::{
    boost_min_color_degree, edge_minimal_reduce, rainbow_complete_bipartite,
    random_colored_graph,
};
use serde::{Deserialize, Serialize};
use wasm_bindgen::prelude::*;

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<(u32, u32, u32)>,
    delta_c: usize,
    palette_size: usize,
}

impl GraphJson {
    fn of(g: &EdgeColoredGraph) -> GraphJson {
        GraphJson {
            n: g.vertex_count(),
            edges: g.edges().to_vec(),
            delta_c: if g.vertex_count() > 0 { g.min_color_degree() } else { 0 },
            palette_size: g.palette_size(),
        }
    }

    fn graph(&self) -> Result<EdgeColoredGraph, JsError> {
        EdgeColoredGraph::build(self.n, self.edges.iter().copied())
            .map_err(|e| JsError::new(&e.to_string()))
    }
}

fn to_json<T: Serialize>(value: &T) -> Result<String, JsError> {
    serde_json::to_string(value).map_err(|e| JsError::new(&e.to_string()))
}

fn parse_graph(graph_json: &str) -> Result<EdgeColoredGraph, JsError> {
    let parsed: GraphJson =
        serde_json::from_str(graph_json).map_err(|e| JsError::new(&e.to_string()))?;
    parsed.graph()
}

/// Generates an instance. `kind` is `bipartite` or `random`; random graphs
/// can be boosted to minimum color degree `(n+2)/2`.
#[wasm_bindgen]
pub fn generate(
    kind: &str,
    n: usize,
    p: f64,
    palette: usize,
    boost: bool,
    seed: u32,
) -> Result<String, JsError> {
    if n == 0 || n > 200 {
        return Err(JsError::new("n must lie in 1..=200 for the demo"));
    }
    let seed = seed as u64;
    let g = match kind {
        "bipartite" => rainbow_complete_bipartite(n / 2, n.div_ceil(2)),
        "random" => {
            if !(0.0..=1.0).contains(&p) {
                return Err(JsError::new("edge probability must lie in [0, 1]"));
            }
            let base = random_colored_graph(n, p, palette.max(1), seed);
            if boost && n >= 3 {
                boost_min_color_degree(&base, (n + 2) / 2, seed ^ 0xb005_7ed)
                    .map_err(|e| JsError::new(&e.to_string()))?
            } else {
                base
            }
        }
        other => return Err(JsError::new(&format!("unknown generator `{other}`"))),
    };
    to_json(&GraphJson::of(&g))
}

#[derive(Serialize)]
struct ReduceResult {
    graph: GraphJson,
    removed: Vec<(u32, u32, u32)>,
}

/// Edge-minimal reduction; reports the surviving graph plus the removed
/// edges so the page can grey them out.
#[wasm_bindgen]
pub fn reduce(graph_json: &str) -> Result<String, JsError> {
    let g = parse_graph(graph_json)?;
    let h = edge_minimal_reduce(&g);
    let removed: Vec<(u32, u32, u32)> = g
        .edges()
        .iter()
        .filter(|&&(u, v, _)| !h.contains_edge(u, v))
        .copied()
        .collect();
    to_json(&ReduceResult { graph: GraphJson::of(&h), removed })
}

#[derive(Serialize)]
struct SearchResult {
    witness: Option<WitnessJson>,
    method: String,
    case: Option<String>,
    delta_c: usize,
    hypothesis_met: bool,
    detail: String,
}

#[derive(Serialize)]
struct WitnessJson {
    vertices: Vec<u32>,
    colors: Vec<u32>,
}

/// Searches for a rainbow `ell`-cycle: the complete backtracking oracle
/// (`prover = false`, small graphs) or the proof-guided finder.
#[wasm_bindgen]
pub fn find_cycle(graph_json: &str, ell: usize, prover: bool) -> Result<String, JsError> {
    let g = parse_graph(graph_json)?;
    if ell < 3 {
        return Err(JsError::new("cycle length must be at least 3"));
    }
    let n = g.vertex_count();
    let delta_c = if n > 0 { g.min_color_degree() } else { 0 };
    let result = if prover {
        let config = FinderConfig::no_fallback();
        let (witness, trace) =
            find_rainbow_cycle(&g, ell, &config).map_err(|e| JsError::new(&e.to_string()))?;
        SearchResult {
            witness: witness.map(|w| WitnessJson { vertices: w.vertices, colors: w.colors }),
            method: "prover".into(),
            case: trace.case.map(|c| format!("{c:?}")),
            delta_c,
            hypothesis_met: trace.hypothesis_met,
            detail: match &trace.outcome {
                rainbow_core::finder::FinderOutcome::Found { .. } => {
                    "extraction succeeded".into()
                }
                rainbow_core::finder::FinderOutcome::Exhausted { reason } => reason.clone(),
            },
        }
    } else {
        if n > 64 {
            return Err(JsError::new(
                "exhaustive search is limited to 64 vertices in the demo; use the prover",
            ));
        }
        let witness =
            find_rainbow_cycle_exact(&g, ell).map_err(|e| JsError::new(&e.to_string()))?;
        let detail = match &witness {
            Some(_) => "exhaustive search found a witness".into(),
            None => format!("exhaustive search: no rainbow {ell}-cycle exists"),
        };
        SearchResult {
            witness: witness.map(|w| WitnessJson { vertices: w.vertices, colors: w.colors }),
            method: "exact".into(),
            case: None,
            delta_c,
            hypothesis_met: 2 * delta_c >= n + 1,
            detail,
        }
    };
    to_json(&result)
}

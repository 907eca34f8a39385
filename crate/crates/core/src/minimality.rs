//! Edge-minimal reduction preserving the minimum color degree.
//!
//! An edge-colored graph is *edge-minimal* when removing any single edge
//! strictly decreases the minimum color degree. Removing `{u, v}` only
//! affects the color degrees of `u` and `v`, so the reduction repeatedly
//! scans edges in sorted `(u, v)` order and drops every edge whose removal
//! keeps both endpoint color degrees at or above the original minimum,
//! until a full pass removes nothing. Any fixpoint of this process is
//! edge-minimal by definition.

use crate::graph::EdgeColoredGraph;
use std::collections::HashMap;

/// Returns the edge-minimal spanning subgraph with the same minimum color
/// degree as `g`. Deterministic: edges are scanned in sorted `(u, v)` order
/// repeatedly until a pass removes nothing.
pub fn edge_minimal_reduce(g: &EdgeColoredGraph) -> EdgeColoredGraph {
    let n = g.vertex_count();
    if n == 0 || g.edge_count() == 0 {
        return g.clone();
    }
    let delta = g.min_color_degree();

    // Per-vertex multiset of incident colors, plus the distinct count.
    let mut counts: Vec<HashMap<u32, u32>> = vec![HashMap::new(); n];
    let mut degc: Vec<usize> = vec![0; n];
    for &(u, v, c) in g.edges() {
        for w in [u, v] {
            let e = counts[w as usize].entry(c).or_insert(0);
            if *e == 0 {
                degc[w as usize] += 1;
            }
            *e += 1;
        }
    }

    let mut alive = vec![true; g.edge_count()];
    loop {
        let mut removed_any = false;
        for (idx, &(u, v, c)) in g.edges().iter().enumerate() {
            if !alive[idx] {
                continue;
            }
            let ok = |w: u32| {
                let cnt = counts[w as usize][&c];
                cnt >= 2 || degc[w as usize] - 1 >= delta
            };
            if ok(u) && ok(v) {
                for w in [u, v] {
                    let e = counts[w as usize].get_mut(&c).unwrap();
                    *e -= 1;
                    if *e == 0 {
                        counts[w as usize].remove(&c);
                        degc[w as usize] -= 1;
                    }
                }
                alive[idx] = false;
                removed_any = true;
            }
        }
        if !removed_any {
            break;
        }
    }

    let kept = g
        .edges()
        .iter()
        .zip(&alive)
        .filter_map(|(&e, &keep)| keep.then_some(e));
    EdgeColoredGraph::build(n, kept).expect("subset of a valid edge set is valid")
}

/// True iff no three equally-colored edges `{u,v}, {v,w}, {w,x}` form a
/// path (`u = x`, a monochromatic triangle, counts too). Edge-minimal
/// graphs always satisfy this, which makes it a cheap necessary check for
/// edge-minimality.
pub fn check_no_mono_3path(g: &EdgeColoredGraph) -> bool {
    // Group edges by color, then look for an edge whose both endpoints have
    // degree >= 2 inside the color class: that edge is the middle of a path
    // of three commonly colored edges.
    let mut classes: HashMap<u32, Vec<(u32, u32)>> = HashMap::new();
    for &(u, v, c) in g.edges() {
        classes.entry(c).or_default().push((u, v));
    }
    for class in classes.values() {
        let mut deg: HashMap<u32, u32> = HashMap::new();
        for &(u, v) in class {
            *deg.entry(u).or_insert(0) += 1;
            *deg.entry(v).or_insert(0) += 1;
        }
        for &(u, v) in class {
            if deg[&u] >= 2 && deg[&v] >= 2 {
                return false;
            }
        }
    }
    true
}

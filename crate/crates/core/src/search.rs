//! Exact rainbow-cycle oracle.
//!
//! A complete backtracking search over canonical cycle representatives:
//! every cycle is explored exactly once, anchored at its minimum-id vertex
//! with the direction fixed by requiring the second vertex id to be smaller
//! than the last. Used colors are tracked in a fixed-width bitset while the
//! palette fits 1024 colors, and in a hash set above that.

use crate::graph::EdgeColoredGraph;
use crate::witness::RainbowWitness;
use std::collections::HashSet;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("cycle length must be at least 3, got {0}")]
    BadLength(usize),
    #[error("exact reach enumeration allows at most {cap} vertices, graph has {n}; use greedy mode")]
    ReachCapExceeded { n: usize, cap: usize },
    #[error("reach does not fit this call: {0}")]
    MalformedReach(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

const BITSET_PALETTE_WORDS: usize = 16;
const BITSET_PALETTE_LIMIT: usize = BITSET_PALETTE_WORDS * 64;

enum ColorTracker {
    /// Indexed by dense palette index; palettes up to 1024 colors.
    Bits(Box<[u64; BITSET_PALETTE_WORDS]>),
    /// Color ids directly, for larger palettes.
    Hash(HashSet<u32>),
}

impl ColorTracker {
    fn new(g: &EdgeColoredGraph) -> Self {
        if g.palette_size() <= BITSET_PALETTE_LIMIT {
            ColorTracker::Bits(Box::new([0u64; BITSET_PALETTE_WORDS]))
        } else {
            ColorTracker::Hash(HashSet::new())
        }
    }

    #[inline]
    fn contains(&self, g: &EdgeColoredGraph, color: u32) -> bool {
        match self {
            ColorTracker::Bits(words) => {
                let i = g.color_index(color).expect("color from an edge of g");
                words[i / 64] >> (i % 64) & 1 != 0
            }
            ColorTracker::Hash(set) => set.contains(&color),
        }
    }

    #[inline]
    fn insert(&mut self, g: &EdgeColoredGraph, color: u32) {
        match self {
            ColorTracker::Bits(words) => {
                let i = g.color_index(color).expect("color from an edge of g");
                words[i / 64] |= 1 << (i % 64);
            }
            ColorTracker::Hash(set) => {
                set.insert(color);
            }
        }
    }

    #[inline]
    fn remove(&mut self, g: &EdgeColoredGraph, color: u32) {
        match self {
            ColorTracker::Bits(words) => {
                let i = g.color_index(color).expect("color from an edge of g");
                words[i / 64] &= !(1 << (i % 64));
            }
            ColorTracker::Hash(set) => {
                set.remove(&color);
            }
        }
    }
}

struct CycleDfs<'a> {
    g: &'a EdgeColoredGraph,
    ell: usize,
    anchor: u32,
    path: Vec<u32>,
    colors: Vec<u32>,
    visited: Vec<bool>,
    used: ColorTracker,
    /// Unvisited vertices with id greater than the anchor.
    pool: usize,
}

impl<'a> CycleDfs<'a> {
    /// Explores extensions of the current path; `visit` sees each canonical
    /// rainbow `ell`-cycle once and returns `true` to stop the search.
    fn run<F>(&mut self, visit: &mut F) -> bool
    where
        F: FnMut(&[u32], &[u32]) -> bool,
    {
        let depth = self.path.len();
        if self.pool < self.ell - depth {
            return false;
        }
        let u = *self.path.last().expect("path starts at the anchor");
        let closing = depth + 1 == self.ell;
        // Iterating neighbors in ascending id keeps witnesses deterministic.
        for i in 0..self.g.neighbors(u).len() {
            let (w, c) = self.g.neighbors(u)[i];
            if w <= self.anchor || self.visited[w as usize] || self.used.contains(self.g, c) {
                continue;
            }
            if closing {
                // Canonical direction: second vertex id below the last.
                if w <= self.path[1] {
                    continue;
                }
                let Some(cc) = self.g.color_of(w, self.anchor) else { continue };
                if cc == c || self.used.contains(self.g, cc) {
                    continue;
                }
                self.path.push(w);
                self.colors.push(c);
                self.colors.push(cc);
                let stop = visit(&self.path, &self.colors);
                self.colors.pop();
                self.colors.pop();
                self.path.pop();
                if stop {
                    return true;
                }
            } else {
                self.path.push(w);
                self.colors.push(c);
                self.visited[w as usize] = true;
                self.used.insert(self.g, c);
                self.pool -= 1;
                let stop = self.run(visit);
                self.pool += 1;
                self.used.remove(self.g, c);
                self.visited[w as usize] = false;
                self.colors.pop();
                self.path.pop();
                if stop {
                    return true;
                }
            }
        }
        false
    }
}

/// Runs the canonical cycle search for one anchor. Returns whether `visit`
/// asked to stop.
fn cycles_from_anchor<F>(g: &EdgeColoredGraph, ell: usize, anchor: u32, visit: &mut F) -> bool
where
    F: FnMut(&[u32], &[u32]) -> bool,
{
    let n = g.vertex_count();
    let pool = n - 1 - anchor as usize;
    if g.degree(anchor) < 2 || pool < ell - 1 {
        return false;
    }
    let mut visited = vec![false; n];
    visited[anchor as usize] = true;
    let mut dfs = CycleDfs {
        g,
        ell,
        anchor,
        path: vec![anchor],
        colors: Vec::with_capacity(ell),
        visited,
        used: ColorTracker::new(g),
        pool,
    };
    dfs.run(visit)
}

fn check_params(g: &EdgeColoredGraph, ell: usize) -> Result<bool, SearchError> {
    if ell < 3 {
        return Err(SearchError::BadLength(ell));
    }
    // A rainbow ell-cycle needs ell vertices, ell edges and ell colors.
    Ok(g.vertex_count() >= ell && g.edge_count() >= ell && g.palette_size() >= ell)
}

/// Finds a rainbow `ell`-cycle if one exists. Complete: returns `None` only
/// when the graph has no rainbow `ell`-cycle at all.
pub fn find_rainbow_cycle_exact(
    g: &EdgeColoredGraph,
    ell: usize,
) -> Result<Option<RainbowWitness>, SearchError> {
    if !check_params(g, ell)? {
        return Ok(None);
    }
    for anchor in 0..g.vertex_count() as u32 {
        let mut found = None;
        cycles_from_anchor(g, ell, anchor, &mut |path, colors| {
            found = Some(RainbowWitness::cycle(path.to_vec(), colors.to_vec()));
            true
        });
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

/// Counts distinct rainbow `ell`-cycles (as vertex sets with cyclic order,
/// up to rotation and reflection).
pub fn count_rainbow_cycles(g: &EdgeColoredGraph, ell: usize) -> Result<u64, SearchError> {
    if !check_params(g, ell)? {
        return Ok(0);
    }
    let mut count = 0u64;
    for anchor in 0..g.vertex_count() as u32 {
        cycles_from_anchor(g, ell, anchor, &mut |_, _| {
            count += 1;
            false
        });
    }
    Ok(count)
}

/// Parallel variant of [`find_rainbow_cycle_exact`]: anchors are searched
/// across the current rayon pool and the first match in anchor order wins,
/// so the returned witness matches the sequential one.
#[cfg(feature = "parallel")]
pub fn find_rainbow_cycle_exact_parallel(
    g: &EdgeColoredGraph,
    ell: usize,
) -> Result<Option<RainbowWitness>, SearchError> {
    use rayon::prelude::*;
    if !check_params(g, ell)? {
        return Ok(None);
    }
    Ok((0..g.vertex_count() as u32)
        .into_par_iter()
        .find_map_first(|anchor| {
            let mut found = None;
            cycles_from_anchor(g, ell, anchor, &mut |path, colors| {
                found = Some(RainbowWitness::cycle(path.to_vec(), colors.to_vec()));
                true
            });
            found
        }))
}

/// Parallel variant of [`count_rainbow_cycles`].
#[cfg(feature = "parallel")]
pub fn count_rainbow_cycles_parallel(
    g: &EdgeColoredGraph,
    ell: usize,
) -> Result<u64, SearchError> {
    use rayon::prelude::*;
    if !check_params(g, ell)? {
        return Ok(0);
    }
    Ok((0..g.vertex_count() as u32)
        .into_par_iter()
        .map(|anchor| {
            let mut count = 0u64;
            cycles_from_anchor(g, ell, anchor, &mut |_, _| {
                count += 1;
                false
            });
            count
        })
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{rainbow_complete, rainbow_complete_bipartite, random_colored_graph};

    #[test]
    fn rejects_short_lengths() {
        let g = rainbow_complete(4);
        assert!(matches!(find_rainbow_cycle_exact(&g, 2), Err(SearchError::BadLength(2))));
    }

    #[test]
    fn finds_triangle_in_rainbow_k4() {
        let g = rainbow_complete(4);
        let w = find_rainbow_cycle_exact(&g, 3).unwrap().expect("rainbow triangle");
        w.validate(&g).unwrap();
        assert_eq!(w.len(), 3);
    }

    #[test]
    fn bipartite_has_no_odd_cycles() {
        let g = rainbow_complete_bipartite(3, 3);
        assert!(find_rainbow_cycle_exact(&g, 3).unwrap().is_none());
        assert!(find_rainbow_cycle_exact(&g, 5).unwrap().is_none());
    }

    #[test]
    fn monochromatic_cycle_is_not_rainbow() {
        let c5 = EdgeColoredGraph::build(5, (0..5).map(|i| (i, (i + 1) % 5, 0))).unwrap();
        assert!(find_rainbow_cycle_exact(&c5, 5).unwrap().is_none());
        assert_eq!(count_rainbow_cycles(&c5, 5).unwrap(), 0);
    }

    #[test]
    fn counts_on_known_graphs() {
        // All four triangles of rainbow K_4 are rainbow.
        assert_eq!(count_rainbow_cycles(&rainbow_complete(4), 3).unwrap(), 4);
        // K_{3,3} has one 4-cycle per pair of vertices from each side:
        // C(3,2) * C(3,2) = 9, all rainbow under an all-distinct coloring.
        assert_eq!(count_rainbow_cycles(&rainbow_complete_bipartite(3, 3), 4).unwrap(), 9);
    }

    #[test]
    fn count_zero_iff_find_none() {
        for seed in 0..40u64 {
            let g = random_colored_graph(8, 0.5, 4, seed);
            for ell in [3, 4, 5] {
                let found = find_rainbow_cycle_exact(&g, ell).unwrap();
                let count = count_rainbow_cycles(&g, ell).unwrap();
                assert_eq!(found.is_none(), count == 0, "seed {seed}, ell {ell}");
                if let Some(w) = found {
                    w.validate(&g).unwrap();
                    assert_eq!(w.len(), ell);
                }
            }
        }
    }

    #[cfg(feature = "parallel")]
    #[test]
    fn parallel_agrees_with_sequential() {
        for seed in 0..10u64 {
            let g = random_colored_graph(9, 0.6, 5, seed);
            for ell in [3, 4, 5] {
                assert_eq!(
                    find_rainbow_cycle_exact(&g, ell).unwrap(),
                    find_rainbow_cycle_exact_parallel(&g, ell).unwrap()
                );
                assert_eq!(
                    count_rainbow_cycles(&g, ell).unwrap(),
                    count_rainbow_cycles_parallel(&g, ell).unwrap()
                );
            }
        }
    }
}

//! Shared test oracles, kept independent of the library's search code.

use rainbow_core::EdgeColoredGraph;
use std::collections::HashSet;

/// Rotates/reflects a cycle's vertex sequence into a canonical form:
/// minimum vertex first, then the lexicographically smaller direction.
pub fn canonical_cycle(cycle: &[u32]) -> Vec<u32> {
    let pos = cycle
        .iter()
        .enumerate()
        .min_by_key(|&(_, v)| v)
        .map(|(i, _)| i)
        .expect("cycles are nonempty");
    let mut rotated: Vec<u32> = cycle[pos..].iter().chain(&cycle[..pos]).copied().collect();
    let mut reflected = rotated.clone();
    reflected[1..].reverse();
    if reflected < rotated {
        rotated = reflected;
    }
    rotated
}

/// All-permutations brute force: tries every vertex sequence of length
/// `ell` and collects the rainbow cycles, deduplicated up to rotation and
/// reflection. Exponential, but definitionally correct.
pub fn brute_force_rainbow_cycles(g: &EdgeColoredGraph, ell: usize) -> Vec<Vec<u32>> {
    assert!(ell >= 3);
    let n = g.vertex_count();
    let mut found: HashSet<Vec<u32>> = HashSet::new();
    let mut seq: Vec<u32> = Vec::with_capacity(ell);
    let mut used = vec![false; n];
    permute(g, ell, &mut seq, &mut used, &mut found);
    let mut cycles: Vec<Vec<u32>> = found.into_iter().collect();
    cycles.sort();
    cycles
}

fn permute(
    g: &EdgeColoredGraph,
    ell: usize,
    seq: &mut Vec<u32>,
    used: &mut [bool],
    found: &mut HashSet<Vec<u32>>,
) {
    if seq.len() == ell {
        if is_rainbow_cycle(g, seq) {
            found.insert(canonical_cycle(seq));
        }
        return;
    }
    for v in 0..g.vertex_count() as u32 {
        if !used[v as usize] {
            used[v as usize] = true;
            seq.push(v);
            permute(g, ell, seq, used, found);
            seq.pop();
            used[v as usize] = false;
        }
    }
}

fn is_rainbow_cycle(g: &EdgeColoredGraph, seq: &[u32]) -> bool {
    let ell = seq.len();
    let mut colors = Vec::with_capacity(ell);
    for i in 0..ell {
        match g.color_of(seq[i], seq[(i + 1) % ell]) {
            Some(c) => colors.push(c),
            None => return false,
        }
    }
    colors.sort_unstable();
    colors.windows(2).all(|w| w[0] != w[1])
}

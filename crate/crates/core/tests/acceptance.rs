//! Acceptance suite: one test per release criterion, each printing a
//! PASS/FAIL line (visible with `--nocapture`). Tolerances are exact and
//! pinned in the assertions; no criterion uses floating-point comparisons.

mod common;

use rainbow_core::graph::{EdgeColoredGraph, VertexSet};
use rainbow_core::probe::{run_probe_chains, ProbeConfig, ProbeInit};
use rainbow_core::reach::{layered_reach, ReachMode};
use rainbow_core::separation::{check_sigma_cap, repeating_colors};
use rainbow_core::verify::verify_theorem_small;
use rainbow_core::witness::RainbowWitness;
use rainbow_core::{
    boost_min_color_degree, check_no_mono_3path, count_rainbow_cycles, edge_minimal_reduce,
    find_rainbow_cycle, find_rainbow_cycle_exact, rainbow_complete_bipartite,
    random_colored_graph, FinderCase, FinderConfig,
};
use rayon::prelude::*;

struct Criterion(&'static str);

impl Criterion {
    fn pass(self) {
        println!("[acceptance] {}: PASS", self.0);
    }
}

impl Drop for Criterion {
    fn drop(&mut self) {
        if std::thread::panicking() {
            println!("[acceptance] {}: FAIL", self.0);
        }
    }
}

/// Criterion 1 — sharpness for odd cycle lengths: the rainbow balanced
/// complete bipartite graph has minimum color degree exactly n/2 and no
/// rainbow odd cycle, for every n in 6..=40 and odd length in {3, 5, 7}.
#[test]
fn criterion_1_bipartite_sharpness() {
    let c = Criterion("1 (odd-cycle sharpness of the bipartite construction)");
    let cases: Vec<(usize, usize)> = [3usize, 5, 7]
        .into_iter()
        .flat_map(|ell| (6usize..=40).map(move |n| (ell, n)))
        .collect();
    cases.par_iter().for_each(|&(ell, n)| {
        let g = rainbow_complete_bipartite(n / 2, n - n / 2);
        assert_eq!(g.min_color_degree(), n / 2, "delta_c of K_{{{},{}}}", n / 2, n - n / 2);
        assert!(
            find_rainbow_cycle_exact(&g, ell).unwrap().is_none(),
            "no rainbow C_{ell} may exist in bipartite n = {n}"
        );
    });
    c.pass();
}

/// Criterion 2 — triangle theorem at desk scale: 1000 boosted random
/// instances per n in 3..=12 all contain a rainbow triangle.
#[test]
fn criterion_2_triangle_theorem_small() {
    let c = Criterion("2 (rainbow triangles under the (n+1)/2 color-degree bound)");
    let report = verify_theorem_small(3, 3..=12, 1000, 0xACCE_0002).unwrap();
    for entry in &report.entries {
        assert_eq!(
            entry.found, entry.samples,
            "n = {}: {}/{} instances contained a rainbow triangle",
            entry.n, entry.found, entry.samples
        );
    }
    c.pass();
}

fn theorem_scale_instance(n: usize, target: usize, seed: u64) -> EdgeColoredGraph {
    let base = random_colored_graph(n, 0.6, n, seed);
    boost_min_color_degree(&base, target, seed ^ 0x00B0_0057).expect("sparse base never saturates")
}

/// Criterion 3 — the finder at theorem scale, fallback disabled: 50 seeds
/// at (ell, n) = (3, 1400) and 10 seeds at (5, 2200), zero failures.
#[test]
fn criterion_3_finder_at_theorem_scale() {
    let c = Criterion("3 (proof-guided finder at theorem scale)");
    let runs: Vec<(usize, usize, u64)> = (0..50u64)
        .map(|s| (3usize, 1400usize, s))
        .chain((0..10u64).map(|s| (5usize, 2200usize, s)))
        .collect();
    runs.par_iter().for_each(|&(ell, n, seed)| {
        let target = (n + 2) / 2;
        let g = theorem_scale_instance(n, target, seed);
        assert!(g.min_color_degree() >= target);
        let (witness, trace) =
            find_rainbow_cycle(&g, ell, &FinderConfig::no_fallback()).unwrap();
        let witness = witness.unwrap_or_else(|| {
            panic!("ell = {ell}, n = {n}, seed {seed}: finder exhausted: {:?}", trace.outcome)
        });
        witness.validate(&g).unwrap();
        assert_eq!(witness.len(), ell);
        assert_ne!(trace.case, Some(FinderCase::Fallback));
    });
    c.pass();
}

/// Criterion 4 — averaging bound: 10^4 random edge-minimal instances with
/// random valid (v, X, Y); the bound holds exactly every time.
#[test]
fn criterion_4_averaging_bound_suite() {
    let c = Criterion("4 (averaging bound over 10^4 random instances)");
    use rainbow_core::separation::check_averaging_bound;
    use rand::{Rng, SeedableRng};
    (0..10_000u64).into_par_iter().for_each(|seed| {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed ^ 0xACCE_0004);
        let n = rng.random_range(5..=14);
        let palette = [2usize, 3, 5, 9][rng.random_range(0..4)];
        let g = edge_minimal_reduce(&random_colored_graph(n, 0.55, palette, seed));
        let v = rng.random_range(0..n as u32);
        let x: Vec<u32> = g
            .neighbors(v)
            .iter()
            .map(|&(w, _)| w)
            .filter(|_| rng.random_bool(0.7))
            .collect();
        let y: Vec<u32> = (0..n as u32).filter(|&w| w != v && rng.random_bool(0.6)).collect();
        if y.is_empty() {
            return;
        }
        let report = check_averaging_bound(
            &g,
            v,
            &VertexSet::from_iter(n, x),
            &VertexSet::from_iter(n, y),
        )
        .unwrap();
        assert!(report.holds, "seed {seed}: averaging bound failed: {report:?}");
        assert!(report.sigma_avg >= report.rho_avg);
    });
    c.pass();
}

/// Criterion 5 — separation cap: on every oracle-certified cycle-free
/// instance, sigma stays at or below 3*ell for every reachable vertex.
#[test]
fn criterion_5_sigma_cap_on_certified_instances() {
    let c = Criterion("5 (sigma <= 3*ell on certified cycle-free instances)");
    let checked: usize = (0..400u64)
        .into_par_iter()
        .map(|seed| {
            let n = 6 + (seed % 9) as usize;
            let palette = [2usize, 3, 5, 8][(seed / 9) as usize % 4];
            let g = edge_minimal_reduce(&random_colored_graph(n, 0.5, palette, seed));
            let mut checked = 0usize;
            for ell in [3usize, 4, 5] {
                // Hypothesis certification: the exact oracle confirms the
                // instance has no rainbow ell-cycle.
                if find_rainbow_cycle_exact(&g, ell).unwrap().is_some() {
                    continue;
                }
                for v in 0..n as u32 {
                    if g.degree(v) == 0 {
                        continue;
                    }
                    let x_set =
                        VertexSet::from_iter(n, g.neighbors(v).iter().map(|&(w, _)| w));
                    let c_rep = repeating_colors(&g, v, &x_set).unwrap();
                    let reach = layered_reach(
                        &g,
                        v,
                        &c_rep,
                        ell - 1,
                        &VertexSet::new(n),
                        ReachMode::Exact,
                    )
                    .unwrap();
                    let witnesses: Vec<(u32, RainbowWitness)> = reach
                        .layer(ell - 1)
                        .iter()
                        .map(|(&y, w)| (y, w.clone()))
                        .collect();
                    if witnesses.is_empty() {
                        continue;
                    }
                    let records =
                        check_sigma_cap(&g, ell, v, &x_set, &c_rep, &witnesses).unwrap();
                    for record in records {
                        assert!(
                            record.holds,
                            "seed {seed} ell {ell} v {v}: sigma = {} > {}",
                            record.sigma,
                            3 * ell
                        );
                        checked += 1;
                    }
                }
            }
            checked
        })
        .sum();
    assert!(checked > 10_000, "the corpus must certify plenty of instances, got {checked}");
    c.pass();
}

/// Criterion 6 — reduction contract: exact preservation of the minimum
/// color degree, the no-mono-3-path consequence, true edge-minimality
/// (exhaustively) and idempotence, over 10^3 random instances.
#[test]
fn criterion_6_reduction_contract() {
    let c = Criterion("6 (edge-minimal reduction contract)");
    (0..1_000u64).into_par_iter().for_each(|seed| {
        let n = 5 + (seed % 12) as usize;
        let palette = [1usize, 2, 3, 5, 9][(seed % 5) as usize];
        let g = random_colored_graph(n, 0.5, palette, seed ^ 0xACCE_0006);
        let h = edge_minimal_reduce(&g);
        assert_eq!(h.min_color_degree(), g.min_color_degree(), "seed {seed}");
        assert!(check_no_mono_3path(&h), "seed {seed}");
        assert_eq!(edge_minimal_reduce(&h), h, "seed {seed}: reduce not idempotent");
        assert!(h.edge_count() <= 200, "exhaustive minimality stays affordable");
        let delta = h.min_color_degree();
        for skip in 0..h.edge_count() {
            let smaller = EdgeColoredGraph::build(
                h.vertex_count(),
                h.edges()
                    .iter()
                    .enumerate()
                    .filter_map(|(i, &e)| (i != skip).then_some(e)),
            )
            .unwrap();
            assert!(
                smaller.min_color_degree() < delta,
                "seed {seed}: edge {:?} is removable",
                h.edges()[skip]
            );
        }
    });
    c.pass();
}

/// Criterion 7 — oracle completeness: existence and count agree with the
/// all-permutations brute force on 10^3 random instances, n <= 9.
#[test]
fn criterion_7_oracle_vs_brute_force() {
    let c = Criterion("7 (exact oracle vs all-permutations brute force)");
    (0..1_000u64).into_par_iter().for_each(|seed| {
        let n = 5 + (seed % 5) as usize;
        let palette = [2usize, 3, 5, 8, 36][(seed % 5) as usize];
        let g = random_colored_graph(n, 0.55, palette, seed ^ 0xACCE_0007);
        for ell in [3usize, 4, 5] {
            let brute = common::brute_force_rainbow_cycles(&g, ell);
            let count = count_rainbow_cycles(&g, ell).unwrap();
            assert_eq!(count, brute.len() as u64, "seed {seed} ell {ell}: count mismatch");
            let found = find_rainbow_cycle_exact(&g, ell).unwrap();
            assert_eq!(found.is_some(), !brute.is_empty(), "seed {seed} ell {ell}");
            if let Some(w) = found {
                w.validate(&g).unwrap();
                assert!(brute.contains(&common::canonical_cycle(&w.vertices)));
            }
        }
    });
    c.pass();
}

/// Criterion 8 — probe consistency: bipartite-seeded chains at n = 20, 30
/// report exactly floor(n/2) and never reach ceil((n+1)/2).
#[test]
fn criterion_8_probe_consistency() {
    let c = Criterion("8 (annealing probe against the triangle bound)");
    for n in [20usize, 30] {
        let config = ProbeConfig::new(3, n, 100_000, 0xACCE_0008, ProbeInit::Bipartite);
        let states = run_probe_chains(&config, 5);
        for (chain, state) in states.iter().enumerate() {
            let best = state
                .best_delta_c()
                .expect("bipartite seed is feasible from step zero");
            assert_eq!(best, n / 2, "n = {n}, chain {chain}");
            assert!(best < (n + 2) / 2, "n = {n}: probe must never reach (n+1)/2");
            let g = state.best_graph().unwrap();
            assert_eq!(count_rainbow_cycles(&g, 3).unwrap(), 0);
            assert_eq!(g.min_color_degree(), best);
        }
    }
    c.pass();
}

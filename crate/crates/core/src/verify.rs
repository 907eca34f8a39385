//! Verification suites: sampled checks of the toolkit's guarantees with
//! hypothesis certification built in.
//!
//! Every check certifies its own hypotheses (edge-minimality via the
//! reduction, cycle-freeness via the exact oracle) instead of trusting the
//! generator, and reports hypothesis failures as explicit `vacuous` counts
//! rather than silent passes. Failures carry a serialized reproducer.

use crate::constructions::{
    boost_min_color_degree, rainbow_complete_bipartite, random_colored_graph,
    random_rainbow_graph, ConstructionError,
};
use crate::finder::{case2_partition, FinderError};
use crate::format::to_ecg_string;
use crate::graph::{ColorStats, EdgeColoredGraph, VertexSet};
use crate::minimality::edge_minimal_reduce;
use crate::reach::{layered_reach, ReachMode, EXACT_REACH_CAP};
use crate::search::{find_rainbow_cycle_exact, SearchError};
use crate::separation::{
    check_averaging_bound, check_maxdeg_bound, check_sigma_cap, repeating_colors,
    build_digraph_d_sec2, CheckOutcome,
};
use crate::witness::RainbowWitness;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::BTreeMap;
use std::ops::RangeInclusive;

fn mix(seed: u64, a: u64, b: u64) -> u64 {
    let mut x = seed ^ a.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ b.wrapping_mul(0xD1B5_4A32_D192_ED03);
    x ^= x >> 30;
    x = x.wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x ^= x >> 27;
    x = x.wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

/// Draws random colorful instances until one can be boosted to `target`
/// without touching existing edges; vertices already adjacent to everyone
/// but with repeated incident colors make single draws unboostable.
fn boosted_random(n: usize, palette: usize, target: usize, seed: u64) -> EdgeColoredGraph {
    for attempt in 0..64u64 {
        let s = mix(seed, 17, attempt);
        let base = random_colored_graph(n, 0.5, palette, s);
        match boost_min_color_degree(&base, target, mix(s, 19, attempt)) {
            Ok(g) => return g,
            Err(ConstructionError::Saturated(_)) => continue,
            Err(e) => panic!("{e}"),
        }
    }
    panic!("no boostable instance for n = {n}, target = {target} after 64 attempts")
}

/// A self-contained failure reproducer: the instance in `.ecg` text plus
/// the parameters of the failing check.
#[derive(Clone, Debug, Serialize)]
pub struct Reproducer {
    pub check: String,
    pub params: String,
    pub ecg: String,
}

// ---------------------------------------------------------------------------
// Small-scale theorem verification
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, Serialize)]
pub struct TheoremSmallEntry {
    pub n: usize,
    pub samples: usize,
    pub found: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremSmallReport {
    pub ell: usize,
    pub seed: u64,
    pub entries: Vec<TheoremSmallEntry>,
}

impl TheoremSmallReport {
    /// True when every sampled instance contained a rainbow cycle.
    pub fn all_found(&self) -> bool {
        self.entries.iter().all(|e| e.found == e.samples)
    }
}

/// For each `n`, draws random instances boosted to `δᶜ ≥ (n+1)/2` and runs
/// the exact oracle, reporting the fraction that contain a rainbow
/// `ell`-cycle. Every `n` must be at least 3 (below that the boost target
/// `⌈(n+1)/2⌉` is unreachable).
pub fn verify_theorem_small(
    ell: usize,
    n_range: RangeInclusive<usize>,
    samples: usize,
    seed: u64,
) -> Result<TheoremSmallReport, SearchError> {
    if ell < 3 {
        return Err(SearchError::BadLength(ell));
    }
    let mut entries = Vec::new();
    for n in n_range {
        assert!(n >= 3, "boost target exceeds n - 1 for n = {n}");
        let run = |i: usize| -> bool {
            let s = mix(seed, n as u64, i as u64);
            let g = boosted_random(n, n.max(2), (n + 2) / 2, s);
            find_rainbow_cycle_exact(&g, ell)
                .expect("ell checked")
                .is_some()
        };
        #[cfg(feature = "parallel")]
        let found = {
            use rayon::prelude::*;
            (0..samples).into_par_iter().filter(|&i| run(i)).count()
        };
        #[cfg(not(feature = "parallel"))]
        let found = (0..samples).filter(|&i| run(i)).count();
        entries.push(TheoremSmallEntry { n, samples, found });
    }
    Ok(TheoremSmallReport { ell, seed, entries })
}

// ---------------------------------------------------------------------------
// Contrapositive delta bound
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, Serialize)]
pub struct DeltaBoundReport {
    pub ell: usize,
    pub n_max: usize,
    pub samples: usize,
    pub seed: u64,
    /// Samples whose color degree actually cleared `n/2 + 3ℓ`.
    pub checked: usize,
    /// Samples where the hypothesis was unattainable (reported, not hidden).
    pub vacuous: usize,
    pub violations: Vec<Reproducer>,
}

/// Contrapositive check of the `δᶜ ≤ n/2 + 3ℓ` bound: any instance with
/// `δᶜ > n/2 + 3ℓ` must contain a rainbow `ell`-cycle.
pub fn verify_cor_deltabound(
    ell: usize,
    n_max: usize,
    samples: usize,
    seed: u64,
) -> Result<DeltaBoundReport, SearchError> {
    if ell < 3 {
        return Err(SearchError::BadLength(ell));
    }
    assert!(n_max >= 3);
    let run = |i: usize| -> (bool, Option<Reproducer>) {
        let s = mix(seed, 31, i as u64);
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let n = rng.random_range(3..=n_max);
        // All-distinct base colors keep the n - 1 boost target reachable.
        let base = random_rainbow_graph(n, 0.6, mix(s, 2, 0));
        let g = boost_min_color_degree(&base, n - 1, mix(s, 3, 0)).expect("n - 1 feasible");
        let delta = g.min_color_degree();
        if 2 * delta <= n + 6 * ell {
            return (false, None);
        }
        let violated = find_rainbow_cycle_exact(&g, ell).expect("ell checked").is_none();
        let repro = violated.then(|| Reproducer {
            check: "cor_delta_bound".into(),
            params: format!("ell={ell} n={n} delta_c={delta} sample={i}"),
            ecg: to_ecg_string(&g),
        });
        (true, repro)
    };
    #[cfg(feature = "parallel")]
    let results: Vec<(bool, Option<Reproducer>)> = {
        use rayon::prelude::*;
        (0..samples).into_par_iter().map(run).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let results: Vec<(bool, Option<Reproducer>)> = (0..samples).map(run).collect();

    let checked = results.iter().filter(|(c, _)| *c).count();
    let violations: Vec<Reproducer> = results.into_iter().filter_map(|(_, r)| r).collect();
    Ok(DeltaBoundReport {
        ell,
        n_max,
        samples,
        seed,
        checked,
        vacuous: samples - checked,
        violations,
    })
}

// ---------------------------------------------------------------------------
// Property suite
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, Default, Serialize)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub vacuous: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct PropertySuiteReport {
    pub seed: u64,
    pub instances: usize,
    pub tallies: BTreeMap<String, Tally>,
    pub failures: Vec<Reproducer>,
}

impl PropertySuiteReport {
    pub fn has_failures(&self) -> bool {
        !self.failures.is_empty()
    }
}

struct CorpusInstance {
    id: String,
    g: EdgeColoredGraph,
    ells: Vec<usize>,
    seed: u64,
}

#[derive(Default)]
struct Outcomes {
    records: Vec<(String, CheckOutcome)>,
    failures: Vec<Reproducer>,
}

impl Outcomes {
    fn record(
        &mut self,
        name: &str,
        outcome: CheckOutcome,
        instance: &CorpusInstance,
        params: String,
    ) {
        if outcome == CheckOutcome::Violated {
            self.failures.push(Reproducer {
                check: name.to_string(),
                params: format!("instance={} {params}", instance.id),
                ecg: to_ecg_string(&instance.g),
            });
        }
        self.records.push((name.to_string(), outcome));
    }
}

fn corpus(seed: u64) -> Vec<CorpusInstance> {
    let mut corpus = Vec::new();
    let ps = [0.3, 0.5, 0.7];
    let palettes = [2usize, 3, 5, 9, 16];
    for i in 0..180usize {
        let n = 6 + i % 9;
        let p = ps[i / 9 % ps.len()];
        let palette = palettes[i / 27 % palettes.len()];
        let s = mix(seed, 7, i as u64);
        let g = edge_minimal_reduce(&random_colored_graph(n, p, palette, s));
        corpus.push(CorpusInstance {
            id: format!("random-{i}-n{n}"),
            g,
            ells: vec![3, 4, 5],
            seed: s,
        });
    }
    for m in 3..=7usize {
        corpus.push(CorpusInstance {
            id: format!("bipartite-{m}-{m}"),
            g: rainbow_complete_bipartite(m, m),
            ells: vec![3, 4, 5],
            seed: mix(seed, 11, m as u64),
        });
    }
    // Large balanced bipartite instance: the one family at desk scale that
    // clears the 5R + 27l gate of the maximum-degree bound for l = 3.
    let m = 86;
    corpus.push(CorpusInstance {
        id: format!("bipartite-{m}-{m}"),
        g: rainbow_complete_bipartite(m, m),
        ells: vec![3],
        seed: mix(seed, 13, m as u64),
    });
    corpus
}

fn neighbors_set(g: &EdgeColoredGraph, v: u32) -> VertexSet {
    VertexSet::from_iter(g.vertex_count(), g.neighbors(v).iter().map(|&(w, _)| w))
}

/// First triangle of `g` in lexicographic edge order, if any.
fn first_triangle(g: &EdgeColoredGraph) -> Option<(u32, u32, u32)> {
    for &(u, v, _) in g.edges() {
        for &(w, _) in g.neighbors(u) {
            if w != v && w > v && g.contains_edge(v, w) {
                return Some((u, v, w));
            }
        }
    }
    None
}

fn check_instance(instance: &CorpusInstance) -> Outcomes {
    let mut out = Outcomes::default();
    let g = &instance.g;
    let n = g.vertex_count();
    let mut rng = ChaCha8Rng::seed_from_u64(instance.seed);

    if g.edge_count() == 0 {
        return out;
    }
    let stats = ColorStats::compute(g);
    let delta_c = g.min_color_degree();

    // Averaging bound: random valid (v, X, Y) triples; edge-minimality is
    // certified inside the check itself.
    for t in 0..4 {
        let v = rng.random_range(0..n as u32);
        if g.degree(v) == 0 {
            continue;
        }
        let nv: Vec<u32> = g.neighbors(v).iter().map(|&(w, _)| w).collect();
        let x: Vec<u32> = nv.iter().copied().filter(|_| rng.random_bool(0.7)).collect();
        let y: Vec<u32> = (0..n as u32)
            .filter(|&w| w != v && rng.random_bool(0.5))
            .collect();
        if y.is_empty() {
            continue;
        }
        let x_set = VertexSet::from_iter(n, x);
        let y_set = VertexSet::from_iter(n, y);
        let outcome = match check_averaging_bound(g, v, &x_set, &y_set) {
            Ok(report) if report.holds => CheckOutcome::Holds,
            Ok(_) => CheckOutcome::Violated,
            Err(e) => CheckOutcome::Vacuous { reason: e.to_string() },
        };
        out.record("prop1_averaging", outcome, instance, format!("v={v} trial={t}"));
    }

    // Section-2 digraph observations.
    if let Some((r, (z, _zeta))) = stats.replication_witness().map(|w| (stats.replication(), w)) {
        let d = build_digraph_d_sec2(g, z);
        let unique = VertexSet::from_iter(n, g.unique_neighbors(z));
        let tails_ok = d.arcs().all(|(x, _)| unique.contains(x));
        let outdeg_ok = d.vertices().all(|x| d.out_degree(x) <= r.saturating_sub(1));
        let in_sum: usize = d.vertices().map(|y| d.in_degree(y)).sum();
        let out_sum: usize = d.vertices().map(|x| d.out_degree(x)).sum();
        let books_ok = in_sum == d.arc_count() && out_sum == d.arc_count();
        let mut obs_ok = tails_ok && outdeg_ok && books_ok;
        // Observation (iii) additionally needs rainbow-triangle-freeness.
        if obs_ok && find_rainbow_cycle_exact(g, 3).expect("valid ell").is_none() {
            let closed = {
                let mut s = neighbors_set(g, z);
                s.insert(z);
                s
            };
            obs_ok = unique
                .iter()
                .all(|y| g.color_degree_within(y, &closed) <= 1 + d.in_degree(y));
        }
        let outcome = if obs_ok { CheckOutcome::Holds } else { CheckOutcome::Violated };
        out.record("sec2_digraph_obs", outcome, instance, format!("z={z}"));
    }

    for &ell in &instance.ells {
        let params = format!("ell={ell}");
        let rainbow_free = find_rainbow_cycle_exact(g, ell).expect("valid ell").is_none();

        // Sigma cap over exact reach layers.
        if !rainbow_free {
            let reason = "instance has a rainbow cycle".to_string();
            out.record(
                "prop2_sigma_cap",
                CheckOutcome::Vacuous { reason: reason.clone() },
                instance,
                params.clone(),
            );
            out.record(
                "cor5_reach_size",
                CheckOutcome::Vacuous { reason: reason.clone() },
                instance,
                params.clone(),
            );
            out.record(
                "claim_yh_yd",
                CheckOutcome::Vacuous { reason: reason.clone() },
                instance,
                params.clone(),
            );
            out.record(
                "cor6_max_degree",
                CheckOutcome::Vacuous { reason },
                instance,
                params.clone(),
            );
            continue;
        }

        if n <= EXACT_REACH_CAP {
            let mut all_hold = true;
            let mut ran = false;
            for v in 0..n as u32 {
                if g.degree(v) == 0 {
                    continue;
                }
                let x_set = neighbors_set(g, v);
                let c_rep = repeating_colors(g, v, &x_set).expect("X inside N(v)");
                let reach = layered_reach(
                    g,
                    v,
                    &c_rep,
                    ell - 1,
                    &VertexSet::new(n),
                    ReachMode::Exact,
                )
                .expect("n within cap");
                let witnesses: Vec<(u32, RainbowWitness)> = reach
                    .layer(ell - 1)
                    .iter()
                    .map(|(&y, w)| (y, w.clone()))
                    .collect();
                if witnesses.is_empty() {
                    continue;
                }
                ran = true;
                match check_sigma_cap(g, ell, v, &x_set, &c_rep, &witnesses) {
                    Ok(records) => all_hold &= records.iter().all(|r| r.holds),
                    Err(_) => all_hold = false,
                }
            }
            let outcome = if !ran {
                CheckOutcome::Vacuous { reason: "no reach witnesses".into() }
            } else if all_hold {
                CheckOutcome::Holds
            } else {
                CheckOutcome::Violated
            };
            out.record("prop2_sigma_cap", outcome, instance, params.clone());

            // Reach-size lower bound from a triangle anchor.
            let outcome = match first_triangle(g) {
                None => CheckOutcome::Vacuous { reason: "no triangle".into() },
                Some((a, b, c)) => {
                    let mut ok = true;
                    for v in [a, b, c] {
                        let reach = layered_reach(
                            g,
                            v,
                            &[],
                            ell - 1,
                            &VertexSet::new(n),
                            ReachMode::Exact,
                        )
                        .expect("n within cap");
                        let y_len = reach.layer(ell - 1).len() as i64;
                        // |Y| >= (3/2)(delta_c - |C_T| - 4*ell) with C_T empty.
                        ok &= 2 * y_len >= 3 * (delta_c as i64 - 4 * ell as i64);
                    }
                    if ok { CheckOutcome::Holds } else { CheckOutcome::Violated }
                }
            };
            out.record("cor5_reach_size", outcome, instance, params.clone());
        } else {
            let reason = format!("n = {n} beyond the exact reach cap");
            out.record(
                "prop2_sigma_cap",
                CheckOutcome::Vacuous { reason: reason.clone() },
                instance,
                params.clone(),
            );
            out.record(
                "cor5_reach_size",
                CheckOutcome::Vacuous { reason },
                instance,
                params.clone(),
            );
        }

        // Case-2 claim bounds.
        let outcome = claim_outcome(g, ell, delta_c, &stats);
        out.record("claim_yh_yd", outcome, instance, params.clone());

        // Maximum-degree bound (rainbow-freeness certified above).
        out.record("cor6_max_degree", check_maxdeg_bound(g, ell), instance, params);
    }
    out
}

fn claim_outcome(
    g: &EdgeColoredGraph,
    ell: usize,
    delta_c: usize,
    stats: &ColorStats,
) -> CheckOutcome {
    let n = g.vertex_count();
    if 2 * delta_c < n + 1 {
        return CheckOutcome::Vacuous { reason: "delta_c below (n+1)/2".into() };
    }
    let Some((z, zeta)) = stats.replication_witness() else {
        return CheckOutcome::Vacuous { reason: "no edges".into() };
    };
    let mut x = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for &(w, c) in g.neighbors(z) {
        if x.len() == delta_c - 1 {
            break;
        }
        if c != zeta && seen.insert(c) {
            x.push(w);
        }
    }
    if x.len() + 1 != delta_c {
        return CheckOutcome::Vacuous { reason: "could not build X".into() };
    }
    let x_set = VertexSet::from_iter(n, x);
    match case2_partition(g, ell, z, zeta, &x_set) {
        Err(FinderError::Case1Applies(..)) => {
            CheckOutcome::Vacuous { reason: "Case 1 applies".into() }
        }
        Err(e) => CheckOutcome::Vacuous { reason: e.to_string() },
        Ok(part) => {
            let mut d_deg_x = std::collections::HashMap::new();
            for &(x, _) in &part.d_edges {
                *d_deg_x.entry(x).or_insert(0usize) += 1;
            }
            let ok = part.y_h.len() <= 11 * ell
                && 2 * part.y_d.len() <= x_set.len()
                && d_deg_x.values().all(|&d| d <= 1);
            if ok {
                CheckOutcome::Holds
            } else {
                CheckOutcome::Violated
            }
        }
    }
}

/// Runs every inequality checker over a generated corpus with hypotheses
/// certified, tallying pass/fail/vacuous per check.
pub fn run_property_suite(seed: u64) -> PropertySuiteReport {
    let corpus = corpus(seed);
    #[cfg(feature = "parallel")]
    let outcomes: Vec<Outcomes> = {
        use rayon::prelude::*;
        corpus.par_iter().map(check_instance).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let outcomes: Vec<Outcomes> = corpus.iter().map(check_instance).collect();

    let mut tallies: BTreeMap<String, Tally> = BTreeMap::new();
    let mut failures = Vec::new();
    for out in outcomes {
        for (name, outcome) in out.records {
            let tally = tallies.entry(name).or_default();
            match outcome {
                CheckOutcome::Holds => tally.pass += 1,
                CheckOutcome::Violated => tally.fail += 1,
                CheckOutcome::Vacuous { .. } => tally.vacuous += 1,
            }
        }
        failures.extend(out.failures);
    }
    PropertySuiteReport { seed, instances: corpus.len(), tallies, failures }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theorem_small_finds_triangles_everywhere() {
        let report = verify_theorem_small(3, 3..=8, 40, 0).unwrap();
        assert!(report.all_found(), "{:?}", report.entries);
    }

    #[test]
    fn theorem_small_empty_range() {
        #[allow(clippy::reversed_empty_ranges)]
        let report = verify_theorem_small(3, 5..=4, 10, 0).unwrap();
        assert!(report.entries.is_empty());
        assert!(report.all_found());
    }

    #[test]
    fn delta_bound_vacuous_at_tiny_n() {
        // n/2 + 9 exceeds n - 1 for n <= 14: every sample is vacuous.
        let report = verify_cor_deltabound(3, 14, 50, 1).unwrap();
        assert_eq!(report.checked, 0);
        assert_eq!(report.vacuous, 50);
        assert!(report.violations.is_empty());
    }

    #[test]
    fn delta_bound_checked_at_n40() {
        let report = verify_cor_deltabound(3, 40, 30, 2).unwrap();
        assert!(report.checked > 0, "some samples must clear the bound at n = 40");
        assert!(report.violations.is_empty());
    }

    #[test]
    fn property_suite_smoke() {
        let report = run_property_suite(12345);
        assert!(!report.has_failures(), "failures: {:?}", report.failures);
        // The suite must actually exercise the unconditional checks.
        assert!(report.tallies["prop1_averaging"].pass > 0);
        assert!(report.tallies["sec2_digraph_obs"].pass > 0);
        assert!(report.tallies["cor6_max_degree"].pass > 0, "{:?}", report.tallies);
        assert!(report.tallies["prop2_sigma_cap"].pass > 0);
    }
}

//! Toolkit for edge-colored graphs centered on rainbow cycles under
//! minimum color-degree conditions.
//!
//! The crate provides, as executable operations:
//!
//! * the edge-colored graph data model with per-vertex color statistics
//!   ([`graph`]), the `.ecg` text format ([`format`]) and machine-checkable
//!   rainbow witnesses ([`witness`]);
//! * edge-minimal reduction preserving the minimum color degree
//!   ([`minimality`]);
//! * separation/restriction statistics, auxiliary digraphs and exact
//!   integer inequality checks ([`separation`], [`digraph`]);
//! * a complete backtracking rainbow-cycle oracle and layered rainbow-path
//!   reachability ([`search`], [`reach`]);
//! * a proof-guided finder that extracts a rainbow ℓ-cycle from any graph
//!   with `δᶜ(G) ≥ (n+1)/2` on enough vertices ([`finder`]);
//! * extremal and random instance generators plus an annealing probe for
//!   near-extremal colorings ([`constructions`], [`probe`]);
//! * seeded verification suites with hypothesis certification ([`verify`]).

pub mod constructions;
pub mod digraph;
pub mod finder;
pub mod format;
pub mod graph;
pub mod minimality;
pub mod probe;
pub mod reach;
pub mod search;
pub mod separation;
pub mod verify;
pub mod witness;

pub use constructions::{
    boost_min_color_degree, rainbow_complete, rainbow_complete_bipartite, random_colored_graph,
};
pub use digraph::Digraph;
pub use finder::{find_rainbow_cycle, FinderCase, FinderConfig, FinderOutcome, FinderTrace};
pub use format::{parse_ecg, read_ecg_file, to_ecg_string, write_ecg_file, FormatError};
pub use graph::{ColorStats, EdgeColoredGraph, GraphError, VertexSet};
pub use minimality::{check_no_mono_3path, edge_minimal_reduce};
pub use reach::{close_cycle_from_reach, layered_reach, LayeredReach, ReachMode};
pub use search::{count_rainbow_cycles, find_rainbow_cycle_exact, SearchError};
pub use separation::{
    build_digraph_d, build_digraph_d_sec2, build_digraph_f, check_averaging_bound,
    check_maxdeg_bound, check_sigma_cap, repeating_colors, restricted_colors, separating_colors,
    CheckOutcome, SeparationError, SeparationReport,
};
pub use witness::{RainbowWitness, WitnessError, WitnessKind};

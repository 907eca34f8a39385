//! Edge-colored graph data model and single-graph color statistics.
//!
//! An [`EdgeColoredGraph`] is an immutable simple graph on vertices
//! `0..n-1` with a total edge coloring over integer color ids. Per-vertex
//! incident edges are stored grouped by color, so color-class queries
//! (`alpha_neighborhood`, `unique_neighbors`) are O(1) per element; they are
//! the hot queries in every search routine built on top of this type.

use thiserror::Error;

/// Construction errors for [`EdgeColoredGraph`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop edge ({0}, {0}) is not allowed")]
    LoopEdge(u32),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(u32, u32),
    #[error("vertex {vertex} out of range on edge ({u}, {v}): graph has {n} vertices")]
    VertexOutOfRange { vertex: u32, u: u32, v: u32, n: usize },
    #[error("no colors present: graph has no edges")]
    NoEdges,
}

// ---------------------------------------------------------------------------
// VertexSet
// ---------------------------------------------------------------------------

/// A set of vertices over a fixed universe `0..universe`, backed by a bitset.
///
/// Iteration is always in ascending vertex order, which every algorithm in
/// this crate relies on for deterministic tie-breaking.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexSet {
    universe: usize,
    words: Vec<u64>,
    len: usize,
}

impl VertexSet {
    pub fn new(universe: usize) -> Self {
        VertexSet {
            universe,
            words: vec![0u64; universe.div_ceil(64)],
            len: 0,
        }
    }

    pub fn from_iter(universe: usize, iter: impl IntoIterator<Item = u32>) -> Self {
        let mut s = Self::new(universe);
        for v in iter {
            s.insert(v);
        }
        s
    }

    /// The set `{0, .., universe-1}`.
    pub fn full(universe: usize) -> Self {
        Self::from_iter(universe, 0..universe as u32)
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    #[inline]
    pub fn contains(&self, v: u32) -> bool {
        let v = v as usize;
        v < self.universe && self.words[v / 64] >> (v % 64) & 1 != 0
    }

    /// Inserts `v`, returning whether it was newly added.
    ///
    /// Panics if `v` is outside the universe.
    pub fn insert(&mut self, v: u32) -> bool {
        let i = v as usize;
        assert!(i < self.universe, "vertex {v} outside universe {}", self.universe);
        let fresh = self.words[i / 64] >> (i % 64) & 1 == 0;
        self.words[i / 64] |= 1 << (i % 64);
        self.len += fresh as usize;
        fresh
    }

    pub fn remove(&mut self, v: u32) -> bool {
        if !self.contains(v) {
            return false;
        }
        let i = v as usize;
        self.words[i / 64] &= !(1 << (i % 64));
        self.len -= 1;
        true
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Ascending iteration over members.
    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let b = bits.trailing_zeros();
                bits &= bits - 1;
                Some(wi as u32 * 64 + b)
            })
        })
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }
}

// ---------------------------------------------------------------------------
// EdgeColoredGraph
// ---------------------------------------------------------------------------

/// An immutable simple graph with a total edge coloring.
///
/// Vertices are `0..n-1`; colors are arbitrary `u32` ids and the palette is
/// exactly the set of colors that appear on edges. Safe to share across
/// threads once built.
#[derive(Clone, Debug)]
pub struct EdgeColoredGraph {
    n: usize,
    /// Canonical edge list: `(u, v, color)` with `u < v`, sorted by `(u, v)`.
    edges: Vec<(u32, u32, u32)>,
    /// Per-vertex `(neighbor, color)`, sorted by neighbor id.
    adj: Vec<Vec<(u32, u32)>>,
    /// Per-vertex `(color, neighbor)`, sorted; consecutive runs of equal
    /// color form the color classes N_alpha(v).
    by_color: Vec<Vec<(u32, u32)>>,
    /// Number of distinct colors incident to each vertex.
    color_degree: Vec<u32>,
    /// Sorted distinct colors in use.
    palette: Vec<u32>,
}

impl PartialEq for EdgeColoredGraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for EdgeColoredGraph {}

impl EdgeColoredGraph {
    /// Builds a graph from `(u, v, color)` triples.
    ///
    /// Rejects loops, out-of-range endpoints and duplicate vertex pairs,
    /// naming the offending edge.
    pub fn build(
        n: usize,
        colored_edges: impl IntoIterator<Item = (u32, u32, u32)>,
    ) -> Result<Self, GraphError> {
        let mut edges: Vec<(u32, u32, u32)> = Vec::new();
        for (u, v, c) in colored_edges {
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            for w in [u, v] {
                if w as usize >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, u, v, n });
                }
            }
            edges.push((u.min(v), u.max(v), c));
        }
        edges.sort_unstable();
        for pair in edges.windows(2) {
            if pair[0].0 == pair[1].0 && pair[0].1 == pair[1].1 {
                return Err(GraphError::DuplicateEdge(pair[0].0, pair[0].1));
            }
        }

        let mut adj = vec![Vec::new(); n];
        for &(u, v, c) in &edges {
            adj[u as usize].push((v, c));
            adj[v as usize].push((u, c));
        }
        for list in &mut adj {
            list.sort_unstable();
        }

        let mut by_color: Vec<Vec<(u32, u32)>> = (0..n)
            .map(|v| adj[v].iter().map(|&(w, c)| (c, w)).collect())
            .collect();
        let mut color_degree = vec![0u32; n];
        for (v, list) in by_color.iter_mut().enumerate() {
            list.sort_unstable();
            let mut distinct = 0;
            let mut last: Option<u32> = None;
            for &(c, _) in list.iter() {
                if last != Some(c) {
                    distinct += 1;
                    last = Some(c);
                }
            }
            color_degree[v] = distinct;
        }

        let mut palette: Vec<u32> = edges.iter().map(|&(_, _, c)| c).collect();
        palette.sort_unstable();
        palette.dedup();

        Ok(EdgeColoredGraph { n, edges, adj, by_color, color_degree, palette })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Canonical edge list, sorted by `(u, v)` with `u < v`.
    pub fn edges(&self) -> &[(u32, u32, u32)] {
        &self.edges
    }

    /// Sorted distinct colors in use.
    pub fn palette(&self) -> &[u32] {
        &self.palette
    }

    pub fn palette_size(&self) -> usize {
        self.palette.len()
    }

    /// Dense index of `color` within the sorted palette.
    pub fn color_index(&self, color: u32) -> Option<usize> {
        self.palette.binary_search(&color).ok()
    }

    /// Neighbors of `v` as `(neighbor, color)`, ascending by neighbor id.
    pub fn neighbors(&self, v: u32) -> &[(u32, u32)] {
        &self.adj[v as usize]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn contains_edge(&self, u: u32, v: u32) -> bool {
        self.color_of(u, v).is_some()
    }

    /// The color of edge `{u, v}`, if present.
    #[inline]
    pub fn color_of(&self, u: u32, v: u32) -> Option<u32> {
        let list = &self.adj[u as usize];
        list.binary_search_by_key(&v, |&(w, _)| w)
            .ok()
            .map(|i| list[i].1)
    }

    /// Number of distinct colors on edges at `v`.
    pub fn color_degree(&self, v: u32) -> usize {
        self.color_degree[v as usize] as usize
    }

    /// Number of distinct colors `c({u, v})` over `u ∈ N(v) ∩ set`.
    pub fn color_degree_within(&self, v: u32, set: &VertexSet) -> usize {
        let mut colors: Vec<u32> = self
            .adj[v as usize]
            .iter()
            .filter(|&&(w, _)| set.contains(w))
            .map(|&(_, c)| c)
            .collect();
        colors.sort_unstable();
        colors.dedup();
        colors.len()
    }

    /// Minimum color degree over all vertices.
    ///
    /// Panics on the empty-vertex-set graph.
    pub fn min_color_degree(&self) -> usize {
        assert!(self.n >= 1, "min color degree of a graph with no vertices");
        self.color_degree.iter().copied().min().unwrap() as usize
    }

    fn alpha_slice(&self, v: u32, alpha: u32) -> &[(u32, u32)] {
        let list = &self.by_color[v as usize];
        let lo = list.partition_point(|&(c, _)| c < alpha);
        let hi = list.partition_point(|&(c, _)| c <= alpha);
        &list[lo..hi]
    }

    /// Neighbors joined to `v` by color-`alpha` edges, ascending.
    pub fn alpha_neighborhood(&self, v: u32, alpha: u32) -> impl Iterator<Item = u32> + '_ {
        self.alpha_slice(v, alpha).iter().map(|&(_, w)| w)
    }

    /// Size of the color-`alpha` neighborhood of `v`.
    pub fn alpha_degree(&self, v: u32, alpha: u32) -> usize {
        self.alpha_slice(v, alpha).len()
    }

    /// Neighbors of `v` whose connecting color appears exactly once at `v`
    /// (the set N₁(v)), ascending by vertex id.
    pub fn unique_neighbors(&self, v: u32) -> Vec<u32> {
        let list = &self.by_color[v as usize];
        let mut out = Vec::new();
        let mut i = 0;
        while i < list.len() {
            let mut j = i + 1;
            while j < list.len() && list[j].0 == list[i].0 {
                j += 1;
            }
            if j - i == 1 {
                out.push(list[i].1);
            }
            i = j;
        }
        out.sort_unstable();
        out
    }

    /// Replication number `R = max |N_alpha(v)|` with the witness `(v, alpha)`
    /// attaining it; ties broken by smallest vertex id, then smallest color.
    pub fn replication(&self) -> Result<(usize, (u32, u32)), GraphError> {
        if self.edges.is_empty() {
            return Err(GraphError::NoEdges);
        }
        let mut best = 0usize;
        let mut witness = (0u32, 0u32);
        for v in 0..self.n {
            let list = &self.by_color[v];
            let mut i = 0;
            while i < list.len() {
                let mut j = i + 1;
                while j < list.len() && list[j].0 == list[i].0 {
                    j += 1;
                }
                if j - i > best {
                    best = j - i;
                    witness = (v as u32, list[i].0);
                }
                i = j;
            }
        }
        Ok((best, witness))
    }

    /// Subgraph induced on `a`, relabeled to `0..|a|-1` in ascending order of
    /// the original ids. Returns the graph and the map `new id -> old id`.
    pub fn induced_subgraph(&self, a: &VertexSet) -> (EdgeColoredGraph, Vec<u32>) {
        let index_map: Vec<u32> = a.iter().filter(|&v| (v as usize) < self.n).collect();
        let mut rename = vec![u32::MAX; self.n];
        for (new, &old) in index_map.iter().enumerate() {
            rename[old as usize] = new as u32;
        }
        let edges = self.edges.iter().filter_map(|&(u, v, c)| {
            let (nu, nv) = (rename[u as usize], rename[v as usize]);
            (nu != u32::MAX && nv != u32::MAX).then_some((nu, nv, c))
        });
        let g = EdgeColoredGraph::build(index_map.len(), edges)
            .expect("induced subgraph of a valid graph is valid");
        (g, index_map)
    }
}

// ---------------------------------------------------------------------------
// ColorStats
// ---------------------------------------------------------------------------

/// Precomputed per-vertex color statistics for one graph.
#[derive(Clone, Debug)]
pub struct ColorStats {
    color_degree: Vec<u32>,
    unique_nbhd: Vec<Vec<u32>>,
    replication: usize,
    witness: Option<(u32, u32)>,
}

impl ColorStats {
    pub fn compute(g: &EdgeColoredGraph) -> ColorStats {
        let n = g.vertex_count();
        let (replication, witness) = match g.replication() {
            Ok((r, w)) => (r, Some(w)),
            Err(_) => (0, None),
        };
        ColorStats {
            color_degree: (0..n).map(|v| g.color_degree(v as u32) as u32).collect(),
            unique_nbhd: (0..n).map(|v| g.unique_neighbors(v as u32)).collect(),
            replication,
            witness,
        }
    }

    pub fn color_degree(&self, v: u32) -> usize {
        self.color_degree[v as usize] as usize
    }

    /// N₁(v): neighbors whose connecting color appears exactly once at `v`.
    pub fn unique_neighborhood(&self, v: u32) -> &[u32] {
        &self.unique_nbhd[v as usize]
    }

    pub fn replication(&self) -> usize {
        self.replication
    }

    /// A `(vertex, color)` pair attaining the replication number, if the
    /// graph has any edge.
    pub fn replication_witness(&self) -> Option<(u32, u32)> {
        self.witness
    }
}

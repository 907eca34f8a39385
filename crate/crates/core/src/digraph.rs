//! Directed auxiliary graphs used by the separation statistics.
//!
//! These digraphs live on a declared subset of a host graph's vertices and
//! keep host vertex ids, so degree queries line up with the host graph.

use crate::graph::VertexSet;

/// A directed graph on a subset of host-graph vertices.
#[derive(Clone, Debug)]
pub struct Digraph {
    members: VertexSet,
    out: Vec<Vec<u32>>,
    inc: Vec<Vec<u32>>,
    arc_count: usize,
}

impl Digraph {
    /// An arcless digraph on the given vertex set; `members.universe()` must
    /// be the host graph's vertex count.
    pub fn new(members: VertexSet) -> Self {
        let host_n = members.universe();
        Digraph {
            members,
            out: vec![Vec::new(); host_n],
            inc: vec![Vec::new(); host_n],
            arc_count: 0,
        }
    }

    /// Adds the arc `(x, y)`.
    ///
    /// Panics if an endpoint is outside the declared vertex set or the arc
    /// already exists; builders are expected to generate each arc once.
    pub fn add_arc(&mut self, x: u32, y: u32) {
        assert!(
            self.members.contains(x) && self.members.contains(y),
            "arc ({x}, {y}) leaves the declared vertex set"
        );
        let list = &mut self.out[x as usize];
        let pos = list.partition_point(|&w| w < y);
        assert!(list.get(pos) != Some(&y), "duplicate arc ({x}, {y})");
        list.insert(pos, y);
        let list = &mut self.inc[y as usize];
        let pos = list.partition_point(|&w| w < x);
        list.insert(pos, x);
        self.arc_count += 1;
    }

    pub fn contains_vertex(&self, v: u32) -> bool {
        self.members.contains(v)
    }

    pub fn vertex_count(&self) -> usize {
        self.members.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = u32> + '_ {
        self.members.iter()
    }

    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    pub fn out_degree(&self, x: u32) -> usize {
        self.out[x as usize].len()
    }

    pub fn in_degree(&self, y: u32) -> usize {
        self.inc[y as usize].len()
    }

    pub fn out_neighbors(&self, x: u32) -> &[u32] {
        &self.out[x as usize]
    }

    pub fn in_neighbors(&self, y: u32) -> &[u32] {
        &self.inc[y as usize]
    }

    /// All arcs, ascending by tail then head.
    pub fn arcs(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.members
            .iter()
            .flat_map(move |x| self.out[x as usize].iter().map(move |&y| (x, y)))
    }
}

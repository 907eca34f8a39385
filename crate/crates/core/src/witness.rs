//! Rainbow path/cycle witnesses.
//!
//! A witness is an explicit vertex sequence plus the edge colors along it,
//! checkable against a host graph independently of how it was found.

use crate::graph::EdgeColoredGraph;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WitnessKind {
    Path,
    Cycle,
}

/// A vertex sequence certifying a rainbow path or cycle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RainbowWitness {
    pub kind: WitnessKind,
    pub vertices: Vec<u32>,
    /// Edge colors along the sequence; for cycles this includes the closing
    /// edge, so `colors.len() == vertices.len()`.
    pub colors: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("witness has {vertices} vertices but {colors} colors")]
    LengthMismatch { vertices: usize, colors: usize },
    #[error("a cycle witness needs at least 3 vertices, got {0}")]
    TooShort(usize),
    #[error("vertex {0} repeats in the witness")]
    RepeatedVertex(u32),
    #[error("vertex {0} is out of range")]
    VertexOutOfRange(u32),
    #[error("edge ({0}, {1}) is missing from the host graph")]
    MissingEdge(u32, u32),
    #[error("edge ({u}, {v}) has color {actual}, witness claims {claimed}")]
    ColorMismatch { u: u32, v: u32, claimed: u32, actual: u32 },
    #[error("color {0} repeats in the witness (not rainbow)")]
    RepeatedColor(u32),
}

impl RainbowWitness {
    pub fn path(vertices: Vec<u32>, colors: Vec<u32>) -> Self {
        RainbowWitness { kind: WitnessKind::Path, vertices, colors }
    }

    pub fn cycle(vertices: Vec<u32>, colors: Vec<u32>) -> Self {
        RainbowWitness { kind: WitnessKind::Cycle, vertices, colors }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// First vertex of the sequence.
    pub fn start(&self) -> Option<u32> {
        self.vertices.first().copied()
    }

    /// Last vertex of the sequence.
    pub fn end(&self) -> Option<u32> {
        self.vertices.last().copied()
    }

    /// Checks the witness against `g`: consecutive vertices (and, for a
    /// cycle, last-to-first) are adjacent with the claimed colors, vertices
    /// are distinct and all colors are pairwise distinct.
    pub fn validate(&self, g: &EdgeColoredGraph) -> Result<(), WitnessError> {
        let k = self.vertices.len();
        let want_colors = match self.kind {
            WitnessKind::Path => k.saturating_sub(1),
            WitnessKind::Cycle => {
                if k < 3 {
                    return Err(WitnessError::TooShort(k));
                }
                k
            }
        };
        if self.colors.len() != want_colors {
            return Err(WitnessError::LengthMismatch { vertices: k, colors: self.colors.len() });
        }

        for &v in &self.vertices {
            if v as usize >= g.vertex_count() {
                return Err(WitnessError::VertexOutOfRange(v));
            }
        }
        let mut seen = self.vertices.clone();
        seen.sort_unstable();
        for pair in seen.windows(2) {
            if pair[0] == pair[1] {
                return Err(WitnessError::RepeatedVertex(pair[0]));
            }
        }

        for i in 0..want_colors {
            let u = self.vertices[i];
            let v = self.vertices[(i + 1) % k];
            match g.color_of(u, v) {
                None => return Err(WitnessError::MissingEdge(u, v)),
                Some(actual) if actual != self.colors[i] => {
                    return Err(WitnessError::ColorMismatch { u, v, claimed: self.colors[i], actual })
                }
                _ => {}
            }
        }

        let mut colors = self.colors.clone();
        colors.sort_unstable();
        for pair in colors.windows(2) {
            if pair[0] == pair[1] {
                return Err(WitnessError::RepeatedColor(pair[0]));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4_rainbow() -> EdgeColoredGraph {
        EdgeColoredGraph::build(
            4,
            [(0, 1, 0), (0, 2, 1), (0, 3, 2), (1, 2, 3), (1, 3, 4), (2, 3, 5)],
        )
        .unwrap()
    }

    #[test]
    fn valid_cycle_and_path() {
        let g = k4_rainbow();
        RainbowWitness::cycle(vec![0, 1, 2], vec![0, 3, 1]).validate(&g).unwrap();
        RainbowWitness::path(vec![3, 0, 1], vec![2, 0]).validate(&g).unwrap();
        // Single-vertex path is a valid (empty) rainbow path.
        RainbowWitness::path(vec![2], vec![]).validate(&g).unwrap();
    }

    #[test]
    fn rejects_broken_witnesses() {
        let g = k4_rainbow();
        assert_eq!(
            RainbowWitness::cycle(vec![0, 1], vec![0, 0]).validate(&g),
            Err(WitnessError::TooShort(2))
        );
        assert_eq!(
            RainbowWitness::cycle(vec![0, 1, 2], vec![0, 3, 7]).validate(&g),
            Err(WitnessError::ColorMismatch { u: 2, v: 0, claimed: 7, actual: 1 })
        );
        assert_eq!(
            RainbowWitness::path(vec![0, 1, 0], vec![0, 0]).validate(&g),
            Err(WitnessError::RepeatedVertex(0))
        );
        let mono = EdgeColoredGraph::build(3, [(0, 1, 9), (1, 2, 9), (0, 2, 9)]).unwrap();
        assert_eq!(
            RainbowWitness::cycle(vec![0, 1, 2], vec![9, 9, 9]).validate(&mono),
            Err(WitnessError::RepeatedColor(9))
        );
    }
}

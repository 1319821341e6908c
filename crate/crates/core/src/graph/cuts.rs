use serde::{Deserialize, Serialize};

use super::CubicGraph;
use crate::error::{domain, Result};

/// Three edges whose removal splits the graph into exactly two components,
/// with every cut edge joining the two sides.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgeCut3 {
    edges: [usize; 3],
    /// `sides[0]` holds the component containing the smallest vertex.
    sides: [Vec<usize>; 2],
}

impl EdgeCut3 {
    pub fn new(g: &CubicGraph, edges: [usize; 3]) -> Result<Self> {
        let mut edges = edges;
        edges.sort_unstable();
        if edges.iter().any(|&e| e >= g.size()) {
            return domain(format!("cut edge out of range: {edges:?}"));
        }
        if edges[0] == edges[1] || edges[1] == edges[2] {
            return domain(format!("cut edges are not distinct: {edges:?}"));
        }
        match Self::from_sorted(g, edges) {
            Some(cut) => Ok(cut),
            None => domain(format!("edges {edges:?} do not form a 3-edge cut")),
        }
    }

    fn from_sorted(g: &CubicGraph, edges: [usize; 3]) -> Option<Self> {
        let (comp, count) = g.component_labels(&edges);
        if count != 2 {
            return None;
        }
        if edges.iter().any(|&e| {
            let (u, v) = g.edge(e);
            comp[u] == comp[v]
        }) {
            return None;
        }
        let mut sides = [Vec::new(), Vec::new()];
        for (v, &c) in comp.iter().enumerate() {
            sides[c].push(v);
        }
        Some(EdgeCut3 { edges, sides })
    }

    pub fn edges(&self) -> [usize; 3] {
        self.edges
    }

    pub fn sides(&self) -> &[Vec<usize>; 2] {
        &self.sides
    }

    /// A side with `s` vertices spans `(3s - 3) / 2` edges; it contains a cycle
    /// iff that is at least `s`.
    pub fn is_nontrivial(&self) -> bool {
        self.sides.iter().all(|side| {
            let s = side.len();
            (3 * s - 3) / 2 >= s
        })
    }

    /// The cut edges' endpoints on side `i`, in cut-edge order.
    pub fn endpoints_on(&self, g: &CubicGraph, i: usize) -> [usize; 3] {
        let side = &self.sides[i];
        self.edges.map(|e| {
            let (u, v) = g.edge(e);
            if side.binary_search(&u).is_ok() {
                u
            } else {
                v
            }
        })
    }
}

/// Every 3-edge cut of a connected graph, lexicographic by edge triple.
pub fn enumerate_3_edge_cuts(g: &CubicGraph, nontrivial_only: bool) -> Vec<EdgeCut3> {
    let m = g.size();
    let mut out = Vec::new();
    for a in 0..m {
        for b in a + 1..m {
            for c in b + 1..m {
                if let Some(cut) = EdgeCut3::from_sorted(g, [a, b, c]) {
                    if !nontrivial_only || cut.is_nontrivial() {
                        out.push(cut);
                    }
                }
            }
        }
    }
    out
}

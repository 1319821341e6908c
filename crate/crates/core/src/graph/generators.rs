use serde::{Deserialize, Serialize};

use super::CubicGraph;
use crate::error::{Error, Result};

/// Parameters of the generalized Petersen graph `P(m, k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GeneralizedPetersenParams {
    m: usize,
    k: usize,
}

impl GeneralizedPetersenParams {
    pub fn new(m: usize, k: usize) -> Result<Self> {
        if m < 3 {
            return Err(Error::Param(format!("cycle length m = {m} must be at least 3")));
        }
        if k == 0 || 2 * k >= m {
            return Err(Error::Param(format!("skip k = {k} must satisfy 1 <= k < m/2 (m = {m})")));
        }
        Ok(Self { m, k })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn k(&self) -> usize {
        self.k
    }
}

/// Outer cycle `u_i u_{i+1}`, spokes `u_i w_i`, inner edges `w_i w_{i+k}`.
/// Outer vertices are labeled `0..m`, inner vertices `m..2m`; edges are listed
/// outer cycle first, then spokes, then inner edges, each by increasing `i`.
pub fn generalized_petersen(params: GeneralizedPetersenParams) -> Result<CubicGraph> {
    let GeneralizedPetersenParams { m, k } = params;
    let outer = (0..m).map(|i| (i, (i + 1) % m));
    let spokes = (0..m).map(|i| (i, m + i));
    let inner = (0..m).map(|i| (m + i, m + (i + k) % m));
    CubicGraph::from_edges(2 * m, outer.chain(spokes).chain(inner).collect::<Vec<_>>())
}

fn gp(m: usize, k: usize) -> CubicGraph {
    generalized_petersen(GeneralizedPetersenParams { m, k }).expect("valid generalized Petersen parameters")
}

/// `P(9,2)` in Tutte's indexing: 9-cycles `a_0..a_8` (vertices `0..9`) and
/// `b_0..b_8` (vertices `9..18`) joined by the edges `a_i b_{2i mod 9}`.
pub fn tutte_p92() -> CubicGraph {
    let a = |i: usize| i % 9;
    let b = |i: usize| 9 + i % 9;
    let edges: Vec<_> = (0..9)
        .map(|i| (a(i), a(i + 1)))
        .chain((0..9).map(|i| (b(i), b(i + 1))))
        .chain((0..9).map(|i| (a(i), b(2 * i))))
        .collect();
    CubicGraph::from_edges(18, edges).expect("Tutte's P(9,2) is cubic")
}

pub fn complete_k4() -> CubicGraph {
    CubicGraph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
}

/// `K_{3,3}` with parts `{0,1,2}` and `{3,4,5}`.
pub fn complete_bipartite_k33() -> CubicGraph {
    let edges: Vec<_> = (0..3).flat_map(|a| (3..6).map(move |b| (a, b))).collect();
    CubicGraph::from_edges(6, edges).unwrap()
}

/// Triangular prism, `P(3,1)`.
pub fn prism() -> CubicGraph {
    gp(3, 1)
}

/// 3-cube, `P(4,1)`.
pub fn cube() -> CubicGraph {
    gp(4, 1)
}

pub fn petersen() -> CubicGraph {
    gp(5, 2)
}

/// Möbius–Kantor graph, `P(8,3)`.
pub fn mobius_kantor() -> CubicGraph {
    gp(8, 3)
}

/// Wagner graph: the Möbius ladder on 8 vertices.
pub fn wagner() -> CubicGraph {
    let edges: Vec<_> = (0..8).map(|i| (i, (i + 1) % 8)).chain((0..4).map(|i| (i, i + 4))).collect();
    CubicGraph::from_edges(8, edges).unwrap()
}

/// Named cubic graphs on at most ten vertices used as a test corpus.
pub fn small_cubic_corpus() -> Vec<(&'static str, CubicGraph)> {
    vec![
        ("K4", complete_k4()),
        ("K3,3", complete_bipartite_k33()),
        ("prism", prism()),
        ("cube", cube()),
        ("wagner", wagner()),
        ("pentagonal-prism", gp(5, 1)),
        ("petersen", petersen()),
    ]
}

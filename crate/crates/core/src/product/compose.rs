use rand::rngs::StdRng;
use rand::SeedableRng;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::graph::{CubicGraph, EdgeCut3};

/// One star (Y) composition: delete `v1` from the first graph and `v2` from
/// the second, then join the `i`-th smallest neighbor of `v1` to the
/// `PERMUTATIONS[perm][i]`-th smallest neighbor of `v2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct StarProductSpec {
    pub v1: usize,
    pub v2: usize,
    pub perm: u8,
}

/// Bijections between sorted neighbor triples, lexicographic.
pub const PERMUTATIONS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

impl StarProductSpec {
    pub fn new(v1: usize, v2: usize, perm: u8) -> Self {
        StarProductSpec { v1, v2, perm }
    }

    /// The three matched pairs `(neighbor of v1, neighbor of v2)`, ordered by
    /// the first component.
    pub fn matching(&self, g1: &CubicGraph, g2: &CubicGraph) -> Result<[(usize, usize); 3]> {
        if self.v1 >= g1.order() || self.v2 >= g2.order() {
            return domain(format!("spec {self:?} names a vertex outside the factors"));
        }
        let Some(p) = PERMUTATIONS.get(self.perm as usize) else {
            return domain(format!("bijection index {} is not in 0..6", self.perm));
        };
        let a = g1.sorted_neighbors(self.v1);
        let b = g2.sorted_neighbors(self.v2);
        Ok([0, 1, 2].map(|i| (a[i], b[p[i]])))
    }
}

/// Every spec for the pair, ordered by `(v1, v2, perm)`.
pub fn all_specs(g1: &CubicGraph, g2: &CubicGraph) -> Vec<StarProductSpec> {
    let mut out = Vec::with_capacity(6 * g1.order() * g2.order());
    for v1 in 0..g1.order() {
        for v2 in 0..g2.order() {
            out.extend((0..6).map(|perm| StarProductSpec::new(v1, v2, perm)));
        }
    }
    out
}

/// `count` distinct specs drawn uniformly with a seeded generator (all of
/// them if there are fewer), in `(v1, v2, perm)` order.
pub fn sample_specs(g1: &CubicGraph, g2: &CubicGraph, count: usize, seed: u64) -> Vec<StarProductSpec> {
    let all = all_specs(g1, g2);
    if count >= all.len() {
        return all;
    }
    let mut rng = StdRng::seed_from_u64(seed);
    let mut picked = rand::seq::index::sample(&mut rng, all.len(), count).into_vec();
    picked.sort_unstable();
    picked.into_iter().map(|i| all[i]).collect()
}

/// A star product together with the 3-edge cut formed by its new matching.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarProduct {
    pub graph: CubicGraph,
    pub cut: EdgeCut3,
}

/// Vertices of `g1` other than `v1` keep their order and come first, then those
/// of `g2` other than `v2`. Edges: surviving edges of `g1`, of `g2`, then the
/// matching in the order of [`StarProductSpec::matching`].
pub fn star_compose(g1: &CubicGraph, g2: &CubicGraph, spec: StarProductSpec) -> Result<StarProduct> {
    let matching = spec.matching(g1, g2)?;
    let (n1, n2) = (g1.order(), g2.order());
    let map1 = |x: usize| if x < spec.v1 { x } else { x - 1 };
    let map2 = |y: usize| n1 - 1 + if y < spec.v2 { y } else { y - 1 };
    let mut edges = Vec::with_capacity(g1.size() + g2.size() - 3);
    edges.extend(g1.edges().iter().filter(|&&(u, v)| u != spec.v1 && v != spec.v1).map(|&(u, v)| (map1(u), map1(v))));
    edges.extend(g2.edges().iter().filter(|&&(u, v)| u != spec.v2 && v != spec.v2).map(|&(u, v)| (map2(u), map2(v))));
    let first_new = edges.len();
    edges.extend(matching.iter().map(|&(a, b)| (map1(a), map2(b))));
    let graph = CubicGraph::from_edges(n1 + n2 - 2, edges)
        .map_err(|e| crate::Error::Domain(format!("composition is not a simple cubic graph: {e}")))?;
    let cut = EdgeCut3::new(&graph, [first_new, first_new + 1, first_new + 2])?;
    Ok(StarProduct { graph, cut })
}

/// Splits along a nontrivial 3-edge cut. Each side keeps its vertices in
/// increasing order and gains one new last vertex joined to its cut-edge
/// endpoints (in cut-edge order). The side containing vertex 0 comes first.
pub fn star_decompose(g: &CubicGraph, cut: &EdgeCut3) -> Result<(CubicGraph, CubicGraph)> {
    // re-validate against this graph
    let cut = EdgeCut3::new(g, cut.edges())?;
    if !cut.is_nontrivial() {
        return domain("cut isolates a single vertex; a star decomposition needs a nontrivial cut");
    }
    let cut_edges = cut.edges();
    let side = |i: usize| -> Result<CubicGraph> {
        let verts = &cut.sides()[i];
        let mut index = vec![usize::MAX; g.order()];
        for (new, &v) in verts.iter().enumerate() {
            index[v] = new;
        }
        let hub = verts.len();
        let mut edges: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .enumerate()
            .filter(|(e, &(u, v))| !cut_edges.contains(e) && index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|(_, &(u, v))| (index[u], index[v]))
            .collect();
        edges.extend(cut.endpoints_on(g, i).iter().map(|&x| (index[x], hub)));
        CubicGraph::from_edges(hub + 1, edges)
    };
    Ok((side(0)?, side(1)?))
}

//! Canonical labeling by individualization and refinement.
//!
//! Vertex colors are refined until equitable (each vertex's color together
//! with the multiset of its neighbors' colors, ranked). When a non-singleton
//! cell remains, the first such cell is split by individualizing each of its
//! vertices in turn. Every leaf of this tree is a discrete coloring, read as a
//! relabeling; the leaf whose relabeled graph6 string is smallest is the
//! canonical form. The whole tree is explored, so the result depends only on
//! the isomorphism class of the (colored) input.

use serde::{Deserialize, Serialize};

use crate::graph::CubicGraph;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CanonicalForm {
    /// graph6 of the canonically relabeled graph.
    pub graph6: String,
    /// `permutation[v]` is the canonical label of input vertex `v`.
    pub permutation: Vec<usize>,
}

impl PartialOrd for CanonicalForm {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CanonicalForm {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.graph6.cmp(&other.graph6).then_with(|| self.permutation.cmp(&other.permutation))
    }
}

pub fn canonical_form(g: &CubicGraph) -> CanonicalForm {
    canonical_form_colored(g, &vec![0; g.order()])
}

/// Canonical form of `g` with an initial vertex coloring. Leaves respect the
/// color order: vertices of a smaller initial color get smaller labels.
pub fn canonical_form_colored(g: &CubicGraph, colors: &[u32]) -> CanonicalForm {
    let mut search = Search { g, best: None };
    let start = refine(g, colors.to_vec());
    search.descend(start);
    let (bytes, permutation) = search.best.expect("search tree has a leaf");
    CanonicalForm { graph6: String::from_utf8(bytes).unwrap(), permutation }
}

pub fn are_isomorphic(g1: &CubicGraph, g2: &CubicGraph) -> bool {
    g1.order() == g2.order() && g1.girth() == g2.girth() && canonical_form(g1).graph6 == canonical_form(g2).graph6
}

/// Orbit index of every vertex under the automorphism group, where the index
/// is the smallest vertex of the orbit. Two vertices share an orbit iff the
/// graph rooted at either has the same canonical form.
pub fn vertex_orbits(g: &CubicGraph) -> Vec<usize> {
    let n = g.order();
    let equitable = refine(g, vec![0; n]);
    let mut orbit = vec![usize::MAX; n];
    let mut keys: Vec<(u32, String, usize)> = Vec::new();
    for v in 0..n {
        let mut colors: Vec<u32> = equitable.iter().map(|&c| 2 * c + 1).collect();
        colors[v] -= 1;
        let key = canonical_form_colored(g, &colors).graph6;
        match keys.iter().find(|(c, k, _)| *c == equitable[v] && *k == key) {
            Some(&(_, _, rep)) => orbit[v] = rep,
            None => {
                orbit[v] = v;
                keys.push((equitable[v], key, v));
            }
        }
    }
    orbit
}

/// One vertex from each orbit, ascending.
pub fn orbit_representatives(g: &CubicGraph) -> Vec<usize> {
    vertex_orbits(g).into_iter().enumerate().filter(|&(v, o)| v == o).map(|(v, _)| v).collect()
}

struct Search<'g> {
    g: &'g CubicGraph,
    best: Option<(Vec<u8>, Vec<usize>)>,
}

impl Search<'_> {
    fn descend(&mut self, colors: Vec<u32>) {
        let n = colors.len();
        let mut sizes = vec![0usize; n];
        for &c in &colors {
            sizes[c as usize] += 1;
        }
        let Some(target) = (0..n).find(|&c| sizes[c] > 1) else {
            self.leaf(&colors);
            return;
        };
        let target = target as u32;
        for v in 0..n {
            if colors[v] != target {
                continue;
            }
            let split: Vec<u32> = colors
                .iter()
                .enumerate()
                .map(|(x, &c)| 2 * c + u32::from(c == target && x != v))
                .collect();
            self.descend(refine(self.g, split));
        }
    }

    fn leaf(&mut self, colors: &[u32]) {
        let perm: Vec<usize> = colors.iter().map(|&c| c as usize).collect();
        let bytes = relabeled_graph6(self.g, &perm);
        if self.best.as_ref().is_none_or(|(b, _)| bytes < *b) {
            self.best = Some((bytes, perm));
        }
    }
}

/// Refines to the coarsest equitable coloring finer than `colors`; the result
/// uses colors `0..cells`, ordered consistently with the input.
fn refine(g: &CubicGraph, mut colors: Vec<u32>) -> Vec<u32> {
    let n = g.order();
    let mut cells = rank(&mut colors);
    let mut sigs: Vec<(u32, [u32; 3], usize)> = Vec::with_capacity(n);
    loop {
        sigs.clear();
        for v in 0..n {
            let mut nb = g.neighbors(v).map(|w| colors[w]);
            nb.sort_unstable();
            sigs.push((colors[v], nb, v));
        }
        sigs.sort_unstable();
        let mut next = 0u32;
        for i in 0..n {
            if i > 0 && (sigs[i].0, sigs[i].1) != (sigs[i - 1].0, sigs[i - 1].1) {
                next += 1;
            }
            colors[sigs[i].2] = next;
        }
        let count = next as usize + 1;
        if count == cells {
            return colors;
        }
        cells = count;
    }
}

/// Replaces colors by their rank among the distinct values; returns the count.
fn rank(colors: &mut [u32]) -> usize {
    let mut distinct: Vec<u32> = colors.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    for c in colors.iter_mut() {
        *c = distinct.binary_search(c).unwrap() as u32;
    }
    distinct.len()
}

fn relabeled_graph6(g: &CubicGraph, perm: &[usize]) -> Vec<u8> {
    let n = g.order();
    let bits = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(4 + bits.div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let base = out.len();
    out.resize(base + bits.div_ceil(6), 0);
    for &(u, v) in g.edges() {
        let (i, j) = (perm[u].min(perm[v]), perm[u].max(perm[v]));
        let pos = j * (j - 1) / 2 + i;
        out[base + pos / 6] |= 1 << (5 - pos % 6);
    }
    for b in &mut out[base..] {
        *b += 63;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::*;

    #[test]
    fn leaf_bytes_match_graph6_writer() {
        let g = generalized_petersen(GeneralizedPetersenParams::new(40, 3).unwrap()).unwrap();
        let perm: Vec<usize> = (0..g.order()).rev().collect();
        let expected = to_graph6(&g.relabel(&perm).unwrap());
        assert_eq!(String::from_utf8(relabeled_graph6(&g, &perm)).unwrap(), expected);
    }

    #[test]
    fn certificate_reproduces_canonical_graph() {
        for (_, g) in small_cubic_corpus() {
            let cf = canonical_form(&g);
            assert_eq!(to_graph6(&g.relabel(&cf.permutation).unwrap()), cf.graph6);
        }
    }

    #[test]
    fn tutte_indexing_is_p92() {
        let p92 = generalized_petersen(GeneralizedPetersenParams::new(9, 2).unwrap()).unwrap();
        assert!(are_isomorphic(&tutte_p92(), &p92));
        assert_eq!(tutte_p92().girth(), p92.girth());
    }

    #[test]
    fn small_corpus_is_pairwise_distinct() {
        let corpus = small_cubic_corpus();
        for (i, (a, g)) in corpus.iter().enumerate() {
            for (b, h) in &corpus[i + 1..] {
                assert!(!are_isomorphic(g, h), "{a} vs {b}");
            }
            assert!(are_isomorphic(g, g));
        }
    }

    #[test]
    fn orbits_of_known_graphs() {
        let p92 = generalized_petersen(GeneralizedPetersenParams::new(9, 2).unwrap()).unwrap();
        assert_eq!(orbit_representatives(&p92), vec![0, 9]);
        assert_eq!(orbit_representatives(&petersen()), vec![0]);
        assert_eq!(orbit_representatives(&prism()), vec![0]);
        // pentagonal prism is vertex transitive, P(8,3) too
        assert_eq!(orbit_representatives(&mobius_kantor()), vec![0]);
        // GP(7,2): outer and inner rims are different orbits
        let g72 = generalized_petersen(GeneralizedPetersenParams::new(7, 2).unwrap()).unwrap();
        assert_eq!(orbit_representatives(&g72), vec![0, 7]);
    }
}

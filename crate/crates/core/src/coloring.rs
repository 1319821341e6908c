//! Proper 3-edge colorings of cubic graphs: exhaustive enumeration, counts,
//! unique-colorability and edge-Kempe chains.

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::graph::CubicGraph;

pub type Color = u8;

const UNSET: Color = u8::MAX;

/// The six permutations of `{0, 1, 2}`, in lexicographic order.
pub const COLOR_PERMUTATIONS: [[Color; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

/// A total map from edge identifiers to colors `0..3`, proper for the graph it
/// was built against.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeColoring {
    colors: Vec<Color>,
}

impl EdgeColoring {
    pub fn new(g: &CubicGraph, colors: Vec<Color>) -> Result<Self> {
        if colors.len() != g.size() {
            return domain(format!("coloring has {} entries, graph has {} edges", colors.len(), g.size()));
        }
        let c = EdgeColoring { colors };
        if let Some(v) = c.first_bad_vertex(g) {
            return domain(format!("coloring is not proper at vertex {v}"));
        }
        Ok(c)
    }

    pub(crate) fn from_raw(colors: Vec<Color>) -> Self {
        EdgeColoring { colors }
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    #[inline]
    pub fn color(&self, e: usize) -> Color {
        self.colors[e]
    }

    /// Direct palette check: every vertex sees all three colors.
    pub fn is_proper_for(&self, g: &CubicGraph) -> bool {
        self.colors.len() == g.size() && self.first_bad_vertex(g).is_none()
    }

    fn first_bad_vertex(&self, g: &CubicGraph) -> Option<usize> {
        (0..g.order()).find(|&v| {
            let mask = g.incident(v).iter().fold(0u8, |m, &e| m | 1u8.checked_shl(self.colors[e] as u32).unwrap_or(0));
            mask != 0b111
        })
    }

    /// Edges carrying color `c`, ascending.
    pub fn color_class(&self, c: Color) -> Vec<usize> {
        (0..self.colors.len()).filter(|&e| self.colors[e] == c).collect()
    }

    pub fn permuted(&self, perm: [Color; 3]) -> Self {
        EdgeColoring { colors: self.colors.iter().map(|&c| perm[c as usize]).collect() }
    }

    /// Colors renamed in order of first appearance along the edge identifiers.
    /// Two colorings induce the same partition iff their keys are equal.
    pub fn partition_key(&self) -> Vec<Color> {
        let mut map = [UNSET; 3];
        let mut next = 0;
        self.colors
            .iter()
            .map(|&c| {
                if map[c as usize] == UNSET {
                    map[c as usize] = next;
                    next += 1;
                }
                map[c as usize]
            })
            .collect()
    }

    /// Whether `other` is a color permutation of `self`.
    pub fn same_partition(&self, other: &EdgeColoring) -> bool {
        COLOR_PERMUTATIONS.iter().any(|&p| self.permuted(p) == *other)
    }

    /// `[{"edge": [u, v], "color": c}, ...]` in edge identifier order.
    pub fn to_json(&self, g: &CubicGraph) -> String {
        let entries: Vec<_> = g
            .edges()
            .iter()
            .zip(&self.colors)
            .map(|(&(u, v), &color)| ColoredEdge { edge: [u, v], color })
            .collect();
        serde_json::to_string(&entries).expect("colorings serialize")
    }

    pub fn from_json(g: &CubicGraph, text: &str) -> Result<Self> {
        let entries: Vec<ColoredEdge> =
            serde_json::from_str(text).map_err(|e| crate::Error::Domain(format!("coloring JSON: {e}")))?;
        if entries.len() != g.size() {
            return domain(format!("coloring lists {} edges, graph has {}", entries.len(), g.size()));
        }
        let mut colors = Vec::with_capacity(entries.len());
        for (e, entry) in entries.iter().enumerate() {
            let [u, v] = entry.edge;
            if g.edge(e) != (u.min(v), u.max(v)) {
                return domain(format!("entry {e} names edge {:?}, expected {:?}", entry.edge, g.edge(e)));
            }
            if entry.color > 2 {
                return domain(format!("entry {e} has color {}", entry.color));
            }
            colors.push(entry.color);
        }
        EdgeColoring::new(g, colors)
    }
}

#[derive(Serialize, Deserialize)]
struct ColoredEdge {
    edge: [usize; 2],
    color: Color,
}

/// Coloring counts under both conventions: `labeled` counts colorings as maps,
/// `partitions` counts them up to the six color permutations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringCount {
    pub labeled: u64,
    pub partitions: u64,
}

/// Edges in depth-first discovery order from vertex 0: the star of 0 comes
/// first, and each later edge touches an already discovered vertex whenever
/// the graph is connected.
fn dfs_edge_order(g: &CubicGraph) -> Vec<usize> {
    let n = g.order();
    let mut listed = vec![false; g.size()];
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(g.size());
    for root in 0..n {
        if seen[root] {
            continue;
        }
        let mut stack = vec![root];
        seen[root] = true;
        while let Some(v) = stack.pop() {
            for e in g.incident(v) {
                if !listed[e] {
                    listed[e] = true;
                    order.push(e);
                }
            }
            for w in g.neighbors(v).into_iter().rev() {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    order
}

/// Backtracking over edges with per-vertex palettes. Each assignment is
/// followed by unit propagation: an uncolored edge left with one free color
/// takes it, and an edge left with none fails the branch. Branching picks the
/// uncolored edge with the fewest free colors, earliest in depth-first order.
/// The star of vertex 0 is fixed to colors `0, 1, 2`, so every partition is
/// visited exactly once.
struct Search<'g> {
    g: &'g CubicGraph,
    order: Vec<usize>,
    used: Vec<u8>,
    colors: Vec<Color>,
    trail: Vec<usize>,
    queue: Vec<usize>,
}

impl<'g> Search<'g> {
    fn new(g: &'g CubicGraph) -> Self {
        Search {
            g,
            order: dfs_edge_order(g),
            used: vec![0; g.order()],
            colors: vec![UNSET; g.size()],
            trail: Vec::with_capacity(g.size()),
            queue: Vec::new(),
        }
    }

    #[inline]
    fn assign(&mut self, e: usize, c: Color) {
        let (u, v) = self.g.edge(e);
        self.colors[e] = c;
        self.used[u] |= 1 << c;
        self.used[v] |= 1 << c;
        self.trail.push(e);
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let e = self.trail.pop().unwrap();
            let (u, v) = self.g.edge(e);
            let c = self.colors[e];
            self.colors[e] = UNSET;
            self.used[u] &= !(1 << c);
            self.used[v] &= !(1 << c);
        }
    }

    #[inline]
    fn free(&self, e: usize) -> u8 {
        let (u, v) = self.g.edge(e);
        !(self.used[u] | self.used[v]) & 0b111
    }

    /// Assigns `c` to `e` and propagates forced colors. Returns `false` on a
    /// contradiction; the caller undoes the trail either way.
    fn assign_and_propagate(&mut self, e: usize, c: Color) -> bool {
        self.assign(e, c);
        self.queue.clear();
        self.queue.push(e);
        while let Some(e) = self.queue.pop() {
            let (u, v) = self.g.edge(e);
            for x in [u, v] {
                for f in self.g.incident(x) {
                    if self.colors[f] != UNSET {
                        continue;
                    }
                    match self.free(f) {
                        0 => return false,
                        m if m.count_ones() == 1 => {
                            self.assign(f, m.trailing_zeros() as Color);
                            self.queue.push(f);
                        }
                        _ => {}
                    }
                }
            }
        }
        true
    }

    fn pick(&self) -> Option<usize> {
        let mut best: Option<(u32, usize)> = None;
        for &e in &self.order {
            if self.colors[e] != UNSET {
                continue;
            }
            let k = self.free(e).count_ones();
            if best.is_none_or(|(b, _)| k < b) {
                best = Some((k, e));
                if k <= 1 {
                    break;
                }
            }
        }
        best.map(|(_, e)| e)
    }

    /// Calls `visit` on every completion; stops as soon as it returns `false`.
    fn run(&mut self, visit: &mut dyn FnMut(&[Color]) -> bool) -> bool {
        let Some(e) = self.pick() else {
            return visit(&self.colors);
        };
        let free = self.free(e);
        for c in 0..3 {
            if free & (1 << c) == 0 {
                continue;
            }
            let mark = self.trail.len();
            let keep_going = !self.assign_and_propagate(e, c) || self.run(visit);
            self.undo_to(mark);
            if !keep_going {
                return false;
            }
        }
        true
    }

    fn start(&mut self, visit: &mut dyn FnMut(&[Color]) -> bool) {
        let mut ok = true;
        for (c, e) in self.g.incident(0).into_iter().enumerate() {
            if self.colors[e] == UNSET && !self.assign_and_propagate(e, c as Color) {
                ok = false;
                break;
            }
        }
        if ok {
            self.run(visit);
        }
        self.undo_to(0);
    }
}

/// Colorings with the star of vertex 0 colored `0, 1, 2`: one representative
/// per partition, in search order.
pub fn partition_representatives(g: &CubicGraph) -> Vec<EdgeColoring> {
    let mut out = Vec::new();
    Search::new(g).start(&mut |c| {
        out.push(EdgeColoring::from_raw(c.to_vec()));
        true
    });
    out
}

/// All labeled proper 3-edge colorings, sorted by color vector.
pub fn enumerate_edge_colorings(g: &CubicGraph) -> Vec<EdgeColoring> {
    let mut all: Vec<_> = partition_representatives(g)
        .iter()
        .flat_map(|rep| COLOR_PERMUTATIONS.iter().map(move |&p| rep.permuted(p)))
        .collect();
    all.sort();
    all
}

fn require_connected(g: &CubicGraph) -> Result<()> {
    if g.is_connected() {
        Ok(())
    } else {
        domain("coloring counts are defined for connected graphs only")
    }
}

pub fn count_colorings(g: &CubicGraph) -> Result<ColoringCount> {
    require_connected(g)?;
    let mut partitions = 0u64;
    Search::new(g).start(&mut |_| {
        partitions += 1;
        true
    });
    Ok(ColoringCount { labeled: 6 * partitions, partitions })
}

/// Counts partitions but stops once `limit` have been found.
pub fn count_partitions_up_to(g: &CubicGraph, limit: u64) -> Result<u64> {
    require_connected(g)?;
    let mut found = 0u64;
    if limit > 0 {
        Search::new(g).start(&mut |_| {
            found += 1;
            found < limit
        });
    }
    Ok(found)
}

/// True iff the graph has exactly one coloring up to color permutation.
/// Stops at the second partition.
pub fn is_uniquely_3_edge_colorable(g: &CubicGraph) -> Result<bool> {
    Ok(count_partitions_up_to(g, 2)? == 1)
}

/// A two-colored cycle, edges listed in walk order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KempeChain {
    pair: (Color, Color),
    edges: Vec<usize>,
}

impl KempeChain {
    pub fn new(pair: (Color, Color), edges: Vec<usize>) -> Self {
        KempeChain { pair, edges }
    }

    pub fn pair(&self) -> (Color, Color) {
        self.pair
    }

    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Vertices in walk order, starting at the vertex shared by the last and
    /// first edges.
    pub fn vertices(&self, g: &CubicGraph) -> Vec<usize> {
        let Some(&first) = self.edges.first() else { return Vec::new() };
        let last = *self.edges.last().unwrap();
        let (a, b) = g.edge(first);
        let (c, d) = g.edge(last);
        let mut v = if a == c || a == d { a } else { b };
        let mut out = Vec::with_capacity(self.edges.len());
        for &e in &self.edges {
            out.push(v);
            v = g.other_end(e, v);
        }
        out
    }
}

fn check_pair(pair: (Color, Color)) -> Result<()> {
    if pair.0 > 2 || pair.1 > 2 || pair.0 == pair.1 {
        return domain(format!("invalid color pair {pair:?}"));
    }
    Ok(())
}

/// The cycles formed by two color classes. Each vertex lies on exactly one.
pub fn kempe_cycles(g: &CubicGraph, c: &EdgeColoring, pair: (Color, Color)) -> Result<Vec<KempeChain>> {
    check_pair(pair)?;
    if !c.is_proper_for(g) {
        return domain("coloring is not proper for this graph");
    }
    let edge_of = |v: usize, color: Color| g.incident(v).into_iter().find(|&e| c.color(e) == color).unwrap();
    let mut seen = vec![false; g.order()];
    let mut chains = Vec::new();
    for start in 0..g.order() {
        if seen[start] {
            continue;
        }
        let mut edges = Vec::new();
        let (mut v, mut color) = (start, pair.0);
        loop {
            seen[v] = true;
            let e = edge_of(v, color);
            edges.push(e);
            v = g.other_end(e, v);
            color = if color == pair.0 { pair.1 } else { pair.0 };
            if v == start {
                break;
            }
        }
        chains.push(KempeChain { pair, edges });
    }
    Ok(chains)
}

/// Exchanges the two colors of `chain` along it.
pub fn kempe_switch(g: &CubicGraph, c: &EdgeColoring, chain: &KempeChain) -> Result<EdgeColoring> {
    check_pair(chain.pair)?;
    if !c.is_proper_for(g) {
        return domain("coloring is not proper for this graph");
    }
    let edges = &chain.edges;
    if edges.is_empty() || edges.len() % 2 == 1 {
        return domain("a Kempe chain has a positive even number of edges");
    }
    let mut on_chain = vec![false; g.size()];
    for &e in edges {
        if e >= g.size() || std::mem::replace(&mut on_chain[e], true) {
            return domain(format!("chain repeats or misnames edge {e}"));
        }
        let col = c.color(e);
        if col != chain.pair.0 && col != chain.pair.1 {
            return domain(format!("edge {e} has color {col}, outside the chain's pair"));
        }
    }
    for i in 0..edges.len() {
        let (e, f) = (edges[i], edges[(i + 1) % edges.len()]);
        let (a, b) = g.edge(e);
        let (x, y) = g.edge(f);
        let shares = a == x || a == y || b == x || b == y;
        if !shares || c.color(e) == c.color(f) {
            return domain(format!("edges {e} and {f} are not consecutive in an alternating cycle"));
        }
    }
    // closed alternating walk without repeated edges: every vertex on it has
    // both chain colors on the walk, so it is a whole component
    let start = chain.vertices(g)[0];
    let mut v = start;
    for &e in edges {
        let (a, b) = g.edge(e);
        if v != a && v != b {
            return domain("chain is not a closed walk");
        }
        v = g.other_end(e, v);
    }
    if v != start {
        return domain("chain is not a closed walk");
    }
    let mut colors = c.colors.clone();
    for &e in edges {
        colors[e] = if colors[e] == chain.pair.0 { chain.pair.1 } else { chain.pair.0 };
    }
    Ok(EdgeColoring { colors })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::*;

    /// All 3^|E| assignments filtered by the palette check.
    fn naive_colorings(g: &CubicGraph) -> Vec<EdgeColoring> {
        let m = g.size();
        let mut out = Vec::new();
        for code in 0..3u64.pow(m as u32) {
            let mut x = code;
            let colors: Vec<Color> = (0..m)
                .map(|_| {
                    let c = (x % 3) as Color;
                    x /= 3;
                    c
                })
                .collect();
            let c = EdgeColoring::from_raw(colors);
            if c.is_proper_for(g) {
                out.push(c);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn naive_counts_for_small_graphs() {
        assert_eq!(naive_colorings(&complete_k4()).len(), 6);
        assert_eq!(naive_colorings(&complete_bipartite_k33()).len(), 12);
        assert_eq!(naive_colorings(&prism()).len(), 6);
    }

    #[test]
    fn enumerator_matches_naive_oracle_up_to_eight_vertices() {
        for (name, g) in small_cubic_corpus().into_iter().filter(|(_, g)| g.order() <= 8) {
            assert_eq!(enumerate_edge_colorings(&g), naive_colorings(&g), "{name}");
        }
    }

    #[test]
    fn petersen_is_class_two() {
        let g = petersen();
        assert!(enumerate_edge_colorings(&g).is_empty());
        assert_eq!(count_colorings(&g).unwrap(), ColoringCount { labeled: 0, partitions: 0 });
        assert!(!is_uniquely_3_edge_colorable(&g).unwrap());
    }

    #[test]
    fn p92_and_prism_are_unique() {
        let p92 = generalized_petersen(GeneralizedPetersenParams::new(9, 2).unwrap()).unwrap();
        assert_eq!(count_colorings(&p92).unwrap(), ColoringCount { labeled: 6, partitions: 1 });
        assert_eq!(count_colorings(&prism()).unwrap(), ColoringCount { labeled: 6, partitions: 1 });
        assert!(is_uniquely_3_edge_colorable(&p92).unwrap());
    }

    #[test]
    fn disconnected_input_is_rejected() {
        let two_k4 = CubicGraph::from_edges(
            8,
            [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (4, 7), (5, 6), (5, 7), (6, 7)],
        )
        .unwrap();
        assert!(count_colorings(&two_k4).is_err());
        assert!(is_uniquely_3_edge_colorable(&two_k4).is_err());
        // enumeration is still defined: 6 * 6 labeled colorings
        assert_eq!(enumerate_edge_colorings(&two_k4).len(), 36);
    }

    #[test]
    fn color_classes_are_perfect_matchings() {
        let g = complete_bipartite_k33();
        for c in enumerate_edge_colorings(&g) {
            for col in 0..3 {
                let class = c.color_class(col);
                assert_eq!(class.len(), g.order() / 2);
                let mut hit = vec![false; g.order()];
                for e in class {
                    let (u, v) = g.edge(e);
                    assert!(!hit[u] && !hit[v]);
                    hit[u] = true;
                    hit[v] = true;
                }
            }
        }
    }

    #[test]
    fn partition_key_agrees_with_permutation_test() {
        let g = cube();
        let all = enumerate_edge_colorings(&g);
        for a in &all {
            for b in &all {
                assert_eq!(a.partition_key() == b.partition_key(), a.same_partition(b));
            }
        }
    }

    #[test]
    fn k4_chains_are_four_cycles() {
        let g = complete_k4();
        for c in enumerate_edge_colorings(&g) {
            for pair in [(0, 1), (0, 2), (1, 2)] {
                let chains = kempe_cycles(&g, &c, pair).unwrap();
                assert_eq!(chains.len(), 1);
                assert_eq!(chains[0].len(), 4);
            }
        }
    }

    #[test]
    fn switch_is_an_involution() {
        let g = cube();
        let c = &enumerate_edge_colorings(&g)[0];
        for chain in kempe_cycles(&g, c, (0, 2)).unwrap() {
            let once = kempe_switch(&g, c, &chain).unwrap();
            assert!(once.is_proper_for(&g));
            let twice = kempe_switch(&g, &once, &chain).unwrap();
            assert_eq!(&twice, c);
        }
    }

    #[test]
    fn switch_rejects_non_chains() {
        let g = cube();
        let c = &enumerate_edge_colorings(&g)[0];
        let chain = &kempe_cycles(&g, c, (0, 1)).unwrap()[0];
        let truncated = KempeChain::new(chain.pair(), chain.edges()[..2].to_vec());
        assert!(kempe_switch(&g, c, &truncated).is_err());
        let wrong_pair = KempeChain::new((0, 2), chain.edges().to_vec());
        assert!(kempe_switch(&g, c, &wrong_pair).is_err());
        assert!(kempe_cycles(&g, c, (1, 1)).is_err());
    }

    #[test]
    fn json_roundtrip() {
        let g = complete_k4();
        let c = &enumerate_edge_colorings(&g)[3];
        let text = c.to_json(&g);
        assert!(text.starts_with(r#"[{"edge":[0,1],"color":"#));
        assert_eq!(&EdgeColoring::from_json(&g, &text).unwrap(), c);
        let bad = text.replacen(r#""color":0"#, r#""color":1"#, 1);
        assert!(EdgeColoring::from_json(&g, &bad).is_err());
    }
}

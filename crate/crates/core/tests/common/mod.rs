//! Shared fixtures: brute-force oracles, a pool of test graphs and the
//! randomized invariants run by both the property tests and the acceptance
//! harness.

#![allow(dead_code)]

use cubic3ec::coloring::{enumerate_edge_colorings, kempe_cycles, kempe_switch, count_colorings, Color};
use cubic3ec::graph::*;
use cubic3ec::product::{canonical_form, are_isomorphic, star_compose, star_decompose, StarProductSpec};
use cubic3ec::topology::{face_trace, EmbeddingScheme};
use cubic3ec::CubicGraph;
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

pub fn gp(m: usize, k: usize) -> CubicGraph {
    generalized_petersen(GeneralizedPetersenParams::new(m, k).unwrap()).unwrap()
}

/// Every proper coloring as a color vector, found by trying all `3^E`
/// assignments.
pub fn naive_colorings(g: &CubicGraph) -> Vec<Vec<Color>> {
    let m = g.size();
    let mut colors = vec![0 as Color; m];
    let mut out = Vec::new();
    loop {
        let proper = (0..g.order()).all(|v| {
            let [a, b, c] = g.incident(v).map(|e| colors[e]);
            a != b && b != c && a != c
        });
        if proper {
            out.push(colors.clone());
        }
        let mut i = 0;
        while i < m && colors[i] == 2 {
            colors[i] = 0;
            i += 1;
        }
        if i == m {
            break;
        }
        colors[i] += 1;
    }
    out.sort();
    out
}

/// Hamilton cycles counted over all vertex orderings starting at 0, each
/// cycle seen once per direction.
pub fn naive_hamilton_count(g: &CubicGraph) -> u64 {
    fn go(g: &CubicGraph, path: &mut Vec<usize>, on: &mut [bool], count: &mut u64) {
        let n = g.order();
        if path.len() == n {
            if g.is_adjacent(path[n - 1], path[0]) {
                *count += 1;
            }
            return;
        }
        for w in 0..n {
            if !on[w] && g.is_adjacent(path[path.len() - 1], w) {
                on[w] = true;
                path.push(w);
                go(g, path, on, count);
                path.pop();
                on[w] = false;
            }
        }
    }
    let mut on = vec![false; g.order()];
    on[0] = true;
    let mut count = 0;
    go(g, &mut vec![0], &mut on, &mut count);
    count / 2
}

/// Graphs the randomized checks draw from.
pub fn pool() -> Vec<CubicGraph> {
    let mut out: Vec<CubicGraph> = small_cubic_corpus().into_iter().map(|(_, g)| g).collect();
    out.extend([mobius_kantor(), gp(7, 2), gp(8, 3), gp(9, 2), tutte_p92()]);
    out.push(star_compose(&prism(), &complete_bipartite_k33(), StarProductSpec::new(1, 4, 3)).unwrap().graph);
    out
}

/// Pool graphs with at most 12 vertices, cheap enough for coloring counts
/// and products.
pub fn small_pool() -> Vec<CubicGraph> {
    pool().into_iter().filter(|g| g.order() <= 12).collect()
}

pub fn relabeled() -> impl Strategy<Value = (CubicGraph, CubicGraph)> {
    let graphs = pool();
    (0..graphs.len()).prop_flat_map(move |i| {
        let g = graphs[i].clone();
        let perm: Vec<usize> = (0..g.order()).collect();
        (Just(g), Just(perm).prop_shuffle())
            .prop_map(|(g, perm)| {
                let h = g.relabel(&perm).unwrap();
                (g, h)
            })
    })
}

pub fn small_relabeled() -> impl Strategy<Value = (CubicGraph, CubicGraph)> {
    let graphs = small_pool();
    (0..graphs.len()).prop_flat_map(move |i| {
        let g = graphs[i].clone();
        let perm: Vec<usize> = (0..g.order()).collect();
        (Just(g), Just(perm).prop_shuffle()).prop_map(|(g, perm)| {
            let h = g.relabel(&perm).unwrap();
            (g, h)
        })
    })
}

pub fn random_scheme() -> impl Strategy<Value = (CubicGraph, EmbeddingScheme)> {
    let graphs = pool();
    (0..graphs.len()).prop_flat_map(move |i| {
        let g = graphs[i].clone();
        let (n, m) = (g.order(), g.size());
        (Just(g), prop::collection::vec(any::<bool>(), n), prop::collection::vec(any::<bool>(), m)).prop_map(
            |(g, flips, negs)| {
                let rotation = (0..g.order())
                    .map(|v| {
                        let r = g.incident(v);
                        if flips[v] { [r[0], r[2], r[1]] } else { r }
                    })
                    .collect();
                let signs = negs.iter().map(|&b| if b { -1 } else { 1 }).collect();
                (g, EmbeddingScheme { rotation, signs })
            },
        )
    })
}

pub fn spec_pair() -> impl Strategy<Value = (CubicGraph, CubicGraph, StarProductSpec)> {
    let graphs = small_pool();
    let k = graphs.len();
    (0..k, 0..k, any::<usize>(), any::<usize>(), 0..6u8).prop_map(move |(i, j, a, b, perm)| {
        let (g1, g2) = (graphs[i].clone(), graphs[j].clone());
        let spec = StarProductSpec::new(a % g1.order(), b % g2.order(), perm);
        (g1, g2, spec)
    })
}

pub fn prop_girth_invariant((g, h): (CubicGraph, CubicGraph)) -> Result<(), TestCaseError> {
    prop_assert_eq!(g.girth(), h.girth());
    prop_assert_eq!(g.is_triangle_free(), h.is_triangle_free());
    Ok(())
}

/// Enumerated colorings are proper, and the counts do not depend on labels.
pub fn prop_colorings_proper((g, h): (CubicGraph, CubicGraph)) -> Result<(), TestCaseError> {
    let all = enumerate_edge_colorings(&h);
    for c in &all {
        prop_assert!(c.is_proper_for(&h));
    }
    let (a, b) = (count_colorings(&g).unwrap(), count_colorings(&h).unwrap());
    prop_assert_eq!(a, b);
    prop_assert_eq!(all.len() as u64, b.labeled);
    prop_assert_eq!(b.labeled, 6 * b.partitions);
    Ok(())
}

/// For every color pair the Kempe chains are even alternating cycles that
/// partition the vertex set, and switching any of them stays proper.
pub fn prop_kempe_cover((_, h): (CubicGraph, CubicGraph), pick: usize) -> Result<(), TestCaseError> {
    let all = enumerate_edge_colorings(&h);
    if all.is_empty() {
        return Ok(());
    }
    let c = &all[pick % all.len()];
    for pair in [(0, 1), (0, 2), (1, 2)] {
        let chains = kempe_cycles(&h, c, pair).unwrap();
        let mut seen = vec![0; h.order()];
        for ch in &chains {
            prop_assert!(ch.len() % 2 == 0 && ch.len() >= 4);
            for v in ch.vertices(&h) {
                seen[v] += 1;
            }
            let switched = kempe_switch(&h, c, ch).unwrap();
            prop_assert!(switched.is_proper_for(&h));
        }
        prop_assert!(seen.iter().all(|&s| s == 1), "{:?}", seen);
    }
    Ok(())
}

/// Every edge side is traversed once and Euler's formula holds.
pub fn prop_face_trace((g, s): (CubicGraph, EmbeddingScheme)) -> Result<(), TestCaseError> {
    let r = face_trace(&g, &s).unwrap();
    let mut sides = vec![0; g.size()];
    for f in &r.faces {
        prop_assert!(!f.is_empty());
        for &(v, e) in f {
            let (a, b) = g.edge(e);
            prop_assert!(v == a || v == b);
            sides[e] += 1;
        }
    }
    prop_assert!(sides.iter().all(|&k| k == 2));
    let chi = g.order() as i64 - g.size() as i64 + r.faces.len() as i64;
    prop_assert_eq!(chi, 2 - r.euler_genus as i64);
    prop_assert_eq!(r.orientable, cycle_signs_positive(&g, &s.signs));
    if s.signs.iter().all(|&x| x == 1) {
        prop_assert!(r.orientable);
    }
    if r.orientable {
        prop_assert!(r.euler_genus.is_multiple_of(2));
    }
    Ok(())
}

/// Every fundamental cycle of a depth-first tree has sign product `+1`.
fn cycle_signs_positive(g: &CubicGraph, signs: &[i8]) -> bool {
    let mut to_root = vec![0i8; g.order()];
    let mut stack = vec![0];
    to_root[0] = 1;
    while let Some(v) = stack.pop() {
        for e in g.incident(v) {
            let w = g.other_end(e, v);
            if to_root[w] == 0 {
                to_root[w] = to_root[v] * signs[e];
                stack.push(w);
            }
        }
    }
    g.edges().iter().enumerate().all(|(e, &(u, v))| to_root[u] * to_root[v] * signs[e] == 1)
}

pub fn prop_roundtrip((g1, g2, spec): (CubicGraph, CubicGraph, StarProductSpec)) -> Result<(), TestCaseError> {
    let sp = star_compose(&g1, &g2, spec).unwrap();
    prop_assert!(sp.cut.is_nontrivial());
    let (x, y) = star_decompose(&sp.graph, &sp.cut).unwrap();
    prop_assert!(are_isomorphic(&x, &g1));
    prop_assert!(are_isomorphic(&y, &g2));
    Ok(())
}

pub fn prop_canonical((g, h): (CubicGraph, CubicGraph)) -> Result<(), TestCaseError> {
    let (a, b) = (canonical_form(&g), canonical_form(&h));
    prop_assert_eq!(&a.graph6, &b.graph6);
    prop_assert_eq!(to_graph6(&g.relabel(&a.permutation).unwrap()), a.graph6);
    Ok(())
}

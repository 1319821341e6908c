//! Embeddings of star products from embeddings of the factors.
//!
//! Deleting `v1` opens a small disk around it; the same for `v2`. Gluing the
//! two boundary circles with a tube and running the three matching edges
//! along the tube gives an embedding of the product with
//! `F = F1 + F2 - 3`, hence Euler genus `eg1 + eg2`. The tube only works
//! when the matching respects the cyclic orders at `v1` and `v2` (reversed
//! across the tube); mirroring the second embedding fixes the other half of
//! the bijections.

use super::embedding::{face_trace, EmbeddingScheme};
use crate::error::{Error, Result};
use crate::graph::CubicGraph;
use crate::product::{star_compose, FamilyMember, StarProductSpec};

/// Switches at the neighbours of `v` so that every edge at `v` has sign `+1`.
fn positive_at(g: &CubicGraph, scheme: &EmbeddingScheme, v: usize) -> EmbeddingScheme {
    let mut s = scheme.clone();
    for e in g.incident(v) {
        if scheme.signs[e] < 0 {
            s.switch_at(g, g.other_end(e, v));
        }
    }
    s
}

/// An embedding of `star_compose(g1, g2, spec)` whose Euler genus is the sum
/// of those of `e1` and `e2`, verified by face tracing.
pub fn merge_embeddings(
    g1: &CubicGraph,
    e1: &EmbeddingScheme,
    g2: &CubicGraph,
    e2: &EmbeddingScheme,
    spec: StarProductSpec,
) -> Result<EmbeddingScheme> {
    let eg1 = face_trace(g1, e1)?.euler_genus;
    let eg2 = face_trace(g2, e2)?.euler_genus;
    let product = star_compose(g1, g2, spec)?.graph;
    let matching = spec.matching(g1, g2)?;
    let e1 = positive_at(g1, e1, spec.v1);
    let e2 = positive_at(g2, e2, spec.v2);

    // new edge ids, following star_compose's edge order
    let s1 = g1.size() - 3;
    let s2 = g2.size() - 3;
    let mut id1 = vec![usize::MAX; g1.size()];
    let mut id2 = vec![usize::MAX; g2.size()];
    let mut next = 0;
    for (e, &(u, v)) in g1.edges().iter().enumerate() {
        if u != spec.v1 && v != spec.v1 {
            id1[e] = next;
            next += 1;
        }
    }
    for (e, &(u, v)) in g2.edges().iter().enumerate() {
        if u != spec.v2 && v != spec.v2 {
            id2[e] = next;
            next += 1;
        }
    }
    for (i, &(a, b)) in matching.iter().enumerate() {
        id1[g1.edge_between(a, spec.v1).unwrap()] = s1 + s2 + i;
        id2[g2.edge_between(b, spec.v2).unwrap()] = s1 + s2 + i;
    }

    let build = |second: &EmbeddingScheme| -> EmbeddingScheme {
        let mut rotation = Vec::with_capacity(product.order());
        rotation.extend((0..g1.order()).filter(|&x| x != spec.v1).map(|x| e1.rotation[x].map(|f| id1[f])));
        rotation.extend((0..g2.order()).filter(|&y| y != spec.v2).map(|y| second.rotation[y].map(|f| id2[f])));
        let mut signs = vec![1i8; product.size()];
        for e in 0..g1.size() {
            if id1[e] < s1 + s2 {
                signs[id1[e]] = e1.signs[e];
            }
        }
        for e in 0..g2.size() {
            if id2[e] < s1 + s2 {
                signs[id2[e]] = second.signs[e];
            }
        }
        EmbeddingScheme { rotation, signs }
    };

    for second in [e2.clone(), e2.mirrored()] {
        let merged = build(&second);
        if face_trace(&product, &merged)?.euler_genus == eg1 + eg2 {
            return Ok(merged);
        }
    }
    Err(Error::IncompatibleSpec(format!("{spec:?}: neither alignment of the second embedding is additive")))
}

/// Follows a member's build trace, merging a copy of `base_scheme` (an
/// embedding of `P(9,2)`) at every step.
pub fn member_embedding(member: &FamilyMember, base_scheme: &EmbeddingScheme) -> Result<EmbeddingScheme> {
    let base = crate::product::base_graph();
    let mut graph = base.clone();
    let mut scheme = base_scheme.clone();
    for &spec in &member.trace {
        scheme = merge_embeddings(&graph, &scheme, &base, base_scheme, spec)?;
        graph = star_compose(&graph, &base, spec)?.graph;
    }
    debug_assert_eq!(graph, member.graph);
    Ok(scheme)
}

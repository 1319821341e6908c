//! The demo's three operations as plain functions returning JSON, so they
//! can be tested natively.

use cubic3ec::coloring::{count_colorings, kempe_cycles, kempe_switch, partition_representatives, EdgeColoring};
use cubic3ec::graph::*;
use cubic3ec::hamilton::count_hamilton_cycles;
use cubic3ec::product::{star_compose, StarProductSpec};
use cubic3ec::{CubicGraph, Error, Result};
use serde_json::{json, Value};

/// Largest `m` accepted for `P(m,k)`; Hamilton enumeration grows quickly.
pub const MAX_M: usize = 20;
/// Largest factor accepted by the star product view.
pub const MAX_FACTOR_ORDER: usize = 40;

const PALETTE: [&str; 3] = ["#d62728", "#1f77b4", "#2ca02c"];
const SIZE: f64 = 480.0;

fn point(cx: f64, cy: f64, r: f64, i: usize, of: usize) -> (f64, f64) {
    let t = std::f64::consts::TAU * i as f64 / of as f64 - std::f64::consts::FRAC_PI_2;
    (cx + r * t.cos(), cy + r * t.sin())
}

/// `m` if `g` carries the labeling of `P(m,k)`: outer cycle on `0..m` and
/// spokes `i -- m+i`.
fn petersen_outer(g: &CubicGraph) -> Option<usize> {
    let m = g.order() / 2;
    let ok = m >= 3 && (0..m).all(|i| g.is_adjacent(i, (i + 1) % m) && g.is_adjacent(i, m + i));
    ok.then_some(m)
}

/// Concentric circles for generalized Petersen labelings, one circle otherwise.
fn layout(g: &CubicGraph) -> Vec<(f64, f64)> {
    let c = SIZE / 2.0;
    match petersen_outer(g) {
        Some(m) => (0..2 * m).map(|v| if v < m { point(c, c, 0.42 * SIZE, v, m) } else { point(c, c, 0.24 * SIZE, v - m, m) }).collect(),
        None => (0..g.order()).map(|v| point(c, c, 0.42 * SIZE, v, g.order())).collect(),
    }
}

/// Two circles side by side: the first `left` vertices, then the rest.
fn split_layout(n: usize, left: usize) -> Vec<(f64, f64)> {
    let r = 0.2 * SIZE;
    (0..n)
        .map(|v| if v < left { point(0.25 * SIZE, SIZE / 2.0, r, v, left) } else { point(0.75 * SIZE, SIZE / 2.0, r, v - left, n - left) })
        .collect()
}

/// Edges stroked by color; edges in `highlight` (if any) drawn heavy and the
/// rest faded.
fn svg(g: &CubicGraph, pos: &[(f64, f64)], colors: Option<&[u8]>, highlight: Option<&[usize]>) -> String {
    let mut on = vec![highlight.is_none(); g.size()];
    for &e in highlight.unwrap_or(&[]) {
        on[e] = true;
    }
    let mut s = format!(r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {SIZE} {SIZE}" width="{SIZE}" height="{SIZE}">"#);
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        let stroke = colors.map_or("#555", |c| PALETTE[c[e] as usize]);
        let (width, opacity) = match (highlight.is_some(), on[e]) {
            (true, true) => (4.5, 1.0),
            (true, false) => (1.5, 0.25),
            _ => (2.5, 1.0),
        };
        let ((x1, y1), (x2, y2)) = (pos[a], pos[b]);
        s += &format!(
            r#"<line x1="{x1:.1}" y1="{y1:.1}" x2="{x2:.1}" y2="{y2:.1}" stroke="{stroke}" stroke-width="{width}" stroke-opacity="{opacity}"><title>edge {e}: {a}-{b}</title></line>"#
        );
    }
    for (v, &(x, y)) in pos.iter().enumerate() {
        s += &format!(r##"<circle cx="{x:.1}" cy="{y:.1}" r="5" fill="#fff" stroke="#222"><title>{v}</title></circle>"##);
    }
    s + "</svg>"
}

fn first_coloring(g: &CubicGraph) -> Option<EdgeColoring> {
    partition_representatives(g).into_iter().next()
}

/// `P(m,k)` with counts and one coloring drawn.
pub fn petersen_view(m: usize, k: usize) -> Result<Value> {
    if m > MAX_M {
        return Err(Error::Param(format!("m = {m} is above the demo limit of {MAX_M}")));
    }
    // Edge ids as graph6 decoding assigns them, so colors survive the round trip.
    let g = from_graph6(&to_graph6(&generalized_petersen(GeneralizedPetersenParams::new(m, k)?)?))?;
    let count = count_colorings(&g)?;
    let coloring = first_coloring(&g);
    let colors = coloring.as_ref().map(|c| c.colors().to_vec());
    Ok(json!({
        "graph6": to_graph6(&g),
        "order": g.order(),
        "girth": g.girth(),
        "triangleFree": g.is_triangle_free(),
        "labeled": count.labeled,
        "partitions": count.partitions,
        "unique": count.partitions == 1,
        "hamiltonCycles": count_hamilton_cycles(&g),
        "colors": colors,
        "svg": svg(&g, &layout(&g), colors.as_deref(), None),
    }))
}

/// The Kempe cycles of one color pair. If `switch` names a cycle, its colors
/// are exchanged first, and the result reports whether that changed the
/// color partition.
pub fn kempe_view(graph6: &str, colors: &[u8], pair: (u8, u8), switch: Option<usize>) -> Result<Value> {
    let g = from_graph6(graph6)?;
    let before = EdgeColoring::new(&g, colors.to_vec())?;
    let mut after = before.clone();
    if let Some(i) = switch {
        let chains = kempe_cycles(&g, &before, pair)?;
        let chain = chains.get(i).ok_or_else(|| Error::Param(format!("no Kempe cycle {i}; there are {}", chains.len())))?;
        after = kempe_switch(&g, &before, chain)?;
    }
    let chains = kempe_cycles(&g, &after, pair)?;
    let hamiltonian = chains.len() == 1;
    let longest = chains.iter().max_by_key(|c| c.len()).map(|c| c.edges().to_vec()).unwrap_or_default();
    Ok(json!({
        "colors": after.colors(),
        "samePartition": after.same_partition(&before),
        "hamiltonian": hamiltonian,
        "cycles": chains.iter().map(|c| json!({ "length": c.len(), "vertices": c.vertices(&g) })).collect::<Vec<_>>(),
        "svg": svg(&g, &layout(&g), Some(after.colors()), Some(&longest)),
    }))
}

/// Factors offered by the product view: the small corpus and `P(9,2)`.
pub fn factor(name: &str) -> Result<CubicGraph> {
    if name == "P(9,2)" {
        return generalized_petersen(GeneralizedPetersenParams::new(9, 2)?);
    }
    small_cubic_corpus()
        .into_iter()
        .find(|(n, _)| *n == name)
        .map(|(_, g)| g)
        .ok_or_else(|| Error::Param(format!("unknown factor '{name}'")))
}

pub fn factor_names() -> Vec<&'static str> {
    small_cubic_corpus().into_iter().map(|(n, _)| n).chain(["P(9,2)"]).collect()
}

/// The star product of two named factors and the partition counts of all
/// three graphs.
pub fn star_view(g1: &str, g2: &str, v1: usize, v2: usize, perm: u8) -> Result<Value> {
    let (a, b) = (factor(g1)?, factor(g2)?);
    if a.order().max(b.order()) > MAX_FACTOR_ORDER {
        return Err(Error::Param(format!("factors are limited to {MAX_FACTOR_ORDER} vertices")));
    }
    let product = star_compose(&a, &b, StarProductSpec::new(v1, v2, perm))?;
    let p = &product.graph;
    let (pa, pb, pp) = (count_colorings(&a)?.partitions, count_colorings(&b)?.partitions, count_colorings(p)?.partitions);
    let coloring = first_coloring(p);
    let colors = coloring.as_ref().map(|c| c.colors());
    let cut = product.cut.edges();
    Ok(json!({
        "order": p.order(),
        "graph6": to_graph6(p),
        "partitions": [pa, pb, pp],
        "multiplies": pa * pb == pp,
        "cut": cut,
        "svg": svg(p, &split_layout(p.order(), a.order() - 1), colors, Some(&cut)),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn petersen_labeling_is_detected() {
        let g = generalized_petersen(GeneralizedPetersenParams::new(9, 2).unwrap()).unwrap();
        assert_eq!(petersen_outer(&g), Some(9));
        assert_eq!(petersen_outer(&complete_bipartite_k33()), None);
    }

    #[test]
    fn svg_has_every_edge_and_vertex() {
        let g = petersen();
        let s = svg(&g, &layout(&g), None, Some(&[0, 1]));
        assert_eq!(s.matches("<line").count(), 15);
        assert_eq!(s.matches("<circle").count(), 10);
        assert_eq!(s.matches(r#"stroke-opacity="1""#).count(), 2);
    }

    #[test]
    fn split_layout_separates_blocks() {
        let pos = split_layout(10, 4);
        assert!(pos[..4].iter().all(|p| p.0 < SIZE / 2.0));
        assert!(pos[4..].iter().all(|p| p.0 > SIZE / 2.0));
    }
}

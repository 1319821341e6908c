//! Exhaustive embedding searches for small cubic graphs.

use super::embedding::{euler_genus_from_faces, face_trace, EmbeddingScheme, Tracer};
use super::subdivision::find_k33_subdivision;
use crate::error::{Error, Result};
use crate::graph::CubicGraph;

/// Largest order accepted by the exhaustive searches.
pub const GENUS_SEARCH_GUARD: usize = 20;

fn guard(g: &CubicGraph, what: &str) -> Result<()> {
    if g.order() > GENUS_SEARCH_GUARD {
        return Err(Error::Resource(format!(
            "{what} is limited to {GENUS_SEARCH_GUARD} vertices, graph has {}",
            g.order()
        )));
    }
    if !g.is_connected() {
        return Err(Error::Domain(format!("{what} needs a connected graph")));
    }
    Ok(())
}

/// A lower bound on the orientable genus: 1 if a K3,3 subdivision exists,
/// and the bound from faces having at least `girth` sides.
pub fn orientable_genus_lower_bound(g: &CubicGraph) -> usize {
    let (v, e) = (g.order() as i64, g.size() as i64);
    let max_faces = 2 * e / g.girth() as i64;
    let euler = ((e - v + 2 - max_faces).max(0) + 1) / 2;
    let kuratowski = usize::from(find_k33_subdivision(g, &[]).is_some());
    (euler as usize).max(kuratowski)
}

/// Minimum orientable genus over all rotation systems, with a witness
/// (all signs `+1`). Vertex 0 keeps its rotation; every other vertex takes
/// one of its two cyclic orders, so `2^(n-1)` systems are traced. Stops at the
/// first system reaching [`orientable_genus_lower_bound`]; otherwise the
/// witness is the first minimal system in enumeration order.
pub fn min_orientable_genus_exhaustive(g: &CubicGraph) -> Result<(usize, EmbeddingScheme)> {
    guard(g, "exhaustive genus search")?;
    let n = g.order();
    let lower = orientable_genus_lower_bound(g);
    let signs = vec![1i8; g.size()];
    let base: Vec<[usize; 3]> = (0..n).map(|v| g.incident(v)).collect();
    let rotation_for = |mask: u64| -> Vec<[usize; 3]> {
        base.iter()
            .enumerate()
            .map(|(v, r)| if v > 0 && mask >> (v - 1) & 1 == 1 { [r[0], r[2], r[1]] } else { *r })
            .collect()
    };
    let mut tracer = Tracer::new(g);
    let mut best: Option<(usize, u64)> = None;
    let mut rotation = base.clone();
    for mask in 0..1u64 << (n - 1) {
        for v in 1..n {
            let r = base[v];
            rotation[v] = if mask >> (v - 1) & 1 == 1 { [r[0], r[2], r[1]] } else { r };
        }
        let faces = tracer.trace(&rotation, &signs, None);
        let genus = euler_genus_from_faces(g, faces) / 2;
        if best.is_none_or(|(b, _)| genus < b) {
            best = Some((genus, mask));
            if genus <= lower {
                break;
            }
        }
    }
    let (genus, mask) = best.expect("at least one rotation system");
    let witness = EmbeddingScheme { rotation: rotation_for(mask), signs };
    debug_assert_eq!(face_trace(g, &witness).unwrap().euler_genus, 2 * genus);
    Ok((genus, witness))
}

/// Undoable union-find over face corners. Each corner lies on exactly one
/// face, and every edge side joins two corners, so the corner graph is a
/// disjoint union of cycles (the faces).
struct Corners {
    parent: Vec<usize>,
    size: Vec<usize>,
    undo: Vec<Undo>,
    faces: usize,
    open: usize,
}

enum Undo {
    Union { child: usize, root: usize },
    Close { root: usize },
}

impl Corners {
    fn new(n: usize) -> Self {
        Corners { parent: (0..n).collect(), size: vec![1; n], undo: Vec::new(), faces: 0, open: n }
    }

    fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    fn link(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            self.faces += 1;
            self.open -= self.size[ra];
            self.undo.push(Undo::Close { root: ra });
        } else {
            let (child, root) = if self.size[ra] < self.size[rb] { (ra, rb) } else { (rb, ra) };
            self.parent[child] = root;
            self.size[root] += self.size[child];
            self.undo.push(Undo::Union { child, root });
        }
    }

    fn rollback(&mut self, mark: usize) {
        while self.undo.len() > mark {
            match self.undo.pop().unwrap() {
                Undo::Union { child, root } => {
                    self.parent[child] = child;
                    self.size[root] -= self.size[child];
                }
                Undo::Close { root } => {
                    self.faces -= 1;
                    self.open += self.size[root];
                }
            }
        }
    }
}

/// An embedding in the projective plane (Euler genus 1, nonorientable), or
/// `None` if there is none.
///
/// Any embedding is equivalent, by local switches, to one whose rotation at
/// every vertex is the incidence order, so only the edge signs are searched.
/// Edges are decided in breadth-first order while faces are tracked as
/// corner cycles; a branch is cut once the closed faces plus the most faces
/// the remaining corners could still form (at least `girth` corners each)
/// falls short of `E - V + 1`.
pub fn projective_planar_search(g: &CubicGraph) -> Result<Option<EmbeddingScheme>> {
    guard(g, "projective-plane search")?;
    let n = g.order();
    let target = g.size() + 1 - n;
    let girth = g.girth();
    let rotation: Vec<[usize; 3]> = (0..n).map(|v| g.incident(v)).collect();
    let slot = |v: usize, e: usize| rotation[v].iter().position(|&f| f == e).unwrap();
    let corner = |v: usize, s: usize| 3 * v + s % 3;
    let order = bfs_edge_order(g);
    // (A1, A2, B1, B2) per edge in decision order
    let ends: Vec<[usize; 4]> = order
        .iter()
        .map(|&e| {
            let (u, w) = g.edge(e);
            let (p, q) = (slot(u, e), slot(w, e));
            [corner(u, p), corner(u, p + 2), corner(w, q), corner(w, q + 2)]
        })
        .collect();

    let mut corners = Corners::new(3 * n);
    let mut signs = vec![1i8; g.size()];
    let found = signs_dfs(0, &order, &ends, &mut corners, &mut signs, target, girth);
    if !found {
        return Ok(None);
    }
    let scheme = EmbeddingScheme { rotation, signs };
    let check = face_trace(g, &scheme)?;
    debug_assert!(check.euler_genus == 1 && !check.orientable);
    Ok(Some(scheme))
}

fn signs_dfs(
    i: usize,
    order: &[usize],
    ends: &[[usize; 4]],
    corners: &mut Corners,
    signs: &mut [i8],
    target: usize,
    girth: usize,
) -> bool {
    if corners.faces + corners.open / girth < target {
        return false;
    }
    if i == order.len() {
        return corners.faces == target;
    }
    let [a1, a2, b1, b2] = ends[i];
    for sign in [1i8, -1] {
        let mark = corners.undo.len();
        if sign > 0 {
            corners.link(a2, b1);
            corners.link(a1, b2);
        } else {
            corners.link(a1, b1);
            corners.link(a2, b2);
        }
        signs[order[i]] = sign;
        if signs_dfs(i + 1, order, ends, corners, signs, target, girth) {
            return true;
        }
        corners.rollback(mark);
    }
    signs[order[i]] = 1;
    false
}

/// Edges in the order a breadth-first search from vertex 0 first sees them.
pub(crate) fn bfs_edge_order(g: &CubicGraph) -> Vec<usize> {
    let mut seen_v = vec![false; g.order()];
    let mut seen_e = vec![false; g.size()];
    let mut order = Vec::with_capacity(g.size());
    let mut queue = std::collections::VecDeque::new();
    for root in 0..g.order() {
        if seen_v[root] {
            continue;
        }
        seen_v[root] = true;
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            for e in g.incident(v) {
                if !seen_e[e] {
                    seen_e[e] = true;
                    order.push(e);
                }
                let w = g.other_end(e, v);
                if !seen_v[w] {
                    seen_v[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    order
}

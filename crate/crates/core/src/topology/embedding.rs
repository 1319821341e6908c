//! Embedding schemes (rotation plus edge signs) and face tracing.
//!
//! A face walk is traced dart by dart. Arriving at a vertex along edge `e`
//! with local orientation `+1`, the walk leaves along the successor of `e` in
//! the rotation; with orientation `-1`, along the predecessor. Crossing an edge
//! multiplies the orientation by the edge's sign.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::graph::CubicGraph;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EmbeddingScheme {
    /// Edge identifiers around each vertex, in cyclic order.
    pub rotation: Vec<[usize; 3]>,
    /// `+1` or `-1` per edge.
    pub signs: Vec<i8>,
}

/// One face boundary as the darts it leaves along: `(vertex, edge)`.
pub type FaceWalk = Vec<(usize, usize)>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceTraceResult {
    pub faces: Vec<FaceWalk>,
    pub euler_genus: usize,
    pub orientable: bool,
}

impl EmbeddingScheme {
    /// Rotation = each vertex's incident edges in storage order, all signs `+1`.
    pub fn standard(g: &CubicGraph) -> Self {
        EmbeddingScheme { rotation: (0..g.order()).map(|v| g.incident(v)).collect(), signs: vec![1; g.size()] }
    }

    pub fn validate(&self, g: &CubicGraph) -> Result<()> {
        if self.rotation.len() != g.order() {
            return domain(format!("rotation covers {} vertices, graph has {}", self.rotation.len(), g.order()));
        }
        if self.signs.len() != g.size() {
            return domain(format!("{} signs given, graph has {} edges", self.signs.len(), g.size()));
        }
        for (v, rot) in self.rotation.iter().enumerate() {
            let mut a = *rot;
            let mut b = g.incident(v);
            a.sort_unstable();
            b.sort_unstable();
            if a != b {
                return domain(format!("rotation at vertex {v} is {rot:?}, incident edges are {b:?}"));
            }
        }
        if let Some(e) = self.signs.iter().position(|&s| s != 1 && s != -1) {
            return domain(format!("edge {e} has sign {}", self.signs[e]));
        }
        Ok(())
    }

    /// Reverses every rotation: the mirror image of the same embedding.
    pub fn mirrored(&self) -> Self {
        EmbeddingScheme { rotation: self.rotation.iter().map(|r| [r[0], r[2], r[1]]).collect(), signs: self.signs.clone() }
    }

    /// Local switch at `v`: reverse its rotation and flip the signs of its
    /// edges. Gives an equivalent embedding.
    pub fn switch_at(&mut self, g: &CubicGraph, v: usize) {
        let r = self.rotation[v];
        self.rotation[v] = [r[0], r[2], r[1]];
        for e in g.incident(v) {
            self.signs[e] = -self.signs[e];
        }
    }

    /// True iff some set of local switches makes every sign `+1`, i.e. every
    /// cycle has positive sign product.
    pub fn is_orientable(&self, g: &CubicGraph) -> bool {
        let n = g.order();
        let mut side = vec![0i8; n];
        for root in 0..n {
            if side[root] != 0 {
                continue;
            }
            side[root] = 1;
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for e in g.incident(v) {
                    let w = g.other_end(e, v);
                    let want = side[v] * self.signs[e];
                    if side[w] == 0 {
                        side[w] = want;
                        queue.push_back(w);
                    } else if side[w] != want {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Flat tables for repeated tracing: `slot[2e + end]` is the position of edge
/// `e` in the rotation at its `end`-th endpoint.
/// Receives darts of a face in order, `None` between faces.
pub(crate) type DartSink<'a> = &'a mut dyn FnMut(Option<(usize, usize)>);

pub(crate) struct Tracer<'g> {
    g: &'g CubicGraph,
    used: Vec<bool>,
}

impl<'g> Tracer<'g> {
    pub(crate) fn new(g: &'g CubicGraph) -> Self {
        Tracer { g, used: vec![false; 12 * g.order()] }
    }

    #[inline]
    fn state(v: usize, slot: usize, orient: i8) -> usize {
        (3 * v + slot) * 2 + usize::from(orient < 0)
    }

    /// Traces every face; `record` receives each dart of each face in order,
    /// with `None` separating faces. Returns the number of faces.
    pub(crate) fn trace(
        &mut self,
        rotation: &[[usize; 3]],
        signs: &[i8],
        mut record: Option<DartSink>,
    ) -> usize {
        let g = self.g;
        let n = g.order();
        self.used.iter_mut().for_each(|u| *u = false);
        let pos = |v: usize, e: usize| rotation[v].iter().position(|&f| f == e).unwrap();
        let mut faces = 0;
        for v0 in 0..n {
            for s0 in 0..3 {
                for o0 in [1i8, -1] {
                    if self.used[Self::state(v0, s0, o0)] {
                        continue;
                    }
                    faces += 1;
                    let (mut v, mut slot, mut o) = (v0, s0, o0);
                    loop {
                        let e = rotation[v][slot];
                        let w = g.other_end(e, v);
                        let o2 = o * signs[e];
                        let j = pos(w, e);
                        self.used[Self::state(v, slot, o)] = true;
                        self.used[Self::state(w, j, -o2)] = true;
                        if let Some(r) = record.as_deref_mut() {
                            r(Some((v, e)));
                        }
                        let next = if o2 > 0 { (j + 1) % 3 } else { (j + 2) % 3 };
                        (v, slot, o) = (w, next, o2);
                        if (v, slot, o) == (v0, s0, o0) {
                            break;
                        }
                    }
                    if let Some(r) = record.as_deref_mut() {
                        r(None);
                    }
                }
            }
        }
        faces
    }
}

pub fn euler_genus_from_faces(g: &CubicGraph, faces: usize) -> usize {
    let chi = g.order() as i64 - g.size() as i64 + faces as i64;
    (2 - chi) as usize
}

/// Faces of the cellular embedding described by `scheme`, its Euler genus
/// `2 - V + E - F` and orientability. The graph must be connected.
pub fn face_trace(g: &CubicGraph, scheme: &EmbeddingScheme) -> Result<FaceTraceResult> {
    scheme.validate(g)?;
    if !g.is_connected() {
        return domain("face tracing needs a connected graph");
    }
    let mut faces: Vec<FaceWalk> = Vec::new();
    let mut current = Vec::new();
    let mut record = |d: Option<(usize, usize)>| match d {
        Some(dart) => current.push(dart),
        None => faces.push(std::mem::take(&mut current)),
    };
    Tracer::new(g).trace(&scheme.rotation, &scheme.signs, Some(&mut record));
    let euler_genus = euler_genus_from_faces(g, faces.len());
    Ok(FaceTraceResult { faces, euler_genus, orientable: scheme.is_orientable(g) })
}

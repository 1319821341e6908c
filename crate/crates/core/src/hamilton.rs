//! Hamilton cycle enumeration and the passage from a Hamilton cycle to a
//! 3-edge coloring.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::coloring::EdgeColoring;
use crate::error::{domain, Result};
use crate::graph::CubicGraph;

/// A Hamilton cycle as a vertex sequence, rotated to start at the smallest
/// vertex and oriented towards its smaller cycle neighbor.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HamiltonCycle {
    vertices: Vec<usize>,
}

impl HamiltonCycle {
    /// Validates `vertices` as a Hamilton cycle of `g` and canonicalizes it.
    pub fn new(g: &CubicGraph, vertices: Vec<usize>) -> Result<Self> {
        let n = g.order();
        if vertices.len() != n {
            return domain(format!("cycle has {} vertices, graph has {n}", vertices.len()));
        }
        let mut seen = vec![false; n];
        for &v in &vertices {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return domain(format!("vertex {v} repeated or out of range"));
            }
        }
        for i in 0..n {
            let (a, b) = (vertices[i], vertices[(i + 1) % n]);
            if !g.is_adjacent(a, b) {
                return domain(format!("{a} and {b} are consecutive but not adjacent"));
            }
        }
        Ok(Self::canonical(vertices))
    }

    fn canonical(mut vertices: Vec<usize>) -> Self {
        let n = vertices.len();
        let pos = (0..n).min_by_key(|&i| vertices[i]).unwrap();
        vertices.rotate_left(pos);
        if n > 2 && vertices[n - 1] < vertices[1] {
            vertices[1..].reverse();
        }
        HamiltonCycle { vertices }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Edge identifiers along the cycle, starting with the edge leaving the
    /// first vertex.
    pub fn edges(&self, g: &CubicGraph) -> Vec<usize> {
        let n = self.vertices.len();
        (0..n)
            .map(|i| g.edge_between(self.vertices[i], self.vertices[(i + 1) % n]).expect("cycle edges exist"))
            .collect()
    }

    /// Sorted edge identifiers: equal for two traversals of the same cycle.
    pub fn edge_set(&self, g: &CubicGraph) -> Vec<usize> {
        let mut es = self.edges(g);
        es.sort_unstable();
        es
    }
}

/// Depth-first path extension from vertex 0. A path `0, x, ..., y` is closed
/// only when `y > x`, so each cycle is produced once, already canonical.
struct Search<'g> {
    g: &'g CubicGraph,
    path: Vec<usize>,
    on_path: Vec<bool>,
    queue: VecDeque<usize>,
    mark: Vec<u32>,
    stamp: u32,
}

impl<'g> Search<'g> {
    fn new(g: &'g CubicGraph) -> Self {
        let n = g.order();
        Search { g, path: Vec::with_capacity(n), on_path: vec![false; n], queue: VecDeque::new(), mark: vec![0; n], stamp: 0 }
    }

    #[inline]
    fn first(&self) -> usize {
        self.path[1]
    }

    /// Whether `w` (off the path) may still close the cycle into vertex 0.
    #[inline]
    fn closes(&self, w: usize) -> bool {
        w > self.first() && self.g.is_adjacent(0, w)
    }

    /// Edges still usable by the off-path vertex `w`.
    fn available(&self, w: usize, head: usize) -> usize {
        self.g
            .neighbors(w)
            .iter()
            .filter(|&&x| !self.on_path[x] || x == head || (x == 0 && self.closes(w)))
            .count()
    }

    /// Off-path vertices must stay connected to the head.
    fn connected(&mut self, head: usize) -> bool {
        let remaining = self.g.order() - self.path.len();
        if remaining == 0 {
            return true;
        }
        self.stamp += 1;
        let stamp = self.stamp;
        self.queue.clear();
        self.queue.push_back(head);
        let mut reached = 0;
        while let Some(v) = self.queue.pop_front() {
            for w in self.g.neighbors(v) {
                if !self.on_path[w] && self.mark[w] != stamp {
                    self.mark[w] = stamp;
                    reached += 1;
                    self.queue.push_back(w);
                }
            }
        }
        reached == remaining
    }

    fn extend(&mut self, visit: &mut dyn FnMut(&[usize])) {
        let n = self.g.order();
        let head = *self.path.last().unwrap();
        if self.path.len() == n {
            if self.closes(head) {
                visit(&self.path);
            }
            return;
        }
        let candidates: Vec<usize> = self.g.neighbors(head).into_iter().filter(|&w| !self.on_path[w]).collect();
        // a neighbor left with exactly two usable edges must take the one to the head
        let forced: Vec<usize> = candidates.iter().copied().filter(|&w| self.available(w, head) == 2).collect();
        let moves = match forced.len() {
            0 => candidates,
            1 => forced,
            _ => return,
        };
        for w in moves {
            self.path.push(w);
            self.on_path[w] = true;
            if self.viable(head, w) {
                self.extend(visit);
            }
            self.on_path[w] = false;
            self.path.pop();
        }
    }

    /// Checks after moving the head from `old` to `new`.
    fn viable(&mut self, old: usize, new: usize) -> bool {
        let n = self.g.order();
        if self.path.len() < n {
            for w in self.g.neighbors(old) {
                if !self.on_path[w] && self.available(w, new) < 2 {
                    return false;
                }
            }
            let can_close = self.g.neighbors(0).iter().any(|&y| self.closes(y) && (!self.on_path[y] || y == new));
            if !can_close {
                return false;
            }
        }
        self.connected(new)
    }

    fn run(&mut self, visit: &mut dyn FnMut(&[usize])) {
        let mut starts = self.g.neighbors(0);
        starts.sort_unstable();
        self.path.push(0);
        self.on_path[0] = true;
        for x in starts {
            self.path.push(x);
            self.on_path[x] = true;
            if self.viable(0, x) {
                self.extend(visit);
            }
            self.on_path[x] = false;
            self.path.pop();
        }
        self.path.clear();
        self.on_path[0] = false;
    }
}

/// Every Hamilton cycle once, sorted by canonical vertex sequence.
pub fn enumerate_hamilton_cycles(g: &CubicGraph) -> Vec<HamiltonCycle> {
    let mut out = Vec::new();
    if g.order() < 3 {
        return out;
    }
    Search::new(g).run(&mut |p| out.push(HamiltonCycle { vertices: p.to_vec() }));
    out.sort();
    out
}

pub fn count_hamilton_cycles(g: &CubicGraph) -> u64 {
    let mut count = 0;
    if g.order() >= 3 {
        Search::new(g).run(&mut |_| count += 1);
    }
    count
}

/// Colors the (even) cycle alternately `0, 1` starting from its first edge
/// and the complementary perfect matching `2`.
pub fn colorings_from_hamilton(g: &CubicGraph, h: &HamiltonCycle) -> Result<EdgeColoring> {
    let h = HamiltonCycle::new(g, h.vertices.clone())?;
    if g.order() % 2 == 1 {
        return domain("odd Hamilton cycle cannot be 2-edge colored");
    }
    let mut colors = vec![2; g.size()];
    for (i, e) in h.edges(g).into_iter().enumerate() {
        colors[e] = (i % 2) as u8;
    }
    EdgeColoring::new(g, colors)
}

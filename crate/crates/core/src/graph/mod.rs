//! Simple cubic graphs with stable edge identifiers.
//!
//! Every graph in this crate is 3-regular, loopless and free of parallel
//! edges. Edges are numbered `0..3n/2` in construction order and that numbering
//! never changes for the lifetime of the value; colorings, embedding schemes
//! and cuts all refer to edges by these identifiers.

mod cuts;
mod generators;
mod graph6;

use std::collections::VecDeque;

pub use cuts::{enumerate_3_edge_cuts, EdgeCut3};
pub use generators::{
    complete_bipartite_k33, complete_k4, cube, generalized_petersen, mobius_kantor, petersen,
    prism, small_cubic_corpus, tutte_p92, wagner, GeneralizedPetersenParams,
};
pub use graph6::{from_graph6, read_graph6_lines, to_graph6};

use crate::error::{domain, Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CubicGraph {
    edges: Vec<(usize, usize)>,
    incidence: Vec<[usize; 3]>,
}

impl CubicGraph {
    /// Builds a graph on `n` vertices from an edge list. Endpoints are stored
    /// with the smaller vertex first; edge `i` is the `i`-th pair given.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::Param("a cubic graph needs at least one vertex".into()));
        }
        let mut incidence: Vec<Vec<usize>> = vec![Vec::with_capacity(3); n];
        let mut list = Vec::new();
        for (id, (a, b)) in edges.into_iter().enumerate() {
            if a >= n || b >= n {
                return domain(format!("edge {id} = ({a}, {b}) has an endpoint outside 0..{n}"));
            }
            if a == b {
                return domain(format!("edge {id} is a loop at vertex {a}"));
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            incidence[u].push(id);
            incidence[v].push(id);
            list.push((u, v));
        }
        if let Some((vertex, inc)) = incidence.iter().enumerate().find(|(_, inc)| inc.len() != 3) {
            return Err(Error::NotCubic { vertex, degree: inc.len() });
        }
        for (v, inc) in incidence.iter().enumerate() {
            let ns: Vec<usize> = inc.iter().map(|&e| other(list[e], v)).collect();
            if ns[0] == ns[1] || ns[0] == ns[2] || ns[1] == ns[2] {
                return domain(format!("parallel edges at vertex {v}"));
            }
        }
        Ok(CubicGraph {
            edges: list,
            incidence: incidence.into_iter().map(|inc| [inc[0], inc[1], inc[2]]).collect(),
        })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.incidence.len()
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[inline]
    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    /// The three edges at `v`, in the order they were added.
    #[inline]
    pub fn incident(&self, v: usize) -> [usize; 3] {
        self.incidence[v]
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> [usize; 3] {
        self.incidence[v].map(|e| self.other_end(e, v))
    }

    /// Neighbors of `v` in increasing order.
    pub fn sorted_neighbors(&self, v: usize) -> [usize; 3] {
        let mut ns = self.neighbors(v);
        ns.sort_unstable();
        ns
    }

    #[inline]
    pub fn other_end(&self, e: usize, v: usize) -> usize {
        other(self.edges[e], v)
    }

    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        self.incidence[u].iter().copied().find(|&e| self.other_end(e, u) == v)
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.edge_between(u, v).is_some()
    }

    /// Applies the vertex permutation `perm` (old label -> new label). Edge
    /// identifiers are preserved.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let n = self.order();
        if perm.len() != n {
            return Err(Error::Param(format!("permutation has length {}, graph has {n} vertices", perm.len())));
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::Param("relabeling is not a permutation".into()));
            }
        }
        CubicGraph::from_edges(n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }

    pub fn is_connected(&self) -> bool {
        self.component_labels(&[]).1 == 1
    }

    /// Connected components after deleting the edges in `removed`. Returns the
    /// component index of every vertex and the number of components.
    pub fn component_labels(&self, removed: &[usize]) -> (Vec<usize>, usize) {
        let n = self.order();
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = count;
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                for e in self.incidence[v] {
                    if removed.contains(&e) {
                        continue;
                    }
                    let w = self.other_end(e, v);
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        queue.push_back(w);
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }

    /// Length of a shortest cycle, by breadth-first search from every vertex.
    pub fn girth(&self) -> usize {
        let n = self.order();
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; n];
        let mut parent_edge = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for root in 0..n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[root] = 0;
            parent_edge[root] = usize::MAX;
            queue.clear();
            queue.push_back(root);
            while let Some(v) = queue.pop_front() {
                if 2 * dist[v] + 1 >= best {
                    break;
                }
                for e in self.incidence[v] {
                    if e == parent_edge[v] {
                        continue;
                    }
                    let w = self.other_end(e, v);
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        parent_edge[w] = e;
                        queue.push_back(w);
                    } else {
                        best = best.min(dist[v] + dist[w] + 1);
                    }
                }
            }
        }
        best
    }

    pub fn is_triangle_free(&self) -> bool {
        self.girth() > 3
    }

    /// Breadth-first distances from `root`.
    pub fn distances_from(&self, root: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.order()];
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for w in self.neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }
}

#[inline]
fn other((a, b): (usize, usize), v: usize) -> usize {
    if a == v {
        b
    } else {
        a
    }
}

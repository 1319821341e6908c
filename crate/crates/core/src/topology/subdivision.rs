//! Topological-minor search for K3,3 and the Petersen graph.
//!
//! Pattern vertices are placed in breadth-first order. Each new vertex is
//! reached by an "open" route from its parent's image that ends wherever the
//! new branch vertex is chosen; the remaining pattern edges back to placed
//! vertices become "closed" routes between two fixed host vertices. Routes
//! are internally disjoint paths through unused vertices, bounded by a
//! per-path length that is raised one step at a time.

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::graph::{complete_bipartite_k33, petersen, CubicGraph};
use crate::product::FamilyMember;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Pattern {
    #[serde(rename = "K33")]
    K33,
    #[serde(rename = "PETERSEN")]
    Petersen,
}

impl Pattern {
    pub fn graph(self) -> CubicGraph {
        match self {
            Pattern::K33 => complete_bipartite_k33(),
            Pattern::Petersen => petersen(),
        }
    }
}

/// Branch vertices plus one host path per pattern edge. `paths[i]` runs from
/// `branch_map[a]` to `branch_map[b]` where `(a, b)` is edge `i` of
/// [`Pattern::graph`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubdivisionCertificate {
    pub pattern: Pattern,
    pub branch_map: Vec<usize>,
    pub paths: Vec<Vec<usize>>,
}

impl SubdivisionCertificate {
    /// Every host vertex the subdivision touches.
    pub fn vertices(&self) -> Vec<usize> {
        let mut vs: Vec<usize> = self.branch_map.iter().chain(self.paths.iter().flatten()).copied().collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }
}

/// Independent validation of a certificate against `g`, including that no
/// vertex of `forbidden` is touched.
pub fn check_certificate(g: &CubicGraph, cert: &SubdivisionCertificate, forbidden: &[usize]) -> Result<()> {
    let p = cert.pattern.graph();
    let n = g.order();
    if cert.branch_map.len() != p.order() || cert.paths.len() != p.size() {
        return domain("certificate does not match the pattern's size");
    }
    let mut owner = vec![usize::MAX; n];
    for (i, &b) in cert.branch_map.iter().enumerate() {
        if b >= n {
            return domain(format!("branch vertex {b} is not in the host"));
        }
        if owner[b] != usize::MAX {
            return domain(format!("host vertex {b} is used by two branch vertices"));
        }
        owner[b] = i;
    }
    for (i, path) in cert.paths.iter().enumerate() {
        let (a, b) = p.edge(i);
        let ends = (path.first().copied(), path.last().copied());
        let want = (Some(cert.branch_map[a]), Some(cert.branch_map[b]));
        if ends != want && (ends.1, ends.0) != want {
            return domain(format!("path {i} does not join the images of pattern vertices {a} and {b}"));
        }
        if path.len() < 2 {
            return domain(format!("path {i} is too short"));
        }
        for w in path.windows(2) {
            if w[1] >= n || !g.is_adjacent(w[0], w[1]) {
                return domain(format!("path {i} steps along a non-edge {}-{}", w[0], w[1]));
            }
        }
        for &x in &path[1..path.len() - 1] {
            if x >= n || owner[x] != usize::MAX {
                return domain(format!("path {i} reuses host vertex {x}"));
            }
            owner[x] = cert.branch_map.len() + i;
        }
    }
    if let Some(&f) = forbidden.iter().find(|&&f| f < n && owner[f] != usize::MAX) {
        return domain(format!("certificate touches forbidden vertex {f}"));
    }
    Ok(())
}

struct Search<'a> {
    g: &'a CubicGraph,
    p: CubicGraph,
    /// Pattern edge index and, for open routes, the pattern vertex it places.
    steps: Vec<(usize, Option<usize>)>,
    used: Vec<bool>,
    edge_used: Vec<bool>,
    is_branch: Vec<bool>,
    map: Vec<usize>,
    remaining: Vec<usize>,
    paths: Vec<Vec<usize>>,
    limit: usize,
    /// Host distances, a lower bound on any route's length.
    dist: Vec<Vec<usize>>,
}

impl<'a> Search<'a> {
    fn new(g: &'a CubicGraph, pattern: Pattern, forbidden: &[usize]) -> Self {
        let p = pattern.graph();
        let m = p.order();
        // breadth-first order and parents
        let mut order = vec![0];
        let mut parent = vec![usize::MAX; m];
        let mut seen = vec![false; m];
        seen[0] = true;
        let mut i = 0;
        while i < order.len() {
            let v = order[i];
            for w in p.sorted_neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = v;
                    order.push(w);
                }
            }
            i += 1;
        }
        let mut rank = vec![0; m];
        for (r, &v) in order.iter().enumerate() {
            rank[v] = r;
        }
        let mut steps = Vec::new();
        for &v in &order[1..] {
            steps.push((p.edge_between(parent[v], v).unwrap(), Some(v)));
            let mut back: Vec<usize> =
                p.sorted_neighbors(v).into_iter().filter(|&w| rank[w] < rank[v] && w != parent[v]).collect();
            back.sort_by_key(|&w| rank[w]);
            steps.extend(back.into_iter().map(|w| (p.edge_between(v, w).unwrap(), None)));
        }
        let mut used = vec![false; g.order()];
        for &f in forbidden {
            if f < used.len() {
                used[f] = true;
            }
        }
        Search {
            g,
            steps,
            used,
            edge_used: vec![false; g.size()],
            is_branch: vec![false; g.order()],
            map: vec![usize::MAX; m],
            remaining: vec![0; m],
            paths: vec![Vec::new(); p.size()],
            p,
            limit: 1,
            dist: (0..g.order()).map(|v| g.distances_from(v)).collect(),
        }
    }

    fn exits(&self, b: usize) -> usize {
        self.g
            .incident(b)
            .into_iter()
            .filter(|&e| !self.edge_used[e] && {
                let w = self.g.other_end(e, b);
                !self.used[w] || self.is_branch[w]
            })
            .count()
    }

    fn feasible(&self) -> bool {
        self.map.iter().zip(&self.remaining).all(|(&b, &r)| b == usize::MAX || self.exits(b) >= r)
    }

    /// Every placed pattern neighbour of `pv` other than `skip` is still
    /// within the length bound of its image.
    fn reachable(&self, pv: usize, skip: usize) -> bool {
        let host = self.map[pv];
        self.p.neighbors(pv).into_iter().all(|u| u == skip || self.map[u] == usize::MAX || self.dist[host][self.map[u]] <= self.limit)
    }

    fn place(&mut self, pv: usize, host: usize) {
        self.used[host] = true;
        self.is_branch[host] = true;
        self.map[pv] = host;
        self.remaining[pv] = 3;
    }

    fn unplace(&mut self, pv: usize, host: usize) {
        self.used[host] = false;
        self.is_branch[host] = false;
        self.map[pv] = usize::MAX;
    }

    fn run(&mut self, start_pattern: usize, host: usize) -> bool {
        self.place(start_pattern, host);
        let found = self.feasible() && self.step(0);
        if !found {
            self.unplace(start_pattern, host);
        }
        found
    }

    fn step(&mut self, s: usize) -> bool {
        if s == self.steps.len() {
            return true;
        }
        let (pe, new) = self.steps[s];
        let (a, b) = self.p.edge(pe);
        let (from, to) = match new {
            Some(v) if v == a => (b, a),
            Some(_) => (a, b),
            None => (a, b),
        };
        let start = self.map[from];
        self.paths[pe] = vec![start];
        let found = self.extend(s, pe, from, to, start, 0);
        if !found {
            self.paths[pe].clear();
        }
        found
    }

    /// Grows route `pe` from `cur`, `len` edges so far.
    fn extend(&mut self, s: usize, pe: usize, from: usize, to: usize, cur: usize, len: usize) -> bool {
        let open = self.steps[s].1.is_some();
        let target = if open { usize::MAX } else { self.map[to] };
        if !open && self.dist[cur][target] > self.limit - len {
            return false;
        }
        let mut nbrs: Vec<(usize, usize)> =
            self.g.incident(cur).into_iter().map(|e| (self.g.other_end(e, cur), e)).collect();
        nbrs.sort_unstable();
        // The stabiliser of pattern vertex 0 permutes its neighbours
        // arbitrarily, so the routes leaving its image take increasing first
        // hops.
        let min_first = match (len, s) {
            (0, 1 | 2) if from == 0 => self.paths[self.steps[s - 1].0][1] + 1,
            _ => 0,
        };
        for (w, e) in nbrs {
            if self.edge_used[e] || w < min_first {
                continue;
            }
            if !open && w == target {
                self.edge_used[e] = true;
                self.paths[pe].push(w);
                self.remaining[from] -= 1;
                self.remaining[to] -= 1;
                if self.feasible() && self.step(s + 1) {
                    return true;
                }
                self.remaining[from] += 1;
                self.remaining[to] += 1;
                self.paths[pe].pop();
                self.edge_used[e] = false;
                continue;
            }
            if self.used[w] {
                continue;
            }
            self.edge_used[e] = true;
            self.paths[pe].push(w);
            if open {
                self.place(to, w);
                self.remaining[from] -= 1;
                self.remaining[to] -= 1;
                if self.feasible() && self.reachable(to, from) && self.step(s + 1) {
                    return true;
                }
                self.remaining[from] += 1;
                self.unplace(to, w);
            }
            if len + 1 < self.limit {
                self.used[w] = true;
                if self.extend(s, pe, from, to, w, len + 1) {
                    return true;
                }
                self.used[w] = false;
            }
            self.paths[pe].pop();
            self.edge_used[e] = false;
        }
        false
    }
}

/// A subdivision of `pattern` in `g` that avoids every vertex of `forbidden`,
/// or `None`. Shorter paths are preferred: the per-path length bound grows
/// from 1 until a certificate appears. Returned certificates have passed
/// [`check_certificate`].
pub fn find_subdivision(g: &CubicGraph, pattern: Pattern, forbidden: &[usize]) -> Option<SubdivisionCertificate> {
    let p = pattern.graph();
    let free: Vec<usize> = (0..g.order()).filter(|v| !forbidden.contains(v)).collect();
    if free.len() < p.order() {
        return None;
    }
    let max_len = free.len() - p.order() + 1;
    let mut search = Search::new(g, pattern, forbidden);
    for limit in 1..=max_len {
        search.limit = limit;
        // Both patterns are vertex-transitive, so pattern vertex 0 can be
        // pinned to each host vertex in turn.
        for &host in &free {
            if search.run(0, host) {
                let cert = SubdivisionCertificate { pattern, branch_map: search.map, paths: search.paths };
                check_certificate(g, &cert, forbidden).expect("search produced an invalid certificate");
                return Some(cert);
            }
        }
    }
    None
}

pub fn find_k33_subdivision(g: &CubicGraph, forbidden: &[usize]) -> Option<SubdivisionCertificate> {
    find_subdivision(g, Pattern::K33, forbidden)
}

/// For cubic hosts a Petersen minor is the same as a Petersen subdivision.
pub fn find_petersen_subdivision(g: &CubicGraph) -> Option<SubdivisionCertificate> {
    find_subdivision(g, Pattern::Petersen, &[])
}

/// The lexicographically first `size`-set of vertices that some K3,3
/// subdivision avoids, with that subdivision.
pub fn find_k33_avoiding_set(g: &CubicGraph, size: usize) -> Option<(Vec<usize>, SubdivisionCertificate)> {
    let n = g.order();
    if size > n {
        return None;
    }
    let mut set: Vec<usize> = (0..size).collect();
    loop {
        if let Some(cert) = find_k33_subdivision(g, &set) {
            return Some((set, cert));
        }
        // next combination
        let mut i = size;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if set[i] < n - size + i {
                break;
            }
        }
        set[i] += 1;
        for j in i + 1..size {
            set[j] = set[j - 1] + 1;
        }
    }
}

/// One K3,3 subdivision inside each copy's vertex block. The blocks are
/// disjoint, so the certificates are too, and the orientable and
/// nonorientable genus of the member are both at least `k`.
pub fn find_disjoint_k33_subdivisions(member: &FamilyMember) -> Result<Vec<SubdivisionCertificate>> {
    let g = &member.graph;
    let mut out = Vec::with_capacity(member.k);
    for (copy, block) in member.blocks().into_iter().enumerate() {
        let mut inside = vec![false; g.order()];
        for &v in &block {
            inside[v] = true;
        }
        let outside: Vec<usize> = (0..g.order()).filter(|&v| !inside[v]).collect();
        match find_k33_subdivision(g, &outside) {
            Some(cert) => out.push(cert),
            None => return Err(Error::NoLocalSubdivision { copy }),
        }
    }
    Ok(out)
}

/// True iff no host vertex appears in two certificates.
pub fn pairwise_disjoint(certs: &[SubdivisionCertificate]) -> bool {
    let mut all: Vec<usize> = certs.iter().flat_map(SubdivisionCertificate::vertices).collect();
    let total = all.len();
    all.sort_unstable();
    all.dedup();
    all.len() == total
}

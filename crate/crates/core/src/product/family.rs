//! Iterated star products of `P(9,2)`.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::canon::{canonical_form, orbit_representatives};
use super::compose::{star_compose, StarProductSpec};
use crate::error::{domain, Error, Result};
use crate::graph::{generalized_petersen, CubicGraph, GeneralizedPetersenParams};

/// Largest number of copies `generate_family` accepts.
pub const FAMILY_GUARD: usize = 4;

/// `P(9,2)` with outer vertices `0..9` and inner vertices `9..18`.
pub fn base_graph() -> CubicGraph {
    generalized_petersen(GeneralizedPetersenParams::new(9, 2).unwrap()).unwrap()
}

/// A graph built from `k` copies of `P(9,2)` by left-deep star products:
/// `((P * P) * P) * ...`, where step `i` composes the current graph (as the
/// first factor, at `trace[i].v1`) with a fresh copy (at `trace[i].v2`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyMember {
    pub k: usize,
    pub graph: CubicGraph,
    pub trace: Vec<StarProductSpec>,
    pub canonical: String,
}

#[derive(Serialize, Deserialize)]
struct TraceJson {
    k: usize,
    specs: Vec<StarProductSpec>,
}

impl FamilyMember {
    pub fn from_trace(trace: Vec<StarProductSpec>) -> Result<Self> {
        let base = base_graph();
        let mut graph = base.clone();
        for &spec in &trace {
            graph = star_compose(&graph, &base, spec)?.graph;
        }
        let canonical = canonical_form(&graph).graph6;
        Ok(FamilyMember { k: trace.len() + 1, graph, trace, canonical })
    }

    /// `{"k": .., "specs": [{"v1": .., "v2": .., "perm": ..}, ...]}`
    pub fn trace_json(&self) -> String {
        serde_json::to_string(&TraceJson { k: self.k, specs: self.trace.clone() }).unwrap()
    }

    pub fn from_trace_json(text: &str) -> Result<Self> {
        let t: TraceJson = serde_json::from_str(text).map_err(|e| Error::Domain(format!("build trace JSON: {e}")))?;
        if t.k != t.specs.len() + 1 {
            return domain(format!("trace has {} specs, which builds k = {}, not {}", t.specs.len(), t.specs.len() + 1, t.k));
        }
        Self::from_trace(t.specs)
    }

    /// For each copy, where each of its `P(9,2)` vertices ended up in the final
    /// graph (`None` for vertices deleted by a composition).
    pub fn copy_maps(&self) -> Vec<Vec<Option<usize>>> {
        let base_n = 18;
        let mut maps: Vec<Vec<Option<usize>>> = vec![(0..base_n).map(Some).collect()];
        let mut n = base_n;
        for spec in &self.trace {
            for map in maps.iter_mut() {
                for slot in map.iter_mut() {
                    *slot = match *slot {
                        Some(x) if x == spec.v1 => None,
                        Some(x) if x > spec.v1 => Some(x - 1),
                        other => other,
                    };
                }
            }
            let offset = n - 1;
            maps.push(
                (0..base_n)
                    .map(|y| match y.cmp(&spec.v2) {
                        std::cmp::Ordering::Less => Some(offset + y),
                        std::cmp::Ordering::Equal => None,
                        std::cmp::Ordering::Greater => Some(offset + y - 1),
                    })
                    .collect(),
            );
            n += base_n - 2;
        }
        maps
    }

    /// Final vertex labels belonging to each copy.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        self.copy_maps().into_iter().map(|m| m.into_iter().flatten().collect()).collect()
    }

    /// `P(9,2)` vertices of each copy that were deleted by compositions.
    pub fn attachment_vertices(&self) -> Vec<Vec<usize>> {
        self.copy_maps()
            .into_iter()
            .map(|m| m.iter().enumerate().filter(|(_, s)| s.is_none()).map(|(v, _)| v).collect())
            .collect()
    }
}

/// All pairwise nonisomorphic graphs built from `k` copies of `P(9,2)`,
/// sorted by canonical graph6. Each level composes every member of the
/// previous level at one vertex per automorphism orbit with `P(9,2)` at one
/// vertex per orbit, under all six bijections.
pub fn generate_family(k: usize) -> Result<Vec<FamilyMember>> {
    if k == 0 {
        return Err(Error::Param("a family member has at least one copy".into()));
    }
    if k > FAMILY_GUARD {
        return Err(Error::Resource(format!("family generation is limited to k <= {FAMILY_GUARD}, got {k}")));
    }
    let mut level = vec![FamilyMember::from_trace(Vec::new())?];
    for _ in 1..k {
        level = extend_level(&level)?;
    }
    Ok(level)
}

/// Every nonisomorphic one-copy extension of `members`.
pub fn extend_level(members: &[FamilyMember]) -> Result<Vec<FamilyMember>> {
    let base = base_graph();
    let base_reps = orbit_representatives(&base);
    let mut candidates = Vec::new();
    for (i, m) in members.iter().enumerate() {
        for v1 in orbit_representatives(&m.graph) {
            for &v2 in &base_reps {
                for perm in 0..6 {
                    candidates.push((i, StarProductSpec::new(v1, v2, perm)));
                }
            }
        }
    }
    let build = |&(i, spec): &(usize, StarProductSpec)| -> Result<FamilyMember> {
        let parent = &members[i];
        let graph = star_compose(&parent.graph, &base, spec)?.graph;
        let canonical = canonical_form(&graph).graph6;
        let mut trace = parent.trace.clone();
        trace.push(spec);
        Ok(FamilyMember { k: parent.k + 1, graph, trace, canonical })
    };
    #[cfg(feature = "parallel")]
    let built: Vec<FamilyMember> = {
        use rayon::prelude::*;
        candidates.par_iter().map(build).collect::<Result<_>>()?
    };
    #[cfg(not(feature = "parallel"))]
    let built: Vec<FamilyMember> = candidates.iter().map(build).collect::<Result<_>>()?;

    let mut seen = HashSet::new();
    let mut out: Vec<FamilyMember> = built.into_iter().filter(|m| seen.insert(m.canonical.clone())).collect();
    out.sort_by(|a, b| a.canonical.cmp(&b.canonical));
    Ok(out)
}

//! Each claim runs a check suite on its inputs and returns a report whose
//! evidence is enough to re-verify the verdict independently.

use std::collections::BTreeMap;
use std::time::Instant;

use cubic3ec::coloring::{count_colorings, partition_representatives};
use cubic3ec::graph::*;
use cubic3ec::hamilton::enumerate_hamilton_cycles;
use cubic3ec::product::*;
use cubic3ec::topology::*;
use cubic3ec::{CubicGraph, Error};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    #[serde(rename = "skipped: guard")]
    Skipped,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Inputs {
    pub graph6: Vec<String>,
    pub params: BTreeMap<String, Value>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClaimReport {
    pub claim: String,
    pub inputs: Inputs,
    pub verdict: Verdict,
    pub evidence: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

/// Graphs a claim runs on, with a label for the report and, for family
/// members, their build traces.
#[derive(Clone, Debug)]
pub struct Subject {
    pub label: String,
    pub graphs: Vec<CubicGraph>,
    pub traces: Option<Vec<FamilyMember>>,
}

impl Subject {
    pub fn single(label: impl Into<String>, g: CubicGraph) -> Self {
        Subject { label: label.into(), graphs: vec![g], traces: None }
    }

    pub fn family(k: usize, members: Vec<FamilyMember>) -> Self {
        Subject { label: format!("family-k{k}"), graphs: members.iter().map(|m| m.graph.clone()).collect(), traces: Some(members) }
    }

    fn inputs(&self) -> Inputs {
        let mut params = BTreeMap::new();
        params.insert("subject".into(), json!(self.label));
        if let Some(ms) = &self.traces {
            params.insert("traces".into(), json!(ms.iter().map(FamilyMember::trace_json).collect::<Vec<_>>()));
        }
        Inputs { graph6: self.graphs.iter().map(to_graph6).collect(), params }
    }
}

pub const CLAIMS: [&str; 11] = [
    "genus-exhaustive",
    "genus-family-k",
    "genus-p92",
    "multiplicativity",
    "nonplanar",
    "petersen-minor",
    "projective-p92",
    "projective-search",
    "three-hamilton",
    "triangle-free",
    "unique-coloring",
];

fn report(claim: &str, subject: &Subject, verdict: Verdict, evidence: Value) -> ClaimReport {
    ClaimReport { claim: format!("{claim}/{}", subject.label), inputs: subject.inputs(), verdict, evidence, wall_time_ms: None }
}

fn all_pass(ok: impl IntoIterator<Item = bool>) -> Verdict {
    if ok.into_iter().all(|b| b) { Verdict::Pass } else { Verdict::Fail }
}

/// Runs `f` and stores its wall time when `timings` is set.
pub fn timed(timings: bool, f: impl FnOnce() -> ClaimReport) -> ClaimReport {
    let start = Instant::now();
    let mut r = f();
    if timings {
        r.wall_time_ms = Some(start.elapsed().as_millis() as u64);
    }
    r
}

/// [`timed`] for runners that can fail before producing a report.
pub fn timed_result<E>(timings: bool, f: impl FnOnce() -> Result<ClaimReport, E>) -> Result<ClaimReport, E> {
    let start = Instant::now();
    let mut r = f()?;
    if timings {
        r.wall_time_ms = Some(start.elapsed().as_millis() as u64);
    }
    Ok(r)
}

/// One representative coloring per graph is included while the subject has
/// at most [`FULL_EVIDENCE_LIMIT`] graphs.
pub fn unique_coloring(s: &Subject) -> ClaimReport {
    let full = s.graphs.len() <= FULL_EVIDENCE_LIMIT;
    let mut ok = Vec::new();
    let evidence: Vec<Value> = s
        .graphs
        .iter()
        .map(|g| match count_colorings(g) {
            Ok(c) => {
                ok.push(c.partitions == 1);
                let mut e = json!({ "labeled": c.labeled, "partitions": c.partitions });
                if full {
                    let reps = partition_representatives(g);
                    e["coloring"] = json!(reps.first().map(|c| serde_json::from_str::<Value>(&c.to_json(g)).unwrap()));
                }
                e
            }
            Err(e) => {
                ok.push(false);
                json!({ "error": e.to_string() })
            }
        })
        .collect();
    report("unique-coloring", s, all_pass(ok), json!(evidence))
}

/// Exactly three Hamilton cycles. When the graph is not uniquely colorable
/// the report notes that the converse of the three-cycle property fails.
pub fn three_hamilton(s: &Subject) -> ClaimReport {
    let mut ok = Vec::new();
    let evidence: Vec<Value> = s
        .graphs
        .iter()
        .map(|g| {
            let cycles = enumerate_hamilton_cycles(g);
            ok.push(cycles.len() == 3);
            let partitions = count_colorings(g).map(|c| c.partitions).ok();
            let mut e = json!({ "hamilton_cycles": cycles.len(), "cycles": cycles, "partitions": partitions });
            if partitions.is_some_and(|p| p >= 2) {
                e["note"] = json!("partitions >= 2: three Hamilton cycles do not force a unique coloring");
            }
            e
        })
        .collect();
    report("three-hamilton", s, all_pass(ok), json!(evidence))
}

pub fn triangle_free(s: &Subject) -> ClaimReport {
    let girths: Vec<usize> = s.graphs.iter().map(CubicGraph::girth).collect();
    let verdict = all_pass(girths.iter().map(|&g| g >= 4));
    report("triangle-free", s, verdict, json!({ "girth": girths }))
}

pub fn nonplanar(s: &Subject) -> ClaimReport {
    let certs: Vec<Option<SubdivisionCertificate>> = s.graphs.iter().map(|g| find_k33_subdivision(g, &[])).collect();
    let verdict = all_pass(certs.iter().map(Option::is_some));
    report("nonplanar", s, verdict, json!({ "k33_certificates": certs }))
}

pub fn petersen_minor(s: &Subject) -> ClaimReport {
    let certs: Vec<Option<SubdivisionCertificate>> = s.graphs.iter().map(find_petersen_subdivision).collect();
    let verdict = all_pass(certs.iter().map(Option::is_some));
    report("petersen-minor", s, verdict, json!({ "petersen_certificates": certs }))
}

/// Exhaustive orientable genus of each graph; `expected` is checked when
/// given. Graphs over the size guard are skipped, never passed.
pub fn genus_exhaustive(s: &Subject, expected: Option<usize>) -> ClaimReport {
    let mut executed = Vec::new();
    let mut skipped = 0;
    let evidence: Vec<Value> = s
        .graphs
        .iter()
        .map(|g| match min_orientable_genus_exhaustive(g) {
            Ok((genus, witness)) => {
                let traced = face_trace(g, &witness).map(|r| r.euler_genus == 2 * genus && r.orientable).unwrap_or(false);
                executed.push(traced && expected.is_none_or(|k| k == genus));
                json!({ "genus": genus, "witness": witness })
            }
            Err(Error::Resource(msg)) => {
                skipped += 1;
                json!({ "skipped": msg })
            }
            Err(e) => {
                executed.push(false);
                json!({ "error": e.to_string() })
            }
        })
        .collect();
    let verdict = if executed.is_empty() && skipped > 0 { Verdict::Skipped } else { all_pass(executed) };
    let mut r = report("genus-exhaustive", s, verdict, json!(evidence));
    if let Some(k) = expected {
        r.inputs.params.insert("expected_genus".into(), json!(k));
    }
    r
}

/// `P(9,2)` has orientable genus exactly 1: a traced torus embedding and a
/// K3,3 certificate.
pub fn genus_p92() -> ClaimReport {
    let s = Subject::single("P(9,2)", base_graph());
    let g = &s.graphs[0];
    let (verdict, evidence) = match min_orientable_genus_exhaustive(g) {
        Ok((genus, witness)) => {
            let traced = face_trace(g, &witness).map(|r| r.euler_genus).ok();
            let cert = find_k33_subdivision(g, &[]);
            let ok = genus == 1 && traced == Some(2) && cert.is_some();
            (all_pass([ok]), json!({ "genus": genus, "torus_embedding": witness, "euler_genus": traced, "k33_certificate": cert }))
        }
        Err(e) => (Verdict::Fail, json!({ "error": e.to_string() })),
    };
    let mut r = report("genus-p92", &s, verdict, evidence);
    r.claim = "genus-p92".into();
    r
}

pub fn projective_search(s: &Subject) -> ClaimReport {
    let mut executed = Vec::new();
    let mut skipped = 0;
    let evidence: Vec<Value> = s
        .graphs
        .iter()
        .map(|g| match projective_planar_search(g) {
            Ok(Some(w)) => {
                let r = face_trace(g, &w).ok();
                executed.push(r.as_ref().is_some_and(|r| r.euler_genus == 1 && !r.orientable));
                json!({ "embedding": w, "faces": r.map(|r| r.faces.len()) })
            }
            Ok(None) => {
                executed.push(false);
                json!({ "embedding": null })
            }
            Err(Error::Resource(msg)) => {
                skipped += 1;
                json!({ "skipped": msg })
            }
            Err(e) => {
                executed.push(false);
                json!({ "error": e.to_string() })
            }
        })
        .collect();
    let verdict = if executed.is_empty() && skipped > 0 { Verdict::Skipped } else { all_pass(executed) };
    report("projective-search", s, verdict, json!(evidence))
}

pub fn projective_p92() -> ClaimReport {
    let mut r = projective_search(&Subject::single("P(9,2)", base_graph()));
    r.claim = "projective-p92".into();
    r
}

/// Members above this count get certificates for the first and last member
/// only; the traces still pin down every graph.
pub const FULL_EVIDENCE_LIMIT: usize = 1000;

/// Genus bounds for every `k`-copy member: merged torus embeddings give
/// orientable genus at most `k`, merged projective embeddings give
/// nonorientable genus at most `k`, and `k` disjoint K3,3 subdivisions (when
/// each copy keeps one) give both at least `k`.
pub fn genus_family(k: usize, members: &[FamilyMember]) -> ClaimReport {
    let s = Subject::family(k, members.to_vec());
    let base = base_graph();
    let (torus, projective) = match (min_orientable_genus_exhaustive(&base), projective_planar_search(&base)) {
        (Ok((_, t)), Ok(Some(p))) => (t, p),
        _ => return report("genus-family-k", &s, Verdict::Fail, json!({ "error": "no base embeddings of P(9,2)" })),
    };
    let full = members.len() <= FULL_EVIDENCE_LIMIT;
    let mut ok = Vec::new();
    let mut exact = 0;
    let rows: Vec<Value> = members
        .iter()
        .enumerate()
        .map(|(i, m)| {
            let orient = member_embedding(m, &torus);
            let nonorient = member_embedding(m, &projective);
            let eg = |s: &Result<EmbeddingScheme, Error>| {
                s.as_ref().ok().and_then(|s| face_trace(&m.graph, s).ok()).map(|r| (r.euler_genus, r.orientable))
            };
            let (eo, en) = (eg(&orient), eg(&nonorient));
            ok.push(eo == Some((2 * k, true)) && en == Some((k, false)));
            let lower = find_disjoint_k33_subdivisions(m);
            if lower.is_ok() {
                exact += 1;
            }
            let mut row = json!({
                "trace": m.trace_json(),
                "orientable_euler_genus": eo.map(|x| x.0),
                "nonorientable_euler_genus": en.map(|x| x.0),
                "lower_bound": match &lower { Ok(c) => json!(c.len()), Err(e) => json!(e.to_string()) },
            });
            if full || i == 0 || i + 1 == members.len() {
                row["orientable_embedding"] = json!(orient.ok());
                row["nonorientable_embedding"] = json!(nonorient.ok());
                row["disjoint_k33"] = json!(lower.ok());
            }
            row
        })
        .collect();
    let mut r = report("genus-family-k", &s, all_pass(ok), json!({
        "members": rows,
        "genus_exactly_k": exact,
        "certificates": if full { "all members".to_string() } else { format!("first and last of {}", members.len()) },
    }));
    r.inputs.params.insert("k".into(), json!(k));
    r
}

/// The five factor graphs checked pairwise.
pub fn factor_corpus() -> Vec<(&'static str, CubicGraph)> {
    vec![
        ("K4", complete_k4()),
        ("prism", prism()),
        ("K3,3", complete_bipartite_k33()),
        ("P(9,2)", base_graph()),
        ("Petersen", petersen()),
    ]
}

/// A factor and its label in the report.
pub type Named = (String, CubicGraph);

/// Partition counts multiply: for each ordered pair, every spec (`all`) or
/// 50 specs drawn with `seed`.
pub fn multiplicativity(pairs: &[(Named, Named)], all: bool, seed: u64) -> ClaimReport {
    let mut ok = Vec::new();
    let mut graph6 = Vec::new();
    let rows: Vec<Value> = pairs
        .iter()
        .enumerate()
        .map(|(i, ((n1, g1), (n2, g2)))| {
            graph6.push(to_graph6(g1));
            graph6.push(to_graph6(g2));
            let specs = if all { all_specs(g1, g2) } else { sample_specs(g1, g2, 50, seed.wrapping_add(i as u64)) };
            let p1 = count_colorings(g1).map(|c| c.partitions);
            let p2 = count_colorings(g2).map(|c| c.partitions);
            let (Ok(p1), Ok(p2)) = (p1, p2) else {
                ok.push(false);
                return json!({ "pair": [n1, n2], "error": "factor is not connected" });
            };
            let mismatches: Vec<Value> = specs
                .iter()
                .filter_map(|&spec| {
                    let got = star_compose(g1, g2, spec).ok().and_then(|p| count_colorings(&p.graph).ok()).map(|c| c.partitions);
                    (got != Some(p1 * p2)).then(|| json!({ "spec": spec, "partitions": got }))
                })
                .collect();
            ok.push(mismatches.is_empty());
            json!({
                "pair": [n1, n2],
                "partitions": [p1, p2],
                "expected": p1 * p2,
                "specs_checked": specs.len(),
                "specs": specs,
                "mismatches": mismatches,
            })
        })
        .collect();
    let mut params = BTreeMap::new();
    params.insert("all_specs".into(), json!(all));
    params.insert("seed".into(), json!(seed));
    ClaimReport {
        claim: "multiplicativity".into(),
        inputs: Inputs { graph6, params },
        verdict: all_pass(ok),
        evidence: json!(rows),
        wall_time_ms: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gp(m: usize, k: usize) -> CubicGraph {
        generalized_petersen(GeneralizedPetersenParams::new(m, k).unwrap()).unwrap()
    }

    #[test]
    fn p92_claims_pass() {
        let s = Subject::single("P(9,2)", base_graph());
        for r in [unique_coloring(&s), three_hamilton(&s), triangle_free(&s), nonplanar(&s), petersen_minor(&s)] {
            assert_eq!(r.verdict, Verdict::Pass, "{}", r.claim);
        }
        assert_eq!(genus_p92().verdict, Verdict::Pass);
    }

    #[test]
    fn p15_passes_three_hamilton_with_a_note() {
        let r = three_hamilton(&Subject::single("P(15,2)", gp(15, 2)));
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.evidence[0]["partitions"], json!(61));
        assert!(r.evidence[0]["note"].is_string());
        assert_eq!(unique_coloring(&Subject::single("P(15,2)", gp(15, 2))).verdict, Verdict::Fail);
    }

    #[test]
    fn large_graphs_are_skipped_not_passed() {
        let members = generate_family(2).unwrap();
        let r = genus_exhaustive(&Subject::family(2, members), Some(2));
        assert_eq!(r.verdict, Verdict::Skipped);
        assert_eq!(serde_json::to_value(r.verdict).unwrap(), json!("skipped: guard"));
    }

    #[test]
    fn triangles_fail() {
        assert_eq!(triangle_free(&Subject::single("K4", complete_k4())).verdict, Verdict::Fail);
    }

    #[test]
    fn family_genus_bounds() {
        let r = genus_family(2, &generate_family(2).unwrap());
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.evidence["genus_exactly_k"], json!(6));
    }

    #[test]
    fn k4_with_p92_multiplies_over_every_spec() {
        let pair = (("K4".to_string(), complete_k4()), ("P(9,2)".to_string(), base_graph()));
        let r = multiplicativity(&[pair], true, 0);
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.evidence[0]["specs_checked"], json!(6 * 4 * 18));
    }
}

//! Acceptance gate: one line per criterion, each with its time limit.
//! Exits nonzero if any criterion fails or runs over its limit.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use cubic3ec::coloring::{count_colorings, enumerate_edge_colorings, is_uniquely_3_edge_colorable, ColoringCount};
use cubic3ec::graph::*;
use cubic3ec::hamilton::{count_hamilton_cycles, enumerate_hamilton_cycles};
use cubic3ec::product::*;
use cubic3ec::topology::*;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

type Check = fn() -> Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond { Ok(()) } else { Err(msg()) }
}

fn p92_unique() -> Result<String, String> {
    let c = count_colorings(&base_graph()).map_err(|e| e.to_string())?;
    ensure(c == ColoringCount { labeled: 6, partitions: 1 }, || format!("got {c:?}"))?;
    Ok("labeled 6, partitions 1".into())
}

fn p92_three_hamilton() -> Result<String, String> {
    let g = base_graph();
    let cycles = enumerate_hamilton_cycles(&g);
    ensure(cycles.len() == 3, || format!("{} Hamilton cycles", cycles.len()))?;
    let sets: Vec<Vec<usize>> = cycles.iter().map(|h| h.edge_set(&g)).collect();
    let c = &enumerate_edge_colorings(&g)[0];
    for (a, b) in [(0, 1), (0, 2), (1, 2)] {
        let mut class = c.color_class(a);
        class.extend(c.color_class(b));
        class.sort_unstable();
        ensure(sets.contains(&class), || format!("colors {a},{b} do not form a Hamilton cycle"))?;
    }
    Ok("3 cycles, each the union of two color classes".into())
}

fn p15_converse_fails() -> Result<String, String> {
    let g = gp(15, 2);
    let h = count_hamilton_cycles(&g);
    let c = count_colorings(&g).map_err(|e| e.to_string())?;
    ensure(h == 3 && c.partitions >= 2, || format!("{h} cycles, {} partitions", c.partitions))?;
    Ok(format!("3 Hamilton cycles, {} partitions", c.partitions))
}

fn multiplicativity() -> Result<String, String> {
    let graphs = [
        ("K4", complete_k4()),
        ("prism", prism()),
        ("K3,3", complete_bipartite_k33()),
        ("P(9,2)", base_graph()),
        ("Petersen", petersen()),
    ];
    let parts: Vec<u64> = graphs.iter().map(|(_, g)| count_colorings(g).unwrap().partitions).collect();
    let mut checked = 0;
    for (i, (n1, g1)) in graphs.iter().enumerate() {
        for (j, (n2, g2)) in graphs.iter().enumerate() {
            let specs = sample_specs(g1, g2, 50, 0x5eed + (5 * i + j) as u64);
            ensure(specs.len() >= 50, || format!("{n1} x {n2}: only {} specs", specs.len()))?;
            for spec in specs {
                let p = star_compose(g1, g2, spec).map_err(|e| e.to_string())?.graph;
                let got = count_colorings(&p).map_err(|e| e.to_string())?.partitions;
                ensure(got == parts[i] * parts[j], || {
                    format!("{n1} * {n2} at {spec:?}: {got} != {} * {}", parts[i], parts[j])
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} products over 25 ordered pairs, Petersen factors give 0"))
}

fn family_two() -> Result<String, String> {
    let fam = generate_family(2).map_err(|e| e.to_string())?;
    ensure(fam.len() >= 2, || format!("{} members", fam.len()))?;
    for (i, m) in fam.iter().enumerate() {
        let g = &m.graph;
        ensure(g.order() == 34, || format!("member {i} has {} vertices", g.order()))?;
        ensure(g.is_triangle_free(), || format!("member {i} has a triangle"))?;
        let cert = find_k33_subdivision(g, &[]).ok_or(format!("member {i}: no K3,3 subdivision"))?;
        check_certificate(g, &cert, &[]).map_err(|e| e.to_string())?;
        ensure(is_uniquely_3_edge_colorable(g).unwrap(), || format!("member {i} is not uniquely colorable"))?;
        for other in &fam[i + 1..] {
            ensure(!are_isomorphic(g, &other.graph), || "two members are isomorphic".into())?;
        }
    }
    Ok(format!("{} nonisomorphic members, all 34 vertices, triangle-free, nonplanar, unique", fam.len()))
}

fn family_three() -> Result<String, String> {
    let fam = generate_family(3).map_err(|e| e.to_string())?;
    for m in &fam {
        ensure(m.graph.order() == 50, || format!("{} has {} vertices", m.trace_json(), m.graph.order()))?;
        ensure(is_uniquely_3_edge_colorable(&m.graph).unwrap(), || format!("{} is not unique", m.trace_json()))?;
    }
    Ok(format!("{} members, all 50 vertices, partitions 1", fam.len()))
}

fn genus_p92() -> Result<String, String> {
    let g = base_graph();
    let (genus, w) = min_orientable_genus_exhaustive(&g).map_err(|e| e.to_string())?;
    let r = face_trace(&g, &w).map_err(|e| e.to_string())?;
    ensure(genus == 1 && r.euler_genus == 2 && r.orientable, || format!("genus {genus}, traced {:?}", r.euler_genus))?;
    let cert = find_k33_subdivision(&g, &[]).ok_or("no K3,3 subdivision")?;
    check_certificate(&g, &cert, &[]).map_err(|e| e.to_string())?;
    Ok("orientable genus 1, torus witness traced, K3,3 certificate".into())
}

fn projective_p92() -> Result<String, String> {
    let g = base_graph();
    let w = projective_planar_search(&g).map_err(|e| e.to_string())?.ok_or("no projective embedding found")?;
    let r = face_trace(&g, &w).map_err(|e| e.to_string())?;
    ensure(r.euler_genus == 1 && !r.orientable, || format!("traced Euler genus {}, orientable {}", r.euler_genus, r.orientable))?;
    Ok(format!("nonorientable Euler genus 1, {} faces", r.faces.len()))
}

fn genus_two_member() -> Result<String, String> {
    let g = base_graph();
    let (_, torus) = min_orientable_genus_exhaustive(&g).map_err(|e| e.to_string())?;
    let spec = StarProductSpec::new(0, 0, 0);
    let merged = merge_embeddings(&g, &torus, &g, &torus, spec).map_err(|e| e.to_string())?;
    let product = star_compose(&g, &g, spec).map_err(|e| e.to_string())?.graph;
    let r = face_trace(&product, &merged).map_err(|e| e.to_string())?;
    ensure(product.order() == 34 && r.euler_genus == 4 && r.orientable, || {
        format!("{} vertices, Euler genus {}, orientable {}", product.order(), r.euler_genus, r.orientable)
    })?;
    let member = FamilyMember::from_trace(vec![spec]).map_err(|e| e.to_string())?;
    let certs = find_disjoint_k33_subdivisions(&member).map_err(|e| e.to_string())?;
    ensure(certs.len() == 2 && pairwise_disjoint(&certs), || "certificates overlap".into())?;
    for c in &certs {
        check_certificate(&member.graph, c, &[]).map_err(|e| e.to_string())?;
    }
    Ok("merged torus embeddings: genus 2; 2 disjoint K3,3 certificates".into())
}

fn petersen_minors() -> Result<String, String> {
    let mut graphs = vec![base_graph()];
    graphs.extend(generate_family(2).map_err(|e| e.to_string())?.into_iter().map(|m| m.graph));
    for (i, g) in graphs.iter().enumerate() {
        let cert = find_petersen_subdivision(g).ok_or(format!("graph {i}: no Petersen subdivision"))?;
        check_certificate(g, &cert, &[]).map_err(|e| e.to_string())?;
    }
    Ok(format!("Petersen subdivision in P(9,2) and all {} two-copy members", graphs.len() - 1))
}

fn oracle_equivalence() -> Result<String, String> {
    let corpus = small_cubic_corpus();
    for (name, g) in &corpus {
        let fast: Vec<Vec<u8>> = enumerate_edge_colorings(g).into_iter().map(|c| c.colors().to_vec()).collect();
        ensure(fast == naive_colorings(g), || format!("{name}: colorings differ"))?;
        let (h, naive) = (count_hamilton_cycles(g), naive_hamilton_count(g));
        ensure(h == naive, || format!("{name}: {h} Hamilton cycles, brute force {naive}"))?;
    }
    Ok(format!("{} corpus graphs up to 10 vertices", corpus.len()))
}

fn property_suite() -> Result<String, String> {
    fn run<S: Strategy>(
        cases: u32,
        seed: u8,
        strategy: S,
        test: impl Fn(S::Value) -> Result<(), proptest::test_runner::TestCaseError>,
    ) -> Result<u32, String> {
        let config = Config { cases, failure_persistence: None, ..Config::default() };
        let rng = TestRng::from_seed(RngAlgorithm::ChaCha, &[seed; 32]);
        TestRunner::new_with_rng(config, rng).run(&strategy, test).map_err(|e| e.to_string())?;
        Ok(cases)
    }
    let total = run(1500, 1, relabeled(), prop_girth_invariant)?
        + run(1500, 2, small_relabeled(), prop_colorings_proper)?
        + run(1500, 3, (small_relabeled(), any::<usize>()), |(p, k)| prop_kempe_cover(p, k))?
        + run(2000, 4, random_scheme(), prop_face_trace)?
        + run(1500, 5, spec_pair(), prop_roundtrip)?
        + run(2000, 6, relabeled(), prop_canonical)?;
    ensure(total >= 10_000, || format!("only {total} cases"))?;
    Ok(format!("{total} seeded cases"))
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let criteria: [(u32, &str, Duration, Check); 12] = [
        (1, "P(9,2) is uniquely 3-edge colorable", secs(1), p92_unique),
        (2, "P(9,2) has exactly three Hamilton cycles", secs(1), p92_three_hamilton),
        (3, "P(15,2): three Hamilton cycles but not unique", secs(30), p15_converse_fails),
        (4, "partition counts multiply under star products", secs(300), multiplicativity),
        (5, "two-copy family members", secs(600), family_two),
        (6, "three-copy family members are unique", secs(1800), family_three),
        (7, "orientable genus of P(9,2) is 1", secs(300), genus_p92),
        (8, "P(9,2) embeds in the projective plane", secs(1800), projective_p92),
        (9, "genus-2 member: merged embedding and disjoint K3,3", secs(600), genus_two_member),
        (10, "Petersen minors in P(9,2) and two-copy members", secs(900), petersen_minors),
        (11, "enumerators agree with brute force", secs(60), oracle_equivalence),
        (12, "randomized invariant suite", secs(300), property_suite),
    ];
    let mut failed = 0;
    for (id, name, limit, check) in criteria {
        let start = Instant::now();
        let result = check();
        let took = start.elapsed();
        let (verdict, detail) = match result {
            Ok(d) if took <= limit => ("PASS", d),
            Ok(d) => ("FAIL", format!("{d}; over the time limit")),
            Err(e) => ("FAIL", e),
        };
        if verdict == "FAIL" {
            failed += 1;
        }
        println!("[{verdict}] {id:>2} {name}: {detail} ({:.3}s, limit {}s)", took.as_secs_f64(), limit.as_secs());
    }
    println!("{} of 12 criteria passed", 12 - failed);
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}

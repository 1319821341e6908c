mod common;

use cubic3ec::coloring::{count_colorings, is_uniquely_3_edge_colorable};
use cubic3ec::graph::*;
use cubic3ec::hamilton::count_hamilton_cycles;
use cubic3ec::product::*;

#[test]
fn partition_counts_multiply() {
    let graphs = [complete_k4(), prism(), complete_bipartite_k33(), base_graph(), petersen()];
    let parts: Vec<u64> = graphs.iter().map(|g| count_colorings(g).unwrap().partitions).collect();
    assert_eq!(parts, vec![1, 1, 2, 1, 0]);
    for (i, g1) in graphs.iter().enumerate() {
        for (j, g2) in graphs.iter().enumerate() {
            for spec in sample_specs(g1, g2, 12, 1) {
                let p = star_compose(g1, g2, spec).unwrap().graph;
                assert_eq!(count_colorings(&p).unwrap().partitions, parts[i] * parts[j], "{i} {j} {spec:?}");
            }
        }
    }
}

#[test]
fn two_copy_members() {
    let fam = generate_family(2).unwrap();
    assert_eq!(fam.len(), 6);
    for m in &fam {
        assert_eq!(m.graph.order(), 34);
        assert!(m.graph.is_triangle_free());
        assert!(is_uniquely_3_edge_colorable(&m.graph).unwrap());
        assert_eq!(count_hamilton_cycles(&m.graph), 3);
        assert_eq!(to_graph6(&m.graph.relabel(&canonical_form(&m.graph).permutation).unwrap()), m.canonical);
    }
}

#[test]
fn family_output_is_deterministic() {
    let a: Vec<String> = generate_family(2).unwrap().iter().map(|m| m.trace_json()).collect();
    let b: Vec<String> = generate_family(2).unwrap().iter().map(|m| m.trace_json()).collect();
    assert_eq!(a, b);
}

#[test]
fn decomposing_a_member_recovers_p92_twice() {
    for m in generate_family(2).unwrap() {
        let cuts = enumerate_3_edge_cuts(&m.graph, true);
        assert!(!cuts.is_empty());
        let (x, y) = star_decompose(&m.graph, &cuts[0]).unwrap();
        assert!(are_isomorphic(&x, &base_graph()));
        assert!(are_isomorphic(&y, &base_graph()));
    }
}

mod common;

use common::*;
use tecc::mader_cs::PathTag;
use tecc::multigraph::Multigraph;
use tecc::oracle::cut_pairs_bf;
use tecc::verifier::{acute_subgraph, verify_mader_sequence, verify_report};
use tecc::{decompose, decompose_all};

#[test]
fn golden_graphs_match_oracles_and_verify() {
    for (name, g) in golden_suite() {
        let r = decompose_all(&g);
        assert_eq!(oracle_mismatch(&g, &r), None, "{name}");
        let v = verify_report(&g, &r);
        assert!(v.is_accepted(), "{name}: {v}");
    }
}

#[test]
fn k23_is_its_own_seed() {
    let g = k23();
    let r = decompose(&g, 0);
    assert!(r.is_three_edge_connected());
    assert_eq!(r.components.len(), 1);
    let cert = r.components[0].certificate.as_ref().unwrap();
    assert_eq!(cert.paths.len(), 2);
    assert_eq!(cert.paths[0].vertices, vec![0, 1, 0]);
    assert_eq!(cert.paths[1].vertices, vec![0, 1]);
    assert!(cert.paths.iter().all(|p| p.tag == PathTag::K23Seed));
    assert!(r.cacti[0].cycles.is_empty());
}

#[test]
fn path_is_all_bridges() {
    let g = path(3);
    let r = decompose(&g, 0);
    assert_eq!(partition(&r), vec![vec![0], vec![1], vec![2]]);
    assert_eq!(r.bridges, vec![0, 1]);
    assert!(r.components.iter().all(|c| c.certificate.is_none()));
    assert!(r.cacti.iter().all(|c| c.cycles.is_empty()));
}

#[test]
fn two_k4_split_by_cut_pair() {
    let g = two_k4();
    let r = decompose(&g, 0);
    assert_eq!(partition(&r), vec![vec![0, 1, 2, 3], vec![4, 5, 6, 7]]);
    assert!(r.bridges.is_empty());
    for c in &r.components {
        assert!(c.virtual_edge.is_some());
        assert!(c.certificate.is_some());
    }
    assert_eq!(r.cacti.len(), 1);
    assert_eq!(r.cacti[0].cycles.len(), 1);
    assert_eq!(r.cacti[0].cycles[0].len(), 2);
    assert_eq!(cut_pairs_bf(&g).into_iter().collect::<Vec<_>>(), vec![(12, 13)]);
}

#[test]
fn c4_cactus_is_one_four_cycle() {
    let r = decompose(&cycle(4), 0);
    assert_eq!(r.cacti.len(), 1);
    assert_eq!(r.cacti[0].nodes, vec![0, 1, 2, 3]);
    assert_eq!(r.cacti[0].cycles.len(), 1);
    assert_eq!(r.cacti[0].cycles[0].len(), 4);
}

#[test]
fn three_edge_connected_graphs_give_one_certificate() {
    for g in [k23(), complete(4), complete(5), petersen(), bowtie_k4()] {
        let r = decompose_all(&g);
        assert!(r.is_three_edge_connected());
        assert_eq!(r.components.iter().filter(|c| c.certificate.is_some()).count(), 1);
        assert!(r.cacti.iter().all(|c| c.cycles.is_empty()));
        let acute = acute_subgraph(&g, &r.components[0].members).unwrap();
        let v = verify_mader_sequence(&g, &acute, r.components[0].certificate.as_ref().unwrap());
        assert!(v.is_accepted(), "{v}");
    }
}

#[test]
fn bowtie_needs_a_closed_path() {
    let g = bowtie_k4();
    let r = decompose(&g, 0);
    let cert = r.components[0].certificate.as_ref().unwrap();
    assert!(cert.paths.iter().skip(1).any(|p| p.vertices.first() == p.vertices.last()));
}

#[test]
fn bridged_triangles_two_cacti_cycles() {
    let g = bridged_triangles();
    let r = decompose(&g, 0);
    assert_eq!(r.bridges, vec![6]);
    assert_eq!(r.cacti.len(), 2);
    for c in &r.cacti {
        assert_eq!(c.cycles.len(), 1);
        assert_eq!(c.cycles[0].len(), 3);
    }
}

#[test]
fn every_root_gives_the_same_partition() {
    for (name, g) in golden_suite() {
        let want = partition(&decompose(&g, 0));
        for root in 1..g.vertex_count() {
            let r = decompose(&g, root);
            assert_eq!(partition(&r), want, "{name} root {root}");
            assert!(verify_report(&g, &r).is_accepted(), "{name} root {root}");
        }
    }
}

#[test]
fn ear_counts_match_cyclomatic_number() {
    for (name, g) in golden_suite() {
        let r = decompose_all(&g);
        for (ears, want) in ear_counts(&g, &r.bridges).unwrap() {
            assert_eq!(ears, want, "{name}");
        }
    }
}

#[test]
fn degenerate_inputs() {
    let cases: Vec<(&str, Multigraph)> = vec![
        ("empty", Multigraph::new(0)),
        ("single vertex", Multigraph::new(1)),
        ("single edge", Multigraph::from_edges(2, &[(0, 1)])),
        ("double edge", Multigraph::from_edges(2, &[(0, 1), (0, 1)])),
        ("self-loop only", Multigraph::from_edges(1, &[(0, 0)])),
        ("disconnected", Multigraph::from_edges(7, &[(0, 1), (0, 1), (0, 1), (2, 3), (3, 4), (4, 2)])),
    ];
    for (name, g) in cases {
        let r = decompose_all(&g);
        let v = verify_report(&g, &r);
        assert!(v.is_accepted(), "{name}: {v}");
    }
    let r = decompose_all(&Multigraph::from_edges(2, &[(0, 1), (0, 1)]));
    assert_eq!(partition(&r), vec![vec![0], vec![1]]);
    assert_eq!(r.cacti[0].cycles, vec![vec![0, 1]]);
}

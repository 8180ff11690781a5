#![allow(dead_code)]

use std::collections::BTreeSet;

use tecc::dfs_ear::{annotate_all, ear_decomposition};
use tecc::multigraph::{connected_components, Multigraph};
use tecc::oracle::{bridges_bf, three_ecc_bf};
use tecc::ThreeEccReport;

pub fn cycle(n: usize) -> Multigraph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Multigraph::from_edges(n, &edges)
}

pub fn complete(n: usize) -> Multigraph {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            edges.push((a, b));
        }
    }
    Multigraph::from_edges(n, &edges)
}

pub fn k23() -> Multigraph {
    Multigraph::from_edges(2, &[(0, 1), (0, 1), (0, 1)])
}

pub fn petersen() -> Multigraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Multigraph::from_edges(10, &edges)
}

/// Triangles {0,1,2} and {3,4,5} joined by the bridge (2,3).
pub fn bridged_triangles() -> Multigraph {
    Multigraph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)])
}

/// K4 on {0..3} and K4 on {4..7} joined by edges (3,4) and (0,7).
pub fn two_k4() -> Multigraph {
    let mut edges = Vec::new();
    for base in [0, 4] {
        for a in 0..4 {
            for b in a + 1..4 {
                edges.push((base + a, base + b));
            }
        }
    }
    edges.push((3, 4));
    edges.push((0, 7));
    Multigraph::from_edges(8, &edges)
}

/// Two K4s sharing vertex 0: 3-edge-connected with a cut vertex.
pub fn bowtie_k4() -> Multigraph {
    let mut edges = Vec::new();
    for group in [[0, 1, 2, 3], [0, 4, 5, 6]] {
        for a in 0..4 {
            for b in a + 1..4 {
                edges.push((group[a], group[b]));
            }
        }
    }
    Multigraph::from_edges(7, &edges)
}

pub fn path(n: usize) -> Multigraph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Multigraph::from_edges(n, &edges)
}

pub fn star(n: usize) -> Multigraph {
    let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
    Multigraph::from_edges(n, &edges)
}

/// Binary-heap shaped tree.
pub fn binary_tree(n: usize) -> Multigraph {
    let edges: Vec<_> = (1..n).map(|i| ((i - 1) / 2, i)).collect();
    Multigraph::from_edges(n, &edges)
}

pub fn golden_suite() -> Vec<(&'static str, Multigraph)> {
    vec![
        ("K2^3", k23()),
        ("C3", cycle(3)),
        ("C4", cycle(4)),
        ("C5", cycle(5)),
        ("C6", cycle(6)),
        ("K4", complete(4)),
        ("K5", complete(5)),
        ("Petersen", petersen()),
        ("bridged triangles", bridged_triangles()),
        ("two K4 with cut-pair", two_k4()),
        ("bowtie of K4s", bowtie_k4()),
        ("path 6", path(6)),
        ("star 6", star(6)),
        ("binary tree 9", binary_tree(9)),
    ]
}

pub fn partition(report: &ThreeEccReport) -> Vec<Vec<usize>> {
    let mut p: Vec<Vec<usize>> = report.components.iter().map(|c| c.members.clone()).collect();
    p.sort();
    p
}

/// Compares partition and bridges with the oracles; `None` when they agree.
pub fn oracle_mismatch(g: &Multigraph, report: &ThreeEccReport) -> Option<String> {
    let mut want = three_ecc_bf(g);
    want.sort();
    let got = partition(report);
    if got != want {
        return Some(format!("partition {got:?} vs oracle {want:?}"));
    }
    let wb: Vec<usize> = bridges_bf(g).into_iter().collect();
    if report.bridges != wb {
        return Some(format!("bridges {:?} vs oracle {wb:?}", report.bridges));
    }
    None
}

/// Vertex sets of the 2-edge-connected components (bridges removed).
pub fn two_ecc_pieces(g: &Multigraph, bridges: &[usize]) -> Vec<Vec<usize>> {
    let bset: BTreeSet<usize> = bridges.iter().copied().collect();
    let kept: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .enumerate()
        .filter(|(id, _)| !bset.contains(id))
        .map(|(_, e)| (e.a, e.b))
        .collect();
    connected_components(&Multigraph::from_edges(g.vertex_count(), &kept))
}

/// For every 2-edge-connected piece: (number of ears inside it, m' - n' + 1).
/// Ears must partition the piece's non-loop edges, and the first ear of each
/// piece with edges must be a cycle.
pub fn ear_counts(g: &Multigraph, bridges: &[usize]) -> Result<Vec<(usize, usize)>, String> {
    let ann = annotate_all(g);
    let ears = ear_decomposition(g, &ann);
    let pieces = two_ecc_pieces(g, bridges);
    let mut piece_of = vec![0; g.vertex_count()];
    for (i, p) in pieces.iter().enumerate() {
        for &v in p {
            piece_of[v] = i;
        }
    }
    let bset: BTreeSet<usize> = bridges.iter().copied().collect();
    let mut counts = vec![0usize; pieces.len()];
    let mut first_seen = vec![false; pieces.len()];
    let mut covered = vec![0usize; g.edge_count()];
    for ear in &ears {
        let p = piece_of[ear.vertices[0]];
        if ear.vertices.iter().any(|&v| piece_of[v] != p) {
            return Err(format!("ear {:?} leaves its piece", ear.vertices));
        }
        if !first_seen[p] {
            first_seen[p] = true;
            if ear.vertices.first() != ear.vertices.last() {
                return Err(format!("first ear {:?} of piece {p} is not a cycle", ear.vertices));
            }
        }
        counts[p] += 1;
        for &e in &ear.edges {
            covered[e] += 1;
        }
    }
    for (id, e) in g.edges().iter().enumerate() {
        let want = usize::from(e.a != e.b && !bset.contains(&id));
        if covered[id] != want {
            return Err(format!("edge {id} covered {} times", covered[id]));
        }
    }
    let mut out = Vec::new();
    for (i, p) in pieces.iter().enumerate() {
        let inside: BTreeSet<usize> = p.iter().copied().collect();
        let m = g
            .edges()
            .iter()
            .filter(|e| e.a != e.b && inside.contains(&e.a) && inside.contains(&e.b))
            .count();
        out.push((counts[i], m + 1 - p.len()));
    }
    Ok(out)
}

//! Brute-force ground truth for small graphs: bridges, cut-pairs and
//! 3-edge-connected classes by exhaustive edge removal.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::multigraph::Multigraph;

/// Component label per vertex in `g` with the edges flagged in `removed` deleted.
pub fn labels_without(g: &Multigraph, removed: &[bool]) -> Vec<usize> {
    let n = g.vertex_count();
    let mut label = vec![usize::MAX; n];
    let mut stack = Vec::new();
    let mut next = 0;
    for s in 0..n {
        if label[s] != usize::MAX {
            continue;
        }
        label[s] = next;
        stack.push(s);
        while let Some(v) = stack.pop() {
            for h in g.adjacency(v) {
                if !removed[h.edge] && label[h.to] == usize::MAX {
                    label[h.to] = next;
                    stack.push(h.to);
                }
            }
        }
        next += 1;
    }
    label
}

fn splits(g: &Multigraph, removed: &[bool], edge: usize) -> bool {
    let label = labels_without(g, removed);
    let e = g.edge(edge);
    label[e.a] != label[e.b]
}

/// Edges whose removal disconnects their endpoints.
pub fn bridges_bf(g: &Multigraph) -> BTreeSet<usize> {
    let mut removed = vec![false; g.edge_count()];
    let mut out = BTreeSet::new();
    for e in 0..g.edge_count() {
        removed[e] = true;
        if splits(g, &removed, e) {
            out.insert(e);
        }
        removed[e] = false;
    }
    out
}

/// Unordered pairs `(e, f)` with `e < f`, neither a bridge, whose joint
/// removal disconnects the component holding them.
pub fn cut_pairs_bf(g: &Multigraph) -> BTreeSet<(usize, usize)> {
    let m = g.edge_count();
    let bridges = bridges_bf(g);
    let mut removed = vec![false; m];
    let mut out = BTreeSet::new();
    for e in 0..m {
        if bridges.contains(&e) {
            continue;
        }
        for f in e + 1..m {
            if bridges.contains(&f) {
                continue;
            }
            removed[e] = true;
            removed[f] = true;
            let label = labels_without(g, &removed);
            let (x, y) = (g.edge(e), g.edge(f));
            if label[x.a] != label[x.b] || label[y.a] != label[y.b] {
                out.insert((e, f));
            }
            removed[e] = false;
            removed[f] = false;
        }
    }
    out
}

/// Classes of the relation "still connected after deleting any two edges".
/// Blocks are sorted and ordered by smallest member.
pub fn three_ecc_bf(g: &Multigraph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let m = g.edge_count();
    let mut class = labels_without(g, &vec![false; m]);
    let mut removed = vec![false; m];
    let refine = |class: &mut Vec<usize>, removed: &[bool]| {
        let label = labels_without(g, removed);
        let mut ids: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for v in 0..n {
            let k = ids.len();
            class[v] = *ids.entry((class[v], label[v])).or_insert(k);
        }
    };
    for e in 0..m {
        removed[e] = true;
        refine(&mut class, &removed);
        for f in e + 1..m {
            removed[f] = true;
            refine(&mut class, &removed);
            removed[f] = false;
        }
        removed[e] = false;
    }
    blocks_from_labels(&class)
}

pub fn blocks_from_labels(label: &[usize]) -> Vec<Vec<usize>> {
    let mut by: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (v, &l) in label.iter().enumerate() {
        by.entry(l).or_default().push(v);
    }
    let mut blocks: Vec<Vec<usize>> = by.into_values().collect();
    blocks.sort_by_key(|b| b[0]);
    blocks
}

/// Number of edge-disjoint `s`-`t` paths, capped at `cap`, by unit-capacity
/// augmenting paths on the bidirected graph.
pub fn local_edge_connectivity(g: &Multigraph, s: usize, t: usize, cap: usize) -> usize {
    if s == t {
        return cap;
    }
    let m = g.edge_count();
    // flow[e] in {-1, 0, 1}: +1 means one unit from edge.a to edge.b.
    let mut flow = vec![0i8; m];
    let mut total = 0;
    while total < cap {
        let mut prev: Vec<Option<(usize, usize)>> = vec![None; g.vertex_count()];
        let mut seen = vec![false; g.vertex_count()];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            if v == t {
                break;
            }
            for h in g.adjacency(v) {
                let e = g.edge(h.edge);
                let dir: i8 = if e.a == v { 1 } else { -1 };
                if flow[h.edge] == dir || seen[h.to] {
                    continue;
                }
                seen[h.to] = true;
                prev[h.to] = Some((v, h.edge));
                queue.push_back(h.to);
            }
        }
        if !seen[t] {
            break;
        }
        let mut v = t;
        while let Some((u, e)) = prev[v] {
            let dir: i8 = if g.edge(e).a == u { 1 } else { -1 };
            flow[e] += dir;
            v = u;
        }
        total += 1;
    }
    total
}

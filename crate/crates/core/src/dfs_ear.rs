//! Depth-first annotations, the lexicographic order on back-edges and the
//! ear decomposition it induces.

use std::cmp::Ordering;

use crate::multigraph::Multigraph;

pub const NONE: usize = usize::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeKind {
    Unvisited,
    Tree,
    Back,
}

/// A back-edge standing for the ear it defines.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EarRef {
    pub back_edge: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EarPath {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

/// Per-vertex and per-edge DFS state. `exit` is `NONE` while a vertex is on
/// the active stack, which makes its ancestor interval open-ended.
#[derive(Clone, Debug)]
pub struct DfsAnnotations {
    pub dfs_num: Vec<usize>,
    pub parent: Vec<usize>,
    pub parent_edge: Vec<usize>,
    pub lowpt: Vec<usize>,
    pub entry: Vec<usize>,
    pub exit: Vec<usize>,
    pub edge_kind: Vec<EdgeKind>,
    /// For a back-edge: the ancestor endpoint. For a tree edge: the parent.
    pub head: Vec<usize>,
    /// For a back-edge: the descendant endpoint. For a tree edge: the child.
    pub tail: Vec<usize>,
    /// Back-edge id defining the ear of each edge; `NONE` for bridges.
    pub ear_label: Vec<usize>,
    clock: usize,
}

impl DfsAnnotations {
    pub fn new(n: usize, m: usize) -> Self {
        DfsAnnotations {
            dfs_num: vec![0; n],
            parent: vec![NONE; n],
            parent_edge: vec![NONE; n],
            lowpt: vec![0; n],
            entry: vec![0; n],
            exit: vec![NONE; n],
            edge_kind: vec![EdgeKind::Unvisited; m],
            head: vec![NONE; m],
            tail: vec![NONE; m],
            ear_label: vec![NONE; m],
            clock: 0,
        }
    }

    pub fn visited(&self, v: usize) -> bool {
        self.dfs_num[v] != 0
    }

    /// Assigns the next dfs number to `v` and opens its ancestor interval.
    pub fn open(&mut self, v: usize, parent: usize, parent_edge: usize) {
        self.clock += 1;
        self.dfs_num[v] = self.clock;
        self.entry[v] = self.clock;
        self.lowpt[v] = self.clock;
        self.parent[v] = parent;
        self.parent_edge[v] = parent_edge;
        if parent_edge != NONE {
            self.edge_kind[parent_edge] = EdgeKind::Tree;
            self.head[parent_edge] = parent;
            self.tail[parent_edge] = v;
        }
    }

    pub fn close(&mut self, v: usize) {
        self.exit[v] = self.clock + 1;
    }

    pub fn classify_back(&mut self, e: usize, head: usize, tail: usize) {
        self.edge_kind[e] = EdgeKind::Back;
        self.head[e] = head;
        self.tail[e] = tail;
        self.ear_label[e] = e;
    }

    /// `a` is an ancestor of `b` (reflexive). Both must be visited.
    pub fn is_ancestor(&self, a: usize, b: usize) -> bool {
        assert!(self.visited(a) && self.visited(b), "ancestor test on unvisited vertex");
        self.entry[a] <= self.entry[b] && (self.exit[a] == NONE || self.entry[b] < self.exit[a])
    }

    /// The order on back-edges: head depth first; for equal heads a deeper
    /// tail comes first, unrelated tails go by dfs number, and parallel edges
    /// by encounter order. `NONE` is greater than every edge.
    pub fn compare_lex(&self, f: usize, g: usize) -> Ordering {
        if f == g {
            return Ordering::Equal;
        }
        if f == NONE {
            return Ordering::Greater;
        }
        if g == NONE {
            return Ordering::Less;
        }
        assert!(
            self.edge_kind[f] == EdgeKind::Back && self.edge_kind[g] == EdgeKind::Back,
            "compare_lex on non-back edge"
        );
        let (q, p) = (self.head[f], self.tail[f]);
        let (y, x) = (self.head[g], self.tail[g]);
        match self.dfs_num[q].cmp(&self.dfs_num[y]) {
            Ordering::Equal => {}
            other => return other,
        }
        if p == x {
            return f.cmp(&g);
        }
        if self.is_ancestor(x, p) {
            return Ordering::Less;
        }
        if self.is_ancestor(p, x) {
            return Ordering::Greater;
        }
        self.dfs_num[p].cmp(&self.dfs_num[x])
    }

    pub fn lex_less(&self, f: usize, g: usize) -> bool {
        self.compare_lex(f, g) == Ordering::Less
    }

    pub fn lex_min(&self, f: usize, g: usize) -> usize {
        if self.lex_less(g, f) {
            g
        } else {
            f
        }
    }
}

/// Full DFS from `root` with an explicit stack, filling every annotation
/// including ear labels.
pub fn annotate(g: &Multigraph, root: usize) -> DfsAnnotations {
    let mut ann = DfsAnnotations::new(g.vertex_count(), g.edge_count());
    annotate_into(g, root, &mut ann);
    ann
}

/// Annotates every connected component, rooted at its smallest vertex.
pub fn annotate_all(g: &Multigraph) -> DfsAnnotations {
    let mut ann = DfsAnnotations::new(g.vertex_count(), g.edge_count());
    for r in 0..g.vertex_count() {
        if !ann.visited(r) {
            annotate_into(g, r, &mut ann);
        }
    }
    ann
}

fn annotate_into(g: &Multigraph, root: usize, ann: &mut DfsAnnotations) {
    // best[v]: lex-min candidate ear over v's outgoing back-edges and children.
    let mut best = vec![NONE; g.vertex_count()];
    ann.open(root, NONE, NONE);
    let mut stack = vec![(root, 0usize)];
    while let Some(&mut (w, ref mut i)) = stack.last_mut() {
        let adj = g.adjacency(w);
        if *i < adj.len() {
            let h = adj[*i];
            *i += 1;
            if !ann.visited(h.to) {
                ann.open(h.to, w, h.edge);
                stack.push((h.to, 0));
            } else if h.edge != ann.parent_edge[w] && ann.dfs_num[h.to] < ann.dfs_num[w] {
                ann.classify_back(h.edge, h.to, w);
                ann.lowpt[w] = ann.lowpt[w].min(ann.dfs_num[h.to]);
                best[w] = ann.lex_min(best[w], h.edge);
            }
            continue;
        }
        stack.pop();
        ann.close(w);
        let pe = ann.parent_edge[w];
        if pe == NONE {
            continue;
        }
        let v = ann.parent[w];
        let b = best[w];
        if b != NONE && ann.dfs_num[ann.head[b]] < ann.dfs_num[w] {
            ann.ear_label[pe] = b;
            best[v] = ann.lex_min(best[v], b);
        }
        ann.lowpt[v] = ann.lowpt[v].min(ann.lowpt[w]);
    }
}

/// The ear of back-edge `e`: from its head through `e` to its tail, then up
/// the tree edges carrying the same label.
pub fn materialize_ear(e: EarRef, ann: &DfsAnnotations) -> EarPath {
    let f = e.back_edge;
    let mut vertices = vec![ann.head[f], ann.tail[f]];
    let mut edges = vec![f];
    let mut x = ann.tail[f];
    while ann.parent_edge[x] != NONE && ann.ear_label[ann.parent_edge[x]] == f {
        edges.push(ann.parent_edge[x]);
        x = ann.parent[x];
        vertices.push(x);
    }
    EarPath { vertices, edges }
}

/// All ears of the graph in lexicographic order of their back-edges.
pub fn ear_decomposition(g: &Multigraph, ann: &DfsAnnotations) -> Vec<EarPath> {
    let mut backs: Vec<usize> =
        (0..g.edge_count()).filter(|&e| ann.edge_kind[e] == EdgeKind::Back).collect();
    backs.sort_by(|&a, &b| ann.compare_lex(a, b));
    backs.into_iter().map(|f| materialize_ear(EarRef { back_edge: f }, ann)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parallel_edges_give_a_two_cycle_first() {
        let g = Multigraph::from_edges(2, &[(0, 1), (0, 1), (0, 1)]);
        let ann = annotate(&g, 0);
        let ears = ear_decomposition(&g, &ann);
        assert_eq!(ears[0].vertices, vec![0, 1, 0]);
        assert_eq!(ears[1].vertices, vec![0, 1]);
        assert_eq!(ears.len(), 2);
    }

    #[test]
    fn triangle_ear_is_the_whole_cycle() {
        let g = Multigraph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]);
        let ann = annotate(&g, 0);
        let p = materialize_ear(EarRef { back_edge: 2 }, &ann);
        assert_eq!(p.vertices, vec![0, 2, 1, 0]);
        assert_eq!(p.edges, vec![2, 1, 0]);
    }

    #[test]
    fn ancestor_relation() {
        // 0 - 1, 0 - 2: siblings 1 and 2.
        let g = Multigraph::from_edges(3, &[(0, 1), (0, 2)]);
        let ann = annotate(&g, 0);
        assert!(ann.is_ancestor(1, 1));
        assert!(ann.is_ancestor(0, 2));
        assert!(!ann.is_ancestor(1, 2));
        assert!(!ann.is_ancestor(2, 1));
    }

    #[test]
    fn order_rules() {
        // path 0-1-2-3 with back-edges 3->0 (e3), 2->1 (e4), 3->1 (e5), 3->1 (e6)
        let g = Multigraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (2, 1), (3, 1), (3, 1)]);
        let ann = annotate(&g, 0);
        assert_eq!(ann.edge_kind[4], EdgeKind::Back);
        // rule (i): head 0 before head 1
        assert_eq!(ann.compare_lex(3, 4), Ordering::Less);
        // rule (iii): tail 3 deeper than tail 2
        assert_eq!(ann.compare_lex(5, 4), Ordering::Less);
        assert_eq!(ann.compare_lex(4, 5), Ordering::Greater);
        // rule (iv): parallel edges by encounter order
        assert_eq!(ann.compare_lex(5, 6), Ordering::Less);
        assert_eq!(ann.compare_lex(3, NONE), Ordering::Less);
    }

    #[test]
    fn bridges_have_no_ear() {
        let g = Multigraph::from_edges(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]);
        let ann = annotate(&g, 0);
        assert_eq!(ann.ear_label[3], NONE);
        assert_eq!(ann.ear_label[0], 2);
    }
}

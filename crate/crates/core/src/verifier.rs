//! Independent checks of a decomposition report against the raw graph.
//! Nothing here reads engine state.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::cactus_builder::Cactus;
use crate::decomposer::ThreeEccReport;
use crate::mader_cs::Certificate;
use crate::multigraph::{connected_components, Multigraph};
use crate::oracle::{bridges_bf, cut_pairs_bf, three_ecc_bf};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Verdict {
    pub reasons: Vec<String>,
}

impl Verdict {
    pub fn accept() -> Self {
        Verdict::default()
    }

    pub fn reject(reason: impl Into<String>) -> Self {
        Verdict { reasons: vec![reason.into()] }
    }

    pub fn is_accepted(&self) -> bool {
        self.reasons.is_empty()
    }

    fn absorb(&mut self, scope: &str, other: Verdict) {
        self.reasons.extend(other.reasons.into_iter().map(|r| format!("{scope}: {r}")));
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.reasons.is_empty() {
            return write!(f, "accept");
        }
        write!(f, "reject")?;
        for r in &self.reasons {
            write!(f, "\n  {r}")?;
        }
        Ok(())
    }
}

/// A component together with the virtual edges that stand in for the rest of
/// the graph: one per neighbouring piece attached by exactly two edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AcuteGraph {
    pub members: Vec<usize>,
    /// Non-loop edges with both ends in the component.
    pub real_edges: Vec<usize>,
    /// Unordered endpoint pairs `(a, b)` with `a < b`.
    pub virtual_edges: Vec<(usize, usize)>,
}

/// Builds the component graph of `members` with virtual edges. Fails if some
/// piece of the rest attaches by three or more edges, which means `members`
/// is not a 3-edge-connected class.
pub fn acute_subgraph(g: &Multigraph, members: &[usize]) -> Result<AcuteGraph, String> {
    let n = g.vertex_count();
    let mut inside = vec![false; n];
    for &v in members {
        inside[v] = true;
    }
    let mut real_edges = Vec::new();
    for (id, e) in g.edges().iter().enumerate() {
        if e.a != e.b && inside[e.a] && inside[e.b] {
            real_edges.push(id);
        }
    }
    let mut piece = vec![usize::MAX; n];
    let mut virtual_edges = Vec::new();
    let mut stack = Vec::new();
    for s in 0..n {
        if inside[s] || piece[s] != usize::MAX {
            continue;
        }
        piece[s] = s;
        stack.push(s);
        let mut attach = Vec::new();
        while let Some(v) = stack.pop() {
            for h in g.adjacency(v) {
                if inside[h.to] {
                    attach.push(h.to);
                } else if piece[h.to] == usize::MAX {
                    piece[h.to] = s;
                    stack.push(h.to);
                }
            }
        }
        match attach.len() {
            0 | 1 => {}
            2 => {
                let (a, b) = (attach[0].min(attach[1]), attach[0].max(attach[1]));
                if a != b {
                    virtual_edges.push((a, b));
                }
            }
            k => return Err(format!("piece containing vertex {s} attaches by {k} edges")),
        }
    }
    virtual_edges.sort_unstable();
    let mut members = members.to_vec();
    members.sort_unstable();
    Ok(AcuteGraph { members, real_edges, virtual_edges })
}

struct Growing {
    present: Vec<bool>,
    adj: Vec<Vec<(usize, usize)>>,
    stamp: Vec<usize>,
}

impl Growing {
    fn add_edge(&mut self, a: usize, b: usize, key: usize) {
        self.adj[a].push((b, key));
        self.adj[b].push((a, key));
    }

    /// Marks the link through degree-2 vertex `x` with `tag`.
    fn mark_link(&mut self, x: usize, tag: usize) {
        self.stamp[x] = tag;
        for start in 0..2 {
            let (mut prev_key, mut v) = (self.adj[x][start].1, self.adj[x][start].0);
            let mut guard = 0;
            while self.stamp[v] != tag && guard <= self.adj.len() {
                self.stamp[v] = tag;
                if self.adj[v].len() != 2 {
                    break;
                }
                let next = if self.adj[v][0].1 == prev_key { self.adj[v][1] } else { self.adj[v][0] };
                prev_key = next.1;
                v = next.0;
                guard += 1;
            }
        }
    }
}

/// Replays a construction sequence. The first path must be a cycle and the
/// second a path between two distinct cycle vertices; every later path must
/// join present vertices through new ones, either two inner vertices of
/// distinct links or at least one branch vertex; a closed path must start at a
/// branch vertex. Edges must cover `acute` exactly.
pub fn verify_mader_sequence(g: &Multigraph, acute: &AcuteGraph, cert: &Certificate) -> Verdict {
    let n = g.vertex_count();
    let m = g.edge_count();
    let paths = &cert.paths;
    if paths.len() < 2 {
        return Verdict::reject(format!("seed: need at least two paths, got {}", paths.len()));
    }
    let mut in_comp = vec![false; n];
    for &v in &acute.members {
        in_comp[v] = true;
    }
    let mut st = Growing {
        present: vec![false; n],
        adj: vec![Vec::new(); n],
        stamp: vec![usize::MAX; n],
    };
    let mut seen_real = BTreeSet::new();
    let mut seen_virtual = BTreeSet::new();
    let mut virtual_pairs = Vec::new();
    for (i, p) in paths.iter().enumerate() {
        let at = |r: String| Verdict::reject(format!("path {i}: {r}"));
        let k = p.edges.len();
        if k == 0 || p.vertices.len() != k + 1 {
            return at("malformed path".into());
        }
        if let Some(&v) = p.vertices.iter().find(|&&v| v >= n || !in_comp[v]) {
            return at(format!("vertex {v} outside the component"));
        }
        for (j, ce) in p.edges.iter().enumerate() {
            let (a, b) = (p.vertices[j], p.vertices[j + 1]);
            if a == b {
                return at("loop".into());
            }
            if ce.is_virtual {
                if ce.id < m || !seen_virtual.insert(ce.id) {
                    return at(format!("bad virtual edge id {}", ce.id));
                }
                virtual_pairs.push((a.min(b), a.max(b)));
            } else {
                let e = match g.edges().get(ce.id) {
                    Some(e) => e,
                    None => return at(format!("unknown edge {}", ce.id)),
                };
                if !((e.a == a && e.b == b) || (e.a == b && e.b == a)) {
                    return at(format!("edge {} does not join {a} and {b}", ce.id));
                }
                if !seen_real.insert(ce.id) {
                    return at(format!("edge {} used twice", ce.id));
                }
            }
        }
        let (x, y) = (p.vertices[0], p.vertices[k]);
        let inner = &p.vertices[1..k];
        if i == 0 {
            if x != y || k < 2 {
                return at("seed: first path is not a cycle".into());
            }
            st.present[x] = true;
        } else {
            if !st.present[x] || !st.present[y] {
                return at("endpoint not in the graph built so far".into());
            }
            if x == y {
                // A closed path is a subdivided loop, fine only at a branch vertex.
                if i == 1 || st.adj[x].len() < 3 {
                    return at(format!("closed path at non-branch vertex {x}"));
                }
            } else if i == 1 {
                // Both ends lie on the cycle, so the union is a theta.
            } else if st.adj[x].len() == 2 && st.adj[y].len() == 2 {
                st.mark_link(x, i);
                if st.stamp[y] == i {
                    return at(format!("endpoints {x} and {y} lie on one link"));
                }
            }
        }
        for &v in inner {
            if st.present[v] {
                return at(format!("inner vertex {v} already present"));
            }
            st.present[v] = true;
        }
        for (j, ce) in p.edges.iter().enumerate() {
            st.add_edge(p.vertices[j], p.vertices[j + 1], ce.id);
        }
        if i == 0 {
            let distinct: BTreeSet<usize> = p.vertices[..k].iter().copied().collect();
            if distinct.len() != k {
                return at("seed: cycle repeats a vertex".into());
            }
        }
    }
    let mut v = Verdict::accept();
    if let Some(&x) = acute.members.iter().find(|&&x| !st.present[x]) {
        v.reasons.push(format!("vertex {x} never added"));
    }
    let want_real: BTreeSet<usize> = acute.real_edges.iter().copied().collect();
    if seen_real != want_real {
        let missing: Vec<_> = want_real.difference(&seen_real).collect();
        let extra: Vec<_> = seen_real.difference(&want_real).collect();
        v.reasons.push(format!("real edge cover mismatch: missing {missing:?}, extra {extra:?}"));
    }
    virtual_pairs.sort_unstable();
    if virtual_pairs != acute.virtual_edges {
        v.reasons.push(format!(
            "virtual edges {virtual_pairs:?} differ from expected {:?}",
            acute.virtual_edges
        ));
    }
    v
}

/// Edge pairs separated by removing two edges of one cactus cycle, where
/// vertex `v` of `g` sits in node `phi[v]`. Edges between nodes that are not
/// consecutive on any cycle are ignored.
pub fn implied_cut_pairs(g: &Multigraph, cactus: &Cactus, phi: &[usize]) -> BTreeSet<(usize, usize)> {
    let mut between: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (id, e) in g.edges().iter().enumerate() {
        let (a, b) = (phi[e.a], phi[e.b]);
        if a != b {
            between.entry((a.min(b), a.max(b))).or_default().push(id);
        }
    }
    let mut out = BTreeSet::new();
    for cyc in &cactus.cycles {
        let k = cyc.len();
        let steps = if k == 2 { 1 } else { k };
        let mut edges: Vec<usize> = (0..steps)
            .flat_map(|j| {
                let (a, b) = (cyc[j], cyc[(j + 1) % k]);
                between.get(&(a.min(b), a.max(b))).cloned().unwrap_or_default()
            })
            .collect();
        edges.sort_unstable();
        for (x, &e) in edges.iter().enumerate() {
            for &f in &edges[x + 1..] {
                out.insert((e, f));
            }
        }
    }
    out
}

/// Checks a cactus of the 2-edge-connected graph `g2` whose vertices map to
/// cactus nodes by `phi`. Each cycle must be realized by G-edges between
/// consecutive nodes and the pairs it implies must be exactly the cut-pairs.
pub fn verify_cactus(g2: &Multigraph, cactus: &Cactus, phi: &[usize]) -> Verdict {
    let mut v = Verdict::accept();
    let nodes: BTreeSet<usize> = cactus.nodes.iter().copied().collect();
    let images: BTreeSet<usize> = phi.iter().copied().collect();
    if nodes != images || nodes.len() != cactus.nodes.len() {
        v.reasons.push(format!("node set {:?} differs from vertex images {images:?}", cactus.nodes));
        return v;
    }
    let mut between: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (id, e) in g2.edges().iter().enumerate() {
        let (a, b) = (phi[e.a], phi[e.b]);
        if a != b {
            between.entry((a.min(b), a.max(b))).or_default().push(id);
        }
    }
    let mut used: BTreeSet<(usize, usize)> = BTreeSet::new();
    for (ci, cyc) in cactus.cycles.iter().enumerate() {
        let k = cyc.len();
        let distinct: BTreeSet<usize> = cyc.iter().copied().collect();
        if k < 2 || distinct.len() != k || !distinct.is_subset(&nodes) {
            v.reasons.push(format!("cycle {ci} {cyc:?} is malformed"));
            continue;
        }
        let steps = if k == 2 { 1 } else { k };
        let per_step = if k == 2 { 2 } else { 1 };
        for j in 0..steps {
            let (a, b) = (cyc[j], cyc[(j + 1) % k]);
            let key = (a.min(b), a.max(b));
            let found = between.get(&key).map_or(0, |x| x.len());
            if found != per_step || !used.insert(key) {
                v.reasons.push(format!("cycle {ci}: nodes {a} and {b} joined by {found} edges"));
            }
        }
    }
    if !v.is_accepted() {
        return v;
    }
    let implied = implied_cut_pairs(g2, cactus, phi);
    if let Some((k, _)) = between.iter().find(|(k, _)| !used.contains(k)) {
        v.reasons.push(format!("nodes {} and {} adjacent but on no cycle", k.0, k.1));
    }
    let truth = cut_pairs_bf(g2);
    if let Some(p) = truth.difference(&implied).next() {
        v.reasons.push(format!("missing cut-pair {p:?}"));
    }
    if let Some(p) = implied.difference(&truth).next() {
        v.reasons.push(format!("spurious cut-pair {p:?}"));
    }
    v
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    /// Compare against the exhaustive oracles when `n` is at most this.
    pub oracle_max_n: usize,
    /// Check cacti against brute-force cut-pairs when the 2-edge-connected
    /// component has at most this many edges.
    pub cactus_max_m: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { oracle_max_n: 12, cactus_max_m: 60 }
    }
}

pub fn verify_report(g: &Multigraph, report: &ThreeEccReport) -> Verdict {
    verify_report_with(g, report, VerifyOptions::default())
}

pub fn verify_report_with(g: &Multigraph, report: &ThreeEccReport, opts: VerifyOptions) -> Verdict {
    let n = g.vertex_count();
    let mut verdict = Verdict::accept();
    let mut rep = vec![usize::MAX; n];
    for c in &report.components {
        if c.members.is_empty() || !c.members.contains(&c.representative) {
            verdict.reasons.push(format!("partition: bad component {:?}", c.members));
        }
        for &v in &c.members {
            if v >= n || rep[v] != usize::MAX {
                verdict.reasons.push(format!("partition: vertex {v} out of range or repeated"));
            } else {
                rep[v] = c.representative;
            }
        }
    }
    if rep.iter().any(|&r| r == usize::MAX) {
        verdict.reasons.push("partition: not every vertex is covered".into());
    }
    if !verdict.is_accepted() {
        return verdict;
    }
    if n <= opts.oracle_max_n {
        let mut got: Vec<Vec<usize>> = report.components.iter().map(|c| c.members.clone()).collect();
        got.sort();
        let mut want = three_ecc_bf(g);
        want.sort();
        if got != want {
            verdict.reasons.push(format!("partition: {got:?} differs from oracle {want:?}"));
        }
        let want_b: Vec<usize> = bridges_bf(g).into_iter().collect();
        let mut got_b = report.bridges.clone();
        got_b.sort_unstable();
        if got_b != want_b {
            verdict.reasons.push(format!("bridges: {got_b:?} differ from oracle {want_b:?}"));
        }
    }
    for (i, c) in report.components.iter().enumerate() {
        let scope = format!("component {i}");
        match (&c.certificate, c.members.len()) {
            (None, 1) => {}
            (None, _) => verdict.reasons.push(format!("{scope}: missing certificate")),
            (Some(_), 1) => verdict.reasons.push(format!("{scope}: certificate on a singleton")),
            (Some(cert), _) => match acute_subgraph(g, &c.members) {
                Ok(acute) => verdict.absorb(&scope, verify_mader_sequence(g, &acute, cert)),
                Err(e) => verdict.reasons.push(format!("{scope}: {e}")),
            },
        }
    }
    verdict.absorb("cacti", verify_cacti(g, report, &rep, opts));
    verdict
}

/// Splits `g` along the reported bridges and checks one cactus per piece.
fn verify_cacti(g: &Multigraph, report: &ThreeEccReport, rep: &[usize], opts: VerifyOptions) -> Verdict {
    let mut verdict = Verdict::accept();
    let bridges: BTreeSet<usize> = report.bridges.iter().copied().collect();
    let kept: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .enumerate()
        .filter(|(id, _)| !bridges.contains(id))
        .map(|(_, e)| (e.a, e.b))
        .collect();
    let pieces = connected_components(&Multigraph::from_edges(g.vertex_count(), &kept));
    if pieces.len() != report.cacti.len() {
        verdict.reasons.push(format!(
            "{} cacti for {} 2-edge-connected components",
            report.cacti.len(),
            pieces.len()
        ));
        return verdict;
    }
    let mut by_node: BTreeMap<usize, usize> = BTreeMap::new();
    for (i, c) in report.cacti.iter().enumerate() {
        for &x in &c.nodes {
            by_node.insert(x, i);
        }
    }
    for piece in &pieces {
        let Some(&ci) = by_node.get(&rep[piece[0]]) else {
            verdict.reasons.push(format!("no cactus for vertex {}", piece[0]));
            continue;
        };
        let (sub, origin) = g.induced(piece);
        let sub = Multigraph::from_edges(
            sub.vertex_count(),
            &sub.edges()
                .iter()
                .zip(&origin)
                .filter(|(_, id)| !bridges.contains(id))
                .map(|(e, _)| (e.a, e.b))
                .collect::<Vec<_>>(),
        );
        let phi: Vec<usize> = piece.iter().map(|&v| rep[v]).collect();
        let cactus = &report.cacti[ci];
        if sub.edge_count() > opts.cactus_max_m {
            let nodes: BTreeSet<usize> = phi.iter().copied().collect();
            let listed: BTreeSet<usize> = cactus.nodes.iter().copied().collect();
            if nodes != listed {
                verdict.reasons.push(format!("cactus {ci}: node set mismatch"));
            }
            continue;
        }
        let v = verify_cactus(&sub, cactus, &phi);
        let scope = format!("cactus {ci}");
        verdict.absorb(&scope, v);
    }
    verdict
}

//! One-pass absorb/eject engine: 3-edge-connected components with Mader
//! certificates, bridges, and per-2-edge-connected-component cacti.

use crate::cactus_builder::{Cactus, CactusState, EjectKind};
use crate::dfs_ear::{annotate_all, DfsAnnotations, EdgeKind, NONE};
use crate::mader_cs::{finalize, Certificate, ConstructionSequence, CsItem, CsState, Shape};
use crate::multigraph::{connected_components, Multigraph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    /// Sorted member vertices.
    pub members: Vec<usize>,
    /// The vertex that was ejected; cactus nodes are named by it.
    pub representative: usize,
    /// A virtual edge of the component graph: the one standing for the
    /// outside of its own separating cut-pair when there is one, otherwise the
    /// first inherited from an ejected neighbour.
    pub virtual_edge: Option<(usize, usize)>,
    /// Every virtual edge the certificate uses, in order of appearance.
    pub virtual_edges: Vec<(usize, usize)>,
    pub certificate: Option<Certificate>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EjectOutcome {
    Bridge(usize),
    CutPairTree(usize, usize),
    CutPairBack(usize, usize),
    Root,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EngineStats {
    /// Edge classifications, absorbed supervertices, path steps and splices.
    pub edge_events: u64,
    pub virtual_edges: usize,
    pub deg_checks: u64,
    pub deg_mismatches: u64,
    pub anchor_checks: u64,
    pub anchor_violations: u64,
    pub path_checks: u64,
    pub path_violations: u64,
    pub ear_label_checks: u64,
    pub ear_label_mismatches: u64,
    pub open_chains_at_end: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ThreeEccReport {
    /// Ordered by smallest member.
    pub components: Vec<Component>,
    /// Bridge edge ids, ascending.
    pub bridges: Vec<usize>,
    /// One cactus per 2-edge-connected component, ordered by smallest node.
    pub cacti: Vec<Cactus>,
    /// Endpoints of every virtual edge, indexed by `id - m`.
    pub virtual_ends: Vec<(usize, usize)>,
    pub ejections: Vec<(usize, EjectOutcome)>,
    pub stats: EngineStats,
}

impl ThreeEccReport {
    pub fn is_three_edge_connected(&self) -> bool {
        self.components.len() == 1 && self.bridges.is_empty()
    }

    /// Map from vertex to the index of its component.
    pub fn component_of(&self, n: usize) -> Vec<usize> {
        let mut of = vec![NONE; n];
        for (i, c) in self.components.iter().enumerate() {
            for &v in &c.members {
                of[v] = i;
            }
        }
        of
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct EngineOptions {
    /// Run the quadratic invariant checks (anchor minimality, path ancestry,
    /// explicit degree tracking, ear labels).
    pub check_invariants: bool,
}

pub struct Engine<'g> {
    g: &'g Multigraph,
    opts: EngineOptions,
    pub ann: DfsAnnotations,
    root: usize,
    par: Vec<usize>,
    par_edge: Vec<usize>,
    phat: Vec<usize>,
    path_next: Vec<usize>,
    inc_head: Vec<usize>,
    inc_next: Vec<usize>,
    mem_next: Vec<usize>,
    mem_tail: Vec<usize>,
    sigma_len: Vec<usize>,
    alive: Vec<bool>,
    cur_tail: Vec<usize>,
    cur_edge: Vec<usize>,
    virtual_ends: Vec<(usize, usize)>,
    cs: CsState,
    cactus: CactusState,
    components: Vec<Component>,
    bridges: Vec<usize>,
    ejections: Vec<(usize, EjectOutcome)>,
    stats: EngineStats,
    /// Liveness of real and virtual edges in the contracted graph; only
    /// maintained under `check_invariants`.
    shadow_alive: Vec<bool>,
}

impl<'g> Engine<'g> {
    pub fn new(g: &'g Multigraph, opts: EngineOptions) -> Self {
        let n = g.vertex_count();
        let m = g.edge_count();
        Engine {
            g,
            opts,
            ann: DfsAnnotations::new(n, m),
            root: NONE,
            par: vec![NONE; n],
            par_edge: vec![NONE; n],
            phat: vec![NONE; n],
            path_next: vec![NONE; n],
            inc_head: vec![NONE; n],
            inc_next: vec![NONE; m],
            mem_next: vec![NONE; n],
            mem_tail: (0..n).collect(),
            sigma_len: vec![1; n],
            alive: vec![false; n],
            cur_tail: vec![NONE; m],
            cur_edge: vec![NONE; m],
            virtual_ends: Vec::new(),
            cs: CsState::new(n, m),
            cactus: CactusState::new(n),
            components: Vec::new(),
            bridges: Vec::new(),
            ejections: Vec::new(),
            stats: EngineStats::default(),
            shadow_alive: if opts.check_invariants { vec![true; m] } else { Vec::new() },
        }
    }

    fn new_virtual(&mut self, a: usize, b: usize, live: bool) -> usize {
        let id = self.g.edge_count() + self.virtual_ends.len();
        self.virtual_ends.push((a, b));
        if self.opts.check_invariants {
            self.shadow_alive.push(live);
        }
        id
    }

    fn kill(&mut self, e: usize) {
        if self.opts.check_invariants {
            self.shadow_alive[e] = false;
        }
    }

    fn visit(&mut self, w: usize, v: usize, pe: usize) {
        self.ann.open(w, v, pe);
        self.par[w] = v;
        self.par_edge[w] = pe;
        self.alive[w] = true;
        self.cactus.on_visit(w);
    }

    /// Runs the pass over the component containing `root`.
    pub fn run(&mut self, root: usize) {
        self.root = root;
        self.visit(root, NONE, NONE);
        let mut stack: Vec<(usize, usize)> = vec![(root, 0)];
        while let Some(top) = stack.last_mut() {
            let (w, i) = *top;
            let g = self.g;
            let adj = g.adjacency(w);
            if i < adj.len() {
                top.1 += 1;
                let h = adj[i];
                self.stats.edge_events += 1;
                if !self.ann.visited(h.to) {
                    self.visit(h.to, w, h.edge);
                    stack.push((h.to, 0));
                } else if h.edge == self.ann.parent_edge[w] || h.to == w {
                    // Tree edge seen from below, or a loop.
                } else if self.ann.dfs_num[h.to] < self.ann.dfs_num[w] {
                    self.outgoing_back_edge(w, h.to, h.edge);
                } else {
                    self.inc_next[h.edge] = self.inc_head[w];
                    self.inc_head[w] = h.edge;
                }
                continue;
            }
            stack.pop();
            if self.path_next[w] != NONE && self.inc_head[w] != NONE {
                self.absorb_path(w);
            }
            self.ann.close(w);
            if let Some(&(v, _)) = stack.last() {
                self.after_child(v, w);
            }
        }
        self.finish_root(root);
    }

    fn outgoing_back_edge(&mut self, w: usize, u: usize, e: usize) {
        self.ann.classify_back(e, u, w);
        self.ann.lowpt[w] = self.ann.lowpt[w].min(self.ann.dfs_num[u]);
        self.cur_tail[e] = w;
        self.cur_edge[e] = e;
        if self.ann.lex_less(e, self.phat[w]) {
            let xs = self.path_after(w);
            let old = self.phat[w];
            self.absorb_ear(w, old, &xs);
            self.cactus.on_absorb(w, &xs, Vec::new());
            self.cactus.close_bchain(w, w);
            self.path_next[w] = NONE;
            self.phat[w] = e;
        } else {
            self.absorb_ear(w, e, &[]);
        }
    }

    fn after_child(&mut self, w: usize, u: usize) {
        let pe = self.ann.parent_edge[u];
        let lowpt_u = self.ann.lowpt[u];
        self.ann.lowpt[w] = self.ann.lowpt[w].min(lowpt_u);
        let f = self.phat[u];
        if f != NONE && self.ann.dfs_num[self.ann.head[f]] < self.ann.dfs_num[u] {
            self.ann.ear_label[pe] = f;
        }
        if self.opts.check_invariants {
            self.check_backtrack(u);
        }
        let a = self.cs.anchor[u];
        let low_degree = a == NONE || self.ann.head[a] == u;
        if self.opts.check_invariants {
            self.check_degree(u, low_degree);
        }
        let mut u_path = if low_degree { self.gen_cs(w, u) } else { Some(u) };
        let bchain_t = std::mem::take(&mut self.cactus.bchain_t);
        let phat_u = self.phat[u];
        if phat_u == NONE || self.ann.lex_less(self.phat[w], phat_u) {
            let xs = self.path_from(u_path);
            self.absorb_ear(w, phat_u, &xs);
            self.cactus.on_absorb(w, &xs, bchain_t);
        } else {
            let xs = self.path_after(w);
            let old = self.phat[w];
            self.absorb_ear(w, old, &xs);
            self.cactus.on_absorb(w, &xs, Vec::new());
            self.cactus.close_bchain(w, w);
            self.cactus.set_bchain(w, bchain_t);
            self.path_next[w] = u_path.take().unwrap_or(NONE);
            self.phat[w] = phat_u;
        }
    }

    /// Vertices strictly after `w` on its path.
    fn path_after(&mut self, w: usize) -> Vec<usize> {
        let mut xs = Vec::new();
        let mut x = self.path_next[w];
        while x != NONE {
            xs.push(x);
            x = self.path_next[x];
        }
        self.stats.edge_events += xs.len() as u64;
        xs
    }

    fn path_from(&mut self, start: Option<usize>) -> Vec<usize> {
        let mut xs = Vec::new();
        let mut x = start.unwrap_or(NONE);
        while x != NONE {
            xs.push(x);
            x = self.path_next[x];
        }
        self.stats.edge_events += xs.len() as u64;
        xs
    }

    fn merge_sigma(&mut self, w: usize, x: usize) {
        self.mem_next[self.mem_tail[w]] = x;
        self.mem_tail[w] = self.mem_tail[x];
        self.sigma_len[w] += self.sigma_len[x];
        self.alive[x] = false;
    }

    fn absorb_ear(&mut self, w: usize, phat: usize, xs: &[usize]) {
        for &x in xs {
            self.merge_sigma(w, x);
        }
        self.cs.absorb_ear_cs(&self.ann, w, phat, xs);
        if self.opts.check_invariants {
            self.check_anchor(w);
        }
    }

    fn absorb_path(&mut self, w: usize) {
        let mut h = 0;
        let mut hat = w;
        let mut section = vec![w];
        let mut e = self.inc_head[w];
        let mut incs = Vec::new();
        while e != NONE {
            incs.push(e);
            e = self.inc_next[e];
        }
        // Adjacency order for the buffered edges.
        incs.reverse();
        for e in incs {
            let x = self.ann.tail[e];
            self.stats.edge_events += 1;
            loop {
                let nx = self.path_next[hat];
                if nx == NONE || !self.ann.is_ancestor(nx, x) {
                    break;
                }
                h += 1;
                hat = nx;
                section.push(nx);
                self.stats.edge_events += 1;
            }
        }
        if h == 0 {
            return;
        }
        self.cs.absorb_path_cs(&self.ann, &section);
        let xs = &section[1..];
        self.cactus.on_absorb_section(w, xs);
        let last = section[h];
        let tail_reached = self.path_next[last] == NONE;
        if tail_reached && self.cactus.has_bchain(last) {
            self.cactus.move_bchain(last, w);
        }
        for &x in xs {
            self.merge_sigma(w, x);
        }
        self.path_next[w] = self.path_next[last];
        if self.opts.check_invariants {
            self.check_anchor(w);
        }
    }

    /// Ejects `u` (degree at most two towards the rest). Returns the
    /// remaining `u`-path head, or `None` when the path became nil.
    fn gen_cs(&mut self, w: usize, u: usize) -> Option<usize> {
        let f = self.phat[u];
        let bridge = f == NONE || self.ann.head[f] == u;
        let mut virtual_edge = None;
        let result;
        let outcome;
        let kind;
        if bridge {
            if f != NONE {
                self.cs.t_end[f] = u;
                let node = self.cs.arena.singleton(CsItem::Ear(f));
                self.cs.cs[u] = self.cs.arena.concat(node, self.cs.cs[u]);
            }
            let pe = self.par_edge[u];
            debug_assert!(pe < self.g.edge_count(), "bridge must be a real edge");
            self.kill(pe);
            self.bridges.push(pe);
            self.phat[u] = NONE;
            outcome = EjectOutcome::Bridge(pe);
            kind = EjectKind::Bridge;
            result = None;
        } else {
            let ud;
            if self.path_next[u] == NONE {
                ud = self.cur_tail[f];
                let d = self.ann.head[f];
                let old = self.cur_edge[f];
                let pe = self.par_edge[u];
                self.kill(old);
                self.kill(pe);
                if d == w {
                    // Both cut edges end at w: the replacement would be a loop.
                    self.phat[u] = NONE;
                } else {
                    let vid = self.new_virtual(d, w, true);
                    self.cur_tail[f] = w;
                    self.cur_edge[f] = vid;
                }
                    outcome = EjectOutcome::CutPairBack(pe, old);
                kind = EjectKind::BackGenerator;
                result = None;
            } else {
                let u1 = self.path_next[u];
                ud = self.par[u1];
                let old = self.par_edge[u1];
                let pe = self.par_edge[u];
                self.kill(old);
                self.kill(pe);
                let vid = self.new_virtual(w, u1, true);
                self.par[u1] = w;
                self.par_edge[u1] = vid;
                self.path_next[u] = NONE;
                outcome = EjectOutcome::CutPairTree(pe, old);
                kind = EjectKind::TreeGenerator { below: u1 };
                result = Some(u1);
            }
            if u != ud {
                let own = self.new_virtual(u, ud, false);
                virtual_edge = Some((u, ud));
                let a = self.cs.anchor[u];
                if a != NONE && self.cs.t_end[a] == u && self.cs.rotation_mark[u] != NONE {
                    let mark = self.cs.rotation_mark[u];
                    self.cs.cs[u] = self.cs.arena.rotate_after(self.cs.cs[u], mark);
                }
                let node = self.cs.arena.singleton(CsItem::Seed {
                    top: u,
                    bottom: ud,
                    virtual_id: own,
                });
                self.cs.cs[u] = self.cs.arena.concat(node, self.cs.cs[u]);
            }
        }
        self.alive[u] = false;
        self.emit_component(u, virtual_edge, outcome);
        if bridge {
            self.cactus.close_bchain(u, u);
        }
        self.cactus.on_eject(u, kind);
        if bridge {
            self.cactus.finalize_cactus(u);
        }
        result
    }

    fn finish_root(&mut self, r: usize) {
        let f = self.phat[r];
        if f != NONE {
            self.cs.t_end[f] = r;
            let node = self.cs.arena.singleton(CsItem::Ear(f));
            self.cs.cs[r] = self.cs.arena.concat(node, self.cs.cs[r]);
        }
        self.alive[r] = false;
        self.emit_component(r, None, EjectOutcome::Root);
        self.cactus.close_bchain(r, r);
        self.cactus.on_eject(r, EjectKind::Bridge);
        self.cactus.finalize_cactus(r);
    }

    fn emit_component(&mut self, u: usize, virtual_edge: Option<(usize, usize)>, outcome: EjectOutcome) {
        let mut members = Vec::with_capacity(self.sigma_len[u]);
        let mut x = u;
        while x != NONE {
            members.push(x);
            x = self.mem_next[x];
        }
        members.sort_unstable();
        let certificate = if members.len() > 1 {
            let shape = Shape {
                m: self.g.edge_count(),
                head: &self.ann.head,
                cur_tail: &self.cur_tail,
                cur_edge: &self.cur_edge,
                par: &self.par,
                par_edge: &self.par_edge,
                t_end: &self.cs.t_end,
            };
            Some(finalize(&self.cs.arena, self.cs.cs[u], &shape))
        } else {
            None
        };
        let mut virtual_edges: Vec<(usize, usize)> = virtual_edge.into_iter().collect();
        for p in certificate.iter().flat_map(|c| &c.paths) {
            for (j, e) in p.edges.iter().enumerate() {
                let pair = (p.vertices[j], p.vertices[j + 1]);
                if e.is_virtual && Some(pair) != virtual_edge && Some((pair.1, pair.0)) != virtual_edge {
                    virtual_edges.push(pair);
                }
            }
        }
        let virtual_edge = virtual_edges.first().copied();
        self.cs.cs[u] = ConstructionSequence::EMPTY;
        self.ejections.push((u, outcome));
        self.components.push(Component {
            members,
            representative: u,
            virtual_edge,
            virtual_edges,
            certificate,
        });
    }

    fn path_list(&self, u: usize) -> Vec<usize> {
        let mut xs = vec![u];
        let mut x = self.path_next[u];
        while x != NONE {
            xs.push(x);
            x = self.path_next[x];
        }
        xs
    }

    fn check_anchor(&mut self, w: usize) {
        self.stats.anchor_checks += 1;
        if !self.cs.anchor_is_min(&self.ann, w) {
            self.stats.anchor_violations += 1;
        }
    }

    fn check_backtrack(&mut self, u: usize) {
        self.stats.path_checks += 1;
        let path = self.path_list(u);
        let mut ok = path.windows(2).all(|p| p[0] != p[1] && self.ann.is_ancestor(p[0], p[1]));
        let on_path: std::collections::HashSet<usize> = path.iter().copied().collect();
        for x in 0..self.g.vertex_count() {
            if self.alive[x] && self.ann.visited(x) && self.ann.is_ancestor(u, x) && !on_path.contains(&x) {
                ok = false;
            }
        }
        if !ok {
            self.stats.path_violations += 1;
        }
    }

    /// Degree of `sigma(u)` in the contracted graph, counted edge by edge.
    fn check_degree(&mut self, u: usize, low_degree: bool) {
        self.stats.deg_checks += 1;
        let n = self.g.vertex_count();
        let mut inside = vec![false; n];
        let mut x = u;
        while x != NONE {
            inside[x] = true;
            x = self.mem_next[x];
        }
        let m = self.g.edge_count();
        let mut deg = 0;
        for e in 0..self.shadow_alive.len() {
            if !self.shadow_alive[e] {
                continue;
            }
            let (a, b) = if e < m {
                let ed = self.g.edge(e);
                (ed.a, ed.b)
            } else {
                self.virtual_ends[e - m]
            };
            if inside[a] != inside[b] {
                deg += 1;
            }
        }
        if (deg <= 2) != low_degree {
            self.stats.deg_mismatches += 1;
        }
    }

    pub fn into_report(mut self) -> ThreeEccReport {
        self.stats.virtual_edges = self.virtual_ends.len();
        self.stats.edge_events += self.cs.arena.splices;
        self.stats.open_chains_at_end = self.cactus.open_chain_count();
        let mut components = self.components;
        components.sort_by_key(|c| c.members[0]);
        let mut bridges = self.bridges;
        bridges.sort_unstable();
        let mut cacti = std::mem::take(&mut self.cactus.finished);
        for c in &mut cacti {
            c.nodes.sort_unstable();
        }
        cacti.sort_by_key(|c| c.nodes[0]);
        ThreeEccReport {
            components,
            bridges,
            cacti,
            virtual_ends: self.virtual_ends,
            ejections: self.ejections,
            stats: self.stats,
        }
    }
}

/// Decomposes a connected graph with the DFS rooted at `root`.
pub fn decompose(g: &Multigraph, root: usize) -> ThreeEccReport {
    assert!(root < g.vertex_count(), "root out of range");
    assert_eq!(connected_components(g).len(), 1, "decompose expects a connected graph");
    let mut engine = Engine::new(g, EngineOptions::default());
    engine.run(root);
    engine.into_report()
}

/// Decomposes every connected component, each rooted at its smallest vertex.
pub fn decompose_all(g: &Multigraph) -> ThreeEccReport {
    decompose_with(g, EngineOptions::default())
}

pub fn decompose_with(g: &Multigraph, opts: EngineOptions) -> ThreeEccReport {
    let mut engine = Engine::new(g, opts);
    for r in 0..g.vertex_count() {
        if !engine.ann.visited(r) {
            engine.run(r);
        }
    }
    if opts.check_invariants {
        let fixed = annotate_all(g);
        for e in 0..g.edge_count() {
            if fixed.edge_kind[e] == EdgeKind::Tree {
                engine.stats.ear_label_checks += 1;
                if fixed.ear_label[e] != engine.ann.ear_label[e] {
                    engine.stats.ear_label_mismatches += 1;
                }
            }
        }
    }
    engine.into_report()
}

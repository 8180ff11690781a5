//! Cut-pair cactus construction from eject/absorb events.
//!
//! Nodes are named by the representative vertex of their 3-edge-connected
//! component. A closed cycle is stored as its open chain plus a start node
//! that tracks whichever supervertex currently holds the cycle.

use crate::dfs_ear::NONE;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Cactus {
    pub nodes: Vec<usize>,
    /// Each cycle lists its nodes once, without repeating the first.
    pub cycles: Vec<Vec<usize>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EjectKind {
    /// Parent edge is a bridge, or the vertex is the DFS root.
    Bridge,
    /// Cut-pair made of the parent edge and a back-edge.
    BackGenerator,
    /// Cut-pair made of the parent edge and the parent edge of `below`.
    TreeGenerator { below: usize },
}

#[derive(Clone, Debug)]
struct CycleRec {
    start: usize,
    chain: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct CactusState {
    tchain: Vec<Vec<usize>>,
    bchain: Vec<Vec<usize>>,
    /// Chain produced by the latest back-generator ejection, not yet placed.
    pub bchain_t: Vec<usize>,
    cycles: Vec<CycleRec>,
    cyc_next: Vec<usize>,
    cyc_head: Vec<usize>,
    cyc_tail: Vec<usize>,
    open_nodes: Vec<usize>,
    open_cycles: Vec<usize>,
    mark: Vec<(usize, usize)>,
    pub finished: Vec<Cactus>,
}

impl CactusState {
    pub fn new(n: usize) -> Self {
        CactusState {
            tchain: vec![Vec::new(); n],
            bchain: vec![Vec::new(); n],
            bchain_t: Vec::new(),
            cycles: Vec::new(),
            cyc_next: Vec::new(),
            cyc_head: vec![NONE; n],
            cyc_tail: vec![NONE; n],
            open_nodes: Vec::new(),
            open_cycles: Vec::new(),
            mark: vec![(0, 0); n],
            finished: Vec::new(),
        }
    }

    pub fn on_visit(&mut self, w: usize) {
        self.mark[w] = (self.open_nodes.len(), self.open_cycles.len());
    }

    fn attach(&mut self, w: usize, chain: Vec<usize>) {
        if chain.is_empty() {
            return;
        }
        let id = self.cycles.len();
        self.cycles.push(CycleRec { start: w, chain });
        self.cyc_next.push(NONE);
        if self.cyc_head[w] == NONE {
            self.cyc_head[w] = id;
        } else {
            self.cyc_next[self.cyc_tail[w]] = id;
        }
        self.cyc_tail[w] = id;
    }

    fn transfer(&mut self, from: usize, to: usize) {
        let h = self.cyc_head[from];
        if h == NONE {
            return;
        }
        if self.cyc_head[to] == NONE {
            self.cyc_head[to] = h;
        } else {
            self.cyc_next[self.cyc_tail[to]] = h;
        }
        self.cyc_tail[to] = self.cyc_tail[from];
        self.cyc_head[from] = NONE;
        self.cyc_tail[from] = NONE;
    }

    /// Closes `x`'s pending back-generator chain into a cycle held by `w`.
    pub fn close_bchain(&mut self, x: usize, w: usize) {
        let chain = std::mem::take(&mut self.bchain[x]);
        self.attach(w, chain);
    }

    pub fn has_bchain(&self, x: usize) -> bool {
        !self.bchain[x].is_empty()
    }

    pub fn move_bchain(&mut self, from: usize, to: usize) {
        debug_assert!(self.bchain[to].is_empty());
        self.bchain[to] = std::mem::take(&mut self.bchain[from]);
    }

    /// Hands `w` a fresh pending chain; its old one must already be closed.
    pub fn set_bchain(&mut self, w: usize, chain: Vec<usize>) {
        debug_assert!(self.bchain[w].is_empty());
        self.bchain[w] = chain;
    }

    /// `u` has just become a node. Cycles it holds now start at `u`.
    pub fn on_eject(&mut self, u: usize, kind: EjectKind) {
        let mut c = self.cyc_head[u];
        while c != NONE {
            self.cycles[c].start = u;
            self.open_cycles.push(c);
            if c == self.cyc_tail[u] {
                break;
            }
            c = self.cyc_next[c];
        }
        self.cyc_head[u] = NONE;
        self.cyc_tail[u] = NONE;
        self.open_nodes.push(u);
        match kind {
            EjectKind::Bridge => {}
            EjectKind::BackGenerator => {
                let mut chain = std::mem::take(&mut self.bchain[u]);
                chain.push(u);
                self.bchain_t = chain;
            }
            EjectKind::TreeGenerator { below } => {
                self.tchain[below].push(u);
            }
        }
    }

    /// `w` absorbs the whole path `xs`. A pending `bchain` (lone ejected child)
    /// closes at `w`; otherwise each absorbed vertex hands over its cycles and
    /// its open chains close at `w`.
    pub fn on_absorb(&mut self, w: usize, xs: &[usize], bchain: Vec<usize>) {
        if !bchain.is_empty() {
            self.attach(w, bchain);
            return;
        }
        for &x in xs {
            self.transfer(x, w);
            let t = std::mem::take(&mut self.tchain[x]);
            self.attach(w, t);
            self.close_bchain(x, w);
        }
    }

    /// `w` absorbs the section `xs = w1..wh` of its path.
    pub fn on_absorb_section(&mut self, w: usize, xs: &[usize]) {
        for &x in xs {
            self.transfer(x, w);
            let t = std::mem::take(&mut self.tchain[x]);
            self.attach(w, t);
        }
    }

    /// Emits the cactus of the 2-edge-connected component topped by `u`.
    pub fn finalize_cactus(&mut self, u: usize) {
        let (nm, cm) = self.mark[u];
        let mut nodes: Vec<usize> = self.open_nodes.drain(nm..).collect();
        nodes.sort_unstable();
        let cycles = self
            .open_cycles
            .drain(cm..)
            .map(|c| {
                let rec = &self.cycles[c];
                let mut cyc = Vec::with_capacity(rec.chain.len() + 1);
                cyc.push(rec.start);
                cyc.extend_from_slice(&rec.chain);
                cyc
            })
            .collect();
        self.finished.push(Cactus { nodes, cycles });
    }

    /// Chains still open; non-zero after a run signals an engine bug.
    pub fn open_chain_count(&self) -> usize {
        self.tchain.iter().filter(|c| !c.is_empty()).count()
            + self.bchain.iter().filter(|c| !c.is_empty()).count()
            + usize::from(!self.bchain_t.is_empty())
    }
}

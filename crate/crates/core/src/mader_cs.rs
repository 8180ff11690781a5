//! Construction sequences: anchored ear lists with constant-time splicing,
//! and their materialization into certificates.

use crate::dfs_ear::{DfsAnnotations, NONE};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CsItem {
    /// An ear, named by the back-edge that defines it.
    Ear(usize),
    /// Tree path from `top` down to `bottom` closed by virtual edge `virtual_id`.
    Seed {
        top: usize,
        bottom: usize,
        virtual_id: usize,
    },
}

/// Handle to a singly linked run of arena nodes. `head == NONE` is the empty
/// sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConstructionSequence {
    pub head: usize,
    pub tail: usize,
}

impl ConstructionSequence {
    pub const EMPTY: ConstructionSequence = ConstructionSequence { head: NONE, tail: NONE };

    pub fn is_empty(&self) -> bool {
        self.head == NONE
    }
}

#[derive(Clone, Debug, Default)]
pub struct CsArena {
    items: Vec<CsItem>,
    next: Vec<usize>,
    pub splices: u64,
}

impl CsArena {
    pub fn singleton(&mut self, item: CsItem) -> ConstructionSequence {
        let id = self.items.len();
        self.items.push(item);
        self.next.push(NONE);
        ConstructionSequence { head: id, tail: id }
    }

    pub fn item(&self, node: usize) -> CsItem {
        self.items[node]
    }

    /// `a` followed by `b`; O(1), no nodes copied.
    pub fn concat(&mut self, a: ConstructionSequence, b: ConstructionSequence) -> ConstructionSequence {
        self.splices += 1;
        if a.is_empty() {
            return b;
        }
        if b.is_empty() {
            return a;
        }
        self.next[a.tail] = b.head;
        ConstructionSequence { head: a.head, tail: b.tail }
    }

    /// Turns `A B` into `B A`, where `A` ends at node `split`.
    pub fn rotate_after(&mut self, cs: ConstructionSequence, split: usize) -> ConstructionSequence {
        let b_head = self.next[split];
        if b_head == NONE {
            return cs;
        }
        self.splices += 1;
        self.next[split] = NONE;
        self.next[cs.tail] = cs.head;
        ConstructionSequence { head: b_head, tail: split }
    }

    pub fn items(&self, cs: ConstructionSequence) -> Vec<CsItem> {
        let mut out = Vec::new();
        let mut x = cs.head;
        while x != NONE {
            out.push(self.items[x]);
            if x == cs.tail {
                break;
            }
            x = self.next[x];
        }
        out
    }
}

pub fn cs_concat(
    arena: &mut CsArena,
    a: ConstructionSequence,
    b: ConstructionSequence,
) -> ConstructionSequence {
    arena.concat(a, b)
}

/// Per-vertex sequence state driven by the decomposition engine.
#[derive(Clone, Debug)]
pub struct CsState {
    pub arena: CsArena,
    pub cs: Vec<ConstructionSequence>,
    /// The anchor of each vertex: lex-min ear of its sequence.
    pub anchor: Vec<usize>,
    /// Last node of the leading block after a section absorption that put a
    /// different block second; used to rotate that block to the back.
    pub rotation_mark: Vec<usize>,
    /// Per back-edge: the vertex at which its ear was absorbed.
    pub t_end: Vec<usize>,
}

impl CsState {
    pub fn new(n: usize, m: usize) -> Self {
        CsState {
            arena: CsArena::default(),
            cs: vec![ConstructionSequence::EMPTY; n],
            anchor: vec![NONE; n],
            rotation_mark: vec![NONE; n],
            t_end: vec![NONE; m],
        }
    }

    /// Absorbs ear `phat` (ending at `w`) together with the supervertices
    /// `xs = x1..xk` of the path it runs along.
    pub fn absorb_ear_cs(&mut self, ann: &DfsAnnotations, w: usize, phat: usize, xs: &[usize]) {
        let mut seq = ConstructionSequence::EMPTY;
        for &x in xs {
            let cx = std::mem::replace(&mut self.cs[x], ConstructionSequence::EMPTY);
            seq = self.arena.concat(cx, seq);
        }
        if phat != NONE {
            self.t_end[phat] = w;
            let node = self.arena.singleton(CsItem::Ear(phat));
            seq = self.arena.concat(node, seq);
        }
        if phat != NONE && ann.lex_less(phat, self.anchor[w]) {
            self.cs[w] = self.arena.concat(seq, self.cs[w]);
            self.anchor[w] = phat;
        } else {
            self.cs[w] = self.arena.concat(self.cs[w], seq);
        }
    }

    /// Merges the sequences of the path section `section = w0..wh` into `w0`.
    /// The lex-min anchor's block leads, then the block of `wh`, then the rest
    /// by descending path index.
    pub fn absorb_path_cs(&mut self, ann: &DfsAnnotations, section: &[usize]) {
        let h = section.len() - 1;
        let w = section[0];
        let mut l = h;
        for (j, &x) in section.iter().enumerate() {
            if ann.lex_less(self.anchor[x], self.anchor[section[l]]) {
                l = j;
            }
        }
        let blocks: Vec<ConstructionSequence> = section
            .iter()
            .map(|&x| std::mem::replace(&mut self.cs[x], ConstructionSequence::EMPTY))
            .collect();
        let anchor = self.anchor[section[l]];
        let mut seq;
        self.rotation_mark[w] = NONE;
        if l != h {
            seq = self.arena.concat(blocks[l], blocks[h]);
            if !blocks[l].is_empty() && !blocks[h].is_empty() {
                self.rotation_mark[w] = blocks[l].tail;
            }
        } else {
            seq = blocks[h];
        }
        for j in (0..h).rev() {
            if j != l {
                seq = self.arena.concat(seq, blocks[j]);
            }
        }
        self.cs[w] = seq;
        self.anchor[w] = anchor;
    }

    /// Lex-min ear of `w`'s sequence and whether it is the head. Linear in the
    /// sequence length; used by invariant checks only.
    pub fn anchor_is_min(&self, ann: &DfsAnnotations, w: usize) -> bool {
        let items = self.arena.items(self.cs[w]);
        let mut min = NONE;
        for it in &items {
            if let CsItem::Ear(f) = *it {
                min = ann.lex_min(min, f);
            }
        }
        match items.first() {
            None => self.anchor[w] == NONE,
            Some(CsItem::Ear(f)) => *f == min && self.anchor[w] == min,
            Some(_) => false,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PathTag {
    K23Seed,
    MaderPath,
}

impl PathTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            PathTag::K23Seed => "K23_SEED",
            PathTag::MaderPath => "MADER_PATH",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CertEdge {
    pub id: usize,
    pub is_virtual: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertPath {
    pub vertices: Vec<usize>,
    pub edges: Vec<CertEdge>,
    pub tag: PathTag,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Certificate {
    pub paths: Vec<CertPath>,
}

/// Current shape of the contracted graph, as seen by materialization.
pub struct Shape<'a> {
    pub m: usize,
    pub head: &'a [usize],
    pub cur_tail: &'a [usize],
    pub cur_edge: &'a [usize],
    pub par: &'a [usize],
    pub par_edge: &'a [usize],
    pub t_end: &'a [usize],
}

impl Shape<'_> {
    fn cert_edge(&self, id: usize) -> CertEdge {
        CertEdge { id, is_virtual: id >= self.m }
    }

    fn materialize(&self, item: CsItem) -> (Vec<usize>, Vec<CertEdge>) {
        match item {
            CsItem::Ear(f) => {
                let mut x = self.cur_tail[f];
                let mut vertices = vec![self.head[f], x];
                let mut edges = vec![self.cert_edge(self.cur_edge[f])];
                let t = self.t_end[f];
                while x != t {
                    assert!(self.par[x] != NONE, "ear walk left the tree");
                    edges.push(self.cert_edge(self.par_edge[x]));
                    x = self.par[x];
                    vertices.push(x);
                }
                (vertices, edges)
            }
            CsItem::Seed { top, bottom, virtual_id } => {
                let mut vertices = vec![bottom];
                let mut edges = Vec::new();
                let mut x = bottom;
                while x != top {
                    edges.push(self.cert_edge(self.par_edge[x]));
                    x = self.par[x];
                    vertices.push(x);
                }
                vertices.reverse();
                edges.reverse();
                vertices.push(top);
                edges.push(self.cert_edge(virtual_id));
                (vertices, edges)
            }
        }
    }
}

/// Materializes a finished sequence. The first two paths (a closed cycle and
/// a path between two of its vertices) form the seed.
pub fn finalize(arena: &CsArena, cs: ConstructionSequence, shape: &Shape<'_>) -> Certificate {
    let paths = arena
        .items(cs)
        .into_iter()
        .enumerate()
        .map(|(i, item)| {
            let (vertices, edges) = shape.materialize(item);
            let tag = if i < 2 { PathTag::K23Seed } else { PathTag::MaderPath };
            CertPath { vertices, edges, tag }
        })
        .collect();
    Certificate { paths }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn concat_with_empty_is_identity() {
        let mut a = CsArena::default();
        let x = a.singleton(CsItem::Ear(4));
        assert_eq!(a.concat(ConstructionSequence::EMPTY, x), x);
        assert_eq!(a.concat(x, ConstructionSequence::EMPTY), x);
    }

    #[test]
    fn concat_preserves_order() {
        let mut a = CsArena::default();
        let p4 = a.singleton(CsItem::Ear(4));
        let p3 = a.singleton(CsItem::Ear(3));
        let p2 = a.singleton(CsItem::Ear(2));
        let left = a.concat(p4, p3);
        let all = a.concat(left, p2);
        assert_eq!(a.items(all), vec![CsItem::Ear(4), CsItem::Ear(3), CsItem::Ear(2)]);
    }

    #[test]
    fn many_singletons() {
        let mut a = CsArena::default();
        let mut s = ConstructionSequence::EMPTY;
        for k in 0..100 {
            let x = a.singleton(CsItem::Ear(k));
            s = a.concat(s, x);
        }
        let got: Vec<_> = a.items(s);
        assert_eq!(got.len(), 100);
        assert_eq!(got[57], CsItem::Ear(57));
    }

    #[test]
    fn rotation_moves_leading_block_to_back() {
        let mut a = CsArena::default();
        let b0 = a.singleton(CsItem::Ear(0));
        let b1 = a.singleton(CsItem::Ear(1));
        let b2 = a.singleton(CsItem::Ear(2));
        let lead = a.concat(b0, b1);
        let all = a.concat(lead, b2);
        let r = a.rotate_after(all, lead.tail);
        assert_eq!(a.items(r), vec![CsItem::Ear(2), CsItem::Ear(0), CsItem::Ear(1)]);
    }
}

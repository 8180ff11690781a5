//! Undirected multigraph store and the line-oriented `p n m` / `e u v` format.

use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
}

impl Edge {
    pub fn other(&self, v: usize) -> usize {
        if self.a == v {
            self.b
        } else {
            self.a
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HalfEdge {
    pub edge: usize,
    pub to: usize,
}

/// Edge ids are dense `0..m`; adjacency lists keep insertion order, which is
/// the traversal order of the decomposition engine.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Multigraph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<HalfEdge>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NormalizationLog {
    pub removed_self_loops: usize,
    pub isolated_vertices: Vec<usize>,
    /// Original id of each kept edge.
    pub edge_origin: Vec<usize>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("malformed header, line {0}")]
    MalformedHeader(usize),
    #[error("missing header")]
    MissingHeader,
    #[error("duplicate header, line {0}")]
    DuplicateHeader(usize),
    #[error("malformed edge line, line {0}")]
    MalformedEdge(usize),
    #[error("edge before header, line {0}")]
    EdgeBeforeHeader(usize),
    #[error("vertex index out of range, line {0}")]
    VertexOutOfRange(usize),
    #[error("unrecognized line, line {0}")]
    UnknownLine(usize),
    #[error("edge count mismatch: header says {expected}, found {found}")]
    EdgeCountMismatch { expected: usize, found: usize },
    #[error("input is not valid UTF-8")]
    Encoding,
}

impl Multigraph {
    pub fn new(n: usize) -> Self {
        Multigraph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list. Self-loops are kept here; use
    /// [`Multigraph::normalized`] to strip them.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Multigraph::new(n);
        for &(a, b) in edges {
            g.add_edge(a, b);
        }
        g
    }

    pub fn add_edge(&mut self, a: usize, b: usize) -> usize {
        assert!(a < self.n && b < self.n, "edge endpoint out of range");
        let id = self.edges.len();
        self.edges.push(Edge { a, b });
        self.adj[a].push(HalfEdge { edge: id, to: b });
        if a != b {
            self.adj[b].push(HalfEdge { edge: id, to: a });
        } else {
            self.adj[a].push(HalfEdge { edge: id, to: a });
        }
        id
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> Edge {
        self.edges[id]
    }

    pub fn adjacency(&self, v: usize) -> &[HalfEdge] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Drops self-loops, renumbering the remaining edges densely in order.
    pub fn normalized(&self) -> (Multigraph, NormalizationLog) {
        let mut g = Multigraph::new(self.n);
        let mut log = NormalizationLog::default();
        for (id, e) in self.edges.iter().enumerate() {
            if e.a == e.b {
                log.removed_self_loops += 1;
            } else {
                g.add_edge(e.a, e.b);
                log.edge_origin.push(id);
            }
        }
        log.isolated_vertices = (0..g.n).filter(|&v| g.degree(v) == 0).collect();
        (g, log)
    }

    /// Subgraph induced by `vertices`, relabelled to `0..vertices.len()` in the
    /// given order. Returns the graph and, per new edge, the original edge id.
    pub fn induced(&self, vertices: &[usize]) -> (Multigraph, Vec<usize>) {
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut g = Multigraph::new(vertices.len());
        let mut origin = Vec::new();
        for (id, e) in self.edges.iter().enumerate() {
            if local[e.a] != usize::MAX && local[e.b] != usize::MAX {
                g.add_edge(local[e.a], local[e.b]);
                origin.push(id);
            }
        }
        (g, origin)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "p {} {}", self.n, self.edges.len());
        for e in &self.edges {
            let _ = writeln!(out, "e {} {}", e.a + 1, e.b + 1);
        }
        out
    }
}

pub fn degree(g: &Multigraph, v: usize) -> usize {
    g.degree(v)
}

/// Parses the text format and normalizes the result.
pub fn parse_graph(text: &[u8]) -> Result<(Multigraph, NormalizationLog), ParseError> {
    let text = std::str::from_utf8(text).map_err(|_| ParseError::Encoding)?;
    let mut header: Option<(usize, usize)> = None;
    let mut raw: Option<Multigraph> = None;
    let mut found = 0usize;
    for (idx, line) in text.split('\n').enumerate() {
        let lineno = idx + 1;
        let line = line.strip_suffix('\r').unwrap_or(line);
        if line.trim_start().starts_with('c') {
            continue;
        }
        let mut tok = line.split_whitespace();
        let Some(first) = tok.next() else { continue };
        match first {
            "p" => {
                if header.is_some() {
                    return Err(ParseError::DuplicateHeader(lineno));
                }
                let n = parse_count(tok.next()).ok_or(ParseError::MalformedHeader(lineno))?;
                let m = parse_count(tok.next()).ok_or(ParseError::MalformedHeader(lineno))?;
                if tok.next().is_some() {
                    return Err(ParseError::MalformedHeader(lineno));
                }
                header = Some((n, m));
                raw = Some(Multigraph::new(n));
            }
            "e" => {
                let Some(g) = raw.as_mut() else {
                    return Err(ParseError::EdgeBeforeHeader(lineno));
                };
                let u = parse_count(tok.next()).ok_or(ParseError::MalformedEdge(lineno))?;
                let v = parse_count(tok.next()).ok_or(ParseError::MalformedEdge(lineno))?;
                if tok.next().is_some() {
                    return Err(ParseError::MalformedEdge(lineno));
                }
                let n = g.vertex_count();
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(ParseError::VertexOutOfRange(lineno));
                }
                g.add_edge(u - 1, v - 1);
                found += 1;
            }
            _ => return Err(ParseError::UnknownLine(lineno)),
        }
    }
    let (_, m) = header.ok_or(ParseError::MissingHeader)?;
    if found != m {
        return Err(ParseError::EdgeCountMismatch { expected: m, found });
    }
    Ok(raw.expect("header seen").normalized())
}

fn parse_count(tok: Option<&str>) -> Option<usize> {
    tok?.parse().ok()
}

/// Partition of the vertices into connected components, each block sorted,
/// blocks ordered by their smallest vertex.
pub fn connected_components(g: &Multigraph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut blocks = Vec::new();
    let mut stack = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        stack.push(s);
        let mut block = Vec::new();
        while let Some(v) = stack.pop() {
            block.push(v);
            for h in g.adjacency(v) {
                if !seen[h.to] {
                    seen[h.to] = true;
                    stack.push(h.to);
                }
            }
        }
        block.sort_unstable();
        blocks.push(block);
    }
    blocks
}

/// Uniform endpoints, parallel edges allowed, self-loops redrawn.
pub fn random_multigraph(n: usize, m: usize, seed: u64) -> Multigraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Multigraph::new(n);
    if n < 2 {
        return g;
    }
    for _ in 0..m {
        let a = rng.gen_range(0..n);
        let mut b = rng.gen_range(0..n);
        while b == a {
            b = rng.gen_range(0..n);
        }
        g.add_edge(a, b);
    }
    g
}

/// Random spanning tree plus uniform extra edges, with shuffled labels and
/// shuffled edge order. Requires `m >= n - 1`.
pub fn random_connected_multigraph(n: usize, m: usize, seed: u64) -> Multigraph {
    assert!(n >= 1 && m + 1 >= n, "need at least n-1 edges");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut label: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        label.swap(i, j);
    }
    let mut list = Vec::with_capacity(m);
    for v in 1..n {
        list.push((label[rng.gen_range(0..v)], label[v]));
    }
    while list.len() < m {
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        if a != b {
            list.push((a, b));
        }
    }
    for i in (1..list.len()).rev() {
        let j = rng.gen_range(0..=i);
        list.swap(i, j);
    }
    Multigraph::from_edges(n, &list)
}

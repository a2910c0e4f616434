//! Simple undirected graphs on dense vertex indices `0..n`, plus the module
//! and substitution primitives the rest of the crate is built on.
//!
//! Graphs are immutable once built. Every operation returns a fresh graph, and
//! operations that renumber vertices also return the mapping back to the
//! original indices.

use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};

const WORD: usize = 64;

#[inline]
fn words_for(n: usize) -> usize {
    n.div_ceil(WORD)
}

/// A simple undirected graph. Adjacency is kept as one bitset row per vertex.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.rows == other.rows
    }
}

impl Eq for Graph {}

impl Hash for Graph {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.rows.hash(state);
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    fn blank(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Input("a graph needs at least one vertex".into()));
        }
        let words = words_for(n);
        Ok(Graph { n, words, rows: vec![0; n * words] })
    }

    fn set_edge(&mut self, u: usize, v: usize) {
        self.rows[u * self.words + v / WORD] |= 1 << (v % WORD);
        self.rows[v * self.words + u / WORD] |= 1 << (u % WORD);
    }

    /// Builds a graph from an edge list. Repeated edges are merged.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::blank(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Input(format!("edge ({u}, {v}) out of range for n = {n}")));
            }
            if u == v {
                return Err(Error::Input(format!("self-loop at vertex {u}")));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from an adjacency predicate evaluated on every pair `u < v`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Result<Self> {
        let mut g = Graph::blank(n)?;
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    g.set_edge(u, v);
                }
            }
        }
        Ok(g)
    }

    pub fn edgeless(n: usize) -> Result<Self> {
        Graph::blank(n)
    }

    pub fn complete(n: usize) -> Result<Self> {
        Graph::from_fn(n, |_, _| true)
    }

    pub fn path(n: usize) -> Result<Self> {
        Graph::from_fn(n, |u, v| v == u + 1)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Input(format!("a cycle needs at least 3 vertices, got {n}")));
        }
        Graph::from_fn(n, |u, v| v == u + 1 || (u == 0 && v == n - 1))
    }

    /// The star `K_{1,leaves}` with center 0.
    pub fn star(leaves: usize) -> Result<Self> {
        Graph::from_fn(leaves + 1, |u, _| u == 0)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        (self.rows[u * self.words + v / WORD] >> (v % WORD)) & 1 == 1
    }

    /// Bitset row of `v`'s neighborhood, `ceil(n / 64)` words long.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    /// Neighborhood of `v` as a `u64` mask. Only valid when `n <= 64`.
    #[inline]
    pub fn mask(&self, v: usize) -> u64 {
        debug_assert!(self.n <= 64);
        self.rows[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().flat_map(|(w, &bits)| BitIter(bits).map(move |b| w * WORD + b))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn complement(&self) -> Graph {
        Graph::from_fn(self.n, |u, v| !self.has_edge(u, v)).expect("n >= 1")
    }

    /// The subgraph induced by `s`. Vertex `i` of the result is `map[i]` in `self`.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        s.check(self.n)?;
        if s.is_empty() {
            return Err(Error::Input("induced subgraph of the empty set".into()));
        }
        let map = s.as_slice().to_vec();
        let g = Graph::from_fn(map.len(), |i, j| self.has_edge(map[i], map[j]))?;
        Ok((g, map))
    }

    /// `N(m)`: vertices outside `m` adjacent to some vertex of `m`.
    pub fn neighbors_of_set(&self, m: &VertexSet) -> Result<VertexSet> {
        m.check(self.n)?;
        let mut inside = vec![false; self.n];
        for &v in m.as_slice() {
            inside[v] = true;
        }
        let mut out = vec![false; self.n];
        for &v in m.as_slice() {
            for u in self.neighbors(v) {
                if !inside[u] {
                    out[u] = true;
                }
            }
        }
        Ok(VertexSet::from_sorted_unchecked((0..self.n).filter(|&v| out[v]).collect()))
    }

    /// True iff every vertex outside `m` sees all of `m` or none of it.
    pub fn is_module(&self, m: &VertexSet) -> Result<bool> {
        m.check(self.n)?;
        let size = m.len();
        if size <= 1 || size == self.n {
            return Ok(true);
        }
        let mut inside = vec![false; self.n];
        for &v in m.as_slice() {
            inside[v] = true;
        }
        for v in (0..self.n).filter(|&v| !inside[v]) {
            let seen = m.as_slice().iter().filter(|&&u| self.has_edge(v, u)).count();
            if seen != 0 && seen != size {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for u in self.neighbors(v) {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                        stack.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Substitutes `h` for the factor on `m`: the vertices of `m` are removed and
    /// every vertex of `h` is joined to exactly `N(m)`. Surviving vertices keep
    /// their relative order and come first; `h` occupies the last `|V(h)|` indices.
    pub fn modular_replacement(&self, m: &VertexSet, h: &Graph) -> Result<Graph> {
        if m.is_empty() {
            return Err(Error::Input("modular replacement of the empty set".into()));
        }
        if !self.is_module(m)? {
            return Err(Error::Contract(format!("{m:?} is not a module")));
        }
        let mut inside = vec![false; self.n];
        for &v in m.as_slice() {
            inside[v] = true;
        }
        let keep: Vec<usize> = (0..self.n).filter(|&v| !inside[v]).collect();
        let outside = self.neighbors_of_set(m)?;
        let mut attached = vec![false; self.n];
        for &v in outside.as_slice() {
            attached[v] = true;
        }
        let base = keep.len();
        let total = base + h.n();
        Graph::from_fn(total, |i, j| match (i < base, j < base) {
            (true, true) => self.has_edge(keep[i], keep[j]),
            (true, false) => attached[keep[i]],
            (false, true) => attached[keep[j]],
            (false, false) => h.has_edge(i - base, j - base),
        })
    }

    /// Parses the edge-list format. Lines starting with `#` are comments.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hl, header) = lines.next().ok_or(Error::Parse { line: 1, msg: "missing header".into() })?;
        let mut it = header.split_whitespace();
        let n: usize = parse_field(it.next(), hl, "vertex count")?;
        let m: usize = parse_field(it.next(), hl, "edge count")?;
        if it.next().is_some() {
            return Err(Error::Parse { line: hl, msg: "header must be `n m`".into() });
        }
        if n == 0 {
            return Err(Error::Parse { line: hl, msg: "graph must have at least one vertex".into() });
        }
        let mut edges = Vec::with_capacity(m);
        let mut seen = std::collections::HashSet::new();
        for _ in 0..m {
            let (ln, line) = lines.next().ok_or(Error::Parse { line: hl, msg: format!("expected {m} edges") })?;
            let mut it = line.split_whitespace();
            let u: usize = parse_field(it.next(), ln, "endpoint")?;
            let v: usize = parse_field(it.next(), ln, "endpoint")?;
            if it.next().is_some() {
                return Err(Error::Parse { line: ln, msg: "edge line must be `u v`".into() });
            }
            if u >= n || v >= n {
                return Err(Error::Parse { line: ln, msg: format!("endpoint out of range for n = {n}") });
            }
            if u == v {
                return Err(Error::Parse { line: ln, msg: "self-loop".into() });
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::Parse { line: ln, msg: format!("duplicate edge {u} {v}") });
            }
            edges.push((u, v));
        }
        if let Some((ln, _)) = lines.next() {
            return Err(Error::Parse { line: ln, msg: "trailing content after edge list".into() });
        }
        Graph::from_edges(n, &edges)
    }

    /// Edge-list text: `n m` then one `u v` line per edge.
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.edge_count());
        for (u, v) in self.edges() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }
}

fn parse_field(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| Error::Parse { line, msg: format!("missing {what}") })?;
    tok.parse().map_err(|_| Error::Parse { line, msg: format!("bad {what} `{tok}`") })
}

/// Block-diagonal union. Graph `i` occupies indices `offsets[i]..offsets[i] + n_i`.
pub fn disjoint_union(gs: &[Graph]) -> Result<(Graph, Vec<usize>)> {
    if gs.is_empty() {
        return Err(Error::Input("disjoint union of an empty list".into()));
    }
    let mut offsets = Vec::with_capacity(gs.len());
    let mut edges = Vec::new();
    let mut total = 0;
    for g in gs {
        offsets.push(total);
        edges.extend(g.edges().map(|(u, v)| (u + total, v + total)));
        total += g.n();
    }
    Ok((Graph::from_edges(total, &edges)?, offsets))
}

/// Iterates set bits of a word, lowest first.
pub(crate) struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;
    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let b = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(b)
    }
}

/// A set of vertices, stored sorted and without duplicates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(Vec<usize>);

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

impl VertexSet {
    pub fn new(mut vs: Vec<usize>) -> Self {
        vs.sort_unstable();
        vs.dedup();
        VertexSet(vs)
    }

    pub(crate) fn from_sorted_unchecked(vs: Vec<usize>) -> Self {
        debug_assert!(vs.windows(2).all(|w| w[0] < w[1]));
        VertexSet(vs)
    }

    pub fn all(n: usize) -> Self {
        VertexSet((0..n).collect())
    }

    pub fn from_mask(mask: u64) -> Self {
        VertexSet(BitIter(mask).collect())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn min(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        VertexSet::new(v)
    }

    /// Errors if any element is `>= n`.
    pub fn check(&self, n: usize) -> Result<()> {
        match self.0.last() {
            Some(&v) if v >= n => Err(Error::Input(format!("vertex {v} out of range for n = {n}"))),
            _ => Ok(()),
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::new(iter.into_iter().collect())
    }
}

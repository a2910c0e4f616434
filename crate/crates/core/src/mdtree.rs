//! Modular decomposition trees, quotient graphs and modular-width.
//!
//! `decompose` splits a node's vertex set by components (parallel), by
//! co-components (series), or otherwise by grouping vertices whose module
//! closure is proper (prime). Nodes live in an arena in preorder, so a node's
//! id doubles as its position in a preorder walk.

use std::collections::BTreeSet;
use std::fmt::{self, Write as _};

use crate::error::{Error, Result};
use crate::graph::{BitIter, Graph, VertexSet};
use crate::reference;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NodeKind {
    Leaf,
    Parallel,
    Series,
    Prime,
}

impl fmt::Display for NodeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NodeKind::Leaf => "leaf",
            NodeKind::Parallel => "parallel",
            NodeKind::Series => "series",
            NodeKind::Prime => "prime",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MdNode {
    pub kind: NodeKind,
    pub module: VertexSet,
    /// Arena ids of the children, in canonical order (by smallest vertex).
    pub children: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MdTree {
    /// Preorder arena; the root is node 0.
    pub nodes: Vec<MdNode>,
    pub source: Graph,
}

/// Bitset over the vertices of one graph, same width as its adjacency rows.
#[derive(Clone, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn empty(words: usize) -> Self {
        Bits(vec![0; words])
    }
    fn of(words: usize, vs: &[usize]) -> Self {
        let mut b = Bits::empty(words);
        for &v in vs {
            b.insert(v);
        }
        b
    }
    fn insert(&mut self, v: usize) {
        self.0[v / 64] |= 1 << (v % 64);
    }
    fn contains(&self, v: usize) -> bool {
        (self.0[v / 64] >> (v % 64)) & 1 == 1
    }
    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(w, &x)| BitIter(x).map(move |b| w * 64 + b))
    }
}

fn and_count(a: &[u64], b: &[u64]) -> usize {
    a.iter().zip(b).map(|(x, y)| (x & y).count_ones() as usize).sum()
}

/// Connected components of `G[s]`, or of its complement when `co` is set.
fn split(g: &Graph, s: &[usize], co: bool) -> Vec<Vec<usize>> {
    let words = g.row(0).len();
    let mut left = Bits::of(words, s);
    let mut out = Vec::new();
    for &start in s {
        if !left.contains(start) {
            continue;
        }
        left.0[start / 64] &= !(1 << (start % 64));
        let mut comp = vec![start];
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            let row = g.row(v);
            let next: Vec<usize> = left
                .0
                .iter()
                .zip(row)
                .enumerate()
                .flat_map(|(w, (&l, &r))| BitIter(if co { l & !r } else { l & r }).map(move |b| w * 64 + b))
                .collect();
            for u in next {
                left.0[u / 64] &= !(1 << (u % 64));
                comp.push(u);
                stack.push(u);
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Smallest module of `G[s]` containing `u` and `v`. Stops early once it is all of `s`.
fn closure(g: &Graph, s: &[usize], u: usize, v: usize) -> Bits {
    let words = g.row(0).len();
    let mut m = Bits::of(words, &[u, v]);
    let mut size = 2;
    loop {
        let mut grew = false;
        for &x in s {
            if m.contains(x) {
                continue;
            }
            let seen = and_count(g.row(x), &m.0);
            if seen != 0 && seen != size {
                m.insert(x);
                size += 1;
                grew = true;
            }
        }
        if !grew || size == s.len() {
            return m;
        }
    }
}

/// Maximal strong modules of a node whose factor and its complement are both connected.
fn prime_parts(g: &Graph, s: &[usize]) -> Vec<Vec<usize>> {
    let mut assigned = vec![false; s.len()];
    let mut parts = Vec::new();
    for i in 0..s.len() {
        if assigned[i] {
            continue;
        }
        assigned[i] = true;
        let mut part = vec![s[i]];
        for j in i + 1..s.len() {
            if assigned[j] {
                continue;
            }
            let m = closure(g, s, s[i], s[j]);
            if m.iter().count() < s.len() {
                for (k, &x) in s.iter().enumerate() {
                    if m.contains(x) && !assigned[k] {
                        assigned[k] = true;
                        part.push(x);
                    }
                }
            }
        }
        part.sort_unstable();
        parts.push(part);
    }
    parts
}

pub fn decompose(g: &Graph) -> MdTree {
    let mut nodes = Vec::new();
    build(g, (0..g.n()).collect(), &mut nodes);
    MdTree { nodes, source: g.clone() }
}

fn build(g: &Graph, s: Vec<usize>, nodes: &mut Vec<MdNode>) -> usize {
    let id = nodes.len();
    if s.len() == 1 {
        nodes.push(MdNode { kind: NodeKind::Leaf, module: VertexSet::new(s), children: Vec::new() });
        return id;
    }
    let comps = split(g, &s, false);
    let (kind, mut parts) = if comps.len() > 1 {
        (NodeKind::Parallel, comps)
    } else {
        let co = split(g, &s, true);
        if co.len() > 1 {
            (NodeKind::Series, co)
        } else {
            (NodeKind::Prime, prime_parts(g, &s))
        }
    };
    parts.sort_by_key(|p| p[0]);
    nodes.push(MdNode { kind, module: VertexSet::new(s), children: Vec::new() });
    let children = parts.into_iter().map(|p| build(g, p, nodes)).collect();
    nodes[id].children = children;
    id
}

impl MdTree {
    pub fn root(&self) -> &MdNode {
        &self.nodes[0]
    }

    pub fn node(&self, id: usize) -> &MdNode {
        &self.nodes[id]
    }

    /// Quotient of internal node `id`: vertex `i` stands for child `i`.
    pub fn node_quotient(&self, id: usize) -> Result<Graph> {
        let node = &self.nodes[id];
        if node.children.is_empty() {
            return Err(Error::Contract(format!("node {id} is a leaf and has no quotient")));
        }
        let mods: Vec<&VertexSet> = node.children.iter().map(|&c| &self.nodes[c].module).collect();
        let t = mods.len();
        let mut adjacent = vec![vec![false; t]; t];
        for i in 0..t {
            for j in i + 1..t {
                let cross = mods[i]
                    .as_slice()
                    .iter()
                    .map(|&a| mods[j].as_slice().iter().filter(|&&b| self.source.has_edge(a, b)).count())
                    .sum::<usize>();
                if cross != 0 && cross != mods[i].len() * mods[j].len() {
                    return Err(Error::Corruption(format!(
                        "children {:?} and {:?} of node {id} are partially adjacent",
                        mods[i], mods[j]
                    )));
                }
                adjacent[i][j] = cross != 0;
            }
        }
        Graph::from_fn(t, |i, j| adjacent[i][j])
    }

    /// Largest prime-node fan-out; 0 when there is no prime node.
    pub fn modular_width(&self) -> usize {
        self.nodes.iter().filter(|n| n.kind == NodeKind::Prime).map(|n| n.children.len()).max().unwrap_or(0)
    }

    /// One line per node in preorder, indented two spaces per level.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        let mut stack = vec![(0usize, 0usize)];
        while let Some((id, depth)) = stack.pop() {
            let node = &self.nodes[id];
            let verts: Vec<String> = node.module.as_slice().iter().map(|v| v.to_string()).collect();
            let _ = writeln!(out, "{}{} module={{{}}}", "  ".repeat(depth), node.kind, verts.join(","));
            for &c in node.children.iter().rev() {
                stack.push((c, depth + 1));
            }
        }
        out
    }

    /// Node ids in postorder (children before parents).
    pub fn postorder(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.nodes.len());
        let mut stack = vec![(0usize, false)];
        while let Some((id, expanded)) = stack.pop() {
            if expanded {
                out.push(id);
            } else {
                stack.push((id, true));
                for &c in self.nodes[id].children.iter().rev() {
                    stack.push((c, false));
                }
            }
        }
        out
    }
}

/// Size of the largest prime induced subgraph on at least 4 vertices, or 0.
pub fn mw_bruteforce(g: &Graph) -> Result<usize> {
    const CAP: usize = 12;
    let n = g.n();
    if n > CAP {
        return Err(Error::CapExceeded { what: "brute-force modular-width", n, cap: CAP });
    }
    let mut best = 0;
    for s in 1u64..(1 << n) {
        let size = s.count_ones() as usize;
        if size < 4 || size <= best {
            continue;
        }
        let (h, _) = g.induced_subgraph(&VertexSet::from_mask(s))?;
        if reference::bf_is_prime(&h)? {
            best = size;
        }
    }
    Ok(best)
}

/// Checks every structural invariant of `tree` against its source graph and
/// returns the violations found. Small graphs are also checked against a
/// brute-force enumeration of strong modules.
pub fn validate_tree(tree: &MdTree) -> Vec<String> {
    let g = &tree.source;
    let mut bad = Vec::new();
    if tree.nodes.is_empty() {
        return vec!["tree has no nodes".into()];
    }
    if tree.root().module != VertexSet::all(g.n()) {
        bad.push(format!("root module {:?} is not the full vertex set", tree.root().module));
    }
    let mut seen_as_child = vec![0usize; tree.nodes.len()];
    for (id, node) in tree.nodes.iter().enumerate() {
        for &c in &node.children {
            if c >= tree.nodes.len() {
                bad.push(format!("node {id} has dangling child {c}"));
                return bad;
            }
            seen_as_child[c] += 1;
        }
    }
    for (id, &count) in seen_as_child.iter().enumerate() {
        let want = usize::from(id != 0);
        if count != want {
            bad.push(format!("node {id} appears {count} times as a child"));
        }
    }
    if !bad.is_empty() {
        return bad;
    }
    for (id, node) in tree.nodes.iter().enumerate() {
        let m = &node.module;
        if m.is_empty() || m.check(g.n()).is_err() {
            bad.push(format!("node {id} has an invalid vertex set {m:?}"));
            continue;
        }
        if !g.is_module(m).unwrap_or(false) {
            bad.push(format!("node {id}: {m:?} is not a module"));
        }
        let is_leaf = node.kind == NodeKind::Leaf;
        if is_leaf != (m.len() == 1) || is_leaf != node.children.is_empty() {
            bad.push(format!("node {id}: leaf kind, singleton module and empty child list disagree"));
            continue;
        }
        if is_leaf {
            continue;
        }
        if node.children.len() < 2 {
            bad.push(format!("node {id} has fewer than two children"));
        }
        let kids: Vec<&VertexSet> = node.children.iter().map(|&c| &tree.nodes[c].module).collect();
        let mut union: Vec<usize> = kids.iter().flat_map(|k| k.as_slice().iter().copied()).collect();
        let total = union.len();
        union.sort_unstable();
        union.dedup();
        if total != union.len() || union != m.as_slice() {
            bad.push(format!("node {id}: children do not partition {m:?}"));
            continue;
        }
        if kids.windows(2).any(|w| w[0].min() > w[1].min()) {
            bad.push(format!("node {id}: children are not in canonical order"));
        }
        let (factor, _) = g.induced_subgraph(m).expect("nonempty");
        let expected = if !factor.is_connected() {
            NodeKind::Parallel
        } else if !factor.complement().is_connected() {
            NodeKind::Series
        } else {
            NodeKind::Prime
        };
        if node.kind != expected {
            bad.push(format!("node {id}: kind {} but the factor says {expected}", node.kind));
        }
        let q = match tree.node_quotient(id) {
            Ok(q) => q,
            Err(e) => {
                bad.push(format!("node {id}: {e}"));
                continue;
            }
        };
        // maximality of the partition
        match node.kind {
            NodeKind::Parallel if q.is_connected() || q.edge_count() != 0 => {
                bad.push(format!("node {id}: parallel children are not the components"))
            }
            NodeKind::Series if q.complement().edge_count() != 0 => {
                bad.push(format!("node {id}: series children are not the co-components"))
            }
            NodeKind::Series | NodeKind::Parallel => {
                let co = node.kind == NodeKind::Series;
                let f = if co { factor.complement() } else { factor.clone() };
                if f.components().len() != node.children.len() {
                    bad.push(format!("node {id}: children are not maximal"));
                }
            }
            NodeKind::Prime => {
                if q.n() < 4 || (q.n() <= 16 && !reference::bf_is_prime(&q).unwrap_or(false)) {
                    bad.push(format!("node {id}: prime quotient is not prime"));
                }
            }
            NodeKind::Leaf => unreachable!(),
        }
    }
    if g.n() <= 10 && bad.is_empty() {
        let strong = bf_strong_modules(g);
        let in_tree: BTreeSet<Vec<usize>> = tree.nodes.iter().map(|n| n.module.as_slice().to_vec()).collect();
        if strong != in_tree {
            bad.push("tree modules differ from the brute-force strong modules".into());
        }
    }
    bad
}

fn bf_strong_modules(g: &Graph) -> BTreeSet<Vec<usize>> {
    let mods: Vec<u64> = reference::bf_enumerate_modules(g)
        .expect("within cap")
        .iter()
        .map(|m| m.as_slice().iter().fold(0u64, |acc, &v| acc | 1 << v))
        .filter(|&m| m != 0)
        .collect();
    mods.iter()
        .filter(|&&a| mods.iter().all(|&b| a & b == 0 || a & b == a || a & b == b))
        .map(|&m| VertexSet::from_mask(m).as_slice().to_vec())
        .collect()
}

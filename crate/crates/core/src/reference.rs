//! Exhaustive reference solvers. These are the ground truth for every
//! differential test and share no code with the composition solvers in
//! [`crate::compose`].
//!
//! All solvers work on `u64` vertex masks and refuse graphs above their cap.

use crate::error::{Error, Result};
use crate::graph::{BitIter, Graph, VertexSet};

/// Cap for plain subset enumeration.
pub const DEFAULT_CAP: usize = 14;
/// Cap for the subset dynamic programs (Hamiltonicity, domination, covers).
pub const DP_CAP: usize = 18;

fn adjacency(g: &Graph, cap: usize, what: &'static str) -> Result<Vec<u64>> {
    if g.n() > cap {
        return Err(Error::CapExceeded { what, n: g.n(), cap });
    }
    Ok((0..g.n()).map(|v| g.mask(v)).collect())
}

#[inline]
fn full(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[inline]
fn bits(s: u64) -> BitIter {
    BitIter(s)
}

fn induced_edges(adj: &[u64], s: u64) -> u32 {
    bits(s).map(|v| (adj[v] & s).count_ones()).sum::<u32>() / 2
}

fn induced_components(adj: &[u64], s: u64) -> u32 {
    let mut left = s;
    let mut count = 0;
    while left != 0 {
        let start = left & left.wrapping_neg();
        let mut reach = start;
        let mut frontier = start;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= adj[v] & s;
            }
            frontier = next & !reach;
            reach |= next;
        }
        left &= !reach;
        count += 1;
    }
    count
}

fn is_connected_set(adj: &[u64], s: u64) -> bool {
    s == 0 || induced_components(adj, s) == 1
}

fn is_independent(adj: &[u64], s: u64) -> bool {
    bits(s).all(|v| adj[v] & s == 0)
}

fn is_vertex_cover(adj: &[u64], c: u64, all: u64) -> bool {
    is_independent(adj, all & !c)
}

fn is_forest(adj: &[u64], s: u64) -> bool {
    induced_edges(adj, s) + induced_components(adj, s) == s.count_ones()
}

fn is_bipartite(adj: &[u64], s: u64) -> bool {
    let mut color = [u8::MAX; 64];
    for root in bits(s) {
        if color[root] != u8::MAX {
            continue;
        }
        color[root] = 0;
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            for u in bits(adj[v] & s) {
                if color[u] == u8::MAX {
                    color[u] = 1 - color[v];
                    stack.push(u);
                } else if color[u] == color[v] {
                    return false;
                }
            }
        }
    }
    true
}

fn is_dominating(adj: &[u64], d: u64, all: u64) -> bool {
    let mut covered = d;
    for v in bits(d) {
        covered |= adj[v];
    }
    covered & all == all
}

/// Degree of every vertex of `s` inside `G[s]` equals `deg`.
fn induced_regular(adj: &[u64], s: u64, deg: u32) -> bool {
    bits(s).all(|v| (adj[v] & s).count_ones() == deg)
}

fn min_over(n: usize, mut ok: impl FnMut(u64) -> bool) -> usize {
    (0..=full(n)).filter(|&s| ok(s)).map(|s| s.count_ones() as usize).min().expect("some subset qualifies")
}

fn max_over(n: usize, mut ok: impl FnMut(u64) -> bool) -> usize {
    (0..=full(n)).filter(|&s| ok(s)).map(|s| s.count_ones() as usize).max().unwrap_or(0)
}

fn all_minimum(n: usize, mut ok: impl FnMut(u64) -> bool) -> Vec<u64> {
    let hits: Vec<u64> = (0..=full(n)).filter(|&s| ok(s)).collect();
    let best = hits.iter().map(|s| s.count_ones()).min().expect("some subset qualifies");
    hits.into_iter().filter(|s| s.count_ones() == best).collect()
}

/// Every module of `g`, including the empty set, singletons and `V`.
pub fn bf_enumerate_modules(g: &Graph) -> Result<Vec<VertexSet>> {
    let adj = adjacency(g, 16, "module enumeration")?;
    let all = full(g.n());
    Ok((0..=all)
        .filter(|&s| bits(all & !s).all(|v| adj[v] & s == 0 || adj[v] & s == s))
        .map(VertexSet::from_mask)
        .collect())
}

/// True iff `g` has only trivial modules.
pub fn bf_is_prime(g: &Graph) -> Result<bool> {
    let adj = adjacency(g, 16, "module enumeration")?;
    let all = full(g.n());
    Ok((0..=all)
        .filter(|&s| s.count_ones() >= 2 && s != all)
        .all(|s| !bits(all & !s).all(|v| adj[v] & s == 0 || adj[v] & s == s)))
}

fn colorable(adj: &[u64], k: usize, order: &[usize], colors: &mut [usize], at: usize) -> bool {
    if at == order.len() {
        return true;
    }
    let v = order[at];
    let mut used_max = 0;
    for &u in &order[..at] {
        used_max = used_max.max(colors[u] + 1);
    }
    // a fresh color is only tried once: colors are interchangeable
    for c in 0..k.min(used_max + 1) {
        if bits(adj[v]).filter(|&u| colors[u] != usize::MAX).all(|u| colors[u] != c) {
            colors[v] = c;
            if colorable(adj, k, order, colors, at + 1) {
                return true;
            }
            colors[v] = usize::MAX;
        }
    }
    false
}

pub fn bf_chromatic(g: &Graph) -> Result<usize> {
    let adj = adjacency(g, DEFAULT_CAP, "chromatic number")?;
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(adj[v].count_ones()));
    for k in 1..=n {
        let mut colors = vec![usize::MAX; n];
        if colorable(&adj, k, &order, &mut colors, 0) {
            return Ok(k);
        }
    }
    unreachable!("n colors always suffice")
}

pub fn bf_min_dominating(g: &Graph) -> Result<usize> {
    let adj = adjacency(g, DP_CAP, "dominating set")?;
    let all = full(g.n());
    Ok(min_over(g.n(), |d| is_dominating(&adj, d, all)))
}

pub fn bf_min_vc(g: &Graph) -> Result<usize> {
    let adj = adjacency(g, DP_CAP, "vertex cover")?;
    let all = full(g.n());
    Ok(min_over(g.n(), |c| is_vertex_cover(&adj, c, all)))
}

pub fn bf_max_is(g: &Graph) -> Result<usize> {
    let adj = adjacency(g, DP_CAP, "independent set")?;
    Ok(max_over(g.n(), |s| is_independent(&adj, s)))
}

pub fn bf_max_clique(g: &Graph) -> Result<usize> {
    let adj = adjacency(g, DP_CAP, "clique")?;
    Ok(max_over(g.n(), |s| bits(s).all(|v| adj[v] & s == s & !(1 << v))))
}

/// Connected vertex cover as used by the deletion value system: the minimum
/// connected vertex cover of a connected graph, and `n` for any disconnected
/// graph on two or more vertices.
pub fn bf_min_cvc(g: &Graph) -> Result<usize> {
    let adj = adjacency(g, DP_CAP, "connected vertex cover")?;
    let all = full(g.n());
    if !is_connected_set(&adj, all) {
        return Ok(g.n());
    }
    Ok(min_over(g.n(), |c| is_vertex_cover(&adj, c, all) && is_connected_set(&adj, c)))
}

/// The Connected Vertex Cover problem on arbitrary input: the smallest vertex
/// cover inducing a connected subgraph, or `None` when no such cover exists.
pub fn bf_cvc_problem(g: &Graph) -> Result<Option<usize>> {
    let adj = adjacency(g, DP_CAP, "connected vertex cover")?;
    let all = full(g.n());
    Ok((0..=all)
        .filter(|&c| is_vertex_cover(&adj, c, all) && is_connected_set(&adj, c))
        .map(|c| c.count_ones() as usize)
        .min())
}

pub fn bf_min_fvs(g: &Graph) -> Result<usize> {
    Ok(g.n() - bf_max_induced_forest(g)?)
}

pub fn bf_max_induced_forest(g: &Graph) -> Result<usize> {
    let adj = adjacency(g, DP_CAP, "feedback vertex set")?;
    Ok(max_over(g.n(), |s| is_forest(&adj, s)))
}

pub fn bf_min_oct(g: &Graph) -> Result<usize> {
    let adj = adjacency(g, DP_CAP, "odd cycle transversal")?;
    let all = full(g.n());
    Ok(min_over(g.n(), |o| is_bipartite(&adj, all & !o)))
}

pub fn bf_max_nonblocker(g: &Graph) -> Result<usize> {
    let adj = adjacency(g, DP_CAP, "nonblocker")?;
    let all = full(g.n());
    Ok(max_over(g.n(), |s| bits(s).all(|v| adj[v] & all & !s != 0)))
}

/// `ends[s]` = set of vertices at which some Hamiltonian path of `G[s]` ends.
fn path_ends(adj: &[u64], n: usize) -> Vec<u64> {
    let mut ends = vec![0u64; 1 << n];
    for v in 0..n {
        ends[1 << v] = 1 << v;
    }
    for s in 1..(1u64 << n) {
        if s.count_ones() < 2 {
            continue;
        }
        let mut e = 0;
        for v in bits(s) {
            if ends[(s & !(1 << v)) as usize] & adj[v] != 0 {
                e |= 1 << v;
            }
        }
        ends[s as usize] = e;
    }
    ends
}

pub fn bf_hp(g: &Graph) -> Result<bool> {
    let adj = adjacency(g, DP_CAP, "Hamiltonian path")?;
    Ok(path_ends(&adj, g.n())[full(g.n()) as usize] != 0)
}

/// Hamiltonian cycle; graphs on fewer than 3 vertices have none.
pub fn bf_hc(g: &Graph) -> Result<bool> {
    let adj = adjacency(g, DP_CAP, "Hamiltonian cycle")?;
    let n = g.n();
    if n < 3 {
        return Ok(false);
    }
    // paths starting at vertex 0: from0[s] = ends of such paths covering s
    let mut from0 = vec![0u64; 1 << n];
    from0[1] = 1;
    for s in (1..(1u64 << n)).filter(|s| s & 1 == 1) {
        let cur = from0[s as usize];
        if cur == 0 {
            continue;
        }
        for v in bits(full(n) & !s) {
            if adj[v] & cur != 0 {
                from0[(s | 1 << v) as usize] |= 1 << v;
            }
        }
    }
    Ok(from0[full(n) as usize] & adj[0] != 0)
}

/// Fewest vertex-disjoint paths covering every vertex.
pub fn bf_pip(g: &Graph) -> Result<usize> {
    let adj = adjacency(g, DEFAULT_CAP, "partition into paths")?;
    let n = g.n();
    let ends = path_ends(&adj, n);
    let mut best = vec![u32::MAX; 1 << n];
    best[0] = 0;
    for s in 1..(1u64 << n) {
        let low = s & s.wrapping_neg();
        let rest = s & !low;
        // enumerate parts t = low | sub for sub ⊆ rest
        let mut sub = rest;
        let mut b = u32::MAX;
        loop {
            let t = low | sub;
            if ends[t as usize] != 0 {
                b = b.min(best[(s & !t) as usize] + 1);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
        best[s as usize] = b;
    }
    Ok(best[full(n) as usize] as usize)
}

/// Vertex count of the longest induced path.
pub fn bf_lip(g: &Graph) -> Result<usize> {
    let adj = adjacency(g, DEFAULT_CAP, "longest induced path")?;
    Ok(max_over(g.n(), |s| {
        s != 0
            && is_connected_set(&adj, s)
            && induced_edges(&adj, s) + 1 == s.count_ones()
            && bits(s).all(|v| (adj[v] & s).count_ones() <= 2)
    }))
}

/// Edges of the largest induced matching.
pub fn bf_im(g: &Graph) -> Result<usize> {
    let adj = adjacency(g, DEFAULT_CAP, "induced matching")?;
    Ok(max_over(g.n(), |s| induced_regular(&adj, s, 1)) / 2)
}

/// Triangles of the largest independent triangle packing.
pub fn bf_itp(g: &Graph) -> Result<usize> {
    let adj = adjacency(g, DEFAULT_CAP, "independent triangle packing")?;
    Ok(max_over(g.n(), |s| induced_regular(&adj, s, 2) && induced_components(&adj, s) * 3 == s.count_ones()) / 3)
}

/// Cycles of the largest independent cycle packing.
pub fn bf_icp(g: &Graph) -> Result<usize> {
    let adj = adjacency(g, DEFAULT_CAP, "independent cycle packing")?;
    Ok((0..=full(g.n()))
        .filter(|&s| induced_regular(&adj, s, 2))
        .map(|s| induced_components(&adj, s) as usize)
        .max()
        .unwrap_or(0))
}

/// Independent triangle packing for graphs too large for subset enumeration:
/// a maximum independent set in the conflict graph of triangles, where two
/// triangles conflict when they share a vertex or are joined by an edge.
pub fn itp_by_triangles(g: &Graph) -> Result<usize> {
    if g.n() > 64 {
        return Err(Error::CapExceeded { what: "triangle packing", n: g.n(), cap: 64 });
    }
    let adj: Vec<u64> = (0..g.n()).map(|v| g.mask(v)).collect();
    let mut tris: Vec<u64> = Vec::new();
    for (u, v) in g.edges() {
        for w in bits(adj[u] & adj[v]) {
            if w > v {
                tris.push(1 << u | 1 << v | 1 << w);
            }
        }
    }
    let closed: Vec<u64> = tris.iter().map(|&t| bits(t).fold(t, |acc, v| acc | adj[v])).collect();
    let m = tris.len();
    let conflicts: Vec<Vec<bool>> =
        (0..m).map(|i| (0..m).map(|j| i != j && closed[i] & tris[j] != 0).collect()).collect();
    let mut best = 0;
    let cands: Vec<usize> = (0..m).collect();
    mis_search(&conflicts, cands, 0, &mut best);
    Ok(best)
}

fn mis_search(conf: &[Vec<bool>], cands: Vec<usize>, size: usize, best: &mut usize) {
    if size + cands.len() <= *best {
        return;
    }
    let Some(&v) = cands.iter().min_by_key(|&&v| cands.iter().filter(|&&u| conf[v][u]).count()) else {
        *best = (*best).max(size);
        return;
    };
    // take v
    let with: Vec<usize> = cands.iter().copied().filter(|&u| u != v && !conf[v][u]).collect();
    mis_search(conf, with, size + 1, best);
    // skip v; only useful if some neighbor of v can be taken instead
    if cands.iter().any(|&u| conf[v][u]) {
        let without: Vec<usize> = cands.iter().copied().filter(|&u| u != v).collect();
        mis_search(conf, without, size, best);
    }
}

/// Every minimum dominating set, as vertex masks.
pub fn bf_all_min_dominating(g: &Graph) -> Result<Vec<u64>> {
    let adj = adjacency(g, DEFAULT_CAP, "dominating set")?;
    let all = full(g.n());
    Ok(all_minimum(g.n(), |d| is_dominating(&adj, d, all)))
}

pub fn bf_all_min_vc(g: &Graph) -> Result<Vec<u64>> {
    let adj = adjacency(g, DEFAULT_CAP, "vertex cover")?;
    let all = full(g.n());
    Ok(all_minimum(g.n(), |c| is_vertex_cover(&adj, c, all)))
}

/// Every minimum connected vertex cover; empty when none exists.
pub fn bf_all_min_cvc(g: &Graph) -> Result<Vec<u64>> {
    let adj = adjacency(g, DEFAULT_CAP, "connected vertex cover")?;
    let all = full(g.n());
    if !(0..=all).any(|c| is_vertex_cover(&adj, c, all) && is_connected_set(&adj, c)) {
        return Ok(Vec::new());
    }
    Ok(all_minimum(g.n(), |c| is_vertex_cover(&adj, c, all) && is_connected_set(&adj, c)))
}

pub fn bf_all_min_fvs(g: &Graph) -> Result<Vec<u64>> {
    let adj = adjacency(g, DEFAULT_CAP, "feedback vertex set")?;
    let all = full(g.n());
    Ok(all_minimum(g.n(), |f| is_forest(&adj, all & !f)))
}

pub fn bf_all_min_oct(g: &Graph) -> Result<Vec<u64>> {
    let adj = adjacency(g, DEFAULT_CAP, "odd cycle transversal")?;
    let all = full(g.n());
    Ok(all_minimum(g.n(), |o| is_bipartite(&adj, all & !o)))
}

//! Vertex cover, connected vertex cover, feedback vertex set and odd cycle
//! transversal on the quotient. Each module takes one of a few deletion
//! shapes, and the kept part is judged on the quotient.
//!
//! Whether a factor has an edge is read off as `vc >= 1`.

use super::{bits, components, independent};

/// Calls `visit` on every assignment of one option per position.
pub(crate) fn for_each_choice<S: Copy>(options: &[Vec<S>], mut visit: impl FnMut(&[S])) {
    if options.iter().any(|o| o.is_empty()) {
        return;
    }
    let mut idx = vec![0usize; options.len()];
    let mut cur: Vec<S> = options.iter().map(|o| o[0]).collect();
    loop {
        visit(&cur);
        let mut i = 0;
        loop {
            if i == options.len() {
                return;
            }
            idx[i] += 1;
            if idx[i] < options[i].len() {
                cur[i] = options[i][idx[i]];
                break;
            }
            idx[i] = 0;
            cur[i] = options[i][0];
            i += 1;
        }
    }
}

fn mask_of<S: Copy + PartialEq>(shapes: &[S], pick: impl Fn(S) -> bool) -> u64 {
    shapes.iter().enumerate().filter(|(_, &s)| pick(s)).fold(0, |m, (i, _)| m | 1 << i)
}

pub fn vertex_cover(adj: &[u64], n: &[u64], vc: &[u64]) -> u64 {
    let all = (1u64 << adj.len()) - 1;
    // modules in `keep` leave a maximum independent set uncovered
    (0..=all)
        .filter(|&keep| independent(adj, keep))
        .map(|keep| (0..adj.len()).map(|i| if keep >> i & 1 == 1 { vc[i] } else { n[i] }).sum())
        .min()
        .expect("the empty set is independent")
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Cover {
    /// The whole module.
    Full,
    /// A minimum vertex cover of a factor with an edge.
    Partial,
    /// Nothing, in an edgeless factor.
    Zero,
    /// One vertex of an edgeless factor on two or more vertices.
    One,
}

/// Connected vertex cover, or the total vertex count when the graph is disconnected.
pub fn connected_vertex_cover(adj: &[u64], n: &[u64], vc: &[u64], cvc: &[u64]) -> u64 {
    let t = adj.len();
    let all = (1u64 << t) - 1;
    let total: u64 = n.iter().sum();
    if components(adj, all).len() > 1 {
        return total;
    }
    let options: Vec<Vec<Cover>> = (0..t)
        .map(|i| {
            let mut o = vec![Cover::Full];
            if vc[i] >= 1 {
                o.push(Cover::Partial);
            } else {
                o.push(Cover::Zero);
                if n[i] >= 2 {
                    o.push(Cover::One);
                }
            }
            o
        })
        .collect();
    let mut best = total;
    for_each_choice(&options, |shape| {
        let full = mask_of(shape, |s| s == Cover::Full);
        if (0..t).any(|i| shape[i] != Cover::Full && adj[i] & !full != 0) {
            return;
        }
        let nonempty = mask_of(shape, |s| s != Cover::Zero);
        let ok = match nonempty.count_ones() {
            0 => false,
            1 => {
                let i = nonempty.trailing_zeros() as usize;
                shape[i] == Cover::Full && (n[i] == 1 || cvc[i] < n[i])
            }
            _ => components(adj, nonempty).len() == 1,
        };
        if ok {
            let cost = (0..t)
                .map(|i| match shape[i] {
                    Cover::Full => n[i],
                    Cover::Partial => vc[i],
                    Cover::Zero => 0,
                    Cover::One => 1,
                })
                .sum();
            best = best.min(cost);
        }
    });
    best
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Forest {
    /// Delete the module.
    Empty,
    /// Keep one vertex.
    Single,
    /// Keep a maximum independent set of size at least 2.
    Indep,
    /// Keep a maximum induced forest of a factor with an edge; neighbors are emptied.
    Own,
}

pub fn feedback_vertex_set(adj: &[u64], n: &[u64], vc: &[u64], fvs: &[u64]) -> u64 {
    let t = adj.len();
    let options: Vec<Vec<Forest>> = (0..t)
        .map(|i| {
            let mut o = vec![Forest::Empty, Forest::Single];
            if n[i] - vc[i] >= 2 {
                o.push(Forest::Indep);
            }
            if vc[i] >= 1 {
                o.push(Forest::Own);
            }
            o
        })
        .collect();
    let mut best = u64::MAX;
    for_each_choice(&options, |shape| {
        let kept = mask_of(shape, |s| s != Forest::Empty);
        let kept_size = |j: usize| match shape[j] {
            Forest::Empty => 0,
            Forest::Single => 1,
            Forest::Indep => n[j] - vc[j],
            Forest::Own => n[j] - fvs[j],
        };
        for i in 0..t {
            match shape[i] {
                Forest::Own if adj[i] & kept != 0 => return,
                Forest::Indep if bits(adj[i] & kept).map(kept_size).sum::<u64>() > 1 => return,
                _ => {}
            }
        }
        let edges: u32 = bits(kept).map(|v| (adj[v] & kept).count_ones()).sum::<u32>() / 2;
        if edges as usize + components(adj, kept).len() != kept.count_ones() as usize {
            return;
        }
        let cost = (0..t).map(|i| n[i] - kept_size(i)).sum();
        best = best.min(cost);
    });
    best
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Bip {
    Empty,
    /// Keep a maximum independent set.
    Indep,
    /// Keep a maximum induced bipartite subgraph of a factor with an edge; neighbors are emptied.
    Own,
}

fn bipartite(adj: &[u64], s: u64) -> bool {
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

pub fn odd_cycle_transversal(adj: &[u64], n: &[u64], vc: &[u64], oct: &[u64]) -> u64 {
    let t = adj.len();
    let options: Vec<Vec<Bip>> = (0..t)
        .map(|i| if vc[i] >= 1 { vec![Bip::Empty, Bip::Indep, Bip::Own] } else { vec![Bip::Empty, Bip::Indep] })
        .collect();
    let mut best = u64::MAX;
    for_each_choice(&options, |shape| {
        let kept = mask_of(shape, |s| s != Bip::Empty);
        let indep = mask_of(shape, |s| s == Bip::Indep);
        if (0..t).any(|i| shape[i] == Bip::Own && adj[i] & kept != 0) || !bipartite(adj, indep) {
            return;
        }
        let cost = (0..t)
            .map(|i| match shape[i] {
                Bip::Empty => n[i],
                Bip::Indep => vc[i],
                Bip::Own => oct[i],
            })
            .sum();
        best = best.min(cost);
    });
    best
}

//! Weighted set coloring of the quotient: vertex `i` needs `chi[i]` colors,
//! adjacent vertices get disjoint color sets.

use std::collections::HashMap;

use super::{bits, independent};
use crate::error::{Error, Result};

const STATE_CAP: usize = 2_000_000;

pub fn chromatic(adj: &[u64], chi: &[u64]) -> Result<u64> {
    let t = adj.len();
    let all = (1u64 << t) - 1;
    if adj.iter().all(|&a| a == 0) {
        return Ok(*chi.iter().max().expect("t >= 2"));
    }
    if (0..t).all(|v| adj[v] == all & !(1 << v)) {
        return Ok(chi.iter().sum());
    }
    let indep: Vec<u64> = (1..=all).filter(|&s| independent(adj, s)).collect();
    let mut memo = HashMap::new();
    solve(adj, &indep, chi.to_vec(), &mut memo)
}

/// Fewest color classes covering every vertex at least `d[v]` times. Each class
/// can be taken maximal within the still-demanding vertices, and some class
/// must cover the lowest such vertex.
fn solve(adj: &[u64], indep: &[u64], d: Vec<u64>, memo: &mut HashMap<Vec<u64>, u64>) -> Result<u64> {
    let support = d.iter().enumerate().filter(|(_, &x)| x > 0).fold(0u64, |acc, (i, _)| acc | 1 << i);
    if support == 0 {
        return Ok(0);
    }
    if let Some(&v) = memo.get(&d) {
        return Ok(v);
    }
    if memo.len() >= STATE_CAP {
        return Err(Error::CapExceeded { what: "coloring composition states", n: memo.len(), cap: STATE_CAP });
    }
    // a lone demanding vertex, or an independent support, finishes in max(d) classes
    if independent(adj, support) {
        let v = *d.iter().max().expect("nonempty");
        memo.insert(d, v);
        return Ok(v);
    }
    let low = support & support.wrapping_neg();
    let mut best = u64::MAX;
    for &s in indep {
        if s & low == 0 || s & !support != 0 {
            continue;
        }
        let maximal = bits(support & !s).all(|u| adj[u] & s != 0);
        if !maximal {
            continue;
        }
        let mut next = d.clone();
        for v in bits(s) {
            next[v] -= 1;
        }
        best = best.min(1 + solve(adj, indep, next, memo)?);
    }
    memo.insert(d, best);
    Ok(best)
}

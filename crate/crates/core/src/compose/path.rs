//! Hamiltonian cycle and path partition on the quotient.
//!
//! Restricted to a module, a path cover falls apart into segments. A module
//! with path-partition number `p` and `n` vertices can be cut into any number
//! of segments in `[p, n]`, and segments of adjacent modules can always be
//! chained. So only the per-module segment counts matter, and the search runs
//! over count vectors plus the module the current path ends in.

use std::collections::VecDeque;

use crate::error::{Error, Result};

const STATE_CAP: usize = 20_000_000;

struct Space {
    radix: Vec<usize>,
    stride: Vec<usize>,
    counts: usize,
}

impl Space {
    fn new(n: &[u64]) -> Result<Self> {
        let mut stride = Vec::with_capacity(n.len());
        let mut counts = 1usize;
        for &x in n {
            stride.push(counts);
            counts = counts
                .checked_mul(x as usize + 1)
                .filter(|&c| c.saturating_mul(n.len()) <= STATE_CAP)
                .ok_or(Error::CapExceeded {
                    what: "path composition states",
                    n: n.iter().sum::<u64>() as usize,
                    cap: STATE_CAP,
                })?;
        }
        Ok(Space { radix: n.iter().map(|&x| x as usize + 1).collect(), stride, counts })
    }

    fn digit(&self, code: usize, i: usize) -> usize {
        code / self.stride[i] % self.radix[i]
    }

    fn done(&self, code: usize, p: &[u64]) -> bool {
        (0..self.radix.len()).all(|i| self.digit(code, i) as u64 >= p[i])
    }

    fn tokens(&self, code: usize) -> usize {
        (0..self.radix.len()).map(|i| self.digit(code, i)).sum()
    }
}

/// Returns (has a Hamiltonian cycle, path-partition number).
pub fn paths(adj: &[u64], pip: &[u64], n: &[u64]) -> Result<(bool, u64)> {
    let t = adj.len();
    let space = Space::new(n)?;
    let total = space.counts * t;
    let id = |code: usize, end: usize| code * t + end;

    // 0-1 BFS: opening a path costs 1, extending it to an adjacent module costs 0
    let mut dist = vec![u32::MAX; total];
    let mut dq = VecDeque::new();
    for j in 0..t {
        dist[id(space.stride[j], j)] = 1;
        dq.push_back((space.stride[j], j));
    }
    let mut best = u32::MAX;
    while let Some((code, end)) = dq.pop_front() {
        let d = dist[id(code, end)];
        if d >= best {
            continue;
        }
        if space.done(code, pip) {
            best = d;
            continue;
        }
        for j in 0..t {
            if space.digit(code, j) + 1 >= space.radix[j] {
                continue;
            }
            let next = code + space.stride[j];
            let (cost, front) = if adj[end] >> j & 1 == 1 { (d, true) } else { (d + 1, false) };
            let slot = &mut dist[id(next, j)];
            if cost < *slot {
                *slot = cost;
                if front {
                    dq.push_front((next, j));
                } else {
                    dq.push_back((next, j));
                }
            }
        }
    }

    // closed walks through the modules, starting with a segment of module 0
    let mut seen = vec![false; total];
    let start = space.stride[0];
    seen[id(start, 0)] = true;
    let mut stack = vec![(start, 0usize)];
    let mut hc = false;
    while let Some((code, end)) = stack.pop() {
        if adj[end] & 1 == 1 && space.done(code, pip) {
            let len = space.tokens(code);
            if len >= 3 || (len == 2 && n[0] + n[end] >= 3) {
                hc = true;
                break;
            }
        }
        for j in (0..t).filter(|&j| adj[end] >> j & 1 == 1) {
            if space.digit(code, j) + 1 >= space.radix[j] {
                continue;
            }
            let next = code + space.stride[j];
            if !seen[id(next, j)] {
                seen[id(next, j)] = true;
                stack.push((next, j));
            }
        }
    }
    Ok((hc, best as u64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compose::substitute;
    use crate::graph::Graph;

    /// Canonical factor: `C_n` when Hamiltonian, otherwise `pip` disjoint paths.
    fn canonical(hc: u64, pip: u64, n: u64) -> Graph {
        let n = n as usize;
        if hc == 0 {
            return Graph::cycle(n).unwrap();
        }
        let long = n - pip as usize + 1;
        Graph::from_fn(n, |u, v| v == u + 1 && v < long).unwrap()
    }

    /// Independent subset DP: Hamiltonian paths per subset, then path partitions.
    fn realized(g: &Graph) -> (bool, u64) {
        let n = g.n();
        let adj: Vec<u64> = (0..n).map(|v| g.mask(v)).collect();
        let full = (1usize << n) - 1;
        // reach[s] bit v: a path covering s ends at v
        let mut reach = vec![0u64; 1 << n];
        for s in 1..=full {
            if s.count_ones() == 1 {
                reach[s] = s as u64;
                continue;
            }
            for v in 0..n {
                if s >> v & 1 == 1 && reach[s & !(1 << v)] & adj[v] != 0 {
                    reach[s] |= 1 << v;
                }
            }
        }
        let mut cover = vec![u64::MAX; 1 << n];
        cover[0] = 0;
        for s in 1..=full {
            let low = s & s.wrapping_neg();
            let mut sub = s;
            while sub != 0 {
                if sub & low != 0 && reach[sub] != 0 && cover[s & !sub] != u64::MAX {
                    cover[s] = cover[s].min(cover[s & !sub] + 1);
                }
                sub = (sub - 1) & s;
            }
        }
        // cycle through vertex 0: a path from 0 covering everything that ends next to 0
        let mut from0 = vec![0u64; 1 << n];
        from0[1] = 1;
        for s in (1..=full).filter(|s| s & 1 == 1) {
            for v in 1..n {
                if s >> v & 1 == 1 && from0[s & !(1 << v)] & adj[v] != 0 {
                    from0[s] |= 1 << v;
                }
            }
        }
        let hc = n >= 3 && from0[full] & adj[0] & !1 != 0;
        (hc, cover[full])
    }

    fn check(adj: &[u64], tuples: &[(u64, u64, u64)]) {
        let t = adj.len();
        let q = Graph::from_fn(t, |i, j| adj[i] >> j & 1 == 1).unwrap();
        let factors: Vec<Graph> = tuples.iter().map(|&(h, p, n)| canonical(h, p, n)).collect();
        let g = substitute(&q, &factors).unwrap();
        let pip: Vec<u64> = tuples.iter().map(|x| x.1).collect();
        let n: Vec<u64> = tuples.iter().map(|x| x.2).collect();
        assert_eq!(paths(adj, &pip, &n).unwrap(), realized(&g), "{tuples:?} on {q:?}");
    }

    #[test]
    fn pairs() {
        let k2 = [0b10, 0b01];
        let e2 = [0, 0];
        check(&k2, &[(1, 1, 1), (1, 1, 1)]);
        check(&k2, &[(1, 1, 1), (1, 1, 2)]);
        check(&k2, &[(1, 3, 3), (1, 1, 1)]);
        check(&k2, &[(1, 3, 3), (1, 1, 2)]);
        check(&k2, &[(1, 3, 3), (1, 2, 3)]);
        check(&k2, &[(0, 1, 4), (1, 1, 1)]);
        check(&e2, &[(1, 1, 2), (1, 2, 2)]);
        check(&e2, &[(0, 1, 3), (1, 1, 1)]);
    }

    #[test]
    fn primes() {
        let p4 = [0b0010, 0b0101, 0b1010, 0b0100];
        check(&p4, &[(1, 1, 1); 4]);
        check(&p4, &[(1, 2, 2), (1, 1, 1), (1, 1, 1), (1, 3, 3)]);
        check(&p4, &[(1, 1, 1), (1, 3, 3), (0, 1, 3), (1, 1, 1)]);
        let c5 = [0b10010, 0b00101, 0b01010, 0b10100, 0b01001];
        check(&c5, &[(1, 1, 1); 5]);
        check(&c5, &[(1, 2, 2), (1, 1, 1), (1, 1, 2), (1, 2, 3), (1, 1, 1)]);
    }

    #[test]
    fn random_against_realization() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        for _ in 0..150 {
            let t = rng.gen_range(2..=5);
            let q = Graph::from_fn(t, |_, _| rng.gen_bool(0.5)).unwrap();
            let adj: Vec<u64> = (0..t).map(|v| q.mask(v)).collect();
            let mut budget = 13usize;
            let tuples: Vec<(u64, u64, u64)> = (0..t)
                .map(|i| {
                    let n = rng.gen_range(1..=(budget - (t - i - 1)).min(4));
                    budget -= n;
                    if n >= 3 && rng.gen_bool(0.3) {
                        (0, 1, n as u64)
                    } else {
                        (1, rng.gen_range(1..=n) as u64, n as u64)
                    }
                })
                .collect();
            check(&adj, &tuples);
        }
    }
}

//! Instance generators: random graphs of bounded modular-width built by
//! substitution, plus the disjoint-union composition, the triangle-packing
//! refinement reduction and the path-to-cycle reduction.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::compose::substitute;
use crate::error::{Error, Result};
use crate::graph::{disjoint_union, Graph};
use crate::reference;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenSpec {
    pub n: usize,
    /// Largest prime skeleton; 0 yields cographs.
    pub k: usize,
    pub seed: u64,
    pub depth_cap: usize,
}

impl GenSpec {
    pub fn new(n: usize, k: usize, seed: u64) -> Self {
        GenSpec { n, k, seed, depth_cap: 12 }
    }

    pub fn check(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::Input("n must be at least 1".into()));
        }
        if self.k != 0 && self.k < 4 {
            return Err(Error::Input(format!("k must be 0 or at least 4, got {}", self.k)));
        }
        if self.k > 16 {
            return Err(Error::Input(format!("k = {} is above the supported 16", self.k)));
        }
        Ok(())
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random prime graph on `s >= 4` vertices, by rejection.
pub fn random_prime(rng: &mut impl Rng, s: usize) -> Graph {
    loop {
        let g = Graph::from_fn(s, |_, _| rng.gen_bool(0.5)).expect("s >= 1");
        if reference::bf_is_prime(&g).expect("s <= 16") {
            return g;
        }
    }
}

/// Splits `n` into `parts` positive sizes.
fn composition(rng: &mut impl Rng, n: usize, parts: usize) -> Vec<usize> {
    let mut cuts = rand::seq::index::sample(rng, n - 1, parts - 1).into_vec();
    cuts.sort_unstable();
    let mut out = Vec::with_capacity(parts);
    let mut prev = 0;
    for c in cuts {
        out.push(c + 1 - prev);
        prev = c + 1;
    }
    out.push(n - prev);
    out
}

pub fn random_bounded_mw(spec: &GenSpec) -> Result<Graph> {
    spec.check()?;
    let mut r = rng(spec.seed);
    Ok(build(&mut r, spec.n, spec.k, 0, spec.depth_cap))
}

fn build(rng: &mut ChaCha8Rng, n: usize, k: usize, depth: usize, cap: usize) -> Graph {
    if n == 1 {
        return Graph::complete(1).expect("n = 1");
    }
    let skeleton = if depth >= cap {
        let series = rng.gen_bool(0.5);
        Graph::from_fn(n, |_, _| series).expect("n >= 2")
    } else if k >= 4 && n >= 4 && rng.gen_bool(0.6) {
        let s = rng.gen_range(4..=k.min(n));
        random_prime(rng, s)
    } else {
        let s = rng.gen_range(2..=n.min(4));
        let series = rng.gen_bool(0.5);
        Graph::from_fn(s, |_, _| series).expect("s >= 2")
    };
    let sizes = composition(rng, n, skeleton.n());
    let factors: Vec<Graph> = sizes.into_iter().map(|m| build(rng, m, k, depth + 1, cap)).collect();
    substitute(&skeleton, &factors).expect("one factor per skeleton vertex")
}

/// Erdős–Rényi graph `G(n, p)`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    let mut r = rng(seed);
    Graph::from_fn(n, |_, _| r.gen_bool(p))
}

/// Mixed test corpus: cographs, plain random graphs, and bounded-width graphs
/// with `k` in {4, 5, 6}, on 1..=max_n vertices.
pub fn mixed_corpus(count: usize, max_n: usize, seed: u64) -> Vec<Graph> {
    let mut r = rng(seed);
    (0..count)
        .map(|i| {
            let n = r.gen_range(1..=max_n);
            let s = r.gen::<u64>();
            match i % 4 {
                0 => random_bounded_mw(&GenSpec::new(n, 0, s)).expect("valid spec"),
                1 => random_graph(n, r.gen_range(0.15..0.85), s).expect("n >= 1"),
                _ => random_bounded_mw(&GenSpec::new(n, r.gen_range(4..=6), s)).expect("valid spec"),
            }
        })
        .collect()
}

/// Disjoint union. Modular-width is the maximum over the parts, triangle
/// packing adds up, and the longest induced path is the maximum.
pub fn or_composition(graphs: &[Graph]) -> Result<Graph> {
    if graphs.is_empty() {
        return Err(Error::Input("nothing to compose".into()));
    }
    Ok(disjoint_union(graphs)?.0)
}

/// Reduction from triangle packing with target `k` to the refinement problem.
///
/// Vertices: `g` keeps `0..n`; `x_1..x_{n-k+1}` follow; then the triples
/// `u_i, w_i, w'_i`. Returns the graph and the `n` triangles `u_i w_i w'_i`.
pub fn itpr_reduction(g: &Graph, k: usize) -> Result<(Graph, Vec<[usize; 3]>)> {
    let n = g.n();
    if k < 2 || 3 * k > n {
        return Err(Error::Input(format!("need 2 <= k <= n/3, got k = {k} with n = {n}")));
    }
    let xs = n - k + 1;
    let x = |i: usize| n + i - 1;
    let u = |i: usize| n + xs + 3 * (i - 1);
    let w = |i: usize| u(i) + 1;
    let w2 = |i: usize| u(i) + 2;
    let total = n + xs + 3 * n;
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    for i in 1..=n {
        edges.extend([(u(i), w(i)), (u(i), w2(i)), (w(i), w2(i))]);
        edges.extend((0..n).map(|v| (u(i), v)));
    }
    for i in 1..=n - k {
        edges.extend([(x(i), w(i)), (x(i), w2(i))]);
    }
    for j in n - k + 1..=n {
        edges.extend([(x(n - k + 1), w(j)), (x(n - k + 1), w2(j))]);
    }
    let triangles = (1..=n).map(|i| [u(i), w(i), w2(i)]).collect();
    Ok((Graph::from_edges(total, &edges)?, triangles))
}

/// `g` plus one vertex adjacent to every vertex of `g`.
pub fn hp_to_hc(g: &Graph) -> Graph {
    let n = g.n();
    Graph::from_fn(n + 1, |a, b| b == n || g.has_edge(a, b)).expect("n + 1 >= 1")
}

/// Checks that `triangles` is an independent triangle packing of `g`: each is a
/// triangle, they are vertex-disjoint, and no edge joins two of them.
pub fn is_independent_triangle_packing(g: &Graph, triangles: &[[usize; 3]]) -> bool {
    let mut owner = vec![usize::MAX; g.n()];
    for (i, t) in triangles.iter().enumerate() {
        if !(g.has_edge(t[0], t[1]) && g.has_edge(t[1], t[2]) && g.has_edge(t[0], t[2])) {
            return false;
        }
        for &v in t {
            if owner[v] != usize::MAX {
                return false;
            }
            owner[v] = i;
        }
    }
    g.edges().all(|(a, b)| owner[a] == usize::MAX || owner[b] == usize::MAX || owner[a] == owner[b])
}

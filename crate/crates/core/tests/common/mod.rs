#![allow(dead_code)]

use std::io::Write;
use std::process::{Command, Stdio};

use modwidth::engine::{encoding_bound, parse_dump, OracleMode, QueryTranscript};
use modwidth::generators::{
    hp_to_hc, itpr_reduction, mixed_corpus, or_composition, random_bounded_mw, random_graph, rng, GenSpec,
};
use modwidth::mdtree::{mw_bruteforce, validate_tree};
use modwidth::problem::{reference_answer, solve_problem};
use modwidth::reference as bf;
use modwidth::{decompose, solve, Graph, NodeKind, Problem, System, VertexSet};
use rand::Rng;

pub struct Report {
    pub checked: usize,
    pub failures: Vec<String>,
    pub note: String,
}

impl Report {
    fn new() -> Self {
        Report { checked: 0, failures: Vec::new(), note: String::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.failures.len() < 1000 {
            self.failures.push(what());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.checked > 0
    }

    pub fn assert_ok(&self) {
        assert!(self.passed(), "{} of {} failed; first: {:?}", self.failures.len(), self.checked, self.failures.first());
    }
}

fn mask_of(s: &VertexSet) -> u64 {
    s.as_slice().iter().fold(0, |m, &v| m | 1 << v)
}

/// Every problem against exhaustive search on `count` corpus graphs.
pub fn differential(count: usize, max_n: usize, seed: u64) -> Report {
    let mut r = Report::new();
    let corpus = mixed_corpus(count, max_n, seed);
    for p in Problem::ALL {
        for (i, g) in corpus.iter().enumerate() {
            let got = solve_problem(p, g, OracleMode::Function).map(|run| run.answer);
            let want = reference_answer(p, g);
            r.check(got.is_ok() && got == want, || format!("{p} on corpus graph {i}: engine {got:?}, brute {want:?}"));
        }
    }
    r
}

/// Searches graphs on at most `max_h` vertices for one with the tuple `want`.
fn find_twin(sys: System, want: &modwidth::ValueTuple, m: &Graph, max_h: usize, r: &mut impl Rng) -> Option<Graph> {
    let sizes: Vec<usize> = match sys {
        System::Del | System::Path | System::Pack => vec![m.n()],
        _ => (1..=max_h).collect(),
    };
    for _ in 0..400 {
        let s = sizes[r.gen_range(0..sizes.len())];
        if s > max_h {
            return None;
        }
        let p = r.gen_range(0.2..0.9);
        let h = Graph::from_fn(s, |_, _| r.gen_bool(p)).ok()?;
        if &h != m && sys.reference_tuple(&h).ok().as_ref() == Some(want) {
            return Some(h);
        }
    }
    None
}

/// Replaces a nontrivial module by a graph with the same tuple and compares
/// every function of the system on both graphs. Stops after `target`
/// successful triples per system.
pub fn substitution(target: usize, seed: u64) -> Report {
    let mut r = Report::new();
    let mut found = Vec::new();
    let mut rg = rng(seed);
    for sys in System::ALL {
        let mut ok = 0;
        let mut attempts = 0;
        while ok < target && attempts < target * 60 {
            attempts += 1;
            let n = rg.gen_range(4..=12);
            let g = match attempts % 3 {
                0 => random_graph(n, rg.gen_range(0.2..0.8), rg.gen()).unwrap(),
                _ => random_bounded_mw(&GenSpec::new(n, rg.gen_range(4..=6), rg.gen())).unwrap(),
            };
            let modules: Vec<VertexSet> = bf::bf_enumerate_modules(&g)
                .unwrap()
                .into_iter()
                .filter(|m| m.len() >= 2 && m.len() < n)
                .collect();
            if modules.is_empty() {
                continue;
            }
            let m = &modules[rg.gen_range(0..modules.len())];
            let (gm, _) = g.induced_subgraph(m).unwrap();
            if sys == System::Lip && bf::bf_lip(&gm).unwrap() < 4 {
                continue;
            }
            let want = sys.reference_tuple(&gm).unwrap();
            let max_h = 7.min(bf::DEFAULT_CAP - (n - m.len()));
            let Some(h) = find_twin(sys, &want, &gm, max_h, &mut rg) else { continue };
            let g2 = g.modular_replacement(m, &h).unwrap();
            let before = sys.reference_tuple(&g).unwrap();
            let after = sys.reference_tuple(&g2).unwrap();
            r.check(before == after, || format!("{sys}: module {m:?} of {g:?} replaced by {h:?}: {before} vs {after}"));
            ok += 1;
        }
        found.push(format!("{sys}={ok}"));
        r.check(ok >= target, || format!("{sys}: only {ok} triples found"));
    }
    r.note = found.join(" ");
    r
}

/// No induced P4, checked over all 4-subsets.
fn p4_free(g: &Graph) -> bool {
    let n = g.n();
    let deg = |s: [usize; 4], v: usize| s.iter().filter(|&&u| u != v && g.has_edge(u, v)).count();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let s = [a, b, c, d];
                    let mut ds: Vec<usize> = s.iter().map(|&v| deg(s, v)).collect();
                    ds.sort_unstable();
                    if ds == [1, 1, 2, 2] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

pub fn decomposition(count: usize, seed: u64) -> Report {
    let mut r = Report::new();
    let mut corpus = mixed_corpus(count, 10, seed);
    let mut rg = rng(seed ^ 0x5eed);
    corpus.extend((0..count / 4).map(|_| random_bounded_mw(&GenSpec::new(rg.gen_range(1..=10), 0, rg.gen())).unwrap()));
    for (i, g) in corpus.iter().enumerate() {
        let t = decompose(g);
        let problems = validate_tree(&t);
        r.check(problems.is_empty(), || format!("graph {i}: {problems:?}"));
        let mw = t.modular_width();
        let brute = mw_bruteforce(g).unwrap();
        r.check(mw == brute, || format!("graph {i}: tree mw {mw}, brute {brute}"));
        r.check((mw == 0) == p4_free(g), || format!("graph {i}: mw {mw} but P4-free = {}", p4_free(g)));
        for id in 0..t.nodes.len() {
            if t.node(id).kind == NodeKind::Prime {
                let q = t.node_quotient(id).unwrap();
                r.check(bf::bf_is_prime(&q).unwrap(), || format!("graph {i}: quotient of node {id} is not prime"));
            }
        }
        let c = decompose(&g.complement()).modular_width();
        r.check(c == mw, || format!("graph {i}: mw {mw}, complement mw {c}"));
    }
    r
}

/// Systems cheap enough to run on a few hundred vertices.
pub const SWEEP_SYSTEMS: [System; 5] = [System::Ind, System::Dom, System::Del, System::Lip, System::Pack];

fn bound_violations(tr: &QueryTranscript, n: usize, k: usize, r: &mut Report, tag: &str) {
    let ar = tr.system.arity();
    let w = (usize::BITS - n.leading_zeros()) as usize;
    for e in &tr.entries {
        let exact = 32 + e.t * (e.t - 1) / 2 + e.t * ar * w + 1 + ar * w;
        r.check(e.bits <= exact && e.t <= k.max(2), || {
            format!("{tag}: node {} t={} bits={} bound={exact}", e.node, e.t, e.bits)
        });
        r.check(encoding_bound(e.t, ar, w as u32) == exact, || format!("{tag}: library bound disagrees"));
    }
}

pub fn query_length(ns: &[usize], ks: &[usize], seeds: u64) -> Report {
    let mut r = Report::new();
    let mut worst = 0;
    for &n in ns {
        for &k in ks {
            for s in 0..seeds {
                let g = random_bounded_mw(&GenSpec::new(n, k, 1000 * n as u64 + 10 * k as u64 + s)).unwrap();
                for sys in SWEEP_SYSTEMS {
                    let tag = format!("{sys} n={n} k={k} seed={s}");
                    match solve(&g, sys, OracleMode::Function) {
                        Ok((_, tr)) => {
                            worst = worst.max(tr.max_query_bits());
                            bound_violations(&tr, n, k, &mut r, &tag);
                        }
                        Err(e) => r.check(false, || format!("{tag}: {e}")),
                    }
                }
            }
        }
    }
    r.note = format!("max bits {worst}");
    r
}

pub const SMALL_ARITY: [System; 5] = [System::Col, System::Dom, System::Ind, System::Lip, System::Path];

/// The small mixed corpus plus bounded-width graphs up to `max_n` vertices.
/// Plain random graphs above 12 vertices are usually prime with a quotient
/// beyond what the composition solvers accept.
pub fn wide_corpus(count: usize, max_n: usize, seed: u64) -> Vec<Graph> {
    let mut corpus = mixed_corpus(count / 2, 12, seed);
    let mut rg = rng(seed ^ 0xc0ffee);
    let ks = [0, 4, 5, 6];
    corpus.extend((0..count - count / 2).map(|i| {
        let n = rg.gen_range(13.min(max_n)..=max_n);
        random_bounded_mw(&GenSpec::new(n, ks[i % 4], rg.gen())).unwrap()
    }));
    corpus
}

pub fn membership(count: usize, max_n: usize, seed: u64) -> Report {
    let mut r = Report::new();
    let corpus = wide_corpus(count, max_n, seed);
    for sys in SMALL_ARITY {
        for (i, g) in corpus.iter().enumerate() {
            let f = solve(g, sys, OracleMode::Function);
            let m = solve(g, sys, OracleMode::membership());
            let (Ok((ft, _)), Ok((mt, mtr))) = (&f, &m) else {
                r.check(false, || format!("{sys} graph {i}: {:?} / {:?}", f.as_ref().err(), m.as_ref().err()));
                continue;
            };
            r.check(ft == mt, || format!("{sys} graph {i}: function {ft}, membership {mt}"));
            let cap = (g.n() as u64 + 1).pow(sys.arity() as u32);
            for e in &mtr.entries {
                r.check(e.membership && e.calls <= cap, || format!("{sys} graph {i} node {}: {} calls", e.node, e.calls));
            }
        }
    }
    r
}

pub fn constructions(itpr_graphs: usize, union_cases: usize, corpus: usize, seed: u64) -> Report {
    let mut r = Report::new();
    let mut rg = rng(seed);
    for _ in 0..itpr_graphs {
        let n = rg.gen_range(6..=9);
        let g = random_graph(n, rg.gen_range(0.3..0.9), rg.gen()).unwrap();
        let itp = bf::bf_itp(&g).unwrap();
        for k in 2..=n / 3 {
            let (h, _) = itpr_reduction(&g, k).unwrap();
            let big = bf::itp_by_triangles(&h).unwrap();
            r.check((itp >= k) == (big > n), || format!("itpr k={k}: itp(g)={itp}, itp(g')={big} on {g:?}"));
        }
    }
    for _ in 0..union_cases {
        let parts: Vec<Graph> = (0..rg.gen_range(2..=3))
            .map(|_| random_graph(rg.gen_range(1..=8), rg.gen_range(0.2..0.9), rg.gen()).unwrap())
            .collect();
        let u = or_composition(&parts).unwrap();
        if u.n() <= bf::DEFAULT_CAP {
            let sum: usize = parts.iter().map(|p| bf::bf_itp(p).unwrap()).sum();
            r.check(bf::bf_itp(&u).unwrap() == sum, || format!("itp not additive on {parts:?}"));
            let max = parts.iter().map(|p| bf::bf_lip(p).unwrap()).max().unwrap();
            r.check(bf::bf_lip(&u).unwrap() == max, || format!("lip not the max on {parts:?}"));
        }
        let max = parts.iter().map(|p| decompose(p).modular_width()).max().unwrap();
        r.check(decompose(&u).modular_width() == max, || format!("mw not the max on {parts:?}"));
    }
    let mut series_cographs = 0;
    for (i, g) in mixed_corpus(corpus, 10, seed ^ 7).iter().enumerate() {
        let h = hp_to_hc(g);
        if g.n() >= 2 {
            let (hp, hc) = (bf::bf_hp(g).unwrap(), bf::bf_hc(&h).unwrap());
            r.check(hp == hc, || format!("graph {i}: hp {hp}, hc of extension {hc}"));
        }
        let t = decompose(g);
        if t.modular_width() == 0 && t.root().kind == NodeKind::Series {
            series_cographs += 1;
        }
        let (a, b) = (t.modular_width(), decompose(&h).modular_width());
        r.check(a == b, || format!("graph {i}: mw {a} becomes {b} after adding a universal vertex"));
    }
    r.note = format!("{series_cographs} series-rooted cographs");
    r
}

/// Connected graphs with at least one nontrivial module.
fn modular_graphs(count: usize, seed: u64) -> Vec<(Graph, Vec<VertexSet>)> {
    let mut rg = rng(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let n = rg.gen_range(3..=10);
        let g = if rg.gen_bool(0.5) {
            random_graph(n, rg.gen_range(0.2..0.8), rg.gen()).unwrap()
        } else {
            random_bounded_mw(&GenSpec::new(n, rg.gen_range(4..=6), rg.gen())).unwrap()
        };
        let ms: Vec<VertexSet> =
            bf::bf_enumerate_modules(&g).unwrap().into_iter().filter(|m| m.len() >= 2 && m.len() < n).collect();
        if !ms.is_empty() && g.is_connected() {
            out.push((g, ms));
        }
    }
    out
}

type Witnesses = fn(&Graph) -> modwidth::Result<Vec<u64>>;

/// Cases a witness may show on module `m`, given the minimum solutions of `g[m]`.
fn case_holds(problem: &str, s: u64, m: u64, map: &[usize], local: &dyn Fn(Witnesses) -> Vec<u64>) -> bool {
    let part = s & m;
    let to_local = |x: u64| map.iter().enumerate().filter(|(_, &v)| x >> v & 1 == 1).fold(0u64, |a, (i, _)| a | 1 << i);
    let lp = to_local(part);
    let single = part.count_ones() == 1;
    let in_list = |f: Witnesses| local(f).contains(&lp);
    match problem {
        "ds" => part == 0 || single || in_list(bf::bf_all_min_dominating),
        "vc" => part == m || in_list(bf::bf_all_min_vc),
        "fvs" => {
            part == m
                || (m & !part).count_ones() == 1
                || in_list(bf::bf_all_min_vc)
                || in_list(bf::bf_all_min_fvs)
        }
        "oct" => part == m || in_list(bf::bf_all_min_vc) || in_list(bf::bf_all_min_oct),
        "cvc" => part == m || single || in_list(bf::bf_all_min_vc),
        _ => unreachable!(),
    }
}

pub fn witnesses(count: usize, seed: u64) -> Report {
    let mut r = Report::new();
    let lists: [(&str, Witnesses); 5] = [
        ("ds", bf::bf_all_min_dominating),
        ("vc", bf::bf_all_min_vc),
        ("cvc", bf::bf_all_min_cvc),
        ("fvs", bf::bf_all_min_fvs),
        ("oct", bf::bf_all_min_oct),
    ];
    let mut every = 0;
    for (gi, (g, modules)) in modular_graphs(count, seed).iter().enumerate() {
        for (name, f) in lists {
            let sols = f(g).unwrap();
            if sols.is_empty() {
                continue;
            }
            for m in modules {
                let (gm, map) = g.induced_subgraph(m).unwrap();
                let mask = mask_of(m);
                let local = |h: Witnesses| h(&gm).unwrap();
                let good = sols.iter().filter(|&&s| case_holds(name, s, mask, &map, &local)).count();
                if good == sols.len() {
                    every += 1;
                }
                r.check(good > 0, || format!("{name} graph {gi} module {m:?}: no optimal witness fits the cases"));
            }
        }
    }
    r.note = format!("{every} cases where every witness fits");
    r
}

/// Replays transcripts through the oracle subprocess and compares every line.
pub fn purity(bin: &str, count: usize, max_n: usize, seed: u64) -> Report {
    let mut r = Report::new();
    let corpus = mixed_corpus(count, max_n, seed);
    for sys in System::ALL {
        let mut queries = String::new();
        let mut expected = Vec::new();
        for (i, g) in corpus.iter().enumerate() {
            let modes: &[OracleMode] =
                if sys.arity() <= 3 { &[OracleMode::Function, OracleMode::membership()] } else { &[OracleMode::Function] };
            for &mode in modes {
                let tr = match solve(g, sys, mode) {
                    Ok((_, tr)) => tr,
                    Err(e) => {
                        r.check(false, || format!("{sys} graph {i}: {e}"));
                        continue;
                    }
                };
                let dump = tr.dump();
                let parsed = parse_dump(&dump);
                r.check(parsed.as_ref().map(|p| p.render()) == Ok(dump.clone()), || format!("{sys} graph {i}: dump does not re-parse"));
                for (line, e) in parsed.unwrap().lines.iter().zip(&tr.entries) {
                    queries.push_str(&hex::encode(&line.bytes));
                    queries.push('\n');
                    expected.push(e.expected_response());
                }
            }
        }
        let mut child = Command::new(bin)
            .args(["oracle", "--system", sys.id()])
            .stdin(Stdio::piped())
            .stdout(Stdio::piped())
            .spawn()
            .expect("oracle subprocess");
        let mut stdin = child.stdin.take().unwrap();
        let writer = std::thread::spawn(move || stdin.write_all(queries.as_bytes()));
        let out = child.wait_with_output().unwrap();
        writer.join().unwrap().unwrap();
        let text = String::from_utf8(out.stdout).unwrap();
        let got: Vec<&str> = text.lines().collect();
        r.check(out.status.success() && got.len() == expected.len(), || {
            format!("{sys}: {} replies for {} queries", got.len(), expected.len())
        });
        for (j, (a, b)) in got.iter().zip(&expected).enumerate() {
            r.check(a == b, || format!("{sys} query {j}: replay {a:?}, recorded {b:?}"));
        }
    }
    r
}


//! Bottom-up evaluation of a value system over the modular decomposition tree.
//!
//! Leaves take the system's leaf tuple. A prime node sends its quotient with
//! the children's tuples to the oracle in one query. Series and parallel nodes
//! are folded left to right, each step a two-vertex query.

mod oracle;
mod transcript;
mod vaqg;

pub use oracle::{respond, ComposeOracle, CorruptOracle, Oracle};
pub use transcript::{parse_dump, DumpLine, ParsedDump, QueryKind, QueryTranscript, TranscriptEntry};
pub use vaqg::{decode_query, encode_query, encoding_bound, query_bits, value_width, DecodedQuery, Encoded, Vaqg};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::mdtree::{decompose, MdTree, NodeKind};
use crate::values::{System, ValueTuple};

/// Default largest value bound for which membership enumeration is attempted.
pub const MEMBERSHIP_CAP: u64 = 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleMode {
    Function,
    /// Enumerate every candidate tuple; refuse runs whose value bound exceeds `cap`.
    Membership { cap: u64 },
}

impl OracleMode {
    pub fn membership() -> Self {
        OracleMode::Membership { cap: MEMBERSHIP_CAP }
    }
}

/// Evaluates `system` on `g` with the default composition oracle.
pub fn solve(g: &Graph, system: System, mode: OracleMode) -> Result<(ValueTuple, QueryTranscript)> {
    solve_with(g, system, mode, &mut ComposeOracle::new(system))
}

pub fn solve_with(
    g: &Graph,
    system: System,
    mode: OracleMode,
    oracle: &mut dyn Oracle,
) -> Result<(ValueTuple, QueryTranscript)> {
    let mut engine = Engine::new(g, system, mode, oracle)?;
    let tuple = engine.run()?;
    Ok((tuple, engine.transcript))
}

pub struct Engine<'a> {
    pub tree: MdTree,
    system: System,
    mode: OracleMode,
    oracle: &'a mut dyn Oracle,
    pub transcript: QueryTranscript,
}

impl<'a> Engine<'a> {
    pub fn new(g: &Graph, system: System, mode: OracleMode, oracle: &'a mut dyn Oracle) -> Result<Self> {
        if let OracleMode::Membership { cap } = mode {
            if system.value_bound(g.n()) > cap {
                return Err(Error::CapExceeded { what: "membership enumeration", n: g.n(), cap: cap as usize });
            }
        }
        let tree = decompose(g);
        let transcript =
            QueryTranscript { system, n: g.n(), mw: tree.modular_width(), exponent: system.bound_exponent(), entries: Vec::new() };
        Ok(Engine { tree, system, mode, oracle, transcript })
    }

    pub fn run(&mut self) -> Result<ValueTuple> {
        let mut tuples: Vec<Option<ValueTuple>> = vec![None; self.tree.nodes.len()];
        for id in self.tree.postorder() {
            let node = &self.tree.nodes[id];
            let kids: Vec<ValueTuple> =
                node.children.iter().map(|&c| tuples[c].take().expect("children come first")).collect();
            let t = match node.kind {
                NodeKind::Leaf => self.system.leaf_tuple(),
                NodeKind::Prime => self.process_prime(id, &kids)?,
                NodeKind::Series | NodeKind::Parallel => self.process_degenerate(id, &kids)?,
            };
            tuples[id] = Some(t);
        }
        Ok(tuples[0].take().expect("root evaluated"))
    }

    fn small_lip(&self, module: &VertexSet) -> Result<Option<u64>> {
        if self.system != System::Lip {
            return Ok(None);
        }
        let (factor, _) = self.tree.source.induced_subgraph(module)?;
        Ok(lip_small_case(&factor))
    }

    pub fn process_prime(&mut self, id: usize, kids: &[ValueTuple]) -> Result<ValueTuple> {
        if let Some(v) = self.small_lip(&self.tree.nodes[id].module.clone())? {
            return Ok(ValueTuple(vec![v]));
        }
        let q = self.tree.node_quotient(id)?;
        let vaqg = Vaqg::new(self.system, q, kids.to_vec())?;
        self.ask(&vaqg, id, QueryKind::Prime)
    }

    pub fn process_degenerate(&mut self, id: usize, kids: &[ValueTuple]) -> Result<ValueTuple> {
        let node = self.tree.nodes[id].clone();
        let pair = if node.kind == NodeKind::Series { Graph::complete(2)? } else { Graph::edgeless(2)? };
        let mut acc = kids[0].clone();
        let mut covered = self.tree.nodes[node.children[0]].module.clone();
        for (i, &c) in node.children.iter().enumerate().skip(1) {
            covered = covered.union(&self.tree.nodes[c].module);
            acc = match self.small_lip(&covered)? {
                Some(v) => ValueTuple(vec![v]),
                None => {
                    let vaqg = Vaqg::new(self.system, pair.clone(), vec![acc, kids[i].clone()])?;
                    self.ask(&vaqg, id, QueryKind::Merge)?
                }
            };
        }
        Ok(acc)
    }

    fn ask(&mut self, vaqg: &Vaqg, node: usize, kind: QueryKind) -> Result<ValueTuple> {
        let n = self.transcript.n;
        let r = self.system.arity();
        let entry = match self.mode {
            OracleMode::Function => {
                let enc = encode_query(vaqg, None, n)?;
                let answer = self.oracle.evaluate(&enc.bytes)?;
                if answer.len() != r {
                    return Err(Error::Consistency(format!("oracle answered ({answer}) with the wrong arity")));
                }
                TranscriptEntry {
                    node,
                    kind,
                    t: vaqg.t(),
                    bits: enc.bits,
                    bytes: enc.bytes,
                    membership: false,
                    calls: 1,
                    answer,
                }
            }
            OracleMode::Membership { .. } => {
                let bound = self.system.value_bound(n);
                let mut cand = vec![0u64; r];
                let mut calls = 0u64;
                let mut accepted: Option<(ValueTuple, Encoded)> = None;
                loop {
                    let c = ValueTuple(cand.clone());
                    let enc = encode_query(vaqg, Some(&c), n)?;
                    calls += 1;
                    if self.oracle.accepts(&enc.bytes)? {
                        if let Some((first, _)) = &accepted {
                            return Err(Error::Consistency(format!(
                                "membership oracle accepted both ({first}) and ({c}) at node {node}"
                            )));
                        }
                        accepted = Some((c, enc));
                    }
                    // lexicographic successor
                    let Some(pos) = (0..r).rev().find(|&i| cand[i] < bound) else { break };
                    cand[pos] += 1;
                    cand[pos + 1..].iter_mut().for_each(|x| *x = 0);
                }
                let Some((answer, enc)) = accepted else {
                    return Err(Error::Consistency(format!("membership oracle accepted no tuple at node {node}")));
                };
                TranscriptEntry { node, kind, t: vaqg.t(), bits: enc.bits, bytes: enc.bytes, membership: true, calls, answer }
            }
        };
        let answer = entry.answer.clone();
        self.transcript.entries.push(entry);
        Ok(answer)
    }
}

/// Longest induced path when it has at most 3 vertices; `None` as soon as an
/// induced `P4` exists.
pub fn lip_small_case(g: &Graph) -> Option<u64> {
    let n = g.n();
    for (b, c) in g.edges() {
        for (x, y) in [(b, c), (c, b)] {
            // a ~ x, a !~ y; d ~ y, d !~ x; a !~ d
            let rx = g.row(x);
            let ry = g.row(y);
            for a in g.neighbors(x).filter(|&a| a != y && !g.has_edge(a, y)) {
                let ra = g.row(a);
                let hit = (0..rx.len()).any(|w| {
                    let mut d = ry[w] & !rx[w] & !ra[w];
                    // exclude x itself
                    if w == x / 64 {
                        d &= !(1 << (x % 64));
                    }
                    if w == a / 64 {
                        d &= !(1 << (a % 64));
                    }
                    d != 0
                });
                if hit {
                    return None;
                }
            }
        }
    }
    if g.components().iter().any(|c| c.iter().any(|&v| g.degree(v) + 1 != c.len())) {
        Some(3)
    } else if g.edge_count() > 0 {
        Some(2)
    } else {
        debug_assert!(n >= 1);
        Some(1)
    }
}

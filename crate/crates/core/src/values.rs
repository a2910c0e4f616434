//! Value systems, problem ids, and the arithmetic that turns a system's
//! tuple into a problem answer.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::reference as bf;

/// A tuple of graph values, ordered like its system's function list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ValueTuple(pub Vec<u64>);

impl ValueTuple {
    pub fn get(&self, i: usize) -> u64 {
        self.0[i]
    }
    pub fn len(&self) -> usize {
        self.0.len()
    }
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for ValueTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Min,
    Max,
    /// Vertex count.
    Count,
    /// 0 when the property holds, 1 otherwise.
    Flag,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum System {
    Col,
    Dom,
    Del,
    Ind,
    Path,
    Lip,
    Pack,
}

impl System {
    pub const ALL: [System; 7] =
        [System::Col, System::Dom, System::Del, System::Ind, System::Path, System::Lip, System::Pack];

    pub fn id(self) -> &'static str {
        match self {
            System::Col => "s-col",
            System::Dom => "s-dom",
            System::Del => "s-del",
            System::Ind => "s-ind",
            System::Path => "s-path",
            System::Lip => "s-lip",
            System::Pack => "s-pack",
        }
    }

    pub fn functions(self) -> &'static [(&'static str, Sense)] {
        use Sense::*;
        match self {
            System::Col => &[("chi", Min)],
            System::Dom => &[("gamma", Min)],
            System::Del => &[("n", Count), ("vc", Min), ("cvc", Min), ("fvs", Min), ("oct", Min)],
            System::Ind => &[("alpha", Max)],
            System::Path => &[("hc", Flag), ("pip", Min), ("n", Count)],
            System::Lip => &[("lip", Max)],
            System::Pack => &[("vc", Min), ("im", Max), ("itp", Max), ("icp", Max), ("n", Count)],
        }
    }

    pub fn arity(self) -> usize {
        self.functions().len()
    }

    /// Exponent `c` of the value bound `B(n) = n^c`.
    pub fn bound_exponent(self) -> u32 {
        1
    }

    pub fn value_bound(self, n: usize) -> u64 {
        (n as u64).pow(self.bound_exponent())
    }

    /// Values on the single-vertex graph.
    pub fn leaf_tuple(self) -> ValueTuple {
        ValueTuple(match self {
            System::Col | System::Dom | System::Ind | System::Lip => vec![1],
            System::Del => vec![1, 0, 0, 0, 0],
            System::Path => vec![1, 1, 1],
            System::Pack => vec![0, 0, 0, 0, 1],
        })
    }

    /// The tuple of `g` computed by the exhaustive reference solvers.
    pub fn reference_tuple(self, g: &Graph) -> Result<ValueTuple> {
        let n = g.n() as u64;
        let v = |x: usize| x as u64;
        Ok(ValueTuple(match self {
            System::Col => vec![v(bf::bf_chromatic(g)?)],
            System::Dom => vec![v(bf::bf_min_dominating(g)?)],
            System::Del => vec![
                n,
                v(bf::bf_min_vc(g)?),
                v(bf::bf_min_cvc(g)?),
                v(bf::bf_min_fvs(g)?),
                v(bf::bf_min_oct(g)?),
            ],
            System::Ind => vec![v(bf::bf_max_is(g)?)],
            System::Path => vec![u64::from(!bf::bf_hc(g)?), v(bf::bf_pip(g)?), n],
            System::Lip => vec![v(bf::bf_lip(g)?)],
            System::Pack => {
                vec![v(bf::bf_min_vc(g)?), v(bf::bf_im(g)?), v(bf::bf_itp(g)?), v(bf::bf_icp(g)?), n]
            }
        }))
    }
}

impl fmt::Display for System {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for System {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        System::ALL.into_iter().find(|sys| sys.id() == s).ok_or_else(|| Error::UnknownSystem(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Problem {
    ChromaticNumber,
    DominatingSet,
    Nonblocker,
    VertexCover,
    ConnectedVertexCover,
    FeedbackVertexSet,
    OddCycleTransversal,
    MaximumInducedForest,
    IndependentSet,
    Clique,
    HamiltonianCycle,
    HamiltonianPath,
    PartitioningIntoPaths,
    LongestInducedPath,
    InducedMatching,
    IndependentTrianglePacking,
    IndependentCyclePacking,
}

impl Problem {
    pub const ALL: [Problem; 17] = [
        Problem::ChromaticNumber,
        Problem::DominatingSet,
        Problem::Nonblocker,
        Problem::VertexCover,
        Problem::ConnectedVertexCover,
        Problem::FeedbackVertexSet,
        Problem::OddCycleTransversal,
        Problem::MaximumInducedForest,
        Problem::IndependentSet,
        Problem::Clique,
        Problem::HamiltonianCycle,
        Problem::HamiltonianPath,
        Problem::PartitioningIntoPaths,
        Problem::LongestInducedPath,
        Problem::InducedMatching,
        Problem::IndependentTrianglePacking,
        Problem::IndependentCyclePacking,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Problem::ChromaticNumber => "chromatic-number",
            Problem::DominatingSet => "dominating-set",
            Problem::Nonblocker => "nonblocker",
            Problem::VertexCover => "vertex-cover",
            Problem::ConnectedVertexCover => "connected-vertex-cover",
            Problem::FeedbackVertexSet => "feedback-vertex-set",
            Problem::OddCycleTransversal => "odd-cycle-transversal",
            Problem::MaximumInducedForest => "maximum-induced-forest",
            Problem::IndependentSet => "independent-set",
            Problem::Clique => "clique",
            Problem::HamiltonianCycle => "hamiltonian-cycle",
            Problem::HamiltonianPath => "hamiltonian-path",
            Problem::PartitioningIntoPaths => "partitioning-into-paths",
            Problem::LongestInducedPath => "longest-induced-path",
            Problem::InducedMatching => "induced-matching",
            Problem::IndependentTrianglePacking => "independent-triangle-packing",
            Problem::IndependentCyclePacking => "independent-cycle-packing",
        }
    }

    pub fn system(self) -> System {
        use Problem::*;
        match self {
            ChromaticNumber => System::Col,
            DominatingSet | Nonblocker => System::Dom,
            VertexCover | ConnectedVertexCover | FeedbackVertexSet | OddCycleTransversal | MaximumInducedForest => {
                System::Del
            }
            IndependentSet | Clique => System::Ind,
            HamiltonianCycle | HamiltonianPath | PartitioningIntoPaths => System::Path,
            LongestInducedPath => System::Lip,
            InducedMatching | IndependentTrianglePacking | IndependentCyclePacking => System::Pack,
        }
    }

    /// `Min` and `Max` for optimization problems, `Flag` for existence problems.
    pub fn sense(self) -> Sense {
        use Problem::*;
        match self {
            ChromaticNumber | DominatingSet | VertexCover | ConnectedVertexCover | FeedbackVertexSet
            | OddCycleTransversal | PartitioningIntoPaths => Sense::Min,
            HamiltonianCycle | HamiltonianPath => Sense::Flag,
            _ => Sense::Max,
        }
    }
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Problem {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Problem::ALL.into_iter().find(|p| p.id() == s).ok_or_else(|| Error::UnknownProblem(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Answer {
    Value(u64),
    Exists(bool),
    /// The instance admits no feasible solution (a disconnected graph has no connected vertex cover).
    NoSolution,
}

impl fmt::Display for Answer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Answer::Value(v) => write!(f, "{v}"),
            Answer::Exists(true) => f.write_str("yes"),
            Answer::Exists(false) => f.write_str("no"),
            Answer::NoSolution => f.write_str("none"),
        }
    }
}

/// Reads `problem`'s answer off the tuple its system computed for an `n`-vertex graph.
pub fn derive_answer(problem: Problem, tuple: &ValueTuple, n: u64) -> Result<Answer> {
    use Problem::*;
    let sys = problem.system();
    if tuple.len() != sys.arity() {
        return Err(Error::Contract(format!("{sys} tuples have {} entries, got {}", sys.arity(), tuple.len())));
    }
    let t = |i: usize| tuple.get(i);
    let below = |x: u64| {
        n.checked_sub(x).ok_or_else(|| Error::Contract(format!("value {x} exceeds the vertex count {n}")))
    };
    Ok(match problem {
        ChromaticNumber | DominatingSet | IndependentSet | Clique | LongestInducedPath => Answer::Value(t(0)),
        Nonblocker => Answer::Value(below(t(0))?),
        VertexCover => Answer::Value(t(1)),
        ConnectedVertexCover => {
            if n >= 2 && t(2) == n {
                Answer::NoSolution
            } else {
                Answer::Value(t(2))
            }
        }
        FeedbackVertexSet => Answer::Value(t(3)),
        OddCycleTransversal => Answer::Value(t(4)),
        MaximumInducedForest => Answer::Value(below(t(3))?),
        HamiltonianCycle | HamiltonianPath => Answer::Exists(t(0) == 0),
        PartitioningIntoPaths => Answer::Value(t(1)),
        InducedMatching => Answer::Value(t(1)),
        IndependentTrianglePacking => Answer::Value(t(2)),
        IndependentCyclePacking => Answer::Value(t(3)),
    })
}

/// Decision version: `value <= k` for minimization, `value >= k` for maximization,
/// existence for the Hamiltonian problems (where `k` is ignored).
pub fn decision(problem: Problem, answer: Answer, k: u64) -> bool {
    match (problem.sense(), answer) {
        (_, Answer::NoSolution) => false,
        (_, Answer::Exists(b)) => b,
        (Sense::Max, Answer::Value(v)) => v >= k,
        (_, Answer::Value(v)) => v <= k,
    }
}

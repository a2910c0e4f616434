//! Exact solvers for NP-hard graph problems parameterized by modular-width.
//!
//! A graph is decomposed into its modular decomposition tree and evaluated
//! bottom-up. Every prime node becomes one oracle query on a small
//! values-attached quotient graph, and series/parallel nodes are folded with
//! two-vertex queries. The oracle answers come from the per-system
//! composition solvers in [`compose`].

pub mod compose;
pub mod engine;
pub mod error;
pub mod generators;
pub mod graph;
pub mod mdtree;
pub mod problem;
pub mod reference;
pub mod values;

pub use engine::{solve, OracleMode, QueryTranscript, Vaqg};
pub use error::{Error, Result};
pub use graph::{disjoint_union, Graph, VertexSet};
pub use mdtree::{decompose, MdTree, NodeKind};
pub use problem::solve_problem;
pub use values::{derive_answer, decision, Answer, Problem, System, ValueTuple};

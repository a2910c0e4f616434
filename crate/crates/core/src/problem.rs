//! Problem-level front end: picks the graph to evaluate, runs the engine, and
//! reads the answer off the resulting tuple.

use crate::engine::{solve_with, ComposeOracle, Oracle, OracleMode, QueryTranscript};
use crate::error::Result;
use crate::generators::hp_to_hc;
use crate::graph::{Graph, VertexSet};
use crate::reference as bf;
use crate::values::{derive_answer, Answer, Problem};

#[derive(Debug, Clone)]
pub struct ProblemRun {
    pub answer: Answer,
    /// `None` when the answer was settled without running the engine.
    pub transcript: Option<QueryTranscript>,
}

pub fn solve_problem(problem: Problem, g: &Graph, mode: OracleMode) -> Result<ProblemRun> {
    solve_problem_with(problem, g, mode, &mut ComposeOracle::new(problem.system()))
}

/// Like [`solve_problem`] with a caller-supplied oracle for `problem.system()`.
pub fn solve_problem_with(problem: Problem, g: &Graph, mode: OracleMode, oracle: &mut dyn Oracle) -> Result<ProblemRun> {
    let settled = |answer| Ok(ProblemRun { answer, transcript: None });
    let target = match problem {
        Problem::Clique => g.complement(),
        Problem::HamiltonianPath => {
            if g.n() == 1 {
                return settled(Answer::Exists(true));
            }
            hp_to_hc(g)
        }
        Problem::ConnectedVertexCover => {
            // isolated vertices never need covering
            let busy: VertexSet = (0..g.n()).filter(|&v| g.degree(v) > 0).collect();
            if busy.is_empty() {
                return settled(Answer::Value(0));
            }
            let (core, _) = g.induced_subgraph(&busy)?;
            if !core.is_connected() {
                return settled(Answer::NoSolution);
            }
            core
        }
        _ => g.clone(),
    };
    let (tuple, transcript) = solve_with(&target, problem.system(), mode, oracle)?;
    let answer = derive_answer(problem, &tuple, target.n() as u64)?;
    Ok(ProblemRun { answer, transcript: Some(transcript) })
}

/// The answer according to the exhaustive reference solvers.
pub fn reference_answer(problem: Problem, g: &Graph) -> Result<Answer> {
    use Problem::*;
    let v = |x: usize| Answer::Value(x as u64);
    Ok(match problem {
        ChromaticNumber => v(bf::bf_chromatic(g)?),
        DominatingSet => v(bf::bf_min_dominating(g)?),
        Nonblocker => v(bf::bf_max_nonblocker(g)?),
        VertexCover => v(bf::bf_min_vc(g)?),
        ConnectedVertexCover => bf::bf_cvc_problem(g)?.map_or(Answer::NoSolution, v),
        FeedbackVertexSet => v(bf::bf_min_fvs(g)?),
        OddCycleTransversal => v(bf::bf_min_oct(g)?),
        MaximumInducedForest => v(bf::bf_max_induced_forest(g)?),
        IndependentSet => v(bf::bf_max_is(g)?),
        Clique => v(bf::bf_max_clique(g)?),
        HamiltonianCycle => Answer::Exists(bf::bf_hc(g)?),
        HamiltonianPath => Answer::Exists(bf::bf_hp(g)?),
        PartitioningIntoPaths => v(bf::bf_pip(g)?),
        LongestInducedPath => v(bf::bf_lip(g)?),
        InducedMatching => v(bf::bf_im(g)?),
        IndependentTrianglePacking => v(bf::bf_itp(g)?),
        IndependentCyclePacking => v(bf::bf_icp(g)?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_examples() {
        let c5 = Graph::cycle(5).unwrap();
        let f = OracleMode::Function;
        assert_eq!(solve_problem(Problem::ChromaticNumber, &c5, f).unwrap().answer, Answer::Value(3));
        assert_eq!(solve_problem(Problem::HamiltonianCycle, &c5, f).unwrap().answer, Answer::Exists(true));
        assert_eq!(solve_problem(Problem::IndependentSet, &c5, f).unwrap().answer, Answer::Value(2));
        assert_eq!(solve_problem(Problem::Clique, &c5, f).unwrap().answer, Answer::Value(2));
        let k1 = Graph::complete(1).unwrap();
        assert_eq!(solve_problem(Problem::HamiltonianPath, &k1, f).unwrap().answer, Answer::Exists(true));
    }

    #[test]
    fn connected_vertex_cover_edge_cases() {
        let f = OracleMode::Function;
        let cvc = |g: &Graph| solve_problem(Problem::ConnectedVertexCover, g, f).unwrap().answer;
        assert_eq!(cvc(&Graph::edgeless(3).unwrap()), Answer::Value(0));
        assert_eq!(cvc(&Graph::from_edges(3, &[(0, 1)]).unwrap()), Answer::Value(1));
        assert_eq!(cvc(&Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap()), Answer::NoSolution);
    }

    #[test]
    fn every_problem_on_small_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        for _ in 0..25 {
            let n = rng.gen_range(1..=8);
            let g = Graph::from_fn(n, |_, _| rng.gen_bool(0.5)).unwrap();
            for p in Problem::ALL {
                let got = solve_problem(p, &g, OracleMode::Function).unwrap().answer;
                assert_eq!(got, reference_answer(p, &g).unwrap(), "{p} on {g:?}");
            }
        }
    }
}

use super::substitute;
use crate::engine::Vaqg;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Substitutes `factors` into the quotient of `vaqg`, after checking with the
/// reference solvers that each factor carries the attached tuple.
pub fn realize_for_test(vaqg: &Vaqg, factors: &[Graph]) -> Result<Graph> {
    if factors.len() != vaqg.t() {
        return Err(Error::Contract(format!("{} factors for a {}-vertex quotient", factors.len(), vaqg.t())));
    }
    for (i, (f, want)) in factors.iter().zip(&vaqg.tuples).enumerate() {
        let got = vaqg.system.reference_tuple(f)?;
        if &got != want {
            return Err(Error::Contract(format!("factor {i} has tuple ({got}), the quotient says ({want})")));
        }
    }
    substitute(&vaqg.quotient, factors)
}

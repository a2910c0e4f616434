//! Oracles answer serialized queries. The default oracle decodes the bytes
//! and runs the system's composition solver, so its answers are a function of
//! the query string alone.

use std::collections::HashMap;

use super::vaqg::{decode_query, Vaqg};
use crate::compose;
use crate::error::{Error, Result};
use crate::values::{System, ValueTuple};

pub trait Oracle {
    /// Function mode: the tuple of any graph realizing the query.
    fn evaluate(&mut self, query: &[u8]) -> Result<ValueTuple>;
    /// Membership mode: whether the query's candidate tuple is the right one.
    fn accepts(&mut self, query: &[u8]) -> Result<bool>;
}

pub struct ComposeOracle {
    system: System,
    cache: HashMap<Vaqg, ValueTuple>,
}

impl ComposeOracle {
    pub fn new(system: System) -> Self {
        ComposeOracle { system, cache: HashMap::new() }
    }

    fn compose_cached(&mut self, vaqg: Vaqg) -> Result<ValueTuple> {
        if let Some(t) = self.cache.get(&vaqg) {
            return Ok(t.clone());
        }
        let t = compose::compose(&vaqg)?;
        self.cache.insert(vaqg, t.clone());
        Ok(t)
    }
}

impl Oracle for ComposeOracle {
    fn evaluate(&mut self, query: &[u8]) -> Result<ValueTuple> {
        let d = decode_query(query, self.system)?;
        if d.candidate.is_some() {
            return Err(Error::MalformedQuery("function query carries a candidate".into()));
        }
        self.compose_cached(d.vaqg)
    }

    fn accepts(&mut self, query: &[u8]) -> Result<bool> {
        let d = decode_query(query, self.system)?;
        let Some(cand) = d.candidate else {
            return Err(Error::MalformedQuery("membership query without a candidate".into()));
        };
        Ok(self.compose_cached(d.vaqg)? == cand)
    }
}

/// One line of the subprocess protocol: a tuple for function queries, `1`/`0`
/// for membership queries.
pub fn respond(system: System, query: &[u8]) -> Result<String> {
    let d = decode_query(query, system)?;
    let answer = compose::compose(&d.vaqg)?;
    Ok(match d.candidate {
        Some(c) => if c == answer { "1" } else { "0" }.to_string(),
        None => answer.to_string(),
    })
}

/// Wraps an oracle and adds one to the first entry of every function answer.
/// Used to check that verification notices a lying oracle.
pub struct CorruptOracle<O>(pub O);

impl<O: Oracle> Oracle for CorruptOracle<O> {
    fn evaluate(&mut self, query: &[u8]) -> Result<ValueTuple> {
        let mut t = self.0.evaluate(query)?;
        t.0[0] += 1;
        Ok(t)
    }

    fn accepts(&mut self, query: &[u8]) -> Result<bool> {
        self.0.accepts(query)
    }
}

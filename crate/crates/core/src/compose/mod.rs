//! Composition solvers: compute a system's tuple for a graph from its
//! values-attached quotient alone. These are the oracles the engine queries.
//!
//! Nothing here calls into [`crate::reference`]; the two are compared in tests.

mod col;
mod del;
mod dom;
mod ind;
mod lip;
mod pack;
mod path;
mod realize;

pub use realize::realize_for_test;

use crate::engine::Vaqg;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::values::{System, ValueTuple};

/// Largest quotient a composition solver accepts.
pub const MAX_T: usize = 16;

pub fn compose(q: &Vaqg) -> Result<ValueTuple> {
    let t = q.t();
    if t > MAX_T {
        return Err(Error::CapExceeded { what: "quotient size", n: t, cap: MAX_T });
    }
    for tp in &q.tuples {
        validate_tuple(q.system, tp)?;
    }
    let adj: Vec<u64> = (0..t).map(|v| q.quotient.mask(v)).collect();
    let col = |i: usize| -> Vec<u64> { q.tuples.iter().map(|tp| tp.get(i)).collect() };
    Ok(ValueTuple(match q.system {
        System::Col => vec![col::chromatic(&adj, &col(0))?],
        System::Dom => vec![dom::domination(&adj, &col(0))],
        System::Ind => vec![ind::independence(&adj, &col(0))],
        System::Del => {
            let (n, vc, cvc, fvs, oct) = (col(0), col(1), col(2), col(3), col(4));
            vec![
                n.iter().sum(),
                del::vertex_cover(&adj, &n, &vc),
                del::connected_vertex_cover(&adj, &n, &vc, &cvc),
                del::feedback_vertex_set(&adj, &n, &vc, &fvs),
                del::odd_cycle_transversal(&adj, &n, &vc, &oct),
            ]
        }
        System::Path => {
            let (pip, n) = (col(1), col(2));
            let (hc, pip) = path::paths(&adj, &pip, &n)?;
            vec![u64::from(!hc), pip, n.iter().sum()]
        }
        System::Lip => vec![lip::longest_induced_path(&adj, &col(0))?],
        System::Pack => {
            let (vc, im, itp, icp, n) = (col(0), col(1), col(2), col(3), col(4));
            vec![
                del::vertex_cover(&adj, &n, &vc),
                pack::packing(&adj, &n, &vc, &im, pack::Unit::Edge),
                pack::packing(&adj, &n, &vc, &itp, pack::Unit::Triangle),
                pack::packing(&adj, &n, &vc, &icp, pack::Unit::Cycle),
                n.iter().sum(),
            ]
        }
    }))
}

fn malformed(system: System, tp: &ValueTuple, why: &str) -> Error {
    Error::MalformedQuery(format!("{system} tuple ({tp}): {why}"))
}

/// Rejects tuples that no graph can have.
pub fn validate_tuple(system: System, tp: &ValueTuple) -> Result<()> {
    if tp.len() != system.arity() {
        return Err(malformed(system, tp, "wrong arity"));
    }
    let v = |i: usize| tp.get(i);
    let check = |ok: bool, why: &str| if ok { Ok(()) } else { Err(malformed(system, tp, why)) };
    match system {
        System::Col | System::Dom | System::Ind | System::Lip => check(v(0) >= 1, "value must be at least 1"),
        System::Del => {
            let (n, vc, cvc, fvs, oct) = (v(0), v(1), v(2), v(3), v(4));
            check(n >= 1, "empty graph")?;
            check(vc < n, "vc must be below n")?;
            check(fvs <= vc && oct <= vc, "fvs and oct are at most vc")?;
            check(fvs <= n.saturating_sub(2) && oct <= n.saturating_sub(2), "fvs and oct are at most n - 2")?;
            check(vc > 0 || (fvs == 0 && oct == 0), "edgeless graphs need no deletions")?;
            if n == 1 {
                check(cvc == 0, "a single vertex has cvc 0")
            } else if vc == 0 {
                check(cvc == n, "edgeless graphs on two or more vertices are disconnected")
            } else {
                check(cvc == n || (vc <= cvc && cvc < n), "cvc must lie in [vc, n) or equal n")
            }
        }
        System::Path => {
            let (hc, pip, n) = (v(0), v(1), v(2));
            check(n >= 1, "empty graph")?;
            check(hc <= 1, "hc is a flag")?;
            check(pip >= 1 && pip <= n, "pip must lie in [1, n]")?;
            check(hc == 1 || (n >= 3 && pip == 1), "a Hamiltonian graph has at least 3 vertices and pip 1")
        }
        System::Pack => {
            let (vc, im, itp, icp, n) = (v(0), v(1), v(2), v(3), v(4));
            check(n >= 1, "empty graph")?;
            check(vc < n, "vc must be below n")?;
            check(2 * im <= n && 3 * icp <= n, "packing exceeds the vertex count")?;
            check(itp <= icp, "a triangle is a cycle")?;
            check((vc >= 1) == (im >= 1), "an edge is an induced matching")?;
            check(icp == 0 || vc >= 1, "cycles need edges")
        }
    }
}

/// Independent-set test on a quotient mask.
#[inline]
pub(crate) fn independent(adj: &[u64], s: u64) -> bool {
    let mut rest = s;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if adj[v] & s != 0 {
            return false;
        }
    }
    true
}

/// Components of the quotient restricted to `s`.
pub(crate) fn components(adj: &[u64], s: u64) -> Vec<u64> {
    let mut left = s;
    let mut out = Vec::new();
    while left != 0 {
        let mut comp = left & left.wrapping_neg();
        let mut frontier = comp;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = adj[v] & s & !comp;
            comp |= new;
            frontier |= new;
        }
        left &= !comp;
        out.push(comp);
    }
    out
}

pub(crate) fn bits(s: u64) -> impl Iterator<Item = usize> {
    let mut rest = s;
    std::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(v)
        }
    })
}

/// Substitutes `factors[i]` for vertex `i` of `quotient`. Vertices of factor `i`
/// occupy a contiguous block, blocks in quotient order.
pub fn substitute(quotient: &Graph, factors: &[Graph]) -> Result<Graph> {
    if factors.len() != quotient.n() {
        return Err(Error::Contract(format!("{} factors for a {}-vertex quotient", factors.len(), quotient.n())));
    }
    let owner: Vec<(usize, usize)> =
        factors.iter().enumerate().flat_map(|(i, f)| (0..f.n()).map(move |v| (i, v))).collect();
    Graph::from_fn(owner.len(), |a, b| {
        let ((i, u), (j, v)) = (owner[a], owner[b]);
        if i == j {
            factors[i].has_edge(u, v)
        } else {
            quotient.has_edge(i, j)
        }
    })
}

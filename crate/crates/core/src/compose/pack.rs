//! Induced matching, independent triangle packing and independent cycle
//! packing on the quotient.
//!
//! A module either holds whole units of its own (and then its neighbors hold
//! nothing), or gives one or two vertices to units that cross modules. The
//! crossing part is expanded into a small graph and checked directly.

use super::del::for_each_choice;
use super::{bits, components};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Unit {
    Edge,
    Triangle,
    Cycle,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Share {
    None,
    /// An optimal packing of the factor; neighbors hold nothing.
    Internal,
    One,
    /// Two adjacent vertices; needs `vc >= 1`.
    TwoAdjacent,
    /// Two non-adjacent vertices; needs `n - vc >= 2`.
    TwoApart,
}

pub fn packing(adj: &[u64], n: &[u64], vc: &[u64], own: &[u64], unit: Unit) -> u64 {
    let t = adj.len();
    let options: Vec<Vec<Share>> = (0..t)
        .map(|i| {
            let mut o = vec![Share::None, Share::One];
            if own[i] >= 1 {
                o.push(Share::Internal);
            }
            if vc[i] >= 1 && unit != Unit::Edge {
                o.push(Share::TwoAdjacent);
            }
            if n[i] - vc[i] >= 2 && unit == Unit::Cycle {
                o.push(Share::TwoApart);
            }
            o
        })
        .collect();
    let mut best = 0;
    for_each_choice(&options, |shape| {
        let internal = (0..t).filter(|&i| shape[i] == Share::Internal).fold(0u64, |m, i| m | 1 << i);
        let holding = (0..t).filter(|&i| shape[i] != Share::None).fold(0u64, |m, i| m | 1 << i);
        if bits(internal).any(|i| adj[i] & holding != 0) {
            return;
        }
        // expand the crossing part
        let mut owner = Vec::new();
        for (i, &s) in shape.iter().enumerate() {
            match s {
                Share::One => owner.push(i),
                Share::TwoAdjacent | Share::TwoApart => owner.extend([i, i]),
                _ => {}
            }
        }
        let h: Vec<u64> = (0..owner.len())
            .map(|a| {
                (0..owner.len()).filter(|&b| b != a).fold(0u64, |m, b| {
                    let (i, j) = (owner[a], owner[b]);
                    let edge = if i == j { shape[i] == Share::TwoAdjacent } else { adj[i] >> j & 1 == 1 };
                    if edge {
                        m | 1 << b
                    } else {
                        m
                    }
                })
            })
            .collect();
        let all = if owner.is_empty() { 0 } else { (1u64 << owner.len()) - 1 };
        let comps = components(&h, all);
        let ok = match unit {
            Unit::Edge => h.iter().all(|m| m.count_ones() == 1),
            Unit::Triangle => h.iter().all(|m| m.count_ones() == 2) && comps.iter().all(|c| c.count_ones() == 3),
            Unit::Cycle => h.iter().all(|m| m.count_ones() == 2),
        };
        if ok {
            let value = bits(internal).map(|i| own[i]).sum::<u64>() + comps.len() as u64;
            best = best.max(value);
        }
    });
    best
}

//! Values-attached quotient graphs and their bit-exact query encoding.
//!
//! Layout: `t` (16 bits, big-endian), `r` (8 bits), value width `w` (8 bits),
//! the `t(t-1)/2` upper-triangle adjacency bits row by row, then `t*r` values
//! of `w` bits each. A membership query appends a `1` flag bit and `r`
//! candidate values. The whole string is zero-padded to a byte boundary.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::values::{System, ValueTuple};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vaqg {
    pub system: System,
    pub quotient: Graph,
    pub tuples: Vec<ValueTuple>,
}

impl Vaqg {
    pub fn new(system: System, quotient: Graph, tuples: Vec<ValueTuple>) -> Result<Self> {
        if quotient.n() < 2 {
            return Err(Error::Contract("a quotient needs at least two vertices".into()));
        }
        if tuples.len() != quotient.n() {
            return Err(Error::Contract(format!("{} tuples for a {}-vertex quotient", tuples.len(), quotient.n())));
        }
        if let Some(bad) = tuples.iter().find(|t| t.len() != system.arity()) {
            return Err(Error::Contract(format!("tuple ({bad}) has the wrong arity for {system}")));
        }
        Ok(Vaqg { system, quotient, tuples })
    }

    pub fn t(&self) -> usize {
        self.quotient.n()
    }
}

/// `ceil(log2(B(n) + 1))`, at least 1.
pub fn value_width(system: System, n: usize) -> u32 {
    let b = system.value_bound(n);
    (64 - b.leading_zeros()).max(1)
}

/// Exact bit length of a query on a `t`-vertex quotient with arity `r`, width `w`.
pub fn query_bits(t: usize, r: usize, w: u32, with_candidate: bool) -> usize {
    let base = 32 + t * (t - 1) / 2 + t * r * w as usize;
    if with_candidate {
        base + 1 + r * w as usize
    } else {
        base
    }
}

/// The encoding bound every transcript entry must respect.
pub fn encoding_bound(t: usize, r: usize, w: u32) -> usize {
    query_bits(t, r, w, true)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Encoded {
    pub bytes: Vec<u8>,
    /// Length before padding.
    pub bits: usize,
}

struct BitWriter {
    bytes: Vec<u8>,
    bits: usize,
}

impl BitWriter {
    fn push(&mut self, bit: bool) {
        if self.bits.is_multiple_of(8) {
            self.bytes.push(0);
        }
        if bit {
            *self.bytes.last_mut().expect("pushed above") |= 0x80 >> (self.bits % 8);
        }
        self.bits += 1;
    }

    fn push_value(&mut self, v: u64, width: u32) {
        for i in (0..width).rev() {
            self.push((v >> i) & 1 == 1);
        }
    }
}

struct BitReader<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl BitReader<'_> {
    fn remaining(&self) -> usize {
        self.bytes.len() * 8 - self.pos
    }

    fn bit(&mut self) -> Result<bool> {
        if self.pos >= self.bytes.len() * 8 {
            return Err(Error::MalformedQuery("query ends early".into()));
        }
        let b = (self.bytes[self.pos / 8] << (self.pos % 8)) & 0x80 != 0;
        self.pos += 1;
        Ok(b)
    }

    fn value(&mut self, width: u32) -> Result<u64> {
        let mut v = 0;
        for _ in 0..width {
            v = v << 1 | u64::from(self.bit()?);
        }
        Ok(v)
    }
}

pub fn encode_query(vaqg: &Vaqg, candidate: Option<&ValueTuple>, n: usize) -> Result<Encoded> {
    let t = vaqg.t();
    let r = vaqg.system.arity();
    let w = value_width(vaqg.system, n);
    if t > u16::MAX as usize {
        return Err(Error::Input(format!("quotient with {t} vertices does not fit the header")));
    }
    let limit = if w >= 64 { u64::MAX } else { (1u64 << w) - 1 };
    let values = vaqg.tuples.iter().chain(candidate).flat_map(|tp| tp.0.iter());
    if let Some(v) = values.clone().find(|&&v| v > limit) {
        return Err(Error::Input(format!("value {v} does not fit in {w} bits (n = {n})")));
    }
    if let Some(c) = candidate {
        if c.len() != r {
            return Err(Error::Contract(format!("candidate ({c}) has the wrong arity")));
        }
    }
    let mut out = BitWriter { bytes: Vec::new(), bits: 0 };
    out.push_value(t as u64, 16);
    out.push_value(r as u64, 8);
    out.push_value(w as u64, 8);
    for i in 0..t {
        for j in i + 1..t {
            out.push(vaqg.quotient.has_edge(i, j));
        }
    }
    for tp in &vaqg.tuples {
        for &v in &tp.0 {
            out.push_value(v, w);
        }
    }
    if let Some(c) = candidate {
        out.push(true);
        for &v in &c.0 {
            out.push_value(v, w);
        }
    }
    Ok(Encoded { bytes: out.bytes, bits: out.bits })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodedQuery {
    pub vaqg: Vaqg,
    pub candidate: Option<ValueTuple>,
    pub width: u32,
    pub bits: usize,
}

/// Inverse of [`encode_query`]. Rejects anything the encoder could not have produced.
pub fn decode_query(bytes: &[u8], system: System) -> Result<DecodedQuery> {
    let mut rd = BitReader { bytes, pos: 0 };
    let t = rd.value(16)? as usize;
    let r = rd.value(8)? as usize;
    let w = rd.value(8)? as u32;
    if r != system.arity() {
        return Err(Error::MalformedQuery(format!("arity {r} does not match {system}")));
    }
    if t < 2 {
        return Err(Error::MalformedQuery(format!("quotient with {t} vertices")));
    }
    if w == 0 || w > 63 {
        return Err(Error::MalformedQuery(format!("value width {w}")));
    }
    if rd.remaining() < query_bits(t, r, w, false) - 32 {
        return Err(Error::MalformedQuery("query ends early".into()));
    }
    let mut adj = vec![false; t * t];
    for i in 0..t {
        for j in i + 1..t {
            adj[i * t + j] = rd.bit()?;
        }
    }
    let quotient = Graph::from_fn(t, |i, j| adj[i * t + j])?;
    let mut tuples = Vec::with_capacity(t);
    for _ in 0..t {
        tuples.push(ValueTuple((0..r).map(|_| rd.value(w)).collect::<Result<_>>()?));
    }
    let mut candidate = None;
    if rd.remaining() > r * w as usize && rd.bit()? {
        candidate = Some(ValueTuple((0..r).map(|_| rd.value(w)).collect::<Result<_>>()?));
    } else if rd.pos > query_bits(t, r, w, false) {
        rd.pos -= 1;
    }
    let bits = rd.pos;
    if rd.remaining() >= 8 || (bits..bytes.len() * 8).any(|p| (bytes[p / 8] << (p % 8)) & 0x80 != 0) {
        return Err(Error::MalformedQuery("trailing data after the query".into()));
    }
    Ok(DecodedQuery { vaqg: Vaqg::new(system, quotient, tuples)?, candidate, width: w, bits })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tuples(vals: &[u64]) -> Vec<ValueTuple> {
        vals.iter().map(|&v| ValueTuple(vec![v])).collect()
    }

    #[test]
    fn two_vertex_layout() {
        let q = Vaqg::new(System::Ind, Graph::edgeless(2).unwrap(), tuples(&[1, 1])).unwrap();
        let e = encode_query(&q, None, 2).unwrap();
        assert_eq!(e.bits, 37);
        assert_eq!(e.bytes.len(), 5);
        // 0x0002 0x01 0x02 | 0 | 01 01 | pad
        assert_eq!(e.bytes, vec![0x00, 0x02, 0x01, 0x02, 0b0010_1000]);
    }

    #[test]
    fn c5_query_length() {
        let q = Vaqg::new(System::Col, Graph::cycle(5).unwrap(), tuples(&[1; 5])).unwrap();
        let e = encode_query(&q, None, 5).unwrap();
        assert_eq!(value_width(System::Col, 5), 3);
        assert_eq!(e.bits, 57);
        assert_eq!(e.bytes.len(), 8);
    }

    #[test]
    fn round_trip_with_and_without_candidate() {
        let g = Graph::path(4).unwrap();
        let tp = vec![ValueTuple(vec![0, 1, 3]); 4];
        let q = Vaqg::new(System::Path, g, tp).unwrap();
        for cand in [None, Some(ValueTuple(vec![1, 0, 12]))] {
            let e = encode_query(&q, cand.as_ref(), 12).unwrap();
            let d = decode_query(&e.bytes, System::Path).unwrap();
            assert_eq!(d.vaqg, q);
            assert_eq!(d.candidate, cand);
            assert_eq!(d.bits, e.bits);
        }
    }

    #[test]
    fn width_overflow_is_rejected() {
        let q = Vaqg::new(System::Ind, Graph::edgeless(2).unwrap(), tuples(&[1, 4])).unwrap();
        assert!(encode_query(&q, None, 3).is_err());
    }

    #[test]
    fn garbage_is_rejected() {
        assert!(decode_query(&[0x00, 0x02], System::Ind).is_err());
        assert!(decode_query(&[0x00, 0x02, 0x05, 0x02, 0x00], System::Ind).is_err());
        let q = Vaqg::new(System::Ind, Graph::edgeless(2).unwrap(), tuples(&[1, 1])).unwrap();
        let mut bytes = encode_query(&q, None, 2).unwrap().bytes;
        bytes.push(0);
        assert!(decode_query(&bytes, System::Ind).is_err());
        let mut bytes = encode_query(&q, None, 2).unwrap().bytes;
        bytes[4] |= 1;
        assert!(decode_query(&bytes, System::Ind).is_err());
    }

    #[test]
    fn bound_formula() {
        assert_eq!(encoding_bound(2, 1, 2), 32 + 1 + 4 + 1 + 2);
        assert_eq!(query_bits(5, 1, 3, false), 57);
    }
}

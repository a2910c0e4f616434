//! Ordered record of every oracle query issued during one solve run.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::values::{System, ValueTuple};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QueryKind {
    Prime,
    Merge,
}

impl fmt::Display for QueryKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            QueryKind::Prime => "prime",
            QueryKind::Merge => "merge",
        })
    }
}

impl FromStr for QueryKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "prime" => Ok(QueryKind::Prime),
            "merge" => Ok(QueryKind::Merge),
            _ => Err(Error::Input(format!("unknown query kind `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranscriptEntry {
    /// Preorder id of the tree node that issued the query.
    pub node: usize,
    pub kind: QueryKind,
    /// Quotient size of the query.
    pub t: usize,
    pub bits: usize,
    /// The function query, or the accepted membership query.
    pub bytes: Vec<u8>,
    pub membership: bool,
    /// Oracle calls spent on this query (candidates tried in membership mode).
    pub calls: u64,
    pub answer: ValueTuple,
}

impl TranscriptEntry {
    /// What a pure oracle must answer when shown `bytes`.
    pub fn expected_response(&self) -> String {
        if self.membership {
            "1".into()
        } else {
            self.answer.to_string()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QueryTranscript {
    pub system: System,
    pub n: usize,
    pub mw: usize,
    pub exponent: u32,
    pub entries: Vec<TranscriptEntry>,
}

impl QueryTranscript {
    pub fn max_query_bits(&self) -> usize {
        self.entries.iter().map(|e| e.bits).max().unwrap_or(0)
    }

    pub fn total_calls(&self) -> u64 {
        self.entries.iter().map(|e| e.calls).sum()
    }

    pub fn dump(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            let _ = writeln!(out, "node={} kind={} bits={} hex={}", e.node, e.kind, e.bits, hex::encode(&e.bytes));
        }
        let _ = writeln!(
            out,
            "max_query_bits={} queries={} mw={} n={}",
            self.max_query_bits(),
            self.total_calls(),
            self.mw,
            self.n
        );
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DumpLine {
    pub node: usize,
    pub kind: QueryKind,
    pub bits: usize,
    pub bytes: Vec<u8>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedDump {
    pub lines: Vec<DumpLine>,
    pub max_query_bits: usize,
    pub queries: u64,
    pub mw: usize,
    pub n: usize,
}

impl ParsedDump {
    pub fn render(&self) -> String {
        let mut out = String::new();
        for l in &self.lines {
            let _ = writeln!(out, "node={} kind={} bits={} hex={}", l.node, l.kind, l.bits, hex::encode(&l.bytes));
        }
        let _ = writeln!(out, "max_query_bits={} queries={} mw={} n={}", self.max_query_bits, self.queries, self.mw, self.n);
        out
    }
}

fn fields<'a>(line: &'a str, keys: &[&str], lineno: usize) -> Result<Vec<&'a str>> {
    let parts: Vec<&str> = line.split_whitespace().collect();
    if parts.len() != keys.len() {
        return Err(Error::Parse { line: lineno, msg: format!("expected {} fields", keys.len()) });
    }
    parts
        .iter()
        .zip(keys)
        .map(|(p, k)| {
            p.strip_prefix(k)
                .and_then(|rest| rest.strip_prefix('='))
                .ok_or_else(|| Error::Parse { line: lineno, msg: format!("expected `{k}=`") })
        })
        .collect()
}

fn num<T: FromStr>(s: &str, lineno: usize) -> Result<T> {
    s.parse().map_err(|_| Error::Parse { line: lineno, msg: format!("bad number `{s}`") })
}

/// Parses the text produced by [`QueryTranscript::dump`].
pub fn parse_dump(text: &str) -> Result<ParsedDump> {
    let lines: Vec<&str> = text.lines().collect();
    let Some((last, body)) = lines.split_last() else {
        return Err(Error::Parse { line: 1, msg: "empty transcript".into() });
    };
    let mut out = Vec::new();
    for (i, line) in body.iter().enumerate() {
        let f = fields(line, &["node", "kind", "bits", "hex"], i + 1)?;
        let bytes = hex::decode(f[3]).map_err(|e| Error::Parse { line: i + 1, msg: e.to_string() })?;
        let bits: usize = num(f[2], i + 1)?;
        if bits.div_ceil(8) != bytes.len() {
            return Err(Error::Parse { line: i + 1, msg: "bit length does not match the encoding".into() });
        }
        out.push(DumpLine { node: num(f[0], i + 1)?, kind: f[1].parse()?, bits, bytes });
    }
    let f = fields(last, &["max_query_bits", "queries", "mw", "n"], lines.len())?;
    Ok(ParsedDump {
        lines: out,
        max_query_bits: num(f[0], lines.len())?,
        queries: num(f[1], lines.len())?,
        mw: num(f[2], lines.len())?,
        n: num(f[3], lines.len())?,
    })
}

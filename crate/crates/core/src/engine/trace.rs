//! Line-oriented trace documents.
//!
//! ```text
//! n 5
//! rule clique 3
//! start 4
//! 0 1
//! ...
//! round 1 3
//! 0 2
//! ...
//! tau 2
//! percolated true
//! truncated false
//! ```

use std::fmt::Write;

use super::process::ProcessTrace;
use crate::graphcore::{Edge, Graph};
use crate::{Error, Result};

/// Serialises a trace; rounds appear in time order with sorted edges.
pub fn write_trace(trace: &ProcessTrace, rule_name: &str) -> String {
    let mut out = String::new();
    let start = trace.start.edges();
    writeln!(out, "n {}", trace.start.vertex_count()).unwrap();
    writeln!(out, "rule {rule_name}").unwrap();
    writeln!(out, "start {}", start.len()).unwrap();
    for (u, v) in start {
        writeln!(out, "{u} {v}").unwrap();
    }
    for (i, round) in trace.rounds.iter().enumerate() {
        writeln!(out, "round {} {}", i + 1, round.len()).unwrap();
        for (u, v) in round {
            writeln!(out, "{u} {v}").unwrap();
        }
    }
    writeln!(out, "tau {}", trace.tau).unwrap();
    writeln!(out, "percolated {}", trace.percolated).unwrap();
    writeln!(out, "truncated {}", trace.truncated).unwrap();
    out
}

/// A parsed trace document.
#[derive(Clone, Debug)]
pub struct TraceDocument {
    pub rule: String,
    pub trace: ProcessTrace,
}

struct Lines<'a> {
    inner: std::iter::Peekable<Box<dyn Iterator<Item = (usize, &'a str)> + 'a>>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Lines<'a> {
        let it: Box<dyn Iterator<Item = (usize, &'a str)>> = Box::new(
            text.lines()
                .enumerate()
                .map(|(i, l)| (i + 1, l.trim()))
                .filter(|(_, l)| !l.is_empty() && !l.starts_with('#')),
        );
        Lines {
            inner: it.peekable(),
            last: 0,
        }
    }

    fn next(&mut self) -> Result<(usize, &'a str)> {
        let (n, l) = self
            .inner
            .next()
            .ok_or_else(|| Error::parse(self.last + 1, "unexpected end of document"))?;
        self.last = n;
        Ok((n, l))
    }

    fn keyed(&mut self, key: &str) -> Result<(usize, &'a str)> {
        let (n, l) = self.next()?;
        match l.strip_prefix(key) {
            Some(rest) if rest.is_empty() || rest.starts_with(' ') => Ok((n, rest.trim())),
            _ => Err(Error::parse(n, format!("expected \"{key}\""))),
        }
    }

    fn peek_key(&mut self, key: &str) -> bool {
        self.inner
            .peek()
            .is_some_and(|(_, l)| l.split_whitespace().next() == Some(key))
    }

    fn edges(&mut self, count: usize, n: usize) -> Result<Vec<Edge>> {
        (0..count)
            .map(|_| {
                let (line, l) = self.next()?;
                let nums = numbers(line, l)?;
                match nums[..] {
                    [u, v] if u < v && v < n => Ok((u, v)),
                    _ => Err(Error::parse(
                        line,
                        format!("\"{l}\" is not an edge \"u v\" with u < v < {n}"),
                    )),
                }
            })
            .collect()
    }
}

fn numbers(line: usize, text: &str) -> Result<Vec<usize>> {
    text.split_whitespace()
        .map(|t| {
            t.parse()
                .map_err(|_| Error::parse(line, format!("\"{t}\" is not a non-negative integer")))
        })
        .collect()
}

fn one(line: usize, text: &str) -> Result<usize> {
    match numbers(line, text)?[..] {
        [x] => Ok(x),
        _ => Err(Error::parse(line, "expected one integer")),
    }
}

fn flag(line: usize, text: &str) -> Result<bool> {
    text.parse()
        .map_err(|_| Error::parse(line, format!("\"{text}\" is not true/false")))
}

/// Parses a trace document and checks its internal consistency.
pub fn parse_trace(text: &str) -> Result<TraceDocument> {
    let mut lines = Lines::new(text);
    let (nl, n) = lines.keyed("n")?;
    let n = one(nl, n)?;
    let (_, rule) = lines.keyed("rule")?;
    let (sl, m) = lines.keyed("start")?;
    let m = one(sl, m)?;
    let start = Graph::new(n, lines.edges(m, n)?)?;
    let mut rounds = Vec::new();
    while lines.peek_key("round") {
        let (rl, rest) = lines.keyed("round")?;
        match numbers(rl, rest)?[..] {
            [i, count] if i == rounds.len() + 1 => rounds.push(lines.edges(count, n)?),
            _ => {
                return Err(Error::parse(
                    rl,
                    format!("expected \"round {} <count>\"", rounds.len() + 1),
                ))
            }
        }
    }
    let (tl, tau) = lines.keyed("tau")?;
    let tau = one(tl, tau)?;
    let (pl, percolated) = lines.keyed("percolated")?;
    let percolated = flag(pl, percolated)?;
    let (ul, truncated) = lines.keyed("truncated")?;
    let truncated = flag(ul, truncated)?;
    let trace = ProcessTrace::assemble(start, rounds, truncated);
    if trace.tau != tau {
        return Err(Error::parse(
            tl,
            format!("tau {tau} disagrees with {} rounds", trace.tau),
        ));
    }
    if trace.percolated != percolated {
        return Err(Error::parse(
            pl,
            "percolated flag disagrees with the rounds",
        ));
    }
    Ok(TraceDocument {
        rule: rule.to_string(),
        trace,
    })
}

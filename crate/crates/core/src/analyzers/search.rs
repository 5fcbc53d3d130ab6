use std::fmt::Write;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::engine::{percolates, run_process, InfectionRule};
use crate::graphcore::{
    canonical_form, encode_graph6, enumerate_nonisomorphic, Graph, MAX_ENUMERATION,
};
use crate::{Error, Result};

/// Outcome of an exhaustive search over all graphs on `n` vertices.
#[derive(Clone, Debug)]
pub struct SearchResult {
    /// What was optimised, e.g. `max-running-time`.
    pub quantity: &'static str,
    pub rule: String,
    pub n: usize,
    pub optimum: usize,
    /// Every optimal graph, in canonical form and enumeration order.
    pub witnesses: Vec<Graph>,
    /// Graphs evaluated by the engine.
    pub examined: usize,
    pub elapsed: Duration,
}

impl SearchResult {
    /// `key value` lines followed by one `witness <graph6>` line per witness.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "quantity {}", self.quantity).unwrap();
        writeln!(out, "rule {}", self.rule).unwrap();
        writeln!(out, "n {}", self.n).unwrap();
        writeln!(out, "optimum {}", self.optimum).unwrap();
        writeln!(out, "examined {}", self.examined).unwrap();
        writeln!(out, "elapsed_ms {}", self.elapsed.as_millis()).unwrap();
        for w in &self.witnesses {
            writeln!(out, "witness {}", encode_graph6(w)).unwrap();
        }
        out
    }
}

fn graphs(n: usize) -> Result<&'static [Graph]> {
    if n == 0 || n > MAX_ENUMERATION {
        return Err(Error::input(format!(
            "exhaustive search supports 1 <= n <= {MAX_ENUMERATION}, got {n}"
        )));
    }
    enumerate_nonisomorphic(n)
}

/// `M_H(n)`: the largest running time over all `n`-vertex starting graphs.
pub fn brute_force_max_running_time(rule: &InfectionRule, n: usize) -> Result<SearchResult> {
    let clock = Instant::now();
    let all = graphs(n)?;
    let taus: Vec<usize> = all
        .par_iter()
        .map(|g| run_process(g, rule, None).tau)
        .collect();
    let optimum = taus.iter().copied().max().unwrap_or(0);
    let witnesses = all
        .iter()
        .zip(&taus)
        .filter(|(_, &t)| t == optimum)
        .map(|(g, _)| canonical_form(g).graph(g))
        .collect();
    Ok(SearchResult {
        quantity: "max-running-time",
        rule: rule.name().to_string(),
        n,
        optimum,
        witnesses,
        examined: all.len(),
        elapsed: clock.elapsed(),
    })
}

/// `ws(n, H)`: the fewest edges of a percolating `n`-vertex graph.
///
/// Graphs are scanned by edge count in ascending order and the scan stops at
/// the first level containing a percolating graph; since adding edges never
/// stops a graph from percolating, no larger level needs checking.
pub fn brute_force_weak_saturation(rule: &InfectionRule, n: usize) -> Result<SearchResult> {
    let clock = Instant::now();
    let all = graphs(n)?;
    let mut examined = 0;
    let mut start = 0;
    while start < all.len() {
        let m = all[start].edge_count();
        let end = start
            + all[start..]
                .iter()
                .take_while(|g| g.edge_count() == m)
                .count();
        let level = &all[start..end];
        examined += level.len();
        let hits: Vec<bool> = level.par_iter().map(|g| percolates(g, rule)).collect();
        if hits.iter().any(|&h| h) {
            let witnesses = level
                .iter()
                .zip(&hits)
                .filter(|(_, &h)| h)
                .map(|(g, _)| canonical_form(g).graph(g))
                .collect();
            return Ok(SearchResult {
                quantity: "weak-saturation",
                rule: rule.name().to_string(),
                n,
                optimum: m,
                witnesses,
                examined,
                elapsed: clock.elapsed(),
            });
        }
        start = end;
    }
    Err(Error::Internal(format!(
        "the complete graph on {n} vertices did not percolate"
    )))
}

use std::collections::HashMap;

use super::rule::InfectionRule;
use super::step::{distance_candidates, evaluate, infectable, retest_candidates, PARALLEL_MIN};
use crate::graphcore::{edge, find_embedding, Anchor, Edge, Graph, Scratch};

/// The round-by-round record of an H-process.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProcessTrace {
    pub start: Graph,
    /// Edges first infected in each round, sorted; `rounds[i]` is round `i + 1`.
    pub rounds: Vec<Vec<Edge>>,
    pub tau: usize,
    pub final_graph: Graph,
    pub percolated: bool,
    /// The round limit was reached while further infections were pending.
    pub truncated: bool,
}

impl ProcessTrace {
    /// Round (1-based) in which `e` was infected; `Some(0)` for start edges.
    pub fn round_of(&self, e: Edge) -> Option<usize> {
        let e = edge(e.0, e.1);
        if self.start.has_edge(e.0, e.1) {
            return Some(0);
        }
        self.rounds
            .iter()
            .position(|r| r.binary_search(&e).is_ok())
            .map(|i| i + 1)
    }

    /// Map from every infected edge to its round.
    pub fn infection_rounds(&self) -> HashMap<Edge, usize> {
        self.rounds
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().map(move |&e| (e, i + 1)))
            .collect()
    }

    /// The last round's edges, empty when `tau == 0`.
    pub fn last_round(&self) -> &[Edge] {
        self.rounds.last().map_or(&[], Vec::as_slice)
    }

    pub(crate) fn assemble(start: Graph, rounds: Vec<Vec<Edge>>, truncated: bool) -> ProcessTrace {
        let mut final_graph = start.clone();
        for r in &rounds {
            for &(u, v) in r {
                final_graph.add_edge(u, v);
            }
        }
        ProcessTrace {
            tau: rounds.len(),
            percolated: final_graph.is_complete(),
            start,
            rounds,
            final_graph,
            truncated,
        }
    }
}

fn default_limit(g: &Graph) -> usize {
    let n = g.vertex_count();
    n * n.saturating_sub(1) / 2 - g.edge_count() + 1
}

/// Runs the process from `g` until it stabilises or `max_rounds` rounds have
/// been applied. Failed pairs are only retested near the previous round's edges.
pub fn run_process(g: &Graph, rule: &InfectionRule, max_rounds: Option<usize>) -> ProcessTrace {
    let limit = max_rounds.unwrap_or_else(|| default_limit(g));
    let mut current = g.clone();
    let mut rounds: Vec<Vec<Edge>> = Vec::new();
    let mut candidates = distance_candidates(&current, rule);
    let mut truncated = false;
    loop {
        let fresh = evaluate(&current, rule, &candidates);
        if fresh.is_empty() {
            break;
        }
        if rounds.len() == limit {
            truncated = true;
            break;
        }
        for &(u, v) in &fresh {
            current.add_edge(u, v);
        }
        candidates = retest_candidates(&current, rule, &fresh);
        rounds.push(fresh);
    }
    ProcessTrace::assemble(g.clone(), rounds, truncated)
}

/// Reference stepper: every round tests every non-edge by searching for the
/// whole rule graph in `G + e` with some rule edge anchored on `e`.
pub fn run_process_naive(
    g: &Graph,
    rule: &InfectionRule,
    max_rounds: Option<usize>,
) -> ProcessTrace {
    let limit = max_rounds.unwrap_or_else(|| default_limit(g));
    let h = rule.graph();
    let mut current = g.clone();
    let mut rounds = Vec::new();
    let mut truncated = false;
    loop {
        let mut fresh = Vec::new();
        for (u, v) in current.non_edges() {
            let mut plus = current.clone();
            plus.add_edge(u, v);
            let hit = h.edges().into_iter().any(|f| {
                let anchor = Anchor {
                    pattern: f,
                    host: (u, v),
                };
                matches!(find_embedding(h, &plus, Some(anchor)), Ok(Some(_)))
            });
            if hit {
                fresh.push((u, v));
            }
        }
        if fresh.is_empty() {
            break;
        }
        if rounds.len() == limit {
            truncated = true;
            break;
        }
        for &(u, v) in &fresh {
            current.add_edge(u, v);
        }
        rounds.push(fresh);
    }
    ProcessTrace::assemble(g.clone(), rounds, truncated)
}

/// The final graph, computed without recording rounds.
///
/// Small candidate batches are applied as soon as they are found; the
/// closure of a monotone rule does not depend on the update order.
pub fn closure(g: &Graph, rule: &InfectionRule) -> Graph {
    let mut current = g.clone();
    let mut candidates = distance_candidates(&current, rule);
    let mut scratch = Scratch::new();
    loop {
        let added = if candidates.len() >= PARALLEL_MIN {
            let fresh = evaluate(&current, rule, &candidates);
            for &(u, v) in &fresh {
                current.add_edge(u, v);
            }
            fresh
        } else {
            let mut added = Vec::new();
            for &(u, v) in &candidates {
                if infectable(&current, rule, (u, v), &mut scratch) {
                    current.add_edge(u, v);
                    added.push((u, v));
                }
            }
            added
        };
        if added.is_empty() || current.is_complete() {
            return current;
        }
        candidates = retest_candidates(&current, rule, &added);
    }
}

/// True if no edge is infected in the first round.
pub fn is_stable(g: &Graph, rule: &InfectionRule) -> bool {
    let mut scratch = Scratch::new();
    !distance_candidates(g, rule)
        .into_iter()
        .any(|e| infectable(g, rule, e, &mut scratch))
}

/// True if the final graph is complete.
pub fn percolates(g: &Graph, rule: &InfectionRule) -> bool {
    closure(g, rule).is_complete()
}

/// True if the rule graph percolates under itself.
pub fn self_percolates(rule: &InfectionRule) -> bool {
    percolates(rule.graph(), rule)
}

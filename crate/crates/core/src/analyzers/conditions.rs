use std::collections::BTreeMap;
use std::fmt::{self, Write};
use std::ops::ControlFlow;

use crate::constructions::Chain;
use crate::engine::run_process;
use crate::graphcore::{edge, Edge, Plan, Scratch};

/// The chain conditions that make a chain's replay round-exact.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Condition {
    /// Copies share edges only when consecutive, and then only `e_i`.
    Dagger,
    /// No copy contains a later designated edge.
    DaggerPrime,
    /// Every copy of `H` minus an edge in the underlying graph lies in one copy.
    Star,
}

impl Condition {
    pub const ALL: [Condition; 3] = [Condition::Dagger, Condition::DaggerPrime, Condition::Star];

    pub fn id(self) -> &'static str {
        match self {
            Condition::Dagger => "dagger",
            Condition::DaggerPrime => "dagger_prime",
            Condition::Star => "star",
        }
    }

    pub fn from_id(id: &str) -> Option<Condition> {
        Condition::ALL.into_iter().find(|c| c.id() == id)
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// Why a condition failed. Copy and designated-edge indices are 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChainWitness {
    /// Copies `i < j` share `edge` where they should not.
    SharedEdge { i: usize, j: usize, edge: Edge },
    /// Designated edge `e_j` is an edge of the earlier copy `H_i`.
    EarlyDesignated { i: usize, j: usize },
    /// A copy of the rule minus `removed` (a rule edge) whose image, given by
    /// `map` on rule vertices, lies in no single copy.
    Spanning {
        removed: Edge,
        map: Vec<usize>,
        edges: Vec<Edge>,
    },
}

impl fmt::Display for ChainWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChainWitness::SharedEdge { i, j, edge } => {
                write!(f, "copies {i} and {j} share {} {}", edge.0, edge.1)
            }
            ChainWitness::EarlyDesignated { i, j } => write!(f, "e_{j} is an edge of copy {i}"),
            ChainWitness::Spanning { removed, edges, .. } => {
                write!(f, "rule minus {} {} spans copies:", removed.0, removed.1)?;
                for (u, v) in edges {
                    write!(f, " {u}-{v}")?;
                }
                Ok(())
            }
        }
    }
}

/// Outcome of one condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionResult {
    pub condition: Condition,
    pub passed: bool,
    pub witness: Option<ChainWitness>,
}

/// Results for the requested conditions, in request order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainReport {
    pub results: Vec<ConditionResult>,
}

impl ChainReport {
    /// `None` if the condition was not checked.
    pub fn passed(&self, c: Condition) -> Option<bool> {
        self.results
            .iter()
            .find(|r| r.condition == c)
            .map(|r| r.passed)
    }

    pub fn all_passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }

    pub fn first_failure(&self) -> Option<&ConditionResult> {
        self.results.iter().find(|r| !r.passed)
    }

    /// One `condition pass|fail [witness]` line per condition.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            let verdict = if r.passed { "pass" } else { "fail" };
            match &r.witness {
                Some(w) => writeln!(out, "{} {verdict} {w}", r.condition).unwrap(),
                None => writeln!(out, "{} {verdict}", r.condition).unwrap(),
            }
        }
        out
    }
}

/// For every edge of the underlying graph, the (0-based, increasing) copies containing it.
fn edge_owners(chain: &Chain) -> BTreeMap<Edge, Vec<usize>> {
    let mut owners: BTreeMap<Edge, Vec<usize>> = BTreeMap::new();
    for i in 0..chain.len() {
        for e in chain.copy_edges(i) {
            owners.entry(e).or_default().push(i);
        }
    }
    owners
}

fn check_dagger(chain: &Chain, owners: &BTreeMap<Edge, Vec<usize>>) -> Option<ChainWitness> {
    let mut worst: Option<(usize, usize, Edge)> = None;
    for (&e, list) in owners {
        for (a, &i) in list.iter().enumerate() {
            for &j in &list[a + 1..] {
                if j == i + 1 && chain.designated()[i] == e {
                    continue;
                }
                if worst.is_none_or(|w| (i, j, e) < w) {
                    worst = Some((i, j, e));
                }
            }
        }
    }
    worst.map(|(i, j, edge)| ChainWitness::SharedEdge {
        i: i + 1,
        j: j + 1,
        edge,
    })
}

fn check_dagger_prime(chain: &Chain, owners: &BTreeMap<Edge, Vec<usize>>) -> Option<ChainWitness> {
    chain.designated().iter().enumerate().find_map(|(j, e)| {
        let first = *owners.get(e)?.first()?;
        (first < j).then_some(ChainWitness::EarlyDesignated {
            i: first + 1,
            j: j + 1,
        })
    })
}

fn check_star(chain: &Chain, owners: &BTreeMap<Edge, Vec<usize>>) -> Option<ChainWitness> {
    let h = chain.rule().graph();
    let host = chain.underlying();
    let mut scratch = Scratch::new();
    let mut witness = None;
    for removed in chain.rule().orbits().representatives() {
        let mut pattern = h.clone();
        pattern.remove_edge(removed.0, removed.1);
        let pattern_edges = pattern.edges();
        let plan = Plan::new(&pattern, None);
        plan.for_each(host, None, &mut scratch, |map| {
            let image: Vec<Edge> = pattern_edges
                .iter()
                .map(|&(a, b)| edge(map[a], map[b]))
                .collect();
            let Some(first) = image.first() else {
                return ControlFlow::Continue(());
            };
            let inside = owners[first]
                .iter()
                .any(|&i| image[1..].iter().all(|&e| chain.copy_contains(i, e)));
            if inside {
                ControlFlow::Continue(())
            } else {
                let mut edges = image;
                edges.sort_unstable();
                witness = Some(ChainWitness::Spanning {
                    removed,
                    map: map.to_vec(),
                    edges,
                });
                ControlFlow::Break(())
            }
        });
        if witness.is_some() {
            break;
        }
    }
    witness
}

/// Decides each requested condition exhaustively.
///
/// `(†)` and `(†′)` come from pairwise copy intersections; `(*)` enumerates,
/// for each rule-edge orbit, every embedding of the rule minus that edge into
/// the underlying graph and tests containment in a single copy.
pub fn verify_chain_conditions(chain: &Chain, which: &[Condition]) -> ChainReport {
    let owners = edge_owners(chain);
    let results = which
        .iter()
        .map(|&condition| {
            let witness = match condition {
                Condition::Dagger => check_dagger(chain, &owners),
                Condition::DaggerPrime => check_dagger_prime(chain, &owners),
                Condition::Star => check_star(chain, &owners),
            };
            ConditionResult {
                condition,
                passed: witness.is_none(),
                witness,
            }
        })
        .collect();
    ChainReport { results }
}

/// Round (1-based) at which each designated edge is first infected when the
/// engine runs on the chain's starting graph; `None` if it never is.
pub fn replay_rounds(chain: &Chain) -> Vec<Option<usize>> {
    let trace = run_process(chain.starting(), chain.rule(), None);
    let rounds = trace.infection_rounds();
    chain
        .designated()
        .iter()
        .map(|e| rounds.get(e).copied())
        .collect()
}

/// True if every `e_i` is first infected exactly at round `i`.
pub fn is_round_exact(chain: &Chain) -> bool {
    replay_rounds(chain)
        .iter()
        .enumerate()
        .all(|(i, r)| *r == Some(i + 1))
}

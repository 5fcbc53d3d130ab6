//! Property checkers and exhaustive or Monte Carlo oracles.

mod conditions;
mod montecarlo;
mod search;
mod structure;

pub use conditions::{
    is_round_exact, replay_rounds, verify_chain_conditions, ChainReport, ChainWitness, Condition,
    ConditionResult,
};
pub use montecarlo::{
    percolation_probability, random_graph, trial_rng, wilson_interval, Estimate, Z_95,
};
pub use search::{brute_force_max_running_time, brute_force_weak_saturation, SearchResult};
pub use structure::{is_behrendian, is_l1_inseparable, Behrendian, BEHRENDIAN_EDGE_CAP};

use crate::engine::{InfectionRule, ProcessTrace};
use crate::graphcore::{find_embedding, Graph};
use crate::{Error, Result};

/// The lexicographically least new edge of every odd round, as a graph on
/// the trace's vertex set. Such a graph never contains the rule; finding a
/// copy means the trace is inconsistent.
pub fn extract_alternating_witness(trace: &ProcessTrace, rule: &InfectionRule) -> Result<Graph> {
    if trace.tau == 0 {
        return Err(Error::input(
            "alternating extraction needs a trace with at least one round",
        ));
    }
    let mut g = Graph::empty(trace.start.vertex_count());
    for round in trace.rounds.iter().step_by(2) {
        let &(u, v) = round
            .first()
            .ok_or_else(|| Error::Internal("trace has an empty round".into()))?;
        g.add_edge(u, v);
    }
    if let Some(copy) = find_embedding(rule.graph(), &g, None)? {
        return Err(Error::Internal(format!(
            "odd-round extraction contains a copy of {} at {:?}",
            rule.name(),
            copy.map()
        )));
    }
    Ok(g)
}

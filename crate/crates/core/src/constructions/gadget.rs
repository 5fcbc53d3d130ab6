use super::chain::simple_chain;
use crate::analyzers::is_l1_inseparable;
use crate::engine::{closure, is_stable, percolates, InfectionRule};
use crate::graphcore::{Edge, Graph};
use crate::{Error, Result};

/// Size parameters of the gadget graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GadgetParams {
    /// Length `ℓ` of the underlying simple rule-chain.
    pub chain_length: usize,
    /// Number `w` of vertices at each end that receive attachment edges.
    pub window: usize,
    /// Attachment spacing `s`: vertex `v_i` of the low window is joined to
    /// `v_{s·m}` for `m ∈ [(i-1)(δ-1)+1, i(δ-1)]`.
    pub spacing: usize,
    /// Required lower bound on `dist(e, f)` and `dist(U, e ∪ f)`.
    pub min_distance: usize,
}

impl GadgetParams {
    /// The values from the existence proof for a `k`-vertex rule:
    /// `ℓ = ⌈(2k^{3k+3} - 2) / (k - 2)⌉`, `w = k^{3k}`, `s = k²`, distance `k`.
    /// `None` if they overflow `usize` (or `k < 3`).
    pub fn paper_defaults(k: usize) -> Option<GadgetParams> {
        if k < 3 {
            return None;
        }
        let pow = |e: usize| (0..e).try_fold(1usize, |acc, _| acc.checked_mul(k));
        let big = pow(3 * k + 3)?.checked_mul(2)? - 2;
        Some(GadgetParams {
            chain_length: big.div_ceil(k - 2),
            window: pow(3 * k)?,
            spacing: k * k,
            min_distance: k,
        })
    }

    /// `r = 2 + (k-2)ℓ`, the number of vertices of the gadget.
    pub fn vertex_count(&self, k: usize) -> usize {
        2 + (k - 2) * self.chain_length
    }
}

/// Which gadget properties hold, each computed on the built graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GadgetChecks {
    /// No edge is infected in the process on `Γ - e`.
    pub stable_without_trigger: bool,
    /// `f` is an edge of the final graph of `Γ`.
    pub target_infected: bool,
    /// `Γ` plus a clique on `U` percolates.
    pub core_percolates: bool,
    /// `dist(e, f)`, `None` if unreachable.
    pub trigger_target_distance: Option<usize>,
    /// `dist(U, e ∪ f)`, `None` if unreachable.
    pub core_distance: Option<usize>,
}

impl GadgetChecks {
    fn far(d: Option<usize>, min: usize) -> bool {
        d.is_none_or(|d| d >= min)
    }

    /// The first failing clause, if any, for the given distance threshold.
    pub fn failure(&self, min_distance: usize) -> Option<&'static str> {
        if !self.stable_without_trigger {
            Some("(1) gamma minus e is stable")
        } else if !self.target_infected {
            Some("(1) f is infected")
        } else if !GadgetChecks::far(self.trigger_target_distance, min_distance) {
            Some("(2) dist(e, f)")
        } else if !self.core_percolates {
            Some("(3) gamma plus clique(U) percolates")
        } else if !GadgetChecks::far(self.core_distance, min_distance) {
            Some("(3) dist(U, e and f)")
        } else {
            None
        }
    }
}

/// The gadget graph `Γ` with trigger edge `e`, target non-edge `f` and core `U`.
#[derive(Clone, Debug)]
pub struct GadgetSpec {
    pub gamma: Graph,
    pub trigger: Edge,
    pub target: Edge,
    pub core: Vec<usize>,
    pub params: GadgetParams,
    pub checks: GadgetChecks,
}

impl GadgetSpec {
    pub fn verified(&self) -> bool {
        self.checks.failure(self.params.min_distance).is_none()
    }
}

fn set_distance(g: &Graph, from: &[usize], to: &[usize]) -> Option<usize> {
    let d = g.distances_from_set(from);
    to.iter().filter_map(|&v| d[v]).min()
}

/// The gadget's graph, trigger, target and core, without any checks.
fn assemble(rule: &InfectionRule, p: &GadgetParams) -> Result<(Graph, Edge, Edge, Vec<usize>)> {
    let k = rule.vertex_count();
    let delta = rule.stats().min_degree;
    let chain = simple_chain(rule, p.chain_length)?;
    let r = chain.vertex_count();
    if r != p.vertex_count(k) {
        return Err(Error::Internal(format!(
            "chain has {r} vertices, expected {}",
            p.vertex_count(k)
        )));
    }
    if p.spacing == 0 || 2 * p.window >= r {
        return Err(Error::input(format!(
            "window {} and spacing {} leave no core on {r} vertices",
            p.window, p.spacing
        )));
    }
    let mut gamma = chain.starting().clone();
    for i in 1..=p.window {
        for m in (i - 1) * delta.saturating_sub(1) + 1..=i * delta.saturating_sub(1) {
            let j = p.spacing * m;
            if j > r || j == i {
                return Err(Error::input(format!(
                    "attachment v_{i} v_{j} does not fit on {r} vertices (window {}, spacing {})",
                    p.window, p.spacing
                )));
            }
            gamma.add_edge(i - 1, j - 1);
            gamma.add_edge(r - i, r - j);
        }
    }
    let target = *chain.designated().last().expect("chain is non-empty");
    if gamma.has_edge(target.0, target.1) {
        return Err(Error::input("attachment edges cover the target edge f"));
    }
    let core = (p.window..r - p.window).collect();
    Ok((gamma, (0, 1), target, core))
}

/// Builds `Γ` and computes every property, without judging them.
///
/// `Γ` is the starting graph of a simple rule-chain of length `ℓ` on
/// `v_1, …, v_r` (vertex `v_i` is `i - 1`) plus the attachment edges of the
/// low window and their mirror images `v_{r+1-i} v_{r+1-j}`; `e = v_1 v_2`,
/// `f` is the last designated edge and `U = {v_{w+1}, …, v_{r-w}}`.
pub fn build_gadget(rule: &InfectionRule, params: GadgetParams) -> Result<GadgetSpec> {
    if !is_l1_inseparable(rule.graph(), 2) {
        return Err(Error::input(format!(
            "rule {} is (2,1)-separable",
            rule.name()
        )));
    }
    let (gamma, trigger, target, core) = assemble(rule, &params)?;
    let checks = evaluate(rule, &gamma, trigger, target, &core, None);
    Ok(GadgetSpec {
        gamma,
        trigger,
        target,
        core,
        params,
        checks,
    })
}

/// Computes the checks, skipping the engine ones once a distance falls
/// below `stop_below` (they are then reported as failed).
fn evaluate(
    rule: &InfectionRule,
    gamma: &Graph,
    e: Edge,
    f: Edge,
    core: &[usize],
    stop_below: Option<usize>,
) -> GadgetChecks {
    let ef = [e.0, e.1, f.0, f.1];
    let trigger_target_distance = set_distance(gamma, &[e.0, e.1], &[f.0, f.1]);
    let core_distance = set_distance(gamma, core, &ef);
    let mut checks = GadgetChecks {
        stable_without_trigger: false,
        target_infected: false,
        core_percolates: false,
        trigger_target_distance,
        core_distance,
    };
    if let Some(min) = stop_below {
        if !GadgetChecks::far(trigger_target_distance, min)
            || !GadgetChecks::far(core_distance, min)
        {
            return checks;
        }
    }
    let mut without = gamma.clone();
    without.remove_edge(e.0, e.1);
    checks.stable_without_trigger = is_stable(&without, rule);
    if stop_below.is_some() && !checks.stable_without_trigger {
        return checks;
    }
    checks.target_infected = closure(gamma, rule).has_edge(f.0, f.1);
    let mut boosted = gamma.clone();
    for (i, &a) in core.iter().enumerate() {
        for &b in &core[i + 1..] {
            boosted.add_edge(a, b);
        }
    }
    checks.core_percolates = percolates(&boosted, rule);
    checks
}

/// Builds the gadget and fails with the first violated clause.
pub fn gadget_graph(rule: &InfectionRule, params: GadgetParams) -> Result<GadgetSpec> {
    let spec = build_gadget(rule, params)?;
    match spec.checks.failure(params.min_distance) {
        None => Ok(spec),
        Some(clause) => Err(Error::verification(
            clause,
            format!("{params:?}: {:?}", spec.checks),
        )),
    }
}

/// Smallest passing parameters for a distance threshold, ordered by chain
/// length, then spacing, then window; chain lengths up to `max_chain_length`.
pub fn search_gadget_params(
    rule: &InfectionRule,
    min_distance: usize,
    max_chain_length: usize,
) -> Result<GadgetSpec> {
    if !is_l1_inseparable(rule.graph(), 2) {
        return Err(Error::input(format!(
            "rule {} is (2,1)-separable",
            rule.name()
        )));
    }
    let k = rule.vertex_count();
    let step = rule.stats().min_degree.saturating_sub(1).max(1);
    for chain_length in 1..=max_chain_length {
        let r = 2 + (k - 2) * chain_length;
        for spacing in 2..=r {
            if spacing * step > r {
                break;
            }
            for window in 1.. {
                if 2 * window >= r || spacing * window * step > r {
                    break;
                }
                let params = GadgetParams {
                    chain_length,
                    window,
                    spacing,
                    min_distance,
                };
                let Ok((gamma, e, f, core)) = assemble(rule, &params) else {
                    continue;
                };
                let checks = evaluate(rule, &gamma, e, f, &core, Some(min_distance));
                if checks.failure(min_distance).is_none() {
                    return Ok(GadgetSpec {
                        gamma,
                        trigger: e,
                        target: f,
                        core,
                        params,
                        checks,
                    });
                }
            }
        }
    }
    Err(Error::Construction(format!(
        "no gadget for {} with distance {min_distance} up to chain length {max_chain_length}",
        rule.name()
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn paper_defaults_for_k5() {
        let p = GadgetParams::paper_defaults(5).unwrap();
        assert_eq!(p.chain_length, 2_543_131_510_416);
        assert_eq!(p.window, 30_517_578_125);
        assert_eq!(p.spacing, 25);
        assert!(GadgetParams::paper_defaults(9).is_none());
    }
}

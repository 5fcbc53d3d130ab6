use std::fmt;

use num_rational::Ratio;

use crate::graphcore::{
    edge_orbits, find_automorphism, refine, Edge, EdgeOrbitPartition, Graph, Plan,
};
use crate::{Error, Result};

/// Degree statistics of a rule graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RuleStats {
    pub vertices: usize,
    pub edges: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    /// `(e - 2) / (v - 2)`, defined when `v > 2`.
    pub lambda: Option<Ratio<i64>>,
}

impl RuleStats {
    pub fn of(h: &Graph) -> RuleStats {
        let (v, e) = (h.vertex_count(), h.edge_count());
        RuleStats {
            vertices: v,
            edges: e,
            min_degree: h.min_degree(),
            max_degree: h.max_degree(),
            lambda: (v > 2).then(|| Ratio::new(e as i64 - 2, v as i64 - 2)),
        }
    }
}

/// One infection test: `H - f` anchored at the endpoints of `f`.
#[derive(Clone, Debug)]
pub(crate) struct Probe {
    pub(crate) edge: Edge,
    pub(crate) plan: Plan,
    /// Some automorphism of `H - f` swaps the endpoints of `f`, so one
    /// orientation of the host pair suffices.
    pub(crate) symmetric: bool,
    /// Distance between the endpoints of `f` in `H - f`.
    pub(crate) gap: Option<usize>,
}

/// An infection rule `H` with its edge orbits and derived search data.
#[derive(Clone)]
pub struct InfectionRule {
    name: String,
    graph: Graph,
    orbits: EdgeOrbitPartition,
    stats: RuleStats,
    pub(crate) probes: Vec<Probe>,
    pub(crate) max_gap: Option<usize>,
    pub(crate) retest_radius: Option<usize>,
}

impl InfectionRule {
    /// Wraps `graph` as a rule; `name` is the identifier written to trace documents.
    pub fn new(name: impl Into<String>, graph: Graph) -> Result<InfectionRule> {
        if graph.edge_count() == 0 {
            return Err(Error::input("an infection rule needs at least one edge"));
        }
        let orbits = edge_orbits(&graph)?;
        let mut probes = Vec::new();
        for (x, y) in orbits.representatives() {
            let mut minus = graph.clone();
            minus.remove_edge(x, y);
            let colours = refine(&minus);
            let symmetric = find_automorphism(&minus, &colours, (x, y), (y, x)).is_some();
            let gap = minus.distances_from(x)[y];
            probes.push(Probe {
                edge: (x, y),
                plan: Plan::new(&minus, Some((x, y))),
                symmetric,
                gap,
            });
        }
        let max_gap = probes
            .iter()
            .map(|p| p.gap)
            .collect::<Option<Vec<_>>>()
            .map(|g| g.into_iter().max().unwrap_or(0));
        // A copy of H - f that is new in some round uses a new edge, which lies
        // within the distance from x (and from y) to that edge inside H - f.
        let retest_radius = probes
            .iter()
            .map(|p| {
                let minus = p.plan.pattern();
                let mut reach = 0;
                for s in [p.edge.0, p.edge.1] {
                    let d = minus.distances_from(s);
                    for (a, b) in minus.edges() {
                        reach = reach.max(d[a]?.min(d[b]?));
                    }
                }
                Some(reach)
            })
            .collect::<Option<Vec<_>>>()
            .map(|r| r.into_iter().max().unwrap_or(0));
        Ok(InfectionRule {
            name: name.into(),
            stats: RuleStats::of(&graph),
            graph,
            orbits,
            probes,
            max_gap,
            retest_radius,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn orbits(&self) -> &EdgeOrbitPartition {
        &self.orbits
    }

    pub fn stats(&self) -> &RuleStats {
        &self.stats
    }

    pub fn vertex_count(&self) -> usize {
        self.stats.vertices
    }

    /// Largest distance at which a non-edge can possibly be infected, or
    /// `None` when some `H - f` separates the endpoints of `f`.
    pub fn max_gap(&self) -> Option<usize> {
        self.max_gap
    }

    /// Radius of the neighbourhood around new edges inside which failed pairs
    /// must be retested; `None` disables the filter.
    pub fn retest_radius(&self) -> Option<usize> {
        self.retest_radius
    }
}

impl fmt::Debug for InfectionRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("InfectionRule")
            .field("name", &self.name)
            .field("stats", &self.stats)
            .field("orbits", &self.orbits.len())
            .finish()
    }
}

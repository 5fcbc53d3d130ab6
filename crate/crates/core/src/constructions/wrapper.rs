use super::bipartite::high_girth_bipartite;
use super::extremal::cheap_percolator_with_core;
use super::gadget::{gadget_graph, GadgetParams};
use crate::engine::{run_process, InfectionRule, ProcessTrace};
use crate::graphcore::{edge, Edge, Graph, Plan, Scratch};
use crate::{Error, Result};

/// Parameters of [`slow_percolating_wrapper`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WrapperParams {
    pub gadget: GadgetParams,
    /// Size of the independent set `I`; `None` means `v(g)`.
    pub independent: Option<usize>,
    /// Girth demanded of the attachment graph between `I` and the gadget cores.
    /// The existence argument uses `v(H) + 1`.
    pub attachment_girth: usize,
    pub seed: u64,
}

/// The wrapped starting graph and its layout.
#[derive(Clone, Debug)]
pub struct Wrapped {
    pub graph: Graph,
    /// `V(g)` is `0..base`.
    pub base: usize,
    /// `I` is `base..base + independent`.
    pub independent: usize,
    /// Edge of `g` infected in its last round that triggers every gadget.
    pub trigger: Edge,
    /// The edges `f` that received a gadget, in gadget order.
    pub targets: Vec<Edge>,
    /// Edges of the auxiliary percolating graph left without a gadget because
    /// they meet the trigger.
    pub skipped: Vec<Edge>,
    /// Running time of `g` itself.
    pub base_tau: usize,
}

impl Wrapped {
    /// `v(G̃) / v(g)`.
    pub fn vertex_ratio(&self) -> f64 {
        self.graph.vertex_count() as f64 / self.base as f64
    }

    /// Runs the engine on the wrapped graph; the contract is that the trace
    /// percolates and lasts at least `base_tau` rounds.
    pub fn replay(&self, rule: &InfectionRule) -> ProcessTrace {
        run_process(&self.graph, rule, None)
    }
}

/// Lexicographically first clique on `size` vertices of `g` avoiding `avoid`.
fn find_clique(g: &Graph, size: usize, avoid: &[usize]) -> Option<Vec<usize>> {
    let mut host = g.clone();
    for &a in avoid {
        for b in g.neighbors(a).collect::<Vec<_>>() {
            host.remove_edge(a, b);
        }
    }
    if size < 2 {
        return None;
    }
    let mut found =
        Plan::new(&Graph::complete(size), None).find(&host, None, &mut Scratch::new())?;
    found.sort_unstable();
    Some(found)
}

/// A percolating supergraph of `g` whose process copies `g`'s first
/// `τ(g)` rounds.
///
/// Adds an independent set `I`, takes the cheap percolator `G′` on
/// `V(g) ∪ I` (its clique placed on a clique of `g`'s final graph that avoids
/// the trigger when one exists, otherwise on `I`), and for each edge `f` of
/// `G′` missing from the final graph of `g` places a verified gadget with
/// trigger `e_τ` and target `f` on fresh vertices. Each gadget core vertex is
/// joined to `δ(H) - 1` vertices of `I` following a bipartite graph of the
/// requested girth.
pub fn slow_percolating_wrapper(
    rule: &InfectionRule,
    g: &Graph,
    params: WrapperParams,
) -> Result<Wrapped> {
    let k = rule.vertex_count();
    let delta = rule.stats().min_degree;
    let trace = run_process(g, rule, None);
    let trigger = *trace.last_round().first().ok_or_else(|| {
        Error::input("the starting graph is stable, so there is no last-round edge")
    })?;
    let gadget = gadget_graph(rule, params.gadget)?;
    let n = g.vertex_count();
    let independent = params.independent.unwrap_or(n);
    let total = n + independent;
    if total < k {
        return Err(Error::input(format!(
            "V(g) ∪ I has {total} vertices, fewer than v(H) = {k}"
        )));
    }
    let core = find_clique(&trace.final_graph, k - 1, &[trigger.0, trigger.1])
        .unwrap_or_else(|| (n..n + k - 1).collect());
    if core.iter().any(|&c| c >= total) {
        return Err(Error::input(
            "independent set too small to hold the percolator clique",
        ));
    }
    let aux = cheap_percolator_with_core(rule, total, &core)?;
    let (mut targets, mut skipped) = (Vec::new(), Vec::new());
    for (u, v) in aux.edges() {
        if u < n && v < n && trace.final_graph.has_edge(u, v) {
            continue;
        }
        if [u, v].iter().any(|&x| x == trigger.0 || x == trigger.1) {
            skipped.push((u, v));
        } else {
            targets.push((u, v));
        }
    }

    let per_core = delta.saturating_sub(1);
    let degree = gadget.core.len() * per_core;
    let attach = if degree == 0 {
        None
    } else {
        let b = high_girth_bipartite(
            independent,
            params.attachment_girth.saturating_sub(1).max(1),
            degree,
            params.seed,
        )?;
        Some(b)
    };
    // Each gadget takes the first unused Y-node of the attachment graph whose
    // neighbourhood misses the gadget's own target endpoints.
    let mut nodes = Vec::with_capacity(targets.len());
    if let Some(b) = &attach {
        let mut free = independent..b.vertex_count();
        let mut parked: Vec<usize> = Vec::new();
        for f in &targets {
            let hits = |y: usize| b.neighbors(y).any(|x| n + x == f.0 || n + x == f.1);
            let pos = parked.iter().position(|&y| !hits(y));
            let y = match pos {
                Some(p) => parked.remove(p),
                None => loop {
                    let y = free.next().ok_or_else(|| {
                        Error::input(format!(
                            "attachment graph ran out of Y-nodes for {} gadgets; enlarge I",
                            targets.len()
                        ))
                    })?;
                    if hits(y) {
                        parked.push(y);
                    } else {
                        break y;
                    }
                },
            };
            nodes.push(y);
        }
    }

    let r = gadget.gamma.vertex_count();
    let mut out = g.with_extra_vertices(independent + targets.len() * (r - 4));
    let mut next = total;
    let fixed = [
        gadget.trigger.0,
        gadget.trigger.1,
        gadget.target.0,
        gadget.target.1,
    ];
    if (1..4).any(|i| fixed[..i].contains(&fixed[i])) {
        return Err(Error::input("gadget trigger and target must be disjoint"));
    }
    for (idx, &f) in targets.iter().enumerate() {
        let mut place = vec![usize::MAX; r];
        for (slot, host) in fixed.iter().zip([trigger.0, trigger.1, f.0, f.1]) {
            place[*slot] = host;
        }
        for p in place.iter_mut().filter(|p| **p == usize::MAX) {
            *p = next;
            next += 1;
        }
        for (a, b) in gadget.gamma.edges() {
            if edge(a, b) != edge(gadget.trigger.0, gadget.trigger.1) {
                out.add_edge(place[a], place[b]);
            }
        }
        if let Some(b) = &attach {
            let slots: Vec<usize> = b.neighbors(nodes[idx]).collect();
            for (u, chunk) in gadget.core.iter().zip(slots.chunks(per_core)) {
                for &x in chunk {
                    out.add_edge(place[*u], n + x);
                }
            }
        }
    }
    debug_assert_eq!(next, out.vertex_count());
    Ok(Wrapped {
        graph: out,
        base: n,
        independent,
        trigger,
        targets,
        skipped,
        base_tau: trace.tau,
    })
}

use crate::engine::InfectionRule;
use crate::graphcore::Graph;
use crate::{Error, Result};

/// Vertex of the pendant-simulation rule that is universal in the rule.
pub const PENDANT_HUB: usize = 6;
/// The pendant vertex of the pendant-simulation rule.
pub const PENDANT_LEAF: usize = 15;

/// `K_6` on `0..6`, `K_9` on `6..15` whose vertex 6 is joined to all of the
/// `K_6`, and vertex 15 pendant at 6.
pub fn pendant_simulation_graph() -> Graph {
    let mut g = Graph::complete(6)
        .disjoint_union(&Graph::complete(9))
        .with_extra_vertices(1);
    for b in 0..6 {
        g.add_edge(PENDANT_HUB, b);
    }
    g.add_edge(PENDANT_HUB, PENDANT_LEAF);
    g
}

/// The 16-vertex rule with minimum degree 1 that simulates the `K_6`-process,
/// together with the matching starting-graph builder.
pub fn pendant_simulation_rule() -> (InfectionRule, fn(&Graph) -> Graph) {
    let rule = InfectionRule::new("pendant-simulation", pendant_simulation_graph())
        .expect("the pendant-simulation graph has edges");
    (rule, pendant_simulation_start)
}

/// `g` plus a disjoint `K_9` one of whose vertices is joined to every vertex
/// of `g`. The `K_9` occupies the vertices after `V(g)`; its first vertex is
/// the joined one.
pub fn pendant_simulation_start(g: &Graph) -> Graph {
    let n = g.vertex_count();
    let mut out = g.disjoint_union(&Graph::complete(9));
    for v in 0..n {
        out.add_edge(n, v);
    }
    out
}

/// Two `k`-cliques sharing the edge `01`, on `{0, 1, 2, …, k-1}` and
/// `{0, 1, k, …, 2k-3}`, plus the edge `2k`.
pub fn glued_cliques_graph(k: usize) -> Result<Graph> {
    if k < 4 {
        return Err(Error::input(format!(
            "glued cliques need k >= 4; for k = {k} the extra edge leaves nothing to glue (k = 3 gives K4)"
        )));
    }
    let first: Vec<usize> = (0..k).collect();
    let second: Vec<usize> = [0, 1].into_iter().chain(k..2 * k - 2).collect();
    let mut g = Graph::empty(2 * k - 2);
    for part in [&first, &second] {
        for (i, &a) in part.iter().enumerate() {
            for &b in &part[i + 1..] {
                g.add_edge(a, b);
            }
        }
    }
    g.add_edge(2, k);
    Ok(g)
}

/// The `(2k-2)`-vertex rule `H′_k`; see [`glued_cliques_graph`].
pub fn glued_cliques_rule(k: usize) -> Result<InfectionRule> {
    InfectionRule::new(format!("glued-cliques {k}"), glued_cliques_graph(k)?)
}

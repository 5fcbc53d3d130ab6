use super::catalog;
use super::chain::{simple_chain, Chain};
use crate::engine::{run_process, InfectionRule};
use crate::graphcore::Graph;
use crate::{Error, Result};

/// A simple `K_k`-chain of length `d` on `(k-2)d + 2` vertices.
pub fn simple_clique_chain(k: usize, d: usize) -> Result<Chain> {
    if k < 3 || d == 0 {
        return Err(Error::input(format!(
            "simple clique chain needs k >= 3 and d >= 1, got k = {k}, d = {d}"
        )));
    }
    let rule = InfectionRule::new(format!("clique {k}"), Graph::complete(k))?;
    simple_chain(&rule, d)
}

/// Starts from `K_4` minus an edge and repeatedly adds a vertex joined to both
/// ends of the smallest edge infected in the last round, so the `K_4` running
/// time is `n - 3`.
pub fn k4_extremal(n: usize) -> Result<Graph> {
    if n < 4 {
        return Err(Error::input(format!("k4_extremal needs n >= 4, got {n}")));
    }
    let rule = InfectionRule::new("clique 4", Graph::complete(4))?;
    let mut g = Graph::complete(4);
    g.remove_edge(2, 3);
    for v in 4..n {
        let trace = run_process(&g, &rule, None);
        let &(a, b) = trace
            .rounds
            .last()
            .and_then(|r| r.first())
            .ok_or_else(|| Error::Internal("K4 extremal graph stopped growing".into()))?;
        g = g.with_extra_vertices(1);
        g.add_edge(a, v);
        g.add_edge(b, v);
    }
    Ok(g)
}

/// Stars `K_{1,s}` for `1 <= s <= t-2` followed by `n - C(t,2) + 1` isolated
/// vertices; slow for the rule `K_{1,t-1}`.
pub fn star_extremal(t: usize, n: usize) -> Result<Graph> {
    let pairs = t * t.saturating_sub(1) / 2;
    if t < 3 || n < pairs {
        return Err(Error::input(format!(
            "star_extremal needs t >= 3 and n >= C(t,2) = {pairs}, got t = {t}, n = {n}"
        )));
    }
    let mut g = Graph::empty(n);
    let mut next = 0;
    for s in 1..=t - 2 {
        for leaf in 1..=s {
            g.add_edge(next, next + leaf);
        }
        next += s + 1;
    }
    Ok(g)
}

/// The path on `n` vertices.
pub fn path_start(n: usize) -> Graph {
    catalog::path(n)
}

/// A clique on `v(H) - 1` vertices with every other vertex joined to
/// `δ(H) - 1` of them.
pub fn cheap_percolator(rule: &InfectionRule, n: usize) -> Result<Graph> {
    let core: Vec<usize> = (0..rule.vertex_count().saturating_sub(1)).collect();
    cheap_percolator_with_core(rule, n, &core)
}

/// [`cheap_percolator`] with the clique placed on `core`; outside vertices are
/// joined to the first `δ(H) - 1` entries of `core`.
pub fn cheap_percolator_with_core(rule: &InfectionRule, n: usize, core: &[usize]) -> Result<Graph> {
    let v = rule.vertex_count();
    if n < v {
        return Err(Error::input(format!(
            "cheap percolator needs n >= v(H) = {v}, got {n}"
        )));
    }
    let mut in_core = vec![false; n];
    for &c in core {
        if c >= n || std::mem::replace(&mut in_core[c], true) {
            return Err(Error::input(format!(
                "core vertex {c} is repeated or out of range"
            )));
        }
    }
    if core.len() + 1 != v {
        return Err(Error::input(format!(
            "core must have v(H) - 1 = {} vertices",
            v - 1
        )));
    }
    let mut g = Graph::empty(n);
    for (i, &a) in core.iter().enumerate() {
        for &b in &core[i + 1..] {
            g.add_edge(a, b);
        }
    }
    let attach = &core[..rule.stats().min_degree.saturating_sub(1)];
    for x in (0..n).filter(|&x| !in_core[x]) {
        for &w in attach {
            g.add_edge(x, w);
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_layout() {
        let g = star_extremal(4, 10).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.degree(2), 2);
        assert!(star_extremal(4, 5).is_err());
    }

    #[test]
    fn k4_base_case() {
        let g = k4_extremal(4).unwrap();
        assert_eq!(g.edge_count(), 5);
    }
}

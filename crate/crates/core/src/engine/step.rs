use rayon::prelude::*;

use super::rule::InfectionRule;
use crate::graphcore::{Edge, Graph, Scratch};

/// Candidate lists at least this long are evaluated on the rayon pool.
pub(crate) const PARALLEL_MIN: usize = 256;

/// Truncated breadth-first search.
pub(crate) struct Balls {
    dist: Vec<u32>,
    touched: Vec<usize>,
}

impl Balls {
    pub(crate) fn new(n: usize) -> Balls {
        Balls {
            dist: vec![u32::MAX; n],
            touched: Vec::new(),
        }
    }

    /// Vertices within `radius` of `sources`, in visiting order.
    pub(crate) fn ball(&mut self, g: &Graph, sources: &[usize], radius: usize) -> &[usize] {
        if self.dist.len() != g.vertex_count() {
            self.dist = vec![u32::MAX; g.vertex_count()];
        }
        for &v in &self.touched {
            self.dist[v] = u32::MAX;
        }
        self.touched.clear();
        for &s in sources {
            if self.dist[s] == u32::MAX {
                self.dist[s] = 0;
                self.touched.push(s);
            }
        }
        let mut head = 0;
        while head < self.touched.len() {
            let x = self.touched[head];
            head += 1;
            let d = self.dist[x];
            if d as usize >= radius {
                continue;
            }
            for y in g.neighbors(x) {
                if self.dist[y] == u32::MAX {
                    self.dist[y] = d + 1;
                    self.touched.push(y);
                }
            }
        }
        &self.touched
    }
}

/// True if adding the non-edge `e` to `g` creates a copy of the rule through `e`.
pub fn infectable(g: &Graph, rule: &InfectionRule, e: Edge, scratch: &mut Scratch) -> bool {
    let (u, v) = e;
    if u == v || g.has_edge(u, v) {
        return false;
    }
    if rule.stats().edges == 1 {
        return g.vertex_count() >= rule.vertex_count();
    }
    rule.probes.iter().any(|p| {
        p.plan.find(g, Some((u, v)), scratch).is_some()
            || (!p.symmetric && p.plan.find(g, Some((v, u)), scratch).is_some())
    })
}

/// Non-edges of `g` close enough to be infected, sorted.
pub(crate) fn distance_candidates(g: &Graph, rule: &InfectionRule) -> Vec<Edge> {
    let n = g.vertex_count();
    let dense = 8 * g.edge_count() > n * n;
    match rule.max_gap() {
        Some(gap) if !dense && gap + 1 < n => {
            let mut balls = Balls::new(n);
            let mut out = Vec::new();
            for u in 0..n {
                let mut near: Vec<usize> = balls
                    .ball(g, &[u], gap)
                    .iter()
                    .copied()
                    .filter(|&v| v > u && !g.has_edge(u, v))
                    .collect();
                near.sort_unstable();
                out.extend(near.into_iter().map(|v| (u, v)));
            }
            out
        }
        _ => g.non_edges(),
    }
}

/// Non-edges that may have become infectable because of `fresh` edges, sorted.
pub(crate) fn retest_candidates(g: &Graph, rule: &InfectionRule, fresh: &[Edge]) -> Vec<Edge> {
    let Some(radius) = rule.retest_radius() else {
        return distance_candidates(g, rule);
    };
    let n = g.vertex_count();
    let missing = n * n.saturating_sub(1) / 2 - g.edge_count();
    let mut balls = Balls::new(n);
    let mut out = Vec::new();
    let mut budget = 0usize;
    for &(a, b) in fresh {
        let ball = balls.ball(g, &[a, b], radius);
        budget += ball.len() * ball.len() / 2;
        if budget > missing {
            return distance_candidates(g, rule);
        }
        for (i, &x) in ball.iter().enumerate() {
            for &y in &ball[i + 1..] {
                if !g.has_edge(x, y) {
                    out.push(if x < y { (x, y) } else { (y, x) });
                }
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// The candidates that are infectable in `g`, preserving input order.
pub(crate) fn evaluate(g: &Graph, rule: &InfectionRule, candidates: &[Edge]) -> Vec<Edge> {
    if candidates.len() >= PARALLEL_MIN {
        candidates
            .par_iter()
            .map_init(Scratch::new, |s, &e| infectable(g, rule, e, s).then_some(e))
            .flatten()
            .collect()
    } else {
        let mut s = Scratch::new();
        candidates
            .iter()
            .copied()
            .filter(|&e| infectable(g, rule, e, &mut s))
            .collect()
    }
}

/// One synchronous round: every non-edge whose addition creates a new copy of the rule, sorted.
pub fn infect_step(g: &Graph, rule: &InfectionRule) -> Vec<Edge> {
    evaluate(g, rule, &distance_candidates(g, rule))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rule(name: &str, g: Graph) -> InfectionRule {
        InfectionRule::new(name, g).unwrap()
    }

    #[test]
    fn path_closes_triangle() {
        let p3 = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            infect_step(&p3, &rule("k3", Graph::complete(3))),
            vec![(0, 2)]
        );
    }

    #[test]
    fn c5_gets_all_chords() {
        let c5 = Graph::new(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        let step = infect_step(&c5, &rule("k3", Graph::complete(3)));
        assert_eq!(step, vec![(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)]);
    }

    #[test]
    fn k5_minus_edge_is_completed() {
        let mut g = Graph::complete(5);
        g.remove_edge(1, 3);
        let mut h = Graph::complete(5);
        h.remove_edge(0, 1);
        assert_eq!(infect_step(&g, &rule("k5-", h)), vec![(1, 3)]);
    }

    #[test]
    fn single_edge_rule_needs_enough_vertices() {
        let r = rule("k2+k1", Graph::new(3, [(0, 1)]).unwrap());
        assert_eq!(infect_step(&Graph::empty(3), &r).len(), 3);
        assert!(infect_step(&Graph::empty(2), &r).is_empty());
    }

    #[test]
    fn retest_balls_cover_new_edges() {
        let p = Graph::new(6, (0..5).map(|i| (i, i + 1))).unwrap();
        let r = rule("k3", Graph::complete(3));
        let near = retest_candidates(&p, &r, &[(0, 1)]);
        assert_eq!(near, vec![(0, 2)]);
    }
}

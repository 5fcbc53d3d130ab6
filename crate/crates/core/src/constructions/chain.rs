use std::fmt::Write;

use crate::engine::InfectionRule;
use crate::graphcore::{edge, Edge, Embedding, Graph};
use crate::{Error, Result};

/// A sequence of copies `H_1, …, H_τ` of the rule graph with designated
/// edges `e_i ∈ E(H_i) ∩ E(H_{i+1})` (and `e_τ ∈ E(H_τ)`).
#[derive(Clone, Debug)]
pub struct Chain {
    rule: InfectionRule,
    copies: Vec<Embedding>,
    designated: Vec<Edge>,
    underlying: Graph,
    starting: Graph,
}

impl Chain {
    /// Validates the copies and designated edges on `n` ambient vertices.
    pub fn new(
        rule: InfectionRule,
        n: usize,
        copies: Vec<Embedding>,
        designated: Vec<Edge>,
    ) -> Result<Chain> {
        if copies.is_empty() {
            return Err(Error::Construction(
                "a chain needs at least one copy".into(),
            ));
        }
        if copies.len() != designated.len() {
            return Err(Error::Construction(format!(
                "{} copies but {} designated edges",
                copies.len(),
                designated.len()
            )));
        }
        let h = rule.graph();
        let mut underlying = Graph::empty(n);
        for (i, c) in copies.iter().enumerate() {
            let map = c.map();
            let mut seen = vec![false; n];
            if map.len() != h.vertex_count()
                || map
                    .iter()
                    .any(|&x| x >= n || std::mem::replace(&mut seen[x], true))
            {
                return Err(Error::Construction(format!(
                    "copy {} is not an injective map into 0..{n}",
                    i + 1
                )));
            }
            for (a, b) in h.edges() {
                underlying.add_edge(map[a], map[b]);
            }
        }
        let designated: Vec<Edge> = designated.into_iter().map(|(u, v)| edge(u, v)).collect();
        let chain = Chain {
            starting: Graph::empty(0),
            underlying,
            rule,
            copies,
            designated,
        };
        for (i, &e) in chain.designated.iter().enumerate() {
            if !chain.copy_contains(i, e) {
                return Err(Error::Construction(format!(
                    "e_{} = {e:?} is not an edge of H_{}",
                    i + 1,
                    i + 1
                )));
            }
            if i + 1 < chain.len() && !chain.copy_contains(i + 1, e) {
                return Err(Error::Construction(format!(
                    "e_{} = {e:?} is not an edge of H_{}",
                    i + 1,
                    i + 2
                )));
            }
        }
        let mut starting = chain.underlying.clone();
        for &(u, v) in &chain.designated {
            starting.remove_edge(u, v);
        }
        Ok(Chain { starting, ..chain })
    }

    pub fn rule(&self) -> &InfectionRule {
        &self.rule
    }

    pub fn copies(&self) -> &[Embedding] {
        &self.copies
    }

    pub fn designated(&self) -> &[Edge] {
        &self.designated
    }

    /// Union of all copies.
    pub fn underlying(&self) -> &Graph {
        &self.underlying
    }

    /// Underlying graph minus the designated edges.
    pub fn starting(&self) -> &Graph {
        &self.starting
    }

    /// Number of copies, the chain's length.
    pub fn len(&self) -> usize {
        self.copies.len()
    }

    pub fn is_empty(&self) -> bool {
        self.copies.is_empty()
    }

    pub fn vertex_count(&self) -> usize {
        self.underlying.vertex_count()
    }

    /// Edge set of copy `i` (0-based), sorted.
    pub fn copy_edges(&self, i: usize) -> Vec<Edge> {
        let map = self.copies[i].map();
        let mut out: Vec<Edge> = self
            .rule
            .graph()
            .edges()
            .iter()
            .map(|&(a, b)| edge(map[a], map[b]))
            .collect();
        out.sort_unstable();
        out
    }

    /// True if `e` is an edge of copy `i` (0-based).
    pub fn copy_contains(&self, i: usize, e: Edge) -> bool {
        let map = self.copies[i].map();
        let (Some(a), Some(b)) = (
            map.iter().position(|&x| x == e.0),
            map.iter().position(|&x| x == e.1),
        ) else {
            return false;
        };
        self.rule.graph().has_edge(a, b)
    }

    /// Plain-text form: rule identifier, copy images and designated edges.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "rule {}", self.rule.name()).unwrap();
        writeln!(out, "vertices {}", self.vertex_count()).unwrap();
        writeln!(out, "copies {}", self.len()).unwrap();
        for c in &self.copies {
            let line: Vec<String> = c.map().iter().map(usize::to_string).collect();
            writeln!(out, "{}", line.join(" ")).unwrap();
        }
        writeln!(out, "designated {}", self.designated.len()).unwrap();
        for (u, v) in &self.designated {
            writeln!(out, "{u} {v}").unwrap();
        }
        out
    }

    /// Parses [`Chain::to_text`]; `resolve` turns the rule identifier into a rule.
    pub fn from_text<F>(text: &str, resolve: F) -> Result<Chain>
    where
        F: FnOnce(&str) -> Result<InfectionRule>,
    {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let mut keyed = |key: &str| -> Result<(usize, String)> {
            let (n, l) = lines
                .next()
                .ok_or_else(|| Error::parse(0, format!("missing \"{key}\"")))?;
            match l.strip_prefix(key) {
                Some(rest) if rest.starts_with(' ') => Ok((n, rest.trim().to_string())),
                _ => Err(Error::parse(n, format!("expected \"{key} …\""))),
            }
        };
        let (_, name) = keyed("rule")?;
        let rule = resolve(&name)?;
        let (vl, n) = keyed("vertices")?;
        let n: usize = n
            .parse()
            .map_err(|_| Error::parse(vl, "bad vertex count"))?;
        let (cl, k) = keyed("copies")?;
        let k: usize = k.parse().map_err(|_| Error::parse(cl, "bad copy count"))?;
        let numbers = |line: usize, l: &str| -> Result<Vec<usize>> {
            l.split_whitespace()
                .map(|t| {
                    t.parse()
                        .map_err(|_| Error::parse(line, format!("\"{t}\" is not a vertex")))
                })
                .collect()
        };
        let mut copies = Vec::with_capacity(k);
        for _ in 0..k {
            let (line, l) = lines
                .next()
                .ok_or_else(|| Error::parse(0, "missing copy line"))?;
            copies.push(Embedding::new(numbers(line, l)?));
        }
        let (dl, m) = lines
            .next()
            .ok_or_else(|| Error::parse(0, "missing \"designated\""))?;
        let m: usize = m
            .strip_prefix("designated ")
            .and_then(|t| t.trim().parse().ok())
            .ok_or_else(|| Error::parse(dl, "expected \"designated <count>\""))?;
        let mut designated = Vec::with_capacity(m);
        for _ in 0..m {
            let (line, l) = lines
                .next()
                .ok_or_else(|| Error::parse(0, "missing designated edge"))?;
            match numbers(line, l)?[..] {
                [u, v] => designated.push((u, v)),
                _ => return Err(Error::parse(line, "expected \"u v\"")),
            }
        }
        Chain::new(rule, n, copies, designated)
    }
}

/// Relabelling of the rule graph that puts `entry` on positions `0, 1` and
/// `exit` on the last two positions.
fn layout(h: &Graph, entry: Edge, exit: Edge) -> Vec<usize> {
    let k = h.vertex_count();
    let mut pos = vec![usize::MAX; k];
    pos[entry.0] = 0;
    pos[entry.1] = 1;
    pos[exit.0] = k - 2;
    pos[exit.1] = k - 1;
    let mut next = 2;
    for p in pos.iter_mut() {
        if *p == usize::MAX {
            *p = next;
            next += 1;
        }
    }
    pos
}

/// The entry and exit edges used by [`simple_chain`]: the lexicographically
/// first pair of vertex-disjoint edges, or two edges sharing a vertex when
/// the rule has no disjoint pair (then the last designated edge meets the
/// one before it).
pub fn chain_ports(h: &Graph) -> Result<(Edge, Edge)> {
    let edges = h.edges();
    for (i, &a) in edges.iter().enumerate() {
        for &b in &edges[i + 1..] {
            if a.0 != b.0 && a.0 != b.1 && a.1 != b.0 && a.1 != b.1 {
                return Ok((a, b));
            }
        }
    }
    match edges[..] {
        [a, b, ..] => {
            let shared = if a.0 == b.0 || a.0 == b.1 { a.0 } else { a.1 };
            let other = if a.0 == shared { a.1 } else { a.0 };
            let far = if b.0 == shared { b.1 } else { b.0 };
            Ok(((other, shared), (shared, far)))
        }
        _ => Err(Error::Construction(
            "a simple chain needs a rule with at least two edges".into(),
        )),
    }
}

/// A simple chain of `d` copies: consecutive copies share exactly the
/// designated edge and no other copies meet.
///
/// Copy `i` occupies vertices `(v-2)·i .. (v-2)·i + v - 1`; its exit edge is its
/// last two vertices, which are the entry of copy `i + 1`.
pub fn simple_chain(rule: &InfectionRule, d: usize) -> Result<Chain> {
    if d == 0 {
        return Err(Error::input("chain length must be at least 1"));
    }
    let h = rule.graph();
    let k = h.vertex_count();
    let (entry, exit) = chain_ports(h)?;
    let pos = layout(h, entry, exit);
    let step = k - 2;
    let n = step * d + 2;
    let mut copies = Vec::with_capacity(d);
    let mut designated = Vec::with_capacity(d);
    for i in 0..d {
        let off = step * i;
        copies.push(Embedding::new(pos.iter().map(|&p| off + p).collect()));
        designated.push((off + k - 2, off + k - 1));
    }
    Chain::new(rule.clone(), n, copies, designated)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn clique_rule(k: usize) -> InfectionRule {
        InfectionRule::new(format!("clique {k}"), Graph::complete(k)).unwrap()
    }

    #[test]
    fn simple_k4_chain_counts() {
        let c = simple_chain(&clique_rule(4), 3).unwrap();
        assert_eq!(c.vertex_count(), 8);
        assert_eq!(c.starting().edge_count(), 13);
        assert_eq!(c.designated(), &[(2, 3), (4, 5), (6, 7)]);
    }

    #[test]
    fn text_round_trip() {
        let c = simple_chain(&clique_rule(5), 2).unwrap();
        let back = Chain::from_text(&c.to_text(), |name| {
            assert_eq!(name, "clique 5");
            Ok(clique_rule(5))
        })
        .unwrap();
        assert_eq!(back.to_text(), c.to_text());
        assert_eq!(back.starting(), c.starting());
    }

    #[test]
    fn bad_designated_edge_is_rejected() {
        let r = clique_rule(3);
        let copies = vec![Embedding::new(vec![0, 1, 2]), Embedding::new(vec![2, 3, 4])];
        assert!(Chain::new(r, 5, copies, vec![(0, 1), (3, 4)]).is_err());
    }
}

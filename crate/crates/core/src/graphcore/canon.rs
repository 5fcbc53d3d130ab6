//! Colour refinement, canonical labelling and isomorph-free enumeration.

use std::collections::HashSet;
use std::sync::OnceLock;

use super::graph::Graph;
use crate::{Error, Result};

/// Largest `n` accepted by [`enumerate_nonisomorphic`].
pub const MAX_ENUMERATION: usize = 8;

/// Equitable colour refinement seeded by degree.
///
/// Colours are renumbered after each pass by sorting signatures, so the
/// result is isomorphism-invariant: an isomorphism maps colours to equal colours.
pub fn refine(g: &Graph) -> Vec<u32> {
    let n = g.vertex_count();
    let mut colour: Vec<u32> = (0..n).map(|v| g.degree(v) as u32).collect();
    let mut classes = count_classes(&colour);
    loop {
        let sigs: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<u32> = g.neighbors(v).map(|w| colour[w]).collect();
                nb.sort_unstable();
                (colour[v], nb)
            })
            .collect();
        let mut sorted: Vec<&(u32, Vec<u32>)> = sigs.iter().collect();
        sorted.sort();
        sorted.dedup();
        let next: Vec<u32> = sigs
            .iter()
            .map(|s| sorted.binary_search(&s).unwrap() as u32)
            .collect();
        let c = count_classes(&next);
        colour = next;
        if c == classes {
            return colour;
        }
        classes = c;
    }
}

fn count_classes(colour: &[u32]) -> usize {
    colour.iter().collect::<HashSet<_>>().len()
}

/// A canonical labelling: `order[i]` is the vertex placed at position `i`,
/// and `code` is the column-major upper-triangle adjacency of the relabelled graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Canonical {
    pub order: Vec<usize>,
    pub code: Vec<u64>,
}

impl Canonical {
    /// The relabelled graph, identical for all graphs in one isomorphism class.
    pub fn graph(&self, g: &Graph) -> Graph {
        let mut perm = vec![0; self.order.len()];
        for (i, &v) in self.order.iter().enumerate() {
            perm[v] = i;
        }
        g.relabel(&perm)
    }
}

/// Computes the canonical labelling of `g`.
///
/// Positions are filled cell by cell in refined-colour order. At each
/// position only vertices maximising the new code column are tried, and
/// among mutual twins only the smallest.
pub fn canonical_form(g: &Graph) -> Canonical {
    let n = g.vertex_count();
    let colour = refine(g);
    let mut search = CanonSearch {
        g,
        colour,
        order: Vec::with_capacity(n),
        used: vec![false; n],
        code: Vec::new(),
        best: None,
    };
    search.go();
    let (order, code) = search.best.unwrap_or_default();
    Canonical {
        order,
        code: pack(&code),
    }
}

fn pack(columns: &[Vec<bool>]) -> Vec<u64> {
    let mut out = Vec::new();
    let mut k = 0;
    for col in columns {
        for &b in col {
            if k % 64 == 0 {
                out.push(0);
            }
            if b {
                *out.last_mut().unwrap() |= 1 << (63 - k % 64);
            }
            k += 1;
        }
    }
    out
}

struct CanonSearch<'a> {
    g: &'a Graph,
    colour: Vec<u32>,
    order: Vec<usize>,
    used: Vec<bool>,
    code: Vec<Vec<bool>>,
    best: Option<(Vec<usize>, Vec<Vec<bool>>)>,
}

impl CanonSearch<'_> {
    fn column(&self, v: usize) -> Vec<bool> {
        self.order.iter().map(|&u| self.g.has_edge(u, v)).collect()
    }

    fn twins(&self, a: usize, b: usize) -> bool {
        (0..self.g.vertex_count())
            .filter(|&x| x != a && x != b)
            .all(|x| self.g.has_edge(a, x) == self.g.has_edge(b, x))
    }

    fn go(&mut self) {
        let n = self.g.vertex_count();
        let depth = self.order.len();
        if let Some((_, best)) = &self.best {
            if self.code[..] < best[..depth] {
                return;
            }
        }
        if depth == n {
            let better = match &self.best {
                None => true,
                Some((_, best)) => self.code > *best,
            };
            if better {
                self.best = Some((self.order.clone(), self.code.clone()));
            }
            return;
        }
        let cell = (0..n)
            .filter(|&v| !self.used[v])
            .map(|v| self.colour[v])
            .min()
            .unwrap();
        let members: Vec<usize> = (0..n)
            .filter(|&v| !self.used[v] && self.colour[v] == cell)
            .collect();
        let columns: Vec<Vec<bool>> = members.iter().map(|&v| self.column(v)).collect();
        let top = columns.iter().max().unwrap().clone();
        let mut tried: Vec<usize> = Vec::new();
        for (&v, col) in members.iter().zip(&columns) {
            if *col != top || tried.iter().any(|&t| self.twins(t, v)) {
                continue;
            }
            tried.push(v);
            self.used[v] = true;
            self.order.push(v);
            self.code.push(top.clone());
            self.go();
            self.code.pop();
            self.order.pop();
            self.used[v] = false;
        }
    }
}

/// True if `a` and `b` are isomorphic.
pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.vertex_count() == b.vertex_count()
        && a.edge_count() == b.edge_count()
        && canonical_form(a).code == canonical_form(b).code
}

static CACHE: [OnceLock<Vec<Graph>>; MAX_ENUMERATION + 1] =
    [const { OnceLock::new() }; MAX_ENUMERATION + 1];

/// One canonical representative per isomorphism class of graphs on `n`
/// vertices, ordered by edge count and then by canonical code.
pub fn enumerate_nonisomorphic(n: usize) -> Result<&'static [Graph]> {
    if n == 0 || n > MAX_ENUMERATION {
        return Err(Error::input(format!(
            "enumeration supports 1 <= n <= {MAX_ENUMERATION}, got {n}"
        )));
    }
    Ok(classes(n))
}

fn classes(n: usize) -> &'static [Graph] {
    CACHE[n].get_or_init(|| {
        if n == 1 {
            return vec![Graph::empty(1)];
        }
        let mut seen = HashSet::new();
        let mut out: Vec<(usize, Vec<u64>, Graph)> = Vec::new();
        for base in classes(n - 1) {
            let grown = base.with_extra_vertices(1);
            for mask in 0u32..1 << (n - 1) {
                let mut g = grown.clone();
                for v in 0..n - 1 {
                    if mask >> v & 1 == 1 {
                        g.add_edge(v, n - 1);
                    }
                }
                let c = canonical_form(&g);
                if seen.insert(c.code.clone()) {
                    out.push((g.edge_count(), c.code.clone(), c.graph(&g)));
                }
            }
        }
        out.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
        out.into_iter().map(|(_, _, g)| g).collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=5)
            .map(|n| enumerate_nonisomorphic(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34]);
    }

    #[test]
    fn out_of_range() {
        assert!(enumerate_nonisomorphic(0).is_err());
        assert!(enumerate_nonisomorphic(9).is_err());
    }

    #[test]
    fn canonical_graph_is_label_invariant() {
        let g = Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 3)]).unwrap();
        let h = g.relabel(&[4, 2, 0, 3, 1]);
        assert_eq!(canonical_form(&g).graph(&g), canonical_form(&h).graph(&h));
        assert!(are_isomorphic(&g, &h));
    }

    #[test]
    fn c6_is_not_two_triangles() {
        let c6 = Graph::new(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        let tt = Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(refine(&c6).iter().max(), refine(&tt).iter().max());
        assert!(!are_isomorphic(&c6, &tt));
    }
}

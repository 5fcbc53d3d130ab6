//! Edge orbits of a graph under its automorphism group.

use super::canon::refine;
use super::embed::{Plan, Scratch};
use super::graph::{edge, Edge, Graph};
use crate::{Error, Result};

/// Searches for an automorphism of `g` sending `from` to `to` as ordered pairs.
///
/// `colours` must be an isomorphism-invariant colouring such as [`refine`].
pub fn find_automorphism(
    g: &Graph,
    colours: &[u32],
    from: (usize, usize),
    to: (usize, usize),
) -> Option<Vec<usize>> {
    if colours[from.0] != colours[to.0] || colours[from.1] != colours[to.1] {
        return None;
    }
    if g.has_edge(from.0, from.1) != g.has_edge(to.0, to.1) {
        return None;
    }
    // A bijection of a finite graph onto itself that keeps edges is an automorphism.
    Plan::new(g, Some(from)).find_coloured(g, Some(to), (colours, colours), &mut Scratch::new())
}

/// True if `perm` is a permutation of `0..n` preserving adjacency of `g`.
pub fn is_automorphism(g: &Graph, perm: &[usize]) -> bool {
    let n = g.vertex_count();
    if perm.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &x in perm {
        if x >= n || std::mem::replace(&mut seen[x], true) {
            return false;
        }
    }
    g.edges().iter().all(|&(u, v)| g.has_edge(perm[u], perm[v]))
}

/// The edges of a graph partitioned into automorphism orbits.
///
/// Each edge stores an automorphism carrying its orbit representative onto it,
/// so any two edges of one orbit have an explicit exchanging automorphism.
#[derive(Clone, Debug)]
pub struct EdgeOrbitPartition {
    edges: Vec<Edge>,
    orbit_of: Vec<usize>,
    orbits: Vec<Vec<usize>>,
    witness: Vec<Vec<usize>>,
}

impl EdgeOrbitPartition {
    /// Orbits as lists of edges; the first edge of each is its representative.
    pub fn orbits(&self) -> Vec<Vec<Edge>> {
        self.orbits
            .iter()
            .map(|o| o.iter().map(|&i| self.edges[i]).collect())
            .collect()
    }

    pub fn representatives(&self) -> Vec<Edge> {
        self.orbits.iter().map(|o| self.edges[o[0]]).collect()
    }

    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }

    fn index(&self, e: Edge) -> Option<usize> {
        self.edges.binary_search(&edge(e.0, e.1)).ok()
    }

    /// Orbit index of an edge.
    pub fn orbit_of(&self, e: Edge) -> Option<usize> {
        self.index(e).map(|i| self.orbit_of[i])
    }

    /// An automorphism mapping edge `a` onto edge `b` (as unordered pairs), if they share an orbit.
    pub fn exchange_witness(&self, a: Edge, b: Edge) -> Option<Vec<usize>> {
        let (i, j) = (self.index(a)?, self.index(b)?);
        if self.orbit_of[i] != self.orbit_of[j] {
            return None;
        }
        let wa = &self.witness[i];
        let wb = &self.witness[j];
        let mut inv = vec![0; wa.len()];
        for (v, &x) in wa.iter().enumerate() {
            inv[x] = v;
        }
        Some(inv.iter().map(|&v| wb[v]).collect())
    }
}

/// Partitions the edges of `rule` into automorphism orbits.
pub fn edge_orbits(rule: &Graph) -> Result<EdgeOrbitPartition> {
    if rule.edge_count() == 0 {
        return Err(Error::input(
            "edge orbits need a graph with at least one edge",
        ));
    }
    let n = rule.vertex_count();
    let colours = refine(rule);
    let edges = rule.edges();
    let identity: Vec<usize> = (0..n).collect();
    let mut orbit_of = vec![usize::MAX; edges.len()];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    let mut witness = vec![Vec::new(); edges.len()];
    for (i, &(a, b)) in edges.iter().enumerate() {
        let mut placed = false;
        for (k, orbit) in orbits.iter_mut().enumerate() {
            let (ra, rb) = edges[orbit[0]];
            let hit = find_automorphism(rule, &colours, (ra, rb), (a, b))
                .or_else(|| find_automorphism(rule, &colours, (ra, rb), (b, a)));
            if let Some(w) = hit {
                orbit.push(i);
                orbit_of[i] = k;
                witness[i] = w;
                placed = true;
                break;
            }
        }
        if !placed {
            orbit_of[i] = orbits.len();
            orbits.push(vec![i]);
            witness[i] = identity.clone();
        }
    }
    Ok(EdgeOrbitPartition {
        edges,
        orbit_of,
        orbits,
        witness,
    })
}

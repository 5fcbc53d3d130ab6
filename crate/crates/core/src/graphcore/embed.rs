//! Backtracking subgraph (non-induced) embedding search.
//!
//! A [`Plan`] fixes the order in which pattern vertices are matched. When an
//! anchor pair is supplied it is matched first, so the engine's per-candidate
//! queries start with the two most constrained vertices already placed.

use std::ops::ControlFlow;

use super::graph::Graph;
use crate::{Error, Result};

const UNSET: usize = usize::MAX;

/// An injective map from pattern vertices to host vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Embedding {
    map: Vec<usize>,
}

impl Embedding {
    pub fn new(map: Vec<usize>) -> Embedding {
        Embedding { map }
    }

    /// Host image of each pattern vertex.
    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn image(&self, v: usize) -> usize {
        self.map[v]
    }

    /// True if the map is injective, in range, and sends pattern edges to host edges.
    pub fn is_valid(&self, pattern: &Graph, host: &Graph) -> bool {
        if self.map.len() != pattern.vertex_count() {
            return false;
        }
        let mut seen = vec![false; host.vertex_count()];
        for &x in &self.map {
            if x >= host.vertex_count() || std::mem::replace(&mut seen[x], true) {
                return false;
            }
        }
        pattern
            .edges()
            .iter()
            .all(|&(a, b)| host.has_edge(self.map[a], self.map[b]))
    }
}

/// Pattern pair `pattern` (an edge or a non-adjacent pair) to be mapped onto `host`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Anchor {
    pub pattern: (usize, usize),
    pub host: (usize, usize),
}

/// A compiled matching order for one pattern.
#[derive(Clone, Debug)]
pub struct Plan {
    pattern: Graph,
    order: Vec<usize>,
    /// For each position, the earlier-matched pattern neighbours of `order[pos]`.
    back: Vec<Vec<usize>>,
    /// First position whose vertex is isolated in the pattern; such vertices
    /// are filled greedily since any unused host vertex works.
    isolated_from: usize,
    anchored: Option<(usize, usize)>,
}

impl Plan {
    /// Compiles a plan. With `anchor`, the pair is matched first in the given order.
    pub fn new(pattern: &Graph, anchor: Option<(usize, usize)>) -> Plan {
        let n = pattern.vertex_count();
        let mut placed = vec![false; n];
        let mut weight = vec![0usize; n];
        let mut order = Vec::with_capacity(n);
        let mut place = |v: usize, placed: &mut Vec<bool>, weight: &mut Vec<usize>| {
            placed[v] = true;
            order.push(v);
            for w in pattern.neighbors(v) {
                weight[w] += 1;
            }
        };
        if let Some((a, b)) = anchor {
            place(a, &mut placed, &mut weight);
            place(b, &mut placed, &mut weight);
        }
        let isolated: Vec<usize> = (0..n)
            .filter(|&v| pattern.degree(v) == 0 && !placed[v])
            .collect();
        for &v in &isolated {
            placed[v] = true;
        }
        loop {
            let next = (0..n)
                .filter(|&v| !placed[v])
                .max_by_key(|&v| (weight[v], pattern.degree(v), std::cmp::Reverse(v)));
            match next {
                Some(v) => place(v, &mut placed, &mut weight),
                None => break,
            }
        }
        let isolated_from = order.len();
        order.extend(isolated);

        let mut pos = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let back = order
            .iter()
            .enumerate()
            .map(|(i, &v)| pattern.neighbors(v).filter(|&w| pos[w] < i).collect())
            .collect();
        Plan {
            pattern: pattern.clone(),
            order,
            back,
            isolated_from,
            anchored: anchor,
        }
    }

    pub fn pattern(&self) -> &Graph {
        &self.pattern
    }

    pub fn anchor(&self) -> Option<(usize, usize)> {
        self.anchored
    }

    /// First embedding, if any, with the plan's anchor sent to `host_anchor` (in that orientation).
    pub fn find(
        &self,
        host: &Graph,
        host_anchor: Option<(usize, usize)>,
        scratch: &mut Scratch,
    ) -> Option<Vec<usize>> {
        let mut found = None;
        self.for_each(host, host_anchor, scratch, |m| {
            found = Some(m.to_vec());
            ControlFlow::Break(())
        });
        found
    }

    /// Like [`Plan::find`], but pattern vertex `v` may only land on host
    /// vertex `x` when `colours.0[v] == colours.1[x]`.
    pub fn find_coloured(
        &self,
        host: &Graph,
        host_anchor: Option<(usize, usize)>,
        colours: (&[u32], &[u32]),
        scratch: &mut Scratch,
    ) -> Option<Vec<usize>> {
        let mut found = None;
        self.run(
            host,
            host_anchor,
            Some(colours),
            scratch,
            &mut |m: &[usize]| {
                found = Some(m.to_vec());
                ControlFlow::Break(())
            },
        );
        found
    }

    /// Calls `visit` on every embedding (pattern-indexed images) until it breaks.
    ///
    /// Isolated pattern vertices are placed on the smallest free host vertices
    /// rather than enumerated, so each placement of the rest is visited once.
    ///
    /// Returns `true` if the visitor broke early.
    pub fn for_each<F>(
        &self,
        host: &Graph,
        host_anchor: Option<(usize, usize)>,
        scratch: &mut Scratch,
        mut visit: F,
    ) -> bool
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        self.run(host, host_anchor, None, scratch, &mut visit)
    }

    fn run<F>(
        &self,
        host: &Graph,
        host_anchor: Option<(usize, usize)>,
        colours: Option<(&[u32], &[u32])>,
        scratch: &mut Scratch,
        visit: &mut F,
    ) -> bool
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let p = self.pattern.vertex_count();
        if p > host.vertex_count() {
            return false;
        }
        scratch.prepare(p, host);
        let mut search = Search {
            plan: self,
            host,
            s: scratch,
            colours,
            visit,
        };
        match (self.anchored, host_anchor) {
            (Some((a, b)), Some((u, v))) => {
                if u == v || u >= host.vertex_count() || v >= host.vertex_count() {
                    return false;
                }
                if !search.admits(a, u) || !search.admits(b, v) {
                    return false;
                }
                if self.pattern.has_edge(a, b) && !host.has_edge(u, v) {
                    return false;
                }
                search.assign(a, u);
                search.assign(b, v);
                let stop = search.extend(2);
                search.unassign(b, v);
                search.unassign(a, u);
                stop
            }
            (None, None) => search.extend(0),
            _ => panic!("anchor mismatch between plan and query"),
        }
    }
}

/// Reusable buffers for repeated searches against hosts of similar size.
#[derive(Default, Clone, Debug)]
pub struct Scratch {
    assign: Vec<usize>,
    used: Vec<u64>,
    rows: Vec<u64>,
    words: usize,
}

impl Scratch {
    pub fn new() -> Scratch {
        Scratch::default()
    }

    fn prepare(&mut self, p: usize, host: &Graph) {
        let words = host.words();
        if self.words != words || self.used.len() != words {
            self.words = words;
            self.used = vec![0; words];
        }
        if self.rows.len() < words * p {
            self.rows = vec![0; words * p];
        }
        self.assign.clear();
        self.assign.resize(p, UNSET);
    }
}

struct Search<'a, F> {
    plan: &'a Plan,
    host: &'a Graph,
    s: &'a mut Scratch,
    colours: Option<(&'a [u32], &'a [u32])>,
    visit: &'a mut F,
}

impl<F: FnMut(&[usize]) -> ControlFlow<()>> Search<'_, F> {
    #[inline]
    fn is_used(&self, x: usize) -> bool {
        (self.s.used[x / 64] >> (x % 64)) & 1 == 1
    }

    #[inline]
    fn admits(&self, v: usize, x: usize) -> bool {
        self.host.degree(x) >= self.plan.pattern.degree(v)
            && !self.is_used(x)
            && self.colours.is_none_or(|(cp, ch)| cp[v] == ch[x])
    }

    #[inline]
    fn assign(&mut self, v: usize, x: usize) {
        self.s.assign[v] = x;
        self.s.used[x / 64] |= 1 << (x % 64);
    }

    #[inline]
    fn unassign(&mut self, v: usize, x: usize) {
        self.s.assign[v] = UNSET;
        self.s.used[x / 64] &= !(1 << (x % 64));
    }

    /// Returns `true` when the visitor asked to stop.
    fn extend(&mut self, pos: usize) -> bool {
        let plan = self.plan;
        if pos >= plan.isolated_from {
            return self.fill_isolated(pos);
        }
        let v = plan.order[pos];
        let back = &plan.back[pos];
        if back.is_empty() {
            for x in 0..self.host.vertex_count() {
                if self.admits(v, x) && self.try_at(pos, v, x) {
                    return true;
                }
            }
            return false;
        }
        let pivot = *back
            .iter()
            .min_by_key(|&&w| self.host.degree(self.s.assign[w]))
            .unwrap();
        let px = self.s.assign[pivot];
        if let Some(list) = self.host.small_neighbors(px) {
            for &x in list {
                let x = x as usize;
                if !self.admits(v, x) {
                    continue;
                }
                let ok = back
                    .iter()
                    .all(|&w| w == pivot || self.host.has_edge(self.s.assign[w], x));
                if ok && self.try_at(pos, v, x) {
                    return true;
                }
            }
            return false;
        }
        let words = self.s.words;
        let base = pos * words;
        {
            let (rows, assign, used) = (&mut self.s.rows, &self.s.assign, &self.s.used);
            let buf = &mut rows[base..base + words];
            buf.copy_from_slice(self.host.row(px));
            for &w in back {
                if w != pivot {
                    for (b, r) in buf.iter_mut().zip(self.host.row(assign[w])) {
                        *b &= r;
                    }
                }
            }
            for (b, u) in buf.iter_mut().zip(used) {
                *b &= !u;
            }
        }
        // Candidates are read word by word so the buffer can stay borrowed
        // only briefly while deeper levels use their own slices.
        for wi in 0..words {
            let mut word = self.s.rows[base + wi];
            while word != 0 {
                let x = wi * 64 + word.trailing_zeros() as usize;
                word &= word - 1;
                if self.host.degree(x) >= plan.pattern.degree(v)
                    && self.colours.is_none_or(|(cp, ch)| cp[v] == ch[x])
                    && self.try_at(pos, v, x)
                {
                    return true;
                }
            }
        }
        false
    }

    #[inline]
    fn try_at(&mut self, pos: usize, v: usize, x: usize) -> bool {
        self.assign(v, x);
        let stop = self.extend(pos + 1);
        self.unassign(v, x);
        stop
    }

    fn fill_isolated(&mut self, pos: usize) -> bool {
        let rest = &self.plan.order[pos..];
        let mut taken = Vec::with_capacity(rest.len());
        for &v in rest {
            let hit = (0..self.host.vertex_count()).find(|&x| {
                !self.is_used(x)
                    && !taken.contains(&x)
                    && self.colours.is_none_or(|(cp, ch)| cp[v] == ch[x])
            });
            match hit {
                Some(x) => taken.push(x),
                None => return false,
            }
        }
        for (&v, &x) in rest.iter().zip(&taken) {
            self.s.assign[v] = x;
        }
        let stop = (self.visit)(&self.s.assign).is_break();
        for &v in rest {
            self.s.assign[v] = UNSET;
        }
        stop
    }
}

fn check_pair(g: &Graph, (a, b): (usize, usize), what: &str) -> Result<()> {
    if a >= g.vertex_count() || b >= g.vertex_count() || a == b {
        return Err(Error::input(format!(
            "{what} anchor ({a}, {b}) is not a pair of distinct vertices of a {}-vertex graph",
            g.vertex_count()
        )));
    }
    Ok(())
}

/// Finds an embedding of `pattern` into `host`.
///
/// With an anchor, the pattern pair must land on the host pair in either
/// orientation. The result is deterministic.
pub fn find_embedding(
    pattern: &Graph,
    host: &Graph,
    anchor: Option<Anchor>,
) -> Result<Option<Embedding>> {
    let mut scratch = Scratch::new();
    match anchor {
        None => Ok(Plan::new(pattern, None)
            .find(host, None, &mut scratch)
            .map(Embedding::new)),
        Some(Anchor {
            pattern: pp,
            host: hp,
        }) => {
            check_pair(pattern, pp, "pattern")?;
            check_pair(host, hp, "host")?;
            let plan = Plan::new(pattern, Some(pp));
            let hit = plan
                .find(host, Some(hp), &mut scratch)
                .or_else(|| plan.find(host, Some((hp.1, hp.0)), &mut scratch));
            Ok(hit.map(Embedding::new))
        }
    }
}

/// Visits every embedding of `pattern` into `host` until `visit` breaks.
pub fn for_each_embedding<F>(pattern: &Graph, host: &Graph, visit: F) -> bool
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    Plan::new(pattern, None).for_each(host, None, &mut Scratch::new(), visit)
}

/// Number of embeddings of `pattern` in `host`, counting isolated pattern
/// vertices as in [`Plan::for_each`].
pub fn count_embeddings(pattern: &Graph, host: &Graph) -> usize {
    let mut count = 0;
    for_each_embedding(pattern, host, |_| {
        count += 1;
        ControlFlow::Continue(())
    });
    count
}

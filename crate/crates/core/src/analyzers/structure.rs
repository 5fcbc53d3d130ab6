use crate::graphcore::{Edge, Graph};

/// True if no deletion of at most `l` vertices plus at most one edge
/// disconnects `h`. Isolated vertices left behind count as components, and a
/// graph with fewer than two vertices is connected.
pub fn is_l1_inseparable(h: &Graph, l: usize) -> bool {
    let n = h.vertex_count();
    let mut removed = vec![false; n];
    !separates(h, l, 0, &mut removed)
}

/// Tries every vertex subset (in increasing order, size at most `budget`)
/// together with every single-edge deletion.
fn separates(h: &Graph, budget: usize, from: usize, removed: &mut Vec<bool>) -> bool {
    if disconnected_after(h, removed, None) {
        return true;
    }
    let keep: Vec<usize> = (0..h.vertex_count()).filter(|&v| !removed[v]).collect();
    for (i, &a) in keep.iter().enumerate() {
        for &b in &keep[i + 1..] {
            if h.has_edge(a, b) && disconnected_after(h, removed, Some((a, b))) {
                return true;
            }
        }
    }
    if budget == 0 {
        return false;
    }
    for v in from..h.vertex_count() {
        removed[v] = true;
        let hit = separates(h, budget - 1, v + 1, removed);
        removed[v] = false;
        if hit {
            return true;
        }
    }
    false
}

fn disconnected_after(h: &Graph, removed: &[bool], cut: Option<Edge>) -> bool {
    let alive: Vec<usize> = (0..h.vertex_count()).filter(|&v| !removed[v]).collect();
    let Some(&root) = alive.first() else {
        return false;
    };
    let mut seen = vec![false; h.vertex_count()];
    seen[root] = true;
    let mut stack = vec![root];
    let mut reached = 1;
    while let Some(x) = stack.pop() {
        for y in h.neighbors(x) {
            if removed[y]
                || seen[y]
                || cut.is_some_and(|(a, b)| (x, y) == (a, b) || (y, x) == (a, b))
            {
                continue;
            }
            seen[y] = true;
            reached += 1;
            stack.push(y);
        }
    }
    reached < alive.len()
}

/// Default edge cap for [`is_behrendian`].
pub const BEHRENDIAN_EDGE_CAP: usize = 10;

/// Answer of the Behrendian check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Behrendian {
    Yes,
    /// A non-monochromatic colouring (colour per edge of `F.edges()`) with no
    /// non-monochromatic cycle made of two or three monochromatic paths.
    No {
        colouring: Vec<usize>,
    },
    /// More edges than the cap allows.
    Unknown,
}

/// Decides whether every non-monochromatic edge colouring of `f` has a
/// non-monochromatic cycle that is the union of two or three monochromatic
/// paths. Colourings are enumerated as set partitions of the edge set, so
/// this is exhaustive up to `edge_cap` edges and `Unknown` beyond.
pub fn is_behrendian(f: &Graph, edge_cap: usize) -> Behrendian {
    let edges = f.edges();
    if edges.len() > edge_cap {
        return Behrendian::Unknown;
    }
    let cycles = edge_cycles(f, &edges);
    let mut colour = vec![0usize; edges.len()];
    match partitions(&mut colour, 1, 1, &mut |c| {
        let used = c.iter().max().map_or(0, |m| m + 1);
        used < 2
            || cycles
                .iter()
                .any(|cyc| (2..=3).contains(&colour_runs(cyc, c)))
    }) {
        Some(colouring) => Behrendian::No { colouring },
        None => Behrendian::Yes,
    }
}

/// Restricted-growth enumeration of set partitions; returns the first one the
/// predicate rejects.
fn partitions(
    c: &mut Vec<usize>,
    i: usize,
    blocks: usize,
    ok: &mut dyn FnMut(&[usize]) -> bool,
) -> Option<Vec<usize>> {
    if c.is_empty() {
        return None;
    }
    if i == c.len() {
        return if ok(c) { None } else { Some(c.clone()) };
    }
    for b in 0..=blocks {
        c[i] = b;
        let next = if b == blocks { blocks + 1 } else { blocks };
        if let Some(bad) = partitions(c, i + 1, next, ok) {
            return Some(bad);
        }
    }
    c[i] = 0;
    None
}

/// Number of maximal monochromatic arcs around a cycle given as edge indices
/// in cyclic order; 1 for a monochromatic cycle.
fn colour_runs(cycle: &[usize], colour: &[usize]) -> usize {
    let k = cycle.len();
    let changes = (0..k)
        .filter(|&i| colour[cycle[i]] != colour[cycle[(i + 1) % k]])
        .count();
    changes.max(1)
}

/// Every cycle of `f` once, as edge indices in cyclic order.
fn edge_cycles(f: &Graph, edges: &[Edge]) -> Vec<Vec<usize>> {
    let index = |a: usize, b: usize| {
        edges
            .binary_search(&(a.min(b), a.max(b)))
            .expect("edge of f")
    };
    let mut out = Vec::new();
    let n = f.vertex_count();
    for s in 0..n {
        let mut path = vec![s];
        let mut on_path = vec![false; n];
        on_path[s] = true;
        walk(f, s, &mut path, &mut on_path, &mut |p: &[usize]| {
            if p.len() >= 3 && p[1] < p[p.len() - 1] {
                let k = p.len();
                out.push((0..k).map(|i| index(p[i], p[(i + 1) % k])).collect());
            }
        });
    }
    out
}

/// Extends simple paths from `s` through vertices larger than `s`, reporting
/// each path whose end is adjacent to `s`.
fn walk(
    f: &Graph,
    s: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    report: &mut dyn FnMut(&[usize]),
) {
    let last = *path.last().unwrap();
    if path.len() >= 3 && f.has_edge(last, s) {
        report(path);
    }
    for y in f.neighbors(last) {
        if y > s && !on_path[y] {
            on_path[y] = true;
            path.push(y);
            walk(f, s, path, on_path, report);
            path.pop();
            on_path[y] = false;
        }
    }
}

use std::collections::VecDeque;

use super::graph::Graph;

/// Length of a shortest cycle, or `None` for a forest.
///
/// Breadth-first search from every vertex; a non-tree edge `xy` met from
/// root `r` closes a walk of length `d(x) + d(y) + 1`, and the minimum over
/// all roots is exactly the girth.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.vertex_count();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut touched = Vec::new();
    for root in 0..n {
        if best == Some(3) {
            break;
        }
        for &v in &touched {
            dist[v] = usize::MAX;
        }
        touched.clear();
        dist[root] = 0;
        parent[root] = usize::MAX;
        touched.push(root);
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            if let Some(b) = best {
                if 2 * dist[x] + 1 >= b {
                    break;
                }
            }
            for y in g.neighbors(x) {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    touched.push(y);
                    queue.push_back(y);
                } else if parent[x] != y {
                    let len = dist[x] + dist[y] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn petersen() -> Graph {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::new(10, e).unwrap()
    }

    #[test]
    fn known_girths() {
        let c5 = Graph::new(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        assert_eq!(girth(&c5), Some(5));
        assert_eq!(girth(&petersen()), Some(5));
        assert_eq!(girth(&Graph::complete(4)), Some(3));
        let tree = Graph::new(6, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)]).unwrap();
        assert_eq!(girth(&tree), None);
        assert_eq!(girth(&Graph::empty(0)), None);
    }
}

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graphcore::{girth, Graph};
use crate::{Error, Result};

/// Full restarts before giving up.
const ATTEMPTS: usize = 32;

/// A bipartite graph with parts `X = 0..n` and `Y = n..n + 2kn`, every
/// `Y`-vertex of degree exactly `d` and girth at least `k + 1`.
///
/// `Y`-vertices are processed in order; each draws its neighbours from a
/// shuffled `X`, skipping any `x` already within distance `k - 1`, which
/// would close a cycle of length at most `k`. A `Y`-vertex that runs out of
/// candidates restarts the whole attempt with fresh randomness.
pub fn high_girth_bipartite(n: usize, k: usize, d: usize, seed: u64) -> Result<Graph> {
    if d > n {
        return Err(Error::input(format!(
            "degree {d} exceeds the {n} vertices of X"
        )));
    }
    let y_count = 2 * k * n;
    let total = n + y_count;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut xs: Vec<usize> = (0..n).collect();
    'attempt: for _ in 0..ATTEMPTS {
        let mut g = Graph::empty(total);
        for y in n..total {
            xs.shuffle(&mut rng);
            let mut chosen = 0;
            let mut dist = g.distances_from(y);
            for &x in &xs {
                if chosen == d {
                    break;
                }
                if dist[x].is_none_or(|dist| dist >= k) {
                    g.add_edge(x, y);
                    chosen += 1;
                    dist = g.distances_from(y);
                }
            }
            if chosen < d {
                continue 'attempt;
            }
        }
        if girth(&g).is_some_and(|c| c <= k) {
            return Err(Error::Internal(
                "generated bipartite graph has a short cycle".into(),
            ));
        }
        return Ok(g);
    }
    Err(Error::Construction(format!(
        "no girth-{} bipartite graph with Y-degree {d} found on |X| = {n} after {ATTEMPTS} attempts; try a larger n",
        k + 1
    )))
}

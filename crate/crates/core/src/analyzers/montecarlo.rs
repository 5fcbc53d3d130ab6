use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::engine::{percolates, InfectionRule};
use crate::graphcore::Graph;
use crate::{Error, Result};

/// Two-sided 95% normal quantile used for the Wilson interval.
pub const Z_95: f64 = 1.959964;

/// Fraction of percolating samples with a Wilson score interval.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Estimate {
    pub p: f64,
    pub trials: usize,
    pub successes: usize,
    pub estimate: f64,
    pub lower: f64,
    pub upper: f64,
    pub confidence: f64,
}

/// Wilson score interval for `successes` out of `trials` at normal quantile `z`.
pub fn wilson_interval(successes: usize, trials: usize, z: f64) -> (f64, f64) {
    let n = trials as f64;
    let phat = successes as f64 / n;
    let z2 = z * z;
    let centre = (phat + z2 / (2.0 * n)) / (1.0 + z2 / n);
    let half = z * (phat * (1.0 - phat) / n + z2 / (4.0 * n * n)).sqrt() / (1.0 + z2 / n);
    // Rounding can push a bound past phat when it sits at 0 or 1.
    (
        (centre - half).clamp(0.0, phat),
        (centre + half).clamp(phat, 1.0),
    )
}

/// A sample of `G(n, p)` drawn from `rng`, pairs visited as `(0,1), (0,2), …`.
pub fn random_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// The generator for trial `index` under `seed`: ChaCha8 seeded with `seed`
/// on stream `index`, so trials are independent of scheduling.
pub fn trial_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Estimates the probability that `G(n, p)` percolates under `rule`.
pub fn percolation_probability(
    rule: &InfectionRule,
    n: usize,
    p: f64,
    trials: usize,
    seed: u64,
) -> Result<Estimate> {
    if trials == 0 {
        return Err(Error::input("need at least one trial"));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::input(format!(
            "edge probability {p} is outside [0, 1]"
        )));
    }
    let successes = (0..trials as u64)
        .into_par_iter()
        .filter(|&t| percolates(&random_graph(n, p, &mut trial_rng(seed, t)), rule))
        .count();
    let (lower, upper) = wilson_interval(successes, trials, Z_95);
    Ok(Estimate {
        p,
        trials,
        successes,
        estimate: successes as f64 / trials as f64,
        lower,
        upper,
        confidence: 0.95,
    })
}

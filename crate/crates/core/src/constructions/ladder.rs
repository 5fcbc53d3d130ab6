use super::chain::Chain;
use crate::analyzers::{verify_chain_conditions, Condition};
use crate::engine::InfectionRule;
use crate::graphcore::{Edge, Embedding, Graph};
use crate::{Error, Result};

/// Spacing between consecutive slopes in [`ladder_k6_chain`].
pub const SLOPE_STEP: usize = 4;

/// Fresh vertices introduced by each linking chain of the ladder.
pub const LADDER_LINK_FRESH: usize = 10;

/// Ladder `K_6`-chain with slopes `0, 4, 8, …` (`slope_count` of them).
pub fn ladder_k6_chain(segment_length: usize, slope_count: usize) -> Result<Chain> {
    if slope_count == 0 {
        return Err(Error::input("need at least one slope"));
    }
    let slopes: Vec<usize> = (0..slope_count).map(|i| SLOPE_STEP * i).collect();
    ladder_k6_chain_with_slopes(segment_length, &slopes)
}

/// Builds the ladder chain for arbitrary slopes and verifies `(†′)` and `(*)`.
///
/// Left vertices come first: `l_0, …, l_{2t}` for segment length `t`, with
/// triangle `j` on `l_{2j-2}, l_{2j-1}, l_{2j}`. Right vertices `r_0, r_1, …`
/// follow, with triangles laid out the same way. The segment for slope `a` has
/// copies `T^L_i ∪ T^R_{i+a}` (a `K_6`) for `i = 1..=t` and designated edges
/// `l_{2i} r_{2i+2a}`. Segments are taken in decreasing slope order, so the
/// last edge of one segment never meets the entry edge `l_0 r_{2a'}` of the
/// next, and are joined by simple `K_6`-chains of length 3 whose ten inner
/// vertices are fresh.
pub fn ladder_k6_chain_with_slopes(segment_length: usize, slopes: &[usize]) -> Result<Chain> {
    let chain = ladder_unchecked(segment_length, slopes)?;
    let report = verify_chain_conditions(&chain, &[Condition::DaggerPrime, Condition::Star]);
    match report.first_failure() {
        None => Ok(chain),
        Some(r) => Err(Error::verification(
            r.condition,
            r.witness
                .as_ref()
                .map_or_else(String::new, |w| w.to_string()),
        )),
    }
}

/// The ladder chain without running the condition checks.
pub fn ladder_unchecked(segment_length: usize, slopes: &[usize]) -> Result<Chain> {
    let t = segment_length;
    if t == 0 || slopes.is_empty() {
        return Err(Error::input(
            "ladder needs a positive segment length and at least one slope",
        ));
    }
    let mut order = slopes.to_vec();
    order.sort_unstable_by(|a, b| b.cmp(a));
    if order.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::input("slopes must be distinct"));
    }
    let max_slope = order[0];
    let left = 2 * t + 1;
    let right = 2 * (t + max_slope) + 1;
    let l = |i: usize| i;
    let r = |i: usize| left + i;
    let mut copies = Vec::new();
    let mut designated: Vec<Edge> = Vec::new();
    let mut next = left + right;
    for (s, &a) in order.iter().enumerate() {
        if s > 0 {
            let prev = designated[designated.len() - 1];
            let entry = (l(0), r(2 * a));
            let z: Vec<usize> = [prev.0, prev.1]
                .into_iter()
                .chain(next..next + LADDER_LINK_FRESH)
                .chain([entry.0, entry.1])
                .collect();
            next += LADDER_LINK_FRESH;
            for c in 0..3 {
                copies.push(Embedding::new(z[4 * c..4 * c + 6].to_vec()));
                designated.push((z[4 * c + 4], z[4 * c + 5]));
            }
        }
        for i in 1..=t {
            let j = i + a;
            let map = vec![
                l(2 * i - 2),
                l(2 * i - 1),
                l(2 * i),
                r(2 * j - 2),
                r(2 * j - 1),
                r(2 * j),
            ];
            copies.push(Embedding::new(map));
            designated.push((l(2 * i), r(2 * j)));
        }
    }
    let rule = InfectionRule::new("clique 6", Graph::complete(6))?;
    Chain::new(rule, next, copies, designated)
}

use super::chain::Chain;
use crate::arithmetic::{verify_solution_free, DilationSet};
use crate::engine::InfectionRule;
use crate::graphcore::{edge, Edge, Embedding, Graph};
use crate::{Error, Result};

/// Fresh vertices introduced by each linking chain.
pub const LINK_FRESH: usize = 7;

/// `τ0 = ⌊(p - 3) / 3⌋`, the length of one dilation chain.
pub fn dilation_segment_length(p: u64) -> usize {
    (p.saturating_sub(3) / 3) as usize
}

/// The concatenation of the dilation `K_5`-chains for `a_1 < a_2 < …` in `A`,
/// joined by linking chains.
///
/// Residue `x ∈ {1, …, p-1}` is vertex `x - 1`. Copy `i` of the chain for `a`
/// is `{a(3i-2), …, a(3i+2)}` with designated edge `a(3i+1) a(3i+2)`. The
/// linking chain after the chain for `a_j` is a simple `K_5`-chain of length 3
/// whose first copy holds the last designated edge of that chain and whose
/// last designated edge is `a_{j+1} · {1, 2}`; its other seven vertices are
/// fresh and numbered after all earlier ones.
pub fn dilation_k5_assembly(p: u64, set: &DilationSet) -> Result<Chain> {
    if set.p() != p {
        return Err(Error::input(format!(
            "set is taken mod {} but p = {p}",
            set.p()
        )));
    }
    if let Err(v) = verify_solution_free(set) {
        return Err(Error::input(format!(
            "dilation set is not relation-free: {v}"
        )));
    }
    if set.coeff_bound() < 4 {
        return Err(Error::input(
            "dilation set must be verified at coefficient bound 4",
        ));
    }
    if set.is_empty() {
        return Err(Error::input("dilation set is empty"));
    }
    let t0 = dilation_segment_length(p);
    if t0 == 0 {
        return Err(Error::input(format!(
            "p = {p} is too small for a dilation chain"
        )));
    }
    let w = |a: u64, x: u64| ((a * (x % p)) % p) as usize - 1;
    let f = |a: u64, i: u64| edge(w(a, 3 * i + 1), w(a, 3 * i + 2));
    let rule = InfectionRule::new("clique 5", Graph::complete(5))?;
    let mut copies = Vec::new();
    let mut designated: Vec<Edge> = Vec::new();
    let mut next = p as usize - 1;
    for (j, &a) in set.elements().iter().enumerate() {
        if j > 0 {
            let (prev, start) = (designated[designated.len() - 1], f(a, 0));
            if [prev.0, prev.1]
                .iter()
                .any(|v| *v == start.0 || *v == start.1)
            {
                return Err(Error::Construction(format!(
                    "linking chain {j} is not simple: {prev:?} meets {start:?}"
                )));
            }
            let z: Vec<usize> = [prev.0, prev.1]
                .into_iter()
                .chain(next..next + LINK_FRESH)
                .chain([start.0, start.1])
                .collect();
            next += LINK_FRESH;
            for c in 0..3 {
                copies.push(Embedding::new(z[3 * c..3 * c + 5].to_vec()));
                designated.push((z[3 * c + 3], z[3 * c + 4]));
            }
        }
        for i in 1..=t0 as u64 {
            copies.push(Embedding::new(
                (3 * i - 2..=3 * i + 2).map(|x| w(a, x)).collect(),
            ));
            designated.push(f(a, i));
        }
    }
    Chain::new(rule, next, copies, designated)
}

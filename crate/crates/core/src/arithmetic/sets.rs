use std::collections::BTreeMap;

use super::{is_prime, modpow, nonzero_coeffs, residue, DilationSet};
use crate::{Error, Result};

/// Tracks which residues can still join a relation-free set.
///
/// `blocked[x]` is set exactly when adding `x` to `members` would create a
/// non-trivial relation, so a greedy or backtracking search that only adds
/// unblocked elements never needs a full re-verification.
#[derive(Clone)]
struct Blocker {
    p: u64,
    c: u32,
    inv: Vec<u64>,
    blocked: Vec<bool>,
    members: Vec<u64>,
}

impl Blocker {
    fn new(p: u64, c: u32) -> Blocker {
        let inv = (0..=2 * c as u64)
            .map(|k| {
                if k % p == 0 {
                    0
                } else {
                    modpow(k % p, p - 2, p)
                }
            })
            .collect();
        let mut blocked = vec![false; p as usize];
        blocked[0] = true;
        if p <= 3 * c as u64 {
            // Three equal elements already admit a sum that is a non-zero multiple of p.
            blocked.iter_mut().for_each(|b| *b = true);
        }
        Blocker {
            p,
            c,
            inv,
            blocked,
            members: Vec::new(),
        }
    }

    /// `t / k (mod p)` for a signed coefficient `k`.
    fn div(&self, t: u64, k: i64) -> Option<u64> {
        let m = k.unsigned_abs();
        if m.is_multiple_of(self.p) {
            return None;
        }
        let q = t * self.inv[m as usize] % self.p;
        Some(if k < 0 { (self.p - q) % self.p } else { q })
    }

    fn block(&mut self, x: Option<u64>) {
        if let Some(x) = x {
            self.blocked[x as usize] = true;
        }
    }

    fn add(&mut self, y: u64) {
        let (p, c) = (self.p, self.c);
        let twice: Vec<i64> = (-2 * c as i64..=2 * c as i64).filter(|&b| b != 0).collect();
        // Relations between y and one new element x.
        for b in twice.clone() {
            for a in nonzero_coeffs(c) {
                let t = residue(-(b * y as i64), p);
                self.block(self.div(t, a));
                let t = residue(-(a * y as i64), p);
                self.block(self.div(t, b));
            }
        }
        // Relations among y, an existing member z and a new element x.
        for i in 0..self.members.len() {
            let z = self.members[i];
            for a1 in nonzero_coeffs(c) {
                for a2 in nonzero_coeffs(c) {
                    let t = residue(-(a1 * y as i64 + a2 * z as i64), p);
                    for a3 in nonzero_coeffs(c) {
                        self.block(self.div(t, a3));
                    }
                }
            }
        }
        self.blocked[y as usize] = true;
        self.members.push(y);
    }

    fn free(&self, x: u64) -> bool {
        !self.blocked[x as usize]
    }
}

/// A maximum-size relation-free subset of `{1, …, p-1}`, lexicographically
/// first among those of maximum size. Branch and bound; exponential in the
/// answer size, so practical for `p` up to about 200 at `c = 4` (smaller `c`
/// admits much larger sets and is slower).
pub fn exhaustive_best_set(p: u64, c: u32) -> Result<DilationSet> {
    if !is_prime(p) {
        return Err(Error::input(format!("modulus {p} is not prime")));
    }
    let mut best = Vec::new();
    let root = Blocker::new(p, c);
    let candidates: Vec<u64> = (1..p).filter(|&x| root.free(x)).collect();
    grow(&root, &candidates, &mut Vec::new(), &mut best);
    let set = DilationSet::new(p, best, c)?;
    if !set.verified() {
        return Err(Error::Internal(format!(
            "exhaustive search produced an unverified set mod {p}"
        )));
    }
    Ok(set)
}

fn grow(state: &Blocker, candidates: &[u64], current: &mut Vec<u64>, best: &mut Vec<u64>) {
    if current.len() > best.len() {
        *best = current.clone();
    }
    for (i, &x) in candidates.iter().enumerate() {
        if current.len() + candidates.len() - i <= best.len() {
            return;
        }
        let mut next = state.clone();
        next.add(x);
        let rest: Vec<u64> = candidates[i + 1..]
            .iter()
            .copied()
            .filter(|&y| next.free(y))
            .collect();
        current.push(x);
        grow(&next, &rest, current, best);
        current.pop();
    }
}

/// Parameters of one sphere-layer candidate set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SphereParams {
    /// Digits range over `0..digits`.
    pub digits: u64,
    pub dimension: u32,
    pub base: u64,
    /// Squared radius of the chosen layer.
    pub radius: u64,
}

/// Digit vectors on one sphere `Σ x_i² = r`, read in a base, then filtered.
///
/// The grid over digit range, dimension and base is scanned in a fixed order;
/// for each combination the three most populated layers are filtered
/// greedily and the largest surviving set wins (first found on ties).
pub fn behrend_sphere_set(p: u64, c: u32) -> Result<(DilationSet, SphereParams)> {
    if !is_prime(p) {
        return Err(Error::input(format!("modulus {p} is not prime")));
    }
    let mut best: Option<(Vec<u64>, SphereParams)> = None;
    for digits in 2..=8u64 {
        let no_carry = 6 * c as u64 * (digits - 1) + 1;
        for base in digits..=no_carry {
            for dimension in 1..=20u32 {
                let Some(top) = base.checked_pow(dimension) else {
                    break;
                };
                if top > p || digits.pow(dimension) > 1 << 18 {
                    break;
                }
                let mut layers: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
                for code in 1..digits.pow(dimension) {
                    let (mut k, mut value, mut scale, mut r) = (code, 0, 1, 0);
                    for _ in 0..dimension {
                        let d = k % digits;
                        k /= digits;
                        value += d * scale;
                        scale *= base;
                        r += d * d;
                    }
                    if value < p {
                        layers.entry(r).or_default().push(value);
                    }
                }
                let mut ranked: Vec<(u64, Vec<u64>)> = layers.into_iter().collect();
                ranked.sort_by(|a, b| b.1.len().cmp(&a.1.len()).then(a.0.cmp(&b.0)));
                for (radius, mut layer) in ranked.into_iter().take(3) {
                    if best.as_ref().is_some_and(|(b, _)| layer.len() <= b.len()) {
                        continue;
                    }
                    layer.sort_unstable();
                    let mut blocker = Blocker::new(p, c);
                    let mut kept = Vec::new();
                    for x in layer {
                        if blocker.free(x) {
                            blocker.add(x);
                            kept.push(x);
                        }
                    }
                    if best.as_ref().is_none_or(|(b, _)| kept.len() > b.len()) {
                        best = Some((
                            kept,
                            SphereParams {
                                digits,
                                dimension,
                                base,
                                radius,
                            },
                        ));
                    }
                }
            }
        }
    }
    match best {
        Some((elements, params)) if !elements.is_empty() => {
            let set = DilationSet::new(p, elements, c)?;
            if !set.verified() {
                return Err(Error::Internal(format!("sphere filter left a relation mod {p}")));
            }
            Ok((set, params))
        }
        _ => Err(Error::Construction(format!(
            "no sphere layer survives filtering mod {p} at coefficient bound {c}; try exhaustive_best_set"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arithmetic::find_violation;

    #[test]
    fn blocker_matches_brute_force() {
        for p in [13u64, 29, 61] {
            let mut b = Blocker::new(p, 4);
            let mut set: Vec<u64> = Vec::new();
            for x in 1..p {
                let mut trial = set.clone();
                trial.push(x);
                trial.sort();
                let ok = find_violation(p, &trial, 4).is_none();
                assert_eq!(b.free(x), ok, "p = {p}, set = {set:?}, x = {x}");
                if ok {
                    b.add(x);
                    set.push(x);
                }
            }
        }
    }

    #[test]
    fn exhaustive_small_primes() {
        let s = exhaustive_best_set(7, 4).unwrap();
        assert!(s.verified());
        assert!(s.is_empty());
        let s = exhaustive_best_set(61, 4).unwrap();
        assert!(s.verified());
        assert!(s.len() >= 2);
    }
}

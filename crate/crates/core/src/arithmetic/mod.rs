//! Subsets of `Z_p` with no non-trivial bounded-coefficient relation among
//! at most three elements.
//!
//! A relation is `α1·a1 + α2·a2 + α3·a3 ≡ 0 (mod p)` with `a_i ∈ A` (repeats
//! allowed) and `|α_i| ≤ c`. It is trivial when `Σα = 0` and all elements
//! with a non-zero coefficient coincide.

mod sets;

pub use sets::{behrend_sphere_set, exhaustive_best_set, SphereParams};

use std::fmt::{self, Write};

use crate::{Error, Result};

/// Default coefficient bound, the one needed for dilation `K5`-chains.
pub const DEFAULT_COEFF_BOUND: u32 = 4;

/// A non-trivial relation `Σ alpha[i]·elements[i] ≡ 0 (mod p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Violation {
    pub alpha: [i64; 3],
    pub elements: [u64; 3],
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.alpha;
        let [x, y, z] = self.elements;
        write!(f, "({a})*{x} + ({b})*{y} + ({c})*{z} = 0")
    }
}

/// A set `A ⊆ Z_p \ {0}` with its coefficient bound and verification status.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DilationSet {
    p: u64,
    elements: Vec<u64>,
    coeff_bound: u32,
    verified: bool,
}

impl DilationSet {
    /// Validates and verifies a set; elements are sorted and deduplicated.
    pub fn new(
        p: u64,
        elements: impl IntoIterator<Item = u64>,
        coeff_bound: u32,
    ) -> Result<DilationSet> {
        if !is_prime(p) {
            return Err(Error::input(format!("modulus {p} is not prime")));
        }
        if coeff_bound == 0 {
            return Err(Error::input("coefficient bound must be positive"));
        }
        let mut elements: Vec<u64> = elements.into_iter().collect();
        if let Some(&bad) = elements.iter().find(|&&x| x == 0 || x >= p) {
            return Err(Error::input(format!("element {bad} is not in 1..{p}")));
        }
        elements.sort_unstable();
        elements.dedup();
        let verified = find_violation(p, &elements, coeff_bound).is_none();
        Ok(DilationSet {
            p,
            elements,
            coeff_bound,
            verified,
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn coeff_bound(&self) -> u32 {
        self.coeff_bound
    }

    pub fn verified(&self) -> bool {
        self.verified
    }

    /// `"p c"` header, then the sorted elements one per line.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.p, self.coeff_bound);
        for x in &self.elements {
            writeln!(out, "{x}").unwrap();
        }
        out
    }

    pub fn from_text(text: &str) -> Result<DilationSet> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hl, header) = lines
            .next()
            .ok_or_else(|| Error::parse(1, "missing \"p c\" header"))?;
        let nums: Vec<&str> = header.split_whitespace().collect();
        let [p, c] = nums[..] else {
            return Err(Error::parse(hl, "expected \"p c\""));
        };
        let p: u64 = p
            .parse()
            .map_err(|_| Error::parse(hl, format!("bad modulus \"{p}\"")))?;
        let c: u32 = c
            .parse()
            .map_err(|_| Error::parse(hl, format!("bad coefficient bound \"{c}\"")))?;
        let mut elements = Vec::new();
        for (line, l) in lines {
            elements.push(
                l.parse()
                    .map_err(|_| Error::parse(line, format!("bad element \"{l}\"")))?,
            );
        }
        DilationSet::new(p, elements, c)
    }
}

/// Checks the set by brute force; `Ok` means every bounded relation is trivial.
pub fn verify_solution_free(s: &DilationSet) -> std::result::Result<(), Violation> {
    match find_violation(s.p, &s.elements, s.coeff_bound) {
        None => Ok(()),
        Some(v) => Err(v),
    }
}

pub fn is_prime(p: u64) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

pub(crate) fn modpow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

#[inline]
pub(crate) fn residue(x: i64, p: u64) -> u64 {
    x.rem_euclid(p as i64) as u64
}

/// Coefficients `c, c-1, …, 1, -1, …, -c`.
pub(crate) fn nonzero_coeffs(c: u32) -> impl Iterator<Item = i64> + Clone {
    let c = c as i64;
    (1..=c).rev().chain((-c..=-1).rev())
}

/// Searches relations in a fixed order: two distinct elements, three distinct
/// elements, an element used twice with another once, then a single element.
pub(crate) fn find_violation(p: u64, a: &[u64], c: u32) -> Option<Violation> {
    let pi = p as i64;
    let members: std::collections::HashSet<u64> = a.iter().copied().collect();
    let inv: Vec<u64> = (0..=c as u64)
        .map(|k| {
            if k == 0 || k % p == 0 {
                0
            } else {
                modpow(k % p, p - 2, p)
            }
        })
        .collect();
    let div = |t: u64, alpha: i64| -> Option<u64> {
        let k = alpha.unsigned_abs();
        if k.is_multiple_of(p) {
            return None;
        }
        let q = t * inv[k as usize] % p;
        Some(if alpha < 0 { (p - q) % p } else { q })
    };
    for (i, &x) in a.iter().enumerate() {
        for &y in &a[i + 1..] {
            for a1 in nonzero_coeffs(c) {
                for a2 in nonzero_coeffs(c) {
                    if (a1 * x as i64 + a2 * y as i64) % pi == 0 {
                        return Some(Violation {
                            alpha: [a1, a2, 0],
                            elements: [x, y, y],
                        });
                    }
                }
            }
        }
    }
    for (i, &x) in a.iter().enumerate() {
        for &y in &a[i + 1..] {
            for a1 in nonzero_coeffs(c) {
                for a2 in nonzero_coeffs(c) {
                    let t = residue(-(a1 * x as i64 + a2 * y as i64), p);
                    for a3 in nonzero_coeffs(c) {
                        if let Some(z) = div(t, a3) {
                            if z != x && z != y && members.contains(&z) {
                                return Some(Violation {
                                    alpha: [a1, a2, a3],
                                    elements: [x, y, z],
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    let all = || (-(c as i64)..=c as i64).rev();
    for &x in a {
        for &y in a {
            if x == y {
                continue;
            }
            for a1 in nonzero_coeffs(c) {
                for a2 in all() {
                    for a3 in nonzero_coeffs(c) {
                        if ((a1 + a2) * x as i64 + a3 * y as i64) % pi == 0 {
                            return Some(Violation {
                                alpha: [a1, a2, a3],
                                elements: [x, x, y],
                            });
                        }
                    }
                }
            }
        }
    }
    if let Some(&x) = a.first() {
        for a1 in all() {
            for a2 in all() {
                for a3 in all() {
                    let s = a1 + a2 + a3;
                    if s != 0 && s % pi == 0 {
                        return Some(Violation {
                            alpha: [a1, a2, a3],
                            elements: [x, x, x],
                        });
                    }
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_violation_at_seven() {
        let s = DilationSet::new(7, [1, 2], 4).unwrap();
        assert!(!s.verified());
        let v = verify_solution_free(&s).unwrap_err();
        assert_eq!(v.alpha, [4, -2, 0]);
        assert_eq!(&v.elements[..2], &[1, 2]);
    }

    #[test]
    fn empty_set_is_free() {
        assert!(DilationSet::new(7, [], 4).unwrap().verified());
    }

    #[test]
    fn singleton_needs_p_above_three_c() {
        assert!(!DilationSet::new(11, [1], 4).unwrap().verified());
        assert!(DilationSet::new(13, [1], 4).unwrap().verified());
    }

    #[test]
    fn text_round_trip_and_errors() {
        let s = DilationSet::new(61, [5, 3], 4).unwrap();
        assert_eq!(s.to_text(), "61 4\n3\n5\n");
        assert_eq!(DilationSet::from_text(&s.to_text()).unwrap(), s);
        assert!(DilationSet::new(12, [1], 4).is_err());
        assert!(DilationSet::new(7, [7], 4).is_err());
        assert!(matches!(
            DilationSet::from_text("7 4\nx\n"),
            Err(Error::Parse { line: 2, .. })
        ));
    }
}

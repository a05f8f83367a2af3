//! Monomials as dense exponent tuples with a cached total degree.

use serde::{Deserialize, Serialize};
use std::cmp::Ordering;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Monomial {
    exps: Vec<u32>,
    degree: u32,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    /// The monomial 1 in an n-variable ring.
    pub fn one(n: usize) -> Self {
        Monomial {
            exps: vec![0; n],
            degree: 0,
        }
    }

    /// x_i^e in an n-variable ring.
    pub fn var_power(n: usize, i: usize, e: u32) -> Self {
        let mut exps = vec![0; n];
        exps[i] = e;
        Monomial { exps, degree: e }
    }

    pub fn num_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// Indices of the variables that actually appear.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a + b)
            .collect();
        Monomial {
            exps,
            degree: self.degree + other.degree,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.len() == other.exps.len()
            && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// other / self, if self divides other.
    pub fn divide_into(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps = other
            .exps
            .iter()
            .zip(&self.exps)
            .map(|(a, b)| a - b)
            .collect();
        Some(Monomial::new(exps))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.max(b))
            .collect();
        Monomial::new(exps)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.min(b))
            .collect();
        Monomial::new(exps)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Append a new variable with exponent e (used when passing to R[t]).
    pub fn extend(&self, e: u32) -> Monomial {
        let mut exps = self.exps.clone();
        exps.push(e);
        Monomial {
            exps,
            degree: self.degree + e,
        }
    }

    /// Drop the last variable (dehomogenization direction).
    pub fn truncate(&self) -> Monomial {
        let mut exps = self.exps.clone();
        let last = exps.pop().unwrap_or(0);
        Monomial {
            exps,
            degree: self.degree - last,
        }
    }
}

// Storage order: plain exponent-wise lexicographic comparison. Polynomials
// keep their term lists sorted descending under this order; term orders for
// actual Gröbner computations live in `order`.
impl Ord for Monomial {
    fn cmp(&self, other: &Monomial) -> Ordering {
        self.exps.cmp(&other.exps)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Monomial) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All monomials of total degree exactly `d` in `n` variables, in a fixed
/// deterministic order.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    if n == 0 {
        return if d == 0 { vec![Monomial::one(0)] } else { vec![] };
    }
    let mut out = Vec::new();
    let mut current = vec![0u32; n];
    fill(&mut out, &mut current, 0, d);
    out
}

fn fill(out: &mut Vec<Monomial>, current: &mut Vec<u32>, pos: usize, remaining: u32) {
    let n = current.len();
    if pos == n - 1 {
        current[pos] = remaining;
        out.push(Monomial::new(current.clone()));
        current[pos] = 0;
        return;
    }
    for e in (0..=remaining).rev() {
        current[pos] = e;
        fill(out, current, pos + 1, remaining - e);
        current[pos] = 0;
    }
}

/// All monomials of total degree at most `d` in `n` variables.
pub fn monomials_up_to_degree(n: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for e in 0..=d {
        out.extend(monomials_of_degree(n, e));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divide_and_lcm() {
        let a = Monomial::new(vec![2, 1, 0]);
        let b = Monomial::new(vec![1, 1, 0]);
        assert!(b.divides(&a));
        assert_eq!(b.divide_into(&a), Some(Monomial::new(vec![1, 0, 0])));
        assert_eq!(a.lcm(&b), a);
        assert!(!a.divides(&b));
    }

    #[test]
    fn enumeration_counts_match_binomials() {
        // C(n + d - 1, d) monomials of degree d in n variables
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_of_degree(2, 5).len(), 6);
        assert_eq!(monomials_up_to_degree(3, 3).len(), 20);
    }

    #[test]
    fn extend_truncate_round_trip() {
        let m = Monomial::new(vec![1, 2]);
        assert_eq!(m.extend(3).degree(), 6);
        assert_eq!(m.extend(3).truncate(), m);
    }
}

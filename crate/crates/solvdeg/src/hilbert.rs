//! Hilbert series of quotients by monomial ideals, and the Krull dimension
//! of such quotients by direct subset enumeration.

use serde::Serialize;
use std::collections::BTreeSet;

use crate::monomial::Monomial;

/// The series h(z) / (1 - z)^dim with h(1) != 0; `coefficient(d)` expands it
/// back into the Hilbert function.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertSeries {
    /// Coefficients of the h-polynomial, constant term first.
    pub numerator: Vec<i64>,
    /// Exponent of (1 - z) in the denominator; equals the Krull dimension
    /// of the quotient.
    pub dim: usize,
}

impl HilbertSeries {
    pub fn h_degree(&self) -> i64 {
        self.numerator.len() as i64 - 1
    }

    /// deg h - dim + 1, the degree from which the Hilbert function agrees
    /// with the Hilbert polynomial.
    pub fn index_of_regularity(&self) -> i64 {
        self.h_degree() - self.dim as i64 + 1
    }

    /// Value of the Hilbert function at degree d.
    pub fn coefficient(&self, d: u32) -> i64 {
        let d = d as usize;
        // h(z) * sum_k C(k + dim - 1, dim - 1) z^k
        let mut acc = 0i64;
        for (i, &h) in self.numerator.iter().enumerate() {
            if i > d {
                break;
            }
            let k = d - i;
            acc += h * binomial(k + self.dim.saturating_sub(1), self.dim.saturating_sub(1), self.dim);
        }
        acc
    }
}

fn binomial(top: usize, bottom: usize, dim: usize) -> i64 {
    if dim == 0 {
        // denominator 1: only the exact term contributes
        return i64::from(top == 0);
    }
    let mut acc = 1i64;
    for i in 0..bottom {
        acc = acc * (top - i) as i64 / (i + 1) as i64;
    }
    acc
}

/// Krull dimension of R/(gens): the largest variable subset S such that no
/// generator's support is contained in S.
pub fn monomial_krull_dim(gens: &[Monomial], n: usize) -> usize {
    let gens = minimalize(gens.to_vec());
    if gens.iter().any(|m| m.is_one()) {
        return 0; // unit ideal; the quotient is the zero ring
    }
    let supports: Vec<u64> = gens
        .iter()
        .map(|m| m.support().fold(0u64, |acc, i| acc | 1 << i))
        .collect();
    let mut best = 0usize;
    for mask in 0..(1u64 << n) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        if supports.iter().all(|s| s & !mask != 0) {
            best = size;
        }
    }
    best
}

/// Drop generators divisible by another generator; sort for determinism.
pub(crate) fn minimalize(gens: Vec<Monomial>) -> Vec<Monomial> {
    let set: BTreeSet<Monomial> = gens.into_iter().collect();
    let mut out: Vec<Monomial> = Vec::new();
    for m in &set {
        if !set.iter().any(|d| d != m && d.divides(m)) {
            out.push(m.clone());
        }
    }
    out
}

/// The unique minimal generating set of the monomial ideal.
pub fn minimal_generators(gens: &[Monomial]) -> Vec<Monomial> {
    minimalize(gens.to_vec())
}

/// Hilbert series of R/(gens) in n variables, with the (1 - z) factors
/// cancelled so that the numerator does not vanish at 1.
pub fn hilbert_series(gens: &[Monomial], n: usize) -> HilbertSeries {
    let gens = minimalize(gens.to_vec());
    let mut numerator = numerator_poly(&gens, n);
    // cancel (1 - z) factors
    let mut dim = n;
    while dim > 0 {
        match divide_by_one_minus_z(&numerator) {
            Some(q) => {
                numerator = q;
                dim -= 1;
            }
            None => break,
        }
    }
    trim(&mut numerator);
    HilbertSeries { numerator, dim }
}

/// Numerator of the series over (1 - z)^n, by the pivot recursion
/// N(I) = z * N(I : x) + N(I + (x)) on the most frequent variable.
fn numerator_poly(gens: &[Monomial], n: usize) -> Vec<i64> {
    if gens.iter().any(|m| m.is_one()) {
        return vec![]; // unit ideal: zero quotient
    }
    // base case: all generators are powers of single variables
    if gens.iter().all(|m| m.support().count() <= 1) {
        let mut acc = vec![1i64];
        for m in gens {
            let d = m.degree() as usize;
            let mut factor = vec![0i64; d + 1];
            factor[0] = 1;
            factor[d] = -1;
            acc = poly_mul(&acc, &factor);
        }
        return acc;
    }
    // pivot: most frequent variable among mixed-support generators
    let mut counts = vec![0usize; n];
    for m in gens {
        if m.support().count() > 1 {
            for i in m.support() {
                counts[i] += 1;
            }
        }
    }
    let pivot = counts
        .iter()
        .enumerate()
        .max_by_key(|(i, &c)| (c, usize::MAX - i))
        .map(|(i, _)| i)
        .unwrap();
    let x = Monomial::var_power(n, pivot, 1);

    // I : x
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|m| {
            let e = m.exponent(pivot);
            if e == 0 {
                m.clone()
            } else {
                let mut exps = m.exponents().to_vec();
                exps[pivot] = e - 1;
                Monomial::new(exps)
            }
        })
        .collect();
    let colon = minimalize(colon);

    // I + (x)
    let mut sum: Vec<Monomial> = gens
        .iter()
        .filter(|m| m.exponent(pivot) == 0)
        .cloned()
        .collect();
    sum.push(x);

    let a = numerator_poly(&colon, n);
    let b = numerator_poly(&minimalize(sum), n);
    let mut shifted = vec![0i64];
    shifted.extend_from_slice(&a);
    poly_add(&shifted, &b)
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len().max(b.len())];
    for (i, &x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, &x) in b.iter().enumerate() {
        out[i] += x;
    }
    trim(&mut out);
    out
}

fn trim(v: &mut Vec<i64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// Exact quotient by (1 - z), or None when 1 is not a root.
fn divide_by_one_minus_z(a: &[i64]) -> Option<Vec<i64>> {
    if a.is_empty() {
        return Some(vec![]);
    }
    if a.iter().sum::<i64>() != 0 {
        return None;
    }
    // synthetic division: a(z) = (1 - z) q(z)
    let mut q = vec![0i64; a.len() - 1];
    let mut carry = 0i64;
    for i in 0..a.len() - 1 {
        q[i] = a[i] + carry;
        carry = q[i];
    }
    trim(&mut q);
    Some(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::monomials_of_degree;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    #[test]
    fn krull_dimension_examples() {
        // (x^2, xy, xz, y^3) in 3 variables: only {z} survives
        let gens = vec![m(&[2, 0, 0]), m(&[1, 1, 0]), m(&[1, 0, 1]), m(&[0, 3, 0])];
        assert_eq!(monomial_krull_dim(&gens, 3), 1);
        // zero ideal
        assert_eq!(monomial_krull_dim(&[], 4), 4);
        // maximal ideal
        let vars: Vec<Monomial> = (0..3).map(|i| Monomial::var_power(3, i, 1)).collect();
        assert_eq!(monomial_krull_dim(&vars, 3), 0);
    }

    #[test]
    fn series_of_the_worked_monomial_ideal() {
        // (x^2, xy, xz, y^3): (1 + 2z) / (1 - z)
        let gens = vec![m(&[2, 0, 0]), m(&[1, 1, 0]), m(&[1, 0, 1]), m(&[0, 3, 0])];
        let hs = hilbert_series(&gens, 3);
        assert_eq!(hs.numerator, vec![1, 2]);
        assert_eq!(hs.dim, 1);
        // Hilbert function: 1, 3, 3, 3, ...
        assert_eq!(hs.coefficient(0), 1);
        assert_eq!(hs.coefficient(1), 3);
        assert_eq!(hs.coefficient(5), 3);
        assert_eq!(hs.index_of_regularity(), 1);
    }

    #[test]
    fn series_of_zero_and_principal_ideals() {
        let hs = hilbert_series(&[], 3);
        assert_eq!(hs.numerator, vec![1]);
        assert_eq!(hs.dim, 3);
        assert_eq!(hs.coefficient(4), 15); // C(6, 2)

        // (x) in k[x]: quotient is the ground field
        let hs = hilbert_series(&[m(&[1])], 1);
        assert_eq!(hs.numerator, vec![1]);
        assert_eq!(hs.dim, 0);
        assert_eq!(hs.coefficient(0), 1);
        assert_eq!(hs.coefficient(1), 0);
    }

    #[test]
    fn expansion_matches_standard_monomial_counts() {
        let gens = vec![m(&[3, 0], ), m(&[1, 2])];
        let hs = hilbert_series(&gens, 2);
        for d in 0..10u32 {
            let count = monomials_of_degree(2, d)
                .into_iter()
                .filter(|mm| !gens.iter().any(|g| g.divides(mm)))
                .count() as i64;
            assert_eq!(hs.coefficient(d), count, "degree {d}");
        }
    }

    #[test]
    fn artinian_quadric_square() {
        // (x^2, xy, y^2): h = 1 + 2z, dim 0, ireg 2
        let gens = vec![m(&[2, 0]), m(&[1, 1]), m(&[0, 2])];
        let hs = hilbert_series(&gens, 2);
        assert_eq!(hs.numerator, vec![1, 2]);
        assert_eq!(hs.dim, 0);
        assert_eq!(hs.index_of_regularity(), 2);
        assert_eq!(hs.coefficient(2), 0);
    }
}

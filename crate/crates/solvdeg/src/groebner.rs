//! Reference Buchberger engine: reduced Gröbner bases, the S-pair
//! membership test, and the largest degree in a reduced basis.
//!
//! Pair selection uses the normal strategy (smallest lcm degree, ties by
//! index) with the coprimality and chain criteria, so runs are
//! deterministic. This engine is the correctness oracle for the Macaulay
//! elimination loop.

use crate::error::{Error, Result};
use crate::order::TermOrder;
use crate::poly::{normal_form, s_polynomial, Ideal, Polynomial};
use std::cmp::Ordering;
use std::collections::BTreeSet;

#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    elements: Vec<Polynomial>,
    order: TermOrder,
    reduced: bool,
}

impl GroebnerBasis {
    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn max_degree(&self) -> u32 {
        self.elements.iter().map(|g| g.degree()).max().unwrap_or(0)
    }

    /// Normal form of f against this basis.
    pub fn reduce(&self, f: &Polynomial) -> Result<Polynomial> {
        normal_form(f, &self.elements, &self.order)
    }

    /// Ideal membership via reduction to zero.
    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.reduce(f)?.is_zero())
    }

    pub(crate) fn from_parts(
        elements: Vec<Polynomial>,
        order: TermOrder,
        reduced: bool,
    ) -> GroebnerBasis {
        GroebnerBasis {
            elements,
            order,
            reduced,
        }
    }
}

/// Reduced Gröbner basis of the ideal with respect to `order`.
pub fn buchberger(ideal: &Ideal, order: &TermOrder) -> Result<GroebnerBasis> {
    let mut basis: Vec<Polynomial> = Vec::new();
    for g in ideal.generators() {
        if g.is_zero() {
            return Err(Error::ZeroGenerator);
        }
        basis.push(g.monic(order)?);
    }

    // pending pairs keyed by (lcm degree, i, j)
    let mut pending: BTreeSet<(u32, usize, usize)> = BTreeSet::new();
    let key = |basis: &[Polynomial], i: usize, j: usize, order: &TermOrder| -> (u32, usize, usize) {
        let mi = basis[i].leading_term(order).unwrap().0.clone();
        let mj = basis[j].leading_term(order).unwrap().0.clone();
        (mi.lcm(&mj).degree(), i, j)
    };
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            pending.insert(key(&basis, i, j, order));
        }
    }

    while let Some(&(d, i, j)) = pending.iter().next() {
        pending.remove(&(d, i, j));
        let lt_i = basis[i].leading_term(order)?.0.clone();
        let lt_j = basis[j].leading_term(order)?.0.clone();
        if lt_i.is_coprime(&lt_j) {
            continue;
        }
        let lcm = lt_i.lcm(&lt_j);
        // chain criterion: some other leading term divides the lcm and both
        // side pairs are no longer pending
        let mut skip = false;
        for (k, g) in basis.iter().enumerate() {
            if k == i || k == j {
                continue;
            }
            let lt_k = g.leading_term(order)?.0.clone();
            if lt_k.divides(&lcm) {
                let (a, b) = (i.min(k), i.max(k));
                let (c, e) = (j.min(k), j.max(k));
                let ik = key(&basis, a, b, order);
                let jk = key(&basis, c, e, order);
                if !pending.contains(&ik) && !pending.contains(&jk) {
                    skip = true;
                    break;
                }
            }
        }
        if skip {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], order)?;
        let r = normal_form(&s, &basis, order)?;
        if !r.is_zero() {
            let r = r.monic(order)?;
            basis.push(r);
            let new = basis.len() - 1;
            for k in 0..new {
                pending.insert(key(&basis, k, new, order));
            }
        }
    }

    let reduced = interreduce(basis, order)?;
    Ok(GroebnerBasis {
        elements: reduced,
        order: order.clone(),
        reduced: true,
    })
}

/// Minimize and autoreduce a set of nonzero polynomials: drop elements whose
/// leading term is divisible by another's, take normal forms against the
/// rest, and sort by ascending leading term. Applied to a Gröbner basis this
/// yields the reduced basis.
pub(crate) fn interreduce(
    polys: Vec<Polynomial>,
    order: &TermOrder,
) -> Result<Vec<Polynomial>> {
    let mut work: Vec<Polynomial> = Vec::new();
    for p in polys {
        if !p.is_zero() {
            work.push(p.monic(order)?);
        }
    }
    // minimize: keep only elements with minimal leading terms
    let mut keep: Vec<Polynomial> = Vec::new();
    'outer: for (idx, p) in work.iter().enumerate() {
        let lt = p.leading_term(order)?.0.clone();
        for (jdx, q) in work.iter().enumerate() {
            if idx == jdx {
                continue;
            }
            let qt = q.leading_term(order)?.0.clone();
            if qt.divides(&lt) && (qt != lt || jdx < idx) {
                continue 'outer;
            }
        }
        keep.push(p.clone());
    }
    // full reduction of every element against the others, to a fixpoint
    loop {
        let mut changed = false;
        for i in 0..keep.len() {
            let others: Vec<Polynomial> = keep
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, q)| q.clone())
                .collect();
            if others.is_empty() {
                break;
            }
            let r = normal_form(&keep[i], &others, order)?;
            if r != keep[i] {
                changed = true;
                if r.is_zero() {
                    keep.remove(i);
                } else {
                    keep[i] = r.monic(order)?;
                }
                break;
            }
        }
        if !changed {
            break;
        }
    }
    keep.sort_by(|a, b| {
        let ma = a.leading_term(order).unwrap().0.clone();
        let mb = b.leading_term(order).unwrap().0.clone();
        order.compare(&ma, &mb).unwrap_or(Ordering::Equal)
    });
    Ok(keep)
}

/// Buchberger's criterion: true iff every S-polynomial of the set reduces
/// to zero, i.e. the set is a Gröbner basis of the ideal it generates.
pub fn is_groebner(polys: &[Polynomial], order: &TermOrder) -> Result<bool> {
    for p in polys {
        if p.is_zero() {
            return Err(Error::ZeroGenerator);
        }
    }
    for i in 0..polys.len() {
        for j in (i + 1)..polys.len() {
            let lt_i = polys[i].leading_term(order)?.0.clone();
            let lt_j = polys[j].leading_term(order)?.0.clone();
            if lt_i.is_coprime(&lt_j) {
                continue;
            }
            let s = s_polynomial(&polys[i], &polys[j], order)?;
            if !normal_form(&s, polys, order)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Largest degree of an element of the reduced Gröbner basis.
pub fn max_gb_degree(ideal: &Ideal, order: &TermOrder) -> Result<u32> {
    Ok(buchberger(ideal, order)?.max_degree())
}

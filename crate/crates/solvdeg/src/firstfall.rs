//! Ding-style degree of regularity (first fall degree) of quadratic
//! systems, computed by exact syzygy linear algebra in the truncated ring
//! B = F_q[x_1, ..., x_n] / (x_1^q, ..., x_n^q).
//!
//! The fall degree is the first d for which the quadrics admit a degree
//! d - 2 syzygy that is not spanned by the Koszul relations and the
//! field-power relations.

use crate::error::{Error, Result};
use crate::homogenize::top_ideal;
use crate::linalg::{rank, rref_in_place};
use crate::monomial::{monomials_of_degree, Monomial};
use crate::poly::{Ideal, Polynomial, RingRef};
use serde::Serialize;
use std::collections::HashMap;

/// Monomial basis bookkeeping for B = F_q[x]/(x_1^q, ..., x_n^q).
#[derive(Clone, Debug)]
pub struct TruncatedRing {
    pub q: u64,
    pub n: usize,
}

impl TruncatedRing {
    pub fn new(q: u64, n: usize) -> TruncatedRing {
        TruncatedRing { q, n }
    }

    /// Largest degree with a nonzero component.
    pub fn top_degree(&self) -> u32 {
        self.n as u32 * (self.q as u32 - 1)
    }

    /// Monomials of degree d with every exponent below q.
    pub fn basis(&self, d: u32) -> Vec<Monomial> {
        monomials_of_degree(self.n, d)
            .into_iter()
            .filter(|m| m.exponents().iter().all(|&e| e < self.q as u32))
            .collect()
    }

    /// Image of a polynomial in B: terms with an exponent >= q vanish.
    pub fn reduce(&self, f: &Polynomial) -> Polynomial {
        let terms: Vec<(Monomial, u64)> = f
            .terms()
            .iter()
            .filter(|(m, _)| m.exponents().iter().all(|&e| e < self.q as u32))
            .cloned()
            .collect();
        Polynomial::from_terms(f.ring().clone(), terms)
    }
}

fn truncated_ring_of(ring: &RingRef) -> TruncatedRing {
    TruncatedRing::new(ring.field().modulus(), ring.num_vars())
}

fn check_quadratic_in_b(gens: &[Polynomial], b: &TruncatedRing) -> Result<Vec<Polynomial>> {
    let mut reduced = Vec::with_capacity(gens.len());
    for g in gens {
        if !g.is_homogeneous() || g.degree() != 2 {
            return Err(Error::NonQuadraticGenerator(g.degree()));
        }
        let r = b.reduce(g);
        if r.is_zero() {
            return Err(Error::InvalidInput(
                "generator vanishes in the truncated ring".into(),
            ));
        }
        reduced.push(r);
    }
    Ok(reduced)
}

/// Encode a vector (b_1, ..., b_r) with b_i in B_e as a flat row over the
/// basis of B_{e+shift}^r given by `basis_index`.
fn encode_member(
    components: &[Polynomial],
    basis_index: &HashMap<Monomial, usize>,
    block: usize,
) -> Vec<u64> {
    let mut row = vec![0u64; components.len() * block];
    for (i, f) in components.iter().enumerate() {
        for (m, c) in f.terms() {
            if let Some(&j) = basis_index.get(m) {
                row[i * block + j] = *c;
            }
        }
    }
    row
}

/// Dimension of the space of degree-e syzygies of the quadrics: the kernel
/// of B_e^r -> B_{e+2}, (b_i) |-> sum b_i f_i.
pub fn syzygy_dim(gens: &[Polynomial], e: u32) -> Result<usize> {
    let ring = gens
        .first()
        .ok_or(Error::EmptySystem)?
        .ring()
        .clone();
    let b = truncated_ring_of(&ring);
    let quads = check_quadratic_in_b(gens, &b)?;
    let domain = b.basis(e);
    if domain.is_empty() {
        return Ok(0);
    }
    let target = b.basis(e + 2);
    let target_index: HashMap<Monomial, usize> = target
        .iter()
        .enumerate()
        .map(|(j, m)| (m.clone(), j))
        .collect();
    let mut rows: Vec<Vec<u64>> = Vec::new();
    for f in &quads {
        for u in &domain {
            let image = b.reduce(&f.mul_term(u, 1));
            let mut row = vec![0u64; target.len().max(1)];
            for (m, c) in image.terms() {
                row[target_index[m]] = *c;
            }
            rows.push(row);
        }
    }
    let r = rank(rows, ring.field());
    Ok(quads.len() * domain.len() - r)
}

/// Dimension of the degree-e slice of the trivial syzygy module: the span
/// of all monomial multiples of the Koszul relations f_i e_j - f_j e_i and
/// the field-power relations f_i^(q-1) e_i.
pub fn trivial_syzygy_dim(gens: &[Polynomial], e: u32) -> Result<usize> {
    let ring = gens
        .first()
        .ok_or(Error::EmptySystem)?
        .ring()
        .clone();
    let b = truncated_ring_of(&ring);
    let quads = check_quadratic_in_b(gens, &b)?;
    let r = quads.len();
    let domain = b.basis(e);
    if domain.is_empty() {
        return Ok(0);
    }
    let block = domain.len();
    let domain_index: HashMap<Monomial, usize> = domain
        .iter()
        .enumerate()
        .map(|(j, m)| (m.clone(), j))
        .collect();
    let zero = Polynomial::zero(ring.clone());

    let mut rows: Vec<Vec<u64>> = Vec::new();
    // Koszul generators have degree 2
    if e >= 2 {
        for i in 0..r {
            for j in (i + 1)..r {
                for m in b.basis(e - 2) {
                    let mut components = vec![zero.clone(); r];
                    components[i] = b.reduce(&quads[j].mul_term(&m, 1));
                    components[j] = b.reduce(&quads[i].mul_term(&m, 1)).neg();
                    rows.push(encode_member(&components, &domain_index, block));
                }
            }
        }
    }
    // field-power generators have degree 2(q - 1)
    let power_degree = 2 * (b.q as u32 - 1);
    if e >= power_degree {
        for (i, f) in quads.iter().enumerate() {
            let mut fp = Polynomial::constant(ring.clone(), 1);
            for _ in 0..(b.q - 1) {
                fp = b.reduce(&fp.mul(f)?);
            }
            if fp.is_zero() {
                continue;
            }
            for m in b.basis(e - power_degree) {
                let mut components = vec![zero.clone(); r];
                components[i] = b.reduce(&fp.mul_term(&m, 1));
                if components[i].is_zero() {
                    continue;
                }
                rows.push(encode_member(&components, &domain_index, block));
            }
        }
    }
    Ok(rank(rows, ring.field()))
}

#[derive(Clone, Debug, Serialize)]
pub struct FirstFallReport {
    pub first_fall_degree: Option<u32>,
    /// (syzygy degree e, dim Syz_e, dim Triv_e) for each degree inspected.
    pub dims: Vec<(u32, usize, usize)>,
}

impl FirstFallReport {
    pub fn to_json(&self) -> String {
        let dims: Vec<serde_json::Value> = self
            .dims
            .iter()
            .map(|(e, s, t)| serde_json::json!([e, s, t]))
            .collect();
        serde_json::json!({
            "first_fall_degree": self.first_fall_degree,
            "dims": dims,
        })
        .to_string()
    }
}

/// First fall degree of a quadratic system: the smallest d with a
/// nontrivial syzygy in degree d - 2. Inhomogeneous input is routed through
/// its top-degree parts. The search stops at the top degree of B; if no
/// fall occurs by then, none exists and the report says so.
pub fn first_fall_degree(ideal: &Ideal) -> Result<FirstFallReport> {
    let input = if ideal.is_homogeneous() {
        ideal.clone()
    } else {
        top_ideal(ideal)?
    };
    let gens = input.generators().to_vec();
    let b = truncated_ring_of(input.ring());
    check_quadratic_in_b(&gens, &b)?;

    let mut dims = Vec::new();
    for e in 0..=b.top_degree() {
        let syz = syzygy_dim(&gens, e)?;
        let triv = trivial_syzygy_dim(&gens, e)?;
        dims.push((e, syz, triv));
        if syz > triv {
            return Ok(FirstFallReport {
                first_fall_degree: Some(e + 2),
                dims,
            });
        }
    }
    Ok(FirstFallReport {
        first_fall_degree: None,
        dims,
    })
}

/// All members of the degree-e syzygy kernel, as raw coefficient rows of
/// a reduced basis. Exposed for the exhaustive oracle tests.
pub fn syzygy_kernel_basis(gens: &[Polynomial], e: u32) -> Result<Vec<Vec<u64>>> {
    let ring = gens.first().ok_or(Error::EmptySystem)?.ring().clone();
    let field = *ring.field();
    let b = truncated_ring_of(&ring);
    let quads = check_quadratic_in_b(gens, &b)?;
    let domain = b.basis(e);
    let dim = quads.len() * domain.len();
    if dim == 0 {
        return Ok(vec![]);
    }
    let target = b.basis(e + 2);
    let target_index: HashMap<Monomial, usize> = target
        .iter()
        .enumerate()
        .map(|(j, m)| (m.clone(), j))
        .collect();
    // transpose of the multiplication map, augmented with the identity to
    // read the kernel off the eliminated rows
    let mut rows: Vec<Vec<u64>> = Vec::new();
    for (i, f) in quads.iter().enumerate() {
        for (k, u) in domain.iter().enumerate() {
            let image = b.reduce(&f.mul_term(u, 1));
            let mut row = vec![0u64; target.len() + dim];
            for (m, c) in image.terms() {
                row[target_index[m]] = *c;
            }
            row[target.len() + i * domain.len() + k] = 1;
            rows.push(row);
        }
    }
    rref_in_place(&mut rows, &field);
    let kernel = rows
        .into_iter()
        .filter(|row| row[..target.len()].iter().all(|&c| c == 0))
        .map(|row| row[target.len()..].to_vec())
        .filter(|v| v.iter().any(|&c| c != 0))
        .collect();
    Ok(kernel)
}

//! Solution extraction: rational roots of univariate polynomials,
//! specialization of lexicographic bases, recursive elimination for all
//! rational points, the unique-solution shortcut, and reconstruction of a
//! lexicographic basis from points by Lagrange interpolation.
//!
//! The elimination orientation is LEX with the first declared variable
//! largest, so the eliminant lives in the last variable and specialization
//! substitutes there. Specializing a basis stays a basis only generically;
//! every specialized set is therefore certified and recomputed from scratch
//! when the certificate fails.

use crate::error::{Error, Result};
use crate::groebner::{buchberger, interreduce, is_groebner, GroebnerBasis};
use crate::monomial::Monomial;
use crate::order::TermOrder;
use crate::poly::{Ideal, Polynomial, RingRef};
use crate::regularity::is_zero_dimensional;
use serde::Serialize;

const ROOT_SCAN_LIMIT: u64 = 1 << 20;

/// A rational point of the zero locus, coordinates in declared variable
/// order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct VarietyPoint {
    pub coords: Vec<u64>,
}

impl VarietyPoint {
    pub fn new(coords: Vec<u64>) -> VarietyPoint {
        VarietyPoint { coords }
    }
}

// ---- univariate arithmetic on dense coefficient vectors (constant first)

fn uni_trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn uni_mul(a: &[u64], b: &[u64], field: &crate::field::PrimeField) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = field.add(out[i + j], field.mul(x, y));
        }
    }
    out
}

/// Remainder of a modulo b (b nonzero).
fn uni_rem(a: &[u64], b: &[u64], field: &crate::field::PrimeField) -> Vec<u64> {
    let mut r = a.to_vec();
    uni_trim(&mut r);
    let mut b = b.to_vec();
    uni_trim(&mut b);
    assert!(!b.is_empty());
    let inv_lead = field.inv(*b.last().unwrap());
    while r.len() >= b.len() {
        let factor = field.mul(*r.last().unwrap(), inv_lead);
        let shift = r.len() - b.len();
        for (i, &c) in b.iter().enumerate() {
            let t = field.mul(factor, c);
            r[shift + i] = field.sub(r[shift + i], t);
        }
        uni_trim(&mut r);
        if r.is_empty() {
            break;
        }
    }
    r
}

fn uni_gcd(a: &[u64], b: &[u64], field: &crate::field::PrimeField) -> Vec<u64> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    uni_trim(&mut x);
    uni_trim(&mut y);
    while !y.is_empty() {
        let r = uni_rem(&x, &y, field);
        x = y;
        y = r;
    }
    if let Some(&lead) = x.last() {
        let inv = field.inv(lead);
        for c in &mut x {
            *c = field.mul(*c, inv);
        }
    }
    x
}

/// x^p mod f by binary powering.
fn uni_pow_x_mod(p: u64, f: &[u64], field: &crate::field::PrimeField) -> Vec<u64> {
    let mut result = vec![1u64]; // 1
    let mut base = uni_rem(&[0, 1], f, field); // x mod f
    let mut e = p;
    while e > 0 {
        if e & 1 == 1 {
            result = uni_rem(&uni_mul(&result, &base, field), f, field);
        }
        base = uni_rem(&uni_mul(&base, &base, field), f, field);
        e >>= 1;
    }
    result
}

fn uni_eval(f: &[u64], a: u64, field: &crate::field::PrimeField) -> u64 {
    let mut acc = 0u64;
    for &c in f.iter().rev() {
        acc = field.add(field.mul(acc, a), c);
    }
    acc
}

/// Exact quotient of f by (x - a); panics unless a is a root.
fn uni_divide_linear(f: &[u64], a: u64, field: &crate::field::PrimeField) -> Vec<u64> {
    let mut q = vec![0u64; f.len() - 1];
    let mut carry = 0u64;
    for i in (0..f.len()).rev() {
        let v = field.add(f[i], field.mul(carry, a));
        if i == 0 {
            assert_eq!(v, 0, "not a root");
        } else {
            q[i - 1] = v;
            carry = v;
        }
    }
    q
}

fn dense_coefficients(f: &Polynomial, var: usize) -> Vec<u64> {
    let mut out = vec![0u64; f.degree() as usize + 1];
    for (m, c) in f.terms() {
        out[m.exponent(var) as usize] = *c;
    }
    out
}

/// All roots of a univariate polynomial in the base field, with
/// multiplicities. The squarefree rational part is isolated via
/// gcd(f, x^p - x) and its roots found by a full scan, so the modulus must
/// stay below 2^20.
pub fn univariate_roots(f: &Polynomial) -> Result<Vec<(u64, u32)>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let vars: Vec<usize> = (0..f.ring().num_vars())
        .filter(|&i| f.terms().iter().any(|(m, _)| m.exponent(i) > 0))
        .collect();
    if vars.len() > 1 {
        return Err(Error::InvalidInput(
            "polynomial involves more than one variable".into(),
        ));
    }
    let field = *f.field();
    let p = field.modulus();
    if p > ROOT_SCAN_LIMIT {
        return Err(Error::InvalidInput(format!(
            "root scan supports moduli up to 2^20, got {p}"
        )));
    }
    let Some(&var) = vars.first() else {
        return Ok(vec![]); // nonzero constant
    };
    let coeffs = dense_coefficients(f, var);
    // gcd with the field polynomial keeps exactly the rational roots, once
    let frobenius = uni_pow_x_mod(p, &coeffs, &field);
    let mut frob_minus_x = frobenius;
    if frob_minus_x.len() < 2 {
        frob_minus_x.resize(2, 0);
    }
    frob_minus_x[1] = field.sub(frob_minus_x[1], 1);
    uni_trim(&mut frob_minus_x);
    let g = uni_gcd(&coeffs, &frob_minus_x, &field);
    let mut roots = Vec::new();
    if g.len() > 1 {
        for a in 0..p {
            if uni_eval(&g, a, &field) == 0 {
                roots.push(a);
            }
        }
    }
    let mut out = Vec::with_capacity(roots.len());
    for a in roots {
        let mut mult = 0u32;
        let mut rem = coeffs.clone();
        while rem.len() > 1 && uni_eval(&rem, a, &field) == 0 {
            rem = uni_divide_linear(&rem, a, &field);
            mult += 1;
        }
        out.push((a, mult));
    }
    Ok(out)
}

/// Result of specializing a lexicographic basis at a value of the last
/// variable: the (certified) basis of the specialized ideal, and whether
/// the plain substitution already passed the Gröbner certificate.
#[derive(Clone, Debug)]
pub struct SpecializedBasis {
    pub polys: Vec<Polynomial>,
    pub generic_held: bool,
}

/// Substitute the last variable by `a` in every basis element, drop zeros,
/// certify the result, and recompute it with Buchberger when the generic
/// specialization property fails.
pub fn specialize_gb(gb: &GroebnerBasis, a: u64) -> Result<SpecializedBasis> {
    if gb.order() != &TermOrder::Lex {
        return Err(Error::InvalidInput(
            "specialization is defined for lexicographic bases".into(),
        ));
    }
    let elements = gb.elements();
    let ring = elements
        .first()
        .ok_or(Error::EmptySystem)?
        .ring()
        .clone();
    let target = ring.restricted()?;
    let mut polys: Vec<Polynomial> = Vec::new();
    for g in elements {
        let s = g.substitute_last(a, &target);
        if !s.is_zero() {
            polys.push(s);
        }
    }
    if polys.is_empty() {
        return Ok(SpecializedBasis {
            polys,
            generic_held: true,
        });
    }
    if is_groebner(&polys, &TermOrder::Lex)? {
        return Ok(SpecializedBasis {
            polys,
            generic_held: true,
        });
    }
    let ideal = Ideal::new(target, polys)?;
    let recomputed = buchberger(&ideal, &TermOrder::Lex)?;
    Ok(SpecializedBasis {
        polys: recomputed.elements().to_vec(),
        generic_held: false,
    })
}

/// The element of a lexicographic basis that lives in the last variable
/// alone. A zero-dimensional ideal always has one.
fn eliminant(polys: &[Polynomial], last: usize) -> Option<Polynomial> {
    polys
        .iter()
        .filter(|g| !g.is_constant() && g.is_univariate_in(last))
        .min_by_key(|g| g.degree())
        .cloned()
}

fn solve_recursive(polys: Vec<Polynomial>, ring: RingRef) -> Result<Vec<Vec<u64>>> {
    if polys.is_empty() {
        return Err(Error::InvalidInput(
            "specialization produced the zero ideal; the fiber is not finite".into(),
        ));
    }
    if polys.iter().any(|g| g.is_constant()) {
        return Ok(vec![]); // unit ideal: nothing above this branch
    }
    let n = ring.num_vars();
    if n == 1 {
        let g = eliminant(&polys, 0).ok_or_else(|| {
            Error::InvalidInput("no univariate eliminant in a certified basis".into())
        })?;
        return Ok(univariate_roots(&g)?
            .into_iter()
            .map(|(a, _)| vec![a])
            .collect());
    }
    let g = eliminant(&polys, n - 1).ok_or_else(|| {
        Error::InvalidInput("no univariate eliminant in a certified basis".into())
    })?;
    let basis = GroebnerBasis::from_parts(polys, TermOrder::Lex, false);
    let mut points = Vec::new();
    for (a, _) in univariate_roots(&g)? {
        let specialized = specialize_gb(&basis, a)?;
        let reduced = interreduce(specialized.polys, &TermOrder::Lex)?;
        let target = basis.elements()[0].ring().restricted()?;
        for mut prefix in solve_recursive(reduced, target)? {
            prefix.push(a);
            points.push(prefix);
        }
    }
    Ok(points)
}

/// All rational solutions of a zero-dimensional system, by reduced LEX
/// basis, univariate root extraction, and recursive specialization. The
/// result is sorted coordinate-lexicographically.
pub fn lex_solve(ideal: &Ideal) -> Result<Vec<VarietyPoint>> {
    if !is_zero_dimensional(ideal, false)? {
        return Err(Error::NotZeroDimensional);
    }
    let gb = buchberger(ideal, &TermOrder::Lex)?;
    let mut points: Vec<VarietyPoint> =
        solve_recursive(gb.elements().to_vec(), ideal.ring().clone())?
            .into_iter()
            .map(VarietyPoint::new)
            .collect();
    points.sort();
    points.dedup();
    for point in &points {
        for g in ideal.generators() {
            debug_assert_eq!(g.evaluate(&point.coords)?, 0);
        }
    }
    Ok(points)
}

/// The unique solution of a system known to have exactly one zero over the
/// algebraic closure. Each eliminant must be a power of a single linear
/// factor; anything else reports a non-unique system.
pub fn unique_solve(ideal: &Ideal) -> Result<VarietyPoint> {
    if !is_zero_dimensional(ideal, false)? {
        return Err(Error::NotZeroDimensional);
    }
    let gb = buchberger(ideal, &TermOrder::Lex)?;
    let mut polys = gb.elements().to_vec();
    let mut ring = ideal.ring().clone();
    let mut coords_rev: Vec<u64> = Vec::new();
    loop {
        if polys.iter().any(|g| g.is_constant()) {
            return Err(Error::NotUniqueSolution(
                "the system has no solution at this specialization".into(),
            ));
        }
        let n = ring.num_vars();
        let g = eliminant(&polys, n - 1).ok_or_else(|| {
            Error::InvalidInput("no univariate eliminant in a certified basis".into())
        })?;
        let roots = univariate_roots(&g)?;
        let [(a, mult)] = roots[..] else {
            return Err(Error::NotUniqueSolution(format!(
                "eliminant in {} has {} distinct rational roots",
                ring.var_name(n - 1),
                roots.len()
            )));
        };
        // the eliminant must be exactly (x - a)^deg
        if u64::from(mult) != u64::from(g.degree()) {
            return Err(Error::NotUniqueSolution(format!(
                "eliminant in {} is not a power of a linear factor",
                ring.var_name(n - 1)
            )));
        }
        coords_rev.push(a);
        if n == 1 {
            break;
        }
        let basis = GroebnerBasis::from_parts(polys, TermOrder::Lex, false);
        let specialized = specialize_gb(&basis, a)?;
        polys = interreduce(specialized.polys, &TermOrder::Lex)?;
        ring = ring.restricted()?;
    }
    coords_rev.reverse();
    Ok(VarietyPoint::new(coords_rev))
}

/// Reduced lexicographic basis of the vanishing ideal of points in normal
/// position (pairwise distinct last coordinates): the eliminant in the last
/// variable together with one interpolation polynomial per remaining
/// variable.
pub fn shape_interpolate(points: &[VarietyPoint], ring: &RingRef) -> Result<GroebnerBasis> {
    if points.is_empty() {
        return Err(Error::InvalidInput("no points to interpolate".into()));
    }
    let n = ring.num_vars();
    let field = *ring.field();
    for p in points {
        if p.coords.len() != n {
            return Err(Error::DimensionMismatch(p.coords.len(), n));
        }
    }
    for (i, p) in points.iter().enumerate() {
        for q in &points[..i] {
            if p.coords[n - 1] == q.coords[n - 1] {
                return Err(Error::NormalPosition(format!(
                    "two points share the last coordinate {}",
                    p.coords[n - 1]
                )));
            }
        }
    }

    let anchors: Vec<u64> = points.iter().map(|p| p.coords[n - 1]).collect();
    // eliminant: product of (x_n - a)
    let mut eliminant = vec![1u64];
    for &a in &anchors {
        eliminant = uni_mul(&eliminant, &[field.neg(a), 1], &field);
    }
    let to_poly = |coeffs: &[u64]| -> Polynomial {
        Polynomial::from_terms(
            ring.clone(),
            coeffs
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(e, &c)| (Monomial::var_power(n, n - 1, e as u32), c))
                .collect::<Vec<_>>(),
        )
    };

    let mut elements = vec![to_poly(&eliminant)];
    for j in (0..n - 1).rev() {
        // Lagrange polynomial through (a_i, j-th coordinate of P_i)
        let mut acc = vec![0u64; points.len()];
        for (i, p) in points.iter().enumerate() {
            let mut numer = vec![1u64];
            let mut denom = 1u64;
            for (l, &b) in anchors.iter().enumerate() {
                if l == i {
                    continue;
                }
                numer = uni_mul(&numer, &[field.neg(b), 1], &field);
                denom = field.mul(denom, field.sub(anchors[i], b));
            }
            let scale = field.mul(p.coords[j], field.inv(denom));
            for (k, &c) in numer.iter().enumerate() {
                acc[k] = field.add(acc[k], field.mul(c, scale));
            }
        }
        let var = Polynomial::variable(ring.clone(), j);
        elements.push(var.sub(&to_poly(&acc))?);
    }
    let elements = interreduce(elements, &TermOrder::Lex)?;
    debug_assert!(is_groebner(&elements, &TermOrder::Lex)?);
    Ok(GroebnerBasis::from_parts(elements, TermOrder::Lex, true))
}

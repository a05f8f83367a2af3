//! Multivariate polynomials over a prime field, ideals, and multivariate
//! division.
//!
//! Term lists are kept sorted descending under the internal storage order
//! (exponent-wise lexicographic) with no zero coefficients, so structural
//! equality is semantic equality.

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::monomial::Monomial;
use crate::order::TermOrder;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// Ring context: coefficient field plus named variables.
#[derive(Debug)]
pub struct Ring {
    field: PrimeField,
    vars: Vec<String>,
}

pub type RingRef = Arc<Ring>;

impl Ring {
    pub fn new(field: PrimeField, vars: Vec<String>) -> Result<RingRef> {
        for (i, v) in vars.iter().enumerate() {
            if v.is_empty() {
                return Err(Error::InvalidInput("empty variable name".into()));
            }
            if vars[..i].contains(v) {
                return Err(Error::InvalidInput(format!("duplicate variable `{v}`")));
            }
        }
        Ok(Arc::new(Ring { field, vars }))
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.vars[i]
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// The ring with one extra (last) variable appended.
    pub fn extended(&self, name: &str) -> Result<RingRef> {
        let mut vars = self.vars.clone();
        vars.push(name.to_string());
        Ring::new(self.field, vars)
    }

    /// The ring with the last variable dropped.
    pub fn restricted(&self) -> Result<RingRef> {
        let mut vars = self.vars.clone();
        vars.pop();
        Ring::new(self.field, vars)
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Ring) -> bool {
        self.field == other.field && self.vars == other.vars
    }
}

impl Eq for Ring {}

pub(crate) fn same_ring(a: &RingRef, b: &RingRef) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: RingRef,
    terms: Vec<(Monomial, u64)>,
}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl Polynomial {
    pub fn zero(ring: RingRef) -> Self {
        Polynomial { ring, terms: vec![] }
    }

    pub fn constant(ring: RingRef, c: i64) -> Self {
        let c = ring.field().from_int(c);
        let mut terms = vec![];
        if c != 0 {
            terms.push((Monomial::one(ring.num_vars()), c));
        }
        Polynomial { ring, terms }
    }

    pub fn variable(ring: RingRef, i: usize) -> Self {
        let m = Monomial::var_power(ring.num_vars(), i, 1);
        Polynomial {
            ring,
            terms: vec![(m, 1)],
        }
    }

    pub fn term(ring: RingRef, m: Monomial, c: i64) -> Self {
        let c = ring.field().from_int(c);
        let mut terms = vec![];
        if c != 0 {
            terms.push((m, c));
        }
        Polynomial { ring, terms }
    }

    /// Build from arbitrary (monomial, coefficient) pairs, combining
    /// duplicates and dropping zeros.
    pub fn from_terms<I>(ring: RingRef, iter: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, u64)>,
    {
        let field = *ring.field();
        let mut map: BTreeMap<Monomial, u64> = BTreeMap::new();
        for (m, c) in iter {
            debug_assert_eq!(m.num_vars(), ring.num_vars());
            let e = map.entry(m).or_insert(0);
            *e = field.add(*e, field.reduce(c));
        }
        let mut terms: Vec<(Monomial, u64)> =
            map.into_iter().filter(|(_, c)| *c != 0).collect();
        terms.reverse(); // descending storage order
        Polynomial { ring, terms }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn field(&self) -> &PrimeField {
        self.ring.field()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending storage order.
    pub fn terms(&self) -> &[(Monomial, u64)] {
        &self.terms
    }

    pub fn coefficient(&self, m: &Monomial) -> u64 {
        self.terms
            .iter()
            .find(|(t, _)| t == m)
            .map(|(_, c)| *c)
            .unwrap_or(0)
    }

    /// Total degree; zero polynomial reports 0.
    pub fn degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => {
                let d = m0.degree();
                self.terms.iter().all(|(m, _)| m.degree() == d)
            }
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// Support contained in the single variable `i` (or constant).
    pub fn is_univariate_in(&self, i: usize) -> bool {
        self.terms
            .iter()
            .all(|(m, _)| m.support().all(|j| j == i))
    }

    /// The ord-largest term of a nonzero polynomial.
    pub fn leading_term(&self, order: &TermOrder) -> Result<(&Monomial, u64)> {
        let mut best: Option<&(Monomial, u64)> = None;
        for t in &self.terms {
            match best {
                None => best = Some(t),
                Some(b) => {
                    if order.compare(&t.0, &b.0)? == Ordering::Greater {
                        best = Some(t);
                    }
                }
            }
        }
        best.map(|(m, c)| (m, *c)).ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_monomial(&self, order: &TermOrder) -> Result<Monomial> {
        Ok(self.leading_term(order)?.0.clone())
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let field = *self.field();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match self.terms[i].0.cmp(&other.terms[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = field.add(self.terms[i].1, other.terms[j].1);
                    if c != 0 {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms: out,
        })
    }

    pub fn neg(&self) -> Polynomial {
        let field = *self.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), field.neg(*c)))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: u64) -> Polynomial {
        let field = *self.field();
        let c = field.reduce(c);
        if c == 0 {
            return Polynomial::zero(self.ring.clone());
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), field.mul(*a, c)))
                .collect(),
        }
    }

    /// Multiply by the single term c * m.
    pub fn mul_term(&self, m: &Monomial, c: u64) -> Polynomial {
        let field = *self.field();
        let c = field.reduce(c);
        if c == 0 {
            return Polynomial::zero(self.ring.clone());
        }
        // multiplying every monomial by m preserves the storage order
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(t, a)| (t.mul(m), field.mul(*a, c)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let field = *self.field();
        let mut map: BTreeMap<Monomial, u64> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m = m1.mul(m2);
                let e = map.entry(m).or_insert(0);
                *e = field.add(*e, field.mul(*c1, *c2));
            }
        }
        let mut terms: Vec<(Monomial, u64)> =
            map.into_iter().filter(|(_, c)| *c != 0).collect();
        terms.reverse();
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn pow(&self, e: u32) -> Result<Polynomial> {
        let mut acc = Polynomial::constant(self.ring.clone(), 1);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Make the leading coefficient 1.
    pub fn monic(&self, order: &TermOrder) -> Result<Polynomial> {
        let (_, c) = self.leading_term(order)?;
        Ok(self.scale(self.field().inv(c)))
    }

    pub fn evaluate(&self, point: &[u64]) -> Result<u64> {
        if point.len() != self.ring.num_vars() {
            return Err(Error::DimensionMismatch(point.len(), self.ring.num_vars()));
        }
        let field = *self.field();
        let mut acc = 0u64;
        for (m, c) in &self.terms {
            let mut v = *c;
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    v = field.mul(v, field.pow(point[i], e as u64));
                }
            }
            acc = field.add(acc, v);
        }
        Ok(acc)
    }

    /// Substitute `value` for the last variable, landing in the ring with
    /// that variable removed.
    pub fn substitute_last(&self, value: u64, target: &RingRef) -> Polynomial {
        let field = *self.field();
        let terms = self.terms.iter().map(|(m, c)| {
            let e = m.exponent(m.num_vars() - 1);
            let c = field.mul(*c, field.pow(value, e as u64));
            (m.truncate(), c)
        });
        Polynomial::from_terms(target.clone(), terms.collect::<Vec<_>>())
    }
}

/// Remainder of multivariate division of `f` by the list `divisors`.
///
/// Deterministic: at each step the ord-largest reducible term is cancelled
/// using the first divisor (in list order) whose leading term divides it.
/// No term of the result is divisible by any divisor's leading term.
pub fn normal_form(
    f: &Polynomial,
    divisors: &[Polynomial],
    order: &TermOrder,
) -> Result<Polynomial> {
    let ring = f.ring().clone();
    for g in divisors {
        if g.is_zero() {
            return Err(Error::ZeroGenerator);
        }
        if !same_ring(&ring, g.ring()) {
            return Err(Error::RingMismatch);
        }
    }
    let field = *f.field();
    let leads: Vec<(Monomial, u64)> = divisors
        .iter()
        .map(|g| g.leading_term(order).map(|(m, c)| (m.clone(), c)))
        .collect::<Result<_>>()?;

    let mut remainder = Polynomial::zero(ring.clone());
    let mut work = f.clone();
    while !work.is_zero() {
        let (lm, lc) = {
            let (m, c) = work.leading_term(order)?;
            (m.clone(), c)
        };
        let mut reduced = false;
        for (g, (gm, gc)) in divisors.iter().zip(&leads) {
            if let Some(q) = gm.divide_into(&lm) {
                let factor = field.div(lc, *gc);
                work = work.sub(&g.mul_term(&q, factor))?;
                reduced = true;
                break;
            }
        }
        if !reduced {
            let lead = Polynomial {
                ring: ring.clone(),
                terms: vec![(lm, lc)],
            };
            remainder = remainder.add(&lead)?;
            work = work.sub(&lead)?;
        }
    }
    Ok(remainder)
}

/// S-polynomial of f and g with respect to `order`.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, order: &TermOrder) -> Result<Polynomial> {
    let (fm, fc) = f.leading_term(order)?;
    let (gm, gc) = g.leading_term(order)?;
    let lcm = fm.lcm(gm);
    let field = *f.field();
    let qf = fm.divide_into(&lcm).unwrap();
    let qg = gm.divide_into(&lcm).unwrap();
    let left = f.mul_term(&qf, field.inv(fc));
    let right = g.mul_term(&qg, field.inv(gc));
    left.sub(&right)
}

/// An ordered list of nonzero generators. The order is part of the data:
/// the homogenized companions depend on the chosen generators.
#[derive(Clone, Debug, PartialEq)]
pub struct Ideal {
    ring: RingRef,
    generators: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(ring: RingRef, generators: Vec<Polynomial>) -> Result<Ideal> {
        if generators.is_empty() {
            return Err(Error::EmptySystem);
        }
        for g in &generators {
            if g.is_zero() {
                return Err(Error::ZeroGenerator);
            }
            if !same_ring(&ring, g.ring()) {
                return Err(Error::RingMismatch);
            }
        }
        Ok(Ideal { ring, generators })
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.generators.iter().map(|g| g.degree()).collect()
    }

    pub fn max_degree(&self) -> u32 {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(|g| g.is_homogeneous())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(out, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(out, " + ")?;
            }
            first = false;
            if m.is_one() {
                write!(out, "{c}")?;
            } else {
                let mut parts = Vec::new();
                if *c != 1 {
                    parts.push(c.to_string());
                }
                for (i, &e) in m.exponents().iter().enumerate() {
                    match e {
                        0 => {}
                        1 => parts.push(self.ring.var_name(i).to_string()),
                        _ => parts.push(format!("{}^{}", self.ring.var_name(i), e)),
                    }
                }
                write!(out, "{}", parts.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(out, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub fn ring(p: u64, vars: &[&str]) -> RingRef {
        Ring::new(
            PrimeField::new(p).unwrap(),
            vars.iter().map(|s| s.to_string()).collect(),
        )
        .unwrap()
    }

    fn var(r: &RingRef, name: &str) -> Polynomial {
        Polynomial::variable(r.clone(), r.var_index(name).unwrap())
    }

    #[test]
    fn add_cancels_to_constant() {
        // (x + 1) + (p - 1) x = 1 over F_p
        for p in [5u64, 7, 101] {
            let r = ring(p, &["x"]);
            let x = var(&r, "x");
            let f = x.add(&Polynomial::constant(r.clone(), 1)).unwrap();
            let g = x.scale(p - 1);
            assert_eq!(f.add(&g).unwrap(), Polynomial::constant(r.clone(), 1));
        }
    }

    #[test]
    fn frobenius_square_over_f2() {
        let r = ring(2, &["x", "y"]);
        let f = var(&r, "x").add(&var(&r, "y")).unwrap();
        let sq = f.pow(2).unwrap();
        let expected = Polynomial::from_terms(
            r.clone(),
            vec![
                (Monomial::new(vec![2, 0]), 1),
                (Monomial::new(vec![0, 2]), 1),
            ],
        );
        assert_eq!(sq, expected);
    }

    #[test]
    fn multiply_by_zero() {
        let r = ring(7, &["x", "y"]);
        let f = var(&r, "x").add(&Polynomial::constant(r.clone(), 3)).unwrap();
        let z = Polynomial::zero(r.clone());
        assert!(f.mul(&z).unwrap().is_zero());
    }

    #[test]
    fn ring_mismatch_rejected() {
        let r1 = ring(7, &["x"]);
        let r2 = ring(5, &["x"]);
        let f = Polynomial::variable(r1, 0);
        let g = Polynomial::variable(r2, 0);
        assert!(matches!(f.add(&g), Err(Error::RingMismatch)));
    }

    #[test]
    fn leading_term_examples() {
        let r = ring(7, &["x", "y", "t"]);
        // f = tx - x + ty under bar-sigma(LEX) with x > y: leading term tx
        let f = Polynomial::from_terms(
            r.clone(),
            vec![
                (Monomial::new(vec![1, 0, 1]), 1),
                (Monomial::new(vec![1, 0, 0]), 6),
                (Monomial::new(vec![0, 1, 1]), 1),
            ],
        );
        let ord = TermOrder::bar_sigma(TermOrder::Lex);
        let (m, _) = f.leading_term(&ord).unwrap();
        assert_eq!(m, &Monomial::new(vec![1, 0, 1]));

        // f = x^2 - t^2 under DRL with t last: leading term x^2
        let g = Polynomial::from_terms(
            r.clone(),
            vec![
                (Monomial::new(vec![2, 0, 0]), 1),
                (Monomial::new(vec![0, 0, 2]), 6),
            ],
        );
        let (m, _) = g.leading_term(&TermOrder::DrlTLast).unwrap();
        assert_eq!(m, &Monomial::new(vec![2, 0, 0]));

        // constants: leading term is the monomial 1
        let c = Polynomial::constant(r.clone(), 5);
        let (m, co) = c.leading_term(&TermOrder::Lex).unwrap();
        assert!(m.is_one());
        assert_eq!(co, 5);

        // the zero polynomial has none
        assert!(Polynomial::zero(r).leading_term(&TermOrder::Lex).is_err());
    }

    #[test]
    fn normal_form_examples() {
        let r = ring(7, &["x"]);
        let x = var(&r, "x");
        // x^2 mod (x^2 - 1) = 1
        let f = x.mul(&x).unwrap();
        let g = f.sub(&Polynomial::constant(r.clone(), 1)).unwrap();
        let nf = normal_form(&f, std::slice::from_ref(&g), &TermOrder::Lex).unwrap();
        assert_eq!(nf, Polynomial::constant(r.clone(), 1));
        // element of the divisor list reduces to zero
        assert!(normal_form(&g, std::slice::from_ref(&g), &TermOrder::Lex)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn normal_form_two_steps() {
        // x1^2 x2 mod (x1^2 - x2) = x2^2 under LEX x1 > x2
        let r = ring(7, &["x1", "x2"]);
        let f = Polynomial::term(r.clone(), Monomial::new(vec![2, 1]), 1);
        let g = Polynomial::from_terms(
            r.clone(),
            vec![(Monomial::new(vec![2, 0]), 1), (Monomial::new(vec![0, 1]), 6)],
        );
        let nf = normal_form(&f, &[g], &TermOrder::Lex).unwrap();
        assert_eq!(nf, Polynomial::term(r, Monomial::new(vec![0, 2]), 1));
    }

    #[test]
    fn evaluate_matches_expansion() {
        let r = ring(11, &["x", "y"]);
        let f = Polynomial::from_terms(
            r,
            vec![
                (Monomial::new(vec![2, 0]), 3),
                (Monomial::new(vec![1, 1]), 5),
                (Monomial::new(vec![0, 0]), 9),
            ],
        );
        // 3*4^2 + 5*4*7 + 9 = 48 + 140 + 9 = 197 = 10 mod 11
        assert_eq!(f.evaluate(&[4, 7]).unwrap(), 197 % 11);
    }
}

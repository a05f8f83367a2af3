//! The homogeneous companions of an ideal: generator-wise homogenization,
//! the full homogenized ideal, top-degree parts, and the dehomogenization
//! map t := 1.

use crate::error::{Error, Result};
use crate::groebner::buchberger;
use crate::order::TermOrder;
use crate::poly::{same_ring, Ideal, Polynomial, RingRef};

pub const HOMOGENIZING_VAR: &str = "t";

/// Pairs a source ring R with R[t], t appended as the last (and, under
/// `TermOrder::DrlTLast`, smallest) variable.
#[derive(Clone, Debug)]
pub struct HomogenizationContext {
    source: RingRef,
    target: RingRef,
}

impl HomogenizationContext {
    pub fn new(source: RingRef) -> Result<Self> {
        if source.var_index(HOMOGENIZING_VAR).is_some() {
            return Err(Error::InvalidInput(format!(
                "ring already has a variable named `{HOMOGENIZING_VAR}`"
            )));
        }
        let target = source.extended(HOMOGENIZING_VAR)?;
        Ok(HomogenizationContext { source, target })
    }

    pub fn source(&self) -> &RingRef {
        &self.source
    }

    pub fn target(&self) -> &RingRef {
        &self.target
    }

    /// f^h: pad every term with the power of t that lifts it to deg(f).
    pub fn homogenize_poly(&self, f: &Polynomial) -> Result<Polynomial> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if !same_ring(f.ring(), &self.source) {
            return Err(Error::RingMismatch);
        }
        let d = f.degree();
        let terms: Vec<_> = f
            .terms()
            .iter()
            .map(|(m, c)| (m.extend(d - m.degree()), *c))
            .collect();
        Ok(Polynomial::from_terms(self.target.clone(), terms))
    }

    /// The projection t := 1 back to the source ring.
    pub fn dehomogenize(&self, f: &Polynomial) -> Result<Polynomial> {
        if !same_ring(f.ring(), &self.target) {
            return Err(Error::RingMismatch);
        }
        Ok(f.substitute_last(1, &self.source))
    }

    /// Generator-wise homogenization (f_1^h, ..., f_r^h); order preserved.
    pub fn tilde_ideal(&self, ideal: &Ideal) -> Result<Ideal> {
        let gens = ideal
            .generators()
            .iter()
            .map(|g| self.homogenize_poly(g))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(self.target.clone(), gens)
    }

    /// The homogenization of the whole ideal, presented by the
    /// homogenization of its reduced DRL basis. That set generates and is a
    /// Gröbner basis of the homogenized ideal under DRL with t smallest.
    pub fn homogenized_ideal(&self, ideal: &Ideal) -> Result<Ideal> {
        let gb = buchberger(ideal, &TermOrder::Drl)?;
        let gens = gb
            .elements()
            .iter()
            .map(|g| self.homogenize_poly(g))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(self.target.clone(), gens)
    }
}

/// Homogeneous part of highest degree.
pub fn top_part(f: &Polynomial) -> Result<Polynomial> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let d = f.degree();
    let terms: Vec<_> = f
        .terms()
        .iter()
        .filter(|(m, _)| m.degree() == d)
        .cloned()
        .collect();
    Ok(Polynomial::from_terms(f.ring().clone(), terms))
}

/// Generator-wise top parts (f_1^top, ..., f_r^top).
pub fn top_ideal(ideal: &Ideal) -> Result<Ideal> {
    let gens = ideal
        .generators()
        .iter()
        .map(top_part)
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(ideal.ring().clone(), gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::monomial::Monomial;
    use crate::poly::Ring;

    fn ring(p: u64, vars: &[&str]) -> RingRef {
        Ring::new(
            PrimeField::new(p).unwrap(),
            vars.iter().map(|s| s.to_string()).collect(),
        )
        .unwrap()
    }

    fn poly(r: &RingRef, terms: &[(&[u32], i64)]) -> Polynomial {
        Polynomial::from_terms(
            r.clone(),
            terms
                .iter()
                .map(|(e, c)| (Monomial::new(e.to_vec()), r.field().from_int(*c)))
                .collect::<Vec<_>>(),
        )
    }

    #[test]
    fn homogenize_the_worked_pair() {
        // x^2 - 1 -> x^2 - t^2 and xy + x -> xy + xt
        let r = ring(7, &["x", "y"]);
        let ctx = HomogenizationContext::new(r.clone()).unwrap();
        let f1 = poly(&r, &[(&[2, 0], 1), (&[0, 0], -1)]);
        let f2 = poly(&r, &[(&[1, 1], 1), (&[1, 0], 1)]);
        let s = ctx.target();
        assert_eq!(
            ctx.homogenize_poly(&f1).unwrap(),
            poly(s, &[(&[2, 0, 0], 1), (&[0, 0, 2], -1)])
        );
        assert_eq!(
            ctx.homogenize_poly(&f2).unwrap(),
            poly(s, &[(&[1, 1, 0], 1), (&[1, 0, 1], 1)])
        );
    }

    #[test]
    fn homogeneous_polys_are_fixed_points() {
        let r = ring(5, &["x", "y"]);
        let ctx = HomogenizationContext::new(r.clone()).unwrap();
        let f = poly(&r, &[(&[2, 0], 1), (&[1, 1], 3)]);
        let fh = ctx.homogenize_poly(&f).unwrap();
        assert!(fh.is_homogeneous());
        assert!(fh.terms().iter().all(|(m, _)| m.exponent(2) == 0));
        assert_eq!(ctx.dehomogenize(&fh).unwrap(), f);
    }

    #[test]
    fn dehomogenize_collapses_terms() {
        // tx - x + ty |-> y
        let r = ring(7, &["x", "y"]);
        let ctx = HomogenizationContext::new(r.clone()).unwrap();
        let s = ctx.target().clone();
        let f = poly(&s, &[(&[1, 0, 1], 1), (&[1, 0, 0], -1), (&[0, 1, 1], 1)]);
        assert_eq!(ctx.dehomogenize(&f).unwrap(), poly(&r, &[(&[0, 1], 1)]));
        // t^k |-> 1
        let tk = poly(&s, &[(&[0, 0, 4], 1)]);
        assert_eq!(
            ctx.dehomogenize(&tk).unwrap(),
            Polynomial::constant(r.clone(), 1)
        );
    }

    #[test]
    fn top_parts() {
        let r = ring(7, &["x", "y"]);
        let f1 = poly(&r, &[(&[2, 0], 1), (&[0, 0], -1)]);
        let f2 = poly(&r, &[(&[1, 1], 1), (&[1, 0], 1)]);
        assert_eq!(top_part(&f1).unwrap(), poly(&r, &[(&[2, 0], 1)]));
        assert_eq!(top_part(&f2).unwrap(), poly(&r, &[(&[1, 1], 1)]));
        // homogeneous input is unchanged
        let h = poly(&r, &[(&[2, 0], 1), (&[1, 1], 2)]);
        assert_eq!(top_part(&h).unwrap(), h);
    }

    #[test]
    fn homogenized_ideal_of_the_worked_pair() {
        // (x^2 - 1, xy + x) closes up to (x^2 - t^2, y + t)
        let r = ring(7, &["x", "y"]);
        let f1 = poly(&r, &[(&[2, 0], 1), (&[0, 0], -1)]);
        let f2 = poly(&r, &[(&[1, 1], 1), (&[1, 0], 1)]);
        let ideal = Ideal::new(r.clone(), vec![f1, f2]).unwrap();
        let ctx = HomogenizationContext::new(r).unwrap();
        let h = ctx.homogenized_ideal(&ideal).unwrap();
        let s = ctx.target();
        let expected = vec![
            poly(s, &[(&[0, 1, 0], 1), (&[0, 0, 1], 1)]),
            poly(s, &[(&[2, 0, 0], 1), (&[0, 0, 2], -1)]),
        ];
        assert_eq!(h.generators(), expected);
    }

    #[test]
    fn homogenized_ideal_fixes_homogeneous_and_principal_inputs() {
        let r = ring(5, &["x", "y"]);
        // already homogeneous: the closure presentation is the reduced
        // basis of the input itself, untouched by the lift (no t appears)
        let g1 = poly(&r, &[(&[2, 0], 1)]);
        let g2 = poly(&r, &[(&[0, 2], 1), (&[1, 1], 2)]);
        let ideal = Ideal::new(r.clone(), vec![g1, g2]).unwrap();
        let ctx = HomogenizationContext::new(r.clone()).unwrap();
        let h = ctx.homogenized_ideal(&ideal).unwrap();
        assert!(h
            .generators()
            .iter()
            .all(|g| g.terms().iter().all(|(m, _)| m.exponent(2) == 0)));
        let reduced = buchberger(&ideal, &crate::order::TermOrder::Drl).unwrap();
        let projected: Vec<Polynomial> = h
            .generators()
            .iter()
            .map(|g| ctx.dehomogenize(g).unwrap())
            .collect();
        assert_eq!(projected, reduced.elements());

        // principal ideals homogenize generator-wise
        let f = poly(&r, &[(&[2, 0], 1), (&[0, 1], 3)]);
        let principal = Ideal::new(r.clone(), vec![f.clone()]).unwrap();
        let h = ctx.homogenized_ideal(&principal).unwrap();
        assert_eq!(h.generators().len(), 1);
        assert_eq!(
            h.generators()[0],
            ctx.homogenize_poly(&f.monic(&crate::order::TermOrder::Drl).unwrap())
                .unwrap()
        );
    }

    #[test]
    fn tilde_ideal_preserves_degrees_and_order() {
        let r = ring(5, &["x1", "x2", "x3"]);
        let f1 = poly(&r, &[(&[2, 0, 0], 1), (&[0, 1, 0], -1)]);
        let f2 = poly(&r, &[(&[0, 3, 0], 1), (&[0, 0, 1], -1)]);
        let ideal = Ideal::new(r.clone(), vec![f1.clone(), f2.clone()]).unwrap();
        let ctx = HomogenizationContext::new(r).unwrap();
        let tilde = ctx.tilde_ideal(&ideal).unwrap();
        let s = ctx.target();
        assert_eq!(
            tilde.generators()[0],
            poly(s, &[(&[2, 0, 0, 0], 1), (&[0, 1, 0, 1], -1)])
        );
        assert_eq!(
            tilde.generators()[1],
            poly(s, &[(&[0, 3, 0, 0], 1), (&[0, 0, 1, 2], -1)])
        );
        assert_eq!(tilde.degrees(), ideal.degrees());
    }
}

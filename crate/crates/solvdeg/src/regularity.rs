//! Invariants routed through the DRL initial ideal: zero-dimensionality,
//! index of regularity, Castelnuovo–Mumford regularity, and the
//! Faugère-style degree of regularity.
//!
//! The equality between the regularity of an ideal and of its DRL initial
//! ideal needs the ideal to be zero-dimensional or in generic coordinates
//! over the closure. Zero-dimensionality is checked; generic coordinates
//! has no decision procedure here and is only ever echoed from a
//! caller-supplied assertion.

use crate::betti::cm_regularity;
use crate::error::{Error, Result};
use crate::groebner::buchberger;
use crate::hilbert::{hilbert_series, monomial_krull_dim};
use crate::homogenize::top_ideal;
use crate::monomial::Monomial;
use crate::order::TermOrder;
use crate::poly::Ideal;
use serde::Serialize;

/// Leading monomials of the reduced DRL basis: the minimal generators of
/// the initial ideal.
pub fn initial_ideal_drl(ideal: &Ideal) -> Result<Vec<Monomial>> {
    let order = TermOrder::Drl;
    let gb = buchberger(ideal, &order)?;
    gb.elements()
        .iter()
        .map(|g| g.leading_monomial(&order))
        .collect()
}

/// Finiteness of the zero locus over the algebraic closure.
///
/// Affine case: the quotient by the initial ideal has Krull dimension 0.
/// Projective case (homogeneous input only): dimension at most 1.
pub fn is_zero_dimensional(ideal: &Ideal, projective: bool) -> Result<bool> {
    if projective && !ideal.is_homogeneous() {
        return Err(Error::InhomogeneousInput);
    }
    let n = ideal.ring().num_vars();
    let initial = initial_ideal_drl(ideal)?;
    let dim = monomial_krull_dim(&initial, n);
    Ok(if projective { dim <= 1 } else { dim == 0 })
}

/// Smallest degree from which the Hilbert function of the quotient agrees
/// with its Hilbert polynomial, read off the Hilbert series of the initial
/// ideal (passing to the initial ideal preserves the Hilbert function).
pub fn index_of_regularity(ideal: &Ideal) -> Result<i64> {
    if !ideal.is_homogeneous() {
        return Err(Error::InhomogeneousInput);
    }
    let n = ideal.ring().num_vars();
    let initial = initial_ideal_drl(ideal)?;
    Ok(hilbert_series(&initial, n).index_of_regularity())
}

#[derive(Clone, Debug, Serialize)]
pub struct RegularityReport {
    /// reg of the DRL initial ideal.
    pub value: u32,
    /// Whether the projective zero-dimensionality hypothesis was verified.
    pub zero_dimensional: bool,
    /// Caller-asserted "generic coordinates" flag, echoed, never computed.
    pub generic_coordinates_asserted: bool,
    /// With a hypothesis in force the value equals the regularity of the
    /// ideal itself; otherwise it is only an upper bound.
    pub exact: bool,
}

impl RegularityReport {
    pub fn label(&self) -> &'static str {
        if self.exact {
            "exact"
        } else {
            "upper-bound heuristic"
        }
    }
}

/// Regularity of a homogeneous ideal via its DRL initial ideal, with the
/// hypothesis report saying how to read the value.
pub fn reg_via_initial(ideal: &Ideal, assert_generic_coords: bool) -> Result<RegularityReport> {
    if !ideal.is_homogeneous() {
        return Err(Error::InhomogeneousInput);
    }
    let n = ideal.ring().num_vars();
    let initial = initial_ideal_drl(ideal)?;
    let value = cm_regularity(&initial, n, ideal.ring().field())?;
    let zero_dimensional = monomial_krull_dim(&initial, n) <= 1;
    Ok(RegularityReport {
        value,
        zero_dimensional,
        generic_coordinates_asserted: assert_generic_coords,
        exact: zero_dimensional || assert_generic_coords,
    })
}

/// Faugère-style degree of regularity: the index of regularity of the
/// top-degree-part ideal, defined only when that ideal is Artinian.
pub fn dreg_faugere(ideal: &Ideal) -> Result<i64> {
    let top = top_ideal(ideal)?;
    let n = top.ring().num_vars();
    let initial = initial_ideal_drl(&top)?;
    if monomial_krull_dim(&initial, n) != 0 {
        return Err(Error::DregUndefined(
            "the top-degree ideal does not contain a power of every variable \
             (its quotient has positive Krull dimension), so its Hilbert \
             polynomial is nonzero"
                .into(),
        ));
    }
    Ok(hilbert_series(&initial, n).index_of_regularity())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::poly::{Polynomial, Ring, RingRef};

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

    fn f5_curve() -> Ideal {
        let r = ring(5, &["x1", "x2", "x3"]);
        let f1 = poly(&r, &[(&[2, 0, 0], 1), (&[0, 1, 0], -1)]);
        let f2 = poly(&r, &[(&[0, 3, 0], 1), (&[0, 0, 1], -1)]);
        Ideal::new(r, vec![f1, f2]).unwrap()
    }

    #[test]
    fn the_curve_is_positive_dimensional_until_field_equations_close_it() {
        let ideal = f5_curve();
        assert!(!is_zero_dimensional(&ideal, false).unwrap());

        let r = ideal.ring().clone();
        let mut gens = ideal.generators().to_vec();
        for i in 0..3 {
            let mut e5 = [0u32; 3];
            e5[i] = 5;
            let mut e1 = [0u32; 3];
            e1[i] = 1;
            gens.push(poly(&r, &[(&e5[..], 1), (&e1[..], -1)]));
        }
        let closed = Ideal::new(r, gens).unwrap();
        assert!(is_zero_dimensional(&closed, false).unwrap());
    }

    #[test]
    fn projective_check_needs_homogeneous_input() {
        let ideal = f5_curve();
        assert!(matches!(
            is_zero_dimensional(&ideal, true),
            Err(Error::InhomogeneousInput)
        ));
    }

    #[test]
    fn monomial_cone_is_projectively_finite() {
        let r = ring(7, &["x", "y", "z"]);
        let gens = vec![
            poly(&r, &[(&[2, 0, 0], 1)]),
            poly(&r, &[(&[1, 1, 0], 1)]),
            poly(&r, &[(&[1, 0, 1], 1)]),
            poly(&r, &[(&[0, 3, 0], 1)]),
        ];
        let ideal = Ideal::new(r, gens).unwrap();
        assert!(is_zero_dimensional(&ideal, true).unwrap());
        assert_eq!(index_of_regularity(&ideal).unwrap(), 1);
    }

    #[test]
    fn ireg_of_artinian_squares_and_a_principal_ideal() {
        let r = ring(7, &["x", "y"]);
        let gens = vec![
            poly(&r, &[(&[2, 0], 1)]),
            poly(&r, &[(&[1, 1], 1)]),
            poly(&r, &[(&[0, 2], 1)]),
        ];
        assert_eq!(
            index_of_regularity(&Ideal::new(r, gens).unwrap()).unwrap(),
            2
        );

        let r1 = ring(7, &["x"]);
        let x = Polynomial::variable(r1.clone(), 0);
        assert_eq!(
            index_of_regularity(&Ideal::new(r1, vec![x]).unwrap()).unwrap(),
            1
        );
    }

    #[test]
    fn frobenius_powers_reg_via_initial() {
        // (x^3, y^3) over F_3: the initial ideal is the ideal itself, reg 5
        let r = ring(3, &["x", "y"]);
        let gens = vec![poly(&r, &[(&[3, 0], 1)]), poly(&r, &[(&[0, 3], 1)])];
        let report = reg_via_initial(&Ideal::new(r, gens).unwrap(), false).unwrap();
        assert_eq!(report.value, 5);
        assert!(report.zero_dimensional);
        assert!(report.exact);
        assert_eq!(report.label(), "exact");
    }

    #[test]
    fn monomial_input_reduces_to_the_betti_regularity() {
        let r = ring(101, &["x", "y", "z"]);
        let gens = vec![
            poly(&r, &[(&[2, 0, 0], 1)]),
            poly(&r, &[(&[1, 1, 0], 1)]),
            poly(&r, &[(&[1, 0, 1], 1)]),
            poly(&r, &[(&[0, 3, 0], 1)]),
        ];
        let report = reg_via_initial(&Ideal::new(r, gens).unwrap(), false).unwrap();
        assert_eq!(report.value, 3);
    }

    #[test]
    fn dreg_of_split_quadrics() {
        // (x^2 - a, y^2 - b): top parts (x^2, y^2), dreg 3
        for (a, b) in [(0i64, 0i64), (1, 2), (3, 3)] {
            let r = ring(7, &["x", "y"]);
            let gens = vec![
                poly(&r, &[(&[2, 0], 1), (&[0, 0], -a)]),
                poly(&r, &[(&[0, 2], 1), (&[0, 0], -b)]),
            ];
            assert_eq!(dreg_faugere(&Ideal::new(r, gens).unwrap()).unwrap(), 3);
        }
    }

    #[test]
    fn dreg_requires_an_artinian_top_ideal() {
        // top parts (x^2, xy) miss a power of y
        let r = ring(7, &["x", "y"]);
        let gens = vec![
            poly(&r, &[(&[2, 0], 1), (&[0, 0], -1)]),
            poly(&r, &[(&[1, 1], 1), (&[1, 0], 1)]),
        ];
        let err = dreg_faugere(&Ideal::new(r, gens).unwrap()).unwrap_err();
        assert!(matches!(err, Error::DregUndefined(_)));
    }

    #[test]
    fn dreg_of_homogeneous_artinian_input_is_its_ireg() {
        let r = ring(7, &["x", "y"]);
        let gens = vec![
            poly(&r, &[(&[2, 0], 1), (&[1, 1], 1)]),
            poly(&r, &[(&[0, 2], 1)]),
        ];
        let ideal = Ideal::new(r, gens).unwrap();
        assert_eq!(
            dreg_faugere(&ideal).unwrap(),
            index_of_regularity(&ideal).unwrap()
        );
    }
}

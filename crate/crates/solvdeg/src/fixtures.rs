//! Built-in systems: the ABC toy instance over F_2, the F_5 curve, the
//! solving-degree gap pair, field-equation closure, and seeded random
//! system generation for the experiment harness.

use crate::error::Result;
use crate::field::PrimeField;
use crate::minrank::{GradingKind, PolyMatrix};
use crate::monomial::{monomials_up_to_degree, Monomial};
use crate::poly::{Ideal, Polynomial, Ring, RingRef};
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn poly(ring: &RingRef, terms: &[(&[u32], i64)]) -> Polynomial {
    Polynomial::from_terms(
        ring.clone(),
        terms
            .iter()
            .map(|(e, c)| (Monomial::new(e.to_vec()), ring.field().from_int(*c)))
            .collect::<Vec<_>>(),
    )
}

/// The toy ABC instance over F_2 in four variables: the ideal generated by
/// the eight quadratic entries of A*B and A*C for
///
/// ```text
/// A = [x1 x2; x3 x4]
/// B = [x1+x2+x3+x4  x1+x2+x4; x3  x1+x2+x4]
/// C = [x4  x3+x4; x1+x4  0]
/// ```
pub fn abc_fixture() -> Ideal {
    let field = PrimeField::new(2).unwrap();
    let ring = Ring::new(
        field,
        vec!["x1".into(), "x2".into(), "x3".into(), "x4".into()],
    )
    .unwrap();
    let x = |i: usize| Polynomial::variable(ring.clone(), i);
    let sum = |parts: &[Polynomial]| -> Polynomial {
        parts
            .iter()
            .fold(Polynomial::zero(ring.clone()), |acc, p| acc.add(p).unwrap())
    };
    let mat = |entries: Vec<Polynomial>| {
        PolyMatrix::new(ring.clone(), 2, 2, entries, GradingKind::Generic).unwrap()
    };

    let a = mat(vec![x(0), x(1), x(2), x(3)]);
    let b = mat(vec![
        sum(&[x(0), x(1), x(2), x(3)]),
        sum(&[x(0), x(1), x(3)]),
        x(2),
        sum(&[x(0), x(1), x(3)]),
    ]);
    let c = mat(vec![x(3), sum(&[x(2), x(3)]), sum(&[x(0), x(3)]), Polynomial::zero(ring.clone())]);

    let ab = a.matmul(&b).unwrap();
    let ac = a.matmul(&c).unwrap();
    let mut gens = Vec::with_capacity(8);
    for m in [&ab, &ac] {
        for i in 0..2 {
            for j in 0..2 {
                gens.push(m.entry(i, j).clone());
            }
        }
    }
    Ideal::new(ring, gens).unwrap()
}

/// The reduced lexicographic basis the ABC fixture must reproduce, as
/// polynomial strings over x1 > x2 > x3 > x4.
pub fn abc_reduced_lex_basis_strings() -> Vec<&'static str> {
    vec![
        "x4^3",
        "x3*x4^2",
        "x3^2 + x3*x4",
        "x2*x4 + x3*x4",
        "x2*x3 + x4^2",
        "x2^2 + x4^2",
        "x1*x4 + x3*x4 + x4^2",
        "x1*x3 + x3*x4 + x4^2",
        "x1*x2 + x4^2",
        "x1^2",
    ]
}

/// (x1^2 - x2, x2^3 - x3) over F_5: a curve, not zero-dimensional.
pub fn f5_curve_ideal() -> Ideal {
    let ring = Ring::new(
        PrimeField::new(5).unwrap(),
        vec!["x1".into(), "x2".into(), "x3".into()],
    )
    .unwrap();
    let f1 = poly(&ring, &[(&[2, 0, 0], 1), (&[0, 1, 0], -1)]);
    let f2 = poly(&ring, &[(&[0, 3, 0], 1), (&[0, 0, 1], -1)]);
    Ideal::new(ring, vec![f1, f2]).unwrap()
}

/// (x^2 - 1, xy + x) over F_7: the pair whose solving degree exceeds its
/// basis degree.
pub fn gap_pair_ideal() -> Ideal {
    let ring = Ring::new(PrimeField::new(7).unwrap(), vec!["x".into(), "y".into()]).unwrap();
    let f1 = poly(&ring, &[(&[2, 0], 1), (&[0, 0], -1)]);
    let f2 = poly(&ring, &[(&[1, 1], 1), (&[1, 0], 1)]);
    Ideal::new(ring, vec![f1, f2]).unwrap()
}

/// Append the field equations x_i^p - x_i; equations already present as
/// generators are not duplicated.
pub fn add_field_equations(ideal: &Ideal) -> Result<Ideal> {
    let ring = ideal.ring().clone();
    let p = ring.field().modulus() as u32;
    let n = ring.num_vars();
    let mut gens = ideal.generators().to_vec();
    for i in 0..n {
        let eq = Polynomial::from_terms(
            ring.clone(),
            vec![
                (Monomial::var_power(n, i, p), 1),
                (Monomial::var_power(n, i, 1), ring.field().from_int(-1)),
            ],
        );
        if !gens.contains(&eq) {
            gens.push(eq);
        }
    }
    Ideal::new(ring, gens)
}

/// Dense random polynomial of exact total degree `degree` with a uniform
/// coefficient on every monomial of degree at most that.
pub fn random_dense_poly(
    ring: &RingRef,
    degree: u32,
    rng: &mut ChaCha8Rng,
) -> Polynomial {
    let p = ring.field().modulus();
    let n = ring.num_vars();
    loop {
        let terms: Vec<(Monomial, u64)> = monomials_up_to_degree(n, degree)
            .into_iter()
            .map(|m| (m, rng.random_range(0..p)))
            .collect();
        let f = Polynomial::from_terms(ring.clone(), terms);
        if f.degree() == degree && !f.is_zero() {
            return f;
        }
    }
}

/// A seeded random system with the given generator degrees over
/// F_p[x1, ..., xn]. Inhomogeneous with probability 1; resamples in the
/// measure-zero homogeneous case so callers can rely on it.
pub fn random_system(p: u64, n: usize, degrees: &[u32], seed: u64) -> Result<Ideal> {
    let field = PrimeField::new(p)?;
    let vars = (1..=n).map(|i| format!("x{i}")).collect();
    let ring = Ring::new(field, vars)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let gens: Vec<Polynomial> = degrees
            .iter()
            .map(|&d| random_dense_poly(&ring, d, &mut rng))
            .collect();
        let ideal = Ideal::new(ring.clone(), gens)?;
        if !ideal.is_homogeneous() {
            return Ok(ideal);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::buchberger;
    use crate::order::TermOrder;

    #[test]
    fn abc_fixture_shape() {
        let ideal = abc_fixture();
        assert_eq!(ideal.generators().len(), 8);
        assert!(ideal.generators().iter().all(|g| g.degree() == 2));
        assert!(ideal.is_homogeneous());
    }

    #[test]
    fn abc_reduced_lex_basis_matches_the_reference_one() {
        let ideal = abc_fixture();
        let gb = buchberger(&ideal, &TermOrder::Lex).unwrap();
        let mut got: Vec<String> = gb.elements().iter().map(|g| g.to_string()).collect();
        let mut want: Vec<String> = abc_reduced_lex_basis_strings()
            .into_iter()
            .map(|s| s.to_string())
            .collect();
        got.sort();
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn field_equation_closure_counts() {
        let ideal = f5_curve_ideal();
        let closed = add_field_equations(&ideal).unwrap();
        assert_eq!(closed.generators().len(), 5);
        // appending again adds nothing
        let twice = add_field_equations(&closed).unwrap();
        assert_eq!(twice.generators().len(), 5);
    }

    #[test]
    fn field_equations_for_one_variable_over_f2() {
        let ring = Ring::new(PrimeField::new(2).unwrap(), vec!["x".into()]).unwrap();
        let f = poly(&ring, &[(&[1], 1), (&[0], 1)]);
        let ideal = Ideal::new(ring, vec![f]).unwrap();
        let closed = add_field_equations(&ideal).unwrap();
        assert_eq!(closed.generators().len(), 2);
        assert_eq!(closed.generators()[1].to_string(), "x^2 + x");
    }

    #[test]
    fn random_systems_are_seed_stable() {
        let a = random_system(101, 3, &[2, 3], 9).unwrap();
        let b = random_system(101, 3, &[2, 3], 9).unwrap();
        assert_eq!(a.generators(), b.generators());
        assert_eq!(a.degrees(), vec![2, 3]);
        assert!(!a.is_homogeneous());
    }
}

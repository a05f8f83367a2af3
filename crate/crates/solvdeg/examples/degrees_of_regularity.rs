//! The two degrees of regularity side by side: the index of regularity of
//! the top-degree parts, and the first fall degree from syzygies in the
//! truncated ring. They measure different things and need not agree.

use solvdeg::firstfall::first_fall_degree;
use solvdeg::monomial::Monomial;
use solvdeg::poly::{Ideal, Polynomial, Ring};
use solvdeg::regularity::dreg_faugere;
use solvdeg::PrimeField;

fn main() -> solvdeg::Result<()> {
    // (x^2 - 3, y^2 - 5) over F_7: the top parts are (x^2, y^2)
    let ring = Ring::new(PrimeField::new(7)?, vec!["x".into(), "y".into()])?;
    let f1 = Polynomial::from_terms(
        ring.clone(),
        vec![(Monomial::new(vec![2, 0]), 1), (Monomial::new(vec![0, 0]), 4)],
    );
    let f2 = Polynomial::from_terms(
        ring.clone(),
        vec![(Monomial::new(vec![0, 2]), 1), (Monomial::new(vec![0, 0]), 2)],
    );
    let ideal = Ideal::new(ring, vec![f1, f2])?;
    println!("system over F_7:");
    for g in ideal.generators() {
        println!("  {g}");
    }
    println!("degree of regularity (top-part route): {}", dreg_faugere(&ideal)?);

    let fall = first_fall_degree(&ideal)?;
    println!("\nsyzygy dimensions in the truncated ring:");
    for (e, syz, triv) in &fall.dims {
        println!("  degree {e}: all syzygies {syz}, trivial {triv}");
    }
    match fall.first_fall_degree {
        Some(d) => println!("first fall degree: {d}"),
        None => println!("no fall degree below the top of the truncated ring"),
    }
    println!("\nreport as JSON:\n{}", fall.to_json());
    Ok(())
}

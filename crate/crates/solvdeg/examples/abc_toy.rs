//! The built-in ABC toy system over F_2: its lexicographic basis does not
//! have shape-lemma form, its only solution is the origin, and its solving
//! degree sits well under the 2n-quadrics-in-n-variables bound.

use solvdeg::fixtures::abc_fixture;
use solvdeg::groebner::buchberger;
use solvdeg::macaulay::solving_degree;
use solvdeg::minrank::abc_scheme_bound;
use solvdeg::order::TermOrder;
use solvdeg::solver::lex_solve;

fn main() -> solvdeg::Result<()> {
    let ideal = abc_fixture();
    println!(
        "{} quadratic generators in {} variables over F_2",
        ideal.generators().len(),
        ideal.ring().num_vars()
    );

    let gb = buchberger(&ideal, &TermOrder::Lex)?;
    println!("\nreduced lexicographic basis ({} elements):", gb.elements().len());
    for g in gb.elements() {
        println!("  {g}");
    }

    let points = lex_solve(&ideal)?;
    println!("\nrational solutions: {:?}", points.iter().map(|p| &p.coords).collect::<Vec<_>>());

    let n = ideal.ring().num_vars() as u32;
    let solvdeg = solving_degree(&ideal, &TermOrder::Drl, true)?;
    println!(
        "\nsolving degree {} <= {} (the 2n-quadrics bound at n = {n})",
        solvdeg,
        abc_scheme_bound(n)
    );
    Ok(())
}

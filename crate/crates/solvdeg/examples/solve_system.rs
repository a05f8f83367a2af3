//! Solve a zero-dimensional system: parse it, close it under the field
//! equations, and enumerate every rational solution from the reduced
//! lexicographic basis.

use solvdeg::fixtures::add_field_equations;
use solvdeg::parse::parse_system;
use solvdeg::solver::lex_solve;

fn main() -> solvdeg::Result<()> {
    let system = "\
field 5
vars x1 x2 x3
x1^2 - x2
x2^3 - x3
";
    let curve = parse_system(system)?;
    println!("input system:\n{system}");

    // the curve alone has infinitely many solutions over the closure; the
    // field equations cut it down to its rational points
    let closed = add_field_equations(&curve)?;
    println!(
        "after adding field equations: {} generators",
        closed.generators().len()
    );

    let points = lex_solve(&closed)?;
    println!("rational solutions:");
    for p in &points {
        println!("  {:?}", p.coords);
    }

    // each one really is a common zero of the original generators
    for p in &points {
        for g in curve.generators() {
            assert_eq!(g.evaluate(&p.coords)?, 0);
        }
    }
    println!("all {} points verified against the input system", points.len());
    Ok(())
}

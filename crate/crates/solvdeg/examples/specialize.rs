//! Specializing a lexicographic basis at a value of its last variable:
//! generically the substituted set is again a basis, and when it is not,
//! the certificate catches it and the basis is recomputed.

use solvdeg::fixtures::add_field_equations;
use solvdeg::groebner::buchberger;
use solvdeg::order::TermOrder;
use solvdeg::parse::parse_system;
use solvdeg::solver::{specialize_gb, univariate_roots};

fn main() -> solvdeg::Result<()> {
    let system = "\
field 5
vars x1 x2 x3
x1^2 - x2
x2^3 - x3
";
    let ideal = add_field_equations(&parse_system(system)?)?;
    let gb = buchberger(&ideal, &TermOrder::Lex)?;
    println!("reduced lexicographic basis:");
    for g in gb.elements() {
        println!("  {g}");
    }

    // the eliminant lives in the last variable; specialize at each root
    let eliminant = gb
        .elements()
        .iter()
        .find(|g| g.is_univariate_in(2))
        .expect("zero-dimensional systems have an eliminant");
    println!("\neliminant: {eliminant}");
    for (root, multiplicity) in univariate_roots(eliminant)? {
        let spec = specialize_gb(&gb, root)?;
        println!(
            "\nx3 = {root} (multiplicity {multiplicity}), substitution {} the basis property:",
            if spec.generic_held { "kept" } else { "lost" }
        );
        for g in &spec.polys {
            println!("  {g}");
        }
    }
    Ok(())
}

//! Reconstruct a lexicographic basis from points in normal position by
//! Lagrange interpolation, then solve it back to recover the points.

use solvdeg::poly::{Ideal, Ring};
use solvdeg::solver::{lex_solve, shape_interpolate, VarietyPoint};
use solvdeg::PrimeField;

fn main() -> solvdeg::Result<()> {
    let ring = Ring::new(
        PrimeField::new(11)?,
        vec!["x".into(), "y".into(), "z".into()],
    )?;
    let points = vec![
        VarietyPoint::new(vec![1, 2, 3]),
        VarietyPoint::new(vec![4, 4, 7]),
        VarietyPoint::new(vec![9, 0, 5]),
    ];
    println!("points: {:?}", points.iter().map(|p| &p.coords).collect::<Vec<_>>());

    let gb = shape_interpolate(&points, &ring)?;
    println!("\ninterpolated basis:");
    for g in gb.elements() {
        println!("  {g}");
    }

    let ideal = Ideal::new(ring, gb.elements().to_vec())?;
    let recovered = lex_solve(&ideal)?;
    println!(
        "\nsolving the basis recovers: {:?}",
        recovered.iter().map(|p| &p.coords).collect::<Vec<_>>()
    );
    let mut expected = points.clone();
    expected.sort();
    assert_eq!(recovered, expected);
    Ok(())
}

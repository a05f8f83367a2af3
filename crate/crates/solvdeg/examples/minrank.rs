//! Determinantal systems: build a rank-condition pencil, take its minor
//! ideal, and measure the solving degree against the regularity bound for
//! maximal minors.

use solvdeg::macaulay::solving_degree;
use solvdeg::minrank::{gen_instance, linear_pencil, minors, minrank_experiment, GradingKind};
use solvdeg::order::TermOrder;
use solvdeg::PrimeField;

fn main() -> solvdeg::Result<()> {
    let field = PrimeField::new(101)?;

    // a hand-built pencil: rank(x1*I + x2*E12 + x3*E21) <= 1 is one quadric
    let pencil = linear_pencil(
        field,
        &[
            vec![vec![1, 0], vec![0, 1]],
            vec![vec![0, 1], vec![0, 0]],
            vec![vec![0, 0], vec![1, 0]],
        ],
    )?;
    let rank_condition = minors(&pencil, 2)?;
    println!("pencil rank condition:");
    for g in rank_condition.generators() {
        println!("  {g}");
    }
    println!(
        "solving degree: {}",
        solving_degree(&rank_condition, &TermOrder::Drl, true)?
    );

    // seeded generic instances: maximal minors of all-linear matrices solve
    // at degree r when the minor locus has the expected codimension
    for (r, s, seed) in [(2usize, 3usize, 7u64), (3, 4, 12)] {
        let matrix = gen_instance(GradingKind::Generic, r, s, 3, field, seed)?;
        let report = minrank_experiment(&matrix, r)?;
        println!(
            "\n{r} x {s} generic linear (seed {seed}): solvdeg = {}, bound = {:?}, height check {}",
            report.solvdeg,
            report.bound,
            if report.height_ok { "passed" } else { "failed" }
        );
        println!("report JSON: {}", report.to_json());
    }
    Ok(())
}

//! Watch the Macaulay elimination loop find a Gröbner basis and read the
//! solving degree off its trace, on a pair whose solving degree is
//! strictly larger than any degree in its reduced basis.

use solvdeg::fixtures::gap_pair_ideal;
use solvdeg::groebner::max_gb_degree;
use solvdeg::macaulay::xl_groebner;
use solvdeg::order::TermOrder;

fn main() -> solvdeg::Result<()> {
    let ideal = gap_pair_ideal();
    println!("system over F_7:");
    for g in ideal.generators() {
        println!("  {g}");
    }

    let (basis, report) = xl_groebner(&ideal, &TermOrder::Drl, true)?;
    println!("\nelimination trace (mutants on):");
    for t in &report.trace {
        println!(
            "  degree {}: {} x {} matrix, rank {}, {} mutant rows",
            t.d, t.rows, t.cols, t.rank, t.mutants
        );
    }
    println!("solving degree: {}", report.solving_degree);

    println!("\nreduced basis found:");
    for g in basis.elements() {
        println!("  {g}");
    }
    let maxgb = max_gb_degree(&ideal, &TermOrder::Drl)?;
    println!(
        "largest basis degree is {maxgb}, strictly below the solving degree {}",
        report.solving_degree
    );

    println!("\nreport as JSON:\n{}", report.to_json());
    Ok(())
}

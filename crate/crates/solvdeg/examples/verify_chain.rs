//! The full consistency report for an inhomogeneous system: the six
//! solving-degree and basis-degree quantities, the zero-dimensionality
//! check on the homogenized generators, the regularity bound, and the
//! degree-sum bounds, each relation checked and printed.

use solvdeg::chain::verify_chain;
use solvdeg::fixtures::gap_pair_ideal;

fn main() -> solvdeg::Result<()> {
    let ideal = gap_pair_ideal();
    let report = verify_chain(&ideal, false)?;

    let q = &report.quantities;
    println!("solving degrees: ideal {} | homogenized generators {} | homogenized ideal {}",
        q.solvdeg_ideal, q.solvdeg_tilde, q.solvdeg_homogenized);
    println!("basis degrees:   ideal {} | homogenized generators {} | homogenized ideal {}",
        q.maxgb_ideal, q.maxgb_tilde, q.maxgb_homogenized);
    println!(
        "homogenized generators zero-dimensional: {}",
        report.tilde_zero_dimensional
    );
    if let Some(reg) = &report.regularity {
        println!("regularity bound: {} ({})", reg.value, reg.label());
    }
    println!(
        "degree-sum bounds: {} and {}",
        report.macaulay_bound, report.macaulay_degree_bound
    );
    println!();
    for check in &report.checks {
        println!(
            "[{}] {:<40} {}",
            if check.holds { "ok" } else { "FAIL" },
            check.name,
            check.detail
        );
    }
    assert!(report.pass);
    Ok(())
}

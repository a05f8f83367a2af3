//! The three homogeneous companions of a system: generator-wise
//! homogenization, the homogenization of the whole ideal, and the
//! top-degree parts, with the projection t := 1 undoing the first two.

use solvdeg::fixtures::gap_pair_ideal;
use solvdeg::homogenize::{top_ideal, HomogenizationContext};

fn main() -> solvdeg::Result<()> {
    let ideal = gap_pair_ideal();
    println!("generators:");
    for g in ideal.generators() {
        println!("  {g}");
    }

    let ctx = HomogenizationContext::new(ideal.ring().clone())?;
    let tilde = ctx.tilde_ideal(&ideal)?;
    println!("\nhomogenized generators:");
    for g in tilde.generators() {
        println!("  {g}");
    }

    // the homogenized ideal can be strictly larger: it picks up y + t here
    let homogenized = ctx.homogenized_ideal(&ideal)?;
    println!("\nbasis of the homogenized ideal:");
    for g in homogenized.generators() {
        println!("  {g}");
    }

    let top = top_ideal(&ideal)?;
    println!("\ntop-degree parts:");
    for g in top.generators() {
        println!("  {g}");
    }

    // dehomogenization recovers the original generators
    for (g, h) in ideal.generators().iter().zip(tilde.generators()) {
        assert_eq!(&ctx.dehomogenize(h)?, g);
    }
    println!("\nsetting t = 1 recovers every generator");
    Ok(())
}

//! Betti table, regularity, Hilbert series, and index of regularity of a
//! monomial ideal, all from exact rank computations.

use solvdeg::hilbert::{hilbert_series, monomial_krull_dim};
use solvdeg::{betti_table, Monomial, PrimeField};

fn main() {
    // (x^2, xy, xz, y^3) in k[x, y, z]
    let gens = vec![
        Monomial::new(vec![2, 0, 0]),
        Monomial::new(vec![1, 1, 0]),
        Monomial::new(vec![1, 0, 1]),
        Monomial::new(vec![0, 3, 0]),
    ];
    let field = PrimeField::new(101).unwrap();

    let table = betti_table(&gens, 3, &field);
    println!("graded Betti numbers:");
    for ((i, j), v) in &table.entries {
        println!("  beta[{i},{j}] = {v}");
    }
    println!("projective dimension: {}", table.pd);
    println!("regularity: {}", table.regularity());

    let hs = hilbert_series(&gens, 3);
    println!("\nHilbert series numerator: {:?} over (1-z)^{}", hs.numerator, hs.dim);
    print!("Hilbert function: ");
    let values: Vec<i64> = (0..8).map(|d| hs.coefficient(d)).collect();
    println!("{values:?}");
    println!("index of regularity: {}", hs.index_of_regularity());
    println!(
        "Krull dimension of the quotient: {}",
        monomial_krull_dim(&gens, 3)
    );
    println!("\nBetti table as JSON:\n{}", table.to_json());
}

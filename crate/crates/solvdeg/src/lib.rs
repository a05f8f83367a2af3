//! Gröbner bases over prime fields computed two ways — a reference
//! Buchberger engine and a Macaulay-matrix elimination loop with an
//! instrumented solving degree — together with the commutative-algebra
//! invariants that bound that degree: Hilbert series, graded Betti numbers,
//! Castelnuovo–Mumford regularity, the index of regularity, and two degrees
//! of regularity. Solution extraction from lexicographic bases, shape-lemma
//! interpolation, and determinantal (MinRank) instances round out the kit.
//!
//! Start with the runnable programs under `examples/`; each one exercises a
//! major capability end to end. The short version:
//!
//! ```
//! use solvdeg::{parse_system, solving_degree, verify_chain, TermOrder};
//!
//! let ideal = parse_system("field 7\nvars x y\nx^2 - 1\nx*y + x\n")?;
//! assert_eq!(solving_degree(&ideal, &TermOrder::Drl, true)?, 3);
//!
//! let report = verify_chain(&ideal, false)?;
//! assert!(report.pass);
//! assert_eq!(report.quantities.maxgb_ideal, 2); // strictly below the solving degree
//! # Ok::<(), solvdeg::Error>(())
//! ```

pub mod betti;
pub mod chain;
pub mod error;
pub mod field;
pub mod firstfall;
pub mod fixtures;
pub mod groebner;
pub mod hilbert;
pub mod homogenize;
mod linalg;
pub mod macaulay;
pub mod minrank;
pub mod monomial;
pub mod order;
pub mod parse;
pub mod poly;
pub mod regularity;
pub mod solver;

pub use betti::{betti_table, cm_regularity, BettiTable};
pub use chain::{macaulay_bound, macaulay_degree_bound, verify_chain, ChainReport};
pub use error::{Error, Result};
pub use field::PrimeField;
pub use firstfall::{
    first_fall_degree, syzygy_dim, trivial_syzygy_dim, FirstFallReport, TruncatedRing,
};
pub use groebner::{buchberger, is_groebner, max_gb_degree, GroebnerBasis};
pub use hilbert::{hilbert_series, minimal_generators, monomial_krull_dim, HilbertSeries};
pub use homogenize::{top_ideal, top_part, HomogenizationContext};
pub use macaulay::{
    build_macaulay, rref, solving_degree, xl_groebner, MacaulayMatrix, SolveReport,
};
pub use minrank::{
    gen_instance, linear_pencil, minor_count, minors, minrank_experiment, GradingKind,
    MinrankReport, PolyMatrix,
};
pub use monomial::{monomials_of_degree, monomials_up_to_degree, Monomial};
pub use order::{compare_terms, TermOrder};
pub use parse::{parse_matrix, parse_points, parse_system, print_matrix, print_points, print_system};
pub use poly::{normal_form, s_polynomial, Ideal, Polynomial, Ring, RingRef};
pub use regularity::{
    dreg_faugere, index_of_regularity, is_zero_dimensional, reg_via_initial, RegularityReport,
};
pub use solver::{
    lex_solve, shape_interpolate, specialize_gb, unique_solve, univariate_roots,
    SpecializedBasis, VarietyPoint,
};

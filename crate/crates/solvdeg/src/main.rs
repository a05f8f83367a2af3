//! Thin command-line front end. All computation lives in the library; each
//! subcommand parses its input, calls one library entry point, and prints
//! either a human-readable summary or the JSON form with `--json`.
//!
//! Exit codes: 0 success (and every asserted relation holding), 1 a
//! verify-chain relation failed, 2 precondition failure, 3 degree cap
//! exceeded, 4 parse error.

use clap::{Parser, Subcommand, ValueEnum};
use solvdeg::chain::verify_chain;
use solvdeg::error::{Error, Result};
use solvdeg::fixtures::{abc_fixture, add_field_equations};
use solvdeg::groebner::buchberger;
use solvdeg::homogenize::{top_ideal, HomogenizationContext};
use solvdeg::macaulay::xl_groebner;
use solvdeg::minrank::{gen_instance, minors, minrank_experiment_seeded, GradingKind};
use solvdeg::order::TermOrder;
use solvdeg::parse::{
    parse_matrix, parse_points, parse_system, print_matrix, print_points, print_system,
};
use solvdeg::poly::Ideal;
use solvdeg::regularity::{dreg_faugere, index_of_regularity, reg_via_initial};
use solvdeg::solver::{lex_solve, shape_interpolate, specialize_gb, unique_solve};
use solvdeg::{betti_table, firstfall, hilbert_series, PrimeField};
use std::io::Read;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "solvdeg", version, about = "Gröbner bases, solving degrees, and the invariants that bound them", long_about = None)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Lex,
    Drl,
}

#[derive(Clone, Copy, ValueEnum)]
enum MutantsArg {
    On,
    Off,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    GenericLinear,
    RowGraded,
    ColumnGraded,
}

#[derive(Subcommand)]
enum Command {
    /// Reduced Gröbner basis of a system
    Gb {
        file: String,
        #[arg(long, value_enum, default_value = "drl")]
        order: OrderArg,
    },
    /// Solving degree via Macaulay elimination, with the per-degree trace
    Solvdeg {
        file: String,
        #[arg(long, value_enum, default_value = "drl")]
        order: OrderArg,
        #[arg(long, value_enum, default_value = "on")]
        mutants: MutantsArg,
    },
    /// Homogenize the generators (new last variable t)
    Homogenize { file: String },
    /// Top-degree parts of the generators
    Top { file: String },
    /// Regularity of a homogeneous system via its DRL initial ideal
    Reg {
        file: String,
        #[arg(long)]
        assert_generic_coords: bool,
    },
    /// Graded Betti numbers of a monomial system
    Betti { file: String },
    /// Hilbert series of a monomial system
    Hilbert { file: String },
    /// Index of regularity of a homogeneous system
    Ireg { file: String },
    /// Degree of regularity (index of regularity of the top parts)
    Dregf { file: String },
    /// First fall degree of a quadratic system
    Firstfall { file: String },
    /// All rational solutions of a zero-dimensional system
    Solve { file: String },
    /// The unique solution of a one-solution system
    UniqueSolve { file: String },
    /// Lexicographic basis of the vanishing ideal of a points file
    Interpolate { file: String },
    /// Substitute a value for the last variable in the reduced LEX basis
    Specialize {
        file: String,
        #[arg(long)]
        value: i64,
    },
    /// Ideal of t x t minors of a matrix file
    Minors {
        file: String,
        #[arg(long)]
        t: usize,
    },
    /// Generate a seeded determinantal instance (matrix file on stdout)
    MinrankGen {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
        #[arg(long)]
        nvars: usize,
        #[arg(long)]
        field: u64,
        #[arg(long, default_value = "0")]
        seed: u64,
    },
    /// Solving-degree experiment on the minors of a matrix file
    MinrankExp {
        file: String,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// The six-quantity solving-degree/basis-degree consistency report
    VerifyChain {
        file: String,
        #[arg(long)]
        assert_generic_coords: bool,
    },
    /// Print the built-in ABC toy system over F_2
    AbcFixture,
    /// Append the field equations x_i^p - x_i
    AddFieldEqs { file: String },
}

fn read_input(path: &str) -> Result<String> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::InvalidInput(format!("cannot read stdin: {e}")))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidInput(format!("cannot read {path}: {e}")))
    }
}

fn load_ideal(path: &str) -> Result<Ideal> {
    parse_system(&read_input(path)?)
}

fn order_of(arg: OrderArg) -> TermOrder {
    match arg {
        OrderArg::Lex => TermOrder::Lex,
        OrderArg::Drl => TermOrder::Drl,
    }
}

/// Monomial generators of a system whose generators are single terms.
fn monomial_generators(ideal: &Ideal) -> Result<Vec<solvdeg::Monomial>> {
    ideal
        .generators()
        .iter()
        .map(|g| {
            if g.num_terms() == 1 {
                Ok(g.terms()[0].0.clone())
            } else {
                Err(Error::InvalidInput(
                    "this command expects a monomial system (one term per line)".into(),
                ))
            }
        })
        .collect()
}

fn run(cli: Cli) -> Result<i32> {
    let json = cli.json;
    match cli.command {
        Command::Gb { file, order } => {
            let ideal = load_ideal(&file)?;
            let order = order_of(order);
            let gb = buchberger(&ideal, &order)?;
            if json {
                let elements: Vec<String> =
                    gb.elements().iter().map(|g| g.to_string()).collect();
                println!(
                    "{}",
                    serde_json::json!({
                        "order": order.name(),
                        "basis": elements,
                        "max_degree": gb.max_degree(),
                    })
                );
            } else {
                let basis_ideal = Ideal::new(ideal.ring().clone(), gb.elements().to_vec())?;
                print!("{}", print_system(&basis_ideal));
            }
        }
        Command::Solvdeg {
            file,
            order,
            mutants,
        } => {
            let ideal = load_ideal(&file)?;
            let order = order_of(order);
            let mutants = matches!(mutants, MutantsArg::On);
            let (_, report) = xl_groebner(&ideal, &order, mutants)?;
            if json {
                println!("{}", report.to_json());
            } else {
                println!("solving degree: {}", report.solving_degree);
                for t in &report.trace {
                    println!(
                        "  d={} rows={} cols={} rank={} mutants={}",
                        t.d, t.rows, t.cols, t.rank, t.mutants
                    );
                }
                if let Some(note) = &report.note {
                    println!("note: {note}");
                }
            }
        }
        Command::Homogenize { file } => {
            let ideal = load_ideal(&file)?;
            let ctx = HomogenizationContext::new(ideal.ring().clone())?;
            let tilde = ctx.tilde_ideal(&ideal)?;
            print!("{}", print_system(&tilde));
        }
        Command::Top { file } => {
            let ideal = load_ideal(&file)?;
            print!("{}", print_system(&top_ideal(&ideal)?));
        }
        Command::Reg {
            file,
            assert_generic_coords,
        } => {
            let ideal = load_ideal(&file)?;
            let report = reg_via_initial(&ideal, assert_generic_coords)?;
            if json {
                println!("{}", serde_json::to_string(&report).unwrap());
            } else {
                println!("reg(initial ideal) = {} ({})", report.value, report.label());
            }
        }
        Command::Betti { file } => {
            let ideal = load_ideal(&file)?;
            let gens = monomial_generators(&ideal)?;
            let table = betti_table(&gens, ideal.ring().num_vars(), ideal.ring().field());
            if json {
                println!("{}", table.to_json());
            } else {
                for ((i, j), v) in &table.entries {
                    println!("beta[{i},{j}] = {v}");
                }
                println!("pd = {}", table.pd);
                println!("reg = {}", table.regularity());
            }
        }
        Command::Hilbert { file } => {
            let ideal = load_ideal(&file)?;
            let gens = monomial_generators(&ideal)?;
            let hs = hilbert_series(&gens, ideal.ring().num_vars());
            if json {
                println!(
                    "{}",
                    serde_json::json!({
                        "h": hs.numerator,
                        "ell": hs.dim,
                        "ireg": hs.index_of_regularity(),
                    })
                );
            } else {
                println!("h = {:?}, ell = {}, ireg = {}", hs.numerator, hs.dim,
                    hs.index_of_regularity());
            }
        }
        Command::Ireg { file } => {
            let ideal = load_ideal(&file)?;
            let value = index_of_regularity(&ideal)?;
            if json {
                println!("{}", serde_json::json!({ "ireg": value }));
            } else {
                println!("ireg = {value}");
            }
        }
        Command::Dregf { file } => {
            let ideal = load_ideal(&file)?;
            let value = dreg_faugere(&ideal)?;
            if json {
                println!("{}", serde_json::json!({ "dreg_faugere": value }));
            } else {
                println!("dregF = {value}");
            }
        }
        Command::Firstfall { file } => {
            let ideal = load_ideal(&file)?;
            let report = firstfall::first_fall_degree(&ideal)?;
            if json {
                println!("{}", report.to_json());
            } else {
                match report.first_fall_degree {
                    Some(d) => println!("first fall degree: {d}"),
                    None => println!("no fall degree in the truncated ring"),
                }
                for (e, s, t) in &report.dims {
                    println!("  e={e} syz={s} triv={t}");
                }
            }
        }
        Command::Solve { file } => {
            let ideal = load_ideal(&file)?;
            let points = lex_solve(&ideal)?;
            if json {
                let coords: Vec<&Vec<u64>> = points.iter().map(|p| &p.coords).collect();
                println!("{}", serde_json::to_string(&coords).unwrap());
            } else {
                print!("{}", print_points(ideal.ring(), &points));
            }
        }
        Command::UniqueSolve { file } => {
            let ideal = load_ideal(&file)?;
            let point = unique_solve(&ideal)?;
            if json {
                println!("{}", serde_json::to_string(&point.coords).unwrap());
            } else {
                print!("{}", print_points(ideal.ring(), &[point]));
            }
        }
        Command::Interpolate { file } => {
            let (ring, points) = parse_points(&read_input(&file)?)?;
            let gb = shape_interpolate(&points, &ring)?;
            let basis_ideal = Ideal::new(ring, gb.elements().to_vec())?;
            print!("{}", print_system(&basis_ideal));
        }
        Command::Specialize { file, value } => {
            let ideal = load_ideal(&file)?;
            let gb = buchberger(&ideal, &TermOrder::Lex)?;
            let a = ideal.ring().field().from_int(value);
            let spec = specialize_gb(&gb, a)?;
            if json {
                let polys: Vec<String> = spec.polys.iter().map(|g| g.to_string()).collect();
                println!(
                    "{}",
                    serde_json::json!({
                        "polys": polys,
                        "generic_held": spec.generic_held,
                    })
                );
            } else {
                for g in &spec.polys {
                    println!("{g}");
                }
                if !spec.generic_held {
                    eprintln!("note: substitution lost the basis property; recomputed");
                }
            }
        }
        Command::Minors { file, t } => {
            let matrix = parse_matrix(&read_input(&file)?)?;
            let ideal = minors(&matrix, t)?;
            print!("{}", print_system(&ideal));
        }
        Command::MinrankGen {
            kind,
            rows,
            cols,
            nvars,
            field,
            seed,
        } => {
            let kind = match kind {
                KindArg::GenericLinear => GradingKind::Generic,
                KindArg::RowGraded => GradingKind::RowGraded,
                KindArg::ColumnGraded => GradingKind::ColumnGraded,
            };
            let field = PrimeField::new(field)?;
            let matrix = gen_instance(kind, rows, cols, nvars, field, seed)?;
            print!("{}", print_matrix(&matrix));
        }
        Command::MinrankExp { file, t, seed } => {
            let matrix = parse_matrix(&read_input(&file)?)?;
            let report = minrank_experiment_seeded(&matrix, t, seed)?;
            if json {
                println!("{}", report.to_json());
            } else {
                println!(
                    "r={} s={} t={} solvdeg={} bound={:?} height_ok={}",
                    report.r, report.s, report.t, report.solvdeg, report.bound, report.height_ok
                );
            }
        }
        Command::VerifyChain {
            file,
            assert_generic_coords,
        } => {
            let ideal = load_ideal(&file)?;
            let report = verify_chain(&ideal, assert_generic_coords)?;
            if json {
                println!("{}", report.to_json());
            } else {
                let q = &report.quantities;
                println!(
                    "solvdeg: ideal={} tilde={} homogenized={}",
                    q.solvdeg_ideal, q.solvdeg_tilde, q.solvdeg_homogenized
                );
                println!(
                    "maxGB:   ideal={} tilde={} homogenized={}",
                    q.maxgb_ideal, q.maxgb_tilde, q.maxgb_homogenized
                );
                println!("tilde zero-dimensional: {}", report.tilde_zero_dimensional);
                if let Some(reg) = &report.regularity {
                    println!("reg(initial(tilde)) = {} ({})", reg.value, reg.label());
                }
                println!(
                    "macaulay bounds: {} and {}",
                    report.macaulay_bound, report.macaulay_degree_bound
                );
                for c in &report.checks {
                    println!(
                        "  [{}] {} ({})",
                        if c.holds { "ok" } else { "FAIL" },
                        c.name,
                        c.detail
                    );
                }
            }
            if !report.pass {
                return Ok(1);
            }
        }
        Command::AbcFixture => {
            print!("{}", print_system(&abc_fixture()));
        }
        Command::AddFieldEqs { file } => {
            let ideal = load_ideal(&file)?;
            print!("{}", print_system(&add_field_equations(&ideal)?));
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}

//! Macaulay matrices, exact elimination, and the XL-style Gröbner loop
//! whose largest processed degree is the solving degree.
//!
//! For an inhomogeneous system the matrix at degree d holds every product
//! of a generator by a monomial multiplier of total degree at most d; for a
//! homogeneous system rows and columns sit at degree exactly d and results
//! are accumulated across degrees. When elimination produces a row of lower
//! degree than d (only possible in the inhomogeneous case) the mutant
//! strategy multiplies that row back up by all monomials that keep it
//! within degree d and eliminates again, repeating to a fixpoint.

use crate::error::{Error, Result};
use crate::groebner::{interreduce, is_groebner, GroebnerBasis};
use crate::linalg::rref_in_place;
use crate::monomial::{monomials_of_degree, monomials_up_to_degree, Monomial};
use crate::order::TermOrder;
use crate::poly::{normal_form, Ideal, Polynomial, RingRef};
use serde::Serialize;
use std::collections::{HashMap, HashSet};

pub const DEFAULT_DEGREE_CAP: u32 = 30;

/// How a row of a Macaulay matrix arose.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RowLabel {
    /// multiplier * generators[index]
    Product { multiplier: Monomial, generator: usize },
    /// A row appended by the mutant strategy.
    Mutant { multiplier: Monomial, source_degree: u32 },
    /// Rows of an eliminated matrix no longer track their origin.
    Synthetic(usize),
}

#[derive(Clone, Debug)]
pub struct MacaulayMatrix {
    ring: RingRef,
    degree: u32,
    homogeneous: bool,
    order: TermOrder,
    columns: Vec<Monomial>,
    col_index: HashMap<Monomial, usize>,
    row_labels: Vec<RowLabel>,
    entries: Vec<Vec<u64>>,
}

impl MacaulayMatrix {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn num_rows(&self) -> usize {
        self.entries.len()
    }

    pub fn num_cols(&self) -> usize {
        self.columns.len()
    }

    /// Column labels, sorted strictly decreasing under the matrix order.
    pub fn columns(&self) -> &[Monomial] {
        &self.columns
    }

    pub fn row_labels(&self) -> &[RowLabel] {
        &self.row_labels
    }

    pub fn entries(&self) -> &[Vec<u64>] {
        &self.entries
    }

    pub fn entry(&self, r: usize, c: usize) -> u64 {
        self.entries[r][c]
    }

    /// The polynomial a row represents.
    pub fn row_polynomial(&self, r: usize) -> Polynomial {
        let terms: Vec<(Monomial, u64)> = self.entries[r]
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(j, &c)| (self.columns[j].clone(), c))
            .collect();
        Polynomial::from_terms(self.ring.clone(), terms)
    }

    fn encode(&self, f: &Polynomial) -> Vec<u64> {
        let mut row = vec![0u64; self.columns.len()];
        for (m, c) in f.terms() {
            let j = self.col_index[m];
            row[j] = *c;
        }
        row
    }

    fn push_row(&mut self, label: RowLabel, f: &Polynomial) {
        let row = self.encode(f);
        self.row_labels.push(label);
        self.entries.push(row);
    }

    /// Nonzero row polynomials in row order.
    pub fn extract_polynomials(&self) -> Vec<Polynomial> {
        (0..self.num_rows())
            .map(|r| self.row_polynomial(r))
            .filter(|f| !f.is_zero())
            .collect()
    }
}

/// Build the Macaulay matrix of the ideal at degree `d`.
///
/// With `homogeneous` set, columns are the monomials of degree exactly d and
/// rows the products m*f_j of that degree; otherwise columns run over all
/// monomials of degree at most d and rows over products of degree at most d.
/// Columns are sorted decreasing under `order`; rows are grouped by
/// generator, multipliers sorted decreasing.
pub fn build_macaulay(
    ideal: &Ideal,
    d: u32,
    order: &TermOrder,
    homogeneous: bool,
) -> Result<MacaulayMatrix> {
    if d < 1 {
        return Err(Error::InvalidInput("Macaulay degree must be >= 1".into()));
    }
    let ring = ideal.ring().clone();
    let n = ring.num_vars();
    let mut columns = if homogeneous {
        monomials_of_degree(n, d)
    } else {
        monomials_up_to_degree(n, d)
    };
    sort_monomials_desc(&mut columns, order);
    let col_index: HashMap<Monomial, usize> = columns
        .iter()
        .enumerate()
        .map(|(j, m)| (m.clone(), j))
        .collect();

    let mut matrix = MacaulayMatrix {
        ring,
        degree: d,
        homogeneous,
        order: order.clone(),
        columns,
        col_index,
        row_labels: vec![],
        entries: vec![],
    };

    for (j, f) in ideal.generators().iter().enumerate() {
        let df = f.degree();
        if df > d {
            continue;
        }
        let mut multipliers = if homogeneous {
            monomials_of_degree(n, d - df)
        } else {
            monomials_up_to_degree(n, d - df)
        };
        sort_monomials_desc(&mut multipliers, order);
        for m in multipliers {
            let prod = f.mul_term(&m, 1);
            matrix.push_row(
                RowLabel::Product {
                    multiplier: m,
                    generator: j,
                },
                &prod,
            );
        }
    }
    Ok(matrix)
}

fn sort_monomials_desc(monomials: &mut [Monomial], order: &TermOrder) {
    monomials.sort_by(|a, b| order.cmp_monomials(b, a));
}

/// Unique reduced row echelon form; original row labels are replaced by
/// synthetic ones. Returns the eliminated matrix and its rank.
pub fn rref(matrix: &MacaulayMatrix) -> (MacaulayMatrix, usize) {
    let mut out = matrix.clone();
    let rank = rref_in_place(&mut out.entries, out.ring.field());
    out.row_labels = (0..out.entries.len()).map(RowLabel::Synthetic).collect();
    (out, rank)
}

#[derive(Clone, Debug, Serialize)]
pub struct TraceEntry {
    pub d: u32,
    pub rows: usize,
    pub cols: usize,
    pub rank: usize,
    #[serde(skip)]
    pub new_leading_terms: usize,
    pub mutants: usize,
}

/// Elimination trace of an XL run; the solving degree is the largest degree
/// that was processed.
#[derive(Clone, Debug, Serialize)]
pub struct SolveReport {
    pub solving_degree: u32,
    pub trace: Vec<TraceEntry>,
    pub order: String,
    pub mutants: bool,
    /// Informational only, not part of the wire format.
    #[serde(skip)]
    pub note: Option<String>,
}

impl SolveReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization")
    }
}

/// Gröbner basis by Gaussian elimination on Macaulay matrices of increasing
/// degree, instrumented with the solving degree.
///
/// At each degree the eliminated rows are merged into a running candidate
/// set, the candidate is interreduced, and the loop stops at the first
/// degree whose candidate is a Gröbner basis of the input ideal (Buchberger
/// criterion plus membership of every generator). With `mutants` set, rows
/// that drop in degree during elimination are multiplied back up and
/// re-eliminated before the candidate is read off.
pub fn xl_groebner(
    ideal: &Ideal,
    order: &TermOrder,
    mutants: bool,
) -> Result<(GroebnerBasis, SolveReport)> {
    xl_groebner_capped(ideal, order, mutants, DEFAULT_DEGREE_CAP)
}

pub fn xl_groebner_capped(
    ideal: &Ideal,
    order: &TermOrder,
    mutants: bool,
    degree_cap: u32,
) -> Result<(GroebnerBasis, SolveReport)> {
    for g in ideal.generators() {
        if g.is_zero() {
            return Err(Error::ZeroGenerator);
        }
    }
    let homogeneous = ideal.is_homogeneous();
    let max_gen_degree = ideal.max_degree();
    let start = if homogeneous {
        // accumulation has to visit every generator's own degree
        ideal.degrees().into_iter().min().unwrap_or(1).max(1)
    } else {
        max_gen_degree.max(1)
    };

    let mut found: Vec<Polynomial> = Vec::new();
    let mut seen_leading: HashSet<Monomial> = HashSet::new();
    let mut trace: Vec<TraceEntry> = Vec::new();

    for d in start..=degree_cap {
        let base = build_macaulay(ideal, d, order, homogeneous)?;
        let (mut eliminated, mut rank) = rref(&base);
        let mut mutant_rows = 0usize;

        if mutants && !homogeneous {
            // multiply degree-dropped rows back up until nothing new appears
            let mut expanded: HashSet<Polynomial> = HashSet::new();
            loop {
                let mut additions: Vec<(Monomial, u32, Polynomial)> = Vec::new();
                for r in 0..eliminated.num_rows() {
                    let poly = eliminated.row_polynomial(r);
                    if poly.is_zero() {
                        continue;
                    }
                    let e = poly.degree();
                    if e >= d || expanded.contains(&poly) {
                        continue;
                    }
                    let n = eliminated.ring.num_vars();
                    for m in monomials_up_to_degree(n, d - e) {
                        if m.is_one() {
                            continue;
                        }
                        additions.push((m.clone(), e, poly.mul_term(&m, 1)));
                    }
                    expanded.insert(poly);
                }
                if additions.is_empty() {
                    break;
                }
                mutant_rows += additions.len();
                for (m, e, prod) in additions {
                    eliminated.push_row(
                        RowLabel::Mutant {
                            multiplier: m,
                            source_degree: e,
                        },
                        &prod,
                    );
                }
                let (next, next_rank) = rref(&eliminated);
                eliminated = next;
                rank = next_rank;
            }
        }

        let extracted = eliminated.extract_polynomials();
        let mut new_leading = 0usize;
        for f in &extracted {
            let lt = f.leading_term(order)?.0.clone();
            if seen_leading.insert(lt) {
                new_leading += 1;
            }
        }
        trace.push(TraceEntry {
            d,
            rows: eliminated.num_rows(),
            cols: eliminated.num_cols(),
            rank,
            new_leading_terms: new_leading,
            mutants: mutant_rows,
        });

        found.extend(extracted);
        found = interreduce(found, order)?;

        if d >= max_gen_degree && !found.is_empty() {
            let generates = ideal
                .generators()
                .iter()
                .map(|g| Ok(normal_form(g, &found, order)?.is_zero()))
                .collect::<Result<Vec<bool>>>()?
                .into_iter()
                .all(|b| b);
            if generates && is_groebner(&found, order)? {
                let basis = interreduce(found, order)?;
                let report = SolveReport {
                    solving_degree: d,
                    trace,
                    order: order.name(),
                    mutants,
                    note: Some(
                        "trace degrees are the step degrees of the elimination; \
                         a stalled step degree is the usual degree-of-regularity \
                         reading, the largest is the solving degree"
                            .into(),
                    ),
                };
                return Ok((
                    GroebnerBasis::from_parts(basis, order.clone(), true),
                    report,
                ));
            }
        }
    }
    Err(Error::DegreeCapExceeded(degree_cap))
}

/// The solving degree alone.
pub fn solving_degree(ideal: &Ideal, order: &TermOrder, mutants: bool) -> Result<u32> {
    Ok(xl_groebner(ideal, order, mutants)?.1.solving_degree)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::groebner::buchberger;
    use crate::poly::Ring;

    fn ring(p: u64, vars: &[&str]) -> RingRef {
        Ring::new(
            PrimeField::new(p).unwrap(),
            vars.iter().map(|s| s.to_string()).collect(),
        )
        .unwrap()
    }

    fn poly(r: &RingRef, terms: &[(&[u32], i64)]) -> Polynomial {
        Polynomial::from_terms(
            r.clone(),
            terms
                .iter()
                .map(|(e, c)| (Monomial::new(e.to_vec()), r.field().from_int(*c)))
                .collect::<Vec<_>>(),
        )
    }

    fn worked_pair(p: u64) -> (RingRef, Ideal) {
        let r = ring(p, &["x", "y"]);
        let f1 = poly(&r, &[(&[2, 0], 1), (&[0, 0], -1)]);
        let f2 = poly(&r, &[(&[1, 1], 1), (&[1, 0], 1)]);
        let ideal = Ideal::new(r.clone(), vec![f1, f2]).unwrap();
        (r, ideal)
    }

    #[test]
    fn matrix_of_the_homogenized_pair_at_degree_two() {
        let s = ring(7, &["x", "y", "t"]);
        let g1 = poly(&s, &[(&[2, 0, 0], 1), (&[0, 0, 2], -1)]);
        let g2 = poly(&s, &[(&[1, 1, 0], 1), (&[1, 0, 1], 1)]);
        let tilde = Ideal::new(s, vec![g1, g2]).unwrap();
        let m = build_macaulay(&tilde, 2, &TermOrder::DrlTLast, true).unwrap();
        let cols: Vec<Vec<u32>> = m
            .columns()
            .iter()
            .map(|c| c.exponents().to_vec())
            .collect();
        assert_eq!(
            cols,
            vec![
                vec![2, 0, 0],
                vec![1, 1, 0],
                vec![0, 2, 0],
                vec![1, 0, 1],
                vec![0, 1, 1],
                vec![0, 0, 2],
            ]
        );
        assert_eq!(m.entries(), &[vec![1, 0, 0, 0, 0, 6], vec![0, 1, 0, 1, 0, 0]]);
        let (_, rank) = rref(&m);
        assert_eq!(rank, 2);
    }

    #[test]
    fn inhomogeneous_matrix_has_low_degree_columns() {
        let (_, ideal) = worked_pair(7);
        let m = build_macaulay(&ideal, 2, &TermOrder::Drl, false).unwrap();
        let cols: Vec<Vec<u32>> = m
            .columns()
            .iter()
            .map(|c| c.exponents().to_vec())
            .collect();
        assert_eq!(
            cols,
            vec![
                vec![2, 0],
                vec![1, 1],
                vec![0, 2],
                vec![1, 0],
                vec![0, 1],
                vec![0, 0],
            ]
        );
        assert_eq!(m.entries(), &[vec![1, 0, 0, 0, 0, 6], vec![0, 1, 0, 1, 0, 0]]);
    }

    #[test]
    fn worked_solving_degrees() {
        // solvdeg(I) = 3, solvdeg(tilde I) = 3, solvdeg(I^h) = 2
        let (r, ideal) = worked_pair(7);
        assert_eq!(solving_degree(&ideal, &TermOrder::Drl, true).unwrap(), 3);

        let s = ring(7, &["x", "y", "t"]);
        let g1 = poly(&s, &[(&[2, 0, 0], 1), (&[0, 0, 2], -1)]);
        let g2 = poly(&s, &[(&[1, 1, 0], 1), (&[1, 0, 1], 1)]);
        let tilde = Ideal::new(s.clone(), vec![g1.clone(), g2]).unwrap();
        assert_eq!(solving_degree(&tilde, &TermOrder::DrlTLast, true).unwrap(), 3);

        // I^h = (x^2 - t^2, y + t)
        let h2 = poly(&s, &[(&[0, 1, 0], 1), (&[0, 0, 1], 1)]);
        let ih = Ideal::new(s, vec![g1, h2]).unwrap();
        assert_eq!(solving_degree(&ih, &TermOrder::DrlTLast, true).unwrap(), 2);
        drop(r);
    }

    #[test]
    fn xl_matches_buchberger_leading_terms() {
        let (_, ideal) = worked_pair(7);
        let (gb, report) = xl_groebner(&ideal, &TermOrder::Drl, true).unwrap();
        let reference = buchberger(&ideal, &TermOrder::Drl).unwrap();
        assert_eq!(gb.elements(), reference.elements());
        assert_eq!(report.solving_degree, 3);
        assert!(report.trace.iter().any(|t| t.mutants > 0));
    }

    #[test]
    fn homogeneous_principal_ideal_solves_at_its_degree() {
        let r = ring(7, &["x", "y"]);
        let f = poly(&r, &[(&[2, 1], 1), (&[0, 3], 4)]);
        let ideal = Ideal::new(r, vec![f]).unwrap();
        assert_eq!(solving_degree(&ideal, &TermOrder::Drl, true).unwrap(), 3);
    }

    #[test]
    fn variable_ideal_solves_at_degree_one() {
        let r = ring(5, &["x1", "x2", "x3"]);
        let gens = (0..3).map(|i| Polynomial::variable(r.clone(), i)).collect();
        let ideal = Ideal::new(r, gens).unwrap();
        assert_eq!(solving_degree(&ideal, &TermOrder::Drl, true).unwrap(), 1);
    }

    #[test]
    fn lex_solving_degrees_of_the_curve_and_its_field_equation_closure() {
        // (x1^2 - x2, x2^3 - x3) over F_5: solvdeg 3; with field equations: 5
        let r = ring(5, &["x1", "x2", "x3"]);
        let f1 = poly(&r, &[(&[2, 0, 0], 1), (&[0, 1, 0], -1)]);
        let f2 = poly(&r, &[(&[0, 3, 0], 1), (&[0, 0, 1], -1)]);
        let ideal = Ideal::new(r.clone(), vec![f1.clone(), f2.clone()]).unwrap();
        assert_eq!(solving_degree(&ideal, &TermOrder::Lex, true).unwrap(), 3);

        let mut gens = vec![f1, f2];
        for i in 0..3 {
            let mut e5 = vec![0u32; 3];
            e5[i] = 5;
            let mut e1 = vec![0u32; 3];
            e1[i] = 1;
            gens.push(poly(
                &r,
                &[(&e5.clone()[..], 1), (&e1.clone()[..], -1)],
            ));
        }
        let closed = Ideal::new(r, gens).unwrap();
        assert_eq!(solving_degree(&closed, &TermOrder::Lex, true).unwrap(), 5);
    }

    #[test]
    fn report_serializes_with_the_documented_keys() {
        let (_, ideal) = worked_pair(7);
        let (_, report) = xl_groebner(&ideal, &TermOrder::Drl, true).unwrap();
        let json: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
        assert_eq!(json["solving_degree"], 3);
        assert_eq!(json["order"], "drl");
        assert_eq!(json["mutants"], true);
        let entry = &json["trace"][0];
        for key in ["d", "rows", "cols", "rank", "mutants"] {
            assert!(entry.get(key).is_some(), "missing key {key}");
        }
    }

    #[test]
    fn trace_degrees_increase_and_end_at_the_solving_degree() {
        let (_, ideal) = worked_pair(7);
        let (_, report) = xl_groebner(&ideal, &TermOrder::Drl, true).unwrap();
        assert_eq!(report.trace.last().unwrap().d, report.solving_degree);
        for w in report.trace.windows(2) {
            assert!(w[0].d < w[1].d);
        }
    }
}

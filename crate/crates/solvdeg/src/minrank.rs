//! Determinantal systems: matrices of polynomials, minor ideals, linear
//! pencils, reproducible instance generation, and solving-degree
//! experiments against the regularity bounds for maximal minors.

use crate::error::{Error, Result};
use crate::hilbert::monomial_krull_dim;
use crate::macaulay::solving_degree;
use crate::order::TermOrder;
use crate::poly::{same_ring, Ideal, Polynomial, Ring, RingRef};
use crate::regularity::initial_ideal_drl;
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GradingKind {
    Generic,
    RowGraded,
    ColumnGraded,
    LinearPencil,
}

/// An r x s matrix of polynomials (r <= s) with a grading tag describing
/// how it was built.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyMatrix {
    ring: RingRef,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
    kind: GradingKind,
}

impl PolyMatrix {
    pub fn new(
        ring: RingRef,
        rows: usize,
        cols: usize,
        entries: Vec<Polynomial>,
        kind: GradingKind,
    ) -> Result<PolyMatrix> {
        if rows > cols {
            return Err(Error::InvalidInput(format!(
                "need rows <= cols, got {rows} x {cols}"
            )));
        }
        if entries.len() != rows * cols {
            return Err(Error::InvalidInput("ragged matrix entries".into()));
        }
        for e in &entries {
            if !same_ring(&ring, e.ring()) {
                return Err(Error::RingMismatch);
            }
        }
        Ok(PolyMatrix {
            ring,
            rows,
            cols,
            entries,
            kind,
        })
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn num_rows(&self) -> usize {
        self.rows
    }

    pub fn num_cols(&self) -> usize {
        self.cols
    }

    pub fn kind(&self) -> GradingKind {
        self.kind
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn entries(&self) -> &[Polynomial] {
        &self.entries
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Every entry homogeneous and every 2-minor homogeneous.
    pub fn is_homogeneous_matrix(&self) -> Result<bool> {
        for e in &self.entries {
            if !e.is_homogeneous() {
                return Ok(false);
            }
        }
        for i in 0..self.rows {
            for k in (i + 1)..self.rows {
                for j in 0..self.cols {
                    for l in (j + 1)..self.cols {
                        let m = self.minor_2x2(i, k, j, l)?;
                        if !m.is_homogeneous() {
                            return Ok(false);
                        }
                    }
                }
            }
        }
        Ok(true)
    }

    fn minor_2x2(&self, i: usize, k: usize, j: usize, l: usize) -> Result<Polynomial> {
        let a = self.entry(i, j).mul(self.entry(k, l))?;
        let b = self.entry(i, l).mul(self.entry(k, j))?;
        a.sub(&b)
    }

    /// Determinant of the square submatrix on the given rows and columns,
    /// by Laplace expansion along the first selected row.
    pub fn minor(&self, row_set: &[usize], col_set: &[usize]) -> Result<Polynomial> {
        debug_assert_eq!(row_set.len(), col_set.len());
        if row_set.is_empty() {
            return Ok(Polynomial::constant(self.ring.clone(), 1));
        }
        if row_set.len() == 1 {
            return Ok(self.entry(row_set[0], col_set[0]).clone());
        }
        let mut acc = Polynomial::zero(self.ring.clone());
        let i = row_set[0];
        let rest_rows = &row_set[1..];
        for (pos, &j) in col_set.iter().enumerate() {
            let e = self.entry(i, j);
            if e.is_zero() {
                continue;
            }
            let rest_cols: Vec<usize> = col_set
                .iter()
                .copied()
                .filter(|&c| c != j)
                .collect();
            let sub = self.minor(rest_rows, &rest_cols)?;
            let signed = if pos % 2 == 0 {
                e.mul(&sub)?
            } else {
                e.mul(&sub)?.neg()
            };
            acc = acc.add(&signed)?;
        }
        Ok(acc)
    }

    pub fn matmul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != other.rows {
            return Err(Error::InvalidInput("matrix shape mismatch".into()));
        }
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Polynomial::zero(self.ring.clone());
                for k in 0..self.cols {
                    acc = acc.add(&self.entry(i, k).mul(other.entry(k, j))?)?;
                }
                entries.push(acc);
            }
        }
        PolyMatrix::new(
            self.ring.clone(),
            self.rows,
            other.cols,
            entries,
            GradingKind::Generic,
        )
    }
}

/// The linear matrix sum x_i M_i built from n constant square matrices,
/// over the ring F_p[x1, ..., xn].
pub fn linear_pencil(
    field: crate::field::PrimeField,
    matrices: &[Vec<Vec<u64>>],
) -> Result<PolyMatrix> {
    let n = matrices.len();
    if n == 0 {
        return Err(Error::InvalidInput("no matrices given".into()));
    }
    let s = matrices[0].len();
    for m in matrices {
        if m.len() != s || m.iter().any(|row| row.len() != s) {
            return Err(Error::InvalidInput("ragged constant matrices".into()));
        }
    }
    let vars = (1..=n).map(|i| format!("x{i}")).collect();
    let ring = Ring::new(field, vars)?;
    let mut entries = Vec::with_capacity(s * s);
    #[allow(clippy::needless_range_loop)]
    for i in 0..s {
        for j in 0..s {
            let terms: Vec<(crate::monomial::Monomial, u64)> = (0..n)
                .map(|v| {
                    (
                        crate::monomial::Monomial::var_power(n, v, 1),
                        field.reduce(matrices[v][i][j]),
                    )
                })
                .collect();
            entries.push(Polynomial::from_terms(ring.clone(), terms));
        }
    }
    PolyMatrix::new(ring, s, s, entries, GradingKind::LinearPencil)
}

/// Ideal of t x t minors, generators ordered by (row subset, column subset)
/// in lexicographic subset order; vanishing determinants are dropped.
pub fn minors(matrix: &PolyMatrix, t: usize) -> Result<Ideal> {
    if t < 1 || t > matrix.rows {
        return Err(Error::InvalidInput(format!(
            "minor size {t} out of range for a {} x {} matrix",
            matrix.rows, matrix.cols
        )));
    }
    let row_sets = subsets(matrix.rows, t);
    let col_sets = subsets(matrix.cols, t);
    let mut gens = Vec::new();
    for rs in &row_sets {
        for cs in &col_sets {
            let det = matrix.minor(rs, cs)?;
            if !det.is_zero() {
                gens.push(det);
            }
        }
    }
    if gens.is_empty() {
        return Err(Error::ZeroGenerator);
    }
    Ideal::new(matrix.ring.clone(), gens)
}

/// Number of t x t minors of an r x s matrix, for the count checks.
pub fn minor_count(r: usize, s: usize, t: usize) -> usize {
    choose(r, t) * choose(s, t)
}

fn choose(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut acc = 1usize;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for v in start..n {
            current.push(v);
            rec(v + 1, n, k, current, out);
            current.pop();
        }
    }
    rec(0, n, k, &mut current, &mut out);
    out
}

/// Split n variables into `blocks` contiguous blocks, sizes as equal as
/// possible, earlier blocks larger.
fn blocks_of(n: usize, blocks: usize) -> Vec<Vec<usize>> {
    let base = n / blocks;
    let extra = n % blocks;
    let mut out = Vec::with_capacity(blocks);
    let mut next = 0;
    for b in 0..blocks {
        let size = base + usize::from(b < extra);
        out.push((next..next + size).collect());
        next += size;
    }
    out
}

/// Reproducible pseudorandom instance of the requested shape over
/// F_p[x1, ..., xn]. Identical seeds give identical matrices.
pub fn gen_instance(
    kind: GradingKind,
    r: usize,
    s: usize,
    n: usize,
    field: crate::field::PrimeField,
    seed: u64,
) -> Result<PolyMatrix> {
    if r > s || r == 0 {
        return Err(Error::InvalidInput(format!("infeasible shape {r} x {s}")));
    }
    let vars = (1..=n).map(|i| format!("x{i}")).collect();
    let ring = Ring::new(field, vars)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = field.modulus();

    let linear_form = |rng: &mut ChaCha8Rng, ring: &RingRef, support: &[usize]| {
        let terms: Vec<(crate::monomial::Monomial, u64)> = support
            .iter()
            .map(|&v| {
                (
                    crate::monomial::Monomial::var_power(n, v, 1),
                    rng.random_range(0..p),
                )
            })
            .collect();
        Polynomial::from_terms(ring.clone(), terms)
    };

    let all: Vec<usize> = (0..n).collect();
    let mut entries = Vec::with_capacity(r * s);
    match kind {
        GradingKind::Generic | GradingKind::LinearPencil => {
            for _ in 0..r * s {
                entries.push(linear_form(&mut rng, &ring, &all));
            }
        }
        GradingKind::RowGraded => {
            if n < r {
                return Err(Error::InvalidInput(format!(
                    "cannot split {n} variables into {r} row blocks"
                )));
            }
            let blocks = blocks_of(n, r);
            for block in blocks.iter().take(r) {
                for _ in 0..s {
                    entries.push(linear_form(&mut rng, &ring, block));
                }
            }
        }
        GradingKind::ColumnGraded => {
            if n < s {
                return Err(Error::InvalidInput(format!(
                    "cannot split {n} variables into {s} column blocks"
                )));
            }
            let blocks = blocks_of(n, s);
            for _ in 0..r {
                for block in blocks.iter().take(s) {
                    entries.push(linear_form(&mut rng, &ring, block));
                }
            }
        }
    }
    PolyMatrix::new(ring, r, s, entries, kind)
}

#[derive(Clone, Debug, Serialize)]
pub struct MinrankReport {
    pub r: usize,
    pub s: usize,
    pub t: usize,
    /// Regularity bound for the minor ideal where one is available: the
    /// Eagon–Northcott degree sum for maximal minors, the matrix side for
    /// 2-minors of graded matrices.
    pub bound: Option<u32>,
    pub solvdeg: u32,
    /// For maximal minors: whether the initial ideal has codimension
    /// s - r + 1. For smaller minors of graded matrices: whether the ideal
    /// of maximal minors is nonzero.
    pub height_ok: bool,
    pub seed: Option<u64>,
}

impl MinrankReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization")
    }
}

/// Degree-sum bound for the ideal of maximal minors: degrees along the
/// diagonal plus the rest of the last row, minus s - r.
fn eagon_northcott_bound(matrix: &PolyMatrix) -> u32 {
    let r = matrix.rows;
    let s = matrix.cols;
    let mut sum = 0u32;
    for i in 0..r {
        sum += matrix.entry(i, i).degree();
    }
    for j in r..s {
        sum += matrix.entry(r - 1, j).degree();
    }
    sum - (s as u32 - r as u32)
}

/// Run the Macaulay engine on the t-minor ideal of a homogeneous matrix and
/// compare the measured solving degree against the applicable regularity
/// bound and hypothesis checks.
pub fn minrank_experiment(matrix: &PolyMatrix, t: usize) -> Result<MinrankReport> {
    minrank_experiment_seeded(matrix, t, None)
}

pub fn minrank_experiment_seeded(
    matrix: &PolyMatrix,
    t: usize,
    seed: Option<u64>,
) -> Result<MinrankReport> {
    if !matrix.is_homogeneous_matrix()? {
        return Err(Error::InhomogeneousInput);
    }
    let r = matrix.rows;
    let s = matrix.cols;
    let n = matrix.ring.num_vars();
    let ideal = minors(matrix, t)?;
    let solvdeg = solving_degree(&ideal, &TermOrder::Drl, true)?;

    let height_ok = if t == r {
        let initial = initial_ideal_drl(&ideal)?;
        let dim = monomial_krull_dim(&initial, n);
        n - dim == s - r + 1
    } else {
        !matches!(minors(matrix, r), Err(Error::ZeroGenerator))
    };

    let bound = if t == r {
        Some(eagon_northcott_bound(matrix))
    } else if t == 2 && matrix.kind == GradingKind::ColumnGraded {
        Some(s as u32)
    } else if t == 2 && matrix.kind == GradingKind::RowGraded {
        Some(r as u32)
    } else {
        None
    };

    Ok(MinrankReport {
        r,
        s,
        t,
        bound,
        solvdeg,
        height_ok,
        seed,
    })
}

/// Macaulay bound for a system of 2n quadrics in n variables, the shape of
/// the ABC matrix scheme: (n + 1)(2 - 1) + 1.
pub fn abc_scheme_bound(n: u32) -> u32 {
    n + 2
}

/// Macaulay bound for a system of 2n cubics in n variables, the shape of
/// the cubic simple matrix scheme: (n + 1)(3 - 1) + 1.
pub fn cubic_scheme_bound(n: u32) -> u32 {
    2 * n + 3
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::monomial::Monomial;

    fn f(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn pencil_of_three_two_by_twos() {
        let id = vec![vec![1, 0], vec![0, 1]];
        let e12 = vec![vec![0, 1], vec![0, 0]];
        let e21 = vec![vec![0, 0], vec![1, 0]];
        let m = linear_pencil(f(101), &[id, e12, e21]).unwrap();
        assert_eq!(m.entry(0, 0).to_string(), "x1");
        assert_eq!(m.entry(0, 1).to_string(), "x2");
        assert_eq!(m.entry(1, 0).to_string(), "x3");
        assert_eq!(m.entry(1, 1).to_string(), "x1");
        // t = 2: the single minor x1^2 - x2 x3
        let ideal = minors(&m, 2).unwrap();
        assert_eq!(ideal.generators().len(), 1);
        let r = m.ring().clone();
        let expected = Polynomial::from_terms(
            r.clone(),
            vec![
                (Monomial::new(vec![2, 0, 0]), 1),
                (Monomial::new(vec![0, 1, 1]), 100),
            ],
        );
        assert_eq!(ideal.generators()[0], expected);
        // t = 1: all entries
        assert_eq!(minors(&m, 1).unwrap().generators().len(), 4);
    }

    #[test]
    fn single_matrix_pencil_scales_by_the_variable() {
        let m1 = vec![vec![2, 3], vec![0, 1]];
        let m = linear_pencil(f(7), &[m1]).unwrap();
        assert_eq!(m.entry(0, 0).to_string(), "2*x1");
        assert_eq!(m.entry(1, 0).to_string(), "0");
    }

    #[test]
    fn zero_pencil_has_no_minors() {
        let z = vec![vec![0, 0], vec![0, 0]];
        let m = linear_pencil(f(7), &[z]).unwrap();
        assert!(matches!(minors(&m, 1), Err(Error::ZeroGenerator)));
    }

    #[test]
    fn minor_counts() {
        let m = gen_instance(GradingKind::Generic, 2, 3, 3, f(101), 7).unwrap();
        let ideal = minors(&m, 2).unwrap();
        assert_eq!(minor_count(2, 3, 2), 3);
        assert_eq!(ideal.generators().len(), 3);
    }

    #[test]
    fn seeds_are_reproducible() {
        let a = gen_instance(GradingKind::Generic, 2, 3, 3, f(101), 42).unwrap();
        let b = gen_instance(GradingKind::Generic, 2, 3, 3, f(101), 42).unwrap();
        let c = gen_instance(GradingKind::Generic, 2, 3, 3, f(101), 43).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn row_graded_entries_respect_their_blocks() {
        let m = gen_instance(GradingKind::RowGraded, 2, 2, 4, f(101), 5).unwrap();
        // row 0 uses x1, x2 only; row 1 uses x3, x4 only
        for j in 0..2 {
            for (mon, _) in m.entry(0, j).terms() {
                assert!(mon.support().all(|v| v < 2));
            }
            for (mon, _) in m.entry(1, j).terms() {
                assert!(mon.support().all(|v| v >= 2));
            }
        }
    }

    #[test]
    fn row_swap_negates_maximal_minors() {
        let m = gen_instance(GradingKind::Generic, 2, 3, 3, f(101), 11).unwrap();
        let mut swapped = m.clone();
        swapped.swap_rows(0, 1);
        for cs in subsets(3, 2) {
            let a = m.minor(&[0, 1], &cs).unwrap();
            let b = swapped.minor(&[0, 1], &cs).unwrap();
            assert_eq!(a.neg(), b);
        }
    }

    #[test]
    fn generic_two_by_three_meets_the_bound() {
        let m = gen_instance(GradingKind::Generic, 2, 3, 3, f(101), 1).unwrap();
        let report = minrank_experiment_seeded(&m, 2, Some(1)).unwrap();
        assert_eq!(report.bound, Some(2));
        assert!(report.height_ok);
        assert_eq!(report.solvdeg, 2);
    }

    #[test]
    fn infeasible_height_is_flagged_not_hidden() {
        // 2 x 4 in 2 variables: the maximal-minor locus cannot reach
        // codimension s - r + 1 = 3
        let m = gen_instance(GradingKind::Generic, 2, 4, 2, f(101), 3).unwrap();
        let report = minrank_experiment(&m, 2).unwrap();
        assert!(!report.height_ok);
    }

    #[test]
    fn all_linear_bound_is_the_row_count() {
        for r in 2..=3usize {
            let m = gen_instance(GradingKind::Generic, r, r + 1, 3, f(101), 9).unwrap();
            assert_eq!(eagon_northcott_bound(&m), r as u32);
        }
    }

    #[test]
    fn scheme_bound_arithmetic() {
        assert_eq!(abc_scheme_bound(4), 6);
        assert_eq!(cubic_scheme_bound(4), 11);
        assert_eq!(abc_scheme_bound(20), 22);
        assert_eq!(cubic_scheme_bound(20), 43);
    }
}

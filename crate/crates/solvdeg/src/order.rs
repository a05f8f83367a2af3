//! Term orders: lexicographic, graded reverse lexicographic, the DRL order
//! on R[t] with t smallest, and the non-degree-compatible extension that
//! compares the R-part first and the power of t only to break ties.

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use std::cmp::Ordering;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TermOrder {
    /// x1 > x2 > ... > xn; the first variable is the largest.
    Lex,
    /// Graded reverse lexicographic; degree first, ties broken by the
    /// rightmost differing exponent being smaller.
    Drl,
    /// DRL on R[t] with the homogenizing variable t as the last and
    /// smallest variable. Comparison-wise identical to `Drl`; the tag
    /// records that the last variable is t.
    DrlTLast,
    /// Extension of an order on R to R[t]: compare the R-parts under the
    /// inner order, break ties by the power of t. Not degree compatible.
    BarSigma(Box<TermOrder>),
}

impl TermOrder {
    pub fn bar_sigma(inner: TermOrder) -> TermOrder {
        TermOrder::BarSigma(Box::new(inner))
    }

    pub fn is_degree_compatible(&self) -> bool {
        matches!(self, TermOrder::Drl | TermOrder::DrlTLast)
    }

    pub fn name(&self) -> String {
        match self {
            TermOrder::Lex => "lex".into(),
            TermOrder::Drl => "drl".into(),
            TermOrder::DrlTLast => "drl_t_last".into(),
            TermOrder::BarSigma(inner) => format!("bar_sigma({})", inner.name()),
        }
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.num_vars() != b.num_vars() {
            return Err(Error::DimensionMismatch(a.num_vars(), b.num_vars()));
        }
        Ok(self.cmp_exps(a.exponents(), b.exponents(), a.degree(), b.degree()))
    }

    /// Comparison without the dimension check, for internal hot paths.
    pub(crate) fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.num_vars(), b.num_vars());
        self.cmp_exps(a.exponents(), b.exponents(), a.degree(), b.degree())
    }

    fn cmp_exps(&self, a: &[u32], b: &[u32], deg_a: u32, deg_b: u32) -> Ordering {
        match self {
            TermOrder::Lex => a.cmp(b),
            TermOrder::Drl | TermOrder::DrlTLast => {
                match deg_a.cmp(&deg_b) {
                    Ordering::Equal => {}
                    c => return c,
                }
                for (x, y) in a.iter().zip(b).rev() {
                    match x.cmp(y) {
                        Ordering::Equal => {}
                        // rightmost difference: smaller exponent wins
                        c => return c.reverse(),
                    }
                }
                Ordering::Equal
            }
            TermOrder::BarSigma(inner) => {
                let n = a.len() - 1;
                let (ra, ta) = (&a[..n], a[n]);
                let (rb, tb) = (&b[..n], b[n]);
                let da = deg_a - ta;
                let db = deg_b - tb;
                match inner.cmp_exps(ra, rb, da, db) {
                    Ordering::Equal => ta.cmp(&tb),
                    c => c,
                }
            }
        }
    }
}

/// Total-order comparison of two monomials under a term order.
pub fn compare_terms(a: &Monomial, b: &Monomial, order: &TermOrder) -> Result<Ordering> {
    order.compare(a, b)
}

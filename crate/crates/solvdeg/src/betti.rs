//! Graded Betti numbers of monomial ideals and the Castelnuovo–Mumford
//! regularity read off them.
//!
//! The table is computed degree by degree from the Koszul complex on the
//! variables tensored with the quotient: the Betti number of the ideal in
//! homological position i and internal degree j is the dimension of the
//! (i+1)-st Koszul homology of the quotient in degree j. Each graded piece
//! is a finite matrix over the coefficient field, so everything reduces to
//! exact rank computations.

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::hilbert::minimalize;
use crate::linalg::rank;
use crate::monomial::{monomials_of_degree, Monomial};
use std::collections::{BTreeMap, HashMap};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    /// (homological index i, internal degree j) -> Betti number of the ideal.
    pub entries: BTreeMap<(usize, u32), u64>,
    /// Projective dimension: the largest i with a nonzero entry.
    pub pd: usize,
}

impl BettiTable {
    pub fn beta(&self, i: usize, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// max { j - i : beta_{i,j} != 0 }
    pub fn regularity(&self) -> u32 {
        self.entries
            .keys()
            .map(|(i, j)| j - *i as u32)
            .max()
            .unwrap_or(0)
    }

    pub fn to_json(&self) -> String {
        let betti: Vec<serde_json::Value> = self
            .entries
            .iter()
            .map(|((i, j), v)| serde_json::json!([i, j, v]))
            .collect();
        serde_json::json!({
            "betti": betti,
            "pd": self.pd,
            "reg": self.regularity(),
        })
        .to_string()
    }
}

/// Full graded Betti table of the monomial ideal generated by `gens` in n
/// variables, with homology ranks computed over `field`.
pub fn betti_table(gens: &[Monomial], n: usize, field: &PrimeField) -> BettiTable {
    let gens = minimalize(gens.to_vec());
    let mut entries = BTreeMap::new();
    if gens.is_empty() {
        return BettiTable { entries, pd: 0 };
    }
    if gens.iter().any(|m| m.is_one()) {
        // unit ideal: free on one generator in degree 0
        entries.insert((0, 0), 1);
        return BettiTable { entries, pd: 0 };
    }

    // all syzygy degrees are bounded by the lcm of the generators
    let lcm = gens
        .iter()
        .fold(Monomial::one(n), |acc, m| acc.lcm(m));
    let max_degree = lcm.degree() + n as u32;

    let std_basis = StandardMonomials::new(&gens, n);
    let subsets: Vec<Vec<Vec<usize>>> = (0..=n).map(|k| subsets_of_size(n, k)).collect();

    // rank of the Koszul differential from exterior degree i in internal
    // degree j, cached because consecutive homology groups share it
    let mut rank_cache: HashMap<(usize, u32), usize> = HashMap::new();
    let mut rank_of = |i: usize, j: u32,
                       std_basis: &StandardMonomials,
                       subsets: &[Vec<Vec<usize>>]|
     -> usize {
        if let Some(&r) = rank_cache.get(&(i, j)) {
            return r;
        }
        let r = differential_rank(i, j, std_basis, subsets, &gens, field);
        rank_cache.insert((i, j), r);
        r
    };

    let mut pd = 0usize;
    for i in 1..=n {
        for j in 1..=max_degree {
            if (j as i64) < (i as i64) {
                continue;
            }
            let dim_here = subsets[i].len() * std_basis.count(j - i as u32);
            if dim_here == 0 {
                continue;
            }
            let rank_out = rank_of(i, j, &std_basis, &subsets);
            let rank_in = if i < n {
                rank_of(i + 1, j, &std_basis, &subsets)
            } else {
                0
            };
            let homology = dim_here - rank_out - rank_in;
            if homology > 0 {
                entries.insert((i - 1, j), homology as u64);
                pd = pd.max(i - 1);
            }
        }
    }
    BettiTable { entries, pd }
}

/// Regularity of the monomial ideal. Errors on an empty generating set.
pub fn cm_regularity(gens: &[Monomial], n: usize, field: &PrimeField) -> Result<u32> {
    let minimal = minimalize(gens.to_vec());
    if minimal.is_empty() {
        return Err(Error::ZeroGenerator);
    }
    Ok(betti_table(gens, n, field).regularity())
}

type DegreeSlice = (Vec<Monomial>, HashMap<Monomial, usize>);

struct StandardMonomials {
    gens: Vec<Monomial>,
    n: usize,
    by_degree: std::cell::RefCell<HashMap<u32, DegreeSlice>>,
}

impl StandardMonomials {
    fn new(gens: &[Monomial], n: usize) -> Self {
        StandardMonomials {
            gens: gens.to_vec(),
            n,
            by_degree: std::cell::RefCell::new(HashMap::new()),
        }
    }

    fn ensure(&self, d: u32) {
        let mut cache = self.by_degree.borrow_mut();
        cache.entry(d).or_insert_with(|| {
            let list: Vec<Monomial> = monomials_of_degree(self.n, d)
                .into_iter()
                .filter(|m| !self.gens.iter().any(|g| g.divides(m)))
                .collect();
            let index = list
                .iter()
                .enumerate()
                .map(|(k, m)| (m.clone(), k))
                .collect();
            (list, index)
        });
    }

    fn count(&self, d: u32) -> usize {
        self.ensure(d);
        self.by_degree.borrow()[&d].0.len()
    }

    fn list(&self, d: u32) -> Vec<Monomial> {
        self.ensure(d);
        self.by_degree.borrow()[&d].0.clone()
    }

    fn index_of(&self, d: u32, m: &Monomial) -> Option<usize> {
        self.ensure(d);
        self.by_degree.borrow()[&d].1.get(m).copied()
    }
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    build_subsets(0, n, k, &mut current, &mut out);
    out
}

fn build_subsets(
    start: usize,
    n: usize,
    k: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if current.len() == k {
        out.push(current.clone());
        return;
    }
    for v in start..n {
        current.push(v);
        build_subsets(v + 1, n, k, current, out);
        current.pop();
    }
}

/// Rank of the Koszul differential out of exterior degree i, restricted to
/// internal degree j, on the quotient by the monomial ideal.
fn differential_rank(
    i: usize,
    j: u32,
    std_basis: &StandardMonomials,
    subsets: &[Vec<Vec<usize>>],
    gens: &[Monomial],
    field: &PrimeField,
) -> usize {
    if i == 0 || (j as i64) < (i as i64) {
        return 0;
    }
    let domain_monomials = std_basis.list(j - i as u32);
    let domain_subsets = &subsets[i];
    let codomain_subsets = &subsets[i - 1];
    if domain_monomials.is_empty() {
        return 0;
    }
    let codomain_count = codomain_subsets.len() * std_basis.count(j - i as u32 + 1);
    if codomain_count == 0 {
        return 0;
    }
    let codomain_pos: HashMap<&[usize], usize> = codomain_subsets
        .iter()
        .enumerate()
        .map(|(k, s)| (s.as_slice(), k))
        .collect();
    let target_degree = j - i as u32 + 1;
    let std_count_target = std_basis.count(target_degree);

    let mut rows: Vec<Vec<u64>> = Vec::new();
    for subset in domain_subsets {
        for u in &domain_monomials {
            let mut row = vec![0u64; codomain_count];
            let mut nonzero = false;
            for (l, &v) in subset.iter().enumerate() {
                let image = u.mul(&Monomial::var_power(std_basis.n, v, 1));
                if gens.iter().any(|g| g.divides(&image)) {
                    continue; // lands in the ideal, hence zero in the quotient
                }
                let reduced: Vec<usize> = subset
                    .iter()
                    .copied()
                    .filter(|&w| w != v)
                    .collect();
                let s_pos = codomain_pos[reduced.as_slice()];
                let m_pos = std_basis.index_of(target_degree, &image).unwrap();
                let col = s_pos * std_count_target + m_pos;
                let sign = if l % 2 == 0 { 1 } else { field.modulus() - 1 };
                row[col] = field.add(row[col], sign);
                nonzero = true;
            }
            if nonzero {
                rows.push(row);
            }
        }
    }
    rank(rows, field)
}

//! The six-quantity consistency check for an inhomogeneous system: solving
//! degrees and largest basis degrees of the ideal, its generator-wise
//! homogenization, and its full homogenization, with every relation the
//! hypotheses license asserted and reported, plus the regularity and
//! degree-sum bounds when the homogenized generators cut out finitely many
//! projective points.

use crate::error::{Error, Result};
use crate::groebner::max_gb_degree;
use crate::homogenize::HomogenizationContext;
use crate::macaulay::solving_degree;
use crate::order::TermOrder;
use crate::poly::Ideal;
use crate::regularity::{is_zero_dimensional, reg_via_initial, RegularityReport};
use serde::Serialize;

/// Sum-of-degrees bound on the solving degree of a system whose
/// homogenized generators are zero-dimensional: d_1 + ... + d_r - r + 1.
pub fn macaulay_bound(degrees: &[u32]) -> u32 {
    let r = degrees.len() as u32;
    degrees.iter().sum::<u32>() - r + 1
}

/// The coarser linear form of the same bound: (n + 1)(d - 1) + 1.
pub fn macaulay_degree_bound(n: u32, max_degree: u32) -> u32 {
    (n + 1) * (max_degree - 1) + 1
}

#[derive(Clone, Debug, Serialize)]
pub struct ChainQuantities {
    pub solvdeg_ideal: u32,
    pub solvdeg_tilde: u32,
    pub solvdeg_homogenized: u32,
    pub maxgb_ideal: u32,
    pub maxgb_tilde: u32,
    pub maxgb_homogenized: u32,
}

#[derive(Clone, Debug, Serialize)]
pub struct ChainCheck {
    pub name: String,
    pub holds: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ChainReport {
    pub quantities: ChainQuantities,
    pub tilde_zero_dimensional: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub regularity: Option<RegularityReport>,
    pub macaulay_bound: u32,
    pub macaulay_degree_bound: u32,
    pub checks: Vec<ChainCheck>,
    pub pass: bool,
}

impl ChainReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization")
    }
}

/// Compute all six chain quantities independently and assert the relations
/// among them; inhomogeneous input only.
pub fn verify_chain(ideal: &Ideal, assert_generic_coords: bool) -> Result<ChainReport> {
    if ideal.is_homogeneous() {
        return Err(Error::HomogeneousInput);
    }
    let ctx = HomogenizationContext::new(ideal.ring().clone())?;
    let tilde = ctx.tilde_ideal(ideal)?;
    let homogenized = ctx.homogenized_ideal(ideal)?;

    let quantities = ChainQuantities {
        solvdeg_ideal: solving_degree(ideal, &TermOrder::Drl, true)?,
        solvdeg_tilde: solving_degree(&tilde, &TermOrder::DrlTLast, true)?,
        solvdeg_homogenized: solving_degree(&homogenized, &TermOrder::DrlTLast, true)?,
        maxgb_ideal: max_gb_degree(ideal, &TermOrder::Drl)?,
        maxgb_tilde: max_gb_degree(&tilde, &TermOrder::DrlTLast)?,
        maxgb_homogenized: max_gb_degree(&homogenized, &TermOrder::DrlTLast)?,
    };

    let tilde_zero_dimensional = is_zero_dimensional(&tilde, true)?;
    let regularity = if tilde_zero_dimensional || assert_generic_coords {
        Some(reg_via_initial(&tilde, assert_generic_coords)?)
    } else {
        None
    };

    let degrees = ideal.degrees();
    let bound = macaulay_bound(&degrees);
    let linear_bound = macaulay_degree_bound(
        ideal.ring().num_vars() as u32,
        degrees.iter().copied().max().unwrap_or(1),
    );

    let q = &quantities;
    let mut checks = vec![
        ChainCheck {
            name: "maxgb_tilde == solvdeg_tilde".into(),
            holds: q.maxgb_tilde == q.solvdeg_tilde,
            detail: format!("{} == {}", q.maxgb_tilde, q.solvdeg_tilde),
        },
        ChainCheck {
            name: "solvdeg_tilde >= solvdeg_ideal".into(),
            holds: q.solvdeg_tilde >= q.solvdeg_ideal,
            detail: format!("{} >= {}", q.solvdeg_tilde, q.solvdeg_ideal),
        },
        ChainCheck {
            name: "solvdeg_ideal >= maxgb_ideal".into(),
            holds: q.solvdeg_ideal >= q.maxgb_ideal,
            detail: format!("{} >= {}", q.solvdeg_ideal, q.maxgb_ideal),
        },
        ChainCheck {
            name: "maxgb_ideal == maxgb_homogenized".into(),
            holds: q.maxgb_ideal == q.maxgb_homogenized,
            detail: format!("{} == {}", q.maxgb_ideal, q.maxgb_homogenized),
        },
        ChainCheck {
            name: "maxgb_homogenized == solvdeg_homogenized".into(),
            holds: q.maxgb_homogenized == q.solvdeg_homogenized,
            detail: format!("{} == {}", q.maxgb_homogenized, q.solvdeg_homogenized),
        },
    ];
    if let Some(reg) = &regularity {
        checks.push(ChainCheck {
            name: "solvdeg_ideal <= reg(initial(tilde))".into(),
            holds: q.solvdeg_ideal <= reg.value,
            detail: format!("{} <= {}", q.solvdeg_ideal, reg.value),
        });
    }
    if tilde_zero_dimensional {
        checks.push(ChainCheck {
            name: "solvdeg_ideal <= macaulay_bound".into(),
            holds: q.solvdeg_ideal <= bound,
            detail: format!("{} <= {}", q.solvdeg_ideal, bound),
        });
        checks.push(ChainCheck {
            name: "solvdeg_ideal <= macaulay_degree_bound".into(),
            holds: q.solvdeg_ideal <= linear_bound,
            detail: format!("{} <= {}", q.solvdeg_ideal, linear_bound),
        });
    }
    let pass = checks.iter().all(|c| c.holds);
    Ok(ChainReport {
        quantities,
        tilde_zero_dimensional,
        regularity,
        macaulay_bound: bound,
        macaulay_degree_bound: linear_bound,
        checks,
        pass,
    })
}

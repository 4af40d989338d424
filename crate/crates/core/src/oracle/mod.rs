//! Brute-force recomputation of `H^q(n, W)`: build `W` explicitly, take
//! cohomology of the Chevalley–Eilenberg complex, and compare the result,
//! as an `m`-module, with Kostant's formula.

pub mod character;
pub mod complex;
pub mod module;

use std::collections::BTreeMap;

pub use character::{decompose_as_m_module, levi_character};
pub use complex::{build_complex, euler_characteristic, CochainComplex, WeightDims, DEFAULT_N_CAP};
pub use module::{construct_module, ExplicitModule, SparseMatrix, DEFAULT_DIM_CAP};

use crate::error::Result;
use crate::kostant::kostant_cohomology;
use crate::lie::{LieAlgebra, Weight};
use crate::parabolic::ParabolicData;

#[derive(Clone, Debug, PartialEq)]
pub struct DegreeReport {
    pub degree: usize,
    pub weight_dims: WeightDims,
    pub oracle: Vec<(Weight, usize)>,
    pub kostant: Vec<(Weight, usize)>,
    /// In Kostant's list but not found by the oracle.
    pub missing: Vec<(Weight, usize)>,
    /// Found by the oracle but absent from Kostant's list.
    pub extra: Vec<(Weight, usize)>,
}

impl DegreeReport {
    pub fn matches(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty()
    }

    pub fn total_dim(&self) -> usize {
        self.weight_dims.values().sum()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct OracleReport {
    pub nu: Weight,
    pub module_dim: usize,
    pub n_dim: usize,
    pub degrees: Vec<DegreeReport>,
    /// Weight-graded Euler characteristics of cohomology and cochains agree.
    pub euler_identity: bool,
    pub match_with_kostant: bool,
}

fn diff(a: &[(Weight, usize)], b: &[(Weight, usize)]) -> Vec<(Weight, usize)> {
    let bm: BTreeMap<&Weight, usize> = b.iter().map(|(w, m)| (w, *m)).collect();
    a.iter()
        .filter_map(|(w, m)| {
            let have = bm.get(w).copied().unwrap_or(0);
            (*m > have).then(|| (w.clone(), m - have))
        })
        .collect()
}

/// Cohomology dimensions per weight in every degree `0..=dim n`.
pub fn ce_cohomology(l: &LieAlgebra, pd: &ParabolicData, w: &ExplicitModule) -> Result<(CochainComplex, Vec<WeightDims>)> {
    let cx = build_complex(l, pd, w, DEFAULT_N_CAP)?;
    let h = (0..=cx.top_degree()).map(|d| cx.cohomology(d)).collect();
    Ok((cx, h))
}

pub fn compare_kostant_vs_oracle(l: &LieAlgebra, pd: &ParabolicData, nu: &Weight, degrees: &[usize]) -> Result<OracleReport> {
    compare_with_caps(l, pd, nu, degrees, DEFAULT_DIM_CAP, DEFAULT_N_CAP)
}

/// [`compare_kostant_vs_oracle`] with explicit bounds on `dim W` and `dim n`.
pub fn compare_with_caps(
    l: &LieAlgebra,
    pd: &ParabolicData,
    nu: &Weight,
    degrees: &[usize],
    dim_cap: usize,
    n_cap: usize,
) -> Result<OracleReport> {
    let w = construct_module(l, &pd.borel, nu, dim_cap)?;
    let cx = build_complex(l, pd, &w, n_cap)?;
    let h: Vec<WeightDims> = (0..=cx.top_degree()).map(|d| cx.cohomology(d)).collect();
    let chains: Vec<WeightDims> = (0..=cx.top_degree()).map(|d| cx.weight_dims(d)).collect();
    let euler_identity = euler_characteristic(&h) == euler_characteristic(&chains);
    let mut out = Vec::new();
    for &d in degrees {
        let weight_dims = h.get(d).cloned().unwrap_or_default();
        let oracle = decompose_as_m_module(l, pd, &weight_dims)?;
        let mut kostant: Vec<(Weight, usize)> =
            kostant_cohomology(l, pd, nu, d)?.summands.into_iter().map(|s| (s.gamma, 1)).collect();
        kostant.sort_by(|a, b| a.0.cmp(&b.0));
        out.push(DegreeReport {
            degree: d,
            missing: diff(&kostant, &oracle),
            extra: diff(&oracle, &kostant),
            weight_dims,
            oracle,
            kostant,
        });
    }
    let match_with_kostant = out.iter().all(DegreeReport::matches);
    Ok(OracleReport { nu: nu.clone(), module_dim: w.dim, n_dim: cx.n_basis.len(), degrees: out, euler_identity, match_with_kostant })
}

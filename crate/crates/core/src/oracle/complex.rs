//! The Chevalley–Eilenberg complex `Λ^q n* ⊗ W` with exact, weight-blocked
//! ranks.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use super::module::ExplicitModule;
use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{rank, Subspace};
use crate::parabolic::ParabolicData;
use crate::rational::{q, Q};

pub const DEFAULT_N_CAP: usize = 12;

pub type WeightDims = BTreeMap<Vec<i64>, usize>;

/// Sparse cochain: (basis index in the target degree, coefficient).
type Column = Vec<(usize, Q)>;

#[derive(Clone, Debug)]
pub struct CochainComplex {
    /// Chevalley basis indices of the root vectors spanning `n`.
    pub n_basis: Vec<usize>,
    pub n_weights: Vec<Vec<i64>>,
    /// Per degree: (subset bitmask of `n_basis`, module basis index).
    pub basis: Vec<Vec<(u32, usize)>>,
    pub weights: Vec<Vec<Vec<i64>>>,
    /// `differentials[q]` maps degree `q` to `q + 1`, column-major.
    pub differentials: Vec<Vec<Column>>,
}

fn pos_in(mask: u32, a: usize) -> u32 {
    (mask & ((1u32 << a) - 1)).count_ones()
}

fn sign(k: u32) -> i64 {
    if k % 2 == 0 { 1 } else { -1 }
}

/// Root vectors of `n`, checked against `pd.n`.
pub fn n_root_basis(l: &LieAlgebra, pd: &ParabolicData) -> Result<Vec<usize>> {
    let basis: Vec<usize> = (l.rank()..l.dim()).filter(|&i| pd.n.contains(&crate::rational::unit(l.dim(), i))).collect();
    let span = Subspace::coordinate(l.dim(), basis.iter().copied());
    if span != pd.n {
        return Err(Error::InvariantViolation("n is spanned by root vectors".into()));
    }
    Ok(basis)
}

pub fn build_complex(l: &LieAlgebra, pd: &ParabolicData, w: &ExplicitModule, n_cap: usize) -> Result<CochainComplex> {
    let n_basis = n_root_basis(l, pd)?;
    let nn = n_basis.len();
    if nn > n_cap {
        return Err(Error::SearchTooLarge(format!("dim n = {nn} exceeds {n_cap}")));
    }
    let n_weights: Vec<Vec<i64>> = n_basis.iter().map(|&i| l.basis_weight(i)).collect();
    let local: HashMap<usize, usize> = n_basis.iter().enumerate().map(|(a, &i)| (i, a)).collect();
    // [x_a, x_b] = N x_c inside n
    let mut brackets: Vec<(usize, usize, usize, i64)> = Vec::new();
    for a in 0..nn {
        for b in a + 1..nn {
            for (k, c) in l.structure_constant(n_basis[a], n_basis[b]) {
                let cidx = *local.get(k).ok_or_else(|| Error::InvariantViolation("n bracket-closed".into()))?;
                brackets.push((a, b, cidx, *c));
            }
        }
    }

    let mut basis: Vec<Vec<(u32, usize)>> = Vec::new();
    let mut weights: Vec<Vec<Vec<i64>>> = Vec::new();
    let mut index: Vec<HashMap<(u32, usize), usize>> = Vec::new();
    for deg in 0..=nn {
        let mut b = Vec::new();
        let mut ws = Vec::new();
        for mask in 0u32..(1u32 << nn) {
            if mask.count_ones() as usize != deg {
                continue;
            }
            for k in 0..w.dim {
                let mut wt = w.weight_of_basis[k].clone();
                for a in (0..nn).filter(|a| mask >> a & 1 == 1) {
                    for (x, y) in wt.iter_mut().zip(&n_weights[a]) {
                        *x -= y;
                    }
                }
                b.push((mask, k));
                ws.push(wt);
            }
        }
        index.push(b.iter().enumerate().map(|(i, key)| (*key, i)).collect());
        basis.push(b);
        weights.push(ws);
    }

    let mut differentials = Vec::new();
    for deg in 0..nn {
        let mut cols = Vec::with_capacity(basis[deg].len());
        for &(s, k) in &basis[deg] {
            let mut acc: BTreeMap<usize, Q> = BTreeMap::new();
            let mut add = |t: u32, kk: usize, c: Q| {
                let i = index[deg + 1][&(t, kk)];
                *acc.entry(i).or_insert_with(Q::zero) += c;
            };
            // Σ_i (-1)^i x_i · φ(..., x̂_i, ...)
            for a in (0..nn).filter(|a| s >> a & 1 == 0) {
                let t = s | 1 << a;
                let sg = q(sign(pos_in(t, a)));
                for (kk, c) in w.action[n_basis[a]].apply_basis(k) {
                    add(t, *kk, &sg * c);
                }
            }
            // Σ_{i<j} (-1)^{i+j} φ([x_i, x_j], ...)
            for (c_pos, c) in (0..nn).filter(|c| s >> c & 1 == 1).enumerate() {
                let rest = s & !(1 << c);
                for &(a, b, cc, nab) in &brackets {
                    if cc != c || rest >> a & 1 == 1 || rest >> b & 1 == 1 {
                        continue;
                    }
                    let t = rest | 1 << a | 1 << b;
                    let sg = sign(c_pos as u32) * sign(pos_in(t, a) + pos_in(t, b)) * nab;
                    add(t, k, q(sg));
                }
            }
            cols.push(acc.into_iter().filter(|(_, x)| !x.is_zero()).collect());
        }
        differentials.push(cols);
    }
    let cx = CochainComplex { n_basis, n_weights, basis, weights, differentials };
    if !cx.square_is_zero() {
        return Err(Error::ComplexInconsistent("d ∘ d ≠ 0".into()));
    }
    Ok(cx)
}

impl CochainComplex {
    pub fn top_degree(&self) -> usize {
        self.n_basis.len()
    }

    pub fn square_is_zero(&self) -> bool {
        for deg in 0..self.differentials.len().saturating_sub(1) {
            for col in &self.differentials[deg] {
                let mut acc: BTreeMap<usize, Q> = BTreeMap::new();
                for (i, c) in col {
                    for (j, x) in &self.differentials[deg + 1][*i] {
                        *acc.entry(*j).or_insert_with(Q::zero) += c * x;
                    }
                }
                if acc.values().any(|x| !x.is_zero()) {
                    return false;
                }
            }
        }
        true
    }

    pub fn weight_dims(&self, deg: usize) -> WeightDims {
        let mut out = WeightDims::new();
        for w in &self.weights[deg] {
            *out.entry(w.clone()).or_insert(0) += 1;
        }
        out
    }

    /// Rank of `d_deg` restricted to each weight block.
    pub fn block_ranks(&self, deg: usize) -> BTreeMap<Vec<i64>, usize> {
        let mut out = BTreeMap::new();
        if deg >= self.differentials.len() {
            return out;
        }
        let mut blocks: BTreeMap<&Vec<i64>, Vec<usize>> = BTreeMap::new();
        for (j, w) in self.weights[deg].iter().enumerate() {
            blocks.entry(w).or_default().push(j);
        }
        for (w, cols) in blocks {
            let mut rows: BTreeMap<usize, usize> = BTreeMap::new();
            for &j in &cols {
                for (i, _) in &self.differentials[deg][j] {
                    let next = rows.len();
                    rows.entry(*i).or_insert(next);
                }
            }
            // transpose: one row per source column
            let m: Vec<Vec<Q>> = cols
                .iter()
                .map(|&j| {
                    let mut r = vec![Q::zero(); rows.len()];
                    for (i, c) in &self.differentials[deg][j] {
                        r[rows[i]] = c.clone();
                    }
                    r
                })
                .collect();
            out.insert(w.clone(), rank(&m, rows.len()));
        }
        out
    }

    /// `dim H^deg` per weight: `dim C − rank d_deg − rank d_{deg−1}`.
    pub fn cohomology(&self, deg: usize) -> WeightDims {
        let c = self.weight_dims(deg);
        let out_rank = self.block_ranks(deg);
        let in_rank = if deg == 0 { BTreeMap::new() } else { self.block_ranks(deg - 1) };
        c.into_iter()
            .filter_map(|(w, d)| {
                let h = d - out_rank.get(&w).copied().unwrap_or(0) - in_rank.get(&w).copied().unwrap_or(0);
                (h > 0).then_some((w, h))
            })
            .collect()
    }
}

/// `Σ_q (−1)^q dims[q]` per weight.
pub fn euler_characteristic(dims: &[WeightDims]) -> BTreeMap<Vec<i64>, i64> {
    let mut out: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    for (deg, d) in dims.iter().enumerate() {
        for (w, m) in d {
            *out.entry(w.clone()).or_insert(0) += sign(deg as u32) * *m as i64;
        }
    }
    out.retain(|_, v| *v != 0);
    out
}

//! Explicit finite-dimensional simple modules, built by lowering from a
//! highest-weight vector.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::lie::roots::RootVec;
use crate::lie::{weyl_dimension, LieAlgebra, PositiveSystem, Weight, WeightContext};
use crate::linalg::{rref, solve_in_span};
use crate::rational::{q, to_i64, Q};

pub const DEFAULT_DIM_CAP: usize = 5000;

/// Column-major sparse matrix: `cols[j]` is the image of basis vector `j`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct SparseMatrix {
    pub n: usize,
    pub cols: Vec<Vec<(usize, Q)>>,
}

impl SparseMatrix {
    pub fn zero(n: usize) -> Self {
        Self { n, cols: vec![Vec::new(); n] }
    }

    pub fn diagonal(d: Vec<Q>) -> Self {
        let n = d.len();
        let cols = d.into_iter().enumerate().map(|(i, x)| if x.is_zero() { vec![] } else { vec![(i, x)] }).collect();
        Self { n, cols }
    }

    pub fn apply_basis(&self, j: usize) -> &[(usize, Q)] {
        &self.cols[j]
    }

    pub fn apply(&self, v: &BTreeMap<usize, Q>) -> BTreeMap<usize, Q> {
        let mut out: BTreeMap<usize, Q> = BTreeMap::new();
        for (j, c) in v {
            for (i, x) in &self.cols[*j] {
                *out.entry(*i).or_insert_with(Q::zero) += c * x;
            }
        }
        out.retain(|_, x| !x.is_zero());
        out
    }

    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        let cols = other
            .cols
            .iter()
            .map(|col| self.apply(&col.iter().cloned().collect()).into_iter().collect())
            .collect();
        SparseMatrix { n: self.n, cols }
    }

    pub fn lin(&self, a: &Q, other: &SparseMatrix, b: &Q) -> SparseMatrix {
        let cols = self
            .cols
            .iter()
            .zip(&other.cols)
            .map(|(x, y)| {
                let mut m: BTreeMap<usize, Q> = BTreeMap::new();
                for (i, v) in x {
                    *m.entry(*i).or_insert_with(Q::zero) += a * v;
                }
                for (i, v) in y {
                    *m.entry(*i).or_insert_with(Q::zero) += b * v;
                }
                m.into_iter().filter(|(_, v)| !v.is_zero()).collect()
            })
            .collect();
        SparseMatrix { n: self.n, cols }
    }

    pub fn commutator(&self, other: &SparseMatrix) -> SparseMatrix {
        self.mul(other).lin(&q(1), &other.mul(self), &q(-1))
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }
}

#[derive(Clone, Debug)]
pub struct ExplicitModule {
    pub highest: Weight,
    pub dim: usize,
    /// Fundamental coordinates of each basis vector's weight.
    pub weight_of_basis: Vec<Vec<i64>>,
    /// Action of each Chevalley basis vector of `g`, by basis index.
    pub action: Vec<SparseMatrix>,
}

struct Space {
    dim: usize,
    offset: usize,
    /// `e_j`: coordinates in `W_{μ+β_j}` of `e_j b` for each basis vector `b`.
    e: Vec<Vec<Vec<Q>>>,
    /// `f_i`: coordinates in `W_{μ-β_i}` of `f_i b`.
    f: Vec<Option<Vec<Vec<Q>>>>,
}

fn shift(a: &[i64], b: &[i64], s: i64) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + s * y).collect()
}

/// Builds the simple module with `ps`-highest weight `nu`.
pub fn construct_module(l: &LieAlgebra, ps: &PositiveSystem, nu: &Weight, dim_cap: usize) -> Result<ExplicitModule> {
    if nu.context != WeightContext::HStd {
        return Err(Error::ContextMismatch("ν must be an h_std weight".into()));
    }
    let rs = l.roots();
    let expected: BigInt = weyl_dimension(rs, ps, &nu.coords)?;
    let expected = match expected.to_usize() {
        Some(d) if d <= dim_cap => d,
        _ => return Err(Error::DimCapExceeded { dim: expected.to_u128().unwrap_or(u128::MAX), cap: dim_cap }),
    };
    let top: Vec<i64> = nu.coords.iter().map(|x| to_i64(x).expect("integral")).collect();
    let simple: Vec<RootVec> = ps.simple().to_vec();
    let nsimple = simple.len();
    let simple_fund: Vec<Vec<i64>> = simple.iter().map(|s| rs.to_fundamental(s)).collect();
    let coroots: Vec<Vec<i64>> = simple.iter().map(|s| rs.coroot(s)).collect();
    let pair = |w: &[i64], i: usize| -> i64 { w.iter().zip(&coroots[i]).map(|(a, b)| a * b).sum() };

    let mut spaces: HashMap<Vec<i64>, Space> = HashMap::new();
    let mut order: Vec<Vec<i64>> = vec![top.clone()];
    spaces.insert(top.clone(), Space { dim: 1, offset: 0, e: vec![Vec::new(); nsimple], f: vec![None; nsimple] });
    let mut level: Vec<Vec<i64>> = vec![top.clone()];
    let mut total = 1;
    while !level.is_empty() {
        // candidate weights one step down, in canonical order
        let mut next: BTreeMap<Vec<i64>, Vec<(usize, Vec<i64>)>> = BTreeMap::new();
        for lam in &level {
            for i in 0..nsimple {
                if spaces[lam].dim > 0 {
                    next.entry(shift(lam, &simple_fund[i], -1)).or_default().push((i, lam.clone()));
                }
            }
        }
        let mut new_level = Vec::new();
        for (mu, sources) in next {
            let up: Vec<Option<(Vec<i64>, usize)>> = (0..nsimple)
                .map(|j| {
                    let w = shift(&mu, &simple_fund[j], 1);
                    spaces.get(&w).map(|s| (w, s.dim))
                })
                .collect();
            // signature of f_i u: (e_j f_i u)_j = f_i e_j u + δ_ij <λ, β_i^∨> u
            let mut cands: Vec<(usize, Vec<i64>, usize, Vec<Q>)> = Vec::new();
            for (i, lam) in &sources {
                let src = &spaces[lam];
                for u in 0..src.dim {
                    let mut sig = Vec::new();
                    for j in 0..nsimple {
                        let Some((wj, dj)) = &up[j] else { continue };
                        let mut block = vec![Q::zero(); *dj];
                        if j == *i {
                            block[u] += q(pair(lam, *i));
                        }
                        let lam_up = shift(lam, &simple_fund[j], 1);
                        if let Some(sp) = spaces.get(&lam_up) {
                            if let Some(fi) = &sp.f[*i] {
                                debug_assert_eq!(&shift(&lam_up, &simple_fund[*i], -1), wj);
                                let eju = &src.e[j];
                                for (k, c) in eju.get(u).into_iter().flatten().enumerate() {
                                    if c.is_zero() {
                                        continue;
                                    }
                                    for (t, x) in fi[k].iter().enumerate() {
                                        block[t] += c * x;
                                    }
                                }
                            }
                        }
                        sig.extend(block);
                    }
                    cands.push((*i, lam.clone(), u, sig));
                }
            }
            let width = cands.first().map_or(0, |c| c.3.len());
            let mut basis_rows: Vec<Vec<Q>> = Vec::new();
            let mut chosen: Vec<usize> = Vec::new();
            for (idx, c) in cands.iter().enumerate() {
                let mut trial = basis_rows.clone();
                trial.push(c.3.clone());
                if rref(&mut trial, width).len() > basis_rows.len() {
                    basis_rows.push(c.3.clone());
                    chosen.push(idx);
                }
            }
            let d = chosen.len();
            if d == 0 {
                continue;
            }
            // e_j on the new basis: slices of the chosen signatures
            let mut e = vec![Vec::new(); nsimple];
            let mut pos = 0;
            for j in 0..nsimple {
                if let Some((_, dj)) = &up[j] {
                    e[j] = chosen.iter().map(|&c| cands[c].3[pos..pos + dj].to_vec()).collect();
                    pos += dj;
                }
            }
            // f_i on the sources: coordinates of each candidate in the basis
            let mut f_cols: HashMap<(usize, Vec<i64>), Vec<Vec<Q>>> = HashMap::new();
            for (i, lam, u, sig) in &cands {
                let coords = solve_in_span(&basis_rows, sig)
                    .ok_or_else(|| Error::InvariantViolation("candidate in span of chosen basis".into()))?;
                let entry = f_cols.entry((*i, lam.clone())).or_insert_with(|| vec![Vec::new(); spaces[lam].dim]);
                entry[*u] = coords;
            }
            for ((i, lam), cols) in f_cols {
                spaces.get_mut(&lam).expect("source").f[i] = Some(cols);
            }
            spaces.insert(mu.clone(), Space { dim: d, offset: total, e, f: vec![None; nsimple] });
            total += d;
            if total > dim_cap {
                return Err(Error::DimCapExceeded { dim: total as u128, cap: dim_cap });
            }
            order.push(mu.clone());
            new_level.push(mu);
        }
        level = new_level;
    }
    if total != expected {
        return Err(Error::InvariantViolation(format!("module dimension {total} != Weyl dimension {expected}")));
    }

    let mut weight_of_basis = vec![Vec::new(); total];
    for w in &order {
        let s = &spaces[w];
        for k in 0..s.dim {
            weight_of_basis[s.offset + k] = w.clone();
        }
    }
    // simple raising and lowering operators as global matrices
    let mut e_simple = vec![SparseMatrix::zero(total); nsimple];
    let mut f_simple = vec![SparseMatrix::zero(total); nsimple];
    for w in &order {
        let s = &spaces[w];
        for j in 0..nsimple {
            if let Some(target) = spaces.get(&shift(w, &simple_fund[j], 1)) {
                for (b, coords) in s.e[j].iter().enumerate() {
                    e_simple[j].cols[s.offset + b] =
                        coords.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(t, x)| (target.offset + t, x.clone())).collect();
                }
            }
            if let (Some(fi), Some(target)) = (&s.f[j], spaces.get(&shift(w, &simple_fund[j], -1))) {
                for (b, coords) in fi.iter().enumerate() {
                    f_simple[j].cols[s.offset + b] =
                        coords.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(t, x)| (target.offset + t, x.clone())).collect();
                }
            }
        }
    }
    let action = full_action(l, ps, &weight_of_basis, &simple, e_simple, f_simple)?;
    Ok(ExplicitModule { highest: nu.clone(), dim: total, weight_of_basis, action })
}

/// Extends the simple root actions to every Chevalley basis vector through
/// `e_{γ+β} = [e_β, e_γ] / N_{β,γ}`.
fn full_action(
    l: &LieAlgebra,
    ps: &PositiveSystem,
    weights: &[Vec<i64>],
    simple: &[RootVec],
    e_simple: Vec<SparseMatrix>,
    f_simple: Vec<SparseMatrix>,
) -> Result<Vec<SparseMatrix>> {
    let total = weights.len();
    let mut action: Vec<Option<SparseMatrix>> = vec![None; l.dim()];
    for k in 0..l.rank() {
        action[k] = Some(SparseMatrix::diagonal(weights.iter().map(|w| q(w[k])).collect()));
    }
    for (sign, ops) in [(1i64, e_simple), (-1, f_simple)] {
        let signed = |r: &RootVec| r.iter().map(|x| sign * x).collect::<Vec<_>>();
        for (s, m) in simple.iter().zip(ops) {
            action[l.root_vector_index(&signed(s)).expect("root")] = Some(m);
        }
        // build γ from a shorter γ - β until every positive root is covered
        let mut pending: Vec<&RootVec> = ps.positive().iter().collect();
        while !pending.is_empty() {
            let before = pending.len();
            let mut left = Vec::new();
            for gamma in pending {
                let gi = l.root_vector_index(&signed(gamma)).expect("root");
                if action[gi].is_some() {
                    continue;
                }
                let found = simple.iter().find_map(|b| {
                    let r: Vec<i64> = gamma.iter().zip(b).map(|(x, y)| x - y).collect();
                    if !ps.contains(&r) {
                        return None;
                    }
                    let (bi, ri) = (l.root_vector_index(&signed(b))?, l.root_vector_index(&signed(&r))?);
                    action[ri].is_some().then_some((bi, ri))
                });
                let Some((bi, rest)) = found else {
                    left.push(gamma);
                    continue;
                };
                let &[(target, c)] = l.structure_constant(bi, rest) else {
                    return Err(Error::InvariantViolation("root bracket is a single root vector".into()));
                };
                debug_assert_eq!(target, gi);
                let (a, b) = (action[bi].as_ref().expect("built"), action[rest].as_ref().expect("built"));
                let inv = Q::from_integer(1.into()) / q(c);
                action[gi] = Some(a.mul(b).lin(&inv, &b.mul(a), &-inv.clone()));
            }
            if left.len() == before {
                return Err(Error::InvariantViolation("positive roots reachable from simple roots".into()));
            }
            pending = left;
        }
    }
    Ok(action.into_iter().map(|m| m.unwrap_or_else(|| SparseMatrix::zero(total))).collect())
}

impl ExplicitModule {
    /// `ρ([x, y]) = [ρ(x), ρ(y)]` on basis pairs: all pairs when `full`,
    /// otherwise pairs of Cartan and simple root vectors of `ps`.
    pub fn check_relations(&self, l: &LieAlgebra, ps: &PositiveSystem, full: bool) -> bool {
        let idx: Vec<usize> = if full {
            (0..l.dim()).collect()
        } else {
            let mut v: Vec<usize> = (0..l.rank()).collect();
            for s in ps.simple() {
                v.push(l.root_vector_index(s).expect("root"));
                v.push(l.root_vector_index(&s.iter().map(|x| -x).collect::<Vec<_>>()).expect("root"));
            }
            v
        };
        for (a, &i) in idx.iter().enumerate() {
            for &j in &idx[a + 1..] {
                let lhs = self.action[i].commutator(&self.action[j]);
                let mut rhs = SparseMatrix::zero(self.dim);
                for (k, c) in l.structure_constant(i, j) {
                    rhs = rhs.lin(&q(1), &self.action[*k], &q(*c));
                }
                if lhs.lin(&q(1), &rhs, &q(-1)) != SparseMatrix::zero(self.dim) {
                    return false;
                }
            }
        }
        true
    }

    /// The highest-weight vector is killed by every `ps`-positive root vector.
    pub fn highest_vector_is_primitive(&self, l: &LieAlgebra, ps: &PositiveSystem) -> bool {
        ps.positive().iter().all(|r| self.action[l.root_vector_index(r).expect("root")].cols[0].is_empty())
    }

    pub fn weight_multiset(&self) -> BTreeMap<Vec<i64>, usize> {
        let mut out = BTreeMap::new();
        for w in &self.weight_of_basis {
            *out.entry(w.clone()).or_insert(0) += 1;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(ty: &str, nu: &[i64]) -> (LieAlgebra, ExplicitModule) {
        let l = LieAlgebra::new(&ty.parse().unwrap());
        let ps = l.standard_positive();
        let w = Weight::new(WeightContext::HStd, nu.iter().map(|&x| q(x)).collect());
        let m = construct_module(&l, &ps, &w, DEFAULT_DIM_CAP).unwrap();
        (l, m)
    }

    #[test]
    fn defining_rep_of_sl3() {
        let (l, m) = build("A2", &[1, 0]);
        assert_eq!(m.dim, 3);
        let ws: Vec<Vec<i64>> = m.weight_multiset().into_keys().collect();
        assert_eq!(ws, vec![vec![-1, 1], vec![0, -1], vec![1, 0]]);
        assert!(m.check_relations(&l, &l.standard_positive(), true));
    }

    #[test]
    fn sl2_string() {
        let (l, m) = build("A1", &[3]);
        assert_eq!(m.dim, 4);
        let hs: Vec<i64> = m.weight_of_basis.iter().map(|w| w[0]).collect();
        assert_eq!(hs, vec![3, 1, -1, -3]);
        assert!(m.check_relations(&l, &l.standard_positive(), true));
    }

    #[test]
    fn adjoint_of_sl3() {
        let (l, m) = build("A2", &[1, 1]);
        assert_eq!(m.dim, 8);
        let mults = m.weight_multiset();
        assert_eq!(mults[&vec![0, 0]], 2);
        assert_eq!(mults.len(), 7);
        assert!(m.check_relations(&l, &l.standard_positive(), true));
        assert!(m.highest_vector_is_primitive(&l, &l.standard_positive()));
    }

    #[test]
    fn g2_and_b2_modules() {
        for (ty, nu, d) in [("G2", vec![1, 0], 7), ("B2", vec![0, 1], 4), ("B2", vec![1, 1], 16)] {
            let (l, m) = build(ty, &nu);
            assert_eq!(m.dim, d);
            assert!(m.check_relations(&l, &l.standard_positive(), true));
        }
    }

    #[test]
    fn non_standard_borel() {
        let l = LieAlgebra::new(&"B2".parse().unwrap());
        let ps = PositiveSystem::from_functional(l.roots(), &[q(2), q(-1)]);
        // (1,2) in b-labels; -α2 and α1+2α2 are simple
        let nu = Weight::new(WeightContext::HStd, vec![q(3), q(-1)]);
        assert!(ps.is_dominant_integral(l.roots(), &nu.coords));
        let m = construct_module(&l, &ps, &nu, DEFAULT_DIM_CAP).unwrap();
        assert!(m.check_relations(&l, &ps, true));
        assert!(m.highest_vector_is_primitive(&l, &ps));
    }

    #[test]
    fn caps_and_dominance() {
        let l = LieAlgebra::new(&"A2".parse().unwrap());
        let ps = l.standard_positive();
        let big = Weight::new(WeightContext::HStd, vec![q(30), q(30)]);
        assert!(matches!(construct_module(&l, &ps, &big, 5000), Err(Error::DimCapExceeded { .. })));
        let bad = Weight::new(WeightContext::HStd, vec![q(-1), q(0)]);
        assert!(matches!(construct_module(&l, &ps, &bad, 5000), Err(Error::NonDominant(_))));
    }
}

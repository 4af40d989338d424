//! The minimal `t`-compatible parabolic `p = m ⊕ n` cut out by a regular
//! element, its intersections with `k` and `k^⊥`, and the `ρ`-vectors on `t*`.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use crate::embedding::{killing_perp, EmbeddedSubalgebra, RegularElement};
use crate::error::{Error, Result};
use crate::lie::{Element, LieAlgebra, PositiveSystem, Weight, WeightContext, WeightMultiset};
use crate::lie::roots::RootVec;
use crate::linalg::{identity, nullspace, Subspace};
use crate::rational::{q, Q};

#[derive(Clone, Debug)]
pub struct ParabolicData {
    pub h: RegularElement,
    pub eigenspaces: BTreeMap<Q, Subspace>,
    pub m: Subspace,
    pub n: Subspace,
    pub nbar: Subspace,
    pub kperp: Subspace,
    pub n_cap_k: Subspace,
    pub n_cap_kperp: Subspace,
    pub m_cap_kperp: Subspace,
    pub nbar_cap_kperp: Subspace,
    pub r: usize,
    pub s: usize,
    /// Borel subalgebra `b ⊂ p`: positivity on `h`, ties broken by height.
    pub borel: PositiveSystem,
    /// Roots of `m` positive for `b`, and the simple ones among them.
    pub levi_positive: Vec<RootVec>,
    pub levi_simple: Vec<RootVec>,
}

#[derive(Clone, Debug)]
pub struct RhoVectors {
    pub rho: Weight,
    pub rho_n: Weight,
    pub rho_n_perp: Weight,
    pub mu_shift: Weight,
    pub weights_n: WeightMultiset,
    pub weights_n_cap_k: WeightMultiset,
    pub weights_n_cap_kperp: WeightMultiset,
}

pub fn eigenspace_decomposition(l: &LieAlgebra, h: &RegularElement) -> Result<BTreeMap<Q, Subspace>> {
    let ad = l.ad_matrix(&h.h)?;
    let dim = l.dim();
    let id = identity(dim);
    let mut out = BTreeMap::new();
    let mut total = 0;
    for alpha in h.g_spectrum.keys() {
        let shifted: Vec<Vec<Q>> =
            ad.iter().zip(&id).map(|(row, e)| row.iter().zip(e).map(|(a, b)| a - alpha * b).collect()).collect();
        // kernel of a matrix acting on columns: null space of its rows
        let space = Subspace::from_vectors(dim, nullspace(&shifted, dim));
        total += space.dim();
        out.insert(alpha.clone(), space);
    }
    if total != dim {
        return Err(Error::NonDiagonalizable);
    }
    Ok(out)
}

fn sum_of<'a>(dim: usize, spaces: impl Iterator<Item = &'a Subspace>) -> Subspace {
    spaces.fold(Subspace::zero(dim), |acc, s| acc.sum(s))
}

fn brackets_into(l: &LieAlgebra, a: &Subspace, b: &Subspace, target: &Subspace) -> bool {
    a.rows().iter().all(|x| b.rows().iter().all(|y| target.contains(&l.bracket_vec(x, y))))
}

/// Lower central series reaches zero within `dim n` steps.
fn is_nilpotent(l: &LieAlgebra, n: &Subspace) -> bool {
    let mut cur = n.clone();
    for _ in 0..=n.dim() {
        if cur.is_zero() {
            return true;
        }
        let next = Subspace::from_vectors(
            l.dim(),
            n.rows().iter().flat_map(|x| cur.rows().iter().map(move |y| l.bracket_vec(x, y))),
        );
        if next.dim() >= cur.dim() {
            return false;
        }
        cur = next;
    }
    cur.is_zero()
}

fn violation(name: &str) -> Error {
    Error::InvariantViolation(name.to_string())
}

pub fn build_parabolic(l: &LieAlgebra, emb: &EmbeddedSubalgebra, h: &RegularElement) -> Result<ParabolicData> {
    let dim = l.dim();
    let eigenspaces = eigenspace_decomposition(l, h)?;
    let m = eigenspaces.get(&Q::zero()).cloned().unwrap_or_else(|| Subspace::zero(dim));
    let n = sum_of(dim, eigenspaces.iter().filter(|(a, _)| a.is_positive()).map(|(_, s)| s));
    let nbar = sum_of(dim, eigenspaces.iter().filter(|(a, _)| a.is_negative()).map(|(_, s)| s));
    let kperp = killing_perp(l, &emb.k)?;
    let n_cap_k = n.intersect(&emb.k);
    let n_cap_kperp = n.intersect(&kperp);
    let m_cap_kperp = m.intersect(&kperp);
    let nbar_cap_kperp = nbar.intersect(&kperp);

    if !emb.t.is_subspace_of(&m) {
        return Err(violation("t ⊆ m"));
    }
    let p = m.sum(&n);
    if !brackets_into(l, &p, &p, &p) {
        return Err(violation("p bracket-closed"));
    }
    if !brackets_into(l, &m, &n, &n) {
        return Err(violation("[m, n] ⊆ n"));
    }
    if !brackets_into(l, &n, &n, &n) || !is_nilpotent(l, &n) {
        return Err(violation("n nilpotent subalgebra"));
    }
    if n_cap_kperp.dim() + m_cap_kperp.dim() + nbar_cap_kperp.dim() != kperp.dim() {
        return Err(violation("k^⊥ triangular decomposition"));
    }
    for (a, s) in &eigenspaces {
        if eigenspaces.get(&-a.clone()).map(Subspace::dim) != Some(s.dim()) {
            return Err(violation("dim g^α = dim g^-α"));
        }
    }

    let rs = l.roots();
    let values = l.simple_root_values(&h.h.coords[..l.rank()]);
    let borel = PositiveSystem::from_functional(rs, &values);
    let root_value = |r: &RootVec| r.iter().zip(&values).fold(Q::zero(), |acc, (c, v)| acc + q(*c) * v);
    let levi_positive: Vec<RootVec> =
        borel.positive().iter().filter(|r| root_value(r).is_zero()).cloned().collect();
    let levi_simple: Vec<RootVec> = borel.simple().iter().filter(|r| root_value(r).is_zero()).cloned().collect();

    Ok(ParabolicData {
        h: h.clone(),
        r: n_cap_kperp.dim(),
        s: n_cap_k.dim(),
        eigenspaces,
        m,
        n,
        nbar,
        kperp,
        n_cap_k,
        n_cap_kperp,
        m_cap_kperp,
        nbar_cap_kperp,
        borel,
        levi_positive,
        levi_simple,
    })
}

fn half_sum_or_zero(s: &WeightMultiset, dim: usize) -> Weight {
    s.half_sum().unwrap_or_else(|| Weight::zero(WeightContext::T, dim))
}

pub fn rho_vectors(l: &LieAlgebra, emb: &EmbeddedSubalgebra, pd: &ParabolicData) -> Result<RhoVectors> {
    let d = emb.t_dim();
    let (_, rho) = crate::embedding::t_roots_and_rho(l, emb, &pd.h)?;
    let weights_n = emb.t_weight_multiset(l, &pd.n)?;
    let weights_n_cap_k = emb.t_weight_multiset(l, &pd.n_cap_k)?;
    let weights_n_cap_kperp = emb.t_weight_multiset(l, &pd.n_cap_kperp)?;
    let rho_n = half_sum_or_zero(&weights_n, d);
    let rho_n_perp = half_sum_or_zero(&weights_n_cap_kperp, d);
    let mu_shift = rho_n_perp.scale(&q(2));
    Ok(RhoVectors { rho, rho_n, rho_n_perp, mu_shift, weights_n, weights_n_cap_k, weights_n_cap_kperp })
}

impl ParabolicData {
    pub fn p(&self) -> Subspace {
        self.m.sum(&self.n)
    }

    /// `h` as an element of `g`.
    pub fn h_element(&self) -> &Element {
        &self.h.h
    }
}

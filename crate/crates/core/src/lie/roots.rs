//! Root systems in simple-root coordinates, and positive systems.

use std::cmp::Ordering;
use std::collections::HashMap;

use num_traits::{Signed, Zero};

use super::cartan::CartanType;
use crate::rational::{q, Q};

pub type RootVec = Vec<i64>;

/// Signed reference into the positive-root list.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RootRef {
    pub index: usize,
    pub positive: bool,
}

/// Order on positive roots: height first, then descending lexicographic on
/// simple-root coordinates (so `α_1` precedes `α_2`).
pub fn root_order(a: &[i64], b: &[i64]) -> Ordering {
    let ha: i64 = a.iter().sum();
    let hb: i64 = b.iter().sum();
    ha.cmp(&hb).then_with(|| b.cmp(a))
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    rank: usize,
    cartan: Vec<Vec<i64>>,
    gram: Vec<Vec<Q>>,
    positive: Vec<RootVec>,
    lookup: HashMap<RootVec, RootRef>,
    weyl_order: u128,
}

impl RootSystem {
    pub fn new(ty: &CartanType) -> Self {
        let cartan = ty.cartan_matrix();
        let gram = ty.gram();
        let rank = cartan.len();
        let simple: Vec<RootVec> = (0..rank)
            .map(|i| (0..rank).map(|j| i64::from(i == j)).collect())
            .collect();
        let mut positive = simple.clone();
        let mut known: std::collections::HashSet<RootVec> = simple.iter().cloned().collect();
        let mut layer = simple;
        while !layer.is_empty() {
            let mut next = Vec::new();
            for beta in &layer {
                for i in 0..rank {
                    // α_i-string through β: β - pα_i, ..., β + qα_i with p - q = <β, α_i^∨>
                    let mut p = 0;
                    let mut down = beta.clone();
                    loop {
                        down[i] -= 1;
                        if known.contains(&down) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    let pairing: i64 = (0..rank).map(|j| beta[j] * cartan[i][j]).sum();
                    if p - pairing > 0 {
                        let mut up = beta.clone();
                        up[i] += 1;
                        if known.insert(up.clone()) {
                            next.push(up);
                        }
                    }
                }
            }
            positive.extend(next.iter().cloned());
            layer = next;
        }
        positive.sort_by(|a, b| root_order(a, b));
        let mut lookup = HashMap::new();
        for (index, r) in positive.iter().enumerate() {
            lookup.insert(r.clone(), RootRef { index, positive: true });
            lookup.insert(r.iter().map(|x| -x).collect(), RootRef { index, positive: false });
        }
        Self { rank, cartan, gram, positive, lookup, weyl_order: ty.weyl_order() }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn gram(&self) -> &[Vec<Q>] {
        &self.gram
    }

    pub fn positive(&self) -> &[RootVec] {
        &self.positive
    }

    pub fn weyl_order(&self) -> u128 {
        self.weyl_order
    }

    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }

    pub fn lookup(&self, v: &[i64]) -> Option<RootRef> {
        self.lookup.get(v).copied()
    }

    pub fn root(&self, r: RootRef) -> RootVec {
        let v = &self.positive[r.index];
        if r.positive {
            v.clone()
        } else {
            v.iter().map(|x| -x).collect()
        }
    }

    /// All roots, positives first then their negatives.
    pub fn all_roots(&self) -> Vec<RootVec> {
        let mut out = self.positive.clone();
        out.extend(self.positive.iter().map(|r| r.iter().map(|x| -x).collect::<Vec<_>>()));
        out
    }

    /// Invariant form `(a, b)` on the rational span of the roots.
    pub fn inner(&self, a: &[i64], b: &[i64]) -> Q {
        let mut acc = Q::zero();
        for i in 0..self.rank {
            if a[i] == 0 {
                continue;
            }
            for j in 0..self.rank {
                if b[j] != 0 {
                    acc += &self.gram[i][j] * q(a[i] * b[j]);
                }
            }
        }
        acc
    }

    /// `α(h_j)` for each simple coroot `h_j`: coordinates of the root in the
    /// fundamental-weight basis.
    pub fn to_fundamental(&self, a: &[i64]) -> Vec<i64> {
        (0..self.rank).map(|j| (0..self.rank).map(|i| a[i] * self.cartan[j][i]).sum()).collect()
    }

    /// Coroot `h_α = 2α/(α,α)` in the basis of simple coroots.
    pub fn coroot(&self, a: &[i64]) -> Vec<i64> {
        let len = self.inner(a, a);
        (0..self.rank)
            .map(|i| {
                let c = q(a[i]) * &self.gram[i][i] / &len;
                crate::rational::to_i64(&c).expect("coroot coordinates are integral")
            })
            .collect()
    }

    /// `<λ, α^∨> = λ(h_α)` for a weight in fundamental coordinates.
    pub fn pair_coroot(&self, weight: &[Q], a: &[i64]) -> Q {
        self.coroot(a).iter().zip(weight).fold(Q::zero(), |acc, (c, w)| acc + q(*c) * w)
    }

    /// Inverse Cartan matrix: converts fundamental coordinates to simple-root
    /// coordinates, `root_coords = fund · C^{-1}` column-wise.
    pub fn fundamental_to_root(&self, weight: &[Q]) -> Vec<Q> {
        let a: Vec<Vec<Q>> = self.cartan.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
        // weight_j = Σ_i c_i A[j][i]  =>  c = A^{-1} weight
        let inv = crate::linalg::inverse(&a).expect("Cartan matrix is invertible");
        crate::linalg::mat_vec(&inv, weight)
    }

    /// Invariant form on weights given in fundamental coordinates.
    pub fn weight_inner(&self, a: &[Q], b: &[Q]) -> Q {
        let ra = self.fundamental_to_root(a);
        let rb = self.fundamental_to_root(b);
        let mut acc = Q::zero();
        for i in 0..self.rank {
            for j in 0..self.rank {
                acc += &ra[i] * &self.gram[i][j] * &rb[j];
            }
        }
        acc
    }
}

/// A choice of positive roots, given as signed references into the root
/// system. Simple roots are the indecomposable positives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositiveSystem {
    positive: Vec<RootVec>,
    simple: Vec<RootVec>,
}

impl PositiveSystem {
    pub fn standard(rs: &RootSystem) -> Self {
        Self::from_roots(rs, rs.positive().to_vec())
    }

    /// Positive system cut out by the functional `α ↦ α(h)`, with ties on
    /// the hyperplane `α(h) = 0` broken by the standard height. `h_values`
    /// are the values `α_i(h)` on the simple roots.
    pub fn from_functional(rs: &RootSystem, h_values: &[Q]) -> Self {
        let positive = rs
            .all_roots()
            .into_iter()
            .filter(|r| {
                let v = r.iter().zip(h_values).fold(Q::zero(), |acc, (c, x)| acc + q(*c) * x);
                v.is_positive() || (v.is_zero() && r.iter().sum::<i64>() > 0)
            })
            .collect();
        Self::from_roots(rs, positive)
    }

    fn from_roots(rs: &RootSystem, mut positive: Vec<RootVec>) -> Self {
        positive.sort_by(|a, b| root_order(a, b).then_with(|| b.cmp(a)));
        let set: std::collections::HashSet<&RootVec> = positive.iter().collect();
        let simple = positive
            .iter()
            .filter(|r| {
                !positive.iter().any(|a| {
                    let diff: RootVec = r.iter().zip(a).map(|(x, y)| x - y).collect();
                    set.contains(&diff)
                })
            })
            .cloned()
            .collect::<Vec<_>>();
        debug_assert_eq!(simple.len(), rs.rank());
        Self { positive, simple }
    }

    pub fn positive(&self) -> &[RootVec] {
        &self.positive
    }

    pub fn simple(&self) -> &[RootVec] {
        &self.simple
    }

    pub fn contains(&self, r: &[i64]) -> bool {
        self.positive.iter().any(|p| p == r)
    }

    /// Half the sum of the positive roots, in fundamental coordinates.
    pub fn rho(&self, rs: &RootSystem) -> Vec<Q> {
        let mut acc = crate::rational::zeros(rs.rank());
        for r in &self.positive {
            for (a, x) in acc.iter_mut().zip(rs.to_fundamental(r)) {
                *a += q(x);
            }
        }
        acc.iter().map(|x| x / q(2)).collect()
    }

    /// Dominance: `<λ, α^∨> >= 0` for every simple root.
    pub fn is_dominant(&self, rs: &RootSystem, weight: &[Q]) -> bool {
        self.simple.iter().all(|s| !rs.pair_coroot(weight, s).is_negative())
    }

    pub fn is_dominant_integral(&self, rs: &RootSystem, weight: &[Q]) -> bool {
        self.simple.iter().all(|s| {
            let p = rs.pair_coroot(weight, s);
            p.is_integer() && !p.is_negative()
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(&s.parse().unwrap())
    }

    #[test]
    fn positive_root_counts() {
        for (t, n) in [("A1", 1), ("A2", 3), ("B2", 4), ("G2", 6), ("A3", 6), ("B3", 9), ("C3", 9),
            ("D4", 12), ("F4", 24), ("E6", 36), ("E7", 63), ("E8", 120), ("A1xA1", 2)]
        {
            assert_eq!(rs(t).num_positive(), n, "{t}");
        }
    }

    #[test]
    fn ordering_is_height_then_lex() {
        let r = rs("A2");
        assert_eq!(r.positive(), &[vec![1, 0], vec![0, 1], vec![1, 1]]);
        let g = rs("G2");
        assert_eq!(g.positive().last().unwrap(), &vec![3, 2]);
    }

    #[test]
    fn coroots_and_fundamental() {
        let b2 = rs("B2");
        // short root α1+α2 has coroot 2h_1 + h_2
        assert_eq!(b2.coroot(&[1, 1]), vec![2, 1]);
        assert_eq!(b2.coroot(&[1, 2]), vec![1, 1]);
        assert_eq!(b2.to_fundamental(&[1, 0]), vec![2, -2]);
    }

    #[test]
    fn functional_positive_system() {
        let b2 = rs("B2");
        // h = h_1: α1 -> 2, α2 -> -1
        let ps = PositiveSystem::from_functional(&b2, &[q(2), q(-1)]);
        assert_eq!(ps.positive().len(), 4);
        assert!(ps.contains(&[0, -1]));
        assert!(ps.contains(&[1, 2]));
        let mut simple = ps.simple().to_vec();
        simple.sort();
        assert_eq!(simple, vec![vec![0, -1], vec![1, 2]]);
        let std = PositiveSystem::standard(&b2);
        assert_eq!(std.rho(&b2), vec![q(1), q(1)]);
    }
}

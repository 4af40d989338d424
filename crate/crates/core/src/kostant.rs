//! `H^r(n, W)` as an `m`-module from Kostant's theorem, and the final
//! `Hom_m` vanishing.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::lie::roots::RootVec;
use crate::lie::{weyl_elements_of_length, LieAlgebra, Weight, WeightContext, WeylElement};
use crate::parabolic::ParabolicData;
use crate::rational::{add_vec, q, Q};

#[derive(Clone, Debug, PartialEq)]
pub struct KostantSummand {
    pub w: WeylElement,
    /// `w(ν + ρ̃) − ρ̃`
    pub gamma: Weight,
    pub dominant_for_m: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CohomologyDecomposition {
    pub degree: usize,
    pub summands: Vec<KostantSummand>,
    pub total_dim: BigInt,
}

/// `ρ̃` for the Borel `b ⊂ p`, in fundamental coordinates.
pub fn rho_tilde_b(l: &LieAlgebra, pd: &ParabolicData) -> Vec<Q> {
    pd.borel.rho(l.roots())
}

/// Half-sum of the positive roots of `m`.
pub fn rho_m(l: &LieAlgebra, pd: &ParabolicData) -> Vec<Q> {
    half_sum_fund(l, &pd.levi_positive)
}

fn half_sum_fund(l: &LieAlgebra, roots: &[RootVec]) -> Vec<Q> {
    let rs = l.roots();
    let mut acc = vec![Q::from_integer(0.into()); l.rank()];
    for r in roots {
        for (a, x) in acc.iter_mut().zip(rs.to_fundamental(r)) {
            *a += q(x);
        }
    }
    acc.into_iter().map(|x| x / q(2)).collect()
}

pub fn is_m_dominant(l: &LieAlgebra, pd: &ParabolicData, weight: &[Q]) -> bool {
    pd.levi_simple.iter().all(|a| !l.roots().pair_coroot(weight, a).is_negative())
}

/// Weyl dimension of the simple `m`-module with highest weight `gamma`.
pub fn levi_dimension(l: &LieAlgebra, pd: &ParabolicData, gamma: &[Q]) -> Result<BigInt> {
    if !is_m_dominant(l, pd, gamma) {
        return Err(Error::NonDominant(format!("{gamma:?} for m")));
    }
    let rs = l.roots();
    let rho = rho_m(l, pd);
    let shifted = add_vec(gamma, &rho);
    let (mut num, mut den) = (Q::one(), Q::one());
    for a in &pd.levi_positive {
        num *= rs.pair_coroot(&shifted, a);
        den *= rs.pair_coroot(&rho, a);
    }
    let d = num / den;
    if !d.is_integer() {
        return Err(Error::NotAnMCharacter(format!("{gamma:?} is not m-integral")));
    }
    Ok(d.to_integer())
}

fn check_nu(l: &LieAlgebra, pd: &ParabolicData, nu: &Weight) -> Result<()> {
    if nu.context != WeightContext::HStd {
        return Err(Error::ContextMismatch("ν must be an h_std weight".into()));
    }
    if nu.dim() != l.rank() {
        return Err(Error::DimensionMismatch { expected: l.rank(), got: nu.dim() });
    }
    if !pd.borel.is_dominant_integral(l.roots(), &nu.coords) {
        return Err(Error::NonDominant(nu.to_string()));
    }
    Ok(())
}

/// Every length-`r` Weyl element with its `γ_w`, including the ones that
/// fail `b_m`-dominance.
pub fn kostant_candidates(l: &LieAlgebra, pd: &ParabolicData, nu: &Weight, r: usize) -> Result<Vec<KostantSummand>> {
    check_nu(l, pd, nu)?;
    let rho = rho_tilde_b(l, pd);
    Ok(weyl_elements_of_length(l.roots(), &pd.borel, r)?
        .into_iter()
        .map(|w| {
            let gamma = w.dot_action(&nu.coords, &rho);
            let dominant_for_m = is_m_dominant(l, pd, &gamma);
            KostantSummand { w, gamma: Weight::new(WeightContext::HStd, gamma), dominant_for_m }
        })
        .collect())
}

pub fn kostant_cohomology(l: &LieAlgebra, pd: &ParabolicData, nu: &Weight, r: usize) -> Result<CohomologyDecomposition> {
    let summands: Vec<KostantSummand> =
        kostant_candidates(l, pd, nu, r)?.into_iter().filter(|s| s.dominant_for_m).collect();
    let mut total_dim = BigInt::from(0);
    for s in &summands {
        total_dim += levi_dimension(l, pd, &s.gamma.coords)?;
    }
    for (i, a) in summands.iter().enumerate() {
        if summands[i + 1..].iter().any(|b| b.gamma == a.gamma) {
            return Err(Error::InvariantViolation("Kostant summands have multiplicity one".into()));
        }
    }
    Ok(CohomologyDecomposition { degree: r, summands, total_dim })
}

/// `Hom_m(H^r(n, W), E) = 0` with `E` of highest weight `ν`.
pub fn verify_vanishing(l: &LieAlgebra, pd: &ParabolicData, nu: &Weight, r: usize) -> Result<bool> {
    let d = kostant_cohomology(l, pd, nu, r)?;
    Ok(d.summands.iter().all(|s| s.gamma != *nu))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::{choose_regular, EmbeddedSubalgebra};
    use crate::lie::Element;
    use crate::parabolic::build_parabolic;

    fn el(v: &[i64]) -> Element {
        Element::new(v.iter().map(|&x| q(x)).collect())
    }

    fn hw(v: &[i64]) -> Weight {
        Weight::new(WeightContext::HStd, v.iter().map(|&x| q(x)).collect())
    }

    fn setup(ty: &str, gens: Vec<Element>, t: Vec<Element>) -> (LieAlgebra, ParabolicData) {
        let l = LieAlgebra::new(&ty.parse().unwrap());
        let emb = EmbeddedSubalgebra::new(&l, gens, t).unwrap();
        let h = choose_regular(&l, &emb, 0, 4).unwrap();
        let pd = build_parabolic(&l, &emb, &h).unwrap();
        (l, pd)
    }

    fn a2_torus() -> (LieAlgebra, ParabolicData) {
        let t = vec![el(&[1, 1, 0, 0, 0, 0, 0, 0]), el(&[1, 0, 0, 0, 0, 0, 0, 0])];
        setup("A2", t.clone(), t)
    }

    #[test]
    fn a1_torus_degree_one() {
        let (l, pd) = setup("A1", vec![el(&[1, 0, 0])], vec![el(&[1, 0, 0])]);
        let d = kostant_cohomology(&l, &pd, &hw(&[0]), 1).unwrap();
        assert_eq!(d.summands.len(), 1);
        assert_eq!(d.summands[0].gamma, hw(&[-2]));
        assert_eq!(d.total_dim, BigInt::one());
        let d = kostant_cohomology(&l, &pd, &hw(&[2]), 1).unwrap();
        assert_eq!(d.summands[0].gamma, hw(&[-4]));
        assert!(verify_vanishing(&l, &pd, &hw(&[2]), 1).unwrap());
        assert!(!verify_vanishing(&l, &pd, &hw(&[2]), 0).unwrap());
    }

    #[test]
    fn degree_zero_is_identity() {
        let (l, pd) = a2_torus();
        for nu in [[0, 0], [1, 0], [2, 1]] {
            let d = kostant_cohomology(&l, &pd, &hw(&nu), 0).unwrap();
            assert_eq!(d.summands.len(), 1);
            assert_eq!(d.summands[0].gamma, hw(&nu));
            assert!(!verify_vanishing(&l, &pd, &hw(&nu), 0).unwrap());
        }
    }

    #[test]
    fn borel_case_histogram() {
        let (l, pd) = a2_torus();
        assert!(pd.levi_positive.is_empty());
        let counts: Vec<usize> =
            (0..=3).map(|r| kostant_cohomology(&l, &pd, &hw(&[1, 1]), r).unwrap().summands.len()).collect();
        assert_eq!(counts, vec![1, 2, 2, 1]);
        for r in 1..=3 {
            assert!(verify_vanishing(&l, &pd, &hw(&[1, 1]), r).unwrap());
        }
    }

    #[test]
    fn dot_action_preserves_norm() {
        let (l, pd) = setup(
            "B2",
            vec![el(&[0, 0, 1, 0, 0, 0, 0, 0, 0, 0]), el(&[0, 0, 0, 0, 0, 0, 1, 0, 0, 0])],
            vec![el(&[1, 0, 0, 0, 0, 0, 0, 0, 0, 0])],
        );
        let rs = l.roots();
        let rho = rho_tilde_b(&l, &pd);
        let nu = crate::genericity::from_b_fundamental(&l, &pd, &[q(1), q(2)]).unwrap();
        let norm = |v: &[Q]| rs.weight_inner(v, v);
        let target = norm(&add_vec(&nu, &rho));
        let mut seen = 0;
        for r in 0..=4 {
            let all = kostant_candidates(&l, &pd, &Weight::new(WeightContext::HStd, nu.clone()), r).unwrap();
            seen += all.len();
            for s in all {
                assert_eq!(norm(&add_vec(&s.gamma.coords, &rho)), target);
            }
        }
        assert_eq!(seen, 8);
        let d2 = kostant_cohomology(&l, &pd, &Weight::new(WeightContext::HStd, nu.clone()), 2).unwrap();
        // |W| / |W_m| = 4 coset representatives, one per length 0..3
        assert_eq!(d2.summands.len(), 1);
    }

    #[test]
    fn rejects_non_dominant() {
        let (l, pd) = setup("A1", vec![el(&[1, 0, 0])], vec![el(&[1, 0, 0])]);
        assert!(matches!(kostant_cohomology(&l, &pd, &hw(&[-1]), 1), Err(Error::NonDominant(_))));
        assert!(matches!(kostant_cohomology(&l, &pd, &hw(&[0]), 2), Err(Error::LengthOutOfRange { .. })));
    }
}

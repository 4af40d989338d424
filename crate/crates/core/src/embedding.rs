//! The subalgebra `k ⊂ g` with its Cartan subalgebra `t`: closure, the
//! reductivity battery, the ideal test, the Killing complement and the
//! choice of a regular element of `t`.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::lie::{BasisLabel, CartanType, Element, LieAlgebra, Weight, WeightContext, WeightMultiset};
use crate::linalg::{determinant, minimal_polynomial, Subspace};
use crate::rational::{frac, q, zeros, Q};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductivityReport {
    pub bracket_closed: bool,
    pub killing_nondegenerate_on_k: bool,
    /// Minimal polynomial of `ad_g x` is squarefree for each basis row of `t`.
    pub toral_action_semisimple: bool,
    pub passed: bool,
}

#[derive(Clone, Debug)]
pub struct EmbeddedSubalgebra {
    pub k: Subspace,
    pub t: Subspace,
    /// Independent spanning vectors of `t`, in input order. Weights on `t`
    /// are coordinatized by their values on these vectors.
    pub t_basis: Vec<Element>,
    pub generators: Vec<Element>,
    pub checks: ReductivityReport,
}

#[derive(Clone, Debug)]
pub struct RegularElement {
    pub h: Element,
    /// Coordinates of `h` on `t_basis`.
    pub t_coords: Vec<Q>,
    pub k_root_values: BTreeMap<Weight, Q>,
    /// Eigenvalue of `ad_g h` with multiplicity.
    pub g_spectrum: BTreeMap<Q, usize>,
}

fn check_len(l: &LieAlgebra, v: &[Q]) -> Result<()> {
    if v.len() != l.dim() {
        return Err(Error::DimensionMismatch { expected: l.dim(), got: v.len() });
    }
    Ok(())
}

/// Smallest bracket-closed subspace containing `gens`.
pub fn close_generators(l: &LieAlgebra, gens: &[Element]) -> Result<Subspace> {
    if gens.is_empty() {
        return Err(Error::InputInvalid("no generators".into()));
    }
    for g in gens {
        check_len(l, &g.coords)?;
    }
    let dim = l.dim();
    let mut space = Subspace::from_vectors(dim, gens.iter().map(|g| g.coords.clone()));
    loop {
        let rows = space.rows().to_vec();
        let mut new = Vec::new();
        for (i, x) in rows.iter().enumerate() {
            for y in &rows[i + 1..] {
                let b = l.bracket_vec(x, y);
                if !space.contains(&b) {
                    new.push(b);
                }
            }
        }
        if new.is_empty() {
            return Ok(space);
        }
        space = space.sum(&Subspace::from_vectors(dim, new));
    }
}

fn is_closed(l: &LieAlgebra, v: &Subspace) -> bool {
    let rows = v.rows();
    rows.iter()
        .enumerate()
        .all(|(i, x)| rows[i + 1..].iter().all(|y| v.contains(&l.bracket_vec(x, y))))
}

pub fn verify_reductive(l: &LieAlgebra, k: &Subspace, t: &Subspace) -> Result<ReductivityReport> {
    if !t.is_subspace_of(k) {
        return Err(Error::TNotInK);
    }
    let bracket_closed = is_closed(l, k);
    let gram: Vec<Vec<Q>> =
        k.rows().iter().map(|x| k.rows().iter().map(|y| l.killing_vec(x, y)).collect()).collect();
    let killing_nondegenerate_on_k = k.is_zero() || !determinant(&gram).is_zero();
    let toral_action_semisimple = t.rows().iter().all(|x| {
        let ad = l.ad_matrix(&Element::new(x.clone())).expect("dimension checked");
        minimal_polynomial(&ad).is_squarefree()
    });
    Ok(ReductivityReport {
        bracket_closed,
        killing_nondegenerate_on_k,
        toral_action_semisimple,
        passed: bracket_closed && killing_nondegenerate_on_k && toral_action_semisimple,
    })
}

/// `[b, x] ∈ k` for every basis vector `b` of `g` and basis row `x` of `k`.
pub fn is_ideal(l: &LieAlgebra, k: &Subspace) -> bool {
    (0..l.dim()).all(|i| k.rows().iter().all(|x| k.contains(&l.bracket_basis(i, x))))
}

/// Orthogonal complement of `k` under the Killing form.
pub fn killing_perp(l: &LieAlgebra, k: &Subspace) -> Result<Subspace> {
    let dim = l.dim();
    let pairing: Vec<Vec<Q>> = k
        .rows()
        .iter()
        .map(|x| (0..dim).map(|j| l.killing_vec(x, &crate::rational::unit(dim, j))).collect())
        .collect();
    let perp = Subspace::from_vectors(dim, crate::linalg::nullspace(&pairing, dim));
    if !k.intersect(&perp).is_zero() {
        return Err(Error::DegenerateRestriction);
    }
    Ok(perp)
}

/// `g` with the simple ideals contained in `k` removed.
#[derive(Clone, Debug)]
pub struct Reduction {
    pub split_factors: Vec<usize>,
    pub kept_factors: Vec<usize>,
    pub algebra: LieAlgebra,
    /// Reduced basis index to original basis index.
    pub embedding: Vec<usize>,
    /// `k ∩ g_reduced`, in reduced coordinates.
    pub k: Subspace,
}

impl Reduction {
    /// Restricts an original-coordinates vector to the kept ideals.
    pub fn project(&self, v: &[Q]) -> Vec<Q> {
        self.embedding.iter().map(|&i| v[i].clone()).collect()
    }

    pub fn lift(&self, v: &[Q], original_dim: usize) -> Vec<Q> {
        let mut out = zeros(original_dim);
        for (x, &i) in v.iter().zip(&self.embedding) {
            out[i] = x.clone();
        }
        out
    }

    pub fn is_trivial(&self) -> bool {
        self.split_factors.is_empty()
    }

    /// Carries the embedding over to the reduced algebra.
    pub fn reduce_embedding(&self, emb: &EmbeddedSubalgebra) -> Result<EmbeddedSubalgebra> {
        let gens: Vec<Element> = self.k.rows().iter().cloned().map(Element::new).collect();
        let t_gens: Vec<Element> =
            emb.t_basis.iter().map(|x| Element::new(self.project(&x.coords))).collect();
        EmbeddedSubalgebra::new(&self.algebra, gens, t_gens)
    }
}

pub fn split_off_contained_ideals(l: &LieAlgebra, k: &Subspace) -> Result<Reduction> {
    let dim = l.dim();
    let ideals = l.simple_ideals();
    let (mut split, mut kept) = (Vec::new(), Vec::new());
    for (f, idx) in ideals.iter().enumerate() {
        if Subspace::coordinate(dim, idx.iter().copied()).is_subspace_of(k) {
            split.push(f);
        } else {
            kept.push(f);
        }
    }
    if kept.is_empty() {
        return Err(Error::ReducedToZero);
    }
    if split.is_empty() {
        return Ok(Reduction {
            split_factors: split,
            kept_factors: kept,
            algebra: l.clone(),
            embedding: (0..dim).collect(),
            k: k.clone(),
        });
    }
    let ty: CartanType = l.cartan_type().restrict(&kept)?;
    let reduced = LieAlgebra::new(&ty);
    let offsets = l.cartan_type().offsets();
    let simple_map: Vec<usize> = kept
        .iter()
        .flat_map(|&f| {
            let off = offsets[f];
            (off..off + l.cartan_type().factors()[f].rank).collect::<Vec<_>>()
        })
        .collect();
    let widen = |r: &[i64]| {
        let mut out = vec![0; l.rank()];
        for (x, &i) in r.iter().zip(&simple_map) {
            out[i] = *x;
        }
        out
    };
    let embedding = reduced
        .labels()
        .iter()
        .map(|label| {
            let orig = match label {
                BasisLabel::CartanGen(i) => BasisLabel::CartanGen(simple_map[*i]),
                BasisLabel::PosRoot(r) => BasisLabel::PosRoot(widen(r)),
                BasisLabel::NegRoot(r) => BasisLabel::NegRoot(widen(r)),
            };
            l.label_index(&orig).expect("label of a kept factor")
        })
        .collect::<Vec<_>>();
    let kept_axes: Vec<usize> = embedding.clone();
    let k_in_kept = k.intersect(&Subspace::coordinate(dim, kept_axes));
    let k_reduced = Subspace::from_vectors(
        reduced.dim(),
        k_in_kept.rows().iter().map(|v| embedding.iter().map(|&i| v[i].clone()).collect()),
    );
    Ok(Reduction { split_factors: split, kept_factors: kept, algebra: reduced, embedding, k: k_reduced })
}

impl EmbeddedSubalgebra {
    /// Closes `generators` into `k` and validates `t` against the input
    /// contract: `t ⊆ h_std`, `t ⊆ k`, and `t` is its own centralizer in `k`.
    /// The reductivity battery is recorded, not enforced.
    pub fn new(l: &LieAlgebra, generators: Vec<Element>, t_gens: Vec<Element>) -> Result<Self> {
        for g in generators.iter().chain(&t_gens) {
            check_len(l, &g.coords)?;
        }
        let dim = l.dim();
        let k = if generators.iter().all(Element::is_zero) {
            Subspace::zero(dim)
        } else {
            close_generators(l, &generators)?
        };
        let mut t_basis: Vec<Element> = Vec::new();
        for x in t_gens {
            if x.coords[l.rank()..].iter().any(|c| !c.is_zero()) {
                return Err(Error::TNotInCartan);
            }
            let span = Subspace::from_vectors(dim, t_basis.iter().map(|e| e.coords.clone()));
            if !x.is_zero() && !span.contains(&x.coords) {
                t_basis.push(x);
            }
        }
        let t = Subspace::from_vectors(dim, t_basis.iter().map(|e| e.coords.clone()));
        if !t.is_subspace_of(&k) {
            return Err(Error::TNotInK);
        }
        let checks = verify_reductive(l, &k, &t)?;
        let emb = Self { k, t, t_basis, generators, checks };
        let zero_space = emb.weight_spaces(l).remove(&zeros(emb.t_basis.len())).unwrap_or_default();
        let centralizer = emb.k.intersect(&Subspace::coordinate(dim, zero_space));
        if centralizer.dim() != emb.t.dim() {
            return Err(Error::TNotCartan(format!(
                "centralizer of t in k has dimension {}, t has {}",
                centralizer.dim(),
                emb.t.dim()
            )));
        }
        Ok(emb)
    }

    pub fn t_dim(&self) -> usize {
        self.t_basis.len()
    }

    /// Values of the `h_std`-weight of basis vector `i` on the `t` basis.
    pub fn t_weight_of_basis(&self, l: &LieAlgebra, i: usize) -> Vec<Q> {
        let w = l.basis_weight(i);
        self.t_basis
            .iter()
            .map(|t| (0..l.rank()).fold(Q::zero(), |acc, c| acc + &t.coords[c] * q(w[c])))
            .collect()
    }

    /// Restriction to `t` of an `h_std` weight in fundamental coordinates.
    pub fn restrict_to_t(&self, l: &LieAlgebra, weight: &[Q]) -> Vec<Q> {
        self.t_basis
            .iter()
            .map(|t| (0..l.rank()).fold(Q::zero(), |acc, c| acc + &t.coords[c] * &weight[c]))
            .collect()
    }

    /// Chevalley basis vectors grouped by their `t`-weight.
    pub fn weight_spaces(&self, l: &LieAlgebra) -> BTreeMap<Vec<Q>, Vec<usize>> {
        let mut out: BTreeMap<Vec<Q>, Vec<usize>> = BTreeMap::new();
        for i in 0..l.dim() {
            out.entry(self.t_weight_of_basis(l, i)).or_default().push(i);
        }
        out
    }

    /// Simultaneous `t`-eigenvalues on an `ad t`-invariant subspace.
    pub fn t_weight_multiset(&self, l: &LieAlgebra, v: &Subspace) -> Result<WeightMultiset> {
        let mut out = WeightMultiset::new();
        let mut total = 0;
        for (w, axes) in self.weight_spaces(l) {
            let d = v.intersect(&Subspace::coordinate(l.dim(), axes)).dim();
            total += d;
            out.insert(Weight::new(WeightContext::T, w), d);
        }
        if total != v.dim() {
            return Err(Error::NotTInvariant);
        }
        Ok(out)
    }

    /// Nonzero `t`-weights of `k`, with multiplicity.
    pub fn t_roots(&self, l: &LieAlgebra) -> Result<WeightMultiset> {
        let all = self.t_weight_multiset(l, &self.k)?;
        let mut roots = WeightMultiset::new();
        for (w, m) in all.iter() {
            if !w.is_zero() {
                roots.insert(w.clone(), m);
            }
        }
        Ok(roots)
    }

    pub fn element_from_t_coords(&self, l: &LieAlgebra, c: &[Q]) -> Element {
        let mut v = zeros(l.dim());
        for (ci, t) in c.iter().zip(&self.t_basis) {
            for (a, x) in v.iter_mut().zip(&t.coords) {
                *a += ci * x;
            }
        }
        Element::new(v)
    }
}

fn eval_on(weight: &[Q], t_coords: &[Q]) -> Q {
    crate::rational::dot(weight, t_coords)
}

/// Tests a candidate: every `t`-root of `k` must be nonzero on `h`, and `h`
/// must be generic in `t` (every `t`-weight of `g` nonzero on `t` stays
/// nonzero on `h`), so that `C_g(h) = C_g(t)` and the parabolic is minimal.
pub fn regular_element_at(l: &LieAlgebra, emb: &EmbeddedSubalgebra, t_coords: &[Q]) -> Result<Option<RegularElement>> {
    let roots = emb.t_roots(l)?;
    let mut k_root_values = BTreeMap::new();
    for (w, _) in roots.iter() {
        let v = eval_on(&w.coords, t_coords);
        if v.is_zero() {
            return Ok(None);
        }
        k_root_values.insert(w.clone(), v);
    }
    for w in emb.weight_spaces(l).keys() {
        if !crate::rational::is_zero_vec(w) && eval_on(w, t_coords).is_zero() {
            return Ok(None);
        }
    }
    let h = emb.element_from_t_coords(l, t_coords);
    let g_spectrum = spectrum(l, &h)?;
    Ok(Some(RegularElement { h, t_coords: t_coords.to_vec(), k_root_values, g_spectrum }))
}

/// Spectrum of `ad h`, which must be diagonal in the Chevalley basis.
pub fn spectrum(l: &LieAlgebra, h: &Element) -> Result<BTreeMap<Q, usize>> {
    let ad = l.ad_matrix(h)?;
    let mut out = BTreeMap::new();
    for (i, row) in ad.iter().enumerate() {
        if row.iter().enumerate().any(|(j, x)| j != i && !x.is_zero()) {
            return Err(Error::IrrationalSpectrum);
        }
        *out.entry(row[i].clone()).or_insert(0) += 1;
    }
    Ok(out)
}

/// Deterministic search for a regular element. The `t` basis vectors are
/// tried first, then seeded random rational combinations of increasing
/// height.
pub fn choose_regular(l: &LieAlgebra, emb: &EmbeddedSubalgebra, seed: u64, max_height: u32) -> Result<RegularElement> {
    let n = emb.t_dim();
    if n == 0 {
        return Err(Error::NoRegularFound(max_height));
    }
    for i in 0..n {
        if let Some(r) = regular_element_at(l, emb, &crate::rational::unit(n, i))? {
            return Ok(r);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    const TRIES_PER_HEIGHT: usize = 64;
    for height in 1..=max_height as i64 {
        for _ in 0..TRIES_PER_HEIGHT {
            let c: Vec<Q> = (0..n)
                .map(|_| frac(rng.random_range(-height..=height), rng.random_range(1..=height)))
                .collect();
            if let Some(r) = regular_element_at(l, emb, &c)? {
                return Ok(r);
            }
        }
    }
    Err(Error::NoRegularFound(max_height))
}

/// `t`-roots of `k` and `ρ`, the half-sum of those positive on `h`.
pub fn t_roots_and_rho(l: &LieAlgebra, emb: &EmbeddedSubalgebra, h: &RegularElement) -> Result<(WeightMultiset, Weight)> {
    let roots = emb.t_roots(l)?;
    let mut positive = WeightMultiset::new();
    for (w, m) in roots.iter() {
        if eval_on(&w.coords, &h.t_coords).is_positive() {
            positive.insert(w.clone(), m);
        }
    }
    let rho = positive.half_sum().unwrap_or_else(|| Weight::zero(WeightContext::T, emb.t_dim()));
    Ok((roots, rho))
}

impl RegularElement {
    pub fn eigenvalues(&self) -> impl Iterator<Item = &Q> {
        self.g_spectrum.keys()
    }

    pub fn is_nonzero(&self) -> bool {
        self.t_coords.iter().any(|c| !c.is_zero()) || self.g_spectrum.keys().any(|k| !k.is_zero())
    }

    pub fn spectrum_symmetric(&self) -> bool {
        self.g_spectrum.iter().all(|(v, m)| self.g_spectrum.get(&-v.clone()) == Some(m))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::unit;

    fn alg(s: &str) -> LieAlgebra {
        LieAlgebra::new(&s.parse().unwrap())
    }

    fn el(v: &[i64]) -> Element {
        Element::new(v.iter().map(|&x| q(x)).collect())
    }

    /// Principal sl(2) in sl(3): e = e1 + e2, h = 2h1 + 2h2, f = 2f1 + 2f2.
    fn principal_a2() -> (LieAlgebra, EmbeddedSubalgebra) {
        let l = alg("A2");
        let gens = vec![el(&[0, 0, 1, 1, 0, 0, 0, 0]), el(&[0, 0, 0, 0, 0, 2, 2, 0]), el(&[2, 2, 0, 0, 0, 0, 0, 0])];
        let emb = EmbeddedSubalgebra::new(&l, gens, vec![el(&[2, 2, 0, 0, 0, 0, 0, 0])]).unwrap();
        (l, emb)
    }

    #[test]
    fn closure_examples() {
        let (_, emb) = principal_a2();
        assert_eq!(emb.k.dim(), 3);
        let l = alg("A2");
        assert_eq!(close_generators(&l, &[el(&[1, 0, 0, 0, 0, 0, 0, 0])]).unwrap().dim(), 1);
        let all: Vec<Element> = (0..8).map(|i| Element::new(unit(8, i))).collect();
        assert_eq!(close_generators(&l, &all).unwrap().dim(), 8);
        // e1 and e2 generate the nilradical
        assert_eq!(close_generators(&l, &[Element::basis(8, 2), Element::basis(8, 3)]).unwrap().dim(), 3);
        let k = close_generators(&l, &[Element::basis(8, 2), Element::basis(8, 3)]).unwrap();
        let again = close_generators(&l, &k.rows().iter().cloned().map(Element::new).collect::<Vec<_>>()).unwrap();
        assert_eq!(k, again);
    }

    #[test]
    fn reductivity_examples() {
        let (l, emb) = principal_a2();
        assert!(emb.checks.passed);
        let a1 = alg("A1");
        let k = Subspace::coordinate(3, [1]);
        let rep = verify_reductive(&a1, &k, &Subspace::zero(3)).unwrap();
        assert!(!rep.killing_nondegenerate_on_k);
        assert!(!rep.passed);
        let t = Subspace::coordinate(3, [0]);
        assert!(verify_reductive(&a1, &t, &t).unwrap().passed);
        assert!(matches!(
            verify_reductive(&l, &Subspace::coordinate(8, [0]), &Subspace::coordinate(8, [1])),
            Err(Error::TNotInK)
        ));
    }

    #[test]
    fn ideal_examples() {
        let l = alg("A1xA1");
        let factor = Subspace::coordinate(6, [0, 2, 4]);
        assert!(is_ideal(&l, &factor));
        assert!(is_ideal(&l, &killing_perp(&l, &factor).unwrap()));
        let (a2, emb) = principal_a2();
        assert!(!is_ideal(&a2, &emb.k));
        assert!(is_ideal(&a2, &Subspace::full(8)));
    }

    #[test]
    fn perp_examples() {
        let a1 = alg("A1");
        let perp = killing_perp(&a1, &Subspace::coordinate(3, [0])).unwrap();
        assert_eq!(perp, Subspace::coordinate(3, [1, 2]));
        let (l, emb) = principal_a2();
        let perp = killing_perp(&l, &emb.k).unwrap();
        assert_eq!(perp.dim(), 5);
        assert_eq!(killing_perp(&l, &perp).unwrap(), emb.k);
        assert!(killing_perp(&l, &Subspace::full(8)).unwrap().is_zero());
        assert!(matches!(killing_perp(&a1, &Subspace::coordinate(3, [1])), Err(Error::DegenerateRestriction)));
    }

    #[test]
    fn splitting_ideals() {
        let l = alg("A1xA1");
        // factor 1 plus the Cartan of factor 2
        let k = Subspace::coordinate(6, [0, 2, 4, 1]);
        let red = split_off_contained_ideals(&l, &k).unwrap();
        assert_eq!(red.split_factors, vec![0]);
        assert_eq!(red.algebra.dim(), 3);
        assert_eq!(red.k, Subspace::coordinate(3, [0]));
        assert_eq!(red.embedding, vec![1, 3, 5]);
        let (a2, emb) = principal_a2();
        assert!(split_off_contained_ideals(&a2, &emb.k).unwrap().is_trivial());
        assert!(matches!(split_off_contained_ideals(&l, &Subspace::full(6)), Err(Error::ReducedToZero)));
    }

    #[test]
    fn reduced_algebra_embeds_homomorphically() {
        let l = alg("A2xB2");
        let k = Subspace::coordinate(l.dim(), l.simple_ideals()[0].iter().copied());
        let red = split_off_contained_ideals(&l, &k).unwrap();
        let d = red.algebra.dim();
        for i in 0..d {
            for j in 0..d {
                let small = red.algebra.bracket_vec(&unit(d, i), &unit(d, j));
                let big = l.bracket_vec(&unit(l.dim(), red.embedding[i]), &unit(l.dim(), red.embedding[j]));
                assert_eq!(red.lift(&small, l.dim()), big);
            }
        }
    }

    #[test]
    fn regular_elements() {
        let a1 = alg("A1");
        let emb = EmbeddedSubalgebra::new(&a1, vec![el(&[1, 0, 0])], vec![el(&[1, 0, 0])]).unwrap();
        let r = choose_regular(&a1, &emb, 0, 4).unwrap();
        assert_eq!(r.h, el(&[1, 0, 0]));
        let spec: Vec<(Q, usize)> = r.g_spectrum.clone().into_iter().collect();
        assert_eq!(spec, vec![(q(-2), 1), (q(0), 1), (q(2), 1)]);

        let (l, emb) = principal_a2();
        let r = choose_regular(&l, &emb, 7, 4).unwrap();
        assert_eq!(r.h, el(&[2, 2, 0, 0, 0, 0, 0, 0]));
        let spec: Vec<(Q, usize)> = r.g_spectrum.clone().into_iter().collect();
        assert_eq!(spec, vec![(q(-4), 1), (q(-2), 2), (q(0), 2), (q(2), 2), (q(4), 1)]);
        assert!(r.spectrum_symmetric());
        assert!(regular_element_at(&l, &emb, &[q(0)]).unwrap().is_none());
    }

    #[test]
    fn regular_search_is_deterministic() {
        // k = t = h_std; h1 - h2 kills α1+α2, so the second basis vector wins
        let l = alg("A2");
        let t = vec![el(&[1, -1, 0, 0, 0, 0, 0, 0]), el(&[1, 1, 0, 0, 0, 0, 0, 0])];
        let emb = EmbeddedSubalgebra::new(&l, t.clone(), t).unwrap();
        let a = choose_regular(&l, &emb, 3, 6).unwrap();
        let b = choose_regular(&l, &emb, 3, 6).unwrap();
        assert_eq!(a.h, b.h);
        assert_eq!(a.t_coords, vec![q(0), q(1)]);
        assert_eq!(a.g_spectrum.values().sum::<usize>(), 8);
        assert!(a.spectrum_symmetric());
        assert_eq!(a.g_spectrum.get(&q(0)), Some(&2));
    }

    #[test]
    fn roots_and_rho() {
        let (l, emb) = principal_a2();
        let r = choose_regular(&l, &emb, 0, 4).unwrap();
        let (roots, rho) = t_roots_and_rho(&l, &emb, &r).unwrap();
        let listed: Vec<(Vec<Q>, usize)> = roots.iter().map(|(w, m)| (w.coords.clone(), m)).collect();
        assert_eq!(listed, vec![(vec![q(-2)], 1), (vec![q(2)], 1)]);
        assert_eq!(rho.coords, vec![q(1)]);

        let a1 = alg("A1");
        let emb = EmbeddedSubalgebra::new(&a1, vec![el(&[1, 0, 0])], vec![el(&[1, 0, 0])]).unwrap();
        let r = choose_regular(&a1, &emb, 0, 4).unwrap();
        let (roots, rho) = t_roots_and_rho(&a1, &emb, &r).unwrap();
        assert!(roots.is_empty());
        assert!(rho.is_zero());

        let full = EmbeddedSubalgebra::new(
            &a1,
            (0..3).map(|i| Element::basis(3, i)).collect(),
            vec![el(&[1, 0, 0])],
        )
        .unwrap();
        let r = choose_regular(&a1, &full, 0, 4).unwrap();
        let (roots, rho) = t_roots_and_rho(&a1, &full, &r).unwrap();
        assert_eq!(roots.total(), 2);
        assert_eq!(rho.coords, vec![q(1)]);
    }

    #[test]
    fn cartan_contract() {
        let l = alg("A1");
        assert!(matches!(
            EmbeddedSubalgebra::new(&l, vec![el(&[0, 1, 0])], vec![el(&[0, 1, 0])]),
            Err(Error::TNotInCartan)
        ));
        // t too small: k = sl2, t = 0
        assert!(matches!(
            EmbeddedSubalgebra::new(&l, (0..3).map(|i| Element::basis(3, i)).collect(), vec![]),
            Err(Error::TNotCartan(_))
        ));
    }
}

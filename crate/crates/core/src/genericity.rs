//! Genericity of the weight `μ = ω + 2ρ⊥ₙ`: integrality and dominance for
//! `k`, the two inequalities over `t`-weights of `n`, and the scan for a
//! highest weight `ν` of `g` that passes all of them.

use num_traits::{Signed, Zero};

use crate::embedding::{EmbeddedSubalgebra, RegularElement};
use crate::error::{Error, Result};
use crate::lie::{LieAlgebra, Weight, WeightContext, WeightMultiset};
use crate::linalg::{determinant, inverse};
use crate::parabolic::{ParabolicData, RhoVectors};
use crate::rational::{add_vec, dot, q, scale_vec, sub_vec, zeros, Q};

pub const DEFAULT_MAX_COEFF: u32 = 5;
pub const DEFAULT_MAX_SCALE: u32 = 20;
pub const DEFAULT_COND2_CAP: u32 = 24;

/// Bilinear form on `t*` dual to the Killing form restricted to `t`, in the
/// coordinates "value on the `t` basis vectors".
#[derive(Clone, Debug, PartialEq)]
pub struct TStarForm {
    pub gram: Vec<Vec<Q>>,
}

impl TStarForm {
    pub fn pair(&self, a: &[Q], b: &[Q]) -> Q {
        let gb: Vec<Q> = self.gram.iter().map(|row| dot(row, b)).collect();
        dot(a, &gb)
    }

    pub fn pair_w(&self, a: &Weight, b: &Weight) -> Q {
        self.pair(&a.coords, &b.coords)
    }
}

pub fn induced_form_on_tstar(l: &LieAlgebra, emb: &EmbeddedSubalgebra) -> Result<TStarForm> {
    let killing: Vec<Vec<Q>> = emb
        .t_basis
        .iter()
        .map(|x| emb.t_basis.iter().map(|y| l.killing_vec(&x.coords, &y.coords)).collect())
        .collect();
    let gram = inverse(&killing).ok_or(Error::DegenerateOnT)?;
    for k in 1..=gram.len() {
        let minor: Vec<Vec<Q>> = gram[..k].iter().map(|row| row[..k].to_vec()).collect();
        if !determinant(&minor).is_positive() {
            return Err(Error::InvariantViolation("form on t* positive definite".into()));
        }
    }
    Ok(TStarForm { gram })
}

/// `μ = ν|_t + 2ρ⊥ₙ`.
pub fn mu_from_nu(l: &LieAlgebra, emb: &EmbeddedSubalgebra, nu: &Weight, rv: &RhoVectors) -> Result<Weight> {
    if nu.context != WeightContext::HStd {
        return Err(Error::ContextMismatch("ν must be an h_std weight".into()));
    }
    if nu.dim() != l.rank() {
        return Err(Error::DimensionMismatch { expected: l.rank(), got: nu.dim() });
    }
    let omega = Weight::new(WeightContext::T, emb.restrict_to_t(l, &nu.coords));
    omega.add(&rv.mu_shift)
}

/// Integrality (`⟨μ, β^∨⟩ ∈ ℤ` for every `t`-root) and dominance
/// (`⟨μ, β⟩ ≥ 0` for the roots positive on `h`).
pub fn check_integral_dominant(mu: &Weight, roots: &WeightMultiset, h: &RegularElement, form: &TStarForm) -> (bool, bool) {
    let mut integral = true;
    let mut dominant = true;
    for (beta, _) in roots.iter() {
        let mb = form.pair_w(mu, beta);
        let pairing = q(2) * &mb / form.pair_w(beta, beta);
        integral &= pairing.is_integer();
        if dot(&beta.coords, &h.t_coords).is_positive() && mb.is_negative() {
            dominant = false;
        }
    }
    (integral, dominant)
}

#[derive(Clone, Debug, PartialEq)]
pub struct Condition1 {
    pub holds: bool,
    pub violations: Vec<Weight>,
}

/// `⟨μ + 2ρ − ρ_n, β⟩ ≥ 0` for every `t`-weight `β` of `n ∩ k`.
pub fn check_condition_1(mu: &Weight, rv: &RhoVectors, weights_n_cap_k: &WeightMultiset, form: &TStarForm) -> Condition1 {
    let base = sub_vec(&add_vec(&mu.coords, &scale_vec(&q(2), &rv.rho.coords)), &rv.rho_n.coords);
    let violations: Vec<Weight> = weights_n_cap_k
        .iter()
        .filter(|(beta, _)| form.pair(&base, &beta.coords).is_negative())
        .map(|(beta, _)| beta.clone())
        .collect();
    Condition1 { holds: violations.is_empty(), violations }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Condition2 {
    pub holds: bool,
    /// First violating submultiset in canonical order, as (weight, count).
    pub witness: Option<Vec<(Weight, usize)>>,
    /// Number of nonempty submultisets covered by the verdict.
    pub enumerated_count: u128,
    /// Number of submultisets actually evaluated.
    pub evaluated: u64,
}

/// Quantities the search needs, precomputed on the distinct weights of `S`.
struct Cond2Data {
    weights: Vec<Weight>,
    mults: Vec<usize>,
    /// `⟨μ + 2ρ, w_i⟩ / 2`
    a: Vec<Q>,
    /// `⟨w_i, w_j⟩`
    g: Vec<Vec<Q>>,
    scaled: Option<Scaled>,
}

/// `4D·a` and `D·g` for a common denominator `D`, present only when every
/// value the search can form fits in an `i128`.
struct Scaled {
    a: Vec<i128>,
    g: Vec<Vec<i128>>,
}

impl Scaled {
    fn new(a: &[Q], g: &[Vec<Q>], mults: &[usize]) -> Option<Self> {
        use num_bigint::BigInt;
        use num_integer::Integer;
        use num_traits::ToPrimitive;
        let d = a.iter().chain(g.iter().flatten()).fold(BigInt::from(1), |acc, x| acc.lcm(x.denom()));
        let int = |x: &Q, f: i64| -> BigInt { (x * Q::from_integer(&d * f)).to_integer() };
        let a: Vec<BigInt> = a.iter().map(|x| int(x, 4)).collect();
        let g: Vec<Vec<BigInt>> = g.iter().map(|r| r.iter().map(|x| int(x, 1)).collect()).collect();
        let m = BigInt::from(mults.iter().sum::<usize>());
        let max_a = a.iter().map(|x| x.abs()).max().unwrap_or_default();
        let max_g = g.iter().flatten().map(|x| x.abs()).max().unwrap_or_default();
        let bound = BigInt::from(2) * &m * max_a + BigInt::from(4) * &m * &m * max_g;
        if bound >= BigInt::from(1u128 << 120) {
            return None;
        }
        Some(Self {
            a: a.iter().map(|x| x.to_i128().unwrap()).collect(),
            g: g.iter().map(|r| r.iter().map(|x| x.to_i128().unwrap()).collect()).collect(),
        })
    }

    fn value(&self, c: &[usize]) -> i128 {
        let mut v = 0;
        for i in 0..c.len() {
            if c[i] == 0 {
                continue;
            }
            let ci = c[i] as i128;
            v += ci * self.a[i];
            for j in 0..c.len() {
                if c[j] != 0 {
                    v -= ci * c[j] as i128 * self.g[i][j];
                }
            }
        }
        v
    }
}

impl Cond2Data {
    fn new(mu: &Weight, rv: &RhoVectors, s: &WeightMultiset, form: &TStarForm) -> Self {
        let big_a = add_vec(&mu.coords, &scale_vec(&q(2), &rv.rho.coords));
        let (weights, mults): (Vec<Weight>, Vec<usize>) = s.iter().map(|(w, m)| (w.clone(), m)).unzip();
        let a: Vec<Q> = weights.iter().map(|w| form.pair(&big_a, &w.coords) / q(2)).collect();
        let g: Vec<Vec<Q>> = weights.iter().map(|x| weights.iter().map(|y| form.pair_w(x, y)).collect()).collect();
        let scaled = Scaled::new(&a, &g, &mults);
        Self { weights, mults, a, g, scaled }
    }

    fn violates(&self, c: &[usize]) -> bool {
        match &self.scaled {
            Some(sc) => sc.value(c) <= 0,
            None => !self.value(c).is_positive(),
        }
    }

    /// `⟨A − ρ', ρ'⟩` for `ρ' = ½ Σ c_i w_i`.
    fn value(&self, c: &[usize]) -> Q {
        let n = c.len();
        let mut v = Q::zero();
        for i in 0..n {
            if c[i] == 0 {
                continue;
            }
            v += q(c[i] as i64) * &self.a[i];
            for j in 0..n {
                if c[j] != 0 {
                    v -= q((c[i] * c[j]) as i64) * &self.g[i][j] / q(4);
                }
            }
        }
        v
    }

    fn witness(&self, c: &[usize]) -> Vec<(Weight, usize)> {
        self.weights.iter().zip(c).filter(|(_, &k)| k > 0).map(|(w, &k)| (w.clone(), k)).collect()
    }

    fn count(&self) -> u128 {
        self.mults.iter().map(|&m| m as u128 + 1).product::<u128>() - 1
    }
}

fn cap_check(data: &Cond2Data, cap: u32) -> Result<()> {
    let limit = 1u128.checked_shl(cap).unwrap_or(u128::MAX);
    let total = data.mults.iter().try_fold(1u128, |acc, &m| acc.checked_mul(m as u128 + 1));
    match total {
        Some(t) if t - 1 <= limit => Ok(()),
        _ => Err(Error::SearchTooLarge(format!("condition 2 enumeration exceeds 2^{cap}"))),
    }
}

/// Every violating nonempty submultiset, in canonical (lexicographic count
/// vector) order, by plain enumeration.
fn violations_exhaustive(data: &Cond2Data) -> (Vec<Vec<usize>>, u64) {
    let n = data.mults.len();
    let mut c = vec![0usize; n];
    let mut out = Vec::new();
    let mut evaluated = 0;
    loop {
        // odometer with the last index least significant
        let mut i = n;
        loop {
            if i == 0 {
                return (out, evaluated);
            }
            i -= 1;
            if c[i] < data.mults[i] {
                c[i] += 1;
                break;
            }
            c[i] = 0;
        }
        evaluated += 1;
        if data.violates(&c) {
            out.push(c.clone());
        }
    }
}

/// Same set and order as [`violations_exhaustive`], skipping subtrees whose
/// completions all satisfy the strict inequality. `stop_at_first` ends the
/// search at the first violation.
fn violations_pruned(data: &Cond2Data, stop_at_first: bool) -> (Vec<Vec<usize>>, u64) {
    let n = data.mults.len();
    let pos_g: Vec<Vec<Q>> =
        data.g.iter().map(|row| row.iter().map(|x| if x.is_positive() { x.clone() } else { Q::zero() }).collect()).collect();
    // suffix_quad[k] = ¼ Σ_{i,j ≥ k} m_i m_j max(0, g_ij)
    let mut suffix_quad = vec![Q::zero(); n + 1];
    for k in (0..n).rev() {
        let mut s = Q::zero();
        for i in k..n {
            for j in k..n {
                s += q((data.mults[i] * data.mults[j]) as i64) * &pos_g[i][j];
            }
        }
        suffix_quad[k] = s / q(4);
    }
    struct Search<'a> {
        data: &'a Cond2Data,
        suffix_quad: Vec<Q>,
        c: Vec<usize>,
        out: Vec<Vec<usize>>,
        evaluated: u64,
        stop: bool,
    }
    impl Search<'_> {
        fn bound_positive(&self, k: usize) -> bool {
            let Some(sc) = &self.data.scaled else {
                return self.lower_bound(k).is_positive();
            };
            let d = self.data;
            let mut lb = sc.value(&self.c);
            let mut quad = 0;
            for i in k..self.c.len() {
                let mut lin = sc.a[i];
                for j in 0..k {
                    lin -= 2 * self.c[j] as i128 * sc.g[j][i];
                }
                lb += d.mults[i] as i128 * lin.min(0);
                for j in k..self.c.len() {
                    quad += (d.mults[i] * d.mults[j]) as i128 * sc.g[i][j].max(0);
                }
            }
            lb - quad > 0
        }

        fn lower_bound(&self, k: usize) -> Q {
            let d = self.data;
            // ⟨ρ_f, w_i⟩ with ρ_f = ½ Σ_{j<k} c_j w_j
            let mut lb = d.value(&self.c);
            for i in k..self.c.len() {
                let mut rf_wi = Q::zero();
                for j in 0..k {
                    rf_wi += q(self.c[j] as i64) * &d.g[j][i];
                }
                let lin = &d.a[i] - rf_wi / q(2);
                if lin.is_negative() {
                    lb += q(d.mults[i] as i64) * lin;
                }
            }
            lb - &self.suffix_quad[k]
        }

        fn go(&mut self, k: usize) {
            if self.stop && !self.out.is_empty() {
                return;
            }
            let n = self.c.len();
            if k == n {
                if self.c.iter().all(|&x| x == 0) {
                    return;
                }
                self.evaluated += 1;
                if self.data.violates(&self.c) {
                    self.out.push(self.c.clone());
                }
                return;
            }
            let nonempty_prefix = self.c[..k].iter().any(|&x| x > 0);
            if nonempty_prefix && self.bound_positive(k) {
                return;
            }
            for v in 0..=self.data.mults[k] {
                self.c[k] = v;
                self.go(k + 1);
            }
            self.c[k] = 0;
        }
    }
    let mut s = Search { data, suffix_quad, c: vec![0; n], out: Vec::new(), evaluated: 0, stop: stop_at_first };
    s.go(0);
    (s.out, s.evaluated)
}

fn report(data: &Cond2Data, violations: Vec<Vec<usize>>, evaluated: u64) -> Condition2 {
    Condition2 {
        holds: violations.is_empty(),
        witness: violations.first().map(|c| data.witness(c)),
        enumerated_count: data.count(),
        evaluated,
    }
}

/// `⟨μ + 2ρ − ρ_{S'}, ρ_{S'}⟩ > 0` for every nonempty submultiset `S'` of `S`,
/// with branch-and-bound pruning.
pub fn check_condition_2(mu: &Weight, rv: &RhoVectors, s: &WeightMultiset, form: &TStarForm, cap: u32) -> Result<Condition2> {
    let data = Cond2Data::new(mu, rv, s, form);
    cap_check(&data, cap)?;
    let (v, e) = violations_pruned(&data, true);
    Ok(report(&data, v, e))
}

/// Condition 2 by plain enumeration of every nonempty submultiset.
pub fn check_condition_2_exhaustive(mu: &Weight, rv: &RhoVectors, s: &WeightMultiset, form: &TStarForm, cap: u32) -> Result<Condition2> {
    let data = Cond2Data::new(mu, rv, s, form);
    cap_check(&data, cap)?;
    let (v, e) = violations_exhaustive(&data);
    Ok(report(&data, v, e))
}

/// All violating submultisets, by either search.
pub fn condition_2_violations(mu: &Weight, rv: &RhoVectors, s: &WeightMultiset, form: &TStarForm, pruned: bool) -> Vec<Vec<(Weight, usize)>> {
    let data = Cond2Data::new(mu, rv, s, form);
    let (v, _) = if pruned { violations_pruned(&data, false) } else { violations_exhaustive(&data) };
    v.iter().map(|c| data.witness(c)).collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct GenericityReport {
    pub mu: Weight,
    pub integral: bool,
    pub dominant: bool,
    pub cond1: Condition1,
    pub cond2: Condition2,
    pub enumerated_count: u128,
}

impl GenericityReport {
    pub fn passed(&self) -> bool {
        self.integral && self.dominant && self.cond1.holds && self.cond2.holds
    }
}

/// Runs every check on `μ`.
pub fn genericity_report(
    l: &LieAlgebra,
    emb: &EmbeddedSubalgebra,
    pd: &ParabolicData,
    rv: &RhoVectors,
    mu: &Weight,
    form: &TStarForm,
    cap: u32,
) -> Result<GenericityReport> {
    let roots = emb.t_roots(l)?;
    let (integral, dominant) = check_integral_dominant(mu, &roots, &pd.h, form);
    let cond1 = check_condition_1(mu, rv, &rv.weights_n_cap_k, form);
    let cond2 = check_condition_2(mu, rv, &rv.weights_n, form, cap)?;
    Ok(GenericityReport { mu: mu.clone(), integral, dominant, enumerated_count: cond2.enumerated_count, cond1, cond2 })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBounds {
    pub max_coeff: u32,
    pub max_scale: u32,
    pub cond2_cap: u32,
}

impl Default for SearchBounds {
    fn default() -> Self {
        Self { max_coeff: DEFAULT_MAX_COEFF, max_scale: DEFAULT_MAX_SCALE, cond2_cap: DEFAULT_COND2_CAP }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GenericWitness {
    pub nu: Weight,
    /// `ν₀` in fundamental coordinates for the Borel `b`.
    pub nu0_b: Vec<u32>,
    pub scale: u32,
    pub mu: Weight,
    pub report: GenericityReport,
}

/// The weight with `⟨ν, β_i^∨⟩ = c_i` on the simple roots `β_i` of `b`, in
/// standard fundamental coordinates.
pub fn from_b_fundamental(l: &LieAlgebra, pd: &ParabolicData, c: &[Q]) -> Result<Vec<Q>> {
    let rs = l.roots();
    let m: Vec<Vec<Q>> = pd.borel.simple().iter().map(|b| rs.coroot(b).into_iter().map(q).collect()).collect();
    let inv = inverse(&m).ok_or_else(|| Error::InvariantViolation("b-simple coroots independent".into()))?;
    Ok(inv.iter().map(|row| dot(row, c)).collect())
}

/// Scans `ν = N·ν₀` with `ν₀` running lexicographically over the
/// `b`-dominant integral weights with coefficients `≤ max_coeff`, and
/// `N = 1..=max_scale` for each.
pub fn find_generic_nu(
    l: &LieAlgebra,
    emb: &EmbeddedSubalgebra,
    pd: &ParabolicData,
    rv: &RhoVectors,
    bounds: SearchBounds,
) -> Result<GenericWitness> {
    if pd.r == 0 {
        return Err(Error::InvariantViolation("r > 0".into()));
    }
    let form = induced_form_on_tstar(l, emb)?;
    let rank = l.rank();
    let mut c = vec![0u32; rank];
    loop {
        let base = from_b_fundamental(l, pd, &c.iter().map(|&x| q(x as i64)).collect::<Vec<_>>())?;
        let scales = if c.iter().all(|&x| x == 0) { 1 } else { bounds.max_scale };
        for n in 1..=scales {
            let nu = Weight::new(WeightContext::HStd, scale_vec(&q(n as i64), &base));
            debug_assert!(pd.borel.is_dominant_integral(l.roots(), &nu.coords));
            let mu = mu_from_nu(l, emb, &nu, rv)?;
            let report = genericity_report(l, emb, pd, rv, &mu, &form, bounds.cond2_cap)?;
            if report.passed() {
                return Ok(GenericWitness { nu, nu0_b: c, scale: n, mu, report });
            }
        }
        // lexicographic successor, last coordinate fastest
        let mut i = rank;
        loop {
            if i == 0 {
                return Err(Error::NotFound);
            }
            i -= 1;
            if c[i] < bounds.max_coeff {
                c[i] += 1;
                break;
            }
            c[i] = 0;
        }
    }
}

pub fn zero_weight_t(emb: &EmbeddedSubalgebra) -> Weight {
    Weight::new(WeightContext::T, zeros(emb.t_dim()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::choose_regular;
    use crate::lie::Element;
    use crate::parabolic::{build_parabolic, rho_vectors};

    struct Fixture {
        l: LieAlgebra,
        emb: EmbeddedSubalgebra,
        pd: ParabolicData,
        rv: RhoVectors,
        form: TStarForm,
    }

    fn el(v: &[i64]) -> Element {
        Element::new(v.iter().map(|&x| q(x)).collect())
    }

    fn fixture(ty: &str, gens: Vec<Element>, t: Vec<Element>) -> Fixture {
        let l = LieAlgebra::new(&ty.parse().unwrap());
        let emb = EmbeddedSubalgebra::new(&l, gens, t).unwrap();
        let h = choose_regular(&l, &emb, 0, 4).unwrap();
        let pd = build_parabolic(&l, &emb, &h).unwrap();
        let rv = rho_vectors(&l, &emb, &pd).unwrap();
        let form = induced_form_on_tstar(&l, &emb).unwrap();
        Fixture { l, emb, pd, rv, form }
    }

    fn a1_torus() -> Fixture {
        fixture("A1", vec![el(&[1, 0, 0])], vec![el(&[1, 0, 0])])
    }

    fn principal() -> Fixture {
        fixture(
            "A2",
            vec![el(&[0, 0, 1, 1, 0, 0, 0, 0]), el(&[0, 0, 0, 0, 0, 2, 2, 0])],
            vec![el(&[2, 2, 0, 0, 0, 0, 0, 0])],
        )
    }

    fn a2_torus() -> Fixture {
        let t = vec![el(&[1, 0, 0, 0, 0, 0, 0, 0]), el(&[0, 1, 0, 0, 0, 0, 0, 0])];
        fixture("A2", t.clone(), t)
    }

    fn tw(v: &[i64]) -> Weight {
        Weight::new(WeightContext::T, v.iter().map(|&x| q(x)).collect())
    }

    fn hw(v: &[i64]) -> Weight {
        Weight::new(WeightContext::HStd, v.iter().map(|&x| q(x)).collect())
    }

    #[test]
    fn forms() {
        let f = a1_torus();
        assert_eq!(f.form.gram, vec![vec![crate::rational::frac(1, 8)]]);
        assert_eq!(f.form.pair(&[q(2)], &[q(2)]), crate::rational::frac(1, 2));
        let p = principal();
        assert_eq!(p.form.gram, vec![vec![crate::rational::frac(1, 48)]]);
        let t = a2_torus();
        for (w, _) in t.rv.weights_n.iter() {
            assert!(t.form.pair_w(w, w).is_positive());
        }
    }

    #[test]
    fn mu_examples() {
        let f = a1_torus();
        assert_eq!(mu_from_nu(&f.l, &f.emb, &hw(&[0]), &f.rv).unwrap(), f.rv.mu_shift);
        assert_eq!(mu_from_nu(&f.l, &f.emb, &hw(&[5]), &f.rv).unwrap(), tw(&[7]));
        let p = principal();
        for (a, b) in [(0, 0), (1, 0), (2, 3)] {
            assert_eq!(mu_from_nu(&p.l, &p.emb, &hw(&[a, b]), &p.rv).unwrap(), tw(&[2 * a + 2 * b + 6]));
        }
        assert!(matches!(mu_from_nu(&p.l, &p.emb, &tw(&[1]), &p.rv), Err(Error::ContextMismatch(_))));
    }

    #[test]
    fn integral_dominant_examples() {
        let f = a1_torus();
        let roots = f.emb.t_roots(&f.l).unwrap();
        assert_eq!(check_integral_dominant(&tw(&[-3]), &roots, &f.pd.h, &f.form), (true, true));
        let p = principal();
        let roots = p.emb.t_roots(&p.l).unwrap();
        assert_eq!(check_integral_dominant(&tw(&[8]), &roots, &p.pd.h, &p.form), (true, true));
        let neg = p.rv.rho_n.scale(&q(-1));
        assert!(!check_integral_dominant(&neg, &roots, &p.pd.h, &p.form).1);
    }

    #[test]
    fn condition_1_examples() {
        let f = a1_torus();
        assert!(check_condition_1(&tw(&[-100]), &f.rv, &f.rv.weights_n_cap_k, &f.form).holds);
        let p = principal();
        assert!(check_condition_1(&tw(&[50]), &p.rv, &p.rv.weights_n_cap_k, &p.form).holds);
        // μ + 2ρ − ρ_n = μ − 2 is negative on β = 2 once μ < 2
        let c = check_condition_1(&tw(&[1]), &p.rv, &p.rv.weights_n_cap_k, &p.form);
        assert!(!c.holds);
        assert_eq!(c.violations, vec![tw(&[2])]);
    }

    #[test]
    fn condition_2_examples() {
        let f = a1_torus();
        for m in 0..6 {
            let mu = tw(&[m + 2]);
            let c = check_condition_2(&mu, &f.rv, &f.rv.weights_n, &f.form, 24).unwrap();
            assert!(c.holds);
            assert_eq!(c.enumerated_count, 1);
        }
        // (m + 2 − 1)·2/8 > 0 fails at m = −1
        let c = check_condition_2(&tw(&[1]), &f.rv, &f.rv.weights_n, &f.form, 24).unwrap();
        assert!(!c.holds);
        assert_eq!(c.witness, Some(vec![(tw(&[2]), 1)]));

        let p = principal();
        for n in [1, 5, 40] {
            let c = check_condition_2(&tw(&[6 * n]), &p.rv, &p.rv.weights_n, &p.form, 24).unwrap();
            assert!(c.holds);
            assert_eq!(c.enumerated_count, 5);
        }
    }

    #[test]
    fn condition_2_cap() {
        let p = principal();
        assert!(matches!(
            check_condition_2(&tw(&[6]), &p.rv, &p.rv.weights_n, &p.form, 2),
            Err(Error::SearchTooLarge(_))
        ));
        assert!(check_condition_2(&tw(&[6]), &p.rv, &p.rv.weights_n, &p.form, 3).is_ok());
    }

    #[test]
    fn pruned_agrees_with_exhaustive_on_examples() {
        let t = a2_torus();
        for a in -6..8 {
            for b in -6..8 {
                let mu = tw(&[a, b]);
                let p = condition_2_violations(&mu, &t.rv, &t.rv.weights_n, &t.form, true);
                let e = condition_2_violations(&mu, &t.rv, &t.rv.weights_n, &t.form, false);
                assert_eq!(p, e, "μ = ({a}, {b})");
                let c = check_condition_2(&mu, &t.rv, &t.rv.weights_n, &t.form, 24).unwrap();
                let x = check_condition_2_exhaustive(&mu, &t.rv, &t.rv.weights_n, &t.form, 24).unwrap();
                assert_eq!((c.holds, &c.witness), (x.holds, &x.witness));
            }
        }
    }

    #[test]
    fn witness_search() {
        let f = a1_torus();
        let w = find_generic_nu(&f.l, &f.emb, &f.pd, &f.rv, SearchBounds::default()).unwrap();
        assert_eq!(w.nu, hw(&[0]));
        assert_eq!(w.mu, tw(&[2]));

        let t = a2_torus();
        let w = find_generic_nu(&t.l, &t.emb, &t.pd, &t.rv, SearchBounds { max_coeff: 3, ..Default::default() }).unwrap();
        assert!(w.report.passed());
        assert_eq!(w.report.enumerated_count, 7);
        assert!(w.nu0_b.iter().all(|&c| c <= 3));

        let p = principal();
        let w = find_generic_nu(&p.l, &p.emb, &p.pd, &p.rv, SearchBounds::default()).unwrap();
        assert_eq!(w.nu, hw(&[0, 0]));
        assert_eq!(w.mu, tw(&[6]));
        assert_eq!(w.report.enumerated_count, 5);
        let again = find_generic_nu(&p.l, &p.emb, &p.pd, &p.rv, SearchBounds::default()).unwrap();
        assert_eq!(w, again);
    }

    #[test]
    fn b_fundamental_conversion() {
        let b2 = fixture(
            "B2",
            vec![el(&[0, 0, 1, 0, 0, 0, 0, 0, 0, 0]), el(&[0, 0, 0, 0, 0, 0, 1, 0, 0, 0])],
            vec![el(&[1, 0, 0, 0, 0, 0, 0, 0, 0, 0])],
        );
        let rs = b2.l.roots();
        for c in [[1, 0], [0, 1], [2, 3]] {
            let cq: Vec<Q> = c.iter().map(|&x| q(x)).collect();
            let nu = from_b_fundamental(&b2.l, &b2.pd, &cq).unwrap();
            let back: Vec<Q> = b2.pd.borel.simple().iter().map(|s| rs.pair_coroot(&nu, s)).collect();
            assert_eq!(back, cq);
            assert!(nu.iter().all(|x| x.is_integer()));
        }
    }
}

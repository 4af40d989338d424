//! Chevalley-basis realization of a semisimple Lie algebra.
//!
//! Basis order (part of the input contract):
//!
//! 1. `h_1, ..., h_l`, the simple coroots;
//! 2. `e_α` for each positive root, by height and then descending
//!    lexicographic order on simple-root coordinates;
//! 3. `f_α = e_{-α}` in the same order as the `e_α`.
//!
//! Relations: `[h_i, e_α] = α(h_i) e_α`, `[e_α, e_{-α}] = h_α` (the coroot),
//! and `[e_α, e_β] = N_{α,β} e_{α+β}`. The signs of the `N_{α,β}` are fixed
//! by declaring `N = +(p+1)` on every extraspecial pair; all other constants
//! follow from the standard identities relating them.

use std::collections::HashMap;
use std::fmt;

use num_traits::Zero;

use super::cartan::CartanType;
use super::roots::{root_order, PositiveSystem, RootRef, RootSystem, RootVec};
use crate::error::{Error, Result};
use crate::linalg::{determinant, Matrix};
use crate::rational::{q, zeros, Q};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BasisLabel {
    CartanGen(usize),
    PosRoot(RootVec),
    NegRoot(RootVec),
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |r: &RootVec| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        match self {
            BasisLabel::CartanGen(i) => write!(f, "h{}", i + 1),
            BasisLabel::PosRoot(r) => write!(f, "e[{}]", join(r)),
            BasisLabel::NegRoot(r) => write!(f, "f[{}]", join(r)),
        }
    }
}

/// A vector of `g` in the Chevalley basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element {
    pub coords: Vec<Q>,
}

impl Element {
    pub fn new(coords: Vec<Q>) -> Self {
        Self { coords }
    }

    pub fn zero(dim: usize) -> Self {
        Self::new(zeros(dim))
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        Self::new(crate::rational::unit(dim, i))
    }

    pub fn is_zero(&self) -> bool {
        crate::rational::is_zero_vec(&self.coords)
    }
}

type Sparse = Vec<(usize, i64)>;

#[derive(Clone, Debug)]
pub struct LieAlgebra {
    ty: CartanType,
    roots: RootSystem,
    labels: Vec<BasisLabel>,
    /// `[b_i, b_j]` at index `i * dim + j`.
    structure: Vec<Sparse>,
    /// Killing form on the full basis; nonzero only on `h`-`h` and `e_α`-`e_{-α}` pairs.
    killing_gram: Vec<Sparse>,
    killing_cartan: Matrix,
}

struct Constants<'a> {
    rs: &'a RootSystem,
    memo: HashMap<(usize, usize), i64>,
}

impl Constants<'_> {
    fn len2(&self, r: &[i64]) -> Q {
        self.rs.inner(r, r)
    }

    fn sum(a: &[i64], b: &[i64]) -> RootVec {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    fn neg(a: &[i64]) -> RootVec {
        a.iter().map(|x| -x).collect()
    }

    /// Largest `p` with `b - p a` a root.
    fn string_p(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut p = 0;
        let mut cur = b.to_vec();
        loop {
            for (c, x) in cur.iter_mut().zip(a) {
                *c -= x;
            }
            if self.rs.lookup(&cur).is_some() {
                p += 1;
            } else {
                return p;
            }
        }
    }

    /// `N_{a,b}` for arbitrary roots; zero when `a + b` is not a root.
    fn n(&mut self, a: &[i64], b: &[i64]) -> i64 {
        let c = Self::sum(a, b);
        if c.iter().all(|&x| x == 0) || self.rs.lookup(&c).is_none() {
            return 0;
        }
        let ra = self.rs.lookup(a).unwrap();
        let rb = self.rs.lookup(b).unwrap();
        match (ra.positive, rb.positive) {
            (true, true) => self.n_pos(ra.index, rb.index),
            (false, false) => -self.n(&Self::neg(a), &Self::neg(b)),
            (false, true) => -self.n(b, a),
            (true, false) => {
                // a + b + (-c) = 0: N_{a,b}/(c,c) = N_{b,-c}/(a,a) = N_{-c,a}/(b,b)
                let cref = self.rs.lookup(&c).unwrap();
                let v = if cref.positive {
                    // N_{b,-c} = -N_{-b,c}, both positive
                    let inner = -self.n(&Self::neg(b), &c);
                    self.len2(&c) / self.len2(a) * q(inner)
                } else {
                    let nc = Self::neg(&c);
                    let inner = self.n(&nc, a);
                    self.len2(&c) / self.len2(b) * q(inner)
                };
                crate::rational::to_i64(&v).expect("integral structure constant")
            }
        }
    }

    fn n_pos(&mut self, i: usize, j: usize) -> i64 {
        if let Some(&v) = self.memo.get(&(i, j)) {
            return v;
        }
        let rs = self.rs;
        let pos = rs.positive();
        let (a, b) = (pos[i].clone(), pos[j].clone());
        let v = if root_order(&a, &b).is_gt() {
            -self.n_pos(j, i)
        } else {
            let xi = Self::sum(&a, &b);
            // extraspecial pair: smallest first component among decompositions of xi
            let (ea, eb) = pos
                .iter()
                .find_map(|g| {
                    let d: RootVec = xi.iter().zip(g).map(|(x, y)| x - y).collect();
                    match rs.lookup(&d) {
                        Some(RootRef { positive: true, .. }) => Some((g.clone(), d)),
                        _ => None,
                    }
                })
                .expect("sum of positive roots decomposes");
            let p_ex = self.string_p(&ea, &eb);
            if ea == a {
                p_ex + 1
            } else {
                // Four-root identity with (ea, eb, -a, -b), solved for N_{a,b}.
                let (na, nb) = (Self::neg(&a), Self::neg(&b));
                let t1 = {
                    let d = Self::sum(&eb, &na);
                    let x = self.n(&eb, &na);
                    if x == 0 {
                        Q::zero()
                    } else {
                        q(x * self.n(&ea, &nb)) / self.len2(&d)
                    }
                };
                let t2 = {
                    let d = Self::sum(&ea, &na);
                    let x = self.n(&na, &ea);
                    if x == 0 {
                        Q::zero()
                    } else {
                        q(x * self.n(&eb, &nb)) / self.len2(&d)
                    }
                };
                let v = self.len2(&xi) / q(p_ex + 1) * (t1 + t2);
                crate::rational::to_i64(&v).expect("integral structure constant")
            }
        };
        self.memo.insert((i, j), v);
        v
    }
}

impl LieAlgebra {
    pub fn new(ty: &CartanType) -> Self {
        let rs = RootSystem::new(ty);
        let l = rs.rank();
        let np = rs.num_positive();
        let dim = l + 2 * np;
        let mut labels: Vec<BasisLabel> = (0..l).map(BasisLabel::CartanGen).collect();
        labels.extend(rs.positive().iter().cloned().map(BasisLabel::PosRoot));
        labels.extend(rs.positive().iter().cloned().map(BasisLabel::NegRoot));

        let root_of = |idx: usize| -> Option<RootVec> {
            match &labels[idx] {
                BasisLabel::CartanGen(_) => None,
                BasisLabel::PosRoot(r) => Some(r.clone()),
                BasisLabel::NegRoot(r) => Some(r.iter().map(|x| -x).collect()),
            }
        };
        let index_of = |r: &[i64]| -> usize {
            let rr = rs.lookup(r).expect("root");
            if rr.positive {
                l + rr.index
            } else {
                l + np + rr.index
            }
        };

        let mut consts = Constants { rs: &rs, memo: HashMap::new() };
        let mut structure = vec![Sparse::new(); dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                let entry = match (root_of(i), root_of(j)) {
                    (None, None) => Sparse::new(),
                    (None, Some(b)) => {
                        let v = rs.to_fundamental(&b)[i];
                        if v == 0 { Sparse::new() } else { vec![(j, v)] }
                    }
                    (Some(a), None) => {
                        let v = -rs.to_fundamental(&a)[j];
                        if v == 0 { Sparse::new() } else { vec![(i, v)] }
                    }
                    (Some(a), Some(b)) => {
                        let s: RootVec = a.iter().zip(&b).map(|(x, y)| x + y).collect();
                        if s.iter().all(|&x| x == 0) {
                            rs.coroot(&a)
                                .into_iter()
                                .enumerate()
                                .filter(|&(_, c)| c != 0)
                                .collect()
                        } else if rs.lookup(&s).is_some() {
                            vec![(index_of(&s), consts.n(&a, &b))]
                        } else {
                            Sparse::new()
                        }
                    }
                };
                structure[i * dim + j] = entry;
            }
        }

        let mut alg = Self {
            ty: ty.clone(),
            roots: rs,
            labels,
            structure,
            killing_gram: Vec::new(),
            killing_cartan: Vec::new(),
        };
        alg.compute_killing();
        alg
    }

    fn compute_killing(&mut self) {
        let dim = self.dim();
        let l = self.rank();
        let np = self.roots.num_positive();
        let mut gram = vec![Sparse::new(); dim];
        let mut set = |i: usize, j: usize, v: i64| {
            if v != 0 {
                gram[i].push((j, v));
            }
        };
        for i in 0..l {
            for j in 0..l {
                set(i, j, self.trace_ad_ad(i, j));
            }
        }
        for k in 0..np {
            let v = self.trace_ad_ad(l + k, l + np + k);
            set(l + k, l + np + k, v);
            set(l + np + k, l + k, v);
        }
        for row in gram.iter_mut() {
            row.sort_unstable();
        }
        self.killing_cartan = (0..l)
            .map(|i| (0..l).map(|j| q(lookup_sparse(&gram[i], j))).collect())
            .collect();
        self.killing_gram = gram;
    }

    /// `trace(ad b_i ∘ ad b_j)` straight from the structure constants.
    fn trace_ad_ad(&self, i: usize, j: usize) -> i64 {
        let dim = self.dim();
        let mut tr = 0;
        for k in 0..dim {
            for &(m, c) in &self.structure[j * dim + k] {
                tr += c * lookup_sparse(&self.structure[i * dim + m], k);
            }
        }
        tr
    }

    pub fn cartan_type(&self) -> &CartanType {
        &self.ty
    }

    pub fn roots(&self) -> &RootSystem {
        &self.roots
    }

    pub fn standard_positive(&self) -> PositiveSystem {
        PositiveSystem::standard(&self.roots)
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn rank(&self) -> usize {
        self.roots.rank()
    }

    pub fn labels(&self) -> &[BasisLabel] {
        &self.labels
    }

    pub fn label_index(&self, label: &BasisLabel) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Index of the root vector `e_r` for a (signed) root `r`.
    pub fn root_vector_index(&self, r: &[i64]) -> Option<usize> {
        let rr = self.roots.lookup(r)?;
        let l = self.rank();
        Some(if rr.positive { l + rr.index } else { l + self.roots.num_positive() + rr.index })
    }

    /// The root of basis vector `i`, or `None` for Cartan generators.
    pub fn basis_root(&self, i: usize) -> Option<RootVec> {
        match &self.labels[i] {
            BasisLabel::CartanGen(_) => None,
            BasisLabel::PosRoot(r) => Some(r.clone()),
            BasisLabel::NegRoot(r) => Some(r.iter().map(|x| -x).collect()),
        }
    }

    /// `h_std`-weight of basis vector `i` in fundamental coordinates.
    pub fn basis_weight(&self, i: usize) -> Vec<i64> {
        match self.basis_root(i) {
            None => vec![0; self.rank()],
            Some(r) => self.roots.to_fundamental(&r),
        }
    }

    pub fn structure_constant(&self, i: usize, j: usize) -> &[(usize, i64)] {
        &self.structure[i * self.dim() + j]
    }

    /// Killing form restricted to the standard Cartan subalgebra, in the basis
    /// of simple coroots.
    pub fn killing_cartan(&self) -> &Matrix {
        &self.killing_cartan
    }

    pub fn killing_gram_entry(&self, i: usize, j: usize) -> i64 {
        lookup_sparse(&self.killing_gram[i], j)
    }

    /// Full Killing Gram matrix in the Chevalley basis.
    pub fn killing_gram(&self) -> Matrix {
        let dim = self.dim();
        (0..dim).map(|i| (0..dim).map(|j| q(self.killing_gram_entry(i, j))).collect()).collect()
    }

    fn check(&self, x: &[Q]) -> Result<()> {
        if x.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), got: x.len() });
        }
        Ok(())
    }

    pub fn bracket(&self, x: &Element, y: &Element) -> Result<Element> {
        self.check(&x.coords)?;
        self.check(&y.coords)?;
        Ok(Element::new(self.bracket_vec(&x.coords, &y.coords)))
    }

    pub(crate) fn bracket_vec(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        let dim = self.dim();
        let mut out = zeros(dim);
        let ys: Vec<(usize, &Q)> = y.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for &(j, yj) in &ys {
                let prod = xi * yj;
                for &(k, c) in &self.structure[i * dim + j] {
                    out[k] += &prod * q(c);
                }
            }
        }
        out
    }

    /// Bracket of basis vector `i` with `y`.
    pub(crate) fn bracket_basis(&self, i: usize, y: &[Q]) -> Vec<Q> {
        let dim = self.dim();
        let mut out = zeros(dim);
        for (j, yj) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for &(k, c) in &self.structure[i * dim + j] {
                out[k] += yj * q(c);
            }
        }
        out
    }

    pub fn killing(&self, x: &Element, y: &Element) -> Result<Q> {
        self.check(&x.coords)?;
        self.check(&y.coords)?;
        Ok(self.killing_vec(&x.coords, &y.coords))
    }

    pub(crate) fn killing_vec(&self, x: &[Q], y: &[Q]) -> Q {
        let mut acc = Q::zero();
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for &(j, v) in &self.killing_gram[i] {
                if !y[j].is_zero() {
                    acc += xi * &y[j] * q(v);
                }
            }
        }
        acc
    }

    /// Matrix of `ad x`; column `j` holds `[x, b_j]`.
    pub fn ad_matrix(&self, x: &Element) -> Result<Matrix> {
        self.check(&x.coords)?;
        let dim = self.dim();
        let mut m: Matrix = (0..dim).map(|_| zeros(dim)).collect();
        for j in 0..dim {
            let col = self.bracket_vec(&x.coords, &crate::rational::unit(dim, j));
            for (i, v) in col.into_iter().enumerate() {
                m[i][j] = v;
            }
        }
        Ok(m)
    }

    /// `trace(ad x ∘ ad y)`, recomputed from brackets.
    pub fn killing_by_trace(&self, x: &Element, y: &Element) -> Result<Q> {
        self.check(&x.coords)?;
        self.check(&y.coords)?;
        let dim = self.dim();
        let mut tr = Q::zero();
        for k in 0..dim {
            let inner = self.bracket_vec(&y.coords, &crate::rational::unit(dim, k));
            let outer = self.bracket_vec(&x.coords, &inner);
            tr += &outer[k];
        }
        Ok(tr)
    }

    pub fn killing_determinant(&self) -> Q {
        determinant(&self.killing_gram())
    }

    /// Basis indices spanning each simple ideal, one list per factor of the
    /// Cartan type.
    pub fn simple_ideals(&self) -> Vec<Vec<usize>> {
        let offsets = self.ty.offsets();
        self.ty
            .factors()
            .iter()
            .zip(&offsets)
            .map(|(f, &off)| {
                let range = off..off + f.rank;
                (0..self.dim())
                    .filter(|&i| match &self.labels[i] {
                        BasisLabel::CartanGen(c) => range.contains(c),
                        BasisLabel::PosRoot(r) | BasisLabel::NegRoot(r) => {
                            r.iter().enumerate().any(|(c, &x)| x != 0 && range.contains(&c))
                        }
                    })
                    .collect()
            })
            .collect()
    }
}

fn lookup_sparse(row: &[(usize, i64)], j: usize) -> i64 {
    row.iter().find(|&&(k, _)| k == j).map_or(0, |&(_, v)| v)
}

//! Dense exact linear algebra over the rationals.
//!
//! Matrices are row-major `Vec<Vec<Q>>`. Everything here is Gauss-Jordan
//! elimination in one form or another; sizes stay at desk scale.

use num_traits::{One, Zero};

use crate::rational::{zeros, Q};

pub type Matrix = Vec<Vec<Q>>;

/// Reduces `rows` to reduced row-echelon form in place, dropping zero rows.
/// Returns the pivot column of each surviving row.
pub fn rref(rows: &mut Matrix, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Q::one() / &rows[r][c];
        if !inv.is_one() {
            for x in rows[r][c..].iter_mut() {
                *x *= &inv;
            }
        }
        let (head, tail) = rows.split_at_mut(r);
        let (pivot_row, rest) = tail.split_first_mut().unwrap();
        for other in head.iter_mut().chain(rest.iter_mut()) {
            if other[c].is_zero() {
                continue;
            }
            let f = other[c].clone();
            for j in c..ncols {
                if !pivot_row[j].is_zero() {
                    let t = &f * &pivot_row[j];
                    other[j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub fn rank(m: &[Vec<Q>], ncols: usize) -> usize {
    let mut rows = m.to_vec();
    rref(&mut rows, ncols).len()
}

/// Basis of `{x : m x = 0}`, in canonical (RREF) form.
pub fn nullspace(m: &[Vec<Q>], ncols: usize) -> Matrix {
    let mut rows = m.to_vec();
    let pivots = rref(&mut rows, ncols);
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = zeros(ncols);
        v[free] = Q::one();
        for (row, &p) in rows.iter().zip(&pivots) {
            v[p] = -row[free].clone();
        }
        basis.push(v);
    }
    let mut basis = basis;
    rref(&mut basis, ncols);
    basis
}

pub fn identity(n: usize) -> Matrix {
    (0..n).map(|i| crate::rational::unit(n, i)).collect()
}

pub fn transpose(m: &[Vec<Q>], ncols: usize) -> Matrix {
    (0..ncols).map(|j| m.iter().map(|row| row[j].clone()).collect()).collect()
}

pub fn mat_mul(a: &[Vec<Q>], b: &[Vec<Q>]) -> Matrix {
    let inner = b.len();
    let ncols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            let mut out = zeros(ncols);
            for k in 0..inner {
                if row[k].is_zero() {
                    continue;
                }
                for (o, bkj) in out.iter_mut().zip(&b[k]) {
                    if !bkj.is_zero() {
                        *o += &row[k] * bkj;
                    }
                }
            }
            out
        })
        .collect()
}

pub fn mat_vec(a: &[Vec<Q>], v: &[Q]) -> Vec<Q> {
    a.iter().map(|row| crate::rational::dot(row, v)).collect()
}

pub fn inverse(m: &[Vec<Q>]) -> Option<Matrix> {
    let n = m.len();
    let mut aug: Matrix = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend(crate::rational::unit(n, i));
            r
        })
        .collect();
    let pivots = rref(&mut aug, 2 * n);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn determinant(m: &[Vec<Q>]) -> Q {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = Q::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Q::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det *= &a[c][c];
        let pivot = a[c].clone();
        for row in a.iter_mut().skip(c + 1) {
            if row[c].is_zero() {
                continue;
            }
            let f = &row[c] / &pivot[c];
            for j in c..n {
                let t = &f * &pivot[j];
                row[j] -= t;
            }
        }
    }
    det
}

/// Solves `x · rows = v` for `x`, i.e. expresses `v` in the span of `rows`.
pub fn solve_in_span(rows: &[Vec<Q>], v: &[Q]) -> Option<Vec<Q>> {
    let k = rows.len();
    let n = v.len();
    // columns: one per row of `rows`, plus the target
    let mut sys: Matrix = (0..n)
        .map(|j| {
            let mut r: Vec<Q> = rows.iter().map(|row| row[j].clone()).collect();
            r.push(v[j].clone());
            r
        })
        .collect();
    let pivots = rref(&mut sys, k + 1);
    if pivots.last() == Some(&k) {
        return None;
    }
    let mut x = zeros(k);
    for (row, &p) in sys.iter().zip(&pivots) {
        x[p] = row[k].clone();
    }
    Some(x)
}

/// A linear subspace of `Q^ambient`, stored by its unique reduced row-echelon
/// basis. Two subspaces are equal iff their canonical bases coincide.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    rows: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Self { ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Self::from_vectors(ambient, identity(ambient))
    }

    pub fn from_vectors(ambient: usize, vectors: impl IntoIterator<Item = Vec<Q>>) -> Self {
        let mut rows: Matrix = vectors.into_iter().collect();
        debug_assert!(rows.iter().all(|r| r.len() == ambient));
        let pivots = rref(&mut rows, ambient);
        Self { ambient, rows, pivots }
    }

    /// Span of the given coordinate axes.
    pub fn coordinate(ambient: usize, axes: impl IntoIterator<Item = usize>) -> Self {
        Self::from_vectors(ambient, axes.into_iter().map(|i| crate::rational::unit(ambient, i)))
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self) -> &[Vec<Q>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the span.
    pub fn coordinates(&self, v: &[Q]) -> Option<Vec<Q>> {
        let coords: Vec<Q> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut residual = v.to_vec();
        for (c, row) in coords.iter().zip(&self.rows) {
            if c.is_zero() {
                continue;
            }
            for (r, x) in residual.iter_mut().zip(row) {
                if !x.is_zero() {
                    *r -= c * x;
                }
            }
        }
        residual.iter().all(Zero::is_zero).then_some(coords)
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Self::from_vectors(self.ambient, self.rows.iter().chain(&other.rows).cloned())
    }

    /// Orthogonal complement under the standard dot product.
    pub fn annihilator(&self) -> Subspace {
        Self::from_vectors(self.ambient, nullspace(&self.rows, self.ambient))
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.ambient);
        }
        self.annihilator().sum(&other.annihilator()).annihilator()
    }
}

/// Dense univariate polynomial over Q, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly(pub Vec<Q>);

impl Poly {
    fn trim(mut self) -> Self {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
        self
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn derivative(&self) -> Poly {
        Poly(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * crate::rational::q(i as i64))
                .collect(),
        )
        .trim()
    }

    fn monic(self) -> Poly {
        match self.0.last() {
            None => self,
            Some(lead) => {
                let inv = Q::one() / lead;
                Poly(self.0.iter().map(|c| c * &inv).collect())
            }
        }
    }

    fn rem(&self, d: &Poly) -> Poly {
        let mut r = self.0.clone();
        let dd = d.0.len() - 1;
        let lead = d.0.last().unwrap().clone();
        while r.len() > dd && !r.is_empty() {
            let f = r.last().unwrap() / &lead;
            let shift = r.len() - 1 - dd;
            for (i, c) in d.0.iter().enumerate() {
                r[shift + i] -= &f * c;
            }
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        Poly(r)
    }

    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone().trim(), other.clone().trim());
        while !b.0.is_empty() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    fn mul(&self, other: &Poly) -> Poly {
        if self.0.is_empty() || other.0.is_empty() {
            return Poly(Vec::new());
        }
        let mut out = zeros(self.0.len() + other.0.len() - 1);
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly(out).trim()
    }

    fn exact_div(&self, d: &Poly) -> Poly {
        let mut r = self.0.clone();
        let dd = d.0.len() - 1;
        let lead = d.0.last().unwrap().clone();
        let mut quot = zeros(r.len().saturating_sub(dd));
        while r.len() > dd {
            let f = r.last().unwrap() / &lead;
            let shift = r.len() - 1 - dd;
            for (i, c) in d.0.iter().enumerate() {
                r[shift + i] -= &f * c;
            }
            quot[shift] = f;
            r.pop();
        }
        Poly(quot).trim()
    }

    pub fn lcm(&self, other: &Poly) -> Poly {
        let g = self.gcd(other);
        self.mul(other).exact_div(&g).monic()
    }

    /// True iff the polynomial has no repeated factor over the algebraic closure.
    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree() == Some(0)
    }
}

/// Minimal polynomial of a square matrix, as the lcm of the minimal
/// polynomials of the coordinate vectors (Krylov sequences).
pub fn minimal_polynomial(m: &[Vec<Q>]) -> Poly {
    let n = m.len();
    let mut acc = Poly(vec![Q::one()]);
    for i in 0..n {
        let mut krylov: Matrix = vec![crate::rational::unit(n, i)];
        loop {
            let next = mat_vec(m, krylov.last().unwrap());
            if let Some(c) = solve_in_span(&krylov, &next) {
                // next = sum c_j A^j e_i  =>  x^d - sum c_j x^j annihilates e_i
                let mut coeffs: Vec<Q> = c.into_iter().map(|x| -x).collect();
                coeffs.push(Q::one());
                acc = acc.lcm(&Poly(coeffs));
                break;
            }
            krylov.push(next);
        }
    }
    acc
}

//! Weyl group elements acting on weights in fundamental coordinates.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::roots::{PositiveSystem, RootSystem};
use crate::error::{Error, Result};
use crate::rational::{q, Q};

/// Largest Weyl group we are willing to walk.
pub const WEYL_ORDER_CAP: u128 = 10_000_000;

pub type IntMatrix = Vec<Vec<i64>>;

/// A Weyl group element. `word` indexes the simple roots of the positive
/// system it was generated from; `matrix` acts on column vectors of
/// fundamental coordinates and equals the product of the word's simple
/// reflections, left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylElement {
    pub word: Vec<usize>,
    pub matrix: IntMatrix,
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        let matrix = (0..rank).map(|i| (0..rank).map(|j| i64::from(i == j)).collect()).collect();
        Self { word: Vec::new(), matrix }
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn act(&self, weight: &[Q]) -> Vec<Q> {
        self.matrix
            .iter()
            .map(|row| row.iter().zip(weight).fold(Q::from_integer(0.into()), |acc, (m, w)| acc + q(*m) * w))
            .collect()
    }

    pub fn act_int(&self, v: &[i64]) -> Vec<i64> {
        self.matrix.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
    }

    /// `w(λ + ρ) - ρ`.
    pub fn dot_action(&self, weight: &[Q], rho: &[Q]) -> Vec<Q> {
        let shifted: Vec<Q> = weight.iter().zip(rho).map(|(a, b)| a + b).collect();
        self.act(&shifted).iter().zip(rho).map(|(a, b)| a - b).collect()
    }
}

/// Reflection in `α` on fundamental coordinates: `λ ↦ λ - <λ, α^∨> α`.
pub fn reflection_matrix(rs: &RootSystem, alpha: &[i64]) -> IntMatrix {
    let fund = rs.to_fundamental(alpha);
    let cor = rs.coroot(alpha);
    let n = rs.rank();
    (0..n)
        .map(|j| (0..n).map(|k| i64::from(j == k) - fund[j] * cor[k]).collect())
        .collect()
}

fn mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect()).collect()
}

/// Breadth-first layers of the Cayley graph over the simple reflections of
/// `ps`, up to and including length `max_len`. Layer `r` holds exactly the
/// elements of length `r` relative to `ps`.
pub fn weyl_layers(rs: &RootSystem, ps: &PositiveSystem, max_len: usize) -> Result<Vec<Vec<WeylElement>>> {
    if rs.weyl_order() > WEYL_ORDER_CAP {
        return Err(Error::SearchTooLarge(format!(
            "|W| = {} exceeds {}",
            rs.weyl_order(),
            WEYL_ORDER_CAP
        )));
    }
    let reflections: Vec<IntMatrix> = ps.simple().iter().map(|s| reflection_matrix(rs, s)).collect();
    let mut layers = vec![vec![WeylElement::identity(rs.rank())]];
    let mut prev: HashSet<IntMatrix> = HashSet::new();
    let mut cur: HashSet<IntMatrix> = layers[0].iter().map(|w| w.matrix.clone()).collect();
    for _ in 0..max_len {
        let mut next_layer = Vec::new();
        let mut next: HashSet<IntMatrix> = HashSet::new();
        for w in layers.last().unwrap() {
            for (k, s) in reflections.iter().enumerate() {
                let m = mul(s, &w.matrix);
                if prev.contains(&m) || cur.contains(&m) || next.contains(&m) {
                    continue;
                }
                next.insert(m.clone());
                let mut word = Vec::with_capacity(w.word.len() + 1);
                word.push(k);
                word.extend_from_slice(&w.word);
                next_layer.push(WeylElement { word, matrix: m });
            }
        }
        if next_layer.is_empty() {
            break;
        }
        prev = std::mem::replace(&mut cur, next);
        layers.push(next_layer);
    }
    Ok(layers)
}

/// All elements of length exactly `r` relative to `ps`.
pub fn weyl_elements_of_length(rs: &RootSystem, ps: &PositiveSystem, r: usize) -> Result<Vec<WeylElement>> {
    let max = ps.positive().len();
    if r > max {
        return Err(Error::LengthOutOfRange { requested: r, max });
    }
    let mut layers = weyl_layers(rs, ps, r)?;
    Ok(if layers.len() > r { layers.swap_remove(r) } else { Vec::new() })
}

/// Number of positive roots sent to negative roots.
pub fn inversion_count(rs: &RootSystem, ps: &PositiveSystem, w: &WeylElement) -> usize {
    let positive: HashSet<Vec<i64>> = ps.positive().iter().map(|r| rs.to_fundamental(r)).collect();
    ps.positive()
        .iter()
        .filter(|r| !positive.contains(&w.act_int(&rs.to_fundamental(r))))
        .count()
}

/// Weyl dimension formula for a weight dominant integral with respect to `ps`.
pub fn weyl_dimension(rs: &RootSystem, ps: &PositiveSystem, weight: &[Q]) -> Result<BigInt> {
    if weight.len() != rs.rank() {
        return Err(Error::DimensionMismatch { expected: rs.rank(), got: weight.len() });
    }
    if !ps.is_dominant_integral(rs, weight) {
        return Err(Error::NonDominant(format!("{weight:?}")));
    }
    let rho = ps.rho(rs);
    let shifted: Vec<Q> = weight.iter().zip(&rho).map(|(a, b)| a + b).collect();
    let mut num = Q::one();
    let mut den = Q::one();
    for a in ps.positive() {
        num *= rs.pair_coroot(&shifted, a);
        den *= rs.pair_coroot(&rho, a);
    }
    let d = num / den;
    debug_assert!(d.is_integer() && d.is_positive());
    Ok(d.to_integer())
}

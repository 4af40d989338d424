//! Characters of simple `m`-modules (Freudenthal) and greedy decomposition of
//! an `m`-character into simple constituents.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use super::complex::WeightDims;
use crate::error::{Error, Result};
use crate::kostant::{is_m_dominant, rho_m};
use crate::lie::roots::RootVec;
use crate::lie::{LieAlgebra, Weight, WeightContext};
use crate::linalg::solve_in_span;
use crate::parabolic::ParabolicData;
use crate::rational::{add_vec, q, sub_vec, to_i64, Q};

fn to_q(v: &[i64]) -> Vec<Q> {
    v.iter().map(|&x| q(x)).collect()
}

fn to_int(v: &[Q]) -> Vec<i64> {
    v.iter().map(|x| to_i64(x).expect("integral weight")).collect()
}

fn reflect(l: &LieAlgebra, w: &[i64], a: &RootVec) -> Vec<i64> {
    let rs = l.roots();
    let p = to_i64(&rs.pair_coroot(&to_q(w), a)).expect("integral pairing");
    w.iter().zip(rs.to_fundamental(a)).map(|(x, y)| x - p * y).collect()
}

/// `W_m`-conjugate of `w` that is dominant for `b_m`.
fn dominant_conjugate(l: &LieAlgebra, pd: &ParabolicData, w: &[i64]) -> Vec<i64> {
    let mut cur = w.to_vec();
    loop {
        let neg = pd.levi_simple.iter().find(|a| l.roots().pair_coroot(&to_q(&cur), a).is_negative());
        match neg {
            Some(a) => cur = reflect(l, &cur, a),
            None => return cur,
        }
    }
}

/// `λ − μ` as a nonnegative integral combination of the simple roots of `m`.
fn m_depth(l: &LieAlgebra, pd: &ParabolicData, lambda: &[i64], mu: &[i64]) -> Option<i64> {
    let rs = l.roots();
    let diff = rs.fundamental_to_root(&sub_vec(&to_q(lambda), &to_q(mu)));
    if diff.iter().all(Zero::is_zero) {
        return Some(0);
    }
    let rows: Vec<Vec<Q>> = pd.levi_simple.iter().map(|r| to_q(r)).collect();
    let c = solve_in_span(&rows, &diff)?;
    if c.iter().all(|x| x.is_integer() && !x.is_negative()) {
        Some(c.iter().map(|x| to_i64(x).expect("integer")).sum())
    } else {
        None
    }
}

/// Weight multiplicities of the simple `m`-module of highest weight `lambda`.
pub fn levi_character(l: &LieAlgebra, pd: &ParabolicData, lambda: &[i64]) -> Result<WeightDims> {
    if !is_m_dominant(l, pd, &to_q(lambda)) {
        return Err(Error::NotAnMCharacter(format!("{lambda:?} is not m-dominant")));
    }
    let rs = l.roots();
    let rho = rho_m(l, pd);
    let positive: Vec<(Vec<i64>, Vec<Q>)> =
        pd.levi_positive.iter().map(|a| (rs.to_fundamental(a), to_q(&rs.to_fundamental(a)))).collect();
    let norm = |v: &[Q]| rs.weight_inner(v, v);
    let top = norm(&add_vec(&to_q(lambda), &rho));
    let simple_fund: Vec<Vec<i64>> = pd.levi_simple.iter().map(|a| rs.to_fundamental(a)).collect();

    let mut mult: WeightDims = BTreeMap::new();
    mult.insert(lambda.to_vec(), 1);
    let mut level = vec![lambda.to_vec()];
    while !level.is_empty() {
        let mut cands: Vec<Vec<i64>> = Vec::new();
        for w in &level {
            for s in &simple_fund {
                let c: Vec<i64> = w.iter().zip(s).map(|(x, y)| x - y).collect();
                if !cands.contains(&c) {
                    cands.push(c);
                }
            }
        }
        cands.sort();
        let mut next = Vec::new();
        for mu in cands {
            let dom = dominant_conjugate(l, pd, &mu);
            if m_depth(l, pd, lambda, &dom).is_none() {
                continue;
            }
            let muq = to_q(&mu);
            let mut sum = Q::zero();
            for (af, aq) in &positive {
                let mut k = 1;
                loop {
                    let up: Vec<i64> = mu.iter().zip(af).map(|(x, y)| x + k * y).collect();
                    let Some(&m) = mult.get(&up) else { break };
                    sum += q(m as i64) * rs.weight_inner(&to_q(&up), aq);
                    k += 1;
                }
            }
            let den = &top - norm(&add_vec(&muq, &rho));
            if !den.is_positive() {
                return Err(Error::InvariantViolation("Freudenthal denominator positive".into()));
            }
            let m = q(2) * sum / den;
            if !m.is_integer() || m.is_negative() {
                return Err(Error::InvariantViolation("Freudenthal multiplicity integral".into()));
            }
            let m = to_i64(&m).expect("integer") as usize;
            if m > 0 {
                mult.insert(mu.clone(), m);
                next.push(mu);
            }
        }
        level = next;
    }
    Ok(mult)
}

/// Splits an `m`-character into simple constituents, peeling off the
/// constituent whose highest weight maximizes the `m`-height.
pub fn decompose_as_m_module(l: &LieAlgebra, pd: &ParabolicData, weight_dims: &WeightDims) -> Result<Vec<(Weight, usize)>> {
    for (w, m) in weight_dims {
        for a in &pd.levi_simple {
            if weight_dims.get(&reflect(l, w, a)).copied().unwrap_or(0) != *m {
                return Err(Error::NotAnMCharacter(format!("not W_m-invariant at {w:?}")));
            }
        }
    }
    let rs = l.roots();
    let height = |w: &[i64]| -> Q {
        // pairing with 2ρ_m^∨ up to a positive factor: Σ over positive m-roots
        pd.levi_positive.iter().fold(Q::zero(), |acc, a| acc + rs.pair_coroot(&to_q(w), a))
    };
    let mut rest: BTreeMap<Vec<i64>, i64> = weight_dims.iter().map(|(w, &m)| (w.clone(), m as i64)).collect();
    let mut out: Vec<(Weight, usize)> = Vec::new();
    while let Some(top) = rest
        .iter()
        .filter(|(_, &m)| m > 0)
        .map(|(w, _)| w.clone())
        .max_by(|a, b| height(a).cmp(&height(b)).then_with(|| b.cmp(a)))
    {
        let m = rest[&top];
        for (w, c) in levi_character(l, pd, &top)? {
            let e = rest.entry(w).or_insert(0);
            *e -= m * c as i64;
            if *e < 0 {
                return Err(Error::NotAnMCharacter("peeling went negative".into()));
            }
        }
        rest.retain(|_, v| *v != 0);
        out.push((Weight::new(WeightContext::HStd, to_q(&top)), m as usize));
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

/// Sum of characters of the listed constituents.
pub fn character_of(l: &LieAlgebra, pd: &ParabolicData, parts: &[(Weight, usize)]) -> Result<WeightDims> {
    let mut out = WeightDims::new();
    for (w, m) in parts {
        for (mu, c) in levi_character(l, pd, &to_int(&w.coords))? {
            *out.entry(mu).or_insert(0) += c * m;
        }
    }
    Ok(out)
}

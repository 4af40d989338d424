//! JSON shape of an emitted certificate. Every rational is a `"p/q"` string.

use serde::{Deserialize, Serialize};

use super::input::Settings;
use crate::error::{Error, Result};
use crate::lie::{Weight, WeightContext, WeightMultiset};
use crate::rational::{fmt_vec, parse_q, parse_vec, Q};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightJson {
    pub context: String,
    pub coords: Vec<String>,
}

impl From<&Weight> for WeightJson {
    fn from(w: &Weight) -> Self {
        Self { context: w.context.tag().to_string(), coords: fmt_vec(&w.coords) }
    }
}

impl WeightJson {
    pub fn weight(&self) -> Result<Weight> {
        let context = match self.context.as_str() {
            "t" => WeightContext::T,
            "h_std" => WeightContext::HStd,
            c => return Err(Error::ContextMismatch(format!("unknown weight context {c:?}"))),
        };
        Ok(Weight::new(context, parse_vec(&self.coords)?))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightMult {
    pub weight: WeightJson,
    pub multiplicity: usize,
}

pub fn multiset_json(s: &WeightMultiset) -> Vec<WeightMult> {
    s.iter().map(|(w, m)| WeightMult { weight: w.into(), multiplicity: m }).collect()
}

pub fn multiset_from_json(v: &[WeightMult]) -> Result<WeightMultiset> {
    let mut s = WeightMultiset::new();
    for e in v {
        s.insert(e.weight.weight()?, e.multiplicity);
    }
    Ok(s)
}

pub fn parse_matrix(m: &[Vec<String>]) -> Result<Vec<Vec<Q>>> {
    m.iter().map(|r| parse_vec(r)).collect()
}

pub fn fmt_matrix(m: &[Vec<Q>]) -> Vec<Vec<String>> {
    m.iter().map(|r| fmt_vec(r)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Verdict {
    IdealNoModule,
    ExistsWitness,
    Inconclusive { reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealRecord {
    pub k_dim: usize,
    pub is_ideal: bool,
    /// Killing complement of `k`; an ideal of `g` whenever `k` is.
    pub complement_dim: usize,
    pub complement_is_ideal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductivityRecord {
    pub bracket_closed: bool,
    pub killing_nondegenerate_on_k: bool,
    pub toral_action_semisimple: bool,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionRecord {
    pub split_factors: Vec<usize>,
    pub kept_factors: Vec<usize>,
    pub reduced_algebra: String,
    pub k_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumEntry {
    pub eigenvalue: String,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootValue {
    pub root: WeightJson,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dims {
    pub g: usize,
    pub k: usize,
    pub t: usize,
    pub m: usize,
    pub n: usize,
    pub nbar: usize,
    pub k_perp: usize,
    pub n_cap_k: usize,
    pub n_cap_kperp: usize,
    pub m_cap_kperp: usize,
    pub nbar_cap_kperp: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenericityRecord {
    pub integral: bool,
    pub dominant: bool,
    pub cond1_holds: bool,
    pub cond1_violations: Vec<WeightJson>,
    pub cond2_holds: bool,
    pub cond2_witness: Option<Vec<WeightMult>>,
    pub enumerated_count: u128,
    pub evaluated: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummandRecord {
    pub word: Vec<usize>,
    pub gamma: WeightJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KostantRecord {
    pub degree: usize,
    pub summands: Vec<SummandRecord>,
    pub total_dim: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleRecord {
    pub degree: usize,
    pub module_dim: usize,
    pub n_dim: usize,
    pub match_with_kostant: bool,
    pub euler_identity: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// Coordinates are in the reduced algebra after splitting off ideals.
    pub t_basis: Vec<Vec<String>>,
    pub h_t_coords: Vec<String>,
    pub h: Vec<String>,
    pub spectrum: Vec<SpectrumEntry>,
    pub k_root_values: Vec<RootValue>,
    pub borel_simple_roots: Vec<Vec<i64>>,
    pub levi_simple_roots: Vec<Vec<i64>>,
    pub dims: Dims,
    pub r: usize,
    pub s: usize,
    pub rho: WeightJson,
    pub rho_n: WeightJson,
    pub rho_n_perp: WeightJson,
    pub mu_shift: WeightJson,
    pub weights_n: Vec<WeightMult>,
    pub weights_n_cap_k: Vec<WeightMult>,
    pub weights_n_cap_kperp: Vec<WeightMult>,
    pub form_on_t_star: Vec<Vec<String>>,
    pub nu: WeightJson,
    /// `ν` as `scale · ν₀`, `ν₀` in fundamental weights of `b`.
    pub nu_b_labels: Vec<u32>,
    pub nu_scale: u32,
    pub mu: WeightJson,
    pub genericity: GenericityRecord,
    pub kostant: KostantRecord,
    pub vanishing: bool,
    pub oracle: Option<OracleRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub tool_version: String,
    pub input_hash: String,
    pub algebra: String,
    pub settings: Settings,
    pub verdict: Verdict,
    pub ideal: IdealRecord,
    pub reductivity: ReductivityRecord,
    pub reduction: Option<ReductionRecord>,
    pub witness: Option<Witness>,
}

impl Certificate {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("certificate serializes");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::InputInvalid(format!("certificate: {e}")))
    }
}

pub fn spectrum_json(s: &std::collections::BTreeMap<Q, usize>) -> Vec<SpectrumEntry> {
    s.iter().map(|(v, m)| SpectrumEntry { eigenvalue: crate::rational::fmt_q(v), multiplicity: *m }).collect()
}

pub fn parse_rational(s: &str) -> Result<Q> {
    parse_q(s)
}

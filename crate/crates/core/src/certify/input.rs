use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::genericity::{DEFAULT_COND2_CAP, DEFAULT_MAX_COEFF, DEFAULT_MAX_SCALE};
use crate::lie::{CartanType, Element, LieAlgebra};
use crate::oracle::{DEFAULT_DIM_CAP, DEFAULT_N_CAP};
use crate::rational::{fmt_q, parse_q, Q};

pub const DEFAULT_SEED: u64 = 0;
pub const DEFAULT_MAX_HEIGHT: u32 = 8;

/// A rational in an input file: `"p/q"`, `"p"`, or a bare JSON integer.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RatInput {
    Str(String),
    Int(i64),
}

impl RatInput {
    pub fn value(&self) -> Result<Q> {
        match self {
            RatInput::Str(s) => parse_q(s),
            RatInput::Int(i) => Ok(crate::rational::q(*i)),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SearchInput {
    pub max_coeff: Option<u32>,
    pub max_scale: Option<u32>,
    pub seed: Option<u64>,
    pub max_height: Option<u32>,
    pub cond2_cap: Option<u32>,
    pub dim_cap: Option<usize>,
    pub n_cap: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Certify,
    Kostant,
    OracleCompare,
    CheckIdeal,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemInput {
    pub algebra: String,
    pub subalgebra_generators: Vec<Vec<RatInput>>,
    pub cartan_t: Vec<Vec<RatInput>>,
    #[serde(default)]
    pub search: SearchInput,
    #[serde(default)]
    pub mode: Option<Mode>,
}

/// Search bounds with every default filled in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Settings {
    pub max_coeff: u32,
    pub max_scale: u32,
    pub seed: u64,
    pub max_height: u32,
    pub cond2_cap: u32,
    pub dim_cap: usize,
    pub n_cap: usize,
}

/// Parsed and validated input.
#[derive(Clone, Debug)]
pub struct Problem {
    pub algebra: LieAlgebra,
    pub generators: Vec<Element>,
    pub cartan_t: Vec<Element>,
    pub settings: Settings,
    pub input_hash: String,
}

fn parse_vectors(vs: &[Vec<RatInput>], dim: usize, rank: usize, cartan_only: bool) -> Result<Vec<Element>> {
    vs.iter()
        .map(|v| {
            if v.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, got: v.len() });
            }
            let coords = v.iter().map(RatInput::value).collect::<Result<Vec<Q>>>()?;
            if cartan_only && coords[rank..].iter().any(|x| *x != Q::from_integer(0.into())) {
                return Err(Error::TNotInCartan);
            }
            Ok(Element::new(coords))
        })
        .collect()
}

impl ProblemInput {
    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::InputInvalid(e.to_string()))
    }

    pub fn cartan_type(&self) -> Result<CartanType> {
        self.algebra.parse()
    }

    pub fn settings(&self) -> Settings {
        let s = &self.search;
        Settings {
            max_coeff: s.max_coeff.unwrap_or(DEFAULT_MAX_COEFF),
            max_scale: s.max_scale.unwrap_or(DEFAULT_MAX_SCALE),
            seed: s.seed.unwrap_or(DEFAULT_SEED),
            max_height: s.max_height.unwrap_or(DEFAULT_MAX_HEIGHT),
            cond2_cap: s.cond2_cap.unwrap_or(DEFAULT_COND2_CAP),
            dim_cap: s.dim_cap.unwrap_or(DEFAULT_DIM_CAP),
            n_cap: s.n_cap.unwrap_or(DEFAULT_N_CAP),
        }
    }

    pub fn problem(&self) -> Result<Problem> {
        let ty = self.cartan_type()?;
        let algebra = LieAlgebra::new(&ty);
        let (dim, rank) = (algebra.dim(), algebra.rank());
        let generators = parse_vectors(&self.subalgebra_generators, dim, rank, false)?;
        let cartan_t = parse_vectors(&self.cartan_t, dim, rank, true)?;
        let input_hash = self.input_hash()?;
        Ok(Problem { algebra, generators, cartan_t, settings: self.settings(), input_hash })
    }

    /// SHA-256 over the canonical form of the mathematical content: the
    /// normalized type name and every vector as reduced `p/q` strings.
    /// Search settings are excluded so a seed override keeps the digest.
    pub fn input_hash(&self) -> Result<String> {
        let canon = |vs: &[Vec<RatInput>]| -> Result<Vec<Vec<String>>> {
            vs.iter().map(|v| v.iter().map(|x| x.value().map(|q| fmt_q(&q))).collect()).collect()
        };
        let value = serde_json::json!({
            "algebra": self.cartan_type()?.to_string(),
            "subalgebra_generators": canon(&self.subalgebra_generators)?,
            "cartan_t": canon(&self.cartan_t)?,
        });
        let bytes = serde_json::to_vec(&value).map_err(|e| Error::InputInvalid(e.to_string()))?;
        Ok(hex::encode(Sha256::digest(&bytes)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const A1: &str = r#"{"algebra": "A1", "subalgebra_generators": [["1","0","0"]], "cartan_t": [["1","0","0"]]}"#;

    #[test]
    fn parses_and_hashes() {
        let p = ProblemInput::from_json(A1).unwrap();
        let prob = p.problem().unwrap();
        assert_eq!(prob.algebra.dim(), 3);
        assert_eq!(prob.settings.max_coeff, 5);
        assert_eq!(prob.input_hash.len(), 64);
        // equivalent spellings hash alike
        let q = ProblemInput::from_json(
            r#"{"algebra": "A1", "subalgebra_generators": [["2/2", 0, "0/5"]], "cartan_t": [[1, "0", "0"]], "search": {"seed": 9}}"#,
        )
        .unwrap();
        assert_eq!(p.input_hash().unwrap(), q.input_hash().unwrap());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            ProblemInput::from_json(r#"{"algebra": "A1", "subalgebra_generators": [], "cartan_t": [], "extra": 1}"#),
            Err(Error::InputInvalid(_))
        ));
        let p = ProblemInput::from_json(r#"{"algebra": "A1", "subalgebra_generators": [["1","0"]], "cartan_t": []}"#).unwrap();
        assert!(matches!(p.problem(), Err(Error::DimensionMismatch { .. })));
        let p = ProblemInput::from_json(r#"{"algebra": "A1", "subalgebra_generators": [], "cartan_t": [["0","1","0"]]}"#).unwrap();
        assert!(matches!(p.problem(), Err(Error::TNotInCartan)));
        let p = ProblemInput::from_json(r#"{"algebra": "Z3", "subalgebra_generators": [], "cartan_t": []}"#).unwrap();
        assert!(matches!(p.problem(), Err(Error::InvalidCartanType(_))));
        let p = ProblemInput::from_json(r#"{"algebra": "A1", "subalgebra_generators": [["1/0","0","0"]], "cartan_t": []}"#).unwrap();
        assert!(p.problem().is_err());
    }
}

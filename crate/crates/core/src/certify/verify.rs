//! Independent check of a certificate against its input. Nothing is searched:
//! the recorded `h` and `ν` are taken as given and everything downstream of
//! them is recomputed and compared.

use serde_json::Value;

use super::certificate::{Certificate, OracleRecord, Verdict, Witness};
use super::input::{ProblemInput, Settings};
use super::{embed, ideal_record, reductivity_record, witness_record, Transcript};
use crate::embedding::{regular_element_at, split_off_contained_ideals};
use crate::error::{Error, Result};
use crate::genericity::{from_b_fundamental, genericity_report, induced_form_on_tstar, mu_from_nu, GenericWitness};
use crate::kostant::{kostant_cohomology, verify_vanishing};
use crate::lie::WeightContext;
use crate::oracle::compare_with_caps;
use crate::parabolic::{build_parabolic, rho_vectors};
use crate::rational::{parse_vec, q, scale_vec};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verification {
    pub accepted: bool,
    pub failures: Vec<String>,
}

fn diff_fields(label: &str, claimed: &impl serde::Serialize, actual: &impl serde::Serialize, out: &mut Vec<String>) {
    let a = serde_json::to_value(claimed).expect("serializes");
    let b = serde_json::to_value(actual).expect("serializes");
    match (&a, &b) {
        (Value::Object(x), Value::Object(y)) => {
            for (k, v) in y {
                if x.get(k) != Some(v) {
                    out.push(format!("{label}.{k}: recorded {} recomputed {v}", x.get(k).unwrap_or(&Value::Null)));
                }
            }
            for k in x.keys().filter(|k| !y.contains_key(*k)) {
                out.push(format!("{label}.{k}: unexpected field"));
            }
        }
        _ if a != b => out.push(format!("{label}: recorded {a} recomputed {b}")),
        _ => {}
    }
}

fn check_witness(input: &ProblemInput, w: &Witness, settings: Settings, out: &mut Vec<String>) -> Result<()> {
    let problem = input.problem()?;
    let emb = embed(&problem)?;
    let reduction = split_off_contained_ideals(&problem.algebra, &emb.k)?;
    let embedding = reduction.reduce_embedding(&emb)?;
    let g = &reduction.algebra.clone();
    let t_coords = parse_vec(&w.h_t_coords)?;
    if t_coords.len() != embedding.t_dim() {
        out.push("h_t_coords: wrong length".into());
        return Ok(());
    }
    let Some(h) = regular_element_at(g, &embedding, &t_coords)? else {
        out.push("h: recorded element is not regular".into());
        return Ok(());
    };
    let parabolic = build_parabolic(g, &embedding, &h)?;
    let rho = rho_vectors(g, &embedding, &parabolic)?;
    let tr = Transcript { reduction, embedding, parabolic, rho };
    let (emb, pd, rv) = (&tr.embedding, &tr.parabolic, &tr.rho);

    let nu = w.nu.weight()?;
    if nu.context != WeightContext::HStd || nu.dim() != g.rank() {
        out.push("nu: wrong context or length".into());
        return Ok(());
    }
    if w.nu_b_labels.len() != g.rank() {
        out.push("nu_b_labels: wrong length".into());
        return Ok(());
    }
    let labels: Vec<_> = w.nu_b_labels.iter().map(|&c| q(c as i64)).collect();
    let from_labels = scale_vec(&q(w.nu_scale as i64), &from_b_fundamental(g, pd, &labels)?);
    if from_labels != nu.coords {
        out.push("nu: does not equal scale times the recorded b-labels".into());
    }
    if !pd.borel.is_dominant_integral(g.roots(), &nu.coords) {
        out.push("nu: not b-dominant integral".into());
        return Ok(());
    }

    let mu = mu_from_nu(g, emb, &nu, rv)?;
    let recorded_mu = w.mu.weight()?;
    if recorded_mu.context != WeightContext::T || recorded_mu.dim() != emb.t_dim() {
        out.push("mu: wrong context or length".into());
        return Ok(());
    }
    // the inequalities are checked on the recorded μ; its derivation from ν separately
    let form = induced_form_on_tstar(g, emb)?;
    let report = genericity_report(g, emb, pd, rv, &recorded_mu, &form, settings.cond2_cap)?;
    if !report.integral {
        out.push("mu: not integral".into());
    }
    if !report.dominant {
        out.push("mu: not dominant".into());
    }
    if !report.cond1.holds {
        out.push(format!("condition 1 fails at {:?}", report.cond1.violations));
    }
    if let Some(bad) = &report.cond2.witness {
        let bad: Vec<String> = bad.iter().map(|(x, m)| format!("{m}x{:?}", crate::rational::fmt_vec(&x.coords))).collect();
        out.push(format!("condition 2 fails on submultiset [{}]", bad.join(", ")));
    }

    let r = pd.r;
    let kostant = kostant_cohomology(g, pd, &nu, r)?;
    let vanishing = verify_vanishing(g, pd, &nu, r)?;
    if !vanishing {
        out.push("Hom_m(E(mu_tilde), H^r(n, W)) does not vanish".into());
    }
    let oracle = match &w.oracle {
        None => None,
        Some(o) => {
            let rep = compare_with_caps(g, pd, &nu, &[o.degree], settings.dim_cap, settings.n_cap)?;
            if !rep.match_with_kostant {
                out.push("oracle disagrees with Kostant".into());
            }
            Some(OracleRecord {
                degree: o.degree,
                module_dim: rep.module_dim,
                n_dim: rep.n_dim,
                match_with_kostant: rep.match_with_kostant,
                euler_identity: rep.euler_identity,
            })
        }
    };
    let gw = GenericWitness { nu, nu0_b: w.nu_b_labels.clone(), scale: w.nu_scale, mu, report };
    let fresh = witness_record(g, &tr, &gw, &kostant, vanishing, oracle)?;
    diff_fields("witness", w, &fresh, out);
    Ok(())
}

/// Checks `cert` against `input`. A digest mismatch is an error; every
/// other discrepancy is collected into the returned failures.
pub fn verify_certificate(cert: &Certificate, input: &ProblemInput) -> Result<Verification> {
    if cert.input_hash != input.input_hash()? {
        return Err(Error::HashMismatch);
    }
    let mut input = input.clone();
    let s = cert.settings;
    input.search = super::input::SearchInput {
        max_coeff: Some(s.max_coeff),
        max_scale: Some(s.max_scale),
        seed: Some(s.seed),
        max_height: Some(s.max_height),
        cond2_cap: Some(s.cond2_cap),
        dim_cap: Some(s.dim_cap),
        n_cap: Some(s.n_cap),
    };
    let problem = input.problem()?;
    let emb = embed(&problem)?;
    let mut out = Vec::new();
    let ideal = ideal_record(&problem.algebra, &emb)?;
    diff_fields("ideal", &cert.ideal, &ideal, &mut out);
    diff_fields("reductivity", &cert.reductivity, &reductivity_record(&emb), &mut out);
    if cert.algebra != problem.algebra.cartan_type().to_string() {
        out.push("algebra: does not match input".into());
    }
    match &cert.verdict {
        Verdict::IdealNoModule => {
            if !ideal.is_ideal {
                out.push("verdict: k is not an ideal".into());
            }
            if cert.witness.is_some() {
                out.push("verdict: ideal verdict carries a witness".into());
            }
        }
        Verdict::ExistsWitness => {
            if ideal.is_ideal {
                out.push("verdict: k is an ideal".into());
            }
            match &cert.witness {
                None => out.push("verdict: missing witness".into()),
                Some(w) => {
                    let red = split_off_contained_ideals(&problem.algebra, &emb.k)?;
                    let fresh = super::certificate::ReductionRecord {
                        split_factors: red.split_factors.clone(),
                        kept_factors: red.kept_factors.clone(),
                        reduced_algebra: red.algebra.cartan_type().to_string(),
                        k_dim: red.reduce_embedding(&emb)?.k.dim(),
                    };
                    diff_fields("reduction", &cert.reduction, &Some(fresh), &mut out);
                    check_witness(&input, w, s, &mut out)?;
                }
            }
        }
        Verdict::Inconclusive { .. } => {
            // only a rerun under the recorded bounds can confirm exhaustion
            let again = super::certify(&input, false)?;
            if again.verdict != cert.verdict {
                out.push(format!("verdict: rerun gives {:?}", again.verdict));
            }
            if cert.witness.is_some() {
                out.push("verdict: inconclusive verdict carries a witness".into());
            }
        }
    }
    Ok(Verification { accepted: out.is_empty(), failures: out })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certify::certify;
    use crate::certify::tests::input;

    fn principal() -> ProblemInput {
        input("A2", &[&[0, 0, 1, 1, 0, 0, 0, 0], &[0, 0, 0, 0, 0, 2, 2, 0]], &[&[2, 2, 0, 0, 0, 0, 0, 0]])
    }

    #[test]
    fn tampering_is_caught() {
        let i = principal();
        let c = certify(&i, false).unwrap();
        assert!(verify_certificate(&c, &i).unwrap().accepted);

        let mut bad = c.clone();
        bad.witness.as_mut().unwrap().mu.coords[0] = "-10/1".into();
        let v = verify_certificate(&bad, &i).unwrap();
        assert!(v.failures.iter().any(|f| f.starts_with("condition 2 fails on submultiset")), "{:?}", v.failures);

        let mut bad = c.clone();
        bad.witness.as_mut().unwrap().r = 3;
        assert!(!verify_certificate(&bad, &i).unwrap().accepted);

        let mut bad = c.clone();
        bad.verdict = Verdict::IdealNoModule;
        assert!(!verify_certificate(&bad, &i).unwrap().accepted);

        let mut bad = c.clone();
        bad.input_hash = "0".repeat(64);
        assert_eq!(verify_certificate(&bad, &i).unwrap_err(), Error::HashMismatch);

        let mut bad = c.clone();
        let w = bad.witness.as_mut().unwrap();
        w.nu_b_labels = vec![1, 0];
        let v = verify_certificate(&bad, &i).unwrap();
        assert!(v.failures.iter().any(|f| f.contains("b-labels")), "{:?}", v.failures);

        let mut bad = c.clone();
        bad.witness.as_mut().unwrap().h_t_coords = vec!["0/1".into()];
        let v = verify_certificate(&bad, &i).unwrap();
        assert_eq!(v.failures, vec!["h: recorded element is not regular".to_string()]);
    }

    #[test]
    fn ideal_verdict_round_trip() {
        let i = input("A1xA1", &[&[1, 0, 0, 0, 0, 0], &[0, 0, 1, 0, 0, 0], &[0, 0, 0, 0, 1, 0]], &[&[1, 0, 0, 0, 0, 0]]);
        let c = certify(&i, false).unwrap();
        let back = Certificate::from_json(&c.to_json()).unwrap();
        assert_eq!(back, c);
        assert!(verify_certificate(&back, &i).unwrap().accepted);
    }
}

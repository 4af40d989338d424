//! End-to-end decision procedure and its certificate.

pub mod certificate;
pub mod input;
pub mod verify;

pub use certificate::{Certificate, Verdict, Witness};
pub use input::{Mode, Problem, ProblemInput, Settings};
pub use verify::{verify_certificate, Verification};

use crate::embedding::{
    choose_regular, is_ideal, killing_perp, split_off_contained_ideals, EmbeddedSubalgebra, Reduction,
};
use crate::error::{Error, Result};
use crate::genericity::{find_generic_nu, from_b_fundamental, induced_form_on_tstar, GenericWitness, SearchBounds};
use crate::kostant::{kostant_cohomology, verify_vanishing, CohomologyDecomposition};
use crate::lie::{LieAlgebra, Weight, WeightContext};
use crate::oracle::compare_with_caps;
use crate::parabolic::{build_parabolic, rho_vectors, ParabolicData, RhoVectors};
use crate::rational::{fmt_q, fmt_vec};
use certificate::*;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Everything the non-ideal branch computes, kept in memory for callers that
/// need more than the certificate.
#[derive(Clone, Debug)]
pub struct Transcript {
    pub reduction: Reduction,
    pub embedding: EmbeddedSubalgebra,
    pub parabolic: ParabolicData,
    pub rho: RhoVectors,
}

pub(crate) fn ideal_record(l: &LieAlgebra, emb: &EmbeddedSubalgebra) -> Result<IdealRecord> {
    let ideal = is_ideal(l, &emb.k);
    let perp = killing_perp(l, &emb.k).map_err(Error::at("killing_perp"))?;
    Ok(IdealRecord {
        k_dim: emb.k.dim(),
        is_ideal: ideal,
        complement_dim: perp.dim(),
        complement_is_ideal: is_ideal(l, &perp),
    })
}

pub(crate) fn reductivity_record(emb: &EmbeddedSubalgebra) -> ReductivityRecord {
    let c = &emb.checks;
    ReductivityRecord {
        bracket_closed: c.bracket_closed,
        killing_nondegenerate_on_k: c.killing_nondegenerate_on_k,
        toral_action_semisimple: c.toral_action_semisimple,
        passed: c.passed,
    }
}

/// Builds `k`, runs the reductivity battery and fails on a non-reductive `k`.
pub fn embed(problem: &Problem) -> Result<EmbeddedSubalgebra> {
    let emb = EmbeddedSubalgebra::new(&problem.algebra, problem.generators.clone(), problem.cartan_t.clone())
        .map_err(Error::at("close_generators"))?;
    if !emb.checks.passed {
        return Err(Error::Stage {
            stage: "verify_reductive",
            source: Box::new(Error::NotReductive(format!("{:?}", emb.checks))),
        });
    }
    Ok(emb)
}

/// Reduction, regular element, parabolic and `ρ`-vectors: every step up to
/// the weight search.
pub fn prepare(problem: &Problem, emb: &EmbeddedSubalgebra) -> Result<Transcript> {
    let l = &problem.algebra;
    let reduction = split_off_contained_ideals(l, &emb.k).map_err(Error::at("split_off_contained_ideals"))?;
    let embedding = reduction.reduce_embedding(emb).map_err(Error::at("split_off_contained_ideals"))?;
    let g = &reduction.algebra;
    let h = choose_regular(g, &embedding, problem.settings.seed, problem.settings.max_height)
        .map_err(Error::at("choose_regular"))?;
    let parabolic = build_parabolic(g, &embedding, &h).map_err(Error::at("build_parabolic"))?;
    if parabolic.r == 0 {
        return Err(Error::Stage { stage: "build_parabolic", source: Box::new(Error::InvariantViolation("r > 0".into())) });
    }
    let rho = rho_vectors(g, &embedding, &parabolic).map_err(Error::at("rho_vectors"))?;
    Ok(Transcript { reduction, embedding, parabolic, rho })
}

/// Embedding and parabolic for a non-ideal `k`, with the regular element
/// chosen under the input's search settings.
pub fn transcript(input: &ProblemInput) -> Result<Transcript> {
    let problem = input.problem()?;
    let emb = embed(&problem)?;
    if is_ideal(&problem.algebra, &emb.k) {
        return Err(Error::InputInvalid("k is an ideal of g; there is no parabolic to build".into()));
    }
    prepare(&problem, &emb)
}

impl Transcript {
    /// `ν` from its labels on the simple coroots of `b`.
    pub fn nu_from_labels(&self, labels: &[i64]) -> Result<Weight> {
        let g = &self.reduction.algebra;
        if labels.len() != g.rank() {
            return Err(Error::DimensionMismatch { expected: g.rank(), got: labels.len() });
        }
        if let Some(bad) = labels.iter().find(|&&c| c < 0) {
            return Err(Error::NonDominant(format!("label {bad} < 0")));
        }
        let c: Vec<_> = labels.iter().map(|&x| crate::rational::q(x)).collect();
        Ok(Weight::new(WeightContext::HStd, from_b_fundamental(g, &self.parabolic, &c)?))
    }
}

fn kostant_record(d: &CohomologyDecomposition) -> KostantRecord {
    KostantRecord {
        degree: d.degree,
        summands: d.summands.iter().map(|s| SummandRecord { word: s.w.word.clone(), gamma: (&s.gamma).into() }).collect(),
        total_dim: d.total_dim.to_string(),
    }
}

pub(crate) fn witness_record(
    g: &LieAlgebra,
    tr: &Transcript,
    gw: &GenericWitness,
    kostant: &CohomologyDecomposition,
    vanishing: bool,
    oracle: Option<OracleRecord>,
) -> Result<Witness> {
    let (emb, pd, rv) = (&tr.embedding, &tr.parabolic, &tr.rho);
    let form = induced_form_on_tstar(g, emb)?;
    let rep = &gw.report;
    Ok(Witness {
        t_basis: emb.t_basis.iter().map(|x| fmt_vec(&x.coords)).collect(),
        h_t_coords: fmt_vec(&pd.h.t_coords),
        h: fmt_vec(&pd.h.h.coords),
        spectrum: spectrum_json(&pd.h.g_spectrum),
        k_root_values: pd.h.k_root_values.iter().map(|(w, v)| RootValue { root: w.into(), value: fmt_q(v) }).collect(),
        borel_simple_roots: pd.borel.simple().to_vec(),
        levi_simple_roots: pd.levi_simple.clone(),
        dims: Dims {
            g: g.dim(),
            k: emb.k.dim(),
            t: emb.t_dim(),
            m: pd.m.dim(),
            n: pd.n.dim(),
            nbar: pd.nbar.dim(),
            k_perp: pd.kperp.dim(),
            n_cap_k: pd.n_cap_k.dim(),
            n_cap_kperp: pd.n_cap_kperp.dim(),
            m_cap_kperp: pd.m_cap_kperp.dim(),
            nbar_cap_kperp: pd.nbar_cap_kperp.dim(),
        },
        r: pd.r,
        s: pd.s,
        rho: (&rv.rho).into(),
        rho_n: (&rv.rho_n).into(),
        rho_n_perp: (&rv.rho_n_perp).into(),
        mu_shift: (&rv.mu_shift).into(),
        weights_n: multiset_json(&rv.weights_n),
        weights_n_cap_k: multiset_json(&rv.weights_n_cap_k),
        weights_n_cap_kperp: multiset_json(&rv.weights_n_cap_kperp),
        form_on_t_star: fmt_matrix(&form.gram),
        nu: (&gw.nu).into(),
        nu_b_labels: gw.nu0_b.clone(),
        nu_scale: gw.scale,
        mu: (&gw.mu).into(),
        genericity: GenericityRecord {
            integral: rep.integral,
            dominant: rep.dominant,
            cond1_holds: rep.cond1.holds,
            cond1_violations: rep.cond1.violations.iter().map(Into::into).collect(),
            cond2_holds: rep.cond2.holds,
            cond2_witness: rep.cond2.witness.as_ref().map(|w| {
                w.iter().map(|(x, m)| WeightMult { weight: x.into(), multiplicity: *m }).collect()
            }),
            enumerated_count: rep.cond2.enumerated_count,
            evaluated: rep.cond2.evaluated,
        },
        kostant: kostant_record(kostant),
        vanishing,
        oracle,
    })
}

/// Runs the decision procedure. Search exhaustion gives an `Inconclusive`
/// verdict, never a negative one.
pub fn certify(input: &ProblemInput, oracle_check: bool) -> Result<Certificate> {
    let problem = input.problem()?;
    let l = &problem.algebra;
    let emb = embed(&problem)?;
    let ideal = ideal_record(l, &emb).map_err(Error::at("is_ideal"))?;
    let mut cert = Certificate {
        tool_version: TOOL_VERSION.to_string(),
        input_hash: problem.input_hash.clone(),
        algebra: l.cartan_type().to_string(),
        settings: problem.settings,
        verdict: Verdict::IdealNoModule,
        ideal: ideal.clone(),
        reductivity: reductivity_record(&emb),
        reduction: None,
        witness: None,
    };
    if ideal.is_ideal {
        return Ok(cert);
    }
    let tr = match prepare(&problem, &emb) {
        Ok(tr) => tr,
        Err(e) if e.root() == &Error::NoRegularFound(problem.settings.max_height) => {
            cert.verdict = Verdict::Inconclusive { reason: "no regular element within the height bound".into() };
            return Ok(cert);
        }
        Err(e) => return Err(e),
    };
    let g = &tr.reduction.algebra;
    cert.reduction = Some(ReductionRecord {
        split_factors: tr.reduction.split_factors.clone(),
        kept_factors: tr.reduction.kept_factors.clone(),
        reduced_algebra: g.cartan_type().to_string(),
        k_dim: tr.embedding.k.dim(),
    });
    let s = problem.settings;
    let bounds = SearchBounds { max_coeff: s.max_coeff, max_scale: s.max_scale, cond2_cap: s.cond2_cap };
    let gw = match find_generic_nu(g, &tr.embedding, &tr.parabolic, &tr.rho, bounds) {
        Ok(gw) => gw,
        Err(Error::NotFound) => {
            cert.verdict = Verdict::Inconclusive { reason: "search bounds exhausted".into() };
            return Ok(cert);
        }
        Err(e) => return Err(Error::Stage { stage: "find_generic_nu", source: Box::new(e) }),
    };
    let r = tr.parabolic.r;
    let kostant = kostant_cohomology(g, &tr.parabolic, &gw.nu, r).map_err(Error::at("verify_vanishing"))?;
    let vanishing = verify_vanishing(g, &tr.parabolic, &gw.nu, r).map_err(Error::at("verify_vanishing"))?;
    if !vanishing {
        return Err(Error::Stage { stage: "verify_vanishing", source: Box::new(Error::InvariantViolation("Hom_m vanishing".into())) });
    }
    let oracle = if oracle_check {
        let rep = compare_with_caps(g, &tr.parabolic, &gw.nu, &[r], s.dim_cap, s.n_cap).map_err(Error::at("oracle"))?;
        Some(OracleRecord {
            degree: r,
            module_dim: rep.module_dim,
            n_dim: rep.n_dim,
            match_with_kostant: rep.match_with_kostant,
            euler_identity: rep.euler_identity,
        })
    } else {
        None
    };
    cert.witness = Some(witness_record(g, &tr, &gw, &kostant, vanishing, oracle)?);
    cert.verdict = Verdict::ExistsWitness;
    Ok(cert)
}

/// The ideal test alone.
pub fn check_ideal(input: &ProblemInput) -> Result<IdealRecord> {
    let problem = input.problem()?;
    let emb = embed(&problem)?;
    ideal_record(&problem.algebra, &emb).map_err(Error::at("is_ideal"))
}

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use ghc_core::certify::certificate::WeightJson;
use ghc_core::certify::{self, Certificate, ProblemInput};
use ghc_core::kostant::{kostant_cohomology, verify_vanishing};
use ghc_core::lie::CartanType;
use ghc_core::oracle::compare_kostant_vs_oracle;
use ghc_core::{Error, ErrorKind};

#[derive(Parser)]
#[command(name = "ghc", version, about = "Certificates for admissible (g, k)-modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full decision procedure and emit a certificate
    Certify {
        input: PathBuf,
        /// Write the certificate here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        /// Cross-check the Kostant step against brute-force cohomology
        #[arg(long)]
        oracle_check: bool,
        /// Overrides `search.seed` from the input
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Report whether k is an ideal of g
    CheckIdeal { input: PathBuf },
    /// Kostant decomposition of H^r(n, W) for the parabolic of a subalgebra
    Kostant {
        #[arg(long = "type")]
        ty: String,
        /// Labels of ν on the simple coroots of b, comma separated
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        nu: Vec<i64>,
        #[arg(long)]
        k_spec: PathBuf,
        /// Defaults to r = dim(n ∩ k^⊥)
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Compare Kostant's formula with brute-force n-cohomology
    OracleCompare {
        input: PathBuf,
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        nu: Vec<i64>,
        /// `a..b` (inclusive) or a comma separated list
        #[arg(long, default_value = "0")]
        degrees: String,
    },
    /// Recheck a certificate against its input; exits 1 on rejection
    Verify { report: PathBuf, input: PathBuf },
}

fn read(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::InputInvalid(format!("{}: {e}", path.display())))
}

fn load_input(path: &Path) -> Result<ProblemInput, Error> {
    ProblemInput::from_json(&read(path)?)
}

fn parse_degrees(s: &str) -> Result<Vec<usize>, Error> {
    let bad = || Error::InputInvalid(format!("degrees: {s:?}"));
    if let Some((a, b)) = s.split_once("..") {
        let a: usize = a.trim().parse().map_err(|_| bad())?;
        let b: usize = b.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
        if a > b {
            return Err(bad());
        }
        return Ok((a..=b).collect());
    }
    s.split(',').map(|x| x.trim().parse().map_err(|_| bad())).collect()
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json"));
}

fn summands_json(d: &ghc_core::kostant::CohomologyDecomposition) -> Value {
    let items: Vec<Value> = d
        .summands
        .iter()
        .map(|s| json!({"word": s.w.word, "gamma": WeightJson::from(&s.gamma)}))
        .collect();
    json!({"degree": d.degree, "summands": items, "total_dim": d.total_dim.to_string()})
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Certify { input, out, oracle_check, seed } => {
            let mut input = load_input(&input)?;
            if seed.is_some() {
                input.search.seed = seed;
            }
            let cert = certify::certify(&input, oracle_check)?;
            let text = cert.to_json();
            match out {
                Some(p) => fs::write(&p, text).map_err(|e| Error::InputInvalid(format!("{}: {e}", p.display())))?,
                None => print!("{text}"),
            }
            eprintln!("verdict: {:?}", cert.verdict);
        }
        Command::CheckIdeal { input } => {
            let rec = certify::check_ideal(&load_input(&input)?)?;
            print_json(&serde_json::to_value(rec).expect("json"));
        }
        Command::Kostant { ty, nu, k_spec, degree } => {
            let input = load_input(&k_spec)?;
            let ty: CartanType = ty.parse()?;
            if ty != input.cartan_type()? {
                return Err(Error::InputInvalid(format!("--type {ty} but the k-spec is in {}", input.algebra)));
            }
            let tr = certify::transcript(&input)?;
            let nu = tr.nu_from_labels(&nu)?;
            let g = &tr.reduction.algebra;
            let r = degree.unwrap_or(tr.parabolic.r);
            let d = kostant_cohomology(g, &tr.parabolic, &nu, r)?;
            let mut v = summands_json(&d);
            v["nu"] = serde_json::to_value(WeightJson::from(&nu)).expect("json");
            v["vanishing"] = json!(verify_vanishing(g, &tr.parabolic, &nu, r)?);
            print_json(&v);
        }
        Command::OracleCompare { input, nu, degrees } => {
            let input = load_input(&input)?;
            let tr = certify::transcript(&input)?;
            let nu = tr.nu_from_labels(&nu)?;
            let rep = compare_kostant_vs_oracle(&tr.reduction.algebra, &tr.parabolic, &nu, &parse_degrees(&degrees)?)?;
            let wl = |xs: &[(ghc_core::lie::Weight, usize)]| -> Vec<Value> {
                xs.iter().map(|(w, m)| json!({"weight": WeightJson::from(w), "multiplicity": m})).collect()
            };
            let degrees: Vec<Value> = rep
                .degrees
                .iter()
                .map(|d| {
                    json!({
                        "degree": d.degree,
                        "dim": d.total_dim(),
                        "oracle": wl(&d.oracle),
                        "kostant": wl(&d.kostant),
                        "matches": d.matches(),
                    })
                })
                .collect();
            print_json(&json!({
                "nu": WeightJson::from(&rep.nu),
                "module_dim": rep.module_dim,
                "n_dim": rep.n_dim,
                "euler_identity": rep.euler_identity,
                "match_with_kostant": rep.match_with_kostant,
                "degrees": degrees,
            }));
        }
        Command::Verify { report, input } => {
            let cert = Certificate::from_json(&read(&report)?)?;
            let v = certify::verify_certificate(&cert, &load_input(&input)?)?;
            if v.accepted {
                println!("ACCEPT");
            } else {
                println!("REJECT");
                for f in &v.failures {
                    println!("  {f}");
                }
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn exit_code(e: &Error) -> u8 {
    match e.kind() {
        ErrorKind::Input => 2,
        ErrorKind::Cap => 4,
        ErrorKind::Search | ErrorKind::Internal => 3,
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

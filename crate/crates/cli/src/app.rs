//! Argument definitions and the five commands.

use std::path::{Path, PathBuf};

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use gainsym::constructions::{
    hermitian_double, identity_block_double, is_fourth_root_of_unity, odd_anchor_double, sylvester_double,
};
use gainsym::cycles::{census_is_negation_symmetric, cycle_census_with_budget, CycleCensus, DEFAULT_CYCLE_BUDGET};
use gainsym::equivalence::{
    is_sign_symmetric_with, is_switching_isomorphic_with, EquivalenceOptions, NonEquivalence, SearchLimits,
    SwitchingWitness, DEFAULT_AUTOMORPHISM_MAX_N,
};
use gainsym::search::{distinct_solutions, AnnealConfig, SearchResult};
use gainsym::spectra::{char_poly, is_spectrally_symmetric, DEFAULT_CHAR_POLY_MAX_N};
use gainsym::{ComplexUnit, Error, GainGraph64, GainMatrix64, Turns};
use num_complex::Complex;
use serde_json::{json, Value};

use crate::document::{GainDocument, GraphDocument};
use crate::error::CliError;
use crate::fixtures::Fixture;
use crate::report::Report;

#[derive(Debug, Parser)]
#[command(name = "gainsym", version, about = "Spectral symmetry of complex unit gain graphs")]
pub struct Cli {
    /// Relative tolerance for symmetry and equality decisions.
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub tolerance: f64,
    /// Largest order accepted by automorphism searches.
    #[arg(long, global = true, default_value_t = DEFAULT_AUTOMORPHISM_MAX_N)]
    pub max_n: usize,
    /// Cycle enumeration budget.
    #[arg(long, global = true, default_value_t = DEFAULT_CYCLE_BUDGET)]
    pub budget: usize,
    /// Print a line-oriented rendering instead of JSON.
    #[arg(long, global = true)]
    pub human: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("source").required(true).args(["file", "fixture"])))]
pub struct Input {
    /// Graph document (JSON).
    pub file: Option<PathBuf>,
    /// Built-in graph: example2, gamma_s:<s>, fig3a or fig3b.
    #[arg(long)]
    pub fixture: Option<Fixture>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Hermitian,
    Identity,
    Odd,
    Sylvester,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Eigenvalues, characteristic polynomial and the symmetry verdict.
    Spectrum {
        #[command(flatten)]
        input: Input,
    },
    /// Sign-symmetry or switching isomorphism with a second graph.
    #[command(group(ArgGroup::new("mode").required(true).args(["sign_symmetric", "switching_iso"])))]
    Check {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        sign_symmetric: bool,
        #[arg(long, value_name = "FILE2")]
        switching_iso: Option<PathBuf>,
        /// Largest odd cycle order tried by the census obstruction.
        #[arg(long, default_value_t = 9)]
        census_k: usize,
    },
    /// Builds a doubled graph with a symmetric spectrum.
    Double {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Cross gain: "re,im", "p/q" or "turns:p/q" of a turn, or "0".
        #[arg(long)]
        z: Option<String>,
        /// Shared vertex for the odd-anchor double.
        #[arg(long)]
        anchor: Option<usize>,
        /// Off-diagonal block for the Hermitian double: "identity", "zero",
        /// or a JSON file holding rows of [re, im] pairs.
        #[arg(long)]
        b: Option<String>,
        /// Where to write the doubled document; printed in the report
        /// otherwise.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cycles of one order bucketed by the real part of their gain.
    Census {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        k: usize,
    },
    /// Annealing search for gains with a symmetric spectrum.
    Search {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 20_000)]
        iterations: usize,
        #[arg(long, default_value_t = 5)]
        restarts: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        runs: usize,
        /// Evaluations of the final compass refinement per restart.
        #[arg(long, default_value_t = 10_000)]
        polish: usize,
        /// Directory receiving one document per switching class.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
}

/// A finished command: its report and any documents to write.
#[derive(Debug)]
pub struct Outcome {
    pub report: Report,
    pub files: Vec<(PathBuf, String)>,
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn load(input: &Input) -> Result<(GainGraph64, String), CliError> {
    let g = match (&input.fixture, &input.file) {
        (Some(f), _) => f.graph(),
        (None, Some(path)) => GraphDocument::parse(&read(path)?)?.to_graph()?,
        (None, None) => return Err(CliError::Input("a graph file or --fixture is required".into())),
    };
    let canonical = GraphDocument::from_graph(&g).to_json();
    Ok((g, canonical))
}

fn unit_json(z: &ComplexUnit<f64>) -> Value {
    serde_json::to_value(GainDocument::from_unit(z)).expect("gains serialize")
}

fn witness_json(w: &SwitchingWitness<f64>) -> Value {
    json!({
        "perm": w.perm.as_slice(),
        "conversed": w.conversed,
        "switching": w.switching.as_ref().map(|x| x.0.iter().map(unit_json).collect::<Vec<_>>()),
    })
}

fn reason_json(r: Option<NonEquivalence>) -> Value {
    match r {
        None => Value::Null,
        Some(NonEquivalence::DifferentOrder) => json!("different_order"),
        Some(NonEquivalence::DifferentUnderlyingGraph) => json!("different_underlying_graph"),
        Some(NonEquivalence::CycleGainMismatch) => json!("cycle_gain_mismatch"),
        Some(NonEquivalence::CensusObstruction { k }) => json!(format!("census_obstruction_k{k}")),
    }
}

fn census_json(c: &CycleCensus<f64>) -> Value {
    json!({
        "k": c.k,
        "total": c.total(),
        "rows": c.buckets.iter().map(|b| json!({
            "value": b.value,
            "count": b.count,
            "exact_turns": b.exact.map(|t| t.to_string()),
        })).collect::<Vec<_>>(),
    })
}

fn options(cli: &Cli, census_k: usize) -> EquivalenceOptions {
    EquivalenceOptions {
        limits: SearchLimits {
            max_n: cli.max_n,
            ..SearchLimits::default()
        },
        tolerance: cli.tolerance,
        census_max_k: census_k,
        cycle_budget: cli.budget,
        use_census: true,
    }
}

fn spectrum_json(g: &GainGraph64, tol: f64) -> Result<Value, CliError> {
    let verdict = is_spectrally_symmetric(g, tol)?;
    let poly = if g.n() <= DEFAULT_CHAR_POLY_MAX_N {
        Some(char_poly(g)?.coeffs().to_vec())
    } else {
        None
    };
    Ok(json!({
        "n": g.n(),
        "m": g.m(),
        "eigenvalues": verdict.spectrum.values(),
        "char_poly": poly,
        "symmetric": verdict.symmetric,
        "residual": verdict.residual,
        "pairing_residual": verdict.pairing_residual,
    }))
}

/// `"0"`/`"zero"`, `"re,im"`, or a turn fraction with optional `turns:`.
pub fn parse_z(text: &str) -> Result<Option<ComplexUnit<f64>>, CliError> {
    let t = text.trim();
    if t == "0" || t.eq_ignore_ascii_case("zero") {
        return Ok(None);
    }
    if let Some((re, im)) = t.split_once(',') {
        let parse = |s: &str| {
            s.trim()
                .parse::<f64>()
                .map_err(|_| CliError::Input(format!("bad --z component {s:?}")))
        };
        return Ok(Some(ComplexUnit::new(parse(re)?, parse(im)?)?));
    }
    let fraction = t.strip_prefix("turns:").unwrap_or(t);
    fraction
        .parse::<Turns>()
        .map(|turns| Some(ComplexUnit::from_turns(turns)))
        .map_err(CliError::Input)
}

fn parse_b(spec: Option<&str>, n: usize) -> Result<GainMatrix64, CliError> {
    match spec.unwrap_or("identity") {
        "identity" => Ok(GainMatrix64::identity(n)),
        "zero" => Ok(GainMatrix64::zeros(n)),
        path => {
            let rows: Vec<Vec<[f64; 2]>> = serde_json::from_str(&read(Path::new(path))?)
                .map_err(|e| CliError::Parse(format!("--b matrix: {e}")))?;
            let rows = rows
                .into_iter()
                .map(|r| r.into_iter().map(|[re, im]| Complex::new(re, im)).collect())
                .collect();
            Ok(GainMatrix64::from_rows(rows)?)
        }
    }
}

fn search_run_json(r: &SearchResult<f64>, seed: u64) -> Value {
    json!({
        "seed": seed,
        "objective": r.objective,
        "restart_index": r.restart_index,
        "accepted_moves": r.accepted_moves,
        "basis_gains": r.basis_gains.iter().map(|(c, z)| json!({
            "cycle": c.vertices(),
            "re": z.re(),
            "im": z.im(),
        })).collect::<Vec<_>>(),
        "angles": r.angles.iter().map(|((u, v), a)| json!({"u": u, "v": v, "angle": a})).collect::<Vec<_>>(),
    })
}

/// Runs a parsed command line; `echo` is the invocation recorded in the
/// report.
pub fn execute(cli: &Cli, echo: String) -> Result<Outcome, CliError> {
    if cli.tolerance.is_nan() || cli.tolerance <= 0.0 {
        return Err(CliError::Input("--tolerance must be positive".into()));
    }
    let mut files = Vec::new();
    let (input, seed, results) = match &cli.command {
        Command::Spectrum { input } => {
            let (g, canonical) = load(input)?;
            (canonical, None, spectrum_json(&g, cli.tolerance)?)
        }
        Command::Check {
            input,
            sign_symmetric,
            switching_iso,
            census_k,
        } => {
            let (g, canonical) = load(input)?;
            let opts = options(cli, *census_k);
            let results = if *sign_symmetric {
                let r = is_sign_symmetric_with(&g, &opts)?;
                json!({
                    "mode": "sign_symmetric",
                    "result": r.result,
                    "reason": reason_json(r.reason),
                    "witness": r.witness.as_ref().map(witness_json),
                    "obstruction": r.obstruction.as_ref().map(census_json),
                })
            } else {
                let path = switching_iso.as_ref().expect("clap enforces the mode group");
                let other = GraphDocument::parse(&read(path)?)?.to_graph()?;
                let r = is_switching_isomorphic_with(&g, &other, &opts)?;
                json!({
                    "mode": "switching_isomorphic",
                    "result": r.result,
                    "reason": reason_json(r.reason),
                    "witness": r.witness.as_ref().map(witness_json),
                    "isomorphisms_tried": r.isomorphisms_tried,
                })
            };
            (canonical, None, results)
        }
        Command::Double {
            input,
            kind,
            z,
            anchor,
            b,
            out,
        } => {
            let (g, canonical) = load(input)?;
            let z = z.as_deref().map(parse_z).transpose()?;
            let unit_z = |z: Option<Option<ComplexUnit<f64>>>| -> Result<ComplexUnit<f64>, CliError> {
                match z {
                    Some(Some(u)) => Ok(u),
                    None => Ok(ComplexUnit::one()),
                    Some(None) => Err(CliError::Input("this double needs a unit --z".into())),
                }
            };
            let (doubled, fourth_root) = match kind {
                KindArg::Hermitian => (hermitian_double(&g, &parse_b(b.as_deref(), g.n())?)?, None),
                KindArg::Identity => (identity_block_double(&g, unit_z(z)?), None),
                KindArg::Odd => {
                    let a = anchor.ok_or_else(|| CliError::Input("--kind odd needs --anchor".into()))?;
                    (odd_anchor_double(&g, a)?, None)
                }
                KindArg::Sylvester => {
                    let z = z.unwrap_or(Some(ComplexUnit::one()));
                    (sylvester_double(&g, z), Some(z.is_some_and(|u| is_fourth_root_of_unity(&u))))
                }
            };
            let doc = GraphDocument::from_graph(&doubled);
            let spectral = is_spectrally_symmetric(&doubled, cli.tolerance)?;
            let sign = match is_sign_symmetric_with(&doubled, &options(cli, 9)) {
                Ok(r) => json!({"result": r.result, "reason": reason_json(r.reason)}),
                Err(e @ (Error::TooLarge { .. } | Error::BudgetExceeded(_))) => json!({"skipped": e.to_string()}),
                Err(e) => return Err(e.into()),
            };
            let mut results = json!({
                "kind": format!("{kind:?}").to_lowercase(),
                "n": doubled.n(),
                "m": doubled.m(),
                "spectrally_symmetric": {"symmetric": spectral.symmetric, "residual": spectral.residual},
                "sign_symmetric": sign,
                "z_in_fourth_roots_of_unity": fourth_root,
            });
            match out {
                Some(path) => {
                    files.push((path.clone(), doc.to_json()));
                    results["output"] = json!(path.display().to_string());
                }
                None => results["document"] = serde_json::to_value(&doc).expect("documents serialize"),
            }
            (canonical, None, results)
        }
        Command::Census { input, k } => {
            let (g, canonical) = load(input)?;
            let c = cycle_census_with_budget(&g, *k, cli.budget)?;
            let symmetric = census_is_negation_symmetric(&c);
            let mut results = census_json(&c);
            results["negation_symmetric"] = json!(symmetric);
            results["verdict"] = json!(if symmetric { "symmetric" } else { "asymmetric" });
            (canonical, None, results)
        }
        Command::Search {
            input,
            iterations,
            restarts,
            seed,
            runs,
            polish,
            out_dir,
        } => {
            let (g, canonical) = load(input)?;
            let cfg = AnnealConfig {
                iterations: *iterations,
                restarts: *restarts,
                polish: *polish,
                seed: *seed,
                ..AnnealConfig::default()
            };
            let found = distinct_solutions(&g, &cfg, *runs)?;
            let best = found
                .runs
                .iter()
                .enumerate()
                .min_by(|a, b| a.1.objective.total_cmp(&b.1.objective).then(a.0.cmp(&b.0)))
                .expect("at least one run");
            if let Some(dir) = out_dir {
                for (i, rep) in found.representatives.iter().enumerate() {
                    files.push((dir.join(format!("class_{i}.json")), GraphDocument::from_graph(&rep.gains).to_json()));
                }
            }
            let results = json!({
                "runs": found.runs.iter().enumerate().map(|(i, r)| search_run_json(r, cfg.derived_seed(i))).collect::<Vec<_>>(),
                "best_run": best.0,
                "best_objective": best.1.objective,
                "best_gains": GraphDocument::from_graph(&best.1.gains),
                "successes": found.successes,
                "classes": found.representatives.len(),
                "representatives": found.representatives.iter().map(|r| GraphDocument::from_graph(&r.gains)).collect::<Vec<_>>(),
            });
            (canonical, Some(*seed), results)
        }
    };
    Ok(Outcome {
        report: Report::new(echo, &input, seed, results),
        files,
    })
}

/// Parses, executes and writes any output documents.
pub fn run<I, S>(args: I) -> Result<Outcome, CliError>
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let cli = Cli::try_parse_from(&args).map_err(|e| CliError::Input(e.to_string()))?;
    let echo = args
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect::<Vec<_>>()
        .join(" ");
    let outcome = execute(&cli, echo)?;
    write_files(&outcome)?;
    Ok(outcome)
}

pub fn write_files(outcome: &Outcome) -> Result<(), CliError> {
    for (path, text) in &outcome.files {
        if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
            std::fs::create_dir_all(parent).map_err(|source| CliError::Io {
                path: parent.to_owned(),
                source,
            })?;
        }
        std::fs::write(path, text).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        })?;
    }
    Ok(())
}

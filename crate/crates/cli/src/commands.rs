//! Subcommand logic. Each command returns a report and an exit status.

use nilsplit_core::cohomology::{
    ce_betti, euler_characteristic, poincare_check, Cohomology, CohomologyError,
};
use nilsplit_core::hamiltonian::{
    build_twisted, csplit_compare, forcing_check, hamiltonian_obstruction, BaseModel, TwistError,
    TwistedModel,
};
use nilsplit_core::lie::{ce_model, validate, CeModel, ValidationReport};
use nilsplit_core::linalg::fmt_rational;
use nilsplit_core::symplectic::{
    find_symplectic, hard_lefschetz, NoneReason, SearchOptions, SymplecticError, SymplecticForm,
    SymplecticSearch,
};
use nilsplit_core::Rational;
use num::Zero;
use sha2::{Digest, Sha256};

use crate::document::{Input, RationalString};
use crate::report::{InputInfo, LefschetzRowReport, Report, Section};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exit {
    Success = 0,
    InputError = 2,
    NoSymplectic = 3,
    InvalidTwist = 4,
    SearchExhausted = 5,
}

#[derive(Debug, Clone, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Document(#[from] crate::document::DocumentError),
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
    #[error(transparent)]
    Symplectic(#[from] SymplecticError),
    #[error(transparent)]
    Twist(#[from] TwistError),
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub report: Report,
    pub exit: Exit,
}

#[derive(Debug, Clone, Copy)]
pub struct Options {
    pub seed: u64,
    pub max_degree: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlphaArg {
    Solve,
    Matrix(String),
}

pub fn parse_base(s: &str) -> Result<BaseModel, String> {
    if s == "s2" {
        return Ok(BaseModel::SphereS2);
    }
    let m = s
        .strip_prefix("formal:")
        .and_then(|m| m.parse::<usize>().ok())
        .filter(|&m| m >= 1)
        .ok_or_else(|| format!("expected `s2` or `formal:m` with m >= 1, got `{s}`"))?;
    Ok(BaseModel::FormalEven(m))
}

pub fn parse_alpha_arg(s: &str) -> Result<AlphaArg, String> {
    Ok(if s == "solve" {
        AlphaArg::Solve
    } else {
        AlphaArg::Matrix(s.to_string())
    })
}

/// Rows separated by `;`, entries by `,`. With a single twist generator a
/// plain comma list is read as the column.
pub fn parse_alpha(s: &str, n: usize, m: usize) -> Result<Vec<Vec<Rational>>, String> {
    let entry = |t: &str| t.trim().parse::<RationalString>().map(|r| r.0);
    let rows: Vec<Vec<Rational>> = if m == 1 && !s.contains(';') {
        s.split(',')
            .map(|t| entry(t).map(|q| vec![q]))
            .collect::<Result<_, _>>()?
    } else {
        s.split(';')
            .map(|row| row.split(',').map(entry).collect::<Result<Vec<_>, _>>())
            .collect::<Result<_, _>>()?
    };
    if rows.len() != n || rows.iter().any(|r| r.len() != m) {
        return Err(format!(
            "--alpha needs {n} rows of {m} entries (rows separated by `;`), got `{s}`"
        ));
    }
    Ok(rows)
}

fn header(command: &'static str, input: &Input, opts: Options) -> Report {
    Report {
        tool: "nilsplit",
        version: env!("CARGO_PKG_VERSION"),
        command,
        input: InputInfo {
            name: input.document.name.clone(),
            dim: input.document.dim,
            sha256: hex::encode(Sha256::digest(&input.bytes)),
        },
        seed: opts.seed,
        sections: Vec::new(),
    }
}

fn validation_section(r: &ValidationReport) -> Section {
    Section::Validation {
        jacobi: r.jacobi_failures.is_empty(),
        jacobi_failures: r
            .jacobi_failures
            .iter()
            .map(|f| [f.triple.0, f.triple.1, f.triple.2])
            .collect(),
        nilpotent: r.nilpotent,
        nilpotency_class: r.nilpotency_class,
        lower_central_series: r.lower_central_dims.clone(),
        derived_dim: r.derived_dim,
    }
}

/// Adds the validation section; `None` when the algebra is rejected.
fn validated(report: &mut Report, input: &Input) -> Option<CeModel> {
    let spec = input.document.spec();
    let v = validate(&spec);
    report.sections.push(validation_section(&v));
    v.is_ok().then(|| ce_model(&spec).expect("validated above"))
}

fn done(report: Report, exit: Exit) -> Result<Outcome, CliError> {
    Ok(Outcome { report, exit })
}

pub fn validate_cmd(input: &Input, opts: Options) -> Result<Outcome, CliError> {
    let mut report = header("validate", input, opts);
    let exit = match validated(&mut report, input) {
        Some(_) => Exit::Success,
        None => Exit::InputError,
    };
    done(report, exit)
}

pub fn cohomology_cmd(input: &Input, opts: Options) -> Result<Outcome, CliError> {
    let mut report = header("cohomology", input, opts);
    let Some(ce) = validated(&mut report, input) else {
        return done(report, Exit::InputError);
    };
    let cap = opts.max_degree.unwrap_or(ce.dim() as u32);
    let betti = Cohomology::compute(ce.dga(), cap)?.betti_numbers();
    report.sections.push(Section::Betti {
        max_degree: cap,
        euler_characteristic: euler_characteristic(&ce_betti(&ce)),
        poincare_duality: poincare_check(&ce),
        betti,
    });
    done(report, Exit::Success)
}

enum Obtained {
    Form(SymplecticForm),
    Stop(Exit),
}

fn form_section(source: &'static str, sf: &SymplecticForm, trials: Option<usize>) -> Section {
    Section::Symplectic {
        source,
        status: "symplectic",
        omega: Some(sf.omega().to_string()),
        closed: Some(true),
        d_omega: None,
        rank: Some(sf.dim()),
        trials,
        reason: None,
    }
}

/// Certifies the document's form or searches for one, recording the outcome.
fn obtain_form(
    report: &mut Report,
    ce: &CeModel,
    input: &Input,
    opts: Options,
    omega_from_file: bool,
) -> Result<Obtained, CliError> {
    if omega_from_file {
        let coeffs = input.document.omega_coefficients().ok_or_else(|| {
            CliError::Input("--omega-from-file: the document has no `omega` field".into())
        })?;
        return match SymplecticForm::from_coefficients(ce, &coeffs) {
            Ok(sf) => {
                report.sections.push(form_section("document", &sf, None));
                Ok(Obtained::Form(sf))
            }
            Err(SymplecticError::NotSymplectic(cert)) => {
                let reason = match (&cert.closed, &cert.kernel_witness) {
                    (false, _) => "omega is not closed".to_string(),
                    (true, Some(x)) => format!(
                        "omega is degenerate: omega(X, -) = 0 for X = ({})",
                        x.iter().map(fmt_rational).collect::<Vec<_>>().join(", ")
                    ),
                    (true, None) => "omega is degenerate".to_string(),
                };
                report.sections.push(Section::Symplectic {
                    source: "document",
                    status: "not-symplectic",
                    omega: input
                        .document
                        .omega_coefficients()
                        .and_then(|c| {
                            nilsplit_core::symplectic::TwoForm::from_coefficients(ce, &c).ok()
                        })
                        .map(|f| f.omega().to_string()),
                    closed: Some(cert.closed),
                    d_omega: (!cert.closed).then(|| cert.d_omega.to_string()),
                    rank: Some(cert.rank),
                    trials: None,
                    reason: Some(reason),
                });
                Ok(Obtained::Stop(Exit::NoSymplectic))
            }
            Err(e) => Err(e.into()),
        };
    }
    let options = SearchOptions {
        seed: opts.seed,
        ..SearchOptions::default()
    };
    match find_symplectic(ce, options) {
        SymplecticSearch::Found { form, trials } => {
            report
                .sections
                .push(form_section("search", &form, Some(trials)));
            Ok(Obtained::Form(form))
        }
        SymplecticSearch::DefinitelyNone(reason) => {
            let reason = match reason {
                NoneReason::OddDimension => "odd dimension".to_string(),
                NoneReason::PfaffianVanishes { closed_forms } => format!(
                    "the Pfaffian of the generic closed 2-form vanishes identically ({closed_forms}-dimensional space of closed forms)"
                ),
            };
            report.sections.push(Section::Symplectic {
                source: "search",
                status: "none",
                omega: None,
                closed: None,
                d_omega: None,
                rank: None,
                trials: None,
                reason: Some(reason),
            });
            Ok(Obtained::Stop(Exit::NoSymplectic))
        }
        SymplecticSearch::Exhausted { trials } => {
            report.sections.push(Section::Symplectic {
                source: "search",
                status: "exhausted",
                omega: None,
                closed: None,
                d_omega: None,
                rank: None,
                trials: Some(trials),
                reason: Some("no nondegenerate form among the sampled closed forms".into()),
            });
            Ok(Obtained::Stop(Exit::SearchExhausted))
        }
    }
}

pub fn symplectic_cmd(
    input: &Input,
    opts: Options,
    omega_from_file: bool,
) -> Result<Outcome, CliError> {
    let mut report = header("symplectic", input, opts);
    let Some(ce) = validated(&mut report, input) else {
        return done(report, Exit::InputError);
    };
    let sf = match obtain_form(&mut report, &ce, input, opts, omega_from_file)? {
        Obtained::Form(sf) => sf,
        Obtained::Stop(exit) => return done(report, exit),
    };
    let hl = hard_lefschetz(&ce, &sf)?;
    report.sections.push(Section::Lefschetz {
        holds: hl.holds(),
        first_failure: hl.first_failure(),
        rows: hl
            .rows
            .iter()
            .map(|r| LefschetzRowReport {
                k: r.k,
                source_degree: r.source_degree,
                target_degree: r.target_degree,
                source_dim: r.source_dim,
                target_dim: r.target_dim,
                rank: r.rank,
                isomorphism: r.isomorphism(),
            })
            .collect(),
    });
    done(report, Exit::Success)
}

fn strings(alpha: &[Vec<Rational>]) -> Vec<Vec<String>> {
    alpha
        .iter()
        .map(|r| r.iter().map(fmt_rational).collect())
        .collect()
}

fn twist_generator_names(base: BaseModel) -> Vec<String> {
    let dga = base.dga();
    base.twist_generators()
        .into_iter()
        .map(|i| dga.algebra().generator(i).name.clone())
        .collect()
}

fn twist_and_split(
    report: &mut Report,
    tm: &TwistedModel,
    sf: &SymplecticForm,
    opts: Options,
) -> Result<(), CliError> {
    let o = hamiltonian_obstruction(tm, sf.form())?;
    report.sections.push(Section::Twist {
        base: tm.base().to_string(),
        alpha: strings(tm.alpha()),
        valid: true,
        defect: None,
        obstruction: Some(o.full.to_string()),
        eq1: twist_generator_names(tm.base())
            .into_iter()
            .zip(&o.eq1)
            .map(|(g, e)| (g, e.to_string()))
            .collect(),
        hamiltonian: Some(o.is_hamiltonian()),
    });
    let v = csplit_compare(tm, opts.max_degree)?;
    report.sections.push(Section::Csplit {
        max_degree: v.cap,
        additive: v.additive(),
        untwisted: v.untwisted,
        tensor_product: v.tensor_product,
        csplit: v.additive(),
        total: v.total,
        base: v.base,
        fiber: v.fiber,
        expected: v.expected,
    });
    Ok(())
}

pub fn csplit_cmd(
    input: &Input,
    opts: Options,
    omega_from_file: bool,
    base: BaseModel,
    alpha: &AlphaArg,
) -> Result<Outcome, CliError> {
    let mut report = header("csplit", input, opts);
    let Some(ce) = validated(&mut report, input) else {
        return done(report, Exit::InputError);
    };
    let sf = match obtain_form(&mut report, &ce, input, opts, omega_from_file)? {
        Obtained::Form(sf) => sf,
        Obtained::Stop(exit) => return done(report, exit),
    };
    let (n, m) = (ce.dim(), base.twist_count());
    let alpha = match alpha {
        AlphaArg::Solve => {
            let r = forcing_check(&ce, sf.form(), base)?;
            let chosen = r
                .solutions
                .first()
                .cloned()
                .unwrap_or_else(|| vec![vec![Rational::zero(); m]; n]);
            report.sections.push(Section::Forcing {
                base: base.to_string(),
                unknowns: r.unknowns,
                equations: r.equations,
                rank: r.rank,
                solution_dimension: r.dimension(),
                forced_zero: r.forced_zero(),
                solutions: r.solutions.iter().map(|s| strings(s)).collect(),
                witness_verified: r.witness_verified,
            });
            chosen
        }
        AlphaArg::Matrix(s) => parse_alpha(s, n, m).map_err(CliError::Input)?,
    };
    let tm = match build_twisted(&ce, base, alpha.clone()) {
        Ok(tm) => tm,
        Err(TwistError::NotADifferential { generator, witness }) => {
            report.sections.push(Section::Twist {
                base: base.to_string(),
                alpha: strings(&alpha),
                valid: false,
                defect: Some((generator, witness.to_string())),
                obstruction: None,
                eq1: Vec::new(),
                hamiltonian: None,
            });
            return done(report, Exit::InvalidTwist);
        }
        Err(e) => return Err(e.into()),
    };
    twist_and_split(&mut report, &tm, &sf, opts)?;
    done(report, Exit::Success)
}

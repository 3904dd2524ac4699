use rayon::prelude::*;
use serde::Serialize;

use super::args::{parse_param_pairs, resolve_dims, resolve_families, Cli, Command};
use crate::algebra::{Poly, Rational};
use crate::determinant::{
    a_family_check, b_leading_coefficient_check, charpoly, induction_report, verify_family_with,
    InductionReport, VerifyReport,
};
use crate::error::{Error, Result};
use crate::families::{
    build_matrix, lambda_description, predicted_spectrum, sample_params, validate_params, FamilyId,
    FamilyParams, Reading,
};
use crate::reduction::{qracah_scalar_identity_with, reduce_step_traced, IdentityReport, ReductionReport, TraceStage};

/// One parameter point of a sweep.
#[derive(Debug, Clone)]
pub struct Job {
    pub family: FamilyId,
    pub dim: usize,
    pub seed: Option<u64>,
    pub params: FamilyParams,
}

#[derive(Debug, Clone, Serialize)]
pub struct LeadingCoefficientCheck {
    pub x0: Rational,
    pub holds: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyCase {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(flatten)]
    pub report: VerifyReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub induction: Option<InductionReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b_leading_coefficient: Option<LeadingCoefficientCheck>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a_family: Option<bool>,
    pub passed: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct EvalCase {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(flatten)]
    pub report: VerifyReport,
    pub factored: String,
    pub substitution: String,
    pub passed: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReduceCase {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(flatten)]
    pub report: ReductionReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<TraceStage>>,
    pub passed: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentityCase {
    #[serde(flatten)]
    pub report: IdentityReport,
    pub passed: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct TableRow {
    pub family: FamilyId,
    pub dim: usize,
    pub params: FamilyParams,
    pub factored: String,
    pub coefficients: Vec<Rational>,
    pub passed: bool,
}

#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum Case {
    Eval(Box<EvalCase>),
    Verify(Box<VerifyCase>),
    Reduce(Box<ReduceCase>),
    Identity(IdentityCase),
    Table(TableRow),
}

impl Case {
    pub fn passed(&self) -> bool {
        match self {
            Case::Eval(c) => c.passed,
            Case::Verify(c) => c.passed,
            Case::Reduce(c) => c.passed,
            Case::Identity(c) => c.passed,
            Case::Table(c) => c.passed,
        }
    }
}

fn reading(cli: &Cli) -> Reading {
    if cli.paper_literal {
        Reading::PaperLiteral
    } else {
        Reading::Corrected
    }
}

/// Expand the configuration into jobs, ordered by family, dim and seed.
pub fn jobs(cli: &Cli) -> Result<Vec<Job>> {
    let families = resolve_families(cli)?;
    let explicit = parse_param_pairs(&cli.params)?;
    if !explicit.is_empty() && families.len() != 1 {
        return Err(Error::Shape("--param needs a single --family".into()));
    }
    if cli.samples == 0 {
        return Err(Error::Shape("--samples must be at least 1".into()));
    }
    let mut out = Vec::new();
    for family in families {
        let floor = if cli.command == Command::Reduce { family.min_step_dim() } else { 1 };
        let fixed = if family.param_names().is_empty() || !explicit.is_empty() {
            Some(FamilyParams::from_pairs(family, &explicit)?)
        } else {
            None
        };
        for dim in resolve_dims(cli, floor)? {
            match &fixed {
                Some(params) => {
                    if let Some(v) = validate_params(family, dim, params).into_iter().next() {
                        return Err(Error::DegenerateParams(format!("{family} dim {dim}: {v}")));
                    }
                    out.push(Job { family, dim, seed: None, params: params.clone() });
                }
                None => {
                    for i in 0..cli.samples as u64 {
                        let seed = cli.seed.wrapping_add(i);
                        let params = sample_params(family, dim, seed)?;
                        out.push(Job { family, dim, seed: Some(seed), params });
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Run every case. Cases run in parallel and come back in job order; the
/// first error in that order wins.
pub fn run_cases(cli: &Cli) -> Result<Vec<Case>> {
    if cli.command == Command::Identity {
        return identity_cases(cli);
    }
    let jobs = jobs(cli)?;
    let results: Vec<Result<Case>> = jobs.par_iter().map(|job| run_job(cli, job)).collect();
    results.into_iter().collect()
}

fn run_job(cli: &Cli, job: &Job) -> Result<Case> {
    let Job { family, dim, seed, params } = job.clone();
    match cli.command {
        Command::Eval => {
            let report = verify_family_with(family, dim, &params, reading(cli))?;
            let roots = predicted_spectrum(family, dim, &params)?;
            let factored = if report.variable == "t" {
                factored(&roots, "t")
            } else {
                report.closed_form.pretty(report.variable)
            };
            Ok(Case::Eval(Box::new(EvalCase {
                seed,
                passed: report.passed(),
                substitution: lambda_description(dim, &params),
                factored,
                report,
            })))
        }
        Command::Verify => verify_case(cli, job),
        Command::Reduce => {
            let (report, stages) = reduce_step_traced(family, dim, &params)?;
            Ok(Case::Reduce(Box::new(ReduceCase {
                seed,
                passed: report.passed(),
                trace: cli.trace.then_some(stages),
                report,
            })))
        }
        Command::Table => {
            let cp = charpoly(&build_matrix(family, dim, &params)?);
            let roots = predicted_spectrum(family, dim, &params)?;
            let passed = cp == Poly::from_roots(&roots);
            Ok(Case::Table(TableRow {
                family,
                dim,
                params,
                factored: factored(&roots, "t"),
                coefficients: cp.coeffs().to_vec(),
                passed,
            }))
        }
        Command::Identity => unreachable!("identity cases are not per-family jobs"),
    }
}

fn verify_case(cli: &Cli, job: &Job) -> Result<Case> {
    let Job { family, dim, seed, ref params } = *job;
    let report = verify_family_with(family, dim, params, reading(cli))?;
    let induction = if family.has_reduction() && dim >= family.min_step_dim() {
        Some(induction_report(family, dim, params)?)
    } else {
        None
    };
    let b_leading_coefficient = match params {
        FamilyParams::SylvesterB { a } => Some(LeadingCoefficientCheck {
            x0: a.clone(),
            holds: b_leading_coefficient_check(dim, a),
        }),
        _ => None,
    };
    let a_family = (family == FamilyId::SylvesterA).then(|| a_family_check(dim));
    let passed = report.passed()
        && induction.as_ref().is_none_or(|r| r.holds)
        && b_leading_coefficient.as_ref().is_none_or(|c| c.holds)
        && a_family.unwrap_or(true);
    Ok(Case::Verify(Box::new(VerifyCase { seed, report, induction, b_leading_coefficient, a_family, passed })))
}

fn identity_cases(cli: &Cli) -> Result<Vec<Case>> {
    if cli.dim.is_some() || cli.dims.is_some() || cli.max_dim.is_some() {
        return Err(Error::Shape("identity takes --max-n, not a dimension".into()));
    }
    resolve_families(cli)?;
    if cli.max_n == 0 {
        return Err(Error::BadDimension { dim: 0, context: "--max-n must be at least 1".into() });
    }
    let variant = cli.variant.unwrap_or_default();
    let results: Vec<Result<Case>> = (0..cli.max_n)
        .into_par_iter()
        .map(|n| {
            let report = qracah_scalar_identity_with(n, cli.max_n, cli.trials, cli.seed, variant, reading(cli))?;
            Ok(Case::Identity(IdentityCase { passed: report.holds, report }))
        })
        .collect();
    results.into_iter().collect()
}

/// Product of linear factors in the given root order, with consecutive
/// equal roots grouped: roots `[-2, 0, 2]` give `(t+2)t(t-2)`.
pub fn factored(roots: &[Rational], var: &str) -> String {
    if roots.is_empty() {
        return "1".into();
    }
    let mut out = String::new();
    let mut i = 0;
    while i < roots.len() {
        let r = &roots[i];
        let mut k = 1;
        while i + k < roots.len() && roots[i + k] == *r {
            k += 1;
        }
        let base = if r.is_zero() {
            var.to_string()
        } else if r.is_negative() {
            format!("({var}+{})", -r)
        } else {
            format!("({var}-{r})")
        };
        out.push_str(&base);
        if k > 1 {
            out.push_str(&format!("^{k}"));
        }
        i += k;
    }
    out
}

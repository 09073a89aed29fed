use std::io::Write;

use glmn_core::invariants::{rank_orbit_closure_dim, variety_dims};
use glmn_core::oracle::gl11::{gl11_kac, gl11_simple, measured_growth, Resolution, Weighting};
use glmn_core::oracle::kac::{dual_kac_module, kac_module};
use glmn_core::oracle::rank::{detecting_rank, rank_variety, Side};
use glmn_core::oracle::MatrixModule;
use glmn_core::weight::atypicality;
use glmn_core::{Error, InvariantReport, ModuleKind, Weight};
use rayon::prelude::*;
use serde::Serialize;

use super::{first_error, join, write_json};
use crate::error::{CliError, CliResult};
use crate::{Format, WeightSpec};

/// Resolution depth used for gl(1|1) growth checks.
pub const VERIFY_DEPTH: usize = 15;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Agree,
    Disagree,
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Agree => "AGREE",
            Status::Disagree => "DISAGREE",
            Status::Skipped => "SKIPPED",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub quantity: &'static str,
    pub method: &'static str,
    pub formula: usize,
    pub measured: Option<usize>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Check {
    fn compare(quantity: &'static str, method: &'static str, formula: usize, measured: usize) -> Check {
        let status = if formula == measured { Status::Agree } else { Status::Disagree };
        Check { quantity, method, formula, measured: Some(measured), status, note: None }
    }

    fn skipped(quantity: &'static str, method: &'static str, formula: usize, note: String) -> Check {
        Check { quantity, method, formula, measured: None, status: Status::Skipped, note: Some(note) }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct InvariantsRow {
    pub weight: Weight,
    pub kind: ModuleKind,
    pub k: usize,
    #[serde(flatten)]
    pub report: InvariantReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verify: Option<Vec<Check>>,
}

fn is_gl11_principal(lam: &Weight) -> bool {
    let p = lam.params();
    p.m() == 1 && p.n() == 1 && lam.coeff(1) + lam.coeff(2) == 0
}

fn gl11_checks(kind: ModuleKind, lam: &Weight, report: &InvariantReport) -> CliResult<Vec<Check>> {
    let a = lam.coeff(1);
    let module = match kind {
        ModuleKind::Kac => gl11_kac(a)?,
        ModuleKind::DualKac => dual_kac_module(lam)?,
        ModuleKind::Simple => gl11_simple(a),
    };
    let trace = Resolution::of_module(module, VERIFY_DEPTH)?.trace();
    let c = measured_growth(&trace, Weighting::ByDimP)?;
    let z = measured_growth(&trace, Weighting::Unit)?;
    Ok(vec![
        Check::compare("complexity", "resolution growth", report.complexity, c.rate.max(0) as usize),
        Check::compare("z_invariant", "resolution growth", report.z_invariant, z.rate.max(0) as usize),
    ])
}

fn rank_checks(kind: ModuleKind, lam: &Weight, report: &InvariantReport) -> CliResult<Vec<Check>> {
    let module: Result<MatrixModule, Error> = match kind {
        ModuleKind::Kac => kac_module(lam),
        ModuleKind::DualKac => dual_kac_module(lam),
        // Typical simples coincide with their Kac modules.
        ModuleKind::Simple if atypicality(lam)?.atypicality == 0 => kac_module(lam),
        ModuleKind::Simple => {
            let note = "no simple-module realisation beyond gl(1|1)".to_string();
            return Ok(vec![
                Check::skipped("dim_rank_plus", "rank variety", report.dim_rank_plus, note.clone()),
                Check::skipped("dim_rank_minus", "rank variety", report.dim_rank_minus, note),
            ]);
        }
    };
    let module = match module {
        Ok(m) => m,
        Err(Error::Resource(msg)) => {
            let note = format!("skipped: {msg}");
            return Ok(vec![
                Check::skipped("dim_rank_plus", "rank variety", report.dim_rank_plus, note.clone()),
                Check::skipped("dim_rank_minus", "rank variety", report.dim_rank_minus, note.clone()),
                Check::skipped("complexity", "rank variety", report.complexity, note.clone()),
                Check::skipped("z_invariant", "detecting subalgebra", report.z_invariant, note),
            ]);
        }
        Err(e) => return Err(e.into()),
    };
    let params = lam.params();
    let plus = rank_orbit_closure_dim(params, rank_variety(&module, Side::Plus)?)?;
    let minus = rank_orbit_closure_dim(params, rank_variety(&module, Side::Minus)?)?;
    let detecting = detecting_rank(&module, Side::Plus)? + detecting_rank(&module, Side::Minus)?;
    // K(λ) is supported on g_1 and K^-(λ) on g_{-1}; the other side is zero.
    let support = plus.max(minus);
    Ok(vec![
        Check::compare("dim_rank_plus", "rank variety", report.dim_rank_plus, plus),
        Check::compare("dim_rank_minus", "rank variety", report.dim_rank_minus, minus),
        Check::compare("complexity", "rank variety", report.complexity, support),
        Check::compare("z_invariant", "detecting subalgebra", report.z_invariant, detecting),
    ])
}

pub fn verify(kind: ModuleKind, lam: &Weight, report: &InvariantReport) -> CliResult<Vec<Check>> {
    let mut checks = Vec::new();
    if is_gl11_principal(lam) {
        checks.extend(gl11_checks(kind, lam, report)?);
    }
    checks.extend(rank_checks(kind, lam, report)?);
    Ok(checks)
}

pub fn invariants(kind: ModuleKind, lam: &Weight, with_verify: bool) -> CliResult<InvariantsRow> {
    let report = variety_dims(kind, lam)?;
    let verify = if with_verify { Some(verify(kind, lam, &report)?) } else { None };
    Ok(InvariantsRow {
        weight: lam.clone(),
        kind,
        k: atypicality(lam)?.atypicality,
        report,
        verify,
    })
}

pub const CSV_HEADER: [&str; 12] = [
    "m",
    "n",
    "weight",
    "kind",
    "k",
    "complexity",
    "z_invariant",
    "dim_X",
    "dim_V_g_g0",
    "dim_V_f_f0",
    "dim_rank_plus",
    "dim_rank_minus",
];

pub fn run(spec: &WeightSpec, kind: ModuleKind, with_verify: bool, format: Format, out: &mut dyn Write) -> CliResult<()> {
    let weights = spec.resolve()?;
    let results: Vec<CliResult<InvariantsRow>> = weights.par_iter().map(|w| invariants(kind, w, with_verify)).collect();
    let mut rows = Vec::new();
    let mut errors = Vec::new();
    for r in results {
        match r {
            Ok(row) => rows.push(row),
            Err(e) => errors.push(e),
        }
    }
    match format {
        Format::Json => write_json(out, &rows)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            let mut header: Vec<&str> = CSV_HEADER.to_vec();
            if with_verify {
                header.push("verify");
            }
            w.write_record(&header)?;
            for r in &rows {
                let p = r.weight.params();
                let rep = &r.report;
                let mut rec = vec![
                    p.m().to_string(),
                    p.n().to_string(),
                    join(r.weight.coeffs(), " "),
                    kind.to_string(),
                    r.k.to_string(),
                    rep.complexity.to_string(),
                    rep.z_invariant.to_string(),
                    rep.dim_x.to_string(),
                    rep.dim_v_g_g0.to_string(),
                    rep.dim_v_f_f0.to_string(),
                    rep.dim_rank_plus.to_string(),
                    rep.dim_rank_minus.to_string(),
                ];
                if let Some(checks) = &r.verify {
                    let s: Vec<String> = checks
                        .iter()
                        .map(|c| {
                            let m = c.measured.map_or("-".to_string(), |v| v.to_string());
                            format!("{}={}/{}:{}", c.quantity, c.formula, m, c.status.as_str())
                        })
                        .collect();
                    rec.push(s.join(" "));
                }
                w.write_record(&rec)?;
            }
            w.flush()?;
        }
    }
    if rows.iter().flat_map(|r| r.verify.iter().flatten()).any(|c| c.status == Status::Disagree) {
        errors.push(CliError::internal("closed form and oracle disagree"));
    }
    first_error(errors)
}

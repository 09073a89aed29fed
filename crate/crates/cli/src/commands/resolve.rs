use std::io::Write;

use glmn_core::invariants::{complexity, z_invariant};
use glmn_core::oracle::gl11::{
    gl11_kac, gl11_simple, kl_depth, kl_poly_from_trace, measured_growth, GrowthFit, Gl11Target, Resolution,
    ResolutionTrace, Weighting, MAX_DEPTH,
};
use glmn_core::oracle::kac::dual_kac_module;
use glmn_core::weight::principal_weight;
use glmn_core::{ModuleKind, Weight};
use serde::Serialize;

use super::invariants::Status;
use super::write_json;
use crate::error::{CliError, CliResult};
use crate::weights::parse_coeffs;
use crate::Format;

/// Growth fits need at least this many degrees.
pub const MIN_GROWTH_DEPTH: usize = 10;

#[derive(Clone, Debug)]
pub struct ResolveConfig {
    pub kind: ModuleKind,
    pub m: usize,
    pub n: usize,
    pub weight: String,
    pub depth: usize,
    pub kl_window: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct GrowthCheck {
    pub quantity: &'static str,
    pub weighting: &'static str,
    pub formula: usize,
    pub measured: Option<i64>,
    pub slope: Option<f64>,
    pub status: Status,
}

#[derive(Clone, Debug, Serialize)]
pub struct KlRow {
    pub lambda: i64,
    pub mu: i64,
    pub p: String,
    pub constant_term_one: bool,
    pub degree_le_1: bool,
    pub p_at_1_le_1: bool,
}

impl KlRow {
    fn ok(&self) -> bool {
        self.constant_term_one && self.degree_le_1 && self.p_at_1_le_1
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ResolveReport {
    pub kind: ModuleKind,
    pub m: usize,
    pub n: usize,
    pub weight: i64,
    pub depth: usize,
    pub exact: bool,
    pub trace: ResolutionTrace,
    pub growth: Vec<GrowthCheck>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kl: Option<Vec<KlRow>>,
}

/// `"a"` or `"a,-a"`.
fn parse_gl11_weight(s: &str) -> CliResult<i64> {
    match parse_coeffs(s)?.as_slice() {
        [a] => Ok(*a),
        [a, b] if a + b == 0 => Ok(*a),
        [a, b] => Err(CliError::domain(format!(
            "({a} | {b}) is outside the principal block; resolutions need a + b = 0"
        ))),
        _ => Err(CliError::usage(format!("weight `{s}` must be `a` or `a,-a`"))),
    }
}

fn growth_check(
    quantity: &'static str,
    weighting: Weighting,
    formula: usize,
    trace: &ResolutionTrace,
) -> CliResult<GrowthCheck> {
    let name = match weighting {
        Weighting::ByDimP => "dim",
        Weighting::Unit => "unit",
    };
    if trace.depth() < MIN_GROWTH_DEPTH {
        return Ok(GrowthCheck { quantity, weighting: name, formula, measured: None, slope: None, status: Status::Skipped });
    }
    let GrowthFit { rate, slope } = measured_growth(trace, weighting)?;
    let status = if rate == formula as i64 { Status::Agree } else { Status::Disagree };
    Ok(GrowthCheck { quantity, weighting: name, formula, measured: Some(rate), slope: Some(slope), status })
}

fn kl_rows(r: i64) -> CliResult<Vec<KlRow>> {
    if kl_depth(-r, r) > MAX_DEPTH {
        return Err(CliError::usage(format!("kl-window {r} needs resolutions deeper than {MAX_DEPTH}")));
    }
    let mut rows = Vec::new();
    for lam in -r..=r {
        let depth = kl_depth(lam, -r).max(kl_depth(lam, r));
        let trace = Resolution::of_target(Gl11Target::Kac(lam), depth)?.trace();
        for mu in -r..=r {
            let p = kl_poly_from_trace(&trace, lam, mu)?;
            // The constraints apply to nonzero polynomials; p = 0 passes vacuously.
            let zero = p.is_zero();
            rows.push(KlRow {
                lambda: lam,
                mu,
                constant_term_one: zero || p.coefficient(0) == 1,
                degree_le_1: zero || (p.min_exponent() >= Some(0) && p.degree() <= Some(1)),
                p_at_1_le_1: p.at_one() <= 1,
                p: p.to_string(),
            });
        }
    }
    Ok(rows)
}

pub fn report(cfg: &ResolveConfig) -> CliResult<ResolveReport> {
    if (cfg.m, cfg.n) != (1, 1) {
        return Err(CliError::domain(format!("resolutions are implemented for gl(1|1) only, not gl({}|{})", cfg.m, cfg.n)));
    }
    if cfg.depth > MAX_DEPTH {
        return Err(CliError::usage(format!("depth {} exceeds {MAX_DEPTH}", cfg.depth)));
    }
    if cfg.kl_window < 0 {
        return Err(CliError::usage("kl-window must be nonnegative"));
    }
    let a = parse_gl11_weight(&cfg.weight)?;
    let lam: Weight = principal_weight(&[a])?;
    let module = match cfg.kind {
        ModuleKind::Kac => gl11_kac(a)?,
        ModuleKind::Simple => gl11_simple(a),
        ModuleKind::DualKac => dual_kac_module(&lam)?,
    };
    let resolution = Resolution::of_module(module, cfg.depth)?;
    resolution.check_exactness()?;
    let trace = resolution.trace();
    let growth = vec![
        growth_check("complexity", Weighting::ByDimP, complexity(cfg.kind, &lam)?, &trace)?,
        growth_check("z_invariant", Weighting::Unit, z_invariant(cfg.kind, &lam)?, &trace)?,
    ];
    let kl = if cfg.kl_window > 0 { Some(kl_rows(cfg.kl_window)?) } else { None };
    Ok(ResolveReport { kind: cfg.kind, m: 1, n: 1, weight: a, depth: cfg.depth, exact: true, trace, growth, kl })
}

pub fn run(cfg: &ResolveConfig, format: Format, out: &mut dyn Write) -> CliResult<()> {
    let rep = report(cfg)?;
    match format {
        Format::Json => write_json(out, &rep)?,
        Format::Csv => {
            // Sections share one stream; the first field names the section.
            let mut w = csv::WriterBuilder::new().flexible(true).from_writer(&mut *out);
            w.write_record(["section", "degree", "weight", "multiplicity", "total_dim"])?;
            for s in &rep.trace.0 {
                if s.summands.is_empty() {
                    w.write_record(["trace".into(), s.degree.to_string(), String::new(), "0".into(), s.total_dim.to_string()])?;
                }
                for x in &s.summands {
                    w.write_record([
                        "trace".into(),
                        s.degree.to_string(),
                        x.weight.to_string(),
                        x.multiplicity.to_string(),
                        s.total_dim.to_string(),
                    ])?;
                }
            }
            w.write_record(["section", "quantity", "weighting", "formula", "measured", "slope", "status"])?;
            for g in &rep.growth {
                w.write_record([
                    "growth".into(),
                    g.quantity.to_string(),
                    g.weighting.to_string(),
                    g.formula.to_string(),
                    g.measured.map(|v| v.to_string()).unwrap_or_default(),
                    g.slope.map(|v| format!("{v:.6}")).unwrap_or_default(),
                    g.status.as_str().to_string(),
                ])?;
            }
            if let Some(kl) = &rep.kl {
                w.write_record(["section", "lambda", "mu", "p", "constant_term_one", "degree_le_1", "p_at_1_le_1"])?;
                for r in kl {
                    w.write_record([
                        "kl".into(),
                        r.lambda.to_string(),
                        r.mu.to_string(),
                        r.p.clone(),
                        r.constant_term_one.to_string(),
                        r.degree_le_1.to_string(),
                        r.p_at_1_le_1.to_string(),
                    ])?;
                }
            }
            w.flush()?;
        }
    }
    if rep.growth.iter().any(|g| g.status == Status::Disagree) {
        return Err(CliError::internal("measured growth disagrees with the closed form"));
    }
    if rep.kl.iter().flatten().any(|r| !r.ok()) {
        return Err(CliError::internal("a KL polynomial violates the expected constraints"));
    }
    Ok(())
}

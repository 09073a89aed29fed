use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;

use glmn_core::ehrhart::{
    count_range, eval_poly, fit_quasipolynomial, k1_degenerate_point, lower_bound_poly, loglog_slope, max_dilation,
    period_bound, Poly, QuasiPolynomial,
};
use glmn_core::Rational;
use serde::Serialize;

use super::write_json;
use crate::error::{CliError, CliResult};
use crate::Format;

/// Default fit range for `k = 2`; the period-32 structure needs this many counts.
pub const K2_FIT_DMAX: u64 = 400;

/// Slope window reported alongside the table.
pub const SLOPE_WINDOW: (u64, u64) = (30, 60);

#[derive(Clone, Debug)]
pub struct EhrhartConfig {
    pub k: usize,
    pub dmin: u64,
    pub dmax: u64,
    pub fit_dmax: Option<u64>,
    pub qp_out: Option<PathBuf>,
}

#[derive(Clone, Debug, Serialize)]
pub struct EhrhartRow {
    pub d: u64,
    pub count: u64,
    /// `Q(d)` as an exact rational, absent when no fit is available.
    pub q_lower: Option<String>,
    pub count_ge_q: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct EhrhartReport {
    pub k: usize,
    pub rows: Vec<EhrhartRow>,
    pub quasipolynomial: Option<QuasiPolynomial>,
    pub lower_bound: Option<Vec<String>>,
    pub loglog_slope: Option<f64>,
    pub warnings: Vec<String>,
}

#[derive(Serialize)]
struct DegenerateReport {
    k: usize,
    points: Vec<[i64; 2]>,
}

fn rat(x: &Rational) -> String {
    x.to_string()
}

pub fn report(cfg: &EhrhartConfig) -> CliResult<EhrhartReport> {
    let k = cfg.k;
    let cap = max_dilation(k).ok_or_else(|| CliError::domain(format!("k = {k} is not supported (use 2 or 3)")))?;
    if cfg.dmin == 0 || cfg.dmin > cfg.dmax {
        return Err(CliError::usage(format!("empty dilation range {}..={}", cfg.dmin, cfg.dmax)));
    }
    let mut warnings = Vec::new();
    let mut dmax = cfg.dmax;
    if dmax > cap {
        warnings.push(format!("dmax {dmax} truncated to {cap}"));
        dmax = cap;
    }
    if cfg.dmin > dmax {
        return Err(CliError::domain(format!("dmin {} exceeds the largest supported dilation {cap}", cfg.dmin)));
    }
    let mut fit_dmax = cfg.fit_dmax.unwrap_or(if k == 2 { K2_FIT_DMAX } else { dmax });
    if fit_dmax > cap {
        warnings.push(format!("fit-dmax {fit_dmax} truncated to {cap}"));
        fit_dmax = cap;
    }

    let all = count_range(k, 1..=dmax.max(fit_dmax))?;
    let fit_counts: BTreeMap<u64, u64> = all.range(1..=fit_dmax).map(|(&d, &c)| (d, c)).collect();
    let qp = match fit_quasipolynomial(&fit_counts, k, period_bound(k)?) {
        Ok(qp) => Some(qp),
        Err(e) => {
            warnings.push(format!("no quasipolynomial fit: {e}"));
            None
        }
    };
    let lower: Option<Poly> = qp.as_ref().map(lower_bound_poly);

    let rows = all
        .range(cfg.dmin..=dmax)
        .map(|(&d, &count)| {
            let ql = lower.as_ref().map(|p| eval_poly(p, d as i64));
            EhrhartRow {
                d,
                count,
                count_ge_q: ql.as_ref().map(|v| Rational::from_integer(count.into()) >= *v),
                q_lower: ql.as_ref().map(rat),
            }
        })
        .collect();

    let (lo, hi) = SLOPE_WINDOW;
    let slope = if dmax >= hi { loglog_slope(&all, lo, hi) } else { None };
    Ok(EhrhartReport {
        k,
        rows,
        lower_bound: lower.as_ref().map(|p| p.iter().map(rat).collect()),
        quasipolynomial: qp,
        loglog_slope: slope,
        warnings,
    })
}

pub const CSV_HEADER: [&str; 4] = ["d", "count", "q_lower", "count_ge_q"];

pub fn run(cfg: &EhrhartConfig, format: Format, out: &mut dyn Write) -> CliResult<()> {
    if cfg.k == 0 {
        return Err(CliError::usage("k must be at least 1"));
    }
    if cfg.k == 1 {
        // The k = 1 polytope collapses to a single point.
        let [b, a] = k1_degenerate_point();
        match format {
            Format::Json => write_json(out, &DegenerateReport { k: 1, points: vec![[b, a]] })?,
            Format::Csv => {
                let mut w = csv::Writer::from_writer(&mut *out);
                w.write_record(["b1", "a1"])?;
                w.write_record([b.to_string(), a.to_string()])?;
                w.flush()?;
            }
        }
        return Ok(());
    }

    let rep = report(cfg)?;
    if let (Some(path), Some(qp)) = (&cfg.qp_out, &rep.quasipolynomial) {
        let text = serde_json::to_string_pretty(qp)?;
        std::fs::write(path, text + "\n")
            .map_err(|e| CliError::usage(format!("cannot write {}: {e}", path.display())))?;
    }
    match format {
        Format::Json => write_json(out, &rep)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(CSV_HEADER)?;
            for r in &rep.rows {
                w.write_record([
                    r.d.to_string(),
                    r.count.to_string(),
                    r.q_lower.clone().unwrap_or_default(),
                    r.count_ge_q.map(|b| b.to_string()).unwrap_or_default(),
                ])?;
            }
            for msg in &rep.warnings {
                w.write_record(["warning", msg.as_str(), "", ""])?;
            }
            w.flush()?;
        }
    }
    if rep.rows.iter().any(|r| r.count_ge_q == Some(false)) {
        return Err(CliError::internal("a lattice count fell below the lower-bound polynomial"));
    }
    Ok(())
}

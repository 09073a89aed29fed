use std::io::Write;

use glmn_core::weight::{atypicality, is_dominant, length, naive_length};
use glmn_core::{BlockDescriptor, Weight};
use rayon::prelude::*;
use serde::Serialize;

use super::{first_error, join, write_json};
use crate::error::{CliError, CliResult};
use crate::{Format, WeightSpec};

#[derive(Clone, Debug, Serialize)]
pub struct ClassifyRow {
    pub weight: Weight,
    pub dominant: bool,
    #[serde(flatten)]
    pub block: BlockDescriptor,
    pub naive_length: i64,
    pub length: i64,
}

pub fn classify(lam: &Weight) -> CliResult<ClassifyRow> {
    let block = atypicality(lam)?;
    Ok(ClassifyRow {
        weight: lam.clone(),
        dominant: is_dominant(lam),
        length: length(lam)?,
        naive_length: naive_length(lam),
        block,
    })
}

pub const CSV_HEADER: [&str; 10] =
    ["m", "n", "weight", "dominant", "k", "omega", "core_left", "core_right", "naive_length", "length"];

pub fn run(spec: &WeightSpec, format: Format, out: &mut dyn Write) -> CliResult<()> {
    let weights = spec.resolve()?;
    let results: Vec<CliResult<ClassifyRow>> = weights.par_iter().map(classify).collect();
    let mut rows = Vec::new();
    let mut errors: Vec<CliError> = Vec::new();
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
            w.write_record(CSV_HEADER)?;
            for r in &rows {
                let p = r.weight.params();
                let omega: Vec<String> = r.block.omega.iter().map(|a| format!("({},{})", a.i, a.j)).collect();
                w.write_record([
                    p.m().to_string(),
                    p.n().to_string(),
                    join(r.weight.coeffs(), " "),
                    r.dominant.to_string(),
                    r.block.atypicality.to_string(),
                    omega.join(" "),
                    join(&r.block.core_left, " "),
                    join(&r.block.core_right, " "),
                    r.naive_length.to_string(),
                    r.length.to_string(),
                ])?;
            }
            w.flush()?;
        }
    }
    first_error(errors)
}

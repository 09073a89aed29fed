use std::io::Write;

use serde::Serialize;

use crate::error::{CliError, CliResult};
use crate::Command;

pub mod classify;
pub mod ehrhart;
pub mod invariants;
pub mod resolve;

pub fn dispatch(command: Command, out: &mut dyn Write) -> CliResult<()> {
    match command {
        Command::Classify { spec, format } => classify::run(&spec, format, out),
        Command::Invariants { spec, kind, verify, format } => invariants::run(&spec, kind, verify, format, out),
        Command::Ehrhart { k, dmin, dmax, fit_dmax, qp_out, format } => {
            ehrhart::run(&ehrhart::EhrhartConfig { k, dmin, dmax, fit_dmax, qp_out }, format, out)
        }
        Command::Resolve { kind, m, n, weight, depth, kl_window, format } => {
            resolve::run(&resolve::ResolveConfig { kind, m, n, weight, depth, kl_window }, format, out)
        }
    }
}

pub(crate) fn write_json<T: Serialize>(out: &mut dyn Write, value: &T) -> CliResult<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

pub(crate) fn join<T: ToString>(items: &[T], sep: &str) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}

/// First error of the batch after all successful rows have been written.
pub(crate) fn first_error(errors: Vec<CliError>) -> CliResult<()> {
    match errors.into_iter().next() {
        Some(e) => Err(e),
        None => Ok(()),
    }
}

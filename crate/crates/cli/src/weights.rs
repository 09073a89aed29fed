//! Weight specifications: inline lists, files, and seeded samples from grids.

use std::path::Path;

use glmn_core::{SuperParams, Weight};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{CliError, CliResult};

/// Largest grid the CLI will expand.
pub const MAX_GRID: usize = 100_000;

/// Parses `"1,0,-2"`; whitespace around entries is ignored.
pub fn parse_coeffs(s: &str) -> CliResult<Vec<i64>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| CliError::usage(format!("malformed weight `{s}`: `{}` is not an integer", t.trim())))
        })
        .collect()
}

pub fn parse_weight(params: SuperParams, s: &str) -> CliResult<Weight> {
    let coeffs = parse_coeffs(s)?;
    if coeffs.len() != params.rank() {
        return Err(CliError::usage(format!(
            "weight `{s}` has {} entries, gl({}|{}) needs {}",
            coeffs.len(),
            params.m(),
            params.n(),
            params.rank()
        )));
    }
    Ok(Weight::new(params, coeffs)?)
}

/// One weight per line; blank lines and lines starting with `#` are skipped.
pub fn read_weights_file(params: SuperParams, path: &Path) -> CliResult<Vec<Weight>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| parse_weight(params, l))
        .collect()
}

/// `"lo:hi"` or `"lo..hi"`, inclusive.
pub fn parse_range(s: &str) -> CliResult<(i64, i64)> {
    let (a, b) = s
        .split_once("..")
        .or_else(|| s.split_once(':'))
        .ok_or_else(|| CliError::usage(format!("malformed range `{s}` (expected lo:hi)")))?;
    let lo = a.trim().parse().map_err(|_| CliError::usage(format!("malformed range `{s}`")))?;
    let hi = b.trim().parse().map_err(|_| CliError::usage(format!("malformed range `{s}`")))?;
    if lo > hi {
        return Err(CliError::usage(format!("empty range `{s}`")));
    }
    Ok((lo, hi))
}

fn decreasing(len: usize, lo: i64, hi: i64, out: &mut Vec<Vec<i64>>, cur: &mut Vec<i64>) -> CliResult<()> {
    if cur.len() == len {
        if out.len() >= MAX_GRID {
            return Err(CliError::usage(format!("grid exceeds {MAX_GRID} weights")));
        }
        out.push(cur.clone());
        return Ok(());
    }
    let top = cur.last().copied().unwrap_or(hi);
    for v in (lo..=top).rev() {
        cur.push(v);
        decreasing(len, lo, hi, out, cur)?;
        cur.pop();
    }
    Ok(())
}

/// All dominant weights with every coefficient in `[lo, hi]`, in a fixed order.
pub fn dominant_grid(params: SuperParams, lo: i64, hi: i64) -> CliResult<Vec<Weight>> {
    let mut left = Vec::new();
    let mut right = Vec::new();
    decreasing(params.m(), lo, hi, &mut left, &mut Vec::new())?;
    decreasing(params.n(), lo, hi, &mut right, &mut Vec::new())?;
    if left.len().saturating_mul(right.len()) > MAX_GRID {
        return Err(CliError::usage(format!("grid exceeds {MAX_GRID} weights")));
    }
    let mut out = Vec::with_capacity(left.len() * right.len());
    for a in &left {
        for b in &right {
            let mut c = a.clone();
            c.extend(b);
            out.push(Weight::new(params, c)?);
        }
    }
    Ok(out)
}

/// `count` distinct grid points drawn with a seeded ChaCha8 generator.
pub fn sample(mut grid: Vec<Weight>, count: usize, seed: u64) -> Vec<Weight> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    grid.shuffle(&mut rng);
    grid.truncate(count);
    grid
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(m: usize, n: usize) -> SuperParams {
        SuperParams::new(m, n).unwrap()
    }

    #[test]
    fn parsing() {
        assert_eq!(parse_coeffs(" 1, 0 ,-2").unwrap(), vec![1, 0, -2]);
        assert!(parse_coeffs("1,x").is_err());
        assert_eq!(parse_weight(p(2, 1), "0,0,0").unwrap().coeffs(), &[0, 0, 0]);
        assert_eq!(parse_weight(p(2, 1), "0,0").unwrap_err().code, crate::error::EXIT_USAGE);
        assert_eq!(parse_range("-2:3").unwrap(), (-2, 3));
        assert_eq!(parse_range("0..1").unwrap(), (0, 1));
        assert!(parse_range("3:1").is_err());
    }

    #[test]
    fn grid_is_dominant_and_complete() {
        let g = dominant_grid(p(2, 1), -1, 1).unwrap();
        // 6 non-increasing pairs times 3 values.
        assert_eq!(g.len(), 18);
        assert!(g.iter().all(glmn_core::weight::is_dominant));
    }

    #[test]
    fn sampling_is_seeded() {
        let g = dominant_grid(p(2, 2), -2, 2).unwrap();
        let a = sample(g.clone(), 5, 7);
        assert_eq!(a, sample(g.clone(), 5, 7));
        assert_ne!(a, sample(g, 5, 8));
    }
}

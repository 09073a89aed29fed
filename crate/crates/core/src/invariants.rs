//! Closed-form complexity, z-invariant and support-variety dimensions for
//! Kac, dual Kac and simple modules. Everything here depends on the weight
//! only through its atypicality; measured counterparts live in [`crate::oracle`].

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weight::{atypicality, SuperParams, Weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModuleKind {
    Kac,
    DualKac,
    Simple,
}

impl ModuleKind {
    pub const ALL: [ModuleKind; 3] = [ModuleKind::Kac, ModuleKind::DualKac, ModuleKind::Simple];

    pub fn as_str(&self) -> &'static str {
        match self {
            ModuleKind::Kac => "kac",
            ModuleKind::DualKac => "dualkac",
            ModuleKind::Simple => "simple",
        }
    }
}

impl fmt::Display for ModuleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ModuleKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "kac" => Ok(ModuleKind::Kac),
            "dualkac" | "dual-kac" | "dual_kac" => Ok(ModuleKind::DualKac),
            "simple" => Ok(ModuleKind::Simple),
            other => Err(Error::Parameter(format!(
                "unknown module kind `{other}` (expected kac, dualkac or simple)"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct InvariantReport {
    pub complexity: usize,
    pub z_invariant: usize,
    #[serde(rename = "dim_X")]
    pub dim_x: usize,
    #[serde(rename = "dim_V_g_g0")]
    pub dim_v_g_g0: usize,
    #[serde(rename = "dim_V_f_f0")]
    pub dim_v_f_f0: usize,
    pub dim_rank_plus: usize,
    pub dim_rank_minus: usize,
}

/// Dimension of the variety of `m × n` matrices of rank at most `r`.
pub fn rank_orbit_closure_dim(params: SuperParams, r: usize) -> Result<usize> {
    if r > params.n() {
        return Err(Error::Domain(format!("rank {r} exceeds n = {}", params.n())));
    }
    Ok(params.rank() * r - r * r)
}

fn atyp(lam: &Weight) -> Result<usize> {
    Ok(atypicality(lam)?.atypicality)
}

pub fn complexity_for_atypicality(kind: ModuleKind, params: SuperParams, k: usize) -> Result<usize> {
    let base = rank_orbit_closure_dim(params, k)?;
    Ok(match kind {
        ModuleKind::Kac | ModuleKind::DualKac => base,
        ModuleKind::Simple => base + k,
    })
}

pub fn complexity(kind: ModuleKind, lam: &Weight) -> Result<usize> {
    complexity_for_atypicality(kind, lam.params(), atyp(lam)?)
}

pub fn z_for_atypicality(kind: ModuleKind, k: usize) -> usize {
    match kind {
        ModuleKind::Kac | ModuleKind::DualKac => k,
        ModuleKind::Simple => 2 * k,
    }
}

pub fn z_invariant(kind: ModuleKind, lam: &Weight) -> Result<usize> {
    Ok(z_for_atypicality(kind, atyp(lam)?))
}

/// Ranks `(r_+, r_-)` of the generic points of the `g_{±1}` supports. Read
/// inside the detecting subalgebra these are also the `f_{±1}` coordinates.
pub fn rank_split(kind: ModuleKind, k: usize) -> (usize, usize) {
    match kind {
        ModuleKind::Kac => (k, 0),
        ModuleKind::DualKac => (0, k),
        ModuleKind::Simple => (k, k),
    }
}

pub fn report_for_atypicality(kind: ModuleKind, params: SuperParams, k: usize) -> Result<InvariantReport> {
    let dim_x = rank_orbit_closure_dim(params, k)?;
    let dim_v_g_g0 = match kind {
        ModuleKind::Kac | ModuleKind::DualKac => 0,
        ModuleKind::Simple => k,
    };
    let (r_plus, r_minus) = rank_split(kind, k);
    Ok(InvariantReport {
        complexity: complexity_for_atypicality(kind, params, k)?,
        z_invariant: z_for_atypicality(kind, k),
        dim_x,
        dim_v_g_g0,
        dim_v_f_f0: z_for_atypicality(kind, k),
        dim_rank_plus: rank_orbit_closure_dim(params, r_plus)?,
        dim_rank_minus: rank_orbit_closure_dim(params, r_minus)?,
    })
}

pub fn variety_dims(kind: ModuleKind, lam: &Weight) -> Result<InvariantReport> {
    report_for_atypicality(kind, lam.params(), atyp(lam)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(m: usize, n: usize, c: &[i64]) -> Weight {
        Weight::new(SuperParams::new(m, n).unwrap(), c.to_vec()).unwrap()
    }

    #[test]
    fn kind_parsing() {
        assert_eq!("Kac".parse::<ModuleKind>().unwrap(), ModuleKind::Kac);
        assert_eq!("dualkac".parse::<ModuleKind>().unwrap(), ModuleKind::DualKac);
        assert!("verma".parse::<ModuleKind>().is_err());
        assert_eq!(serde_json::to_string(&ModuleKind::DualKac).unwrap(), "\"dualkac\"");
    }

    #[test]
    fn orbit_dims() {
        let p22 = SuperParams::new(2, 2).unwrap();
        assert_eq!(rank_orbit_closure_dim(p22, 1).unwrap(), 3);
        assert_eq!(rank_orbit_closure_dim(p22, 0).unwrap(), 0);
        for k in 1..6 {
            let p = SuperParams::new(k, k).unwrap();
            assert_eq!(rank_orbit_closure_dim(p, k).unwrap(), k * k);
        }
        assert!(rank_orbit_closure_dim(p22, 3).is_err());
    }

    #[test]
    fn complexity_examples() {
        let lam = w(1, 1, &[3, -3]);
        assert_eq!(complexity(ModuleKind::Simple, &lam).unwrap(), 2);
        assert_eq!(complexity(ModuleKind::Kac, &lam).unwrap(), 1);
        let typical = w(2, 1, &[1, 1, 0]);
        for kind in ModuleKind::ALL {
            assert_eq!(complexity(kind, &typical).unwrap(), 0);
            assert_eq!(z_invariant(kind, &typical).unwrap(), 0);
        }
        let p32 = SuperParams::new(3, 2).unwrap();
        assert_eq!(complexity_for_atypicality(ModuleKind::Simple, p32, 2).unwrap(), 8);
    }

    #[test]
    fn z_examples() {
        let lam = w(1, 1, &[0, 0]);
        assert_eq!(z_invariant(ModuleKind::Simple, &lam).unwrap(), 2);
        assert_eq!(z_invariant(ModuleKind::Kac, &lam).unwrap(), 1);
        let zero33 = Weight::zero(SuperParams::new(3, 3).unwrap());
        assert_eq!(z_invariant(ModuleKind::Simple, &zero33).unwrap(), 6);
    }

    #[test]
    fn report_examples() {
        let zero = w(2, 1, &[0, 0, 0]);
        let kac = variety_dims(ModuleKind::Kac, &zero).unwrap();
        assert_eq!((kac.complexity, kac.dim_x, kac.dim_v_g_g0), (2, 2, 0));
        assert_eq!((kac.dim_rank_plus, kac.dim_rank_minus), (2, 0));
        let simple = variety_dims(ModuleKind::Simple, &zero).unwrap();
        assert_eq!((simple.complexity, simple.dim_x, simple.dim_v_g_g0), (3, 2, 1));
        let typical = variety_dims(ModuleKind::Simple, &w(2, 1, &[1, 1, 0])).unwrap();
        assert_eq!(typical, report_for_atypicality(ModuleKind::Kac, zero.params(), 0).unwrap());
        assert_eq!(typical.complexity + typical.dim_rank_plus + typical.dim_v_f_f0, 0);
        let v = serde_json::to_value(kac).unwrap();
        assert_eq!(v.as_object().unwrap().len(), 7);
        assert_eq!(v["dim_X"], 2);
    }
}

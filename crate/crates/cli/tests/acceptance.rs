//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use glmn_cli::commands::ehrhart::{self, EhrhartConfig};
use glmn_cli::commands::invariants::Status;
use glmn_cli::commands::resolve::{self, ResolveConfig};
use glmn_core::dimension::{cauchy_multiplicity, kac_ext_trivial, projective_dim_bounds};
use glmn_core::ehrhart::{count_range, loglog_slope};
use glmn_core::invariants::{complexity_for_atypicality, rank_orbit_closure_dim, report_for_atypicality, variety_dims};
use glmn_core::oracle::gl11::{gl11_projective, kl_poly_gl11, measured_growth, Gl11Target, Resolution, Weighting};
use glmn_core::oracle::kac::kac_module;
use glmn_core::oracle::rank::{rank_variety, Side};
use glmn_core::suzhang::{build_s, check_pair_conditions};
use glmn_core::weight::{naive_length, principal_weight};
use glmn_core::{ModuleKind, SuperParams, Weight};
use num_bigint::BigUint;
use num_traits::Signed;

const RESOLVE_DEPTH: usize = 15;
const SLOPE_RANGE: (f64, f64) = (2.85, 3.15);
const KL_WINDOW: i64 = 8;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, start: Instant) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {:.1} s, limit {} s", t.as_secs_f64(), limit.as_secs()))
}

fn gl11_resolve(kind: ModuleKind) -> Result<resolve::ResolveReport, String> {
    let cfg = ResolveConfig { kind, m: 1, n: 1, weight: "0".into(), depth: RESOLVE_DEPTH, kl_window: 0 };
    resolve::report(&cfg).map_err(|e| e.to_string())
}

fn gl11_complexity() -> Outcome {
    let start = Instant::now();
    let mut seen = Vec::new();
    for (kind, want) in [(ModuleKind::Simple, 2), (ModuleKind::Kac, 1)] {
        let rep = gl11_resolve(kind)?;
        let c = rep.growth.iter().find(|g| g.quantity == "complexity").ok_or("no complexity row")?;
        ensure(c.measured == Some(want) && c.status == Status::Agree, || {
            format!("{kind}(0): measured {:?}, expected {want}", c.measured)
        })?;
        seen.push(format!("{kind}(0) rate {want}"));
    }
    within(Duration::from_secs(10), start)?;
    Ok(seen.join(", "))
}

fn gl11_z_invariant() -> Outcome {
    let mut seen = Vec::new();
    for (target, want) in [(Gl11Target::Simple(0), 2), (Gl11Target::Kac(0), 1)] {
        let trace = Resolution::of_target(target, RESOLVE_DEPTH).map_err(|e| e.to_string())?.trace();
        let z = measured_growth(&trace, Weighting::Unit).map_err(|e| e.to_string())?.rate;
        let c = measured_growth(&trace, Weighting::ByDimP).map_err(|e| e.to_string())?.rate;
        ensure(z == want && z == c, || format!("{target:?}: unit {z}, by dim {c}, expected {want}"))?;
        seen.push(format!("{target:?} z = c = {z}"));
    }
    Ok(seen.join(", "))
}

fn projective_dimension() -> Outcome {
    let dim = gl11_projective(0).dim();
    let bounds = projective_dim_bounds(&principal_weight(&[0]).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    ensure(dim == 4, || format!("dim P(0) = {dim}"))?;
    ensure(bounds.contains(&BigUint::from(dim)), || format!("{dim} outside [{}, {}]", bounds.lower, bounds.upper))?;
    Ok(format!("dim P(0) = 4 in [{}, {}]", bounds.lower, bounds.upper))
}

fn weight(m: usize, n: usize, c: &[i64]) -> Result<Weight, String> {
    Weight::new(SuperParams::new(m, n).map_err(|e| e.to_string())?, c.to_vec()).map_err(|e| e.to_string())
}

fn rank_varieties() -> Outcome {
    let start = Instant::now();
    let lam = weight(2, 1, &[0, 0, 0])?;
    let module = kac_module(&lam).map_err(|e| e.to_string())?;
    let plus = rank_variety(&module, Side::Plus).map_err(|e| e.to_string())?;
    let minus = rank_variety(&module, Side::Minus).map_err(|e| e.to_string())?;
    ensure((plus, minus) == (1, 0), || format!("gl(2|1) K(0) ranks ({plus}, {minus})"))?;
    let p = lam.params();
    let dims = (
        rank_orbit_closure_dim(p, plus).map_err(|e| e.to_string())?,
        rank_orbit_closure_dim(p, minus).map_err(|e| e.to_string())?,
    );
    ensure(dims == (2, 0), || format!("gl(2|1) K(0) dims {dims:?}"))?;
    let rep = variety_dims(ModuleKind::Kac, &lam).map_err(|e| e.to_string())?;
    ensure(rep.complexity == 2 && rep.dim_x == 2 && rep.dim_v_g_g0 == 0, || format!("gl(2|1) K(0) report {rep:?}"))?;

    let lam = weight(2, 2, &[0, 0, 0, 0])?;
    let module = kac_module(&lam).map_err(|e| e.to_string())?;
    let plus = rank_variety(&module, Side::Plus).map_err(|e| e.to_string())?;
    let dim = rank_orbit_closure_dim(lam.params(), plus).map_err(|e| e.to_string())?;
    ensure(plus == 2 && dim == 4, || format!("gl(2|2) K(0) rank {plus}, dim {dim}"))?;
    within(Duration::from_secs(60), start)?;
    Ok("gl(2|1) K(0) ranks (1, 0) dims (2, 0) c = 2 + 0; gl(2|2) K(0) rank 2 dim 4".into())
}

fn k2_counts() -> Result<BTreeMap<u64, u64>, String> {
    count_range(2, 1..=60).map_err(|e| e.to_string())
}

fn polytope_lower_bound() -> Outcome {
    let start = Instant::now();
    let cfg = EhrhartConfig { k: 2, dmin: 1, dmax: 60, fit_dmax: None, qp_out: None };
    let rep = ehrhart::report(&cfg).map_err(|e| e.to_string())?;
    let qp = rep.quasipolynomial.as_ref().ok_or_else(|| format!("no fit: {:?}", rep.warnings))?;
    ensure(qp.degree() == Some(3), || format!("degree {:?}", qp.degree()))?;
    let lc = qp.leading_coefficient().ok_or("constituents do not share a leading coefficient")?;
    ensure(lc.is_positive(), || format!("leading coefficient {lc}"))?;
    ensure(rep.rows.len() == 60, || format!("{} rows", rep.rows.len()))?;
    for r in &rep.rows {
        ensure(qp.eval(r.d) == glmn_core::Rational::from_integer(r.count.into()), || {
            format!("residual at d = {}: count {} vs {}", r.d, r.count, qp.eval(r.d))
        })?;
        ensure(r.count_ge_q == Some(true), || format!("count {} below Q at d = {}", r.count, r.d))?;
    }
    within(Duration::from_secs(300), start)?;
    Ok(format!("period {}, degree 3, leading coefficient {lc}, zero residual and count >= Q on d = 1..60", qp.period))
}

fn growth_exponent() -> Outcome {
    let counts = k2_counts()?;
    let slope = loglog_slope(&counts, 30, 60).ok_or("degenerate slope window")?;
    let (lo, hi) = SLOPE_RANGE;
    ensure((lo..=hi).contains(&slope), || format!("slope {slope:.4} outside [{lo}, {hi}]"))?;
    Ok(format!("slope {slope:.4}"))
}

fn ext_trivial_equivalence() -> Outcome {
    let mut checked = 0;
    for x1 in -12..=12 {
        for x2 in -12..=x1 {
            let sigma = principal_weight(&[x1, x2]).map_err(|e| e.to_string())?;
            if naive_length(&sigma) < -6 {
                continue;
            }
            for d in 0..=6usize {
                let t = kac_ext_trivial(&sigma, d).map_err(|e| e.to_string())? as usize;
                let c = cauchy_multiplicity(&sigma, d).map_err(|e| e.to_string())?;
                ensure(t == c, || format!("σ = {sigma}, d = {d}: {t} vs {c}"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} (σ, d) cases agree"))
}

fn kl_constraints() -> Outcome {
    let mut nonzero = 0;
    for lam in -KL_WINDOW..=KL_WINDOW {
        for mu in -KL_WINDOW..=KL_WINDOW {
            let p = kl_poly_gl11(lam, mu).map_err(|e| e.to_string())?;
            if p.is_zero() {
                continue;
            }
            nonzero += 1;
            ensure(p.coefficient(0) == 1, || format!("p_{{{lam},{mu}}} = {p}: constant term"))?;
            ensure(p.min_exponent() >= Some(0) && p.degree() <= Some(1), || format!("p_{{{lam},{mu}}} = {p}: degree"))?;
            ensure(p.at_one() <= 1, || format!("p_{{{lam},{mu}}} = {p}: p(1) = {}", p.at_one()))?;
        }
    }
    Ok(format!("{nonzero} nonzero polynomials over |λ|, |μ| <= {KL_WINDOW}"))
}

fn pair_sets() -> Outcome {
    let params = SuperParams::new(2, 2).map_err(|e| e.to_string())?;
    let mut sizes = Vec::new();
    for d in [20u64, 33, 40] {
        let set = build_s(params, 2, d).map_err(|e| e.to_string())?;
        let lattice = glmn_core::ehrhart::count_lattice_points(2, d).map_err(|e| e.to_string())?;
        ensure(set.pairs.len() as u64 == lattice, || format!("d = {d}: |S| = {} vs {lattice}", set.pairs.len()))?;
        for pair in &set.pairs {
            ensure(check_pair_conditions(pair, d, params, 2).map_err(|e| e.to_string())?, || {
                format!("d = {d}: pair ({}, {}) fails", pair.mu, pair.sigma)
            })?;
        }
        sizes.push(format!("|S({d})| = {lattice}"));
    }
    Ok(sizes.join(", "))
}

fn complexity_identity() -> Outcome {
    let mut checked = 0;
    for m in 1..=4 {
        for n in 1..=m {
            let params = SuperParams::new(m, n).map_err(|e| e.to_string())?;
            for k in 0..=n {
                for kind in ModuleKind::ALL {
                    let r = report_for_atypicality(kind, params, k).map_err(|e| e.to_string())?;
                    let c = complexity_for_atypicality(kind, params, k).map_err(|e| e.to_string())?;
                    ensure(c == r.dim_x + r.dim_v_g_g0 && c == r.complexity, || {
                        format!("gl({m}|{n}) {kind} k = {k}: c = {c}, dim X = {}, dim V = {}", r.dim_x, r.dim_v_g_g0)
                    })?;
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} (m, n, k, kind) cases"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("gl(1|1) complexity", gl11_complexity),
        ("gl(1|1) z-invariant", gl11_z_invariant),
        ("projective dimension", projective_dimension),
        ("rank varieties", rank_varieties),
        ("polytope lower bound", polytope_lower_bound),
        ("growth exponent", growth_exponent),
        ("Ext-trivial equivalence", ext_trivial_equivalence),
        ("KL constraints", kl_constraints),
        ("pair set conditions", pair_sets),
        ("complexity identity", complexity_identity),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({secs:.2} s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail} ({secs:.2} s)", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

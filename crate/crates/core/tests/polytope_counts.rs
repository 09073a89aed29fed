use std::collections::BTreeMap;

use glmn_core::ehrhart::{
    build_polytope, count_lattice_points, count_range, enumerate_lattice_points, eval_poly, fit_quasipolynomial,
    interior_witness, lower_bound_poly, max_dilation, period_bound, QuasiPolynomial,
};
use glmn_core::linalg::{q, qfrac};
use glmn_core::suzhang::{build_s, check_pair_conditions};
use glmn_core::SuperParams;

/// `|S̃(d)|` for `k = 2`, `d = 1..=60`, frozen from an exhaustive box scan.
const K2_COUNTS: [u64; 60] = [
    0, 0, 1, 1, 4, 4, 9, 10, 4, 10, 10, 19, 20, 33, 34, 52, 34, 35, 54, 55, 80, 82, 113, 116, 83, 116, 118, 158, 161,
    209, 213, 270, 213, 216, 275, 279, 348, 353, 432, 439, 357, 439, 444, 537, 544, 649, 657, 775, 657, 664, 785, 793,
    928, 938, 1087, 1099, 946, 1099, 1109, 1277,
];

/// Scan of `[−d, 0]^{2k}` against the dilated constraint system.
fn box_scan(k: usize, d: u64) -> u64 {
    let poly = build_polytope(k).unwrap().dilate(d);
    let dim = 2 * k;
    let side = d as i64 + 1;
    let mut count = 0;
    let mut x = vec![0i64; dim];
    for code in 0..side.pow(dim as u32) {
        let mut c = code;
        for xi in x.iter_mut() {
            *xi = -(c % side);
            c /= side;
        }
        if poly.contains_integer(&x) {
            count += 1;
        }
    }
    count
}

#[test]
fn enumerator_matches_box_scan() {
    for d in 1..=16 {
        assert_eq!(count_lattice_points(2, d).unwrap(), box_scan(2, d), "k=2 d={d}");
    }
    for d in 1..=6 {
        assert_eq!(count_lattice_points(3, d).unwrap(), box_scan(3, d), "k=3 d={d}");
    }
}

#[test]
fn frozen_k2_counts() {
    let counts = count_range(2, 1..=60).unwrap();
    let got: Vec<u64> = counts.values().copied().collect();
    assert_eq!(got, K2_COUNTS);
}

#[test]
fn enumerated_points_are_sorted_and_inside() {
    let poly = build_polytope(2).unwrap().dilate(23);
    let pts = enumerate_lattice_points(2, 23).unwrap();
    assert!(pts.windows(2).all(|w| w[0] < w[1]));
    assert!(pts.iter().all(|p| poly.contains_integer(p)));
}

#[test]
fn k2_quasipolynomial() {
    assert_eq!(period_bound(2).unwrap(), 32);
    let counts = count_range(2, 1..=max_dilation(2).unwrap()).unwrap();
    let qp = fit_quasipolynomial(&counts, 2, period_bound(2).unwrap()).unwrap();
    assert_eq!(qp.period, 32);
    assert_eq!(qp.degree(), Some(3));
    assert_eq!(qp.leading_coefficient(), Some(qfrac(241, 49152)));
    for (d, &c) in (1..=60u64).zip(K2_COUNTS.iter()) {
        assert_eq!(qp.eval(d), q(c as i64), "d={d}");
    }
    let lb = lower_bound_poly(&qp);
    assert_eq!(lb.len(), 4);
    for (&d, &c) in &counts {
        assert!(eval_poly(&lb, d as i64) <= q(c as i64), "Q({d}) exceeds the count");
    }

    let json = serde_json::to_string(&qp).unwrap();
    let back: QuasiPolynomial = serde_json::from_str(&json).unwrap();
    assert_eq!(back, qp);
}

#[test]
fn short_ranges_are_rejected_by_the_fit() {
    let counts: BTreeMap<u64, u64> = (1..=60).zip(K2_COUNTS).collect();
    assert!(fit_quasipolynomial(&counts, 2, 8).is_err());
}

#[test]
fn witness_is_interior() {
    for k in 2..=4 {
        let p = build_polytope(k).unwrap();
        assert!(p.strictly_contains(&interior_witness(k).unwrap()), "k={k}");
        assert_eq!(p.inequalities.len(), 3 * k + 2);
    }
}

#[test]
fn pair_sets_match_lattice_counts() {
    for (m, n) in [(2, 2), (3, 2), (4, 3)] {
        let params = SuperParams::new(m, n).unwrap();
        for d in [8u64, 20, 33, 40] {
            let set = build_s(params, 2, d).unwrap();
            assert_eq!(set.pairs.len() as u64, count_lattice_points(2, d).unwrap());
            for pair in &set.pairs {
                assert!(check_pair_conditions(pair, d, params, 2).unwrap(), "gl({m}|{n}) d={d} {pair:?}");
            }
        }
    }
    let params = SuperParams::new(3, 3).unwrap();
    for d in [6u64, 9] {
        let set = build_s(params, 3, d).unwrap();
        assert_eq!(set.pairs.len() as u64, count_lattice_points(3, d).unwrap());
        assert!(set.pairs.iter().all(|p| check_pair_conditions(p, d, params, 3).unwrap()));
    }
}

use glmn_core::dimension::{ext_degree_constraint, partitions_at_most_k_parts, partitions_of, weyl_dim_g0};
use glmn_core::invariants::{complexity, variety_dims, z_invariant, ModuleKind};
use glmn_core::weight::{
    atypicality, bilinear_form, bruhat_leq_principal, is_dominant, length, naive_length, principal_weight, rho,
    same_block,
};
use glmn_core::{SuperParams, Weight};
use num_bigint::BigUint;
use num_traits::Zero;
use proptest::prelude::*;

/// Dominant weights of `gl(m|n)` with `n ≤ m ≤ 4` and small coefficients.
fn dominant_weight() -> impl Strategy<Value = Weight> {
    (1usize..=4)
        .prop_flat_map(|m| (Just(m), 1usize..=m))
        .prop_flat_map(|(m, n)| (Just(m), Just(n), prop::collection::vec(-4i64..=4, m + n)))
        .prop_map(|(m, n, mut c)| {
            c[..m].sort_unstable_by(|a, b| b.cmp(a));
            c[m..].sort_unstable_by(|a, b| b.cmp(a));
            Weight::new(SuperParams::new(m, n).unwrap(), c).unwrap()
        })
}

fn principal(k: usize) -> impl Strategy<Value = Weight> {
    prop::collection::vec(-6i64..=6, k).prop_map(|mut x| {
        x.sort_unstable_by(|a, b| b.cmp(a));
        principal_weight(&x).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn atypicality_is_bounded(lam in dominant_weight()) {
        let d = atypicality(&lam).unwrap();
        let p = lam.params();
        prop_assert!(d.atypicality <= p.n());
        prop_assert_eq!(d.omega.len(), d.atypicality);
        prop_assert_eq!(d.core_left.len() + d.atypicality, p.m());
        prop_assert_eq!(d.core_right.len() + d.atypicality, p.n());
        for r in &d.omega {
            let lr = lam.add(&rho(p)).unwrap();
            prop_assert_eq!(bilinear_form(&lr, &r.as_weight(p)).unwrap(), 0);
        }
    }

    #[test]
    fn block_is_stable_under_berezinian(lam in dominant_weight(), c in -3i64..=3) {
        let shifted = lam.add(&Weight::berezinian(lam.params()).scale(c)).unwrap();
        prop_assert!(is_dominant(&shifted));
        prop_assert_eq!(atypicality(&lam).unwrap().atypicality, atypicality(&shifted).unwrap().atypicality);
        prop_assert!(same_block(&lam, &lam).unwrap());
    }

    #[test]
    fn form_is_symmetric(a in dominant_weight(), seed in prop::collection::vec(-3i64..=3, 8)) {
        let p = a.params();
        let b = Weight::new(p, seed[..p.rank()].to_vec()).unwrap();
        prop_assert_eq!(bilinear_form(&a, &b).unwrap(), bilinear_form(&b, &a).unwrap());
    }

    #[test]
    fn weyl_dimension_is_positive_and_shift_invariant(lam in dominant_weight(), c in -3i64..=3) {
        let dim = weyl_dim_g0(&lam).unwrap();
        prop_assert!(!dim.is_zero());
        let shifted = lam.add(&Weight::berezinian(lam.params()).scale(c)).unwrap();
        prop_assert_eq!(weyl_dim_g0(&shifted).unwrap(), dim);
    }

    #[test]
    fn ext_window_is_berezinian_invariant(lam in dominant_weight(), offsets in prop::collection::vec(0i64..=3, 8), c in -3i64..=3, d in 0usize..12) {
        let p = lam.params();
        let mut coeffs = lam.coeffs().to_vec();
        for (x, o) in coeffs.iter_mut().zip(&offsets) {
            *x += o;
        }
        coeffs[..p.m()].sort_unstable_by(|a, b| b.cmp(a));
        coeffs[p.m()..].sort_unstable_by(|a, b| b.cmp(a));
        let mu = Weight::new(p, coeffs).unwrap();
        let ber = Weight::berezinian(p).scale(c);
        prop_assert_eq!(
            ext_degree_constraint(&lam, &mu, d).unwrap(),
            ext_degree_constraint(&lam.add(&ber).unwrap(), &mu.add(&ber).unwrap(), d).unwrap()
        );
    }

    #[test]
    fn complexity_splits_into_varieties(lam in dominant_weight()) {
        for kind in ModuleKind::ALL {
            let r = variety_dims(kind, &lam).unwrap();
            prop_assert_eq!(r.complexity, r.dim_x + r.dim_v_g_g0);
            prop_assert_eq!(r.complexity, complexity(kind, &lam).unwrap());
            prop_assert_eq!(r.z_invariant, z_invariant(kind, &lam).unwrap());
            prop_assert_eq!(r.z_invariant, r.dim_v_f_f0);
            prop_assert!(r.complexity <= lam.params().dim_odd());
        }
    }

    #[test]
    fn principal_length_is_size(lam in principal(3)) {
        prop_assert_eq!(length(&lam).unwrap(), naive_length(&lam));
        prop_assert_eq!(atypicality(&lam).unwrap().atypicality, 3);
    }

    #[test]
    fn bruhat_order_is_a_partial_order(a in principal(2), b in principal(2), c in principal(2)) {
        prop_assert!(bruhat_leq_principal(&a, &a).unwrap());
        if bruhat_leq_principal(&a, &b).unwrap() && bruhat_leq_principal(&b, &a).unwrap() {
            prop_assert_eq!(&a, &b);
        }
        if bruhat_leq_principal(&a, &b).unwrap() && bruhat_leq_principal(&b, &c).unwrap() {
            prop_assert!(bruhat_leq_principal(&a, &c).unwrap());
        }
    }

    #[test]
    fn partition_counts_agree(i in 0usize..25, k in 1usize..5) {
        prop_assert_eq!(partitions_at_most_k_parts(i, k), BigUint::from(partitions_of(i, k).len()));
    }
}

use confalg::modes::{expand_module_modes, module_mode_check};
use confalg::module::m_alpha_delta;
use confalg::Scalar;
use proptest::prelude::*;

fn param() -> impl Strategy<Value = Scalar> {
    (-5i64..5, 1i64..4, -2i64..2).prop_map(|(n, d, i)| &Scalar::from_ratio(n, d) + &(&Scalar::i() * &Scalar::from_int(i)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rank_one_family(alpha in param(), delta in param()) {
        let m = m_alpha_delta(&alpha, &delta);
        prop_assert!(m.check().passed());
        prop_assert_eq!(m.is_irreducible_rank1().unwrap(), !delta.is_zero());
        let rep = m.rep_to_gc().unwrap();
        prop_assert!(rep.is_homomorphism());
    }

    // L_(k) v_(n) = (kΔ - k - n) v_(k+n-1) + α v_(k+n)
    #[test]
    fn rank_one_modes(alpha in param(), delta in param()) {
        let m = m_alpha_delta(&alpha, &delta);
        let t = expand_module_modes(&m, (-4, 4));
        prop_assert!(module_mode_check(&t).passed());
        let mut checked = 0;
        for k in -4..=4i64 {
            for n in -4..=4i64 {
                let got = t.action(t.algebra.space.id(0, k).unwrap(), t.space.id(0, n).unwrap());
                if got.truncated {
                    continue;
                }
                let mut want = std::collections::BTreeMap::new();
                let lower = &(&Scalar::from_int(k) * &delta) - &Scalar::from_int(k + n);
                if let (Some(id), false) = (t.space.id(0, k + n - 1), lower.is_zero()) {
                    want.insert(id, lower);
                }
                if let (Some(id), false) = (t.space.id(0, k + n), alpha.is_zero()) {
                    want.insert(id, alpha.clone());
                }
                prop_assert_eq!(&got.terms, &want, "k={} n={}", k, n);
                checked += 1;
            }
        }
        prop_assert!(checked >= 40, "{} pairs checked", checked);
    }
}

use proptest::prelude::*;
use proptest::sample::select;

use brauer_core::algebra::exact_algebra;
use brauer_core::field::PrimeField;
use brauer_core::idempotent::{
    fusion_idempotent, recurrence_idempotent, specialize_element, IdempotentResult,
};
use brauer_core::tableau::{enumerate_updown, exponents, tableau_statistics};
use brauer_core::{BrauerAlgebra, FieldMode, Partition, UpdownTableau};

fn tableau(max_n: usize) -> impl Strategy<Value = UpdownTableau> {
    (1..=max_n).prop_flat_map(|n| select(enumerate_updown(n, None).unwrap()))
}

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..6, 0..5).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

fn modular(n: usize, prime: u64, omega: u64) -> BrauerAlgebra<PrimeField> {
    BrauerAlgebra::new(n, PrimeField::new(prime).unwrap(), omega, FieldMode::PrimeModular { prime, omega })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn fusion_agrees_with_recurrence(t in tableau(3)) {
        let alg = exact_algebra(t.n());
        let rec = recurrence_idempotent(&alg, &t).unwrap();
        let fus = fusion_idempotent(&alg, &t, false).unwrap();
        prop_assert_eq!(&fus.result.element, &rec.element);
        prop_assert_eq!(&fus.pole_orders, &exponents(&t));
        prop_assert!(alg.is_idempotent(&rec.element));
    }

    #[test]
    fn modular_matches_specialized_exact(
        t in tableau(3),
        prime in select(vec![101u64, 1_000_003, 998_244_353]),
        omega in 0u64..100,
    ) {
        let exact = exact_algebra(t.n());
        let target = modular(t.n(), prime, omega);
        let rec = recurrence_idempotent(&exact, &t).unwrap();
        // A degenerate (p, ω) either fails to specialize or fails modularly.
        let Ok(expected) = specialize_element(&exact, &target, &rec.element) else {
            return Ok(());
        };
        match recurrence_idempotent(&target, &t) {
            Ok(got) => prop_assert_eq!(got.element, expected),
            Err(e) => prop_assert!(e.is_degeneration(), "{e}"),
        }
    }

    #[test]
    fn tableau_text_roundtrips(t in tableau(5)) {
        let back: UpdownTableau = t.to_string().parse().unwrap();
        prop_assert_eq!(&back, &t);
        prop_assert_eq!(UpdownTableau::from_json(&t.to_json()).unwrap(), t);
    }

    #[test]
    fn partition_text_roundtrips(p in partition()) {
        let back: Partition = p.to_string().parse().unwrap();
        prop_assert_eq!(&back, &p);
        prop_assert_eq!(p.conjugate().conjugate(), p);
    }

    #[test]
    fn net_box_count_is_final_shape(t in tableau(6)) {
        let s = tableau_statistics(&t);
        let last = t.final_shape();
        for (cell, added) in &s.m {
            let removed = s.m_prime.get(cell).copied().unwrap_or(0);
            prop_assert_eq!(added - removed, i64::from(last.contains(*cell)));
        }
        prop_assert_eq!(s.m.values().sum::<i64>() + s.m_prime.values().sum::<i64>(), t.n() as i64);
    }

    #[test]
    fn idempotent_json_roundtrips(t in tableau(3)) {
        let alg = exact_algebra(t.n());
        let fus = fusion_idempotent(&alg, &t, false).unwrap().result;
        let back = IdempotentResult::from_json(&alg, &fus.to_json(&alg)).unwrap();
        prop_assert_eq!(back, fus);
    }
}

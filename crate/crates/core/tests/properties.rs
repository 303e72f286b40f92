//! Property tests for the exact scalar layer, the dihedral group and the
//! module relations at randomly drawn rational parameters.

use num_bigint::BigInt;
use proptest::prelude::*;

use cherednik_howe::cherednik::{verify_relations, GramSummary, ModuleContext, RelationSet};
use cherednik_howe::clifford::verify_superalgebra;
use cherednik_howe::dihedral::{sigma_closed, sigma_direct, DihedralGroup, Irrep, Parity};
use cherednik_howe::report::{Entry, Report, Status};
use cherednik_howe::scalars::{field_for, Cyclotomic, ParamValues, Rational};

fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

fn arb_rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=9).prop_map(|(n, d)| rational(n, d))
}

/// A random element of Q(zeta_L) with `L = lcm(4, 2m)`.
fn arb_cyc_in(m: u32) -> impl Strategy<Value = Cyclotomic> {
    let field = field_for(m);
    prop::collection::vec(arb_rational(), field.degree()).prop_map(move |cs| Cyclotomic::from_coefficients(field, &cs))
}

fn arb_triple() -> impl Strategy<Value = (Cyclotomic, Cyclotomic, Cyclotomic)> {
    (3u32..=8).prop_flat_map(|m| (arb_cyc_in(m), arb_cyc_in(m), arb_cyc_in(m)))
}

fn arb_params(m: u32) -> impl Strategy<Value = ParamValues> {
    let split = m % 2 == 0;
    (arb_rational(), arb_rational()).prop_map(move |(a, b)| {
        let b = if split { b } else { a.clone() };
        ParamValues::new(m, a, b).unwrap()
    })
}

// ===== Exact field arithmetic =====

proptest! {
    #[test]
    fn multiplication_commutes_and_distributes((a, b, c) in arb_triple()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }
}

proptest! {
    #[test]
    fn nonzero_elements_are_invertible((a, _, _) in arb_triple()) {
        prop_assume!(!a.is_zero());
        let inv = a.inv().unwrap();
        prop_assert!((&a * &inv).is_one());
    }
}

proptest! {
    #[test]
    fn conjugation_is_an_involutive_automorphism((a, b, _) in arb_triple()) {
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        let lhs = a.conj().to_complex();
        let rhs = a.to_complex().conj();
        prop_assert!((lhs - rhs).norm() <= 1e-9 * (1.0 + rhs.norm()));
    }
}

proptest! {
    #[test]
    fn complex_embedding_is_multiplicative((a, b, _) in arb_triple()) {
        let exact = (&a * &b).to_complex();
        let float = a.to_complex() * b.to_complex();
        prop_assert!((exact - float).norm() <= 1e-9 * (1.0 + float.norm()));
    }
}

// ===== Dihedral group =====

proptest! {
    #[test]
    fn irreps_are_homomorphisms(m in 3u32..=8, i in 0usize..16, j in 0usize..16) {
        let g = DihedralGroup::new(m).unwrap();
        let els = g.elements();
        let (a, b) = (els[i % els.len()], els[j % els.len()]);
        for tau in Irrep::all(m) {
            prop_assert_eq!(tau.matrix(&g, g.mul(a, b)), tau.matrix(&g, a).mul(&tau.matrix(&g, b)));
        }
        prop_assert_eq!(g.mul(a, g.inv(a)), g.identity());
    }
}

proptest! {
    #[test]
    fn sigma_closed_form_matches_direct_sum((m, c) in (3u32..=8).prop_flat_map(|m| (Just(m), arb_params(m))), n in -20i64..20) {
        prop_assert_eq!(sigma_direct(m, n, &c, Parity::All), sigma_closed(m, n, &c, Parity::All));
        if m % 2 == 0 {
            prop_assert_eq!(sigma_direct(m, n, &c, Parity::Even), sigma_closed(m, n, &c, Parity::Even));
            prop_assert_eq!(sigma_direct(m, n, &c, Parity::Odd), sigma_closed(m, n, &c, Parity::Odd));
        }
    }
}

// ===== Module relations at random parameters =====

fn arb_context(max_degree: usize) -> impl Strategy<Value = ModuleContext> {
    (3u32..=6)
        .prop_flat_map(|m| (Just(m), prop::sample::select(Irrep::all(m)), arb_params(m)))
        .prop_map(move |(m, tau, c)| ModuleContext::new(m, tau, c, max_degree).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn scalar_relations_hold_at_random_parameters(ctx in arb_context(4)) {
        for e in verify_relations(&ctx, RelationSet::All).unwrap() {
            prop_assert!(e.status.is_pass(), "{} failed at {}: {:?}", e.id, ctx.label(), e.locus);
        }
    }

    #[test]
    fn superalgebra_holds_at_random_parameters(ctx in arb_context(3)) {
        for e in verify_superalgebra(&ctx).unwrap() {
            prop_assert!(e.status.is_pass(), "{} failed at {}: {:?}", e.id, ctx.label(), e.locus);
        }
    }

    #[test]
    fn contravariant_form_is_hermitian(ctx in arb_context(4)) {
        for k in 0..=4 {
            prop_assert!(GramSummary::compute(&ctx, k).unwrap().hermitian);
        }
    }
}

// ===== Reports =====

proptest! {
    #[test]
    fn reports_round_trip_through_json_and_csv(ids in prop::collection::vec("[a-z]{1,6}\\.k[0-9]", 0..6), flags in prop::collection::vec(0u8..3, 6)) {
        let entries: Vec<Entry> = ids
            .iter()
            .zip(&flags)
            .map(|(id, f)| {
                let status = match f {
                    0 => Status::Pass,
                    1 => Status::Fail,
                    _ => Status::Skipped("resonant, N_c = 1".into()),
                };
                Entry::new(id.clone(), "anchor, with comma", status).with_data(serde_json::json!({ "k": id.len() }))
            })
            .collect();
        let report = Report::new(serde_json::json!({ "m": 3 }), entries);
        let back: Report = serde_json::from_str(&report.to_json()).unwrap();
        prop_assert_eq!(&back, &report);
        let csv = report.to_csv().unwrap();
        prop_assert_eq!(Report::from_csv(&csv).unwrap(), report);
    }
}

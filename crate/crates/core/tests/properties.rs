mod common;

use common::*;
use logmut_core::{
    generic_construction_available, generic_wall_assignment, is_generic, is_smooth_curve,
    is_subordinate, parse_poly, restrict_to_u, sform, BigInt, BigRational, Datum, Error, Limits,
    LogDatum, WallPoly,
};
use proptest::prelude::*;

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        max_global_rejects: 1 << 20,
        ..ProptestConfig::default()
    }
}

proptest! {
    #![proptest_config(config(500))]

    #[test]
    fn mutation_preserves_validity(s in arb_datum(20, 10)) {
        check_mutation_validity(&s).map_err(TestCaseError::fail)?;
    }

    #[test]
    fn mutation_keeps_height(s in arb_datum(20, 10)) {
        check_height_invariance(&s).map_err(TestCaseError::fail)?;
    }

    #[test]
    fn mutation_length_bookkeeping(s in arb_datum(20, 10)) {
        check_length_bookkeeping(&s).map_err(TestCaseError::fail)?;
    }

    #[test]
    fn mutation_is_equivariant(s in arb_datum(20, 10), a in arb_sl2(5)) {
        check_equivariance(&s, &a).map_err(TestCaseError::fail)?;
    }

    #[test]
    fn canonical_form_invariance(s in arb_datum(20, 10), a in arb_sl2(5), shift in 0usize..8) {
        check_canonical(&s, &a, shift).map_err(TestCaseError::fail)?;
    }

    #[test]
    fn certificates_replay(s in arb_datum(20, 10)) {
        let limits = Limits { max_depth: 6, max_states: 1_000, threads: 1 };
        check_certificate(&s, &limits).map_err(TestCaseError::fail)?;
    }

    #[test]
    fn serialization_round_trip(s in arb_datum(20, 10)) {
        let again = LogDatum::validate(s.to_raw()).unwrap();
        prop_assert_eq!(&again, &s);
        let text = logmut_core::datum_to_json(&s).unwrap();
        prop_assert_eq!(logmut_core::datum_from_json::<i128>(&text).unwrap(), s);
    }

    #[test]
    fn polygon_is_closed_and_convex(s in arb_datum(20, 10)) {
        let verts = s.polygon().unwrap();
        let n = verts.len();
        prop_assert_eq!(n, s.len());
        for i in 0..n {
            let e = s.edges()[i].vector();
            let next = verts[i].add(e).unwrap();
            prop_assert_eq!(&next, &verts[(i + 1) % n]);
            let f = s.edges()[(i + 1) % n].vector();
            prop_assert!(sform(e, f).unwrap() > 0);
        }
    }

    #[test]
    fn height_balance(s in arb_datum(20, 10), x in -5i128..=5, y in -5i128..=5) {
        let u = v(x, y);
        let plus = s.u_height(&u).unwrap();
        let minus = s.u_height(&u.neg().unwrap()).unwrap();
        let abs: i128 = s.edges().iter().map(|e| sform(&u, e.vector()).unwrap().abs()).sum();
        prop_assert!(plus >= 0 && minus >= 0);
        prop_assert_eq!(plus + minus, abs);
        prop_assert_eq!(plus, minus);
    }

    #[test]
    fn sorting_is_idempotent(s in arb_datum(20, 10), shift in 0usize..8) {
        let mut raw = s.to_raw();
        let n = raw.len();
        raw.rotate_left(shift % n);
        raw.reverse();
        prop_assert_eq!(LogDatum::validate(raw).unwrap(), s);
    }

    #[test]
    fn irreducibility_matches_subset_oracle(s in arb_datum(20, 10)) {
        prop_assert_eq!(s.is_irreducible().unwrap(), irreducible_oracle(&s));
    }

    #[test]
    fn kinks_are_lengths(s in arb_datum(20, 10)) {
        check_kinks(&s).map_err(TestCaseError::fail)?;
    }

    #[test]
    fn equal_parts_mutate_identically(s in arb_datum(20, 10)) {
        for (j, e) in s.edges().iter().enumerate() {
            let parts = e.partition().parts();
            for k in 1..parts.len() {
                if parts[k] == parts[k - 1] {
                    let a = logmut_core::mutate(&s, logmut_core::MutationIndex::new(j + 1, k));
                    let b = logmut_core::mutate(&s, logmut_core::MutationIndex::new(j + 1, k + 1));
                    prop_assert_eq!(a, b);
                }
            }
        }
    }

    #[test]
    fn shortcut_moves_shrink_total_length(s in arb_datum(20, 10)) {
        let total = |d: &Datum| d.edges().iter().map(|e| *e.length()).sum::<i128>();
        for m in logmut_core::legal_mutations(&s).unwrap() {
            let (h, part) = logmut_core::height_and_part(&s, m).unwrap();
            if 2 * part > h {
                prop_assert!(total(&logmut_core::mutate(&s, m).unwrap()) < total(&s));
            }
        }
    }
}

fn small_poly() -> impl Strategy<Value = WallPoly> {
    prop::collection::vec(((0u32..3, 0u32..3), -4i64..=4), 0..5).prop_map(|terms| {
        WallPoly::from_terms(
            terms
                .into_iter()
                .map(|(k, c)| (k, BigRational::from_integer(BigInt::from(c)))),
        )
    })
}

proptest! {
    #![proptest_config(config(100))]

    #[test]
    fn generic_assignments_verify(s in arb_datum(20, 10), seed in any::<u64>()) {
        let supported = s.edges().iter().all(|e| {
            let parts: Vec<usize> = e.partition().parts().iter().map(|&p| p as usize).collect();
            generic_construction_available(&parts)
        });
        match generic_wall_assignment(&s, seed) {
            Ok(w) => {
                prop_assert!(is_subordinate(&s, &w).unwrap().subordinate);
                prop_assert!(is_generic(&s, &w).unwrap());
            }
            Err(Error::NoGenericAssignment { .. }) => prop_assert!(!supported),
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        }
    }

    #[test]
    fn restriction_is_a_ring_map(f in small_poly(), g in small_poly()) {
        prop_assert_eq!(
            restrict_to_u(&f.mul(&g)),
            restrict_to_u(&f).mul(&restrict_to_u(&g))
        );
        prop_assert_eq!(
            restrict_to_u(&f.add(&g)),
            restrict_to_u(&f).add(&restrict_to_u(&g))
        );
    }
}

/// A smooth verdict is never contradicted by a rational common zero of
/// `f`, `f_x`, `f_u` among sampled points.
#[test]
fn smoothness_agrees_with_sampling() {
    use rand::{Rng, SeedableRng};
    let fixtures = [
        "u",
        "u + x",
        "u^2 + x",
        "u^2 + 3*x",
        "u^3 + x*u - 2*x",
        "u + 1/2*x*u^2 + x^2",
        "u^2 - x^2",
        "u^2 - x^3",
        "u^2",
        "u^3 + 6*x*u^2 + 11*x^2*u + 6*x^3",
        "u^2 - 2*u + 1 - x^3 + x^2 + x - 1",
        "u^2 + x^2 - 2",
        "x^2 - 1",
    ];
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    for text in fixtures {
        let f = parse_poly(text).unwrap();
        let (fx, fu) = (f.d_x(), f.d_u());
        let smooth = is_smooth_curve(&f);
        // the origin and small integers first, then random rationals
        let mut points: Vec<(BigRational, BigRational)> = Vec::new();
        for a in -3..=3 {
            for b in -3..=3 {
                points.push((q(a, 1), q(b, 1)));
            }
        }
        while points.len() < 10_000 {
            points.push((
                q(rng.gen_range(-20..=20), rng.gen_range(1..=6)),
                q(rng.gen_range(-20..=20), rng.gen_range(1..=6)),
            ));
        }
        let witness = points.iter().find(|(x, u)| {
            use num_traits::Zero;
            f.eval(x, u).is_zero() && fx.eval(x, u).is_zero() && fu.eval(x, u).is_zero()
        });
        if smooth {
            assert!(
                witness.is_none(),
                "{text} judged smooth but singular at {witness:?}"
            );
        }
    }
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[test]
fn exhaustive_small_irreducibility() {
    for s in all_small_data(2, 5) {
        assert_eq!(s.is_irreducible().unwrap(), irreducible_oracle(&s), "{s}");
    }
}

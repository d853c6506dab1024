use num_bigint::BigUint;
use num_traits::One;
use proptest::prelude::*;

use subbundle_core::*;

fn pow2(e: u32) -> BigUint {
    BigUint::one() << e as usize
}

fn gcd(mut a: BigUint, mut b: BigUint) -> BigUint {
    while b != BigUint::from(0u32) {
        let t = &a % &b;
        a = b;
        b = t;
    }
    a
}

fn built_ins() -> Vec<TransferSystem> {
    let mut v: Vec<_> = (2..=6).map(TransferSystem::line_subbundle).collect();
    v.push(TransferSystem::rank_two_of_four());
    v
}

/// Brute-force search for d' over a window that must contain any solution.
fn search_dprime(r: i64, d: i64, rp: i64, g: i64) -> Option<i64> {
    let target = rp * (r - rp) * (g - 1);
    (-200..=200).find(|&dp| rp * d - r * dp == target)
}

#[test]
fn solve_dprime_sweep_matches_search() {
    for r in 2..=6i64 {
        for rp in 1..r {
            for g in 1..=5i64 {
                for d in -20..=20i64 {
                    let problem = SubbundleProblem::new(r, d, rp, g).unwrap();
                    match (solve_dprime(&problem), search_dprime(r, d, rp, g)) {
                        (Ok(s), Some(dp)) => {
                            assert_eq!(s.d_prime(), dp);
                            assert_eq!(s.parity(), Parity::of(dp));
                            assert!(check_finiteness(r, d, rp, s.d_prime(), g).unwrap());
                        }
                        (Err(Error::NoValidDPrime { .. }), None) => {}
                        (got, want) => panic!("({r},{d},{rp},{g}): got {got:?}, search {want:?}"),
                    }
                }
            }
        }
    }
}

#[test]
fn family_at_zero_is_moduli() {
    for r in 1..=10 {
        for g in 1..=10 {
            assert_eq!(
                family_dimension(r, g, 0).unwrap(),
                moduli_dimension(r, g).unwrap()
            );
        }
    }
}

#[test]
fn matrix_power_matches_iteration() {
    for s in built_ins() {
        for g in 1..=64 {
            assert_eq!(
                count_at_genus(&s, g).unwrap(),
                iterate(&s, g).unwrap(),
                "g={g}"
            );
        }
    }
}

#[test]
fn mat_pow_is_additive_in_exponent() {
    for s in built_ins() {
        for m in 0..=16 {
            for n in 0..=16 {
                let lhs = mat_pow(&s, m + n);
                let rhs = mat_pow(&s, m).mul(&mat_pow(&s, n)).unwrap();
                assert_eq!(lhs, rhs, "m={m}, n={n}");
            }
        }
    }
}

#[test]
fn symmetric_powers_stay_symmetric() {
    let s = TransferSystem::rank_two_of_four();
    for n in 0..=64 {
        assert!(mat_pow(&s, n).is_symmetric(), "n={n}");
    }
}

#[test]
fn built_in_counts_positive() {
    for s in built_ins() {
        for g in 1..=32 {
            assert!(iterate(&s, g)
                .unwrap()
                .entries()
                .iter()
                .all(|v| !v.is_zero()));
        }
    }
}

#[test]
fn four_paths_agree_to_512() {
    let s = TransferSystem::rank_two_of_four();
    let mut state = iterate(&s, 1).unwrap();
    for g in 1..=512 {
        if g > 1 {
            state = step(&state, &s).unwrap();
        }
        let (a, b) = (&state.entries()[0], &state.entries()[1]);
        assert_eq!(a, &a_binomial(g).unwrap(), "a_binomial g={g}");
        assert_eq!(b, &b_binomial(g).unwrap(), "b_binomial g={g}");
        assert_eq!(a, &a_eigen(g).unwrap(), "a_eigen g={g}");
        assert_eq!(b, &b_eigen(g).unwrap(), "b_eigen g={g}");
    }
}

#[test]
fn sum_difference_factored_identities() {
    for g in 1..=256u32 {
        let a = a_binomial(g).unwrap().into_biguint();
        let b = b_binomial(g).unwrap().into_biguint();
        assert_eq!(&a + &b, pow2(3 * g));
        assert_eq!(&a - &b, pow2(2 * g));
        let h = pow2(2 * g - 1);
        assert_eq!(a, &h * (pow2(g) + 1u32));
        assert_eq!(b, &h * (pow2(g) - 1u32));
        assert_eq!(gcd(a.clone(), b.clone()), h);
        assert!(a > b && b > BigUint::from(0u32));
    }
}

#[test]
fn line_count_multiplicative() {
    for r in 2..=6 {
        for g1 in 1..=10 {
            for g2 in 1..=10 {
                let whole = count_line_subbundles(r, g1 + g2).unwrap();
                let parts =
                    &count_line_subbundles(r, g1).unwrap() * &count_line_subbundles(r, g2).unwrap();
                assert_eq!(whole, parts);
            }
        }
    }
}

#[test]
fn traces_match_recurrence() {
    let cases = [
        SupportedCase::RankTwoOfFour,
        SupportedCase::LineSubbundle(2),
        SupportedCase::LineSubbundle(5),
    ];
    for case in cases {
        let system = TransferSystem::for_case(case);
        for g in 2..=64 {
            let here = iterate(&system, g).unwrap();
            let below = iterate(&system, g - 1).unwrap();
            for parity in [Parity::Even, Parity::Odd] {
                let t = build_trace(case, parity, g).unwrap();
                assert!(t.is_consistent());
                let idx = if here.len() == 1 { 0 } else { parity.index() };
                assert_eq!(
                    trace_total(&t),
                    here.entries()[idx],
                    "{case:?} {parity} g={g}"
                );
                if case == SupportedCase::RankTwoOfFour {
                    assert_eq!(t.contributing().count(), 2);
                    let excluded: Vec<_> = t.excluded().collect();
                    assert_eq!(excluded.len(), 1);
                    assert_eq!(excluded[0].split, (1, 0));
                    assert!(!excluded[0].reason.is_empty());
                    // (1, d'−1) takes its count from the opposite parity at genus g−1.
                    let one = t.records.iter().find(|r| r.split == (1, -1)).unwrap();
                    assert_eq!(
                        one.recursive_count,
                        below.entries()[parity.flipped().index()]
                    );
                } else {
                    assert_eq!(t.records.len(), 1);
                    assert_eq!(t.records[0].split, (0, 0));
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn solved_problems_satisfy_finiteness(r in 2i64..40, d in -1000i64..1000, g in 1i64..60, rp_seed in 0i64..1000) {
        let rp = 1 + rp_seed % (r - 1);
        let problem = SubbundleProblem::new(r, d, rp, g).unwrap();
        if let Ok(s) = solve_dprime(&problem) {
            prop_assert!(check_finiteness(r, d, rp, s.d_prime(), g).unwrap());
            prop_assert!(!check_finiteness(r, d, rp, s.d_prime() + 1, g).unwrap());
        }
    }

    #[test]
    fn trace_json_round_trips(g in 2u32..80, odd in any::<bool>(), line_rank in prop::option::of(2u32..12), shift in -50i64..50) {
        let parity = if odd { Parity::Odd } else { Parity::Even };
        let case = line_rank.map_or(SupportedCase::RankTwoOfFour, SupportedCase::LineSubbundle);
        let mut t = build_trace(case, parity, g).unwrap();
        for rec in &mut t.records {
            rec.split.1 += shift;
        }
        let json = serde_json::to_string(&t).unwrap();
        let back: TraceTree = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, t);
    }

    #[test]
    fn count_value_string_round_trips(digits in "[1-9][0-9]{0,120}") {
        let v: CountValue = digits.parse().unwrap();
        prop_assert_eq!(v.to_string(), digits);
    }
}

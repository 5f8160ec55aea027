mod common;

use common::*;
use proptest::prelude::*;
use quantlang::oracle::{brute_value_finite, brute_value_lasso, truncated_disc_bounds};
use quantlang::sampling::{all_lassos, sample_lassos, words_of_length};
use quantlang::{evaluate_finite, evaluate_lasso, int, rat, FiniteWord};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn lasso_values_match_the_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for round in 0..150 {
        let name = INFINITE_TAGS[round % 5];
        let lambda = [rat(1, 4), rat(1, 2), rat(3, 4)][round % 3].clone();
        let vf = tag(name, &lambda);
        let states = rng.gen_range(1..=4);
        let det = rng.gen_bool(0.5);
        let a = automaton(&mut rng, &vf, states, &[int(0), rat(1, 3), rat(1, 2), int(1)], det);
        for w in sample_lassos(&ab(), 20, round as u64, 3, 3) {
            assert_eq!(evaluate_lasso(&a, &w).unwrap(), brute_value_lasso(&a, &w).unwrap(), "{name} {w}");
        }
    }
}

#[test]
fn all_short_lassos_on_four_states() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let words = all_lassos(&ab(), 3, 3);
    for name in INFINITE_TAGS {
        let a = automaton(&mut rng, &tag(name, &rat(1, 2)), 4, &small_weights(), false);
        for w in &words {
            assert_eq!(evaluate_lasso(&a, w).unwrap(), brute_value_lasso(&a, w).unwrap(), "{name} {w}");
        }
    }
}

#[test]
fn finite_values_match_the_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for round in 0..60 {
        let vf = tag(FINITE_TAGS[round % 3], &rat(1, 2));
        let (states, det) = (rng.gen_range(1..=4), rng.gen_bool(0.5));
        let a = automaton(&mut rng, &vf, states, &[int(-1), int(0), rat(1, 2), int(2)], det);
        for len in 1..=5 {
            for w in words_of_length(&ab(), len) {
                let w = FiniteWord::new(w).unwrap();
                assert_eq!(evaluate_finite(&a, &w).unwrap(), brute_value_finite(&a, &w).unwrap());
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn disc_values_lie_within_the_truncation_bounds(seed in any::<u64>(), depth in 1usize..12) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let det = rng.gen_bool(0.5);
        let a = automaton(&mut rng, &tag("disc", &rat(1, 2)), 3, &small_weights(), det);
        for w in sample_lassos(&ab(), 5, seed, 3, 3) {
            let v = evaluate_lasso(&a, &w).unwrap();
            let (lo, hi) = truncated_disc_bounds(&a, &w, depth).unwrap();
            prop_assert!(lo <= v && v <= hi);
        }
    }
}

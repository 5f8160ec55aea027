mod common;

use common::*;
use quantlang::closure::state_bound;
use quantlang::oracle::{brute_value_finite, brute_value_lasso};
use quantlang::sampling::{sample_lassos, words_of_length};
use quantlang::{compose, evaluate_finite, evaluate_lasso, int, rat, Error, FiniteWord, Operation, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const OPS: [Operation; 4] = [Operation::Max, Operation::Min, Operation::Sum, Operation::Complement];

fn expected(op: Operation, x: &Rational, y: &Rational) -> Rational {
    match op {
        Operation::Max => x.clone().max(y.clone()),
        Operation::Min => x.clone().min(y.clone()),
        Operation::Sum => x + y,
        Operation::Complement => int(1) - x,
    }
}

#[test]
fn every_cell_is_sound_or_refused() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let tags = FINITE_TAGS.iter().chain(INFINITE_TAGS.iter());
    for name in tags {
        let vf = tag(name, &rat(1, 2));
        for det in [true, false] {
            for op in OPS {
                for round in 0..12 {
                    let s1 = rng.gen_range(1..=2);
                    let s2 = rng.gen_range(1..=2);
                    let a1 = automaton(&mut rng, &vf, s1, &small_weights(), det);
                    let a2 = automaton(&mut rng, &vf, s2, &small_weights(), det);
                    let bound = state_bound(op, &a1, &a2);
                    let out = compose(op, &a1, &a2);
                    let cell = format!("{op} {name} det={det}");
                    let Some(bound) = bound else {
                        assert!(matches!(out, Err(Error::Closure(_))), "{cell}: expected a closure error");
                        continue;
                    };
                    let c = out.unwrap_or_else(|e| panic!("{cell}: {e}"));
                    assert!(num_bigint::BigUint::from(c.num_states()) <= bound, "{cell}: {} states", c.num_states());
                    if det && op != Operation::Complement || det && matches!(*name, "last" | "sum" | "disc") {
                        assert!(c.is_deterministic(), "{cell}: output is not deterministic");
                    }
                    if vf.is_finite_word() {
                        for len in 1..=4 {
                            for w in words_of_length(&ab(), len) {
                                let w = FiniteWord::new(w).unwrap();
                                let (x, y) = (brute_value_finite(&a1, &w).unwrap(), brute_value_finite(&a2, &w).unwrap());
                                assert_eq!(evaluate_finite(&c, &w).unwrap(), expected(op, &x, &y), "{cell} on {w}");
                            }
                        }
                    } else {
                        for w in sample_lassos(&ab(), 20, round, 3, 3) {
                            let (x, y) = (brute_value_lasso(&a1, &w).unwrap(), brute_value_lasso(&a2, &w).unwrap());
                            assert_eq!(evaluate_lasso(&c, &w).unwrap(), expected(op, &x, &y), "{cell} on {w}");
                        }
                    }
                }
            }
        }
    }
}

//! Benchmark inputs.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use quantlang::sampling::{random_automaton, sample_lassos, RandomAutomatonSpec};
use quantlang::{int, rat, LassoWord, ValueFunction, WeightedAutomaton};

pub fn ab() -> Vec<String> {
    vec!["a".into(), "b".into()]
}

/// Reproducible random automaton over {a, b} with weights in {-1, 0, 1/2, 1, 2}.
pub fn automaton(seed: u64, vf: ValueFunction, states: usize, deterministic: bool) -> WeightedAutomaton {
    let spec = RandomAutomatonSpec {
        states,
        alphabet: ab(),
        weights: vec![int(-1), int(0), rat(1, 2), int(1), int(2)],
        value_function: vf,
        deterministic,
        max_branching: 2,
    };
    random_automaton(&mut ChaCha8Rng::seed_from_u64(seed), &spec)
}

pub fn lassos(count: usize, seed: u64) -> Vec<LassoWord> {
    sample_lassos(&ab(), count, seed, 6, 6)
}

//! Seeded generators for words and automata used by property tests,
//! benchmarks and the `dsup` estimate.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::automaton::{Transition, ValueFunction, WeightedAutomaton};
use crate::rational::Rational;
use crate::words::LassoWord;

/// Random lasso `u · v^ω` with `|u| <= max_prefix` and `1 <= |v| <= max_period`.
pub fn random_lasso(rng: &mut impl Rng, alphabet: &[String], max_prefix: usize, max_period: usize) -> LassoWord {
    let u = rng.gen_range(0..=max_prefix);
    let v = rng.gen_range(1..=max_period.max(1));
    let mut pick = |n: usize| -> Vec<String> {
        (0..n).map(|_| alphabet.choose(rng).expect("nonempty alphabet").clone()).collect()
    };
    let prefix = pick(u);
    let period = pick(v);
    LassoWord::new(prefix, period).expect("nonempty period")
}

/// `count` random lassos from a ChaCha PRNG seeded with `seed`.
pub fn sample_lassos(alphabet: &[String], count: usize, seed: u64, max_prefix: usize, max_period: usize) -> Vec<LassoWord> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| random_lasso(&mut rng, alphabet, max_prefix, max_period))
        .collect()
}

/// Every lasso with `|u| <= max_prefix` and `1 <= |v| <= max_period`, in
/// normal form and without duplicates.
pub fn all_lassos(alphabet: &[String], max_prefix: usize, max_period: usize) -> Vec<LassoWord> {
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for u in 0..=max_prefix {
        for v in 1..=max_period {
            for word in words_of_length(alphabet, u + v) {
                let w = LassoWord::new(word[..u].to_vec(), word[u..].to_vec())
                    .expect("nonempty period")
                    .normalize();
                if seen.insert(w.to_string()) {
                    out.push(w);
                }
            }
        }
    }
    out
}

/// All words of length `n` over the alphabet, in lexicographic index order.
pub fn words_of_length(alphabet: &[String], n: usize) -> Vec<Vec<String>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w| {
                alphabet.iter().map(move |s| {
                    let mut x = w.clone();
                    x.push(s.clone());
                    x
                })
            })
            .collect();
    }
    out
}

/// Shape of a random automaton.
#[derive(Debug, Clone)]
pub struct RandomAutomatonSpec {
    pub states: usize,
    pub alphabet: Vec<String>,
    /// Weights are drawn uniformly from this pool.
    pub weights: Vec<Rational>,
    pub value_function: ValueFunction,
    /// Exactly one successor per (state, symbol) when set.
    pub deterministic: bool,
    /// Largest number of distinct successors per (state, symbol).
    pub max_branching: usize,
}

/// Total random automaton; every (state, symbol) pair gets between 1 and
/// `max_branching` distinct targets, so there are no parallel edges.
pub fn random_automaton(rng: &mut impl Rng, spec: &RandomAutomatonSpec) -> WeightedAutomaton {
    let n = spec.states.max(1);
    let mut transitions = Vec::new();
    for q in 0..n {
        for symbol in 0..spec.alphabet.len() {
            let k = if spec.deterministic {
                1
            } else {
                rng.gen_range(1..=spec.max_branching.clamp(1, n))
            };
            let mut targets: Vec<usize> = (0..n).collect();
            targets.shuffle(rng);
            for &target in &targets[..k] {
                transitions.push(Transition {
                    source: q,
                    symbol,
                    target,
                    weight: spec.weights.choose(rng).expect("nonempty weight pool").clone(),
                });
            }
        }
    }
    let states = (0..n).map(|i| format!("q{i}")).collect();
    WeightedAutomaton::new(states, 0, spec.alphabet.clone(), transitions, spec.value_function.clone())
        .expect("generated automaton is well-formed")
}

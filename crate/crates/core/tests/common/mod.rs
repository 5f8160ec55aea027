#![allow(dead_code)]

use quantlang::sampling::{random_automaton, RandomAutomatonSpec};
use quantlang::{int, rat, Rational, ValueFunction, WeightedAutomaton};
use rand::Rng;

pub fn ab() -> Vec<String> {
    vec!["a".to_string(), "b".to_string()]
}

pub fn small_weights() -> Vec<Rational> {
    vec![int(0), rat(1, 2), int(1)]
}

pub const INFINITE_TAGS: [&str; 5] = ["sup", "limsup", "liminf", "limavg", "disc"];
pub const FINITE_TAGS: [&str; 3] = ["max", "last", "sum"];

pub fn tag(name: &str, lambda: &Rational) -> ValueFunction {
    let l = (name == "disc").then(|| lambda.clone());
    ValueFunction::from_name(name, l).unwrap()
}

/// Random automaton that is deterministic exactly when `det` is set
/// (nondeterministic ones have at least two states).
pub fn automaton(
    rng: &mut impl Rng,
    vf: &ValueFunction,
    states: usize,
    weights: &[Rational],
    det: bool,
) -> WeightedAutomaton {
    // a single state with distinct targets cannot branch
    let states = if det { states } else { states.max(2) };
    let spec = RandomAutomatonSpec {
        states,
        alphabet: ab(),
        weights: weights.to_vec(),
        value_function: vf.clone(),
        deterministic: det,
        max_branching: 2,
    };
    loop {
        let a = random_automaton(rng, &spec);
        if a.is_deterministic() == det {
            return a;
        }
    }
}

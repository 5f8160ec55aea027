//! Closure constructions for `Max`, `Last` and `Sum` automata over finite
//! words.

use std::collections::BTreeSet;

use num_traits::One;

use super::{class_of, compatible, initial_choice, max_track, not_closed, pair_class, product};
use crate::automaton::{shift, StateId, ValueFunction, WeightedAutomaton};
use crate::error::{Error, Operation, Result};
use crate::explore::explore;
use crate::rational::Rational;

fn require_finite(a: &WeightedAutomaton) -> Result<()> {
    let vf = a.value_function();
    if vf.is_finite_word() {
        Ok(())
    } else {
        Err(Error::WrongArity(vf.to_string()))
    }
}

/// `max(L_1, L_2)`.
///
/// Nondeterministic inputs use an initial choice (`n1 + n2 + 1` states);
/// deterministic `Max` and `Last` use a synchronized product taking the
/// larger weight (`n1 * n2`).
pub fn max_finite(a1: &WeightedAutomaton, a2: &WeightedAutomaton) -> Result<WeightedAutomaton> {
    require_finite(a1)?;
    compatible(a1, a2)?;
    let det = a1.is_deterministic() && a2.is_deterministic();
    if !det {
        return initial_choice(a1, a2);
    }
    match a1.value_function() {
        ValueFunction::Max | ValueFunction::Last => product(a1, a2, |x, y| x.clone().max(y.clone())),
        _ => Err(not_closed(
            Operation::Max,
            pair_class(a1, a2),
            "deterministic Sum-automata are not closed under max",
            "max(L_a, L_b) where L_σ(w) counts the occurrences of σ in w",
        )),
    }
}

/// `min(L_1, L_2)`.
///
/// `Last` uses a product taking the smaller weight; `Max` tracks the
/// running maxima of both components and emits their minimum.
pub fn min_finite(a1: &WeightedAutomaton, a2: &WeightedAutomaton) -> Result<WeightedAutomaton> {
    require_finite(a1)?;
    compatible(a1, a2)?;
    match a1.value_function() {
        ValueFunction::Last => product(a1, a2, |x, y| x.clone().min(y.clone())),
        ValueFunction::Max => max_track(a1, a2, |x, y| x.clone().min(y.clone())),
        _ => Err(not_closed(
            Operation::Min,
            pair_class(a1, a2),
            "deterministic and nondeterministic Sum-automata are not closed under min",
            "min(L_a, L_b) where L_σ(w) counts the occurrences of σ in w",
        )),
    }
}

/// `1 - L_A`.
///
/// Deterministic `Last` and `Sum`: negate every weight, then shift by 1.
/// Nondeterministic `Last` is first determinized by a subset construction
/// whose weight on `σ` from `S` is the largest weight of a `σ`-transition
/// leaving `S` (`2^n` states).
pub fn complement_finite(a: &WeightedAutomaton) -> Result<WeightedAutomaton> {
    require_finite(a)?;
    a.require_total()?;
    let det = a.is_deterministic();
    match (a.value_function(), det) {
        (ValueFunction::Last | ValueFunction::Sum, true) => Ok(negate_and_shift(a)),
        (ValueFunction::Last, false) => Ok(negate_and_shift(&determinize_last(a)?)),
        (ValueFunction::Max, _) => Err(not_closed(
            Operation::Complement,
            class_of(a),
            "Max-automata are not closed under complement",
            "L(a^i) = 0 for all i >= 1 and L(w) = 1 for every w containing b",
        )),
        _ => Err(not_closed(
            Operation::Complement,
            class_of(a),
            "nondeterministic Sum-automata are not closed under complement",
            "1 - max(1 - L_a, 1 - L_b) = min(L_a, L_b) with L_σ counting σ",
        )),
    }
}

fn negate_and_shift(a: &WeightedAutomaton) -> WeightedAutomaton {
    shift(&a.map_weights(|w| -w.clone()), &Rational::one())
}

/// Deterministic `Last` automaton with the same language.
pub fn determinize_last(a: &WeightedAutomaton) -> Result<WeightedAutomaton> {
    let init: BTreeSet<StateId> = [a.initial()].into();
    let explored = explore(
        a.alphabet().len(),
        init,
        |s| {
            let names: Vec<&str> = s.iter().map(|&q| a.state_name(q)).collect();
            format!("{{{}}}", names.join(","))
        },
        |s, sym| {
            let mut next = BTreeSet::new();
            let mut best: Option<Rational> = None;
            for &q in s {
                for t in a.successors(q, sym) {
                    next.insert(t.target);
                    if best.as_ref().map_or(true, |b| t.weight > *b) {
                        best = Some(t.weight.clone());
                    }
                }
            }
            vec![(next, best.expect("total automaton"))]
        },
    )?;
    explored.into_weighted(a.alphabet(), a.value_function().clone())
}

/// `L_1 + L_2`.
///
/// `Last` and `Sum` use a product adding the weights; `Max` tracks both
/// running maxima and emits their sum.
pub fn sum_finite(a1: &WeightedAutomaton, a2: &WeightedAutomaton) -> Result<WeightedAutomaton> {
    require_finite(a1)?;
    compatible(a1, a2)?;
    match a1.value_function() {
        ValueFunction::Max => max_track(a1, a2, |x, y| x + y),
        _ => product(a1, a2, |x, y| x + y),
    }
}

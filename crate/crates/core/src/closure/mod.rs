//! Closure of automaton classes under max, min, sum and complement.
//!
//! Every positive construction returns an automaton of the same class as
//! its inputs (deterministic inputs give deterministic outputs whenever the
//! class is closed). Requests for which the class is known not to be closed
//! fail with [`ClosureError`] and construct nothing.
//!
//! Finite words:
//!
//! | class | max | min | complement | sum |
//! |---|---|---|---|---|
//! | Max | ✓ | ✓ | × | ✓ |
//! | Last | ✓ | ✓ | ✓ | ✓ |
//! | deterministic Sum | × | × | ✓ | ✓ |
//! | nondeterministic Sum | ✓ | × | × | ✓ |
//!
//! Infinite words (`N/D` means both deterministic and nondeterministic):
//!
//! | class | max | min | complement | sum |
//! |---|---|---|---|---|
//! | N/D Sup | ✓ | ✓ | × | ✓ |
//! | N/D LimInf | ✓ | ✓ | × | ✓ |
//! | D LimSup | ✓ | ✓ | × | ✓ |
//! | N LimSup | ✓ | ✓ | ✓ | ✓ |
//! | D LimAvg | × | × | × | × |
//! | N LimAvg | ✓ | × | × | × |
//! | D Disc | × | × | ✓ | ✓ |
//! | N Disc | ✓ | × | × | ✓ |
//!
//! A binary operation is applied in the deterministic class only when both
//! inputs are deterministic.

pub mod cost;
pub mod finite;
pub mod omega;

use std::collections::BTreeSet;

use crate::automaton::{weight_set, StateId, SymbolId, ValueFunction, WeightedAutomaton};
use crate::error::{ClosureError, Error, Operation, Result};
use crate::explore::explore;
use crate::rational::{format_rational, Rational};

pub use cost::{state_bound, DLINF_MAX_CONSTANT, NLSUP_COMPLEMENT_CONSTANT};
pub use finite::{complement_finite, max_finite, min_finite, sum_finite};
pub use omega::{complement_omega, max_omega, min_omega, sum_omega};

/// Applies the operation matching the inputs' value function (finite or
/// infinite words).
pub fn compose(op: Operation, a1: &WeightedAutomaton, a2: &WeightedAutomaton) -> Result<WeightedAutomaton> {
    let finite = a1.value_function().is_finite_word();
    match (op, finite) {
        (Operation::Max, true) => max_finite(a1, a2),
        (Operation::Min, true) => min_finite(a1, a2),
        (Operation::Sum, true) => sum_finite(a1, a2),
        (Operation::Max, false) => max_omega(a1, a2),
        (Operation::Min, false) => min_omega(a1, a2),
        (Operation::Sum, false) => sum_omega(a1, a2),
        (Operation::Complement, _) => complement(a1),
    }
}

/// Complement `1 - L_A` for either kind of word.
pub fn complement(a: &WeightedAutomaton) -> Result<WeightedAutomaton> {
    if a.value_function().is_finite_word() {
        complement_finite(a)
    } else {
        complement_omega(a)
    }
}

/// Class of an automaton as used in error messages, e.g. `DLavg`.
pub fn class_of(a: &WeightedAutomaton) -> String {
    a.value_function().class_name(a.is_deterministic())
}

/// Class of a pair: deterministic only when both inputs are.
fn pair_class(a1: &WeightedAutomaton, a2: &WeightedAutomaton) -> String {
    a1.value_function()
        .class_name(a1.is_deterministic() && a2.is_deterministic())
}

fn not_closed(op: Operation, class: String, citation: &'static str, counterexample: &'static str) -> Error {
    Error::Closure(ClosureError {
        operation: op,
        class,
        citation,
        counterexample,
    })
}

/// Checks that two automata can be combined and maps each symbol of `a1` to
/// the symbol of `a2` with the same name.
pub(crate) fn compatible(a1: &WeightedAutomaton, a2: &WeightedAutomaton) -> Result<Vec<SymbolId>> {
    let (f1, f2) = (a1.value_function(), a2.value_function());
    if f1 != f2 {
        return Err(match (f1, f2) {
            (ValueFunction::Disc(l1), ValueFunction::Disc(l2)) => Error::LambdaMismatch(l1.clone(), l2.clone()),
            _ => Error::TagMismatch(f1.to_string(), f2.to_string()),
        });
    }
    let s1: BTreeSet<&String> = a1.alphabet().iter().collect();
    let s2: BTreeSet<&String> = a2.alphabet().iter().collect();
    if let Some(s) = s1.symmetric_difference(&s2).next() {
        return Err(Error::AlphabetMismatch((*s).clone()));
    }
    a1.require_total()?;
    a2.require_total()?;
    Ok(a1
        .alphabet()
        .iter()
        .map(|s| a2.symbol_index(s).expect("same alphabet"))
        .collect())
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum UnionNode {
    Init,
    In(usize, StateId),
}

/// Initial nondeterministic choice between two automata: a fresh initial
/// state carries copies of both initial states' outgoing transitions, so
/// the language is `max(L_1, L_2)` for every value function.
pub fn initial_choice(a1: &WeightedAutomaton, a2: &WeightedAutomaton) -> Result<WeightedAutomaton> {
    union(&[a1, a2])
}

/// n-ary initial choice; the result has at most `1 + sum n_i` states.
pub fn union(parts: &[&WeightedAutomaton]) -> Result<WeightedAutomaton> {
    let first = *parts.first().ok_or(Error::EmptySequence)?;
    let maps = parts
        .iter()
        .map(|p| compatible(first, p))
        .collect::<Result<Vec<_>>>()?;
    let succ_of = |k: usize, q: StateId, sym: SymbolId| {
        parts[k]
            .successors(q, maps[k][sym])
            .map(move |t| (UnionNode::In(k, t.target), t.weight.clone()))
            .collect::<Vec<_>>()
    };
    let explored = explore(
        first.alphabet().len(),
        UnionNode::Init,
        |n| match n {
            UnionNode::Init => "init".to_string(),
            UnionNode::In(k, q) => format!("{}:{}", k + 1, parts[*k].state_name(*q)),
        },
        |n, sym| match n {
            UnionNode::Init => (0..parts.len())
                .flat_map(|k| succ_of(k, parts[k].initial(), sym))
                .collect(),
            UnionNode::In(k, q) => succ_of(*k, *q, sym),
        },
    )?;
    explored.into_weighted(first.alphabet(), first.value_function().clone())
}

/// Synchronized product with joint weight `combine(w1, w2)`.
pub(crate) fn product(
    a1: &WeightedAutomaton,
    a2: &WeightedAutomaton,
    combine: impl Fn(&Rational, &Rational) -> Rational,
) -> Result<WeightedAutomaton> {
    let map = compatible(a1, a2)?;
    let explored = explore(
        a1.alphabet().len(),
        (a1.initial(), a2.initial()),
        |&(q1, q2)| format!("({},{})", a1.state_name(q1), a2.state_name(q2)),
        |&(q1, q2), sym| {
            let mut out = Vec::new();
            for t1 in a1.successors(q1, sym) {
                for t2 in a2.successors(q2, map[sym]) {
                    out.push(((t1.target, t2.target), combine(&t1.weight, &t2.weight)));
                }
            }
            out
        },
    )?;
    explored.into_weighted(a1.alphabet(), a1.value_function().clone())
}

/// Product remembering the largest weight seen so far in each component,
/// starting from each automaton's least weight; the joint weight is
/// `combine(v1', v2')` of the updated maxima.
pub(crate) fn max_track(
    a1: &WeightedAutomaton,
    a2: &WeightedAutomaton,
    combine: impl Fn(&Rational, &Rational) -> Rational,
) -> Result<WeightedAutomaton> {
    let map = compatible(a1, a2)?;
    let vmin1 = weight_set(a1).into_iter().next().expect("total automaton has a transition");
    let vmin2 = weight_set(a2).into_iter().next().expect("total automaton has a transition");
    let explored = explore(
        a1.alphabet().len(),
        (a1.initial(), vmin1, a2.initial(), vmin2),
        |(q1, v1, q2, v2)| {
            format!(
                "({},{},{},{})",
                a1.state_name(*q1),
                format_rational(v1),
                a2.state_name(*q2),
                format_rational(v2)
            )
        },
        |(q1, v1, q2, v2), sym| {
            let mut out = Vec::new();
            for t1 in a1.successors(*q1, sym) {
                for t2 in a2.successors(*q2, map[sym]) {
                    let n1 = v1.clone().max(t1.weight.clone());
                    let n2 = v2.clone().max(t2.weight.clone());
                    let w = combine(&n1, &n2);
                    out.push(((t1.target, n1, t2.target, n2), w));
                }
            }
            out
        },
    )?;
    explored.into_weighted(a1.alphabet(), a1.value_function().clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::rational::int;
    use crate::valuation::evaluate_lasso;
    use crate::words::LassoWord;

    #[test]
    fn union_takes_the_max() {
        let a = fixtures::single_state(ValueFunction::LimAvg, int(1), int(0));
        let b = fixtures::single_state(ValueFunction::LimAvg, int(0), int(1));
        let u = initial_choice(&a, &b).unwrap();
        assert_eq!(u.num_states(), 3);
        let w = LassoWord::new(["a"], ["b", "b", "a"]).unwrap();
        assert_eq!(evaluate_lasso(&u, &w).unwrap(), crate::rational::rat(2, 3));
    }

    #[test]
    fn incompatible_inputs_are_rejected() {
        let a = fixtures::freq_a_limavg();
        let b = fixtures::single_state(ValueFunction::LimSup, int(1), int(0));
        assert!(matches!(initial_choice(&a, &b), Err(Error::TagMismatch(_, _))));
        let c = fixtures::motor_a();
        assert!(matches!(initial_choice(&a, &c), Err(Error::AlphabetMismatch(_))));
        let d1 = fixtures::bank_a1(crate::rational::rat(1, 2));
        let d2 = fixtures::bank_a2(crate::rational::rat(1, 3));
        assert!(matches!(initial_choice(&d1, &d2), Err(Error::LambdaMismatch(_, _))));
    }
}

//! Closure constructions for automata over infinite words.

use num_traits::One;

use super::{class_of, compatible, initial_choice, max_track, not_closed, pair_class, product, union};
use crate::automaton::{weight_set, StateId, SymbolId, ValueFunction, WeightedAutomaton};
use crate::error::{Error, Operation, Result};
use crate::explore::explore;
use crate::omega::{nbw_complement, nlinf_determinize, threshold_automaton};
use crate::rational::{format_rational, Rational};

fn require_infinite(a: &WeightedAutomaton) -> Result<()> {
    let vf = a.value_function();
    if vf.is_finite_word() {
        Err(Error::WrongArity(vf.to_string()))
    } else {
        Ok(())
    }
}

fn both_deterministic(a1: &WeightedAutomaton, a2: &WeightedAutomaton) -> bool {
    a1.is_deterministic() && a2.is_deterministic()
}

/// `max(L_1, L_2)`.
///
/// Nondeterministic inputs: initial choice (`n1 + n2 + 1` states).
/// Deterministic `Sup` and `LimSup`: product taking the larger weight.
/// Deterministic `LimInf`: initial choice, then [`nlinf_determinize`].
pub fn max_omega(a1: &WeightedAutomaton, a2: &WeightedAutomaton) -> Result<WeightedAutomaton> {
    require_infinite(a1)?;
    compatible(a1, a2)?;
    if !both_deterministic(a1, a2) {
        return initial_choice(a1, a2);
    }
    match a1.value_function() {
        ValueFunction::Sup | ValueFunction::LimSup => product(a1, a2, |x, y| x.clone().max(y.clone())),
        ValueFunction::LimInf => nlinf_determinize(&initial_choice(a1, a2)?),
        ValueFunction::LimAvg => Err(not_closed(
            Operation::Max,
            pair_class(a1, a2),
            "deterministic LimAvg-automata are not closed under max",
            "max(L_a, L_b) where L_σ is the long-run average number of σ",
        )),
        _ => Err(not_closed(
            Operation::Max,
            pair_class(a1, a2),
            "deterministic Disc-automata are not closed under max",
            "max(L_1, L_2) where L_1 weighs a:1, b:0 and L_2 weighs a:0, b:1",
        )),
    }
}

/// `min(L_1, L_2)`.
///
/// `Sup`: running-maximum product emitting the smaller maximum. `LimInf`:
/// product taking the smaller weight. Deterministic `LimSup`: bit-vector
/// product. Nondeterministic `LimSup`: guess construction.
pub fn min_omega(a1: &WeightedAutomaton, a2: &WeightedAutomaton) -> Result<WeightedAutomaton> {
    require_infinite(a1)?;
    compatible(a1, a2)?;
    match a1.value_function() {
        ValueFunction::Sup => max_track(a1, a2, |x, y| x.clone().min(y.clone())),
        ValueFunction::LimInf => product(a1, a2, |x, y| x.clone().min(y.clone())),
        ValueFunction::LimSup if both_deterministic(a1, a2) => dlsup_min(a1, a2),
        ValueFunction::LimSup => nlsup_min(a1, a2),
        ValueFunction::LimAvg => Err(not_closed(
            Operation::Min,
            pair_class(a1, a2),
            "deterministic and nondeterministic LimAvg-automata are not closed under min",
            "min(L_a, L_b) where L_σ is the long-run average number of σ",
        )),
        _ => Err(not_closed(
            Operation::Min,
            pair_class(a1, a2),
            "deterministic and nondeterministic Disc-automata are not closed under min",
            "min(L_1, L_2) where L_1 weighs a:1, b:0 and L_2 weighs a:0, b:1",
        )),
    }
}

/// `1 - L_A`.
///
/// Deterministic `Disc`: every weight `v` becomes `1 - lambda - v`.
/// Nondeterministic `LimSup`: Büchi complementation of every threshold
/// automaton (see [`complement_nlsup`]).
pub fn complement_omega(a: &WeightedAutomaton) -> Result<WeightedAutomaton> {
    require_infinite(a)?;
    a.require_total()?;
    let det = a.is_deterministic();
    match (a.value_function(), det) {
        (ValueFunction::Disc(lambda), true) => {
            let base = Rational::one() - lambda;
            Ok(a.map_weights(|v| &base - v))
        }
        (ValueFunction::LimSup, false) => complement_nlsup(a),
        (ValueFunction::Sup, _) => Err(not_closed(
            Operation::Complement,
            class_of(a),
            "Sup-automata are not closed under complement",
            "L(a^ω) = 0 and L(w) = 1 for every other word",
        )),
        (ValueFunction::LimInf, _) => Err(not_closed(
            Operation::Complement,
            class_of(a),
            "LimInf-automata are not closed under complement",
            "L(Σ*.a^ω) = 1 and L(w) = 0 for words with infinitely many b",
        )),
        (ValueFunction::LimSup, true) => Err(not_closed(
            Operation::Complement,
            class_of(a),
            "deterministic LimSup-automata are not closed under complement",
            "L(w) = 1 for words with infinitely many b and L(Σ*.a^ω) = 0",
        )),
        (ValueFunction::LimAvg, _) => Err(not_closed(
            Operation::Complement,
            class_of(a),
            "deterministic and nondeterministic LimAvg-automata are not closed under complement",
            "1 - max(L_a, L_b) where L_σ is the long-run average number of σ",
        )),
        _ => Err(not_closed(
            Operation::Complement,
            class_of(a),
            "nondeterministic Disc-automata are not closed under complement",
            "1 - max(1 - L_1, 1 - L_2) = min(L_1, L_2)",
        )),
    }
}

/// `L_1 + L_2`.
///
/// `Sup`: running-maximum product emitting the sum of maxima.
/// Nondeterministic `LimSup`: pair-guess construction. Deterministic
/// `LimSup`: bit-function product. `LimInf`: sticky-bit product. `Disc`:
/// product adding the weights.
pub fn sum_omega(a1: &WeightedAutomaton, a2: &WeightedAutomaton) -> Result<WeightedAutomaton> {
    require_infinite(a1)?;
    compatible(a1, a2)?;
    match a1.value_function() {
        ValueFunction::Sup => max_track(a1, a2, |x, y| x + y),
        ValueFunction::LimSup if both_deterministic(a1, a2) => dlsup_sum(a1, a2),
        ValueFunction::LimSup => nlsup_sum(a1, a2),
        ValueFunction::LimInf => linf_sum(a1, a2),
        ValueFunction::Disc(_) => product(a1, a2, |x, y| x + y),
        _ => Err(not_closed(
            Operation::Sum,
            pair_class(a1, a2),
            "deterministic and nondeterministic LimAvg-automata are not closed under sum",
            "L_a + L_b where L_σ is the long-run average number of σ",
        )),
    }
}

/// Joint transitions of two automata on a symbol of `a1`.
fn joint<'a>(
    a1: &'a WeightedAutomaton,
    a2: &'a WeightedAutomaton,
    map: &'a [SymbolId],
    q1: StateId,
    q2: StateId,
    sym: SymbolId,
) -> impl Iterator<Item = (StateId, &'a Rational, StateId, &'a Rational)> + 'a {
    a1.successors(q1, sym).flat_map(move |t1| {
        a2.successors(q2, map[sym])
            .map(move |t2| (t1.target, &t1.weight, t2.target, &t2.weight))
    })
}

fn bits_name(bits: &[u8]) -> String {
    bits.iter().map(|b| char::from(b'0' + b)).collect()
}

/// Deterministic `LimSup` min. With `V = V1 ∪ V2 = {v_1 < ... < v_m}`, bit
/// `b_j ∈ {1, 2}` says which copy is watched for weight `v_j`; it toggles
/// when the watched copy crosses a weight `>= v_j`. The joint weight is the
/// largest toggled `v_j` (or `v_1`). At most `n1 * n2 * 2^m` states.
fn dlsup_min(a1: &WeightedAutomaton, a2: &WeightedAutomaton) -> Result<WeightedAutomaton> {
    let map = compatible(a1, a2)?;
    let mut values = weight_set(a1);
    values.extend(weight_set(a2));
    values.sort();
    values.dedup();
    let vmin = values[0].clone();
    let init = (a1.initial(), a2.initial(), vec![1u8; values.len()]);
    let explored = explore(
        a1.alphabet().len(),
        init,
        |(q1, q2, b)| format!("({},{},b={})", a1.state_name(*q1), a2.state_name(*q2), bits_name(b)),
        |(q1, q2, b), sym| {
            joint(a1, a2, &map, *q1, *q2, sym)
                .map(|(t1, w1, t2, w2)| {
                    let mut weight = vmin.clone();
                    let mut next = b.clone();
                    for (j, v) in values.iter().enumerate() {
                        let watched = if b[j] == 1 { w1 } else { w2 };
                        if watched >= v {
                            next[j] = 3 - b[j];
                            weight = v.clone();
                        }
                    }
                    ((t1, t2, next), weight)
                })
                .collect()
        },
    )?;
    explored.into_weighted(a1.alphabet(), ValueFunction::LimSup)
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum Guess<T> {
    Init,
    State(StateId, StateId, u8, T),
}

/// Nondeterministic `LimSup` min. An initial choice guesses `v ∈ V1 ∪ V2`;
/// the watched copy `j` toggles when it crosses a weight `>= v`, and a
/// toggle weighs `v` while other steps weigh `v_min`. Initial steps also
/// weigh `v_min`, which never exceeds the value of any word.
fn nlsup_min(a1: &WeightedAutomaton, a2: &WeightedAutomaton) -> Result<WeightedAutomaton> {
    let map = compatible(a1, a2)?;
    let mut values = weight_set(a1);
    values.extend(weight_set(a2));
    values.sort();
    values.dedup();
    let vmin = values[0].clone();
    let step = |q1: StateId, q2: StateId, j: u8, v: &Rational, sym: SymbolId| {
        joint(a1, a2, &map, q1, q2, sym)
            .map(|(t1, w1, t2, w2)| {
                let watched = if j == 1 { w1 } else { w2 };
                if watched >= v {
                    (Guess::State(t1, t2, 3 - j, v.clone()), v.clone())
                } else {
                    (Guess::State(t1, t2, j, v.clone()), vmin.clone())
                }
            })
            .collect::<Vec<_>>()
    };
    let explored = explore(
        a1.alphabet().len(),
        Guess::Init,
        |g| match g {
            Guess::Init => "init".to_string(),
            Guess::State(q1, q2, j, v) => format!(
                "({},{},{},v={})",
                a1.state_name(*q1),
                a2.state_name(*q2),
                j,
                format_rational(v)
            ),
        },
        |g, sym| match g {
            Guess::Init => values
                .iter()
                .flat_map(|v| step(a1.initial(), a2.initial(), 1, v, sym))
                .map(|(k, _)| (k, vmin.clone()))
                .collect(),
            Guess::State(q1, q2, j, v) => step(*q1, *q2, *j, v, sym),
        },
    )?;
    explored.into_weighted(a1.alphabet(), ValueFunction::LimSup)
}

/// Nondeterministic `LimSup` sum. An initial choice guesses a pair
/// `(v1, v2) ∈ V1 × V2`; the watched copy `b` toggles when it crosses a
/// weight equal to `v_b`, a toggle weighs `v1 + v2` and other steps weigh the
/// least pairwise sum.
fn nlsup_sum(a1: &WeightedAutomaton, a2: &WeightedAutomaton) -> Result<WeightedAutomaton> {
    let map = compatible(a1, a2)?;
    let (vs1, vs2) = (weight_set(a1), weight_set(a2));
    let smin = &vs1[0] + &vs2[0];
    let pairs: Vec<(Rational, Rational)> = vs1
        .iter()
        .flat_map(|x| vs2.iter().map(move |y| (x.clone(), y.clone())))
        .collect();
    let step = |q1: StateId, q2: StateId, b: u8, p: &(Rational, Rational), sym: SymbolId| {
        joint(a1, a2, &map, q1, q2, sym)
            .map(|(t1, w1, t2, w2)| {
                let hit = if b == 1 { *w1 == p.0 } else { *w2 == p.1 };
                if hit {
                    (Guess::State(t1, t2, 3 - b, p.clone()), &p.0 + &p.1)
                } else {
                    (Guess::State(t1, t2, b, p.clone()), smin.clone())
                }
            })
            .collect::<Vec<_>>()
    };
    let explored = explore(
        a1.alphabet().len(),
        Guess::Init,
        |g| match g {
            Guess::Init => "init".to_string(),
            Guess::State(q1, q2, b, (x, y)) => format!(
                "({},{},{},v=({},{}))",
                a1.state_name(*q1),
                a2.state_name(*q2),
                b,
                format_rational(x),
                format_rational(y)
            ),
        },
        |g, sym| match g {
            Guess::Init => pairs
                .iter()
                .flat_map(|p| step(a1.initial(), a2.initial(), 1, p, sym))
                .map(|(k, _)| (k, smin.clone()))
                .collect(),
            Guess::State(q1, q2, b, p) => step(*q1, *q2, *b, p, sym),
        },
    )?;
    explored.into_weighted(a1.alphabet(), ValueFunction::LimSup)
}

/// Deterministic `LimSup` sum. One bit `b(v1, v2) ∈ {1, 2}` per pair of
/// weights toggles when copy `b` crosses exactly `v_b`; a step weighs the
/// largest `v1 + v2` over toggled pairs (or the least pairwise sum). At
/// most `n1 * n2 * 2^(m1 * m2)` states.
fn dlsup_sum(a1: &WeightedAutomaton, a2: &WeightedAutomaton) -> Result<WeightedAutomaton> {
    let map = compatible(a1, a2)?;
    let (vs1, vs2) = (weight_set(a1), weight_set(a2));
    let smin = &vs1[0] + &vs2[0];
    let pairs: Vec<(Rational, Rational)> = vs1
        .iter()
        .flat_map(|x| vs2.iter().map(move |y| (x.clone(), y.clone())))
        .collect();
    let init = (a1.initial(), a2.initial(), vec![1u8; pairs.len()]);
    let explored = explore(
        a1.alphabet().len(),
        init,
        |(q1, q2, b)| format!("({},{},b={})", a1.state_name(*q1), a2.state_name(*q2), bits_name(b)),
        |(q1, q2, b), sym| {
            joint(a1, a2, &map, *q1, *q2, sym)
                .map(|(t1, w1, t2, w2)| {
                    let mut weight = smin.clone();
                    let mut next = b.clone();
                    for (j, (x, y)) in pairs.iter().enumerate() {
                        let hit = if b[j] == 1 { w1 == x } else { w2 == y };
                        if hit {
                            next[j] = 3 - b[j];
                            let s = x + y;
                            if s > weight {
                                weight = s;
                            }
                        }
                    }
                    ((t1, t2, next), weight)
                })
                .collect()
        },
    )?;
    explored.into_weighted(a1.alphabet(), ValueFunction::LimSup)
}

/// `LimInf` sum with sticky bits. Pairs `p = (v1, v2) ∈ V1 × V2` are ordered
/// by decreasing sum, then decreasing `v1`. A pair is good on a step when
/// both copies cross weights `>= v1` and `>= v2`. Each step:
///
/// 1. `b'(p) = b(p) ∧ good(p)`;
/// 2. the step weighs the largest `v1 + v2` with `b'(p)` set (or the least
///    pairwise sum);
/// 3. every pair above the first set bit of `b'` is set again.
///
/// A pair stays set forever exactly when it is eventually always good, and
/// pairs above the optimum pair `(liminf_1, liminf_2)` are cleared infinitely
/// often with nothing set above the optimum at those steps, so the limit
/// inferior of the weights is `liminf_1 + liminf_2`. All bits start set. At
/// most `n1 * n2 * 2^(m1 * m2)` states; deterministic inputs give a
/// deterministic output.
fn linf_sum(a1: &WeightedAutomaton, a2: &WeightedAutomaton) -> Result<WeightedAutomaton> {
    let map = compatible(a1, a2)?;
    let (vs1, vs2) = (weight_set(a1), weight_set(a2));
    let smin = &vs1[0] + &vs2[0];
    let mut pairs: Vec<(Rational, Rational)> = vs1
        .iter()
        .flat_map(|x| vs2.iter().map(move |y| (x.clone(), y.clone())))
        .collect();
    pairs.sort_by(|p, q| (&q.0 + &q.1).cmp(&(&p.0 + &p.1)).then(q.0.cmp(&p.0)));
    let init = (a1.initial(), a2.initial(), vec![true; pairs.len()]);
    let explored = explore(
        a1.alphabet().len(),
        init,
        |(q1, q2, b)| {
            let bits: String = b.iter().map(|&x| if x { 'T' } else { 'F' }).collect();
            format!("({},{},b={})", a1.state_name(*q1), a2.state_name(*q2), bits)
        },
        |(q1, q2, b), sym| {
            joint(a1, a2, &map, *q1, *q2, sym)
                .map(|(t1, w1, t2, w2)| {
                    let mut next: Vec<bool> = pairs
                        .iter()
                        .zip(b)
                        .map(|((x, y), &bit)| bit && w1 >= x && w2 >= y)
                        .collect();
                    let first = next.iter().position(|&x| x);
                    let weight = first.map_or_else(|| smin.clone(), |i| &pairs[i].0 + &pairs[i].1);
                    for bit in next.iter_mut().take(first.unwrap_or(pairs.len())) {
                        *bit = true;
                    }
                    ((t1, t2, next), weight)
                })
                .collect()
        },
    )?;
    explored.into_weighted(a1.alphabet(), ValueFunction::LimInf)
}

/// Nondeterministic `LimSup` complement. With weights `v_1 < ... < v_n`,
/// `B_i` (`i = 2..=n`) is the complement of the Büchi automaton for
/// `L >= v_i`, weighted `1 - v_{i-1}` on accepting edges and `1 - v_n`
/// elsewhere; the result is the initial choice among all `B_i`. A single
/// weight `v_1` gives the constant automaton `1 - v_1`.
pub fn complement_nlsup(a: &WeightedAutomaton) -> Result<WeightedAutomaton> {
    let values = weight_set(a);
    let n = values.len();
    let one = Rational::one();
    let low = &one - &values[n - 1];
    if n == 1 {
        let mut b = WeightedAutomaton::builder(ValueFunction::LimSup).alphabet(a.alphabet().iter().cloned());
        for s in a.alphabet() {
            b = b.edge("c", s.clone(), "c", low.clone());
        }
        return b.build();
    }
    let mut parts = Vec::with_capacity(n - 1);
    for i in 1..n {
        let comp = nbw_complement(&threshold_automaton(a, &values[i])?)?;
        let high = &one - &values[i - 1];
        let weighted = comp
            .as_weighted()
            .map_weights(|w| if w.is_one() { high.clone() } else { low.clone() })
            .with_value_function(ValueFunction::LimSup)?;
        parts.push(weighted);
    }
    let refs: Vec<&WeightedAutomaton> = parts.iter().collect();
    union(&refs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::scale;
    use crate::fixtures;
    use crate::rational::{int, rat};
    use crate::valuation::evaluate_lasso;
    use crate::words::LassoWord;

    fn lasso(u: &[&str], v: &[&str]) -> LassoWord {
        LassoWord::new(u.iter().copied(), v.iter().copied()).unwrap()
    }

    fn words() -> Vec<LassoWord> {
        vec![
            lasso(&[], &["a"]),
            lasso(&[], &["b"]),
            lasso(&[], &["a", "b"]),
            lasso(&["a"], &["b"]),
            lasso(&["b"], &["a"]),
            lasso(&["a", "b"], &["a", "a", "b"]),
            lasso(&[], &["a", "b", "b"]),
        ]
    }

    fn check(
        c: &WeightedAutomaton,
        a1: &WeightedAutomaton,
        a2: &WeightedAutomaton,
        op: impl Fn(Rational, Rational) -> Rational,
    ) {
        for w in words() {
            let expected = op(evaluate_lasso(a1, &w).unwrap(), evaluate_lasso(a2, &w).unwrap());
            assert_eq!(evaluate_lasso(c, &w).unwrap(), expected, "word {w}");
        }
    }

    fn ab(vf: ValueFunction) -> (WeightedAutomaton, WeightedAutomaton) {
        (
            fixtures::single_state(vf.clone(), int(1), int(0)),
            fixtures::single_state(vf, int(0), int(1)),
        )
    }

    #[test]
    fn motor_max_is_the_abstract_motor() {
        let (a, b) = (fixtures::motor_a(), fixtures::motor_b());
        // both motors are deterministic: max exists only as a nondeterministic automaton
        assert!(matches!(max_omega(&a, &b), Err(Error::Closure(_))));
        let m = initial_choice(&a, &b).unwrap();
        for w in [
            LassoWord::new(["on"], ["slow", "off"]).unwrap(),
            LassoWord::new(Vec::<&str>::new(), vec!["on", "on", "slow"]).unwrap(),
        ] {
            assert_eq!(evaluate_lasso(&m, &w).unwrap(), evaluate_lasso(&b, &w).unwrap());
        }
    }

    #[test]
    fn max_constructions() {
        let (a, b) = ab(ValueFunction::Sup);
        let m = max_omega(&a, &b).unwrap();
        assert!(m.is_deterministic());
        check(&m, &a, &b, |x, y| x.max(y));
        let (a, b) = ab(ValueFunction::LimInf);
        let m = max_omega(&a, &b).unwrap();
        assert!(m.is_deterministic());
        check(&m, &a, &b, |x, y| x.max(y));
        let (a, b) = ab(ValueFunction::LimAvg);
        assert!(matches!(max_omega(&a, &b), Err(Error::Closure(_))));
        let (a, b) = ab(ValueFunction::Disc(rat(1, 2)));
        assert!(matches!(max_omega(&a, &b), Err(Error::Closure(_))));
    }

    #[test]
    fn min_constructions() {
        for vf in [ValueFunction::Sup, ValueFunction::LimInf, ValueFunction::LimSup] {
            let (a, b) = ab(vf);
            let m = min_omega(&a, &b).unwrap();
            assert!(m.is_deterministic());
            check(&m, &a, &b, |x, y| x.min(y));
        }
        let (a, b) = ab(ValueFunction::LimSup);
        assert_eq!(evaluate_lasso(&min_omega(&a, &b).unwrap(), &lasso(&[], &["a", "b"])).unwrap(), int(1));
        let u = initial_choice(&a, &b).unwrap();
        let m = min_omega(&u, &u).unwrap();
        check(&m, &u, &u, |x, y| x.min(y));
        let m = min_omega(&u, &a).unwrap();
        check(&m, &u, &a, |x, y| x.min(y));
        let (a, b) = ab(ValueFunction::LimAvg);
        assert!(matches!(min_omega(&a, &b), Err(Error::Closure(_))));
    }

    #[test]
    fn sum_constructions() {
        for vf in [ValueFunction::Sup, ValueFunction::LimInf, ValueFunction::LimSup, ValueFunction::Disc(rat(1, 2))] {
            let (a, b) = ab(vf);
            let s = sum_omega(&a, &b).unwrap();
            assert!(s.is_deterministic());
            check(&s, &a, &b, |x, y| x + y);
            let u = initial_choice(&a, &b).unwrap();
            check(&sum_omega(&u, &a).unwrap(), &u, &a, |x, y| x + y);
        }
        let (a, b) = ab(ValueFunction::LimSup);
        assert_eq!(evaluate_lasso(&sum_omega(&a, &b).unwrap(), &lasso(&[], &["a", "b"])).unwrap(), int(2));
        let (a, b) = ab(ValueFunction::LimAvg);
        assert!(matches!(sum_omega(&a, &b), Err(Error::Closure(_))));
    }

    #[test]
    fn liminf_sum_alternating_counterexample() {
        // each copy alternates between its high and low weight out of phase
        let (a, b) = ab(ValueFunction::LimInf);
        let s = sum_omega(&a, &b).unwrap();
        assert_eq!(evaluate_lasso(&s, &lasso(&[], &["a", "b"])).unwrap(), int(0));
    }

    #[test]
    fn bank_portfolio() {
        let half = rat(1, 2);
        let c1 = scale(&fixtures::bank_a1(half.clone()), &half).unwrap();
        let c2 = scale(&fixtures::bank_a2(half.clone()), &half).unwrap();
        let s = sum_omega(&c1, &c2).unwrap();
        let w = LassoWord::new(Vec::<&str>::new(), vec!["g1g2"]).unwrap();
        assert_eq!(evaluate_lasso(&s, &w).unwrap(), int(14));
    }

    #[test]
    fn disc_complement() {
        let a = fixtures::half_plus_lambda_disc(rat(1, 2));
        let c = complement_omega(&a).unwrap();
        let weights: Vec<Rational> = c.transitions().iter().map(|t| t.weight.clone()).collect();
        assert_eq!(weights, vec![rat(-1, 4), rat(1, 2)]);
        assert_eq!(evaluate_lasso(&c, &lasso(&[], &["a"])).unwrap(), rat(-1, 2));
        assert_eq!(evaluate_lasso(&a, &lasso(&[], &["a"])).unwrap(), rat(3, 2));
        let total = sum_omega(&a, &c).unwrap();
        for w in words() {
            assert_eq!(evaluate_lasso(&total, &w).unwrap(), int(1));
        }
    }

    #[test]
    fn nlsup_complement() {
        let (a, b) = ab(ValueFunction::LimSup);
        let u = initial_choice(&a, &b).unwrap();
        let c = complement_omega(&u).unwrap();
        for w in words() {
            assert_eq!(evaluate_lasso(&c, &w).unwrap(), int(1) - evaluate_lasso(&u, &w).unwrap());
        }
        assert!(matches!(complement_omega(&a), Err(Error::Closure(_))));
    }

    #[test]
    fn single_weight_complement_is_constant() {
        let a = fixtures::single_state(ValueFunction::LimSup, rat(1, 3), rat(1, 3));
        let u = initial_choice(&a, &a).unwrap();
        let c = complement_omega(&u).unwrap();
        assert_eq!(c.num_states(), 1);
        assert_eq!(evaluate_lasso(&c, &lasso(&[], &["a"])).unwrap(), rat(2, 3));
    }

    #[test]
    fn non_closed_cells() {
        for vf in [ValueFunction::Sup, ValueFunction::LimInf, ValueFunction::LimAvg] {
            let (a, b) = ab(vf);
            assert!(matches!(complement_omega(&a), Err(Error::Closure(_))));
            assert!(matches!(complement_omega(&initial_choice(&a, &b).unwrap()), Err(Error::Closure(_))));
        }
        let (a, b) = ab(ValueFunction::Disc(rat(1, 2)));
        assert!(matches!(complement_omega(&initial_choice(&a, &b).unwrap()), Err(Error::Closure(_))));
    }
}

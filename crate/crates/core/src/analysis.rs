//! Boolean-weight reduction, cut-point languages, isolation and robustness.
//!
//! A threshold `η` is isolated for `L` when some `ε > 0` keeps every value
//! away from it: `|L(w) - η| >= ε` for all words (see
//! [`IsolationResult::Isolated`]). For isolated thresholds the cut-point
//! language `{w : L(w) >= η}` of a deterministic limit-average automaton or
//! of a discounted-sum automaton is ω-regular, and is built here as a Büchi
//! automaton.
//!
//! Disc automata with weights in `{0, 1}` cannot express every Disc language,
//! so [`boolean_weight_reduction`] is limited to limit-average automata.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::automaton::{StateId, Transition, ValueFunction, WeightedAutomaton};
use crate::error::{Error, Result};
use crate::explore::explore;
use crate::omega::{Acceptance, BoolTransition, BooleanOmegaAutomaton};
use crate::rational::{common_denominator, format_rational, int, pow, Rational};
use crate::valuation::{discounted_optimum, evaluate_lasso, scc_cycle_stats, WeightedGraph};
use crate::words::LassoWord;

/// Outcome of an isolation check or probe.
#[derive(Debug, Clone, PartialEq)]
pub enum IsolationResult {
    /// Every word value is at distance at least `margin` from the threshold.
    Isolated { margin: Rational },
    /// A word whose value is (within the probe tolerance of) the threshold.
    NotIsolated { witness: LassoWord, value: Rational },
    /// The probe reached its depth limit without a verdict.
    Unknown { depth: usize },
}

/// A Büchi automaton for `{w : L(w) >= eta}` with its provenance.
#[derive(Debug, Clone)]
pub struct CutpointAutomaton {
    pub automaton: BooleanOmegaAutomaton,
    pub source: WeightedAutomaton,
    pub eta: Rational,
    pub eps: Option<Rational>,
    /// Unfolding depth for discounted sources.
    pub depth: Option<usize>,
}

/// Limit-average automaton with weights in `{0, 1}` and the same language.
///
/// With `n` the least common multiple of the weight denominators, states are
/// `Q × {0..n-1}`; the second component accumulates `i/n`, the fractional
/// part of the weight sum. A transition of weight `v = k/n` from `(q, i)`
/// weighs 0 and moves to `i + k` when `i + k < n`, and weighs 1 and moves to
/// `i + k - n` otherwise. Determinism is preserved; all `|Q| * n` states are
/// kept.
pub fn boolean_weight_reduction(a: &WeightedAutomaton) -> Result<WeightedAutomaton> {
    if *a.value_function() != ValueFunction::LimAvg {
        return Err(Error::UnsupportedTag(a.value_function().to_string()));
    }
    for t in a.transitions() {
        if t.weight.is_negative() || t.weight > Rational::one() {
            return Err(Error::WeightOutOfRange(t.weight.clone()));
        }
    }
    let den = common_denominator(a.transitions().iter().map(|t| &t.weight));
    let n = den
        .to_usize()
        .filter(|&n| n.saturating_mul(a.num_states()) <= crate::explore::MAX_CONSTRUCTED_STATES)
        .ok_or_else(|| Error::TooLarge(format!("weight denominator {den}")))?;
    let id = |q: StateId, i: usize| q * n + i;
    let mut states = Vec::with_capacity(a.num_states() * n);
    for q in 0..a.num_states() {
        for i in 0..n {
            states.push(if n == 1 {
                a.state_name(q).to_string()
            } else {
                format!("({},{})", a.state_name(q), i)
            });
        }
    }
    let mut transitions = Vec::with_capacity(a.transitions().len() * n);
    for t in a.transitions() {
        let k = (&t.weight * Rational::from_integer(den.clone()))
            .to_integer()
            .to_usize()
            .expect("weight in [0, 1]");
        for i in 0..n {
            let (j, w) = if i + k < n { (i + k, 0) } else { (i + k - n, 1) };
            transitions.push(Transition {
                source: id(t.source, i),
                symbol: t.symbol,
                target: id(t.target, j),
                weight: int(w),
            });
        }
    }
    WeightedAutomaton::new(
        states,
        id(a.initial(), 0),
        a.alphabet().to_vec(),
        transitions,
        ValueFunction::LimAvg,
    )
}

/// Per-SCC cycle-mean intervals of the automaton graph.
struct SccInfo {
    comp: Vec<usize>,
    reachable: bool,
    stats: crate::valuation::CycleStats,
}

fn scc_intervals(g: &WeightedGraph, root: usize) -> Vec<SccInfo> {
    let reach = g.reachable_from(root);
    let all = vec![true; g.node_count()];
    g.sccs(&all, |_| true)
        .into_iter()
        .filter_map(|comp| {
            let stats = scc_cycle_stats(g, &comp)?;
            Some(SccInfo {
                reachable: reach[comp[0]],
                comp,
                stats,
            })
        })
        .collect()
}

fn require_dlavg(a: &WeightedAutomaton) -> Result<()> {
    if *a.value_function() != ValueFunction::LimAvg {
        return Err(Error::UnsupportedTag(a.value_function().to_string()));
    }
    a.require_total()?;
    if !a.is_deterministic() {
        return Err(Error::NotDeterministic);
    }
    Ok(())
}

/// Decides whether `eta` is isolated for a deterministic limit-average
/// automaton.
///
/// Every run ends in a reachable SCC `C_i`, and the values achievable there
/// fill the interval `[m_i, M_i]` of its minimum and maximum cycle means.
/// Outside all intervals the margin is the distance to the nearest one.
/// Inside an interval the witness mixes the two extreme cycles so that the
/// period mean is exactly `eta`.
pub fn isolation_check_dlavg(a: &WeightedAutomaton, eta: &Rational) -> Result<IsolationResult> {
    require_dlavg(a)?;
    let g = WeightedGraph::of_automaton(a);
    let mut margin: Option<Rational> = None;
    for info in scc_intervals(&g, a.initial()).into_iter().filter(|i| i.reachable) {
        let (m, big_m) = (&info.stats.min_mean, &info.stats.max_mean);
        if m <= eta && eta <= big_m {
            let (stem, period) = mixing_lasso(&g, a.initial(), &info, eta);
            let sym = |e: &usize| a.alphabet()[g.edge(*e).symbol].clone();
            let witness = LassoWord::new(stem.iter().map(sym), period.iter().map(sym))?.normalize();
            let value = evaluate_lasso(a, &witness)?;
            return Ok(IsolationResult::NotIsolated { witness, value });
        }
        let d = if eta > big_m { eta - big_m } else { m - eta };
        if margin.as_ref().map_or(true, |x| d < *x) {
            margin = Some(d);
        }
    }
    Ok(IsolationResult::Isolated {
        margin: margin.expect("a total automaton has a reachable cycle"),
    })
}

/// Stem and period edges of a run whose period has mean exactly `eta`,
/// where `m_i <= eta <= M_i` for the component `info`.
///
/// With `a = W_min - eta * L_min < 0`, `b = W_max - eta * L_max > 0` and
/// `c` the same quantity for the connecting walk `P1 P2` (min cycle start to
/// max cycle start and back), scaled to integers `A`, `B`, `C`, the period
/// `C_min^p (P1 P2)^(r-1) P1 C_max^q P2` has mean `eta` when
/// `p*A + q*B + r*C = 0`: take `r = |A|`, `q = t*|A|/g`, `p = t*B/g + C`
/// with `g = gcd(|A|, B)` and `t` the least positive integer making `p >= 1`.
fn mixing_lasso(g: &WeightedGraph, root: usize, info: &SccInfo, eta: &Rational) -> (Vec<usize>, Vec<usize>) {
    let stats = &info.stats;
    let in_comp = {
        let mut member = vec![false; g.node_count()];
        for &v in &info.comp {
            member[v] = true;
        }
        move |e: &crate::valuation::GraphEdge| member[e.from] && member[e.to]
    };
    let start = |cycle: &[usize]| g.edge(cycle[0]).from;
    let stem_to = |v: usize| g.path(root, v, |_| true).expect("component is reachable");
    if stats.min_mean == *eta {
        let c = stats.min_cycle.clone();
        return (stem_to(start(&c)), c);
    }
    if stats.max_mean == *eta {
        let c = stats.max_cycle.clone();
        return (stem_to(start(&c)), c);
    }
    let (cmin, cmax) = (&stats.min_cycle, &stats.max_cycle);
    let (s1, s2) = (start(cmin), start(cmax));
    let p1 = g.path(s1, s2, &in_comp).expect("strongly connected");
    let p2 = g.path(s2, s1, &in_comp).expect("strongly connected");
    let excess = |edges: &[usize]| {
        edges.iter().map(|&e| &g.edge(e).weight - eta).sum::<Rational>()
    };
    let (a, b) = (excess(cmin), excess(cmax));
    let c = excess(&p1) + excess(&p2);
    let den = common_denominator([&a, &b, &c]);
    let scale = |x: &Rational| (x * Rational::from_integer(den.clone())).to_integer();
    let (big_a, big_b, big_c) = (scale(&a).abs(), scale(&b), scale(&c));
    let gcd = big_a.gcd(&big_b);
    let (qa, pb) = (&big_a / &gcd, &big_b / &gcd);
    // least t >= 1 with t * pb + C >= 1
    let mut t = BigInt::one();
    if &pb + &big_c < BigInt::one() {
        t = (BigInt::one() - &big_c).div_ceil(&pb);
    }
    let p = (&t * &pb + &big_c).to_usize().expect("repetition count fits in memory");
    let q = (&t * &qa).to_usize().expect("repetition count fits in memory");
    let r = big_a.to_usize().expect("repetition count fits in memory");
    let mut period = Vec::new();
    for _ in 0..p {
        period.extend_from_slice(cmin);
    }
    for _ in 1..r {
        period.extend_from_slice(&p1);
        period.extend_from_slice(&p2);
    }
    period.extend_from_slice(&p1);
    for _ in 0..q {
        period.extend_from_slice(cmax);
    }
    period.extend_from_slice(&p2);
    (stem_to(s1), period)
}

/// Büchi automaton for `{w : L_A(w) >= eta}` of a deterministic
/// limit-average automaton: an edge is accepting when its source lies in an
/// SCC whose minimum cycle mean exceeds `eta`.
pub fn cutpoint_dlavg(a: &WeightedAutomaton, eta: &Rational) -> Result<CutpointAutomaton> {
    if let IsolationResult::NotIsolated { witness, value } = isolation_check_dlavg(a, eta)? {
        return Err(Error::NotIsolated {
            eta: eta.clone(),
            witness: Some(witness),
            value,
        });
    }
    let g = WeightedGraph::of_automaton(a);
    let mut accepting_state = vec![false; a.num_states()];
    for info in scc_intervals(&g, a.initial()) {
        if info.stats.min_mean > *eta {
            for &v in &info.comp {
                accepting_state[v] = true;
            }
        }
    }
    let transitions = a
        .transitions()
        .iter()
        .map(|t| BoolTransition {
            source: t.source,
            symbol: t.symbol,
            target: t.target,
            accepting: accepting_state[t.source],
        })
        .collect();
    let automaton = BooleanOmegaAutomaton::new(
        Acceptance::Buchi,
        a.states().to_vec(),
        a.initial(),
        a.alphabet().to_vec(),
        transitions,
    )?;
    Ok(CutpointAutomaton {
        automaton,
        source: a.clone(),
        eta: eta.clone(),
        eps: None,
        depth: None,
    })
}

fn require_disc(a: &WeightedAutomaton) -> Result<Rational> {
    match a.value_function() {
        ValueFunction::Disc(l) => {
            a.require_total()?;
            Ok(l.clone())
        }
        other => Err(Error::UnsupportedTag(other.to_string())),
    }
}

/// `u_n = V * lambda^n / (1 - lambda)`, the largest possible contribution
/// of the weights after position `n` (`V` = largest absolute weight).
pub fn tail_bound(a: &WeightedAutomaton, lambda: &Rational, n: usize) -> Rational {
    a.max_abs_weight() * pow(lambda, n) / (Rational::one() - lambda)
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum Unfold {
    Node(usize, StateId, Rational),
    Accept,
    Reject,
}

/// Büchi automaton for `{w : L_A(w) >= eta}` of a discounted-sum automaton,
/// assuming `|L_A(w) - eta| > eps` for every word.
///
/// Picks the least `n` with `u_n < eps`, unfolds the automaton to depth `n`
/// tracking exact discounted prefix values (nodes with equal depth, state
/// and value are merged), and sends each depth-`n` node to an accepting
/// universal sink when its value is at least `eta + eps - u_n`, and to a
/// rejecting sink otherwise.
pub fn cutpoint_ddisc(a: &WeightedAutomaton, eta: &Rational, eps: &Rational) -> Result<CutpointAutomaton> {
    if !eps.is_positive() {
        return Err(Error::EpsNotPositive);
    }
    let lambda = require_disc(a)?;
    let mut n = 0;
    while tail_bound(a, &lambda, n) >= *eps {
        n += 1;
    }
    let threshold = eta + eps - tail_bound(a, &lambda, n);
    let leaf = |value: &Rational| {
        if *value >= threshold {
            Unfold::Accept
        } else {
            Unfold::Reject
        }
    };
    let init = if n == 0 {
        leaf(&Rational::zero())
    } else {
        Unfold::Node(0, a.initial(), Rational::zero())
    };
    let discounts: Vec<Rational> = (0..n).map(|d| pow(&lambda, d)).collect();
    let explored = explore(
        a.alphabet().len(),
        init,
        |k| match k {
            Unfold::Node(d, q, v) => format!("({},{},{})", a.state_name(*q), d, format_rational(v)),
            Unfold::Accept => "accept".to_string(),
            Unfold::Reject => "reject".to_string(),
        },
        |k, sym| match k {
            Unfold::Node(d, q, v) => a
                .successors(*q, sym)
                .map(|t| {
                    let value = v + &discounts[*d] * &t.weight;
                    let next = if d + 1 == n {
                        leaf(&value)
                    } else {
                        Unfold::Node(d + 1, t.target, value)
                    };
                    (next, false)
                })
                .collect(),
            Unfold::Accept => vec![(Unfold::Accept, true)],
            Unfold::Reject => vec![(Unfold::Reject, false)],
        },
    )?;
    let transitions = explored
        .edges
        .into_iter()
        .map(|(source, symbol, target, accepting)| BoolTransition {
            source,
            symbol,
            target,
            accepting,
        })
        .collect();
    let automaton =
        BooleanOmegaAutomaton::new(Acceptance::Buchi, explored.names, 0, a.alphabet().to_vec(), transitions)?;
    Ok(CutpointAutomaton {
        automaton,
        source: a.clone(),
        eta: eta.clone(),
        eps: Some(eps.clone()),
        depth: Some(n),
    })
}

/// Semi-decision of isolation for discounted-sum automata.
///
/// For `n = 1..=max_depth`: if every depth-`n` prefix value lies outside
/// `[eta - delta - u_n, eta + delta + u_n]`, every word value is more than
/// `delta` away from `eta` and the result is `Isolated(delta)`. Otherwise
/// each prefix is completed by an optimal (maximizing, then minimizing)
/// memoryless continuation; a completed word whose exact value is within
/// `delta` of `eta` is returned as `NotIsolated`. `Unknown` when neither
/// happens up to `max_depth`.
pub fn isolation_probe_disc(
    a: &WeightedAutomaton,
    eta: &Rational,
    delta: &Rational,
    max_depth: usize,
) -> Result<IsolationResult> {
    if !delta.is_positive() {
        return Err(Error::EpsNotPositive);
    }
    let lambda = require_disc(a)?;
    let g = WeightedGraph::of_automaton(a);
    let best = discounted_optimum(&g, &lambda)?;
    let worst = discounted_optimum(&g.negated(), &lambda)?;
    // (state, prefix value) -> a prefix word reaching it
    let mut level: HashMap<(StateId, Rational), Vec<usize>> = HashMap::new();
    level.insert((a.initial(), Rational::zero()), Vec::new());
    let mut discount = Rational::one();
    for n in 1..=max_depth {
        let mut next: HashMap<(StateId, Rational), Vec<usize>> = HashMap::new();
        let mut keys: Vec<_> = level.into_iter().collect();
        keys.sort_by(|x, y| x.1.cmp(&y.1));
        for ((q, v), word) in keys {
            for sym in 0..a.alphabet().len() {
                for t in a.successors(q, sym) {
                    let key = (t.target, &v + &discount * &t.weight);
                    next.entry(key).or_insert_with(|| {
                        let mut w = word.clone();
                        w.push(sym);
                        w
                    });
                }
            }
        }
        level = next;
        discount *= &lambda;
        let u = tail_bound(a, &lambda, n);
        let (lo, hi) = (eta - delta - &u, eta + delta + &u);
        if level.keys().all(|(_, v)| *v < lo || *v > hi) {
            return Ok(IsolationResult::Isolated { margin: delta.clone() });
        }
        let mut candidates: Vec<_> = level.iter().collect();
        candidates.sort_by(|x, y| x.1.cmp(y.1));
        for ((q, _), word) in candidates {
            for sol in [&best, &worst] {
                let (stem, cycle) = sol.run_from(&g, *q);
                let sym = |s: usize| a.alphabet()[s].clone();
                let prefix = word
                    .iter()
                    .map(|&s| sym(s))
                    .chain(stem.iter().map(|&e| sym(g.edge(e).symbol)));
                let witness = LassoWord::new(prefix, cycle.iter().map(|&e| sym(g.edge(e).symbol)))?.normalize();
                let value = evaluate_lasso(a, &witness)?;
                if (&value - eta).abs() <= *delta {
                    return Ok(IsolationResult::NotIsolated { witness, value });
                }
            }
        }
    }
    Ok(IsolationResult::Unknown { depth: max_depth })
}

/// Bound on `D_sup(L_A, L_B)` for any `eps`-approximation `B` of `A`:
/// `eps` for `Sup`, `LimSup`, `LimInf` and `LimAvg`, `eps / (1 - lambda)`
/// for `Disc`.
pub fn dsup_bound(vf: &ValueFunction, eps: &Rational) -> Result<Rational> {
    match vf {
        ValueFunction::Disc(lambda) => Ok(eps / (Rational::one() - lambda)),
        f if f.is_finite_word() => Err(Error::TagMismatch(f.to_string(), "an infinite-word value function".into())),
        _ => Ok(eps.clone()),
    }
}

/// Largest `|L_A(w) - L_B(w)|` over the sample; a lower bound on
/// `D_sup(L_A, L_B)`. Zero for an empty sample.
pub fn sampled_dsup(a: &WeightedAutomaton, b: &WeightedAutomaton, sample: &[LassoWord]) -> Result<Rational> {
    if a.value_function() != b.value_function() {
        return Err(Error::TagMismatch(a.value_function().to_string(), b.value_function().to_string()));
    }
    let mut best = Rational::zero();
    for w in sample {
        let d = (evaluate_lasso(a, w)? - evaluate_lasso(b, w)?).abs();
        if d > best {
            best = d;
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::omega::lasso_membership;
    use crate::rational::rat;

    fn lasso(u: &[&str], v: &[&str]) -> LassoWord {
        LassoWord::new(u.iter().copied(), v.iter().copied()).unwrap()
    }

    fn words() -> Vec<LassoWord> {
        let mut out = Vec::new();
        let syms = ["a", "b"];
        for u in 0..3usize {
            for v in 1..4usize {
                for bits in 0..(1 << (u + v)) {
                    let word: Vec<&str> = (0..u + v).map(|i| syms[(bits >> i) & 1]).collect();
                    out.push(LassoWord::new(word[..u].to_vec(), word[u..].to_vec()).unwrap());
                }
            }
        }
        out
    }

    #[test]
    fn reduction_of_a_half_loop() {
        let a = WeightedAutomaton::builder(ValueFunction::LimAvg)
            .alphabet(["a"])
            .edge("q", "a", "q", rat(1, 2))
            .build()
            .unwrap();
        let r = boolean_weight_reduction(&a).unwrap();
        assert_eq!(r.num_states(), 2);
        let ws: Vec<Rational> = r.transitions().iter().map(|t| t.weight.clone()).collect();
        assert_eq!(ws, vec![int(0), int(1)]);
        assert_eq!(evaluate_lasso(&r, &lasso(&[], &["a"])).unwrap(), rat(1, 2));
    }

    #[test]
    fn reduction_keeps_boolean_automata() {
        let a = fixtures::freq_a_limavg();
        let r = boolean_weight_reduction(&a).unwrap();
        assert_eq!(r.num_states(), 1);
        assert_eq!(evaluate_lasso(&r, &lasso(&[], &["a", "b"])).unwrap(), rat(1, 2));
        let bad = fixtures::single_state(ValueFunction::LimAvg, int(2), int(0));
        assert!(matches!(boolean_weight_reduction(&bad), Err(Error::WeightOutOfRange(_))));
    }

    #[test]
    fn two_scc_cutpoint() {
        let a = fixtures::two_scc_limavg();
        assert_eq!(
            isolation_check_dlavg(&a, &rat(1, 2)).unwrap(),
            IsolationResult::Isolated { margin: rat(1, 2) }
        );
        let c = cutpoint_dlavg(&a, &rat(1, 2)).unwrap();
        assert!(c.automaton.is_deterministic());
        for w in words() {
            let expected = w.normalize() == lasso(&[], &["a"]);
            assert_eq!(lasso_membership(&c.automaton, &w).unwrap(), expected, "{w}");
        }
    }

    #[test]
    fn freq_a_threshold_is_not_isolated() {
        let a = fixtures::freq_a_limavg();
        match isolation_check_dlavg(&a, &rat(1, 2)).unwrap() {
            IsolationResult::NotIsolated { witness, value } => {
                assert_eq!(value, rat(1, 2));
                assert_eq!(evaluate_lasso(&a, &witness).unwrap(), rat(1, 2));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(cutpoint_dlavg(&a, &rat(1, 2)), Err(Error::NotIsolated { .. })));
        let low = cutpoint_dlavg(&a, &rat(-1, 1)).unwrap();
        assert!(words().iter().all(|w| lasso_membership(&low.automaton, w).unwrap()));
        assert_eq!(
            isolation_check_dlavg(&a, &int(2)).unwrap(),
            IsolationResult::Isolated { margin: int(1) }
        );
    }

    #[test]
    fn mixing_with_connecting_paths() {
        // min cycle at p (weight 0), max cycle at r (weight 3), linked by a/b
        let a = WeightedAutomaton::builder(ValueFunction::LimAvg)
            .alphabet(["a", "b"])
            .edge("p", "a", "p", int(0))
            .edge("p", "b", "s", int(1))
            .edge("s", "a", "r", int(1))
            .edge("s", "b", "p", int(1))
            .edge("r", "a", "r", int(3))
            .edge("r", "b", "p", int(2))
            .build()
            .unwrap();
        for eta in [rat(1, 7), rat(1, 2), int(1), rat(5, 2), rat(29, 10)] {
            match isolation_check_dlavg(&a, &eta).unwrap() {
                IsolationResult::NotIsolated { value, .. } => assert_eq!(value, eta),
                other => panic!("unexpected {other:?}"),
            }
        }
    }

    #[test]
    fn disc_cutpoint_example() {
        let a = fixtures::single_state(ValueFunction::disc(rat(1, 4)).unwrap(), int(1), int(0));
        let c = cutpoint_ddisc(&a, &rat(1, 2), &rat(1, 8)).unwrap();
        assert_eq!(c.depth, Some(2));
        for w in words() {
            assert_eq!(lasso_membership(&c.automaton, &w).unwrap(), w.symbol_at(0) == "a", "{w}");
            let above = evaluate_lasso(&a, &w).unwrap() >= rat(1, 2);
            assert_eq!(lasso_membership(&c.automaton, &w).unwrap(), above);
        }
        assert_eq!(cutpoint_ddisc(&a, &rat(1, 2), &int(0)).unwrap_err(), Error::EpsNotPositive);
        let empty = cutpoint_ddisc(&a, &int(3), &rat(1, 8)).unwrap();
        assert!(crate::omega::nbw_emptiness(&empty.automaton));
    }

    #[test]
    fn disc_probe() {
        let a = fixtures::single_state(ValueFunction::disc(rat(1, 4)).unwrap(), int(1), int(0));
        assert_eq!(
            isolation_probe_disc(&a, &rat(1, 2), &rat(1, 10), 5).unwrap(),
            IsolationResult::Isolated { margin: rat(1, 10) }
        );
        let b = fixtures::single_state(ValueFunction::disc(rat(1, 2)).unwrap(), int(1), int(0));
        match isolation_probe_disc(&b, &int(1), &rat(1, 10), 4).unwrap() {
            IsolationResult::NotIsolated { value, .. } => assert!((value - int(1)).abs() <= rat(1, 10)),
            IsolationResult::Unknown { .. } => {}
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(
            isolation_probe_disc(&b, &int(1), &rat(1, 10), 0).unwrap(),
            IsolationResult::Unknown { depth: 0 }
        );
    }

    #[test]
    fn robustness_bounds() {
        assert_eq!(dsup_bound(&ValueFunction::LimAvg, &rat(1, 10)).unwrap(), rat(1, 10));
        assert_eq!(dsup_bound(&ValueFunction::Disc(rat(1, 2)), &rat(1, 10)).unwrap(), rat(1, 5));
        assert!(matches!(dsup_bound(&ValueFunction::Sum, &rat(1, 10)), Err(Error::TagMismatch(_, _))));
        let a = fixtures::freq_a_limavg();
        assert_eq!(sampled_dsup(&a, &a, &words()).unwrap(), int(0));
        let b = crate::automaton::epsilon_approximation(&a, &rat(1, 10), 7);
        assert!(sampled_dsup(&a, &b, &words()).unwrap() <= rat(1, 10));
    }
}

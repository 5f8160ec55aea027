//! Boolean ω-automata with accepting edges.
//!
//! A Büchi automaton accepts a word when some run crosses accepting edges
//! infinitely often; a coBüchi automaton accepts when some run eventually
//! crosses accepting edges only. Both are the special case of `LimSup` and
//! `LimInf` automata with weights in `{0, 1}` (accepting edges weigh 1), which
//! is how membership and emptiness are decided.

use std::collections::BTreeSet;

use crate::automaton::{weight_set, StateId, SymbolId, Transition, ValueFunction, WeightedAutomaton};
use crate::error::{Error, Result};
use crate::explore::explore;
use crate::rational::{int, Rational};
use crate::valuation::top_value;
use crate::words::LassoWord;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Acceptance {
    Buchi,
    CoBuchi,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BoolTransition {
    pub source: StateId,
    pub symbol: SymbolId,
    pub target: StateId,
    pub accepting: bool,
}

#[derive(Debug, Clone)]
pub struct BooleanOmegaAutomaton {
    kind: Acceptance,
    // {0,1}-weighted LimSup (Büchi) or LimInf (coBüchi) automaton
    weighted: WeightedAutomaton,
}

impl BooleanOmegaAutomaton {
    pub fn new(
        kind: Acceptance,
        states: Vec<String>,
        initial: StateId,
        alphabet: Vec<String>,
        transitions: Vec<BoolTransition>,
    ) -> Result<Self> {
        let transitions = transitions
            .into_iter()
            .map(|t| Transition {
                source: t.source,
                symbol: t.symbol,
                target: t.target,
                weight: int(t.accepting as i64),
            })
            .collect();
        let weighted = WeightedAutomaton::new(states, initial, alphabet, transitions, vf_of(kind))?;
        weighted.require_total()?;
        Ok(BooleanOmegaAutomaton { kind, weighted })
    }

    fn from_explored(kind: Acceptance, alphabet: &[String], e: crate::explore::Explored<bool>) -> Result<Self> {
        let transitions = e
            .edges
            .into_iter()
            .map(|(source, symbol, target, accepting)| BoolTransition {
                source,
                symbol,
                target,
                accepting,
            })
            .collect();
        Self::new(kind, e.names, 0, alphabet.to_vec(), transitions)
    }

    pub fn kind(&self) -> Acceptance {
        self.kind
    }

    pub fn num_states(&self) -> usize {
        self.weighted.num_states()
    }

    pub fn states(&self) -> &[String] {
        self.weighted.states()
    }

    pub fn state_name(&self, q: StateId) -> &str {
        self.weighted.state_name(q)
    }

    pub fn initial(&self) -> StateId {
        self.weighted.initial()
    }

    pub fn alphabet(&self) -> &[String] {
        self.weighted.alphabet()
    }

    pub fn transitions(&self) -> Vec<BoolTransition> {
        self.weighted
            .transitions()
            .iter()
            .map(|t| BoolTransition {
                source: t.source,
                symbol: t.symbol,
                target: t.target,
                accepting: t.weight == int(1),
            })
            .collect()
    }

    /// `(target, accepting)` for every `symbol`-transition leaving `q`.
    pub fn successors(&self, q: StateId, symbol: SymbolId) -> impl Iterator<Item = (StateId, bool)> + '_ {
        self.weighted
            .successors(q, symbol)
            .map(|t| (t.target, t.weight == int(1)))
    }

    pub fn is_deterministic(&self) -> bool {
        self.weighted.is_deterministic()
    }

    /// The `{0,1}`-weighted `LimSup` (Büchi) or `LimInf` (coBüchi) automaton.
    pub fn as_weighted(&self) -> &WeightedAutomaton {
        &self.weighted
    }
}

fn vf_of(kind: Acceptance) -> ValueFunction {
    match kind {
        Acceptance::Buchi => ValueFunction::LimSup,
        Acceptance::CoBuchi => ValueFunction::LimInf,
    }
}

/// Büchi (from `LimSup`) or coBüchi (from `LimInf`) automaton for
/// `{w : L_A(w) >= v}`: accepting edges are those of weight at least `v`.
pub fn threshold_automaton(a: &WeightedAutomaton, v: &Rational) -> Result<BooleanOmegaAutomaton> {
    let kind = match a.value_function() {
        ValueFunction::LimSup => Acceptance::Buchi,
        ValueFunction::LimInf => Acceptance::CoBuchi,
        other => return Err(Error::UnsupportedTag(other.to_string())),
    };
    let transitions = a
        .transitions()
        .iter()
        .map(|t| BoolTransition {
            source: t.source,
            symbol: t.symbol,
            target: t.target,
            accepting: t.weight >= *v,
        })
        .collect();
    BooleanOmegaAutomaton::new(kind, a.states().to_vec(), a.initial(), a.alphabet().to_vec(), transitions)
}

/// Whether the automaton accepts the lasso word.
///
/// Works on the product of the automaton with the lasso positions: a Büchi
/// automaton accepts when a reachable SCC contains an accepting edge, a
/// coBüchi automaton when the accepting edges alone contain a reachable
/// cycle.
pub fn lasso_membership(b: &BooleanOmegaAutomaton, w: &LassoWord) -> Result<bool> {
    let a = &b.weighted;
    let prefix = a.encode(w.prefix())?;
    let period = a.encode(w.period())?;
    let len = prefix.len() + period.len();
    let symbol_at = |i: usize| if i < prefix.len() { prefix[i] } else { period[i - prefix.len()] };
    let next_pos = |i: usize| if i + 1 < len { i + 1 } else { prefix.len() };
    let id = |q: StateId, i: usize| q * len + i;
    let one = int(1);
    let mut adj: Vec<Vec<(usize, bool)>> = vec![Vec::new(); a.num_states() * len];
    let mut seen = vec![false; adj.len()];
    let root = id(a.initial(), 0);
    seen[root] = true;
    let mut stack = vec![(a.initial(), 0)];
    while let Some((q, i)) = stack.pop() {
        for t in a.successors(q, symbol_at(i)) {
            let succ = (t.target, next_pos(i));
            adj[id(q, i)].push((id(succ.0, succ.1), t.weight == one));
            if !seen[id(succ.0, succ.1)] {
                seen[id(succ.0, succ.1)] = true;
                stack.push(succ);
            }
        }
    }
    let only_accepting = b.kind == Acceptance::CoBuchi;
    let comp = scc_ids(&adj, root, |acc| acc || !only_accepting);
    Ok(adj.iter().enumerate().any(|(u, edges)| {
        edges
            .iter()
            .any(|&(v, acc)| acc && comp[u].is_some() && comp[u] == comp[v])
    }))
}

/// Iterative Tarjan following kept edges only, started from `root` and from
/// every node with outgoing edges; `None` for nodes never visited.
fn scc_ids(adj: &[Vec<(usize, bool)>], root: usize, keep: impl Fn(bool) -> bool) -> Vec<Option<usize>> {
    let n = adj.len();
    let mut index = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut comp = vec![None; n];
    let mut stack = Vec::new();
    let mut next_index = 0;
    let mut next_comp = 0;
    let starts = std::iter::once(root).chain((0..n).filter(|&v| !adj[v].is_empty()));
    for start in starts {
        if index[start] != usize::MAX {
            continue;
        }
        let mut call: Vec<(usize, usize)> = vec![(start, 0)];
        index[start] = next_index;
        low[start] = next_index;
        next_index += 1;
        stack.push(start);
        on_stack[start] = true;
        while let Some(&mut (v, ref mut k)) = call.last_mut() {
            if let Some(&(u, acc)) = adj[v].get(*k) {
                *k += 1;
                if !keep(acc) {
                    continue;
                }
                if index[u] == usize::MAX {
                    index[u] = next_index;
                    low[u] = next_index;
                    next_index += 1;
                    stack.push(u);
                    on_stack[u] = true;
                    call.push((u, 0));
                } else if on_stack[u] {
                    low[v] = low[v].min(index[u]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                loop {
                    let u = stack.pop().expect("tarjan stack");
                    on_stack[u] = false;
                    comp[u] = Some(next_comp);
                    if u == v {
                        break;
                    }
                }
                next_comp += 1;
            }
        }
    }
    comp
}

/// Whether the language is empty.
pub fn nbw_emptiness(b: &BooleanOmegaAutomaton) -> bool {
    accepted_witness(b).is_none()
}

/// Some accepted lasso word, if the language is nonempty.
pub fn accepted_witness(b: &BooleanOmegaAutomaton) -> Option<LassoWord> {
    let (top, witness) = top_value(&b.weighted).expect("total infinite-word automaton");
    (top == int(1)).then_some(witness)
}

/// Complement of a Büchi automaton, as a nondeterministic Büchi automaton.
///
/// Rank-based construction for edge acceptance. A state is a level ranking
/// `f` of the current subset (ranks in `0..=2n`) together with the set `O`
/// of even-ranked nodes still owing a visit to an odd rank. Ranks never
/// increase along edges, and an accepting edge leaving an odd rank must go
/// strictly lower, so a run whose ranks settle on an odd value crosses
/// finitely many accepting edges. An edge of the complement is accepting
/// when `O` empties.
pub fn nbw_complement(b: &BooleanOmegaAutomaton) -> Result<BooleanOmegaAutomaton> {
    if b.kind != Acceptance::Buchi {
        return Err(Error::UnsupportedTag("cobuchi".into()));
    }
    let n = b.num_states();
    let max_rank = 2 * n as u32;
    // ranks[q] = None when q is not in the current level
    type Key = (Vec<Option<u32>>, Vec<bool>);
    let mut init_ranks = vec![None; n];
    init_ranks[b.initial()] = Some(max_rank);
    let init: Key = (init_ranks, vec![false; n]);
    let explored = explore(
        b.alphabet().len(),
        init,
        |(f, o)| {
            let parts: Vec<String> = (0..n)
                .filter_map(|q| {
                    f[q].map(|r| format!("{}:{}{}", b.state_name(q), r, if o[q] { "*" } else { "" }))
                })
                .collect();
            format!("[{}]", parts.join(","))
        },
        |(f, o), sym| {
            // upper bound on the rank of each successor
            let mut bound: Vec<Option<u32>> = vec![None; n];
            for q in 0..n {
                let Some(r) = f[q] else { continue };
                for (t, acc) in b.successors(q, sym) {
                    let cap = if acc && r % 2 == 1 { r - 1 } else { r };
                    bound[t] = Some(bound[t].map_or(cap, |c| c.min(cap)));
                }
            }
            let o_nonempty = o.iter().any(|&x| x);
            let mut from_o = vec![false; n];
            if o_nonempty {
                for q in (0..n).filter(|&q| o[q]) {
                    for (t, _) in b.successors(q, sym) {
                        from_o[t] = true;
                    }
                }
            }
            let level: Vec<usize> = (0..n).filter(|&q| bound[q].is_some()).collect();
            let mut out = Vec::new();
            let mut ranks: Vec<u32> = vec![0; level.len()];
            loop {
                let mut g = vec![None; n];
                let mut o2 = vec![false; n];
                for (i, &q) in level.iter().enumerate() {
                    g[q] = Some(ranks[i]);
                    let tracked = if o_nonempty { from_o[q] } else { true };
                    o2[q] = tracked && ranks[i] % 2 == 0;
                }
                let accepting = !o2.iter().any(|&x| x);
                out.push(((g, o2), accepting));
                // next rank assignment in odometer order
                let mut i = 0;
                loop {
                    if i == level.len() {
                        return out;
                    }
                    if ranks[i] < bound[level[i]].expect("in level") {
                        ranks[i] += 1;
                        break;
                    }
                    ranks[i] = 0;
                    i += 1;
                }
            }
        },
    )?;
    BooleanOmegaAutomaton::from_explored(Acceptance::Buchi, b.alphabet(), explored)
}

/// Deterministic coBüchi automaton for the language of a coBüchi automaton
/// (breakpoint construction, at most `3^n` states).
///
/// A state is `(S, O)`: the reachable subset and the runs that have stayed
/// on accepting edges since the last breakpoint. An edge is rejecting
/// exactly when `O` becomes empty.
pub fn ncw_determinize(b: &BooleanOmegaAutomaton) -> Result<BooleanOmegaAutomaton> {
    if b.kind != Acceptance::CoBuchi {
        return Err(Error::UnsupportedTag("buchi".into()));
    }
    let init: (BTreeSet<StateId>, BTreeSet<StateId>) = ([b.initial()].into(), BTreeSet::new());
    let explored = explore(
        b.alphabet().len(),
        init,
        |(s, o)| format!("({},{})", set_name(b, s), set_name(b, o)),
        |(s, o), sym| {
            let (next_s, next_o, bad) = breakpoint_step(s, o, |q| b.successors(q, sym).collect());
            vec![((next_s, next_o), !bad)]
        },
    )?;
    BooleanOmegaAutomaton::from_explored(Acceptance::CoBuchi, b.alphabet(), explored)
}

fn set_name(b: &BooleanOmegaAutomaton, s: &BTreeSet<StateId>) -> String {
    let names: Vec<&str> = s.iter().map(|&q| b.state_name(q)).collect();
    format!("{{{}}}", names.join(","))
}

/// One breakpoint step; `succ(q)` lists `(target, good)` pairs. Returns the
/// new subset, the new obligation set and whether the step is bad.
fn breakpoint_step(
    s: &BTreeSet<StateId>,
    o: &BTreeSet<StateId>,
    succ: impl Fn(StateId) -> Vec<(StateId, bool)>,
) -> (BTreeSet<StateId>, BTreeSet<StateId>, bool) {
    let mut next_s = BTreeSet::new();
    for &q in s {
        next_s.extend(succ(q).into_iter().map(|(t, _)| t));
    }
    let source = if o.is_empty() { s } else { o };
    let mut next_o = BTreeSet::new();
    for &q in source {
        next_o.extend(succ(q).into_iter().filter(|&(_, good)| good).map(|(t, _)| t));
    }
    let bad = next_o.is_empty();
    (next_s, next_o, bad)
}

/// Deterministic `LimInf` automaton with the same quantitative language.
///
/// With weights `v_1 < ... < v_k`, one breakpoint construction per
/// threshold `v_i` (good edges have weight `>= v_i`) runs on a shared subset
/// component. A transition weighs the largest `v_i` such that none of the
/// components `1..=i` takes a bad step, and at least `v_1`. Since
/// `{w : L(w) >= v_i}` shrinks as `i` grows, the limit inferior of these
/// weights is the largest `v_i` whose coBüchi automaton accepts.
pub fn nlinf_determinize(a: &WeightedAutomaton) -> Result<WeightedAutomaton> {
    if *a.value_function() != ValueFunction::LimInf {
        return Err(Error::UnsupportedTag(a.value_function().to_string()));
    }
    a.require_total()?;
    let values = weight_set(a);
    let k = values.len();
    type Key = (BTreeSet<StateId>, Vec<BTreeSet<StateId>>);
    let init: Key = ([a.initial()].into(), vec![BTreeSet::new(); k]);
    let name_set = |s: &BTreeSet<StateId>| {
        let names: Vec<&str> = s.iter().map(|&q| a.state_name(q)).collect();
        format!("{{{}}}", names.join(","))
    };
    let explored = explore(
        a.alphabet().len(),
        init,
        |(s, os)| {
            let parts: Vec<String> = os.iter().map(name_set).collect();
            format!("({};{})", name_set(s), parts.join(","))
        },
        |(s, os), sym| {
            let mut next_os = Vec::with_capacity(k);
            let mut next_s = BTreeSet::new();
            let mut weight = values[0].clone();
            let mut clean = true;
            for (i, v) in values.iter().enumerate() {
                let (ns, no, bad) = breakpoint_step(s, &os[i], |q| {
                    a.successors(q, sym).map(|t| (t.target, t.weight >= *v)).collect()
                });
                clean &= !bad;
                if clean {
                    weight = v.clone();
                }
                next_s = ns;
                next_os.push(no);
            }
            vec![((next_s, next_os), weight)]
        },
    )?;
    explored.into_weighted(a.alphabet(), ValueFunction::LimInf)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::rational::rat;
    use crate::valuation::evaluate_lasso;

    fn lasso(u: &[&str], v: &[&str]) -> LassoWord {
        LassoWord::new(u.iter().copied(), v.iter().copied()).unwrap()
    }

    #[test]
    fn membership_agrees_with_the_weighted_view() {
        use crate::sampling::{all_lassos, random_automaton, RandomAutomatonSpec};
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(4);
        let words = all_lassos(&["a".to_string(), "b".to_string()], 2, 3);
        for (i, vf) in [ValueFunction::LimSup, ValueFunction::LimInf].iter().cycle().take(60).enumerate() {
            let spec = RandomAutomatonSpec {
                states: 1 + i % 4,
                alphabet: vec!["a".into(), "b".into()],
                weights: vec![int(0), int(1)],
                value_function: vf.clone(),
                deterministic: false,
                max_branching: 2,
            };
            let b = threshold_automaton(&random_automaton(&mut rng, &spec), &int(1)).unwrap();
            for w in &words {
                let expected = crate::valuation::evaluate_lasso(b.as_weighted(), w).unwrap() == int(1);
                assert_eq!(lasso_membership(&b, w).unwrap(), expected, "{w}");
            }
        }
    }

    fn inf_many_a() -> BooleanOmegaAutomaton {
        let a = fixtures::single_state(ValueFunction::LimSup, int(1), int(0));
        threshold_automaton(&a, &int(1)).unwrap()
    }

    #[test]
    fn threshold_languages() {
        let b = inf_many_a();
        assert!(lasso_membership(&b, &lasso(&[], &["a", "b"])).unwrap());
        assert!(!lasso_membership(&b, &lasso(&["a"], &["b"])).unwrap());
        let a = fixtures::single_state(ValueFunction::LimSup, int(1), int(0));
        let all = threshold_automaton(&a, &int(0)).unwrap();
        assert!(all.transitions().iter().all(|t| t.accepting));
        assert!(!nbw_emptiness(&all));
        assert!(nbw_emptiness(&threshold_automaton(&a, &int(2)).unwrap()));
        assert!(matches!(
            threshold_automaton(&fixtures::freq_a_limavg(), &int(0)),
            Err(Error::UnsupportedTag(_))
        ));
    }

    #[test]
    fn complement_of_infinitely_many_a() {
        let c = nbw_complement(&inf_many_a()).unwrap();
        assert!(lasso_membership(&c, &lasso(&[], &["b"])).unwrap());
        assert!(lasso_membership(&c, &lasso(&["a", "a"], &["b"])).unwrap());
        assert!(!lasso_membership(&c, &lasso(&[], &["a", "b"])).unwrap());
        assert!(!lasso_membership(&c, &lasso(&[], &["a"])).unwrap());
    }

    #[test]
    fn complement_of_universal_is_empty() {
        let a = fixtures::single_state(ValueFunction::LimSup, int(1), int(1));
        let all = threshold_automaton(&a, &int(1)).unwrap();
        assert!(nbw_emptiness(&nbw_complement(&all).unwrap()));
    }

    fn eventually_always_a() -> BooleanOmegaAutomaton {
        // guess the point from which only a's follow
        let a = WeightedAutomaton::builder(ValueFunction::LimInf)
            .alphabet(["a", "b"])
            .edge("p", "a", "p", int(0))
            .edge("p", "b", "p", int(0))
            .edge("p", "a", "r", int(0))
            .edge("r", "a", "r", int(1))
            .edge("r", "b", "s", int(0))
            .edge("s", "a", "s", int(0))
            .edge("s", "b", "s", int(0))
            .build()
            .unwrap();
        threshold_automaton(&a, &int(1)).unwrap()
    }

    #[test]
    fn breakpoint_determinization() {
        let n = eventually_always_a();
        let d = ncw_determinize(&n).unwrap();
        assert!(d.is_deterministic());
        for (w, expected) in [
            (lasso(&[], &["a"]), true),
            (lasso(&[], &["a", "b"]), false),
            (lasso(&["b"], &["a"]), true),
        ] {
            assert_eq!(lasso_membership(&n, &w).unwrap(), expected);
            assert_eq!(lasso_membership(&d, &w).unwrap(), expected);
        }
        let empty = threshold_automaton(
            &fixtures::single_state(ValueFunction::LimInf, int(0), int(0)),
            &int(1),
        )
        .unwrap();
        assert!(nbw_emptiness(&ncw_determinize(&empty).unwrap()));
    }

    #[test]
    fn liminf_determinization() {
        let one = fixtures::single_state(ValueFunction::LimInf, int(1), int(1));
        let two = fixtures::single_state(ValueFunction::LimInf, int(2), int(2));
        let u = crate::closure::initial_choice(&one, &two).unwrap();
        let d = nlinf_determinize(&u).unwrap();
        assert!(d.is_deterministic());
        for w in [lasso(&[], &["a"]), lasso(&["b"], &["a", "b"])] {
            assert_eq!(evaluate_lasso(&d, &w).unwrap(), int(2));
        }
        let b = fixtures::single_state(ValueFunction::LimInf, rat(1, 2), int(0));
        let db = nlinf_determinize(&b).unwrap();
        assert_eq!(evaluate_lasso(&db, &lasso(&["b"], &["a"])).unwrap(), rat(1, 2));
        assert_eq!(evaluate_lasso(&db, &lasso(&[], &["a", "b"])).unwrap(), int(0));
    }
}

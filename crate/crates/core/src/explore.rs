//! Breadth-first construction of the reachable part of an implicitly given
//! automaton, shared by every product and subset construction.

use std::collections::{HashMap, VecDeque};
use std::hash::Hash;

use crate::automaton::{SymbolId, Transition, ValueFunction, WeightedAutomaton};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Hard cap on the number of states any construction may reach.
pub const MAX_CONSTRUCTED_STATES: usize = 2_000_000;

/// Reachable states (named) and labelled edges of an implicit automaton.
pub(crate) struct Explored<L> {
    pub names: Vec<String>,
    pub edges: Vec<(usize, SymbolId, usize, L)>,
}

/// Explores from `init`; `succ(key, symbol)` lists successor keys with edge
/// labels. State 0 is the initial state.
pub(crate) fn explore<K, L>(
    num_symbols: usize,
    init: K,
    name: impl Fn(&K) -> String,
    mut succ: impl FnMut(&K, SymbolId) -> Vec<(K, L)>,
) -> Result<Explored<L>>
where
    K: Clone + Eq + Hash,
{
    let mut ids: HashMap<K, usize> = HashMap::new();
    let mut keys = vec![init.clone()];
    ids.insert(init, 0);
    let mut edges = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(id) = queue.pop_front() {
        let key = keys[id].clone();
        for sym in 0..num_symbols {
            for (next, label) in succ(&key, sym) {
                let to = match ids.get(&next) {
                    Some(&t) => t,
                    None => {
                        if keys.len() >= MAX_CONSTRUCTED_STATES {
                            return Err(Error::TooLarge(format!(
                                "construction exceeds {MAX_CONSTRUCTED_STATES} states"
                            )));
                        }
                        let t = keys.len();
                        ids.insert(next.clone(), t);
                        keys.push(next);
                        queue.push_back(t);
                        t
                    }
                };
                edges.push((id, sym, to, label));
            }
        }
    }
    let mut names: Vec<String> = keys.iter().map(&name).collect();
    disambiguate(&mut names);
    Ok(Explored { names, edges })
}

/// Appends `#i` to repeated names so state names stay unique.
fn disambiguate(names: &mut [String]) {
    let mut seen: HashMap<String, usize> = HashMap::new();
    for (i, n) in names.iter_mut().enumerate() {
        let count = seen.entry(n.clone()).or_insert(0);
        *count += 1;
        if *count > 1 {
            n.push_str(&format!("#{i}"));
        }
    }
}

impl Explored<Rational> {
    pub fn into_weighted(self, alphabet: &[String], vf: ValueFunction) -> Result<WeightedAutomaton> {
        let transitions = self
            .edges
            .into_iter()
            .map(|(source, symbol, target, weight)| Transition {
                source,
                symbol,
                target,
                weight,
            })
            .collect();
        WeightedAutomaton::new(self.names, 0, alphabet.to_vec(), transitions, vf)
    }
}

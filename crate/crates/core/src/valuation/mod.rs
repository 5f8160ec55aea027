//! Value functions and exact evaluation of `L_A(w)`, the supremum over runs.
//!
//! Finite words use forward dynamic programming. Lasso words are evaluated on
//! the product of the automaton with the lasso, where every value function
//! has a memoryless optimum:
//!
//! | value function | product-graph quantity |
//! |---|---|
//! | `Sup` | largest edge weight |
//! | `LimSup` | largest weight of an edge lying on a cycle |
//! | `LimInf` | largest `v` such that edges of weight `>= v` contain a cycle |
//! | `LimAvg` | maximum cycle mean (Karp) |
//! | `Disc` | optimal discounted value at the root (policy iteration) |
//!
//! Disc values on long lassos have denominators growing like `lambda^{|v|}`;
//! the library does not cap input sizes.

pub mod discounted;
pub mod graph;
pub mod karp;

use num_traits::{One, Zero};

use crate::automaton::{ValueFunction, WeightedAutomaton};
use crate::error::{Error, Result};
use crate::rational::{int, pow, Rational};
use crate::words::{FiniteWord, LassoWord};

pub use discounted::{discounted_optimum, evaluate_policy, DiscountedSolution};
pub use graph::{GraphEdge, ProductGraph, WeightedGraph};
pub use karp::{cycle_mean, max_mean_cycle, scc_cycle_stats, CycleStats};

/// Value of a nonempty finite weight sequence under `Max`, `Last` or `Sum`.
pub fn value_finite(f: &ValueFunction, seq: &[Rational]) -> Result<Rational> {
    let last = seq.last().ok_or(Error::EmptySequence)?;
    match f {
        ValueFunction::Max => Ok(seq.iter().max().expect("nonempty").clone()),
        ValueFunction::Last => Ok(last.clone()),
        ValueFunction::Sum => Ok(seq.iter().sum()),
        other => Err(Error::WrongArity(other.to_string())),
    }
}

/// Value of the ultimately periodic sequence `prefix · period^ω`.
pub fn value_lasso(f: &ValueFunction, prefix: &[Rational], period: &[Rational]) -> Result<Rational> {
    if period.is_empty() {
        return Err(Error::EmptySequence);
    }
    let pmax = || period.iter().max().expect("nonempty").clone();
    match f {
        ValueFunction::Sup => Ok(prefix.iter().max().map_or_else(pmax, |m| m.clone().max(pmax()))),
        ValueFunction::LimSup => Ok(pmax()),
        ValueFunction::LimInf => Ok(period.iter().min().expect("nonempty").clone()),
        ValueFunction::LimAvg => Ok(period.iter().sum::<Rational>() / int(period.len() as i64)),
        ValueFunction::Disc(lambda) => {
            let head = discounted_prefix(prefix, lambda);
            let cycle = discounted_prefix(period, lambda) / (Rational::one() - pow(lambda, period.len()));
            Ok(head + pow(lambda, prefix.len()) * cycle)
        }
        other => Err(Error::WrongArity(other.to_string())),
    }
}

/// `sum_i lambda^i * seq[i]`.
fn discounted_prefix(seq: &[Rational], lambda: &Rational) -> Rational {
    let mut sum = Rational::zero();
    let mut factor = Rational::one();
    for w in seq {
        sum += &factor * w;
        factor *= lambda;
    }
    sum
}

/// `L_A(w)` for a finite word.
pub fn evaluate_finite(a: &WeightedAutomaton, w: &FiniteWord) -> Result<Rational> {
    let vf = a.value_function();
    if !vf.is_finite_word() {
        return Err(Error::WrongArity(vf.to_string()));
    }
    a.require_total()?;
    let word = a.encode(w.symbols())?;
    let n = a.num_states();
    let (init, rest) = word.split_first().ok_or(Error::EmptySequence)?;
    if *vf == ValueFunction::Last {
        let mut reach = vec![false; n];
        reach[a.initial()] = true;
        let mut best = None::<Rational>;
        for (i, &sym) in word.iter().enumerate() {
            let mut next = vec![false; n];
            for q in (0..n).filter(|&q| reach[q]) {
                for t in a.successors(q, sym) {
                    next[t.target] = true;
                    if i + 1 == word.len() && best.as_ref().map_or(true, |b| t.weight > *b) {
                        best = Some(t.weight.clone());
                    }
                }
            }
            reach = next;
        }
        return Ok(best.expect("total automaton has a run"));
    }
    // best[q]: best value (running max or partial sum) of a run prefix ending in q
    let mut best: Vec<Option<Rational>> = vec![None; n];
    for t in a.successors(a.initial(), *init) {
        relax(&mut best[t.target], t.weight.clone());
    }
    for &sym in rest {
        let mut next: Vec<Option<Rational>> = vec![None; n];
        for q in 0..n {
            let Some(bq) = &best[q] else { continue };
            for t in a.successors(q, sym) {
                let v = match vf {
                    ValueFunction::Max => bq.clone().max(t.weight.clone()),
                    _ => bq + &t.weight,
                };
                relax(&mut next[t.target], v);
            }
        }
        best = next;
    }
    Ok(best.into_iter().flatten().max().expect("total automaton has a run"))
}

fn relax(slot: &mut Option<Rational>, v: Rational) {
    if slot.as_ref().map_or(true, |s| v > *s) {
        *slot = Some(v);
    }
}

/// `L_A(w)` for a lasso word.
pub fn evaluate_lasso(a: &WeightedAutomaton, w: &LassoWord) -> Result<Rational> {
    let vf = a.value_function();
    if vf.is_finite_word() {
        return Err(Error::WrongArity(vf.to_string()));
    }
    let p = ProductGraph::build(a, w)?;
    Ok(graph_top(&p.graph, p.root, vf)?.0)
}

/// Supremum of `L_A` over all infinite words, with a lasso attaining it.
pub fn top_value(a: &WeightedAutomaton) -> Result<(Rational, LassoWord)> {
    let vf = a.value_function();
    if vf.is_finite_word() {
        return Err(Error::WrongArity(vf.to_string()));
    }
    a.require_total()?;
    let g = WeightedGraph::of_automaton(a);
    let (value, prefix, cycle) = graph_top(&g, a.initial(), vf)?;
    let sym = |e: &usize| a.alphabet()[g.edge(*e).symbol].clone();
    let word = LassoWord::new(prefix.iter().map(sym), cycle.iter().map(sym))?;
    Ok((value, word.normalize()))
}

/// Optimal value over infinite paths from `root`, with an optimal path given
/// as edge lists (stem, cycle). Every node reachable from `root` must have
/// an out-edge.
pub(crate) fn graph_top(
    g: &WeightedGraph,
    root: usize,
    vf: &ValueFunction,
) -> Result<(Rational, Vec<usize>, Vec<usize>)> {
    let reach = g.reachable_from(root);
    let reachable_edge = |e: &GraphEdge| reach[e.from];
    let lasso_through = |cycle: Vec<usize>| {
        let start = g.edge(cycle[0]).from;
        let stem = g.path(root, start, |_| true).expect("cycle is reachable");
        (stem, cycle)
    };
    match vf {
        ValueFunction::Sup => {
            let (e, edge) = g
                .edges()
                .iter()
                .enumerate()
                .filter(|(_, e)| reachable_edge(e))
                .max_by(|x, y| x.1.weight.cmp(&y.1.weight).then(y.0.cmp(&x.0)))
                .ok_or(Error::Acyclic)?;
            let mut stem = g.path(root, edge.from, |_| true).expect("reachable");
            stem.push(e);
            let (tail, cycle) = g.close_walk(edge.to);
            stem.extend(tail);
            Ok((edge.weight.clone(), stem, cycle))
        }
        ValueFunction::LimSup => {
            let mut best: Option<usize> = None;
            for comp in g.sccs(&reach, |_| true) {
                for e in g.internal_edges(&comp, |_| true) {
                    if best.map_or(true, |b| g.edge(e).weight > g.edge(b).weight) {
                        best = Some(e);
                    }
                }
            }
            let e = best.ok_or(Error::Acyclic)?;
            let cycle = g.cycle_through(e, |_| true).expect("edge inside a component");
            let (stem, cycle) = lasso_through(cycle);
            Ok((g.edge(e).weight.clone(), stem, cycle))
        }
        ValueFunction::LimInf => {
            let mut weights: Vec<&Rational> =
                g.edges().iter().filter(|e| reachable_edge(e)).map(|e| &e.weight).collect();
            weights.sort();
            weights.dedup();
            for v in weights.into_iter().rev() {
                let keep = |e: &GraphEdge| e.weight >= *v;
                for comp in g.sccs(&reach, keep) {
                    if let Some(&e) = g.internal_edges(&comp, keep).first() {
                        let cycle = g.cycle_through(e, keep).expect("edge inside a component");
                        let (stem, cycle) = lasso_through(cycle);
                        return Ok((v.clone(), stem, cycle));
                    }
                }
            }
            Err(Error::Acyclic)
        }
        ValueFunction::LimAvg => {
            let stats = max_mean_cycle(g, root)?;
            let (stem, cycle) = lasso_through(stats.max_cycle);
            Ok((stats.max_mean, stem, cycle))
        }
        ValueFunction::Disc(lambda) => {
            let sol = discounted_optimum(g, lambda)?;
            let (stem, cycle) = sol.run_from(g, root);
            Ok((sol.values[root].clone(), stem, cycle))
        }
        other => Err(Error::WrongArity(other.to_string())),
    }
}

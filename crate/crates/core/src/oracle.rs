//! Brute-force reference evaluators.
//!
//! Nothing here calls into [`crate::valuation`]: value functions are
//! re-implemented, runs on finite words are enumerated one by one, and lasso
//! values are the best value over all simple-path-plus-cycle ("rho") runs of
//! the product with the word. These are slow and capped, and exist to check
//! the fast evaluators.

use num_traits::{One, Zero};

use crate::automaton::{SymbolId, ValueFunction, WeightedAutomaton};
use crate::error::{Error, Result};
use crate::rational::{int, Rational};
use crate::valuation::WeightedGraph;
use crate::words::{FiniteWord, LassoWord};

/// Largest number of runs enumerated on a finite word.
pub const MAX_RUNS: usize = 1_000_000;
/// Largest product (states × lasso positions) explored on a lasso word.
pub const MAX_PRODUCT_NODES: usize = 200;
/// Largest graph handed to [`enumerate_simple_cycles`].
pub const MAX_CYCLE_GRAPH_NODES: usize = 12;

fn finite_value(f: &ValueFunction, seq: &[Rational]) -> Rational {
    match f {
        ValueFunction::Max => seq.iter().fold(seq[0].clone(), |m, w| if *w > m { w.clone() } else { m }),
        ValueFunction::Last => seq[seq.len() - 1].clone(),
        ValueFunction::Sum => seq.iter().fold(Rational::zero(), |s, w| s + w),
        _ => unreachable!("checked by the caller"),
    }
}

/// Value of `prefix · cycle^ω`, written without the shared helpers.
pub fn rho_value(f: &ValueFunction, prefix: &[Rational], cycle: &[Rational]) -> Rational {
    let smallest = |s: &[Rational]| s.iter().fold(s[0].clone(), |m, w| if *w < m { w.clone() } else { m });
    let largest = |s: &[Rational]| s.iter().fold(s[0].clone(), |m, w| if *w > m { w.clone() } else { m });
    match f {
        ValueFunction::Sup => {
            let c = largest(cycle);
            if prefix.is_empty() {
                c
            } else {
                largest(prefix).max(c)
            }
        }
        ValueFunction::LimSup => largest(cycle),
        ValueFunction::LimInf => smallest(cycle),
        ValueFunction::LimAvg => cycle.iter().fold(Rational::zero(), |s, w| s + w) / int(cycle.len() as i64),
        ValueFunction::Disc(lambda) => {
            // x = c_0 + λ(c_1 + ... + λ(c_{k-1} + λ x)), solved for x
            let mut horner = Rational::zero();
            let mut lk = Rational::one();
            for c in cycle.iter().rev() {
                horner = c + lambda * horner;
                lk *= lambda;
            }
            let mut value = horner / (Rational::one() - lk);
            for p in prefix.iter().rev() {
                value = p + lambda * value;
            }
            value
        }
        _ => unreachable!("checked by the caller"),
    }
}

fn encode(a: &WeightedAutomaton, symbols: &[String]) -> Result<Vec<SymbolId>> {
    symbols
        .iter()
        .map(|s| a.symbol_index(s).ok_or_else(|| Error::AlphabetMismatch(s.clone())))
        .collect()
}

/// `L_A(w)` by enumerating every run on the finite word `w`.
pub fn brute_value_finite(a: &WeightedAutomaton, w: &FiniteWord) -> Result<Rational> {
    let f = a.value_function();
    if !f.is_finite_word() {
        return Err(Error::WrongArity(f.to_string()));
    }
    if w.is_empty() {
        return Err(Error::EmptySequence);
    }
    let word = encode(a, w.symbols())?;
    let mut best: Option<Rational> = None;
    let mut runs = 0usize;
    let mut weights: Vec<Rational> = Vec::with_capacity(word.len());
    // explicit DFS stack of (state, depth, index of next transition to try)
    let mut stack = vec![(a.initial(), 0usize, 0usize)];
    while let Some(top) = stack.last_mut() {
        let (q, depth, next) = *top;
        if depth == word.len() {
            runs += 1;
            if runs > MAX_RUNS {
                return Err(Error::TooLarge(format!("more than {MAX_RUNS} runs")));
            }
            let v = finite_value(f, &weights);
            if best.as_ref().map_or(true, |b| v > *b) {
                best = Some(v);
            }
            stack.pop();
            weights.pop();
            continue;
        }
        let options: Vec<_> = a.successors(q, word[depth]).collect();
        if next < options.len() {
            top.2 += 1;
            weights.push(options[next].weight.clone());
            stack.push((options[next].target, depth + 1, 0));
        } else {
            stack.pop();
            weights.pop();
        }
    }
    // an automaton with no run on w assigns no value; reject such input
    best.ok_or_else(|| Error::InvalidAutomaton("no run on the word".into()))
}

/// `L_A(w)` for a lasso word, as the best value over all rho-shaped runs of
/// the product of `A` with the positions of `w`.
pub fn brute_value_lasso(a: &WeightedAutomaton, w: &LassoWord) -> Result<Rational> {
    let f = a.value_function();
    if f.is_finite_word() {
        return Err(Error::WrongArity(f.to_string()));
    }
    let prefix = encode(a, w.prefix())?;
    let period = encode(a, w.period())?;
    let positions = prefix.len() + period.len();
    let nodes = a.num_states() * positions;
    if nodes > MAX_PRODUCT_NODES {
        return Err(Error::TooLarge(format!("{nodes} product nodes")));
    }
    let symbol = |pos: usize| if pos < prefix.len() { prefix[pos] } else { period[pos - prefix.len()] };
    let next_pos = |pos: usize| if pos + 1 == positions { prefix.len() } else { pos + 1 };
    let id = |q: usize, pos: usize| q * positions + pos;
    // out[node] = (successor node, weight)
    let mut out: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); nodes];
    for q in 0..a.num_states() {
        for pos in 0..positions {
            for t in a.successors(q, symbol(pos)) {
                out[id(q, pos)].push((id(t.target, next_pos(pos)), t.weight.clone()));
            }
        }
    }
    let mut best: Option<Rational> = None;
    let mut on_path: Vec<Option<usize>> = vec![None; nodes];
    let mut path_nodes = vec![id(a.initial(), 0)];
    let mut path_weights: Vec<Rational> = Vec::new();
    on_path[path_nodes[0]] = Some(0);
    let mut cursor = vec![0usize];
    while let Some(&v) = path_nodes.last() {
        let i = *cursor.last().expect("aligned with path");
        if i == out[v].len() {
            on_path[v] = None;
            path_nodes.pop();
            cursor.pop();
            path_weights.pop();
            continue;
        }
        *cursor.last_mut().expect("aligned with path") += 1;
        let (u, ref weight) = out[v][i];
        if let Some(at) = on_path[u] {
            let mut cycle = path_weights[at..].to_vec();
            cycle.push(weight.clone());
            let value = rho_value(f, &path_weights[..at], &cycle);
            if best.as_ref().map_or(true, |b| value > *b) {
                best = Some(value);
            }
        } else {
            on_path[u] = Some(path_nodes.len());
            path_nodes.push(u);
            path_weights.push(weight.clone());
            cursor.push(0);
        }
    }
    best.ok_or_else(|| Error::InvalidAutomaton("no infinite run on the word".into()))
}

/// Bounds `[lo, hi]` on a discounted value from the best prefix value over
/// the first `depth` letters and the tail bound `V λ^depth / (1 - λ)`.
pub fn truncated_disc_bounds(a: &WeightedAutomaton, w: &LassoWord, depth: usize) -> Result<(Rational, Rational)> {
    let lambda = match a.value_function() {
        ValueFunction::Disc(l) => l.clone(),
        other => return Err(Error::UnsupportedTag(other.to_string())),
    };
    let word = encode(a, w.unroll(depth.max(1))?.symbols())?;
    let mut best: Vec<Option<Rational>> = vec![None; a.num_states()];
    best[a.initial()] = Some(Rational::zero());
    let mut factor = Rational::one();
    for &sym in word.iter().take(depth) {
        let mut next: Vec<Option<Rational>> = vec![None; a.num_states()];
        for (q, v) in best.iter().enumerate() {
            let Some(v) = v else { continue };
            for t in a.successors(q, sym) {
                let cand = v + &factor * &t.weight;
                let slot = &mut next[t.target];
                if slot.as_ref().map_or(true, |s| cand > *s) {
                    *slot = Some(cand);
                }
            }
        }
        best = next;
        factor *= &lambda;
    }
    let top = best.into_iter().flatten().max().ok_or(Error::EmptySequence)?;
    let v = a
        .transitions()
        .iter()
        .map(|t| if t.weight < Rational::zero() { -t.weight.clone() } else { t.weight.clone() })
        .max()
        .unwrap_or_else(Rational::zero);
    let tail = v * factor / (Rational::one() - &lambda);
    Ok((&top - &tail, top + tail))
}

/// Every simple cycle of a small graph as an edge list, each listed once
/// (rotated to start at its smallest node), with its mean weight.
pub fn enumerate_simple_cycles(g: &WeightedGraph) -> Result<Vec<(Vec<usize>, Rational)>> {
    let n = g.node_count();
    if n > MAX_CYCLE_GRAPH_NODES {
        return Err(Error::TooLarge(format!("{n} nodes")));
    }
    let mut cycles = Vec::new();
    for start in 0..n {
        let mut visited = vec![false; n];
        let mut path: Vec<usize> = Vec::new();
        search(g, start, start, &mut visited, &mut path, &mut cycles);
    }
    Ok(cycles)
}

fn search(
    g: &WeightedGraph,
    start: usize,
    v: usize,
    visited: &mut [bool],
    path: &mut Vec<usize>,
    out: &mut Vec<(Vec<usize>, Rational)>,
) {
    visited[v] = true;
    for &e in g.out_edges(v) {
        let to = g.edge(e).to;
        if to < start {
            continue;
        }
        path.push(e);
        if to == start {
            let total = path.iter().fold(Rational::zero(), |s, &e| s + &g.edge(e).weight);
            out.push((path.clone(), total / int(path.len() as i64)));
        } else if !visited[to] {
            search(g, start, to, visited, path, out);
        }
        path.pop();
    }
    visited[v] = false;
}

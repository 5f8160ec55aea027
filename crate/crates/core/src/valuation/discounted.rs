//! Optimal discounted sums on finite graphs by exact policy iteration.
//!
//! A memoryless policy picks one out-edge per node; its run from any node is
//! a path into a cycle, so its value has a closed form. Improvement switches
//! every node whose best one-step lookahead is strictly better than its
//! current value, picking the best edge (ties by smallest target name, then
//! weight). The loop ends at a policy satisfying the Bellman equation.

use num_traits::One;

use super::graph::WeightedGraph;
use crate::error::{Error, Result};
use crate::rational::{pow, Rational};

#[derive(Debug, Clone, PartialEq)]
pub struct DiscountedSolution {
    /// Optimal value of every node.
    pub values: Vec<Rational>,
    /// Chosen out-edge of every node; following it attains `values`.
    pub policy: Vec<usize>,
}

impl DiscountedSolution {
    /// Edges of the policy run from `start`: path before the cycle, then
    /// the cycle.
    pub fn run_from(&self, g: &WeightedGraph, start: usize) -> (Vec<usize>, Vec<usize>) {
        let mut first_visit = vec![usize::MAX; g.node_count()];
        let mut walk = Vec::new();
        let mut v = start;
        while first_visit[v] == usize::MAX {
            first_visit[v] = walk.len();
            let e = self.policy[v];
            walk.push(e);
            v = g.edge(e).to;
        }
        let cycle = walk.split_off(first_visit[v]);
        (walk, cycle)
    }
}

/// Unique fixed point of `val(s) = max_{(s,s',w)} w + lambda * val(s')`.
pub fn discounted_optimum(g: &WeightedGraph, lambda: &Rational) -> Result<DiscountedSolution> {
    if !(lambda > &Rational::from_integer(0.into()) && lambda < &Rational::one()) {
        return Err(Error::InvalidLambda(lambda.clone()));
    }
    let n = g.node_count();
    for v in 0..n {
        if g.out_edges(v).is_empty() {
            return Err(Error::DeadEnd(g.name(v).to_string()));
        }
    }
    let order_key = |e: usize| {
        let edge = g.edge(e);
        (g.name(edge.to), edge.weight.clone())
    };
    let mut policy: Vec<usize> = (0..n)
        .map(|v| *g.out_edges(v).iter().min_by_key(|&&e| order_key(e)).expect("out-degree >= 1"))
        .collect();
    loop {
        let values = evaluate_policy(g, &policy, lambda);
        let mut changed = false;
        for v in 0..n {
            let lookahead = |e: usize| &g.edge(e).weight + lambda * &values[g.edge(e).to];
            let mut best = policy[v];
            let mut best_val = lookahead(best);
            for &e in g.out_edges(v) {
                let val = lookahead(e);
                if val > best_val || (val == best_val && order_key(e) < order_key(best)) {
                    best = e;
                    best_val = val;
                }
            }
            if best_val > values[v] {
                policy[v] = best;
                changed = true;
            }
        }
        if !changed {
            return Ok(DiscountedSolution { values, policy });
        }
    }
}

/// Values of a memoryless policy, computed exactly along each rho-shaped run.
pub fn evaluate_policy(g: &WeightedGraph, policy: &[usize], lambda: &Rational) -> Vec<Rational> {
    let n = g.node_count();
    let mut values: Vec<Option<Rational>> = vec![None; n];
    let mut on_path = vec![usize::MAX; n];
    for start in 0..n {
        if values[start].is_some() {
            continue;
        }
        let mut path = Vec::new();
        let mut v = start;
        while values[v].is_none() && on_path[v] == usize::MAX {
            on_path[v] = path.len();
            path.push(v);
            v = g.edge(policy[v]).to;
        }
        let mut tail_end = path.len();
        if values[v].is_none() {
            // v closes a new cycle path[i..]
            let i = on_path[v];
            let cycle = &path[i..];
            let k = cycle.len();
            let weights: Vec<&Rational> = cycle.iter().map(|&c| &g.edge(policy[c]).weight).collect();
            let denom = Rational::one() - pow(lambda, k);
            for (offset, &c) in cycle.iter().enumerate() {
                let mut sum = Rational::from_integer(0.into());
                let mut factor = Rational::one();
                for j in 0..k {
                    sum += &factor * weights[(offset + j) % k];
                    factor *= lambda;
                }
                values[c] = Some(sum / &denom);
            }
            tail_end = i;
        }
        for &u in path[..tail_end].iter().rev() {
            let e = g.edge(policy[u]);
            let next = values[e.to].as_ref().expect("successor already valued");
            values[u] = Some(&e.weight + lambda * next);
        }
        for &u in &path {
            on_path[u] = usize::MAX;
        }
    }
    values.into_iter().map(|v| v.expect("all nodes valued")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::rational::{int, rat};
    use proptest::prelude::*;

    #[test]
    fn self_loop_is_geometric() {
        let mut g = WeightedGraph::new();
        g.add_node("s");
        g.add_edge(0, 0, int(3), 0);
        let sol = discounted_optimum(&g, &rat(1, 2)).unwrap();
        assert_eq!(sol.values[0], int(6));
    }

    #[test]
    fn picks_the_better_loop() {
        let mut g = WeightedGraph::new();
        for n in ["s", "x", "y"] {
            g.add_node(n);
        }
        g.add_edge(0, 1, int(0), 0);
        g.add_edge(0, 2, int(0), 0);
        g.add_edge(1, 1, int(0), 0);
        g.add_edge(2, 2, int(1), 0);
        let sol = discounted_optimum(&g, &rat(1, 2)).unwrap();
        assert_eq!(sol.values[2], int(2));
        assert_eq!(sol.values[0], int(1));
        assert_eq!(g.edge(sol.policy[0]).to, 2);
    }

    #[test]
    fn bank_values() {
        let a = fixtures::bank_a1(rat(1, 2));
        let g = WeightedGraph::of_automaton(&a);
        let sol = discounted_optimum(&g, &rat(1, 2)).unwrap();
        assert_eq!(sol.values, vec![int(16), int(16)]);
        let (prefix, cycle) = sol.run_from(&g, 1);
        assert_eq!(prefix.len(), 1);
        assert_eq!(cycle.len(), 1);
    }

    #[test]
    fn dead_end_is_reported() {
        let mut g = WeightedGraph::new();
        g.add_node("s");
        g.add_node("t");
        g.add_edge(0, 1, int(1), 0);
        assert_eq!(discounted_optimum(&g, &rat(1, 2)), Err(Error::DeadEnd("t".into())));
    }

    fn arb_graph() -> impl Strategy<Value = WeightedGraph> {
        (1usize..6).prop_flat_map(|n| {
            (
                proptest::collection::vec((0..n, -3i64..4), n),
                proptest::collection::vec((0..n, 0..n, -3i64..4), 0..10),
            )
                .prop_map(move |(base, extra)| {
                    let mut g = WeightedGraph::new();
                    for i in 0..n {
                        g.add_node(format!("n{i}"));
                    }
                    for (u, (v, w)) in base.into_iter().enumerate() {
                        g.add_edge(u, v, int(w), 0);
                    }
                    for (u, v, w) in extra {
                        g.add_edge(u, v, int(w), 0);
                    }
                    g
                })
        })
    }

    proptest! {
        #[test]
        fn bellman_equation_holds_exactly(g in arb_graph(), lam in prop::sample::select(vec![(1i64, 4i64), (1, 2), (3, 4)])) {
            let lambda = rat(lam.0, lam.1);
            let sol = discounted_optimum(&g, &lambda).unwrap();
            for v in 0..g.node_count() {
                let best = g.out_edges(v).iter()
                    .map(|&e| &g.edge(e).weight + &lambda * &sol.values[g.edge(e).to])
                    .max().unwrap();
                prop_assert_eq!(&best, &sol.values[v]);
                let e = sol.policy[v];
                prop_assert_eq!(&g.edge(e).weight + &lambda * &sol.values[g.edge(e).to], sol.values[v].clone());
            }
        }
    }
}

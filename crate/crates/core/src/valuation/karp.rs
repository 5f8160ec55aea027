//! Exact maximum and minimum cycle means (Karp's recurrence) with witness
//! cycles.

use num_traits::Zero;

use super::graph::WeightedGraph;
use crate::error::{Error, Result};
use crate::rational::{int, Rational};

/// Extreme cycle means over some set of cycles, each with a witness cycle
/// given as a list of edge indices.
#[derive(Debug, Clone, PartialEq)]
pub struct CycleStats {
    pub max_mean: Rational,
    pub min_mean: Rational,
    pub max_cycle: Vec<usize>,
    pub min_cycle: Vec<usize>,
}

/// Arithmetic mean of the weights along `cycle`.
pub fn cycle_mean(g: &WeightedGraph, cycle: &[usize]) -> Rational {
    let total: Rational = cycle.iter().map(|&e| g.edge(e).weight.clone()).sum();
    total / int(cycle.len() as i64)
}

/// Max and min cycle means over all cycles reachable from `root`.
pub fn max_mean_cycle(g: &WeightedGraph, root: usize) -> Result<CycleStats> {
    let reach = g.reachable_from(root);
    let mut best: Option<CycleStats> = None;
    for comp in g.sccs(&reach, |_| true) {
        let Some(s) = scc_cycle_stats(g, &comp) else {
            continue;
        };
        best = Some(match best {
            None => s,
            Some(mut b) => {
                if s.max_mean > b.max_mean {
                    b.max_mean = s.max_mean;
                    b.max_cycle = s.max_cycle;
                }
                if s.min_mean < b.min_mean {
                    b.min_mean = s.min_mean;
                    b.min_cycle = s.min_cycle;
                }
                b
            }
        });
    }
    best.ok_or(Error::Acyclic)
}

/// Cycle means of one strongly connected component, or `None` when the
/// component has no internal edge (a single node without a self-loop).
pub fn scc_cycle_stats(g: &WeightedGraph, comp: &[usize]) -> Option<CycleStats> {
    let (max_mean, max_cycle) = extreme_mean(g, comp, false)?;
    let (neg_min, min_cycle) = extreme_mean(g, comp, true)?;
    Some(CycleStats {
        max_mean,
        min_mean: -neg_min,
        max_cycle,
        min_cycle,
    })
}

/// Karp's maximum cycle mean inside `comp` (weights negated when `negate`),
/// with a witness cycle taken from the tight-edge subgraph.
fn extreme_mean(g: &WeightedGraph, comp: &[usize], negate: bool) -> Option<(Rational, Vec<usize>)> {
    let n = comp.len();
    let mut local = vec![usize::MAX; g.node_count()];
    for (i, &v) in comp.iter().enumerate() {
        local[v] = i;
    }
    let edges = g.internal_edges(comp, |_| true);
    if edges.is_empty() {
        return None;
    }
    let weight = |e: usize| {
        let w = &g.edge(e).weight;
        if negate {
            -w.clone()
        } else {
            w.clone()
        }
    };

    // d[k][v]: best weight of a walk with exactly k edges from comp[0] to v.
    let mut d: Vec<Vec<Option<Rational>>> = vec![vec![None; n]; n + 1];
    d[0][0] = Some(Rational::zero());
    for k in 1..=n {
        let (prev, cur) = d.split_at_mut(k);
        let (prev, cur) = (&prev[k - 1], &mut cur[0]);
        for &e in &edges {
            let (u, v) = (local[g.edge(e).from], local[g.edge(e).to]);
            if let Some(du) = &prev[u] {
                let cand = du + weight(e);
                if cur[v].as_ref().map_or(true, |dv| cand > *dv) {
                    cur[v] = Some(cand);
                }
            }
        }
    }

    let mut mu: Option<Rational> = None;
    for v in 0..n {
        let Some(dn) = &d[n][v] else { continue };
        let worst = (0..n)
            .filter_map(|k| d[k][v].as_ref().map(|dk| (dn - dk) / int((n - k) as i64)))
            .min()?;
        if mu.as_ref().map_or(true, |m| worst > *m) {
            mu = Some(worst);
        }
    }
    let mu = mu?;

    // Longest-path potentials under weights w - mu (no positive cycles).
    let potential: Vec<Rational> = (0..n)
        .map(|v| {
            (0..n)
                .filter_map(|k| d[k][v].as_ref().map(|dk| dk - &mu * int(k as i64)))
                .max()
                .expect("every node of a component is reachable from its first node")
        })
        .collect();
    let tight = |e: &super::graph::GraphEdge| {
        let (u, v) = (local[e.from], local[e.to]);
        let w = if negate { -e.weight.clone() } else { e.weight.clone() };
        &potential[u] + w - &mu == potential[v]
    };
    let mut member = vec![false; g.node_count()];
    for &v in comp {
        member[v] = true;
    }
    let in_comp = |e: &super::graph::GraphEdge| member[e.from] && member[e.to];
    for sub in g.sccs(&member, |e| in_comp(e) && tight(e)) {
        if let Some(&e) = g.internal_edges(&sub, |e| tight(e)).first() {
            let cycle = g
                .cycle_through(e, |e| in_comp(e) && tight(e))
                .expect("edge inside a component lies on a cycle");
            return Some((mu, cycle));
        }
    }
    unreachable!("a cycle of maximum mean consists of tight edges")
}

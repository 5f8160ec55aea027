//! Weighted directed graphs: the automaton's own transition graph and the
//! product of an automaton with a lasso word.

use std::collections::{HashMap, VecDeque};

use crate::automaton::{StateId, SymbolId, WeightedAutomaton};
use crate::error::Result;
use crate::rational::Rational;
use crate::words::LassoWord;

#[derive(Debug, Clone, PartialEq)]
pub struct GraphEdge {
    pub from: usize,
    pub to: usize,
    pub weight: Rational,
    /// Symbol read along this edge.
    pub symbol: SymbolId,
}

#[derive(Debug, Clone, Default)]
pub struct WeightedGraph {
    names: Vec<String>,
    edges: Vec<GraphEdge>,
    out: Vec<Vec<usize>>,
}

impl WeightedGraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_node(&mut self, name: impl Into<String>) -> usize {
        self.names.push(name.into());
        self.out.push(Vec::new());
        self.names.len() - 1
    }

    pub fn add_edge(&mut self, from: usize, to: usize, weight: Rational, symbol: SymbolId) -> usize {
        self.edges.push(GraphEdge {
            from,
            to,
            weight,
            symbol,
        });
        let id = self.edges.len() - 1;
        self.out[from].push(id);
        id
    }

    pub fn node_count(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn edges(&self) -> &[GraphEdge] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> &GraphEdge {
        &self.edges[e]
    }

    pub fn out_edges(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    /// Nodes are states, edges are transitions (labelled by their symbol).
    pub fn of_automaton(a: &WeightedAutomaton) -> Self {
        let mut g = WeightedGraph::new();
        for name in a.states() {
            g.add_node(name.clone());
        }
        for t in a.transitions() {
            g.add_edge(t.source, t.target, t.weight.clone(), t.symbol);
        }
        g
    }

    /// Same graph with every weight negated.
    pub fn negated(&self) -> Self {
        let mut g = self.clone();
        for e in &mut g.edges {
            e.weight = -e.weight.clone();
        }
        g
    }

    /// Nodes reachable from `root`.
    pub fn reachable_from(&self, root: usize) -> Vec<bool> {
        let mut seen = vec![false; self.node_count()];
        let mut stack = vec![root];
        seen[root] = true;
        while let Some(v) = stack.pop() {
            for &e in &self.out[v] {
                let w = self.edges[e].to;
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen
    }

    /// Strongly connected components of the subgraph induced by the nodes in
    /// `nodes` and the edges accepted by `keep`. Components come out in
    /// reverse topological order (iterative Tarjan).
    pub fn sccs(&self, nodes: &[bool], keep: impl Fn(&GraphEdge) -> bool) -> Vec<Vec<usize>> {
        let n = self.node_count();
        let mut index = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut on_stack = vec![false; n];
        let mut stack = Vec::new();
        let mut comps = Vec::new();
        let mut next = 0;
        for start in 0..n {
            if !nodes[start] || index[start] != usize::MAX {
                continue;
            }
            // (node, position in its out list)
            let mut call: Vec<(usize, usize)> = vec![(start, 0)];
            index[start] = next;
            low[start] = next;
            next += 1;
            stack.push(start);
            on_stack[start] = true;
            while let Some(&mut (v, ref mut pos)) = call.last_mut() {
                if *pos < self.out[v].len() {
                    let e = &self.edges[self.out[v][*pos]];
                    *pos += 1;
                    let w = e.to;
                    if !nodes[w] || !keep(e) {
                        continue;
                    }
                    if index[w] == usize::MAX {
                        index[w] = next;
                        low[w] = next;
                        next += 1;
                        stack.push(w);
                        on_stack[w] = true;
                        call.push((w, 0));
                    } else if on_stack[w] {
                        low[v] = low[v].min(index[w]);
                    }
                } else {
                    call.pop();
                    if let Some(&(parent, _)) = call.last() {
                        low[parent] = low[parent].min(low[v]);
                    }
                    if low[v] == index[v] {
                        let mut comp = Vec::new();
                        loop {
                            let w = stack.pop().expect("tarjan stack");
                            on_stack[w] = false;
                            comp.push(w);
                            if w == v {
                                break;
                            }
                        }
                        comp.sort_unstable();
                        comps.push(comp);
                    }
                }
            }
        }
        comps
    }

    /// Edges of the subgraph (kept by `keep`) with both ends in `comp`.
    pub fn internal_edges(&self, comp: &[usize], keep: impl Fn(&GraphEdge) -> bool) -> Vec<usize> {
        let mut member = vec![false; self.node_count()];
        for &v in comp {
            member[v] = true;
        }
        comp.iter()
            .flat_map(|&v| self.out[v].iter().copied())
            .filter(|&e| member[self.edges[e].to] && keep(&self.edges[e]))
            .collect()
    }

    /// Shortest edge path from `from` to `to` using edges accepted by `keep`.
    pub fn path(&self, from: usize, to: usize, keep: impl Fn(&GraphEdge) -> bool) -> Option<Vec<usize>> {
        if from == to {
            return Some(Vec::new());
        }
        let mut pred: Vec<Option<usize>> = vec![None; self.node_count()];
        let mut seen = vec![false; self.node_count()];
        seen[from] = true;
        let mut queue = VecDeque::from([from]);
        while let Some(v) = queue.pop_front() {
            for &e in &self.out[v] {
                let edge = &self.edges[e];
                if seen[edge.to] || !keep(edge) {
                    continue;
                }
                seen[edge.to] = true;
                pred[edge.to] = Some(e);
                if edge.to == to {
                    let mut path = Vec::new();
                    let mut cur = to;
                    while cur != from {
                        let pe = pred[cur].expect("bfs predecessor");
                        path.push(pe);
                        cur = self.edges[pe].from;
                    }
                    path.reverse();
                    return Some(path);
                }
                queue.push_back(edge.to);
            }
        }
        None
    }

    /// A cycle through `edge` inside the subgraph kept by `keep`, if any.
    pub fn cycle_through(&self, edge: usize, keep: impl Fn(&GraphEdge) -> bool) -> Option<Vec<usize>> {
        let e = &self.edges[edge];
        let back = self.path(e.to, e.from, keep)?;
        let mut cycle = vec![edge];
        cycle.extend(back);
        Some(cycle)
    }

    /// Follows first out-edges from `start` until a node repeats; returns
    /// the edge path before the repeated node and the cycle after it.
    pub fn close_walk(&self, start: usize) -> (Vec<usize>, Vec<usize>) {
        let mut first_visit: HashMap<usize, usize> = HashMap::new();
        let mut walk = Vec::new();
        let mut v = start;
        loop {
            if let Some(&i) = first_visit.get(&v) {
                let cycle = walk.split_off(i);
                return (walk, cycle);
            }
            first_visit.insert(v, walk.len());
            let e = *self.out[v].first().expect("close_walk needs out-degree >= 1");
            walk.push(e);
            v = self.edges[e].to;
        }
    }
}

/// Product of an automaton with a lasso word: node `(q, i)` means the run is
/// in state `q` about to read position `i`; position `|u|+|v|-1` wraps to
/// `|u|`. Only nodes reachable from `(q_I, 0)` are built; the root is node 0.
#[derive(Debug, Clone)]
pub struct ProductGraph {
    pub graph: WeightedGraph,
    pub root: usize,
    pub nodes: Vec<(StateId, usize)>,
}

impl ProductGraph {
    pub fn build(a: &WeightedAutomaton, word: &LassoWord) -> Result<Self> {
        a.require_total()?;
        let prefix = a.encode(word.prefix())?;
        let period = a.encode(word.period())?;
        let len = prefix.len() + period.len();
        let symbol_at = |i: usize| if i < prefix.len() { prefix[i] } else { period[i - prefix.len()] };
        let next_pos = |i: usize| if i + 1 < len { i + 1 } else { prefix.len() };

        let mut graph = WeightedGraph::new();
        let mut ids: HashMap<(StateId, usize), usize> = HashMap::new();
        let mut nodes = Vec::new();
        let root_key = (a.initial(), 0);
        let mut queue = VecDeque::from([root_key]);
        ids.insert(root_key, graph.add_node(node_name(a, root_key)));
        nodes.push(root_key);
        while let Some(key) = queue.pop_front() {
            let from = ids[&key];
            let (q, i) = key;
            let sym = symbol_at(i);
            for t in a.successors(q, sym) {
                let succ = (t.target, next_pos(i));
                let to = match ids.get(&succ) {
                    Some(&id) => id,
                    None => {
                        let id = graph.add_node(node_name(a, succ));
                        ids.insert(succ, id);
                        nodes.push(succ);
                        queue.push_back(succ);
                        id
                    }
                };
                graph.add_edge(from, to, t.weight.clone(), sym);
            }
        }
        Ok(ProductGraph {
            graph,
            root: 0,
            nodes,
        })
    }
}

fn node_name(a: &WeightedAutomaton, (q, i): (StateId, usize)) -> String {
    format!("({},{})", a.state_name(q), i)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::rational::int;

    #[test]
    fn product_wraps_to_period_start() {
        let a = fixtures::freq_a_limavg();
        let w = LassoWord::new(["b"], ["a", "b"]).unwrap();
        let p = ProductGraph::build(&a, &w).unwrap();
        assert_eq!(p.nodes, vec![(0, 0), (0, 1), (0, 2)]);
        let last = p.graph.out_edges(2)[0];
        assert_eq!(p.graph.edge(last).to, 1);
    }

    #[test]
    fn tarjan_finds_components() {
        let mut g = WeightedGraph::new();
        for i in 0..4 {
            g.add_node(i.to_string());
        }
        g.add_edge(0, 1, int(0), 0);
        g.add_edge(1, 0, int(0), 0);
        g.add_edge(1, 2, int(0), 0);
        g.add_edge(2, 3, int(0), 0);
        g.add_edge(3, 3, int(0), 0);
        let all = vec![true; 4];
        let mut comps = g.sccs(&all, |_| true);
        comps.sort();
        assert_eq!(comps, vec![vec![0, 1], vec![2], vec![3]]);
        assert_eq!(g.internal_edges(&[2], |_| true), Vec::<usize>::new());
        assert_eq!(g.internal_edges(&[3], |_| true).len(), 1);
    }

    #[test]
    fn walks_close_into_lassos() {
        let mut g = WeightedGraph::new();
        for i in 0..3 {
            g.add_node(i.to_string());
        }
        g.add_edge(0, 1, int(0), 0);
        g.add_edge(1, 2, int(0), 0);
        g.add_edge(2, 1, int(0), 0);
        let (prefix, cycle) = g.close_walk(0);
        assert_eq!(prefix, vec![0]);
        assert_eq!(cycle, vec![1, 2]);
        assert_eq!(g.path(0, 2, |_| true), Some(vec![0, 1]));
        assert_eq!(g.cycle_through(2, |_| true), Some(vec![2, 1]));
    }
}

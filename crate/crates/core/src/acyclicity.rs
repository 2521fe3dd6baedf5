//! The adjoint graph and directed-cycle detection.
//!
//! Vertices are dual pairs `X_i = {i, ī}`. There is an edge `X_i → X_j`,
//! weighted by `N_{i ī}^j`, whenever `X_i` is not the vacuum pair and the
//! multiplicity is positive. A rule is acyclic when this graph has no
//! directed cycle (self-loops included).

use std::collections::VecDeque;

use serde::Serialize;

use crate::nilpotency::central_series;
use crate::rule::FusionRule;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DualPair {
    /// Smaller label index of the pair.
    pub label: usize,
    pub dual: usize,
}

impl DualPair {
    pub fn is_self_dual(&self) -> bool {
        self.label == self.dual
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AdjointEdge {
    pub from: usize,
    pub to: usize,
    pub weight: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdjointGraph {
    /// Ordered by smallest member label; vertex 0 is the vacuum pair.
    pub vertices: Vec<DualPair>,
    /// Sorted by `(from, to)`.
    pub edges: Vec<AdjointEdge>,
    vertex_of: Vec<usize>,
}

impl AdjointGraph {
    pub fn vertex_of(&self, label: usize) -> usize {
        self.vertex_of[label]
    }

    pub fn successors(&self, v: usize) -> impl Iterator<Item = &AdjointEdge> {
        self.edges.iter().filter(move |e| e.from == v)
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for e in &self.edges {
            adj[e.from].push(e.to);
        }
        adj
    }

    /// Names of the members of a vertex, e.g. `["a", "ā"]` or `["σ"]`.
    pub fn vertex_names(&self, rule: &FusionRule, v: usize) -> Vec<String> {
        let p = self.vertices[v];
        if p.is_self_dual() {
            vec![rule.label(p.label).to_string()]
        } else {
            vec![rule.label(p.label).to_string(), rule.label(p.dual).to_string()]
        }
    }
}

pub fn adjoint_graph(rule: &FusionRule) -> AdjointGraph {
    let r = rule.rank();
    let mut vertices = Vec::new();
    let mut vertex_of = vec![usize::MAX; r];
    for i in 0..r {
        if vertex_of[i] == usize::MAX {
            let d = rule.dual(i);
            vertex_of[i] = vertices.len();
            vertex_of[d] = vertices.len();
            vertices.push(DualPair { label: i, dual: d });
        }
    }
    let mut edges = Vec::new();
    for (v, pair) in vertices.iter().enumerate().skip(1) {
        let i = pair.label;
        let mut seen = vec![false; vertices.len()];
        for (k, m) in rule.fuse(i, rule.dual(i)) {
            let w = vertex_of[k];
            if !std::mem::replace(&mut seen[w], true) {
                edges.push(AdjointEdge {
                    from: v,
                    to: w,
                    weight: m,
                });
            }
        }
    }
    edges.sort_by_key(|e| (e.from, e.to));
    AdjointGraph {
        vertices,
        edges,
        vertex_of,
    }
}

/// Strongly connected components, in reverse topological order of discovery.
///
/// Iterative Tarjan; vertices are visited in index order.
pub fn strongly_connected_components(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = adj.len();
    let mut index = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut components = Vec::new();
    let mut next = 0;

    for root in 0..n {
        if index[root] != usize::MAX {
            continue;
        }
        let mut call: Vec<(usize, usize)> = vec![(root, 0)];
        index[root] = next;
        low[root] = next;
        next += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&mut (v, ref mut pos)) = call.last_mut() {
            if let Some(&w) = adj[v].get(*pos) {
                *pos += 1;
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
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                let mut comp = Vec::new();
                loop {
                    let w = stack.pop().unwrap();
                    on_stack[w] = false;
                    comp.push(w);
                    if w == v {
                        break;
                    }
                }
                comp.sort_unstable();
                components.push(comp);
            }
        }
    }
    components
}

/// A closed walk `x_{i₁} → … → x_{iₙ} → x_{i₁}` of positive multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleWitness {
    /// `n + 1` labels, first equal to last.
    pub labels: Vec<usize>,
    /// `N_{iₖ īₖ}^{iₖ₊₁}` for each step.
    pub multiplicities: Vec<u32>,
}

impl CycleWitness {
    pub fn len(&self) -> usize {
        self.multiplicities.len()
    }

    pub fn is_empty(&self) -> bool {
        self.multiplicities.is_empty()
    }

    /// Re-evaluates every step against the tensor.
    pub fn is_sound(&self, rule: &FusionRule) -> bool {
        self.labels.len() == self.multiplicities.len() + 1
            && !self.multiplicities.is_empty()
            && self.labels.first() == self.labels.last()
            && self.labels[0] != 0
            && self.labels.windows(2).zip(&self.multiplicities).all(|(w, &m)| {
                m > 0 && rule.n(w[0], rule.dual(w[0]), w[1]) == m
            })
    }

    pub fn names(&self, rule: &FusionRule) -> Vec<String> {
        self.labels.iter().map(|&i| rule.label(i).to_string()).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Acyclicity {
    pub acyclic: bool,
    pub witness: Option<CycleWitness>,
}

/// Shortest cycle through `start` inside one component, by BFS.
fn shortest_cycle_through(adj: &[Vec<usize>], in_comp: &[bool], start: usize) -> Option<Vec<usize>> {
    let n = adj.len();
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    queue.push_back(start);
    let mut visited = vec![false; n];
    visited[start] = true;
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if !in_comp[w] {
                continue;
            }
            if w == start {
                let mut path = vec![v];
                let mut cur = v;
                while cur != start {
                    cur = parent[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            if !visited[w] {
                visited[w] = true;
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    None
}

/// Decides acyclicity; on failure returns a shortest cycle, ties going to
/// the smallest starting vertex.
pub fn is_acyclic(rule: &FusionRule) -> Acyclicity {
    let graph = adjoint_graph(rule);
    let adj = graph.adjacency();
    let n = adj.len();

    let mut cyclic = vec![false; n];
    for comp in strongly_connected_components(&adj) {
        let v = comp[0];
        if comp.len() > 1 || adj[v].contains(&v) {
            for &w in &comp {
                cyclic[w] = true;
            }
        }
    }
    // The vacuum pair has no out-edges and so is never on a cycle.
    debug_assert!(!cyclic[0]);
    if !cyclic.iter().any(|&c| c) {
        return Acyclicity {
            acyclic: true,
            witness: None,
        };
    }

    let comp_id = {
        let mut id = vec![usize::MAX; n];
        for (c, comp) in strongly_connected_components(&adj).into_iter().enumerate() {
            for w in comp {
                id[w] = c;
            }
        }
        id
    };
    let mut best: Option<Vec<usize>> = None;
    for start in (0..n).filter(|&v| cyclic[v]) {
        let in_comp: Vec<bool> = (0..n).map(|w| comp_id[w] == comp_id[start]).collect();
        if let Some(cycle) = shortest_cycle_through(&adj, &in_comp, start) {
            if best.as_ref().is_none_or(|b| cycle.len() < b.len()) {
                best = Some(cycle);
            }
        }
    }
    let cycle = best.expect("a cyclic component contains a cycle");

    let mut labels: Vec<usize> = cycle.iter().map(|&v| graph.vertices[v].label).collect();
    labels.push(labels[0]);
    let multiplicities = labels
        .windows(2)
        .map(|w| rule.n(w[0], rule.dual(w[0]), w[1]))
        .collect();
    Acyclicity {
        acyclic: false,
        witness: Some(CycleWitness {
            labels,
            multiplicities,
        }),
    }
}

/// Outcome of running both decision procedures on one rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TheoremCheck {
    pub acyclic: bool,
    pub nilpotent: bool,
    pub agree: bool,
}

pub fn check_theorem(rule: &FusionRule) -> TheoremCheck {
    let acyclic = is_acyclic(rule).acyclic;
    let nilpotent = central_series(rule).nilpotent;
    TheoremCheck {
        acyclic,
        nilpotent,
        agree: acyclic == nilpotent,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{named_fixture, pointed, su2k, FiniteGroup};

    #[test]
    fn tarjan_finds_components() {
        let adj = vec![vec![1], vec![2], vec![0, 3], vec![], vec![4]];
        let mut comps = strongly_connected_components(&adj);
        comps.sort();
        assert_eq!(comps, vec![vec![0, 1, 2], vec![3], vec![4]]);
    }

    #[test]
    fn ising_graph() {
        let ising = named_fixture("ising").unwrap();
        let g = adjoint_graph(&ising);
        assert_eq!(g.vertices.len(), 3);
        let edges: Vec<_> = g.edges.iter().map(|e| (e.from, e.to, e.weight)).collect();
        assert_eq!(edges, vec![(1, 0, 1), (1, 2, 1), (2, 0, 1)]);
    }

    #[test]
    fn pointed_edges_go_to_vacuum() {
        let z6 = pointed(&FiniteGroup::cyclic(6));
        let g = adjoint_graph(&z6);
        // pairs {0}, {1,5}, {2,4}, {3}
        assert_eq!(g.vertices.len(), 4);
        for v in 1..4 {
            let out: Vec<_> = g.successors(v).collect();
            assert_eq!(out.len(), 1);
            assert_eq!(out[0].to, 0);
        }
        assert_eq!(g.successors(0).count(), 0);
    }

    #[test]
    fn su2_witnesses() {
        assert!(is_acyclic(&su2k(2)).acyclic);
        let a = is_acyclic(&su2k(3));
        assert!(!a.acyclic);
        let w = a.witness.unwrap();
        assert_eq!(w.labels, vec![2, 2]);
        assert!(w.is_sound(&su2k(3)));

        let fib = named_fixture("fibonacci").unwrap();
        let w = is_acyclic(&fib).witness.unwrap();
        assert_eq!(w.names(&fib), vec!["τ", "τ"]);
        assert_eq!(w.multiplicities, vec![1]);
    }

    #[test]
    fn theorem_examples() {
        let c = check_theorem(&named_fixture("ising").unwrap());
        assert_eq!((c.acyclic, c.nilpotent, c.agree), (true, true, true));
        let c = check_theorem(&named_fixture("fibonacci").unwrap());
        assert_eq!((c.acyclic, c.nilpotent, c.agree), (false, false, true));
    }
}

//! Graph and multigraph representations, colourings, bounds, file formats and
//! the exact oracles used to check every other stage.

mod bounds;
mod chromatic;
mod clique;
mod colouring;
pub mod io;
pub mod matching;
mod multigraph;

pub use bounds::{ceil, floor_plus_sqrt, target_palette, within_sqrt_margin, Bounds};
pub use chromatic::{dsatur_greedy, exact_chromatic, k_colour};
pub use clique::{exact_clique_number, maximum_clique};
pub use colouring::{verify_colouring, Colouring};
pub use multigraph::{MultiEdge, Multigraph};

use fixedbitset::FixedBitSet;

/// Caps on the exact searches. Exceeding a cap is reported as
/// [`Error::ResourceLimit`](crate::Error::ResourceLimit), never as a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    pub max_nodes: u64,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_nodes: 20_000_000,
        }
    }
}

/// Simple undirected graph on the dense vertex set `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<FixedBitSet>,
    labels: Option<Vec<String>>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![FixedBitSet::with_capacity(n); n],
            labels: None,
        }
    }

    /// Builds a graph from an edge list. Panics on out-of-range endpoints or
    /// self-loops.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::new(n);
        for i in 0..n {
            g.add_edge(i, (i + 1) % n);
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::new(n);
        for i in 1..n {
            g.add_edge(i - 1, i);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "self-loop at {u}");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u].set(v, false);
        self.adj[v].set(u, false);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbours(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].ones()
    }

    /// Open neighbourhood as a bitset.
    pub fn neighbour_set(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n() {
            for v in self.adj[u].ones() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn set_labels(&mut self, labels: Option<Vec<String>>) {
        if let Some(l) = &labels {
            assert_eq!(l.len(), self.n());
        }
        self.labels = labels;
    }

    pub fn is_clique(&self, vs: &[usize]) -> bool {
        vs.iter()
            .enumerate()
            .all(|(i, &u)| vs[i + 1..].iter().all(|&v| u != v && self.has_edge(u, v)))
    }

    pub fn is_stable(&self, vs: &[usize]) -> bool {
        vs.iter()
            .enumerate()
            .all(|(i, &u)| vs[i + 1..].iter().all(|&v| u != v && !self.has_edge(u, v)))
    }

    /// Induced subgraph on `vs` (in the given order); vertex `i` of the result
    /// is `vs[i]`. Labels are carried over.
    pub fn induced(&self, vs: &[usize]) -> Graph {
        let mut g = Graph::new(vs.len());
        for (i, &u) in vs.iter().enumerate() {
            for (j, &v) in vs.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        if let Some(l) = &self.labels {
            g.labels = Some(vs.iter().map(|&v| l[v].clone()).collect());
        }
        g
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n();
        let mut g = Graph::new(off + other.n());
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(u + off, v + off);
        }
        g
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n());
        let mut g = Graph::new(self.n());
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        if let Some(l) = &self.labels {
            let mut nl = vec![String::new(); l.len()];
            for (v, s) in l.iter().enumerate() {
                nl[perm[v]] = s.clone();
            }
            g.labels = Some(nl);
        }
        g
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_within(&(0..self.n()).collect::<Vec<_>>())
    }

    /// Connected components of the subgraph induced on `vs`.
    pub fn components_within(&self, vs: &[usize]) -> Vec<Vec<usize>> {
        let mut allowed = FixedBitSet::with_capacity(self.n());
        for &v in vs {
            allowed.insert(v);
        }
        let mut seen = FixedBitSet::with_capacity(self.n());
        let mut out = Vec::new();
        let mut sorted = vs.to_vec();
        sorted.sort_unstable();
        for &s in &sorted {
            if seen.contains(s) {
                continue;
            }
            seen.insert(s);
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for w in self.adj[u].ones() {
                    if allowed.contains(w) && !seen.contains(w) {
                        seen.insert(w);
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// True iff the neighbourhood of every vertex is covered by two cliques,
    /// i.e. the complement of every neighbourhood is bipartite.
    pub fn is_quasi_line(&self) -> bool {
        (0..self.n()).all(|v| self.neighbourhood_cobipartite(v))
    }

    fn neighbourhood_cobipartite(&self, v: usize) -> bool {
        let nbrs: Vec<usize> = self.neighbours(v).collect();
        let mut side: Vec<Option<bool>> = vec![None; nbrs.len()];
        for s in 0..nbrs.len() {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut stack = vec![s];
            while let Some(i) = stack.pop() {
                let si = side[i].unwrap();
                for j in 0..nbrs.len() {
                    if i == j || self.has_edge(nbrs[i], nbrs[j]) {
                        continue;
                    }
                    match side[j] {
                        None => {
                            side[j] = Some(!si);
                            stack.push(j);
                        }
                        Some(sj) if sj == si => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }
}

/// Bitset over `0..n` holding `vs`.
pub(crate) fn bitset_of(n: usize, vs: impl IntoIterator<Item = usize>) -> FixedBitSet {
    let mut b = FixedBitSet::with_capacity(n);
    for v in vs {
        b.insert(v);
    }
    b
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn claw_is_not_quasi_line() {
        let claw = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        assert!(!claw.is_quasi_line());
    }

    #[test]
    fn cycles_are_quasi_line() {
        assert!(Graph::cycle(7).is_quasi_line());
        assert!(Graph::cycle(4).is_quasi_line());
    }

    #[test]
    fn line_graph_of_multigraph_is_quasi_line() {
        let mut h = Multigraph::new();
        let a = h.add_vertex("a");
        let b = h.add_vertex("b");
        let c = h.add_vertex("c");
        let d = h.add_vertex("d");
        h.add_edge("1", a, b);
        h.add_edge("2", a, b);
        h.add_edge("3", b, c);
        h.add_edge("4", c, d);
        h.add_edge("5", d, a);
        h.add_edge("6", b, d);
        assert!(h.line_graph().is_quasi_line());
    }

    #[test]
    fn induced_and_components() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (3, 4)]);
        assert_eq!(g.components(), vec![vec![0, 1, 2], vec![3, 4]]);
        let h = g.induced(&[0, 2, 1]);
        assert!(h.has_edge(0, 2) && h.has_edge(1, 2) && !h.has_edge(0, 1));
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut g = Graph::new(n);
                let mut k = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if bits[k] {
                            g.add_edge(u, v);
                        }
                        k += 1;
                    }
                }
                g
            })
        })
    }

    proptest! {
        #[test]
        fn quasi_line_invariant_under_relabelling(
            g in arb_graph(9),
            seed in any::<u64>(),
        ) {
            use rand::seq::SliceRandom;
            use rand::SeedableRng;
            let mut perm: Vec<usize> = (0..g.n()).collect();
            perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
            prop_assert_eq!(g.is_quasi_line(), g.permuted(&perm).is_quasi_line());
        }
    }

    pub(crate) fn small_graph_strategy() -> impl Strategy<Value = Graph> {
        arb_graph(9)
    }
}

#[cfg(test)]
pub(crate) use tests::small_graph_strategy;

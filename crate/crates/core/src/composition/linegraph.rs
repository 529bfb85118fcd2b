//! Recognition of line graphs of multigraphs via Krausz partitions.

use fixedbitset::FixedBitSet;

use crate::graph::{Graph, Multigraph, SearchLimits};
use crate::{Error, Result};

/// A multigraph `H` with `L(H) = g`, where edge `i` of `H` is vertex `i` of
/// `g`, or `None` if `g` is not the line graph of a multigraph.
///
/// True twins are collapsed first; the twin-free quotient is then the line
/// graph of a simple graph, found by searching for a partition of its edges
/// into cliques with every vertex in at most two of them.
pub fn line_graph_root(g: &Graph, limits: &SearchLimits) -> Result<Option<Multigraph>> {
    let n = g.n();
    let (class_of, reps) = twin_classes(g);
    let q = g.induced(&reps);
    let Some(cliques) = krausz(&q, limits)? else {
        return Ok(None);
    };

    // Every quotient vertex becomes an edge between its two cliques, using a
    // private endpoint where it lies in fewer than two.
    let mut h = Multigraph::new();
    for i in 0..cliques.len() {
        h.add_vertex(format!("h{}", i + 1));
    }
    let mut ends: Vec<Vec<usize>> = vec![Vec::new(); q.n()];
    for (i, k) in cliques.iter().enumerate() {
        for v in k.ones() {
            ends[v].push(i);
        }
    }
    for e in &mut ends {
        while e.len() < 2 {
            let name = format!("h{}", h.vertex_count() + 1);
            e.push(h.add_vertex(name));
        }
    }
    for v in 0..n {
        let [a, b] = ends[class_of[v]][..] else { unreachable!() };
        h.add_edge(format!("e{}", v + 1), a, b);
    }
    if h.line_graph().edges() != g.edges() {
        return Err(Error::Contract("line graph root does not reproduce the graph".into()));
    }
    Ok(Some(h))
}

/// Classes of vertices with equal closed neighbourhoods: the class of each
/// vertex and the lowest member of each class.
fn twin_classes(g: &Graph) -> (Vec<usize>, Vec<usize>) {
    let closed: Vec<FixedBitSet> = (0..g.n())
        .map(|v| {
            let mut s = g.neighbour_set(v).clone();
            s.insert(v);
            s
        })
        .collect();
    let mut class_of = vec![usize::MAX; g.n()];
    let mut reps = Vec::new();
    for v in 0..g.n() {
        if class_of[v] != usize::MAX {
            continue;
        }
        class_of[v] = reps.len();
        for w in v + 1..g.n() {
            if class_of[w] == usize::MAX && closed[w] == closed[v] {
                class_of[w] = reps.len();
            }
        }
        reps.push(v);
    }
    (class_of, reps)
}

/// Partition of the edges of `g` into cliques (each of size at least two)
/// with every vertex in at most two cliques.
fn krausz(g: &Graph, limits: &SearchLimits) -> Result<Option<Vec<FixedBitSet>>> {
    if !g.is_quasi_line() {
        return Ok(None);
    }
    let n = g.n();
    let mut order = Vec::with_capacity(n);
    for comp in g.components() {
        // Breadth-first, so only the start vertex of a component meets no
        // existing clique. Start where the fewest splits are possible.
        let start = *comp
            .iter()
            .min_by_key(|&&v| {
                let nb: Vec<usize> = g.neighbours(v).collect();
                co_bipartition(g, &nb).map_or(usize::MAX, |p| p.len())
            })
            .unwrap();
        let mut seen = vec![false; n];
        let mut queue = std::collections::VecDeque::from([start]);
        seen[start] = true;
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for w in g.neighbours(v) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    let mut s = Krausz {
        g,
        order,
        covered: vec![FixedBitSet::with_capacity(n); n],
        cliques: Vec::new(),
        count: vec![0; n],
        nodes: 0,
        limit: limits.max_nodes,
    };
    Ok(if s.search(0)? { Some(s.cliques) } else { None })
}

struct Krausz<'a> {
    g: &'a Graph,
    order: Vec<usize>,
    /// `covered[v]`: neighbours `w` with edge `vw` already in a clique.
    covered: Vec<FixedBitSet>,
    cliques: Vec<FixedBitSet>,
    /// Number of cliques containing each vertex.
    count: Vec<u8>,
    nodes: u64,
    limit: u64,
}

impl Krausz<'_> {
    fn search(&mut self, idx: usize) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.limit {
            return Err(Error::ResourceLimit { nodes: self.limit });
        }
        let Some(&v) = self.order.get(idx) else {
            return Ok(true);
        };
        let mut uncovered = self.g.neighbour_set(v).clone();
        uncovered.difference_with(&self.covered[v]);
        if uncovered.is_clear() {
            return self.search(idx + 1);
        }
        match self.count[v] {
            2 => Ok(false),
            1 => {
                let mut k = uncovered;
                k.insert(v);
                self.try_cliques(idx, &[k])
            }
            _ => {
                // Split the neighbourhood into two cliques: each component of
                // the complement of G[N(v)] is 2-coloured, in either of two ways.
                let nb: Vec<usize> = uncovered.ones().collect();
                let Some(parts) = co_bipartition(self.g, &nb) else {
                    return Ok(false);
                };
                let c = parts.len();
                for mask in 0u64..1 << (c - 1).min(62) {
                    let mut k1 = FixedBitSet::with_capacity(self.g.n());
                    let mut k2 = FixedBitSet::with_capacity(self.g.n());
                    k1.insert(v);
                    k2.insert(v);
                    for (i, (a, b)) in parts.iter().enumerate() {
                        let (p, q) = if i > 0 && mask >> (i - 1) & 1 == 1 { (b, a) } else { (a, b) };
                        k1.extend(p.iter().copied());
                        k2.extend(q.iter().copied());
                    }
                    let ks: Vec<FixedBitSet> = [k1, k2].into_iter().filter(|k| k.count_ones(..) > 1).collect();
                    if self.try_cliques(idx, &ks)? {
                        return Ok(true);
                    }
                }
                Ok(false)
            }
        }
    }

    fn try_cliques(&mut self, idx: usize, ks: &[FixedBitSet]) -> Result<bool> {
        for k in ks {
            let members: Vec<usize> = k.ones().collect();
            if !self.g.is_clique(&members)
                || members.iter().any(|&u| self.count[u] >= 2 || self.covered[u].intersection(k).next().is_some())
            {
                return Ok(false);
            }
        }
        // Two new cliques share only the current vertex, so they never cover
        // the same edge.
        for k in ks {
            self.add(k);
        }
        if self.search(idx + 1)? {
            return Ok(true);
        }
        for k in ks.iter().rev() {
            self.remove(k);
        }
        Ok(false)
    }

    fn add(&mut self, k: &FixedBitSet) {
        for u in k.ones() {
            self.count[u] += 1;
            self.covered[u].union_with(k);
            self.covered[u].set(u, false);
        }
        self.cliques.push(k.clone());
    }

    fn remove(&mut self, k: &FixedBitSet) {
        self.cliques.pop();
        for u in k.ones() {
            self.count[u] -= 1;
            self.covered[u].difference_with(k);
        }
    }
}

/// Components of the complement of `g[vs]`, each split into its two colour
/// classes, or `None` if that complement is not bipartite.
fn co_bipartition(g: &Graph, vs: &[usize]) -> Option<Vec<(Vec<usize>, Vec<usize>)>> {
    let mut side: Vec<Option<bool>> = vec![None; vs.len()];
    let mut parts = Vec::new();
    for start in 0..vs.len() {
        if side[start].is_some() {
            continue;
        }
        side[start] = Some(false);
        let (mut a, mut b) = (Vec::new(), Vec::new());
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            let si = side[i].unwrap();
            if si { b.push(vs[i]) } else { a.push(vs[i]) }
            for j in 0..vs.len() {
                if j == i || g.has_edge(vs[i], vs[j]) {
                    continue;
                }
                match side[j] {
                    None => {
                        side[j] = Some(!si);
                        stack.push(j);
                    }
                    Some(sj) if sj == si => return None,
                    _ => {}
                }
            }
        }
        parts.push((a, b));
    }
    Some(parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lim() -> SearchLimits {
        SearchLimits::default()
    }

    fn k4() -> Multigraph {
        let mut h = Multigraph::new();
        for i in 0..4 {
            h.add_vertex(format!("{i}"));
        }
        let mut id = 0;
        for a in 0..4 {
            for b in a + 1..4 {
                h.add_edge(format!("{id}"), a, b);
                id += 1;
            }
        }
        h
    }

    #[test]
    fn recovers_k4() {
        let g = k4().line_graph();
        let root = line_graph_root(&g, &lim()).unwrap().unwrap();
        assert_eq!(root.line_graph(), g);
        assert_eq!(root.vertex_count(), 4);
    }

    #[test]
    fn claw_and_k5_minus_edge_are_not_line_graphs() {
        let claw = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        assert!(line_graph_root(&claw, &lim()).unwrap().is_none());
        // The wheel W5 is claw-free but not a line graph.
        let mut w5 = Graph::cycle(5).disjoint_union(&Graph::new(1));
        for i in 0..5 {
            w5.add_edge(i, 5);
        }
        assert!(line_graph_root(&w5, &lim()).unwrap().is_none());
    }

    #[test]
    fn parallel_edges_via_twins() {
        let mut h = Multigraph::new();
        let a = h.add_vertex("a");
        let b = h.add_vertex("b");
        let c = h.add_vertex("c");
        h.add_edge("1", a, b);
        h.add_edge("2", a, b);
        h.add_edge("3", b, c);
        h.add_edge("4", c, a);
        h.add_edge("5", c, c);
        let g = h.line_graph();
        let root = line_graph_root(&g, &lim()).unwrap().unwrap();
        assert_eq!(root.line_graph(), g);
    }

    #[test]
    fn cycles_and_edgeless() {
        for n in 3..9 {
            let g = Graph::cycle(n);
            assert_eq!(line_graph_root(&g, &lim()).unwrap().unwrap().line_graph(), g);
        }
        let g = Graph::new(3);
        assert_eq!(line_graph_root(&g, &lim()).unwrap().unwrap().line_graph(), g);
    }

    use proptest::prelude::*;
    proptest! {
        #[test]
        fn random_multigraph_roots(
            nv in 1usize..6,
            raw in proptest::collection::vec((0usize..6, 0usize..6), 0..10),
        ) {
            let mut h = Multigraph::new();
            for i in 0..nv {
                h.add_vertex(format!("{i}"));
            }
            for (i, (a, b)) in raw.into_iter().enumerate() {
                h.add_edge(format!("{i}"), a % nv, b % nv);
            }
            let g = h.line_graph();
            let root = line_graph_root(&g, &lim()).unwrap();
            prop_assert!(root.is_some());
            prop_assert_eq!(root.unwrap().line_graph(), g);
        }

        #[test]
        fn answers_are_sound(g in crate::graph::small_graph_strategy()) {
            if let Some(root) = line_graph_root(&g, &lim()).unwrap() {
                prop_assert_eq!(root.line_graph().edges(), g.edges());
            }
        }
    }
}

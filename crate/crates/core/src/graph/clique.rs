use fixedbitset::FixedBitSet;

use super::{Graph, SearchLimits};
use crate::{Error, Result};

/// A maximum clique, by branch and bound with a greedy-colouring bound.
pub fn maximum_clique(g: &Graph, limits: &SearchLimits) -> Result<Vec<usize>> {
    let mut search = CliqueSearch {
        g,
        best: Vec::new(),
        nodes: 0,
        limit: limits.max_nodes,
    };
    let mut all = FixedBitSet::with_capacity(g.n());
    all.insert_range(..);
    let mut current = Vec::new();
    search.expand(&mut current, all)?;
    let mut best = search.best;
    best.sort_unstable();
    Ok(best)
}

/// `omega(g)`.
pub fn exact_clique_number(g: &Graph, limits: &SearchLimits) -> Result<usize> {
    Ok(maximum_clique(g, limits)?.len())
}

struct CliqueSearch<'a> {
    g: &'a Graph,
    best: Vec<usize>,
    nodes: u64,
    limit: u64,
}

impl CliqueSearch<'_> {
    fn expand(&mut self, current: &mut Vec<usize>, mut cand: FixedBitSet) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.limit {
            return Err(Error::ResourceLimit { nodes: self.limit });
        }
        if cand.is_clear() {
            if current.len() > self.best.len() {
                self.best = current.clone();
            }
            return Ok(());
        }
        let (order, bound) = self.colour_sort(&cand);
        for i in (0..order.len()).rev() {
            if current.len() + bound[i] <= self.best.len() {
                return Ok(());
            }
            let v = order[i];
            let mut next = cand.clone();
            next.intersect_with(self.g.neighbour_set(v));
            current.push(v);
            self.expand(current, next)?;
            current.pop();
            cand.set(v, false);
        }
        Ok(())
    }

    /// Greedy sequential colouring of `cand`; returns vertices sorted by
    /// colour and, for each position, the number of colours up to it.
    fn colour_sort(&self, cand: &FixedBitSet) -> (Vec<usize>, Vec<usize>) {
        let mut uncoloured = cand.clone();
        let mut order = Vec::new();
        let mut bound = Vec::new();
        let mut colour = 0;
        while !uncoloured.is_clear() {
            colour += 1;
            let mut avail = uncoloured.clone();
            while let Some(v) = avail.ones().next() {
                avail.set(v, false);
                avail.difference_with(self.g.neighbour_set(v));
                uncoloured.set(v, false);
                order.push(v);
                bound.push(colour);
            }
        }
        (order, bound)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cliques() {
        let lim = SearchLimits::default();
        assert_eq!(exact_clique_number(&Graph::cycle(5), &lim).unwrap(), 2);
        assert_eq!(exact_clique_number(&Graph::complete(7), &lim).unwrap(), 7);
        assert_eq!(exact_clique_number(&Graph::new(0), &lim).unwrap(), 0);
    }

    #[test]
    fn five_cycle_plus_apex() {
        // C5 with one vertex joined to all of it: largest clique is an edge
        // of the cycle plus the apex.
        let mut g = Graph::new(6);
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(i, 5);
        }
        assert_eq!(exact_clique_number(&g, &SearchLimits::default()).unwrap(), 3);
    }

    #[test]
    fn node_limit_is_reported() {
        let err = maximum_clique(&Graph::complete(10), &SearchLimits { max_nodes: 3 }).unwrap_err();
        assert!(matches!(err, Error::ResourceLimit { .. }));
    }
}

use super::{maximum_clique, Colouring, Graph, SearchLimits};
use crate::{Error, Result};

/// Plain DSATUR greedy colouring (no backtracking).
pub fn dsatur_greedy(g: &Graph) -> Colouring {
    let n = g.n();
    let mut state = Dsatur::new(g, n.max(1));
    for _ in 0..n {
        let v = state.select().expect("uncoloured vertex remains");
        let c = (0..).find(|&c| state.conflicts[v][c] == 0).unwrap();
        state.assign(v, c);
    }
    Colouring::new(state.colour.into_iter().map(|c| c.unwrap()).collect())
}

/// Searches for a proper colouring with at most `k` colours.
///
/// `Ok(None)` means no such colouring exists; hitting the node limit is an
/// error rather than a verdict.
pub fn k_colour(g: &Graph, k: usize, limits: &SearchLimits) -> Result<Option<Colouring>> {
    let n = g.n();
    if n == 0 {
        return Ok(Some(Colouring::new(Vec::new())));
    }
    if k == 0 {
        return Ok(None);
    }
    // A large clique gets colours 0..q-1 up front; any k-colouring can be
    // permuted into that form.
    let clique = maximum_clique(g, limits)?;
    if clique.len() > k {
        return Ok(None);
    }
    let mut state = Dsatur::new(g, k);
    for (c, &v) in clique.iter().enumerate() {
        state.assign(v, c);
    }
    let mut search = Search {
        state,
        nodes: 0,
        limit: limits.max_nodes,
    };
    if search.run(n - clique.len())? {
        let colours = search.state.colour.into_iter().map(|c| c.unwrap()).collect();
        Ok(Some(Colouring::new(colours)))
    } else {
        Ok(None)
    }
}

/// Exact chromatic number and a witness colouring.
///
/// With `budget = Some(b)` the search stops at `b` colours and reports
/// [`Error::Infeasible`] if `chi(g) > b`.
pub fn exact_chromatic(
    g: &Graph,
    budget: Option<usize>,
    limits: &SearchLimits,
) -> Result<(usize, Colouring)> {
    if g.n() == 0 {
        return Ok((0, Colouring::new(Vec::new())));
    }
    let greedy = dsatur_greedy(g);
    let upper = greedy.palette_size();
    let lower = maximum_clique(g, limits)?.len();
    let cap = budget.unwrap_or(upper).min(upper);
    for k in lower..cap.max(lower) {
        if let Some(c) = k_colour(g, k, limits)? {
            return Ok((k, c));
        }
    }
    if upper <= budget.unwrap_or(usize::MAX) {
        Ok((upper, greedy.normalized()))
    } else {
        Err(Error::Infeasible {
            budget: budget.unwrap(),
        })
    }
}

struct Dsatur<'a> {
    g: &'a Graph,
    k: usize,
    colour: Vec<Option<usize>>,
    /// `conflicts[v][c]`: coloured neighbours of `v` with colour `c`.
    conflicts: Vec<Vec<u32>>,
    saturation: Vec<usize>,
    free_degree: Vec<usize>,
    used: Vec<u32>,
}

impl<'a> Dsatur<'a> {
    fn new(g: &'a Graph, k: usize) -> Self {
        let n = g.n();
        Dsatur {
            g,
            k,
            colour: vec![None; n],
            conflicts: vec![vec![0; k + 1]; n],
            saturation: vec![0; n],
            free_degree: (0..n).map(|v| g.degree(v)).collect(),
            used: vec![0; k + 1],
        }
    }

    fn select(&self) -> Option<usize> {
        (0..self.g.n())
            .filter(|&v| self.colour[v].is_none())
            .max_by(|&a, &b| {
                (self.saturation[a], self.free_degree[a])
                    .cmp(&(self.saturation[b], self.free_degree[b]))
                    .then(b.cmp(&a))
            })
    }

    fn assign(&mut self, v: usize, c: usize) {
        if c >= self.conflicts[v].len() {
            for row in &mut self.conflicts {
                row.resize(c + 1, 0);
            }
            self.used.resize(c + 1, 0);
        }
        self.colour[v] = Some(c);
        self.used[c] += 1;
        for w in self.g.neighbours(v) {
            self.free_degree[w] -= 1;
            if self.conflicts[w][c] == 0 {
                self.saturation[w] += 1;
            }
            self.conflicts[w][c] += 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.colour[v].take().unwrap();
        self.used[c] -= 1;
        for w in self.g.neighbours(v) {
            self.free_degree[w] += 1;
            self.conflicts[w][c] -= 1;
            if self.conflicts[w][c] == 0 {
                self.saturation[w] -= 1;
            }
        }
    }

    fn colours_in_use(&self) -> usize {
        self.used.iter().rposition(|&u| u > 0).map_or(0, |i| i + 1)
    }
}

struct Search<'a> {
    state: Dsatur<'a>,
    nodes: u64,
    limit: u64,
}

impl Search<'_> {
    fn run(&mut self, remaining: usize) -> Result<bool> {
        if remaining == 0 {
            return Ok(true);
        }
        self.nodes += 1;
        if self.nodes > self.limit {
            return Err(Error::ResourceLimit { nodes: self.limit });
        }
        let v = self.state.select().unwrap();
        if self.state.saturation[v] >= self.state.k {
            return Ok(false);
        }
        // Only one previously unused colour is worth trying.
        let top = (self.state.colours_in_use() + 1).min(self.state.k);
        for c in 0..top {
            if self.state.conflicts[v][c] != 0 {
                continue;
            }
            self.state.assign(v, c);
            if self.run(remaining - 1)? {
                return Ok(true);
            }
            self.state.unassign(v);
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{exact_clique_number, verify_colouring};
    use proptest::prelude::*;

    fn lim() -> SearchLimits {
        SearchLimits::default()
    }

    /// Complement of `k` disjoint five-cycles.
    fn co_c5s(k: usize) -> Graph {
        let mut g = Graph::new(0);
        for _ in 0..k {
            g = g.disjoint_union(&Graph::cycle(5));
        }
        g.complement()
    }

    #[test]
    fn five_cycle_needs_three() {
        assert_eq!(exact_chromatic(&Graph::cycle(5), None, &lim()).unwrap().0, 3);
    }

    #[test]
    fn complete_graph() {
        assert_eq!(exact_chromatic(&Graph::complete(6), None, &lim()).unwrap().0, 6);
    }

    #[test]
    fn complement_of_two_five_cycles_needs_six() {
        let (chi, c) = exact_chromatic(&co_c5s(2), None, &lim()).unwrap();
        assert_eq!(chi, 6);
        assert!(verify_colouring(&co_c5s(2), &c).unwrap());
    }

    #[test]
    fn budget_infeasibility_is_distinct_from_limit() {
        let err = exact_chromatic(&Graph::cycle(5), Some(2), &lim()).unwrap_err();
        assert_eq!(err, Error::Infeasible { budget: 2 });
        let g = co_c5s(3);
        let err = k_colour(&g, 8, &SearchLimits { max_nodes: 5 }).unwrap_err();
        assert!(matches!(err, Error::ResourceLimit { .. }));
    }

    #[test]
    fn odd_wheel_needs_four() {
        let mut g = Graph::cycle(7).disjoint_union(&Graph::new(1));
        for i in 0..7 {
            g.add_edge(i, 7);
        }
        assert_eq!(exact_chromatic(&g, None, &lim()).unwrap().0, 4);
    }

    proptest! {
        #[test]
        fn witness_is_proper_and_at_least_omega(g in crate::graph::small_graph_strategy()) {
            let (chi, c) = exact_chromatic(&g, None, &lim()).unwrap();
            prop_assert!(verify_colouring(&g, &c).unwrap());
            prop_assert_eq!(c.palette_size(), chi);
            prop_assert!(chi >= exact_clique_number(&g, &lim()).unwrap());
            if chi > 1 {
                prop_assert!(k_colour(&g, chi - 1, &lim()).unwrap().is_none());
            }
        }
    }
}

//! Reductions towards a robust graph and the recipes that undo them.

use fixedbitset::FixedBitSet;

use crate::graph::matching::{maximum_matching, minimum_vertex_cover};
use crate::graph::{bitset_of, Bounds, Colouring, Graph, SearchLimits};
use crate::{Error, Result};

/// A homogeneous pair of cliques.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogeneousPair {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
}

impl HomogeneousPair {
    /// Disjoint cliques covering at least three vertices, with every other
    /// vertex complete or anticomplete to each.
    pub fn is_homogeneous_pair(&self, g: &Graph) -> bool {
        let sa = bitset_of(g.n(), self.a.iter().copied());
        let sb = bitset_of(g.n(), self.b.iter().copied());
        if sa.intersection(&sb).next().is_some()
            || self.a.len() + self.b.len() < 3
            || !g.is_clique(&self.a)
            || !g.is_clique(&self.b)
        {
            return false;
        }
        (0..g.n()).filter(|&v| !sa.contains(v) && !sb.contains(v)).all(|v| {
            let na = g.neighbour_set(v).intersection(&sa).count();
            let nb = g.neighbour_set(v).intersection(&sb).count();
            (na == 0 || na == self.a.len()) && (nb == 0 || nb == self.b.len())
        })
    }

    /// `G[A ∪ B]` contains an induced four-cycle.
    pub fn is_nonlinear(&self, g: &Graph) -> bool {
        for (i, &a1) in self.a.iter().enumerate() {
            for &a2 in &self.a[i + 1..] {
                for &b1 in &self.b {
                    if !g.has_edge(a1, b1) || g.has_edge(a2, b1) {
                        continue;
                    }
                    if self.b.iter().any(|&b2| g.has_edge(a2, b2) && !g.has_edge(a1, b2)) {
                        return true;
                    }
                }
            }
        }
        false
    }
}

/// One reduction, in the vertex numbering of the graph it was applied to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReductionStep {
    LowDegree { vertex: usize, neighbours: Vec<usize> },
    CliqueCutset { cutset: Vec<usize>, parts: Vec<Vec<usize>> },
    HomogeneousPair { pair: HomogeneousPair, removed: Vec<(usize, usize)> },
}

/// Lowest vertex of degree below `t`.
pub fn find_low_degree(g: &Graph, bounds: &Bounds) -> Option<usize> {
    (0..g.n()).find(|&v| g.degree(v) < bounds.t)
}

/// Minimal elimination ordering by MCS-M: `order[i]` is the `i`-th vertex
/// eliminated, together with the fill-in graph.
fn mcs_m(g: &Graph) -> (Vec<usize>, Graph) {
    let n = g.n();
    let mut fill = g.clone();
    let mut weight = vec![0usize; n];
    let mut numbered = vec![false; n];
    let mut order = vec![0; n];
    for i in (0..n).rev() {
        let v = (0..n)
            .filter(|&u| !numbered[u])
            .max_by_key(|&u| (weight[u], std::cmp::Reverse(u)))
            .unwrap();
        // Smallest possible largest interior weight on a path from v through
        // unnumbered vertices.
        let mut bottleneck: Vec<Option<isize>> = vec![None; n];
        let mut done = vec![false; n];
        bottleneck[v] = Some(-1);
        loop {
            let Some(x) = (0..n)
                .filter(|&u| !numbered[u] && !done[u] && bottleneck[u].is_some())
                .min_by_key(|&u| bottleneck[u].unwrap())
            else {
                break;
            };
            done[x] = true;
            let through = if x == v { -1 } else { bottleneck[x].unwrap().max(weight[x] as isize) };
            for y in g.neighbours(x) {
                if !numbered[y] && !done[y] && bottleneck[y].is_none_or(|b| through < b) {
                    bottleneck[y] = Some(through);
                }
            }
        }
        let reached: Vec<usize> = (0..n)
            .filter(|&u| u != v && !numbered[u] && bottleneck[u].is_some_and(|b| b < weight[u] as isize))
            .collect();
        for u in reached {
            weight[u] += 1;
            if !fill.has_edge(u, v) {
                fill.add_edge(u, v);
            }
        }
        numbered[v] = true;
        order[i] = v;
    }
    (order, fill)
}

/// A clique whose removal disconnects `g`, with the resulting components.
/// Every clique minimal separator is the set of later neighbours of some
/// vertex in a minimal elimination ordering, so none is missed.
pub fn find_clique_cutset(g: &Graph) -> Option<(Vec<usize>, Vec<Vec<usize>>)> {
    let n = g.n();
    let (order, fill) = mcs_m(g);
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    for &x in &order {
        let s: Vec<usize> = fill.neighbours(x).filter(|&u| pos[u] > pos[x]).collect();
        if s.is_empty() || !g.is_clique(&s) {
            continue;
        }
        let rest: Vec<usize> = (0..n).filter(|v| s.binary_search(v).is_err()).collect();
        let parts = g.components_within(&rest);
        if parts.len() > 1 {
            return Some((s, parts));
        }
    }
    None
}

/// A homogeneous pair of cliques whose union contains an induced four-cycle.
///
/// Every four-cycle `a1 b1 b2 a2` is tried as a seed with `A ⊇ {a1, a2}` and
/// `B ⊇ {b1, b2}`. An outside vertex mixed on `A` can only join `B` and vice
/// versa, so the seed grows deterministically until it is homogeneous or
/// fails.
pub fn find_nonlinear_homogeneous_pair(g: &Graph, limits: &SearchLimits) -> Result<Option<HomogeneousPair>> {
    let n = g.n();
    let mut work = 0u64;
    for a1 in 0..n {
        for a2 in g.neighbours(a1).filter(|&a2| a2 > a1) {
            for b1 in g.neighbours(a1) {
                if b1 == a2 || g.has_edge(a2, b1) {
                    continue;
                }
                for b2 in g.neighbours(a2) {
                    if b2 == a1 || b2 == b1 || g.has_edge(a1, b2) || !g.has_edge(b1, b2) {
                        continue;
                    }
                    work += 1;
                    if work > limits.max_nodes {
                        return Err(Error::ResourceLimit { nodes: limits.max_nodes });
                    }
                    if let Some(pair) = grow(g, &[a1, a2], &[b1, b2]) {
                        debug_assert!(pair.is_homogeneous_pair(g) && pair.is_nonlinear(g));
                        return Ok(Some(pair));
                    }
                }
            }
        }
    }
    Ok(None)
}

fn grow(g: &Graph, a: &[usize], b: &[usize]) -> Option<HomogeneousPair> {
    let n = g.n();
    let mut sa = bitset_of(n, a.iter().copied());
    let mut sb = bitset_of(n, b.iter().copied());
    let mixed = |v: usize, s: &FixedBitSet| {
        let k = g.neighbour_set(v).intersection(s).count();
        k > 0 && k < s.count_ones(..)
    };
    let complete = |v: usize, s: &FixedBitSet| g.neighbour_set(v).intersection(s).count() == s.count_ones(..);
    loop {
        let Some(v) = (0..n).find(|&v| !sa.contains(v) && !sb.contains(v) && (mixed(v, &sa) || mixed(v, &sb))) else {
            break;
        };
        match (mixed(v, &sa), mixed(v, &sb)) {
            (true, false) if complete(v, &sb) => sb.insert(v),
            (false, true) if complete(v, &sa) => sa.insert(v),
            _ => return None,
        }
    }
    Some(HomogeneousPair {
        a: sa.ones().collect(),
        b: sb.ones().collect(),
    })
}

/// Undoes [`reduce_homogeneous_pair`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairRecipe {
    pub pair: HomogeneousPair,
    /// Non-adjacent pairs `(a, b)` of `g` forming a maximum matching.
    pub matching: Vec<(usize, usize)>,
    pub removed: Vec<(usize, usize)>,
}

/// Deletes every edge between `A` and `B` at a vertex of a minimum vertex
/// cover of the non-edges between them. The non-edges keep the same maximum
/// matching size, `G'[A ∪ B]` becomes a linear interval graph, and every
/// colouring of `G'` extends to `G` with the same colours.
pub fn reduce_homogeneous_pair(g: &Graph, pair: &HomogeneousPair) -> Result<(Graph, PairRecipe)> {
    if !pair.is_homogeneous_pair(g) || !pair.is_nonlinear(g) {
        return Err(Error::Contract("not a nonlinear homogeneous pair".into()));
    }
    let (a, b) = (&pair.a, &pair.b);
    let adj: Vec<Vec<usize>> = a
        .iter()
        .map(|&x| (0..b.len()).filter(|&j| !g.has_edge(x, b[j])).collect())
        .collect();
    let m = maximum_matching(&adj, b.len());
    let (ka, kb) = minimum_vertex_cover(&adj, b.len(), &m);
    let mut gp = g.clone();
    let mut removed = Vec::new();
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            if g.has_edge(x, y) && (ka.contains(&i) || kb.contains(&j)) {
                gp.remove_edge(x, y);
                removed.push((x.min(y), x.max(y)));
            }
        }
    }
    removed.sort_unstable();
    let matching = m.pairs().into_iter().map(|(i, j)| (a[i], b[j])).collect();
    Ok((
        gp,
        PairRecipe {
            pair: pair.clone(),
            matching,
            removed,
        },
    ))
}

impl PairRecipe {
    /// Recolours `A ∪ B` so that colours shared by the two cliques sit on
    /// matched non-adjacent pairs of the original graph.
    pub fn extend(&self, col: &Colouring) -> Result<Colouring> {
        let (a, b) = (&self.pair.a, &self.pair.b);
        let mut ca: Vec<usize> = a.iter().map(|&v| col.colour(v)).collect();
        let mut cb: Vec<usize> = b.iter().map(|&v| col.colour(v)).collect();
        ca.sort_unstable();
        cb.sort_unstable();
        let shared: Vec<usize> = ca.iter().copied().filter(|c| cb.binary_search(c).is_ok()).collect();
        if shared.len() > self.matching.len() {
            return Err(Error::Contract("colouring shares more colours than the pair allows".into()));
        }
        let mut out = col.colours().to_vec();
        let mut a_left: Vec<usize> = a.clone();
        let mut b_left: Vec<usize> = b.clone();
        for (&(x, y), &c) in self.matching.iter().zip(&shared) {
            out[x] = c;
            out[y] = c;
            a_left.retain(|&v| v != x);
            b_left.retain(|&v| v != y);
        }
        let only = |cs: &[usize]| -> Vec<usize> { cs.iter().copied().filter(|c| shared.binary_search(c).is_err()).collect() };
        for (v, c) in a_left.into_iter().zip(only(&ca)) {
            out[v] = c;
        }
        for (v, c) in b_left.into_iter().zip(only(&cb)) {
            out[v] = c;
        }
        Ok(Colouring::new(out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{exact_chromatic, verify_colouring};
    use crate::interval::recognize_linear_interval;
    use crate::Rational;
    use proptest::prelude::*;

    fn lim() -> SearchLimits {
        SearchLimits::default()
    }

    fn bounds_with_t(t: usize) -> Bounds {
        Bounds {
            omega: 0,
            chi_f: Rational::from_integer(0.into()),
            t,
        }
    }

    #[test]
    fn low_degree() {
        let g = Graph::path(3);
        assert_eq!(find_low_degree(&g, &bounds_with_t(2)), Some(0));
        assert_eq!(find_low_degree(&Graph::complete(5), &bounds_with_t(4)), None);
        // t(C5) = 7.
        let b = Bounds::compute(&Graph::cycle(5), &lim()).unwrap();
        assert_eq!(b.t, 7);
        assert_eq!(find_low_degree(&Graph::cycle(5), &b), Some(0));
    }

    #[test]
    fn cutsets() {
        let (s, parts) = find_clique_cutset(&Graph::path(3)).unwrap();
        assert_eq!(s, vec![1]);
        assert_eq!(parts, vec![vec![0], vec![2]]);
        assert!(find_clique_cutset(&Graph::cycle(5)).is_none());
        assert!(find_clique_cutset(&Graph::complete(4)).is_none());
        let mut g = Graph::complete(4).disjoint_union(&Graph::new(1));
        for v in 1..4 {
            g.add_edge(v, 4);
        }
        let (s, parts) = find_clique_cutset(&g).unwrap();
        assert_eq!(s, vec![1, 2, 3]);
        assert_eq!(parts, vec![vec![0], vec![4]]);
    }

    fn brute_force_cutset(g: &Graph) -> bool {
        let n = g.n();
        (0u32..1 << n).any(|mask| {
            let s: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            let rest: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 0).collect();
            g.is_clique(&s) && g.components_within(&rest).len() > 1
        })
    }

    fn c4_pair() -> (Graph, HomogeneousPair) {
        // a1=0, a2=1, b1=3, b2=2 around the cycle 0-1-2-3.
        (
            Graph::cycle(4),
            HomogeneousPair {
                a: vec![0, 1],
                b: vec![2, 3],
            },
        )
    }

    #[test]
    fn c4_is_a_pair() {
        let (g, p) = c4_pair();
        assert!(p.is_homogeneous_pair(&g) && p.is_nonlinear(&g));
        let found = find_nonlinear_homogeneous_pair(&g, &lim()).unwrap().unwrap();
        assert!(found.is_homogeneous_pair(&g) && found.is_nonlinear(&g));
    }

    #[test]
    fn c4_with_apex() {
        let mut g = Graph::cycle(4).disjoint_union(&Graph::new(1));
        for v in 0..4 {
            g.add_edge(v, 4);
        }
        let p = find_nonlinear_homogeneous_pair(&g, &lim()).unwrap().unwrap();
        assert!(!p.a.contains(&4) && !p.b.contains(&4));
        assert!(p.is_homogeneous_pair(&g));
    }

    #[test]
    fn c4_reduction() {
        let (g, p) = c4_pair();
        let (gp, recipe) = reduce_homogeneous_pair(&g, &p).unwrap();
        assert!(gp.edge_count() < g.edge_count());
        assert!(!p.is_nonlinear(&gp));
        let (chi, col) = exact_chromatic(&gp, None, &lim()).unwrap();
        assert_eq!(chi, exact_chromatic(&g, None, &lim()).unwrap().0);
        let back = recipe.extend(&col).unwrap();
        assert!(verify_colouring(&g, &back).unwrap());
        assert_eq!(back.palette_size(), chi);
    }

    fn interval_strategy() -> impl Strategy<Value = Graph> {
        proptest::collection::vec(0usize..4, 1..10).prop_map(|reach| {
            let n = reach.len();
            let mut g = Graph::new(n);
            let mut r = 0;
            for i in 0..n {
                r = r.max(i + reach[i]).min(n - 1);
                for j in i + 1..=r {
                    g.add_edge(i, j);
                }
            }
            g
        })
    }

    proptest! {
        #[test]
        fn cutset_matches_brute_force(g in crate::graph::small_graph_strategy()) {
            prop_assume!(g.is_connected());
            let found = find_clique_cutset(&g);
            prop_assert_eq!(found.is_some(), brute_force_cutset(&g));
            if let Some((s, parts)) = found {
                prop_assert!(g.is_clique(&s));
                prop_assert!(parts.len() > 1);
            }
        }

        #[test]
        fn found_pairs_are_valid(g in crate::graph::small_graph_strategy()) {
            if let Some(p) = find_nonlinear_homogeneous_pair(&g, &lim()).unwrap() {
                prop_assert!(p.is_homogeneous_pair(&g));
                prop_assert!(p.is_nonlinear(&g));
            }
        }

        #[test]
        fn interval_graphs_have_no_pair(g in interval_strategy()) {
            prop_assert!(recognize_linear_interval(&g).is_some());
            prop_assert!(find_nonlinear_homogeneous_pair(&g, &lim()).unwrap().is_none());
        }

        #[test]
        fn reductions_preserve_chi(g in crate::graph::small_graph_strategy()) {
            prop_assume!(g.is_quasi_line());
            if let Some(p) = find_nonlinear_homogeneous_pair(&g, &lim()).unwrap() {
                let (gp, recipe) = reduce_homogeneous_pair(&g, &p).unwrap();
                prop_assert!(gp.is_quasi_line());
                let (chi, col) = exact_chromatic(&gp, None, &lim()).unwrap();
                prop_assert_eq!(chi, exact_chromatic(&g, None, &lim()).unwrap().0);
                let back = recipe.extend(&col).unwrap();
                prop_assert!(verify_colouring(&g, &back).unwrap());
                prop_assert!(back.span() <= col.span());
            }
        }
    }
}

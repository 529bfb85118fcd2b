//! Seeded instance generators. Every generator is a pure function of its
//! seed and parameters.

use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::reduce::HomogeneousPair;
use crate::composition::{compose, Strip, StripComposition};
use crate::graph::{Graph, Multigraph};
use crate::interval::{prune_arcs, CircularIntervalRep};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct CompositionParams {
    pub h_vertices: usize,
    /// Edges of `H` before padding.
    pub h_edges: usize,
    /// Inclusive range of nontrivial strip lengths.
    pub strip_len: (usize, usize),
    /// Inclusive range of end clique sizes.
    pub end_size: (usize, usize),
    /// Probability that an edge carries a trivial strip.
    pub trivial_fraction: f64,
    pub max_vertices: usize,
}

impl Default for CompositionParams {
    fn default() -> Self {
        CompositionParams {
            h_vertices: 4,
            h_edges: 6,
            strip_len: (3, 6),
            end_size: (1, 3),
            trivial_fraction: 0.4,
            max_vertices: 60,
        }
    }
}

/// Hub cliques reach this size whenever some edge is nontrivial, so that the
/// rounding step applies with at most one nontrivial edge out of each vertex.
const MIN_HUB: usize = 9;

/// A random normalized composition over a connected loopless `H`. Each vertex
/// of `H` has at most one nontrivial out-edge, and trivial parallel edges are
/// added until some hub clique has at least nine vertices.
pub fn gen_composition(seed: u64, p: &CompositionParams) -> Result<StripComposition> {
    check_params(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..1000 {
        if let Some(c) = try_composition(&mut rng, p)? {
            return Ok(c);
        }
    }
    Err(Error::Input(format!(
        "could not fit a composition into {} vertices",
        p.max_vertices
    )))
}

fn check_params(p: &CompositionParams) -> Result<()> {
    let bad = |m: &str| Err(Error::Input(m.into()));
    if p.h_vertices < 2 {
        return bad("H needs at least two vertices");
    }
    if p.h_edges + 1 < p.h_vertices {
        return bad("too few edges to connect H");
    }
    if !(0.0..=1.0).contains(&p.trivial_fraction) {
        return bad("trivial fraction must lie in [0, 1]");
    }
    let (lo, hi) = p.strip_len;
    let (elo, ehi) = p.end_size;
    if lo < 2 || lo > hi || elo == 0 || elo > ehi || 2 * elo > hi {
        return bad("strip length and end size ranges are inconsistent");
    }
    if p.max_vertices < p.h_edges {
        return bad("vertex budget below the number of edges");
    }
    Ok(())
}

fn try_composition(rng: &mut ChaCha8Rng, p: &CompositionParams) -> Result<Option<StripComposition>> {
    let nv = p.h_vertices;
    let mut pairs: Vec<(usize, usize)> = (1..nv).map(|i| (rng.random_range(0..i), i)).collect();
    while pairs.len() < p.h_edges {
        let a = rng.random_range(0..nv);
        let b = rng.random_range(0..nv);
        if a != b {
            pairs.push((a, b));
        }
    }
    let mut has_out = vec![false; nv];
    let mut edges: Vec<(usize, usize, Strip)> = Vec::new();
    for (a, b) in pairs {
        let nontrivial = !rng.random_bool(p.trivial_fraction);
        let oriented = if !has_out[a] { Some((a, b)) } else if !has_out[b] { Some((b, a)) } else { None };
        match (nontrivial, oriented) {
            (true, Some((tail, head))) => {
                has_out[tail] = true;
                edges.push((tail, head, random_strip(rng, p)));
            }
            _ => edges.push((a, b, Strip::trivial())),
        }
    }
    if edges.iter().any(|(_, _, s)| !s.is_trivial()) {
        // Grow the largest hub with parallel trivial edges.
        let mut hub = vec![0; nv];
        for (a, b, s) in &edges {
            hub[*a] += s.xsize();
            hub[*b] += s.ysize();
        }
        let v = (0..nv).max_by_key(|&v| (hub[v], std::cmp::Reverse(v))).unwrap();
        let u = edges
            .iter()
            .find_map(|&(a, b, _)| if a == v { Some(b) } else if b == v { Some(a) } else { None })
            .unwrap();
        for _ in hub[v]..MIN_HUB {
            edges.push((v, u, Strip::trivial()));
        }
    }
    if edges.iter().map(|(_, _, s)| s.len()).sum::<usize>() > p.max_vertices {
        return Ok(None);
    }
    let mut h = Multigraph::new();
    for i in 0..nv {
        h.add_vertex(format!("h{}", i + 1));
    }
    let mut strips = Vec::with_capacity(edges.len());
    for (i, (a, b, s)) in edges.into_iter().enumerate() {
        h.add_edge(format!("e{}", i + 1), a, b);
        strips.push(s);
    }
    let c = compose(h, strips)?;
    debug_assert!(c.is_normalized());
    Ok(Some(c))
}

/// A canonical strip with `|X| <= |Y|`.
fn random_strip(rng: &mut ChaCha8Rng, p: &CompositionParams) -> Strip {
    let mut xs = rng.random_range(p.end_size.0..=p.end_size.1);
    let mut ys = rng.random_range(p.end_size.0..=p.end_size.1);
    if xs > ys {
        std::mem::swap(&mut xs, &mut ys);
    }
    let len = rng.random_range(p.strip_len.0..=p.strip_len.1).max(xs + ys);
    let mut cliques = Vec::with_capacity(len);
    let mut reach = xs - 1;
    for i in 0..len {
        let step = rng.random_range(1..=2);
        reach = reach.max(i + step).min(len - 1);
        if i >= len - ys {
            reach = len - 1;
        }
        cliques.push((i, reach.max(i)));
    }
    Strip::new(len, cliques, xs, ys).expect("generated strip is canonical")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CircularParams {
    pub n: usize,
    /// Inclusive range of arc lengths (number of positions covered).
    pub arc_len: (usize, usize),
}

/// A circular interval graph with one arc starting at every position,
/// relabelled by a random permutation.
pub fn gen_circular_interval(seed: u64, p: &CircularParams) -> Result<(Graph, CircularIntervalRep)> {
    if p.n == 0 || p.arc_len.0 == 0 || p.arc_len.0 > p.arc_len.1 {
        return Err(Error::Input("need n >= 1 and 1 <= min arc length <= max".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let arcs: Vec<(usize, usize)> = (0..p.n)
        .map(|i| (i, rng.random_range(p.arc_len.0..=p.arc_len.1).min(p.n)))
        .collect();
    let mut order: Vec<usize> = (0..p.n).collect();
    order.shuffle(&mut rng);
    let rep = CircularIntervalRep {
        order,
        arcs: prune_arcs(p.n, arcs),
    };
    Ok((rep.to_graph(), rep))
}

/// A quasi-line graph with a planted nonlinear homogeneous pair: a vertex
/// pair `p ~ q` of a small circular interval graph is blown up into cliques
/// `A` and `B` joined by a random pattern containing an induced four-cycle.
pub fn gen_planted_pair(seed: u64, max_n: usize) -> Result<(Graph, HomogeneousPair)> {
    if max_n < 6 {
        return Err(Error::Input("planted pairs need at least six vertices".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..10_000 {
        let sa = rng.random_range(2..=4usize);
        let sb = rng.random_range(2..=4usize);
        let budget = max_n.saturating_sub(sa + sb) + 2;
        if budget < 3 {
            continue;
        }
        let m = rng.random_range(3..=budget.min(12));
        let base = gen_circular_interval(rng.random(), &CircularParams { n: m, arc_len: (2, 4) })?.0;
        let Some((pv, qv)) = base.edges().choose(&mut rng).copied() else {
            continue;
        };
        let others: Vec<usize> = (0..m).filter(|&v| v != pv && v != qv).collect();
        let n = others.len() + sa + sb;
        let mut g = Graph::new(n);
        let idx = |v: usize| others.iter().position(|&o| o == v).unwrap();
        for (u, v) in base.edges() {
            if others.contains(&u) && others.contains(&v) {
                g.add_edge(idx(u), idx(v));
            }
        }
        let a: Vec<usize> = (others.len()..others.len() + sa).collect();
        let b: Vec<usize> = (others.len() + sa..n).collect();
        for set in [&a, &b] {
            for (i, &x) in set.iter().enumerate() {
                for &y in &set[i + 1..] {
                    g.add_edge(x, y);
                }
            }
        }
        for &o in &others {
            if base.has_edge(o, pv) {
                a.iter().for_each(|&x| g.add_edge(idx(o), x));
            }
            if base.has_edge(o, qv) {
                b.iter().for_each(|&y| g.add_edge(idx(o), y));
            }
        }
        // a0-b0 and a1-b1 are edges, a0-b1 and a1-b0 are not.
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                let edge = match (i, j) {
                    (0, 0) | (1, 1) => true,
                    (0, 1) | (1, 0) => false,
                    _ => rng.random_bool(0.5),
                };
                if edge {
                    g.add_edge(x, y);
                }
            }
        }
        if !g.is_quasi_line() {
            continue;
        }
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rng);
        let g = g.permuted(&perm);
        let mut pa: Vec<usize> = a.iter().map(|&v| perm[v]).collect();
        let mut pb: Vec<usize> = b.iter().map(|&v| perm[v]).collect();
        pa.sort_unstable();
        pb.sort_unstable();
        return Ok((g, HomogeneousPair { a: pa, b: pb }));
    }
    Err(Error::Input("no quasi-line planted instance found".into()))
}

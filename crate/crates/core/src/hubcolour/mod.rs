//! The contracted line graph `G'` and colourings of the hub graph.
//!
//! Once every overlap `w_e` is an integer, each strip is replaced by a clique
//! `S'_e` of size `|X_e| + |Y_e| - w_e` whose ends `X'_e`, `Y'_e` share `w_e`
//! vertices. The result is the line graph of a multigraph `H'`; a colouring of
//! it lifts to the hub graph with the same overlaps and is then merged with
//! per-strip colourings.

use num_traits::{ToPrimitive, Zero};

use crate::composition::StripComposition;
use crate::fractional::FractionalColouring;
use crate::graph::matching::maximum_matching;
use crate::graph::{k_colour, Colouring, Graph, Multigraph, SearchLimits};
use crate::{Error, Rational, Result};

/// Vertices of `G'` standing in for one strip.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeParts {
    /// `X'_e ∩ Y'_e`.
    pub both: Vec<usize>,
    /// `X'_e \ Y'_e`.
    pub x_only: Vec<usize>,
    /// `Y'_e \ X'_e`.
    pub y_only: Vec<usize>,
}

impl EdgeParts {
    pub fn x(&self) -> Vec<usize> {
        self.both.iter().chain(&self.x_only).copied().collect()
    }

    pub fn y(&self) -> Vec<usize> {
        self.both.iter().chain(&self.y_only).copied().collect()
    }

    pub fn len(&self) -> usize {
        self.both.len() + self.x_only.len() + self.y_only.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Debug, Clone)]
pub struct Contraction {
    pub hprime: Multigraph,
    /// `L(H')`; vertex `i` is edge `i` of `H'`.
    pub gprime: Graph,
    pub parts: Vec<EdgeParts>,
}

/// Builds `H'`: `w_e` edges `x-y`, `|X_e| - w_e` edges `x-v_e` and
/// `|Y_e| - w_e` edges `y-v_e`, where `v_e` is a new vertex.
pub fn contract(c: &StripComposition, overlaps: &[usize]) -> Result<Contraction> {
    let h = c.h();
    let mut hp = Multigraph::new();
    for v in 0..h.vertex_count() {
        hp.add_vertex(h.vertex_name(v));
    }
    let mut parts = Vec::with_capacity(h.edge_count());
    for (e, edge) in h.edges().iter().enumerate() {
        let s = c.strip(e);
        let w = overlaps[e];
        if w > s.xsize().min(s.ysize()) {
            return Err(Error::Contract(format!("overlap {w} too large on edge {}", edge.id)));
        }
        if s.is_trivial() && w != 1 {
            return Err(Error::Contract(format!("trivial edge {} has overlap {w}", edge.id)));
        }
        let mut p = EdgeParts {
            both: Vec::new(),
            x_only: Vec::new(),
            y_only: Vec::new(),
        };
        for i in 0..w {
            p.both.push(hp.add_edge(format!("{}.b{}", edge.id, i + 1), edge.tail, edge.head));
        }
        let (nx, ny) = (s.xsize() - w, s.ysize() - w);
        if nx + ny > 0 {
            let ve = hp.add_vertex(format!("{}.v", edge.id));
            for i in 0..nx {
                p.x_only.push(hp.add_edge(format!("{}.x{}", edge.id, i + 1), edge.tail, ve));
            }
            for i in 0..ny {
                p.y_only.push(hp.add_edge(format!("{}.y{}", edge.id, i + 1), edge.head, ve));
            }
        }
        parts.push(p);
    }
    let gprime = hp.line_graph();
    let k = Contraction { hprime: hp, gprime, parts };
    check_contraction(c, &k)?;
    Ok(k)
}

/// `G'` must be the composition of the cliques `S'_e` along `H`.
fn check_contraction(c: &StripComposition, k: &Contraction) -> Result<()> {
    let m = k.gprime.n();
    let mut owner = vec![usize::MAX; m];
    let mut hubs: Vec<Vec<usize>> = vec![Vec::new(); m];
    for (e, p) in k.parts.iter().enumerate() {
        let edge = c.h().edge(e);
        for v in p.x() {
            hubs[v].push(edge.tail);
        }
        for v in p.y() {
            hubs[v].push(edge.head);
        }
        for v in p.x().into_iter().chain(p.y()) {
            owner[v] = e;
        }
    }
    for i in 0..m {
        for j in i + 1..m {
            let expect = owner[i] == owner[j] || hubs[i].iter().any(|h| hubs[j].contains(h));
            if expect != k.gprime.has_edge(i, j) {
                return Err(Error::Contract("contracted graph is not the composition of its cliques".into()));
            }
        }
    }
    Ok(())
}

/// Carries a fractional colouring of `G` with integral overlaps over to `G'`
/// with the same total weight. Per strip, the classes meeting both ends are
/// laid out on `[0, w_e)` and the `i`-th unit interval assigned to the `i`-th
/// shared vertex; likewise for classes meeting one end.
pub fn transfer_fractional(fc: &FractionalColouring, c: &StripComposition, k: &Contraction) -> Result<FractionalColouring> {
    let n = c.graph().n();
    // Per class: (offset within class, G' vertex) segments starts, per edge.
    let mut segments: Vec<Vec<(Rational, Rational, usize)>> = vec![Vec::new(); fc.classes().len()];
    for (e, p) in k.parts.iter().enumerate() {
        let mut in_x = vec![false; n];
        for &v in c.x_vertices(e) {
            in_x[v] = true;
        }
        let mut in_y = vec![false; n];
        for &v in c.y_vertices(e) {
            in_y[v] = true;
        }
        for (targets, want) in [(&p.both, (true, true)), (&p.x_only, (true, false)), (&p.y_only, (false, true))] {
            let mut pos = Rational::zero();
            for (i, (s, w)) in fc.classes().iter().enumerate() {
                let kind = (s.iter().any(|&v| in_x[v]), s.iter().any(|&v| in_y[v]));
                if kind != want || w.is_zero() {
                    continue;
                }
                // Split [pos, pos + w) at integer points.
                let end = &pos + w;
                let mut a = pos.clone();
                while a < end {
                    let slot = a.floor();
                    let b = (&slot + Rational::from_integer(1.into())).min(end.clone());
                    let idx = slot.to_integer().to_usize().unwrap();
                    let Some(&target) = targets.get(idx) else {
                        return Err(Error::Contract(format!(
                            "classes on edge {} exceed its contracted clique",
                            c.h().edge(e).id
                        )));
                    };
                    segments[i].push((&a - &pos, &b - &pos, target));
                    a = b;
                }
                pos = end;
            }
            if pos != Rational::from_integer(targets.len().into()) {
                return Err(Error::Contract(format!(
                    "edge {}: class weight {pos} does not match {} contracted vertices",
                    c.h().edge(e).id,
                    targets.len()
                )));
            }
        }
    }
    let mut classes = Vec::new();
    for ((_, w), segs) in fc.classes().iter().zip(&segments) {
        let mut cuts: Vec<Rational> = vec![Rational::zero(), w.clone()];
        for (a, b, _) in segs {
            cuts.push(a.clone());
            cuts.push(b.clone());
        }
        cuts.sort();
        cuts.dedup();
        for win in cuts.windows(2) {
            let (a, b) = (&win[0], &win[1]);
            let set: Vec<usize> = segs.iter().filter(|(s, t, _)| s <= a && b <= t).map(|&(_, _, v)| v).collect();
            classes.push((set, b - a));
        }
        if w.is_zero() {
            classes.push((Vec::new(), w.clone()));
        }
    }
    FractionalColouring::new(&k.gprime, classes)
}

/// A colouring of `G'` with at most `t` colours.
pub fn colour_gprime(k: &Contraction, t: usize, limits: &SearchLimits) -> Result<Colouring> {
    k_colour(&k.gprime, t, limits)?
        .ok_or_else(|| Error::Contract(format!("contracted line graph needs more than {t} colours")))
}

/// A colouring of `G_h`, indexed like [`StripComposition::hub_vertices`],
/// with exactly `w_e` colours shared by `X_e` and `Y_e`.
pub fn lift_to_hub(cg: &Colouring, c: &StripComposition, overlaps: &[usize], k: &Contraction) -> Result<Colouring> {
    let hub = c.hub_vertices();
    let mut col: Vec<Option<usize>> = vec![None; c.graph().n()];
    let g = c.graph();
    for (e, p) in k.parts.iter().enumerate() {
        let (xs, ys) = (c.x_vertices(e), c.y_vertices(e));
        let colours = |vs: &[usize]| -> Vec<usize> { vs.iter().map(|&v| cg.colour(v)).collect() };
        let (both, x_only, y_only) = (colours(&p.both), colours(&p.x_only), colours(&p.y_only));
        if c.strip(e).is_trivial() {
            col[xs[0]] = Some(both[0]);
            continue;
        }
        let adj: Vec<Vec<usize>> = xs
            .iter()
            .map(|&x| (0..ys.len()).filter(|&j| !g.has_edge(x, ys[j])).collect())
            .collect();
        let m = maximum_matching(&adj, ys.len());
        let w = overlaps[e];
        if m.size() < w {
            return Err(Error::Contract(format!(
                "edge {}: overlap {w} exceeds the largest non-adjacent matching {}",
                c.h().edge(e).id,
                m.size()
            )));
        }
        let pairs = &m.pairs()[..w];
        let mut x_left: Vec<usize> = xs.to_vec();
        let mut y_left: Vec<usize> = ys.to_vec();
        for (&(i, j), &colour) in pairs.iter().zip(&both) {
            col[xs[i]] = Some(colour);
            col[ys[j]] = Some(colour);
            x_left.retain(|&v| v != xs[i]);
            y_left.retain(|&v| v != ys[j]);
        }
        for (v, colour) in x_left.into_iter().zip(x_only) {
            col[v] = Some(colour);
        }
        for (v, colour) in y_left.into_iter().zip(y_only) {
            col[v] = Some(colour);
        }
    }
    hub.iter()
        .map(|&v| col[v].ok_or_else(|| Error::Contract(format!("hub vertex {} left uncoloured", v + 1))))
        .collect::<Result<Vec<_>>>()
        .map(Colouring::new)
}

/// Combines the hub colouring with per-strip colourings (`None` for trivial
/// strips). Strip colours are matched to hub colours by type: shared,
/// `X`-only, `Y`-only, and the remaining ones to palette colours `0..t`
/// unused on the ends.
pub fn merge(hub: &Colouring, strips: &[Option<Colouring>], c: &StripComposition, t: usize) -> Result<Colouring> {
    let hv = c.hub_vertices();
    let mut hub_colour = vec![usize::MAX; c.graph().n()];
    for (i, &v) in hv.iter().enumerate() {
        hub_colour[v] = hub.colour(i);
    }
    let mut out = vec![usize::MAX; c.graph().n()];
    for e in 0..c.strips().len() {
        let verts = c.strip_vertices(e);
        let Some(sc) = &strips[e] else {
            out[verts[0]] = hub_colour[verts[0]];
            continue;
        };
        let s = c.strip(e);
        let set = |vs: &[usize], col: &dyn Fn(usize) -> usize| -> std::collections::BTreeSet<usize> { vs.iter().map(|&v| col(v)).collect() };
        let hx = set(c.x_vertices(e), &|v| hub_colour[v]);
        let hy = set(c.y_vertices(e), &|v| hub_colour[v]);
        let pos: Vec<usize> = (0..s.len()).collect();
        let sx = set(&pos[s.x()], &|p| sc.colour(p));
        let sy = set(&pos[s.y()], &|p| sc.colour(p));
        let split = |a: &std::collections::BTreeSet<usize>, b: &std::collections::BTreeSet<usize>| {
            (
                a.intersection(b).copied().collect::<Vec<_>>(),
                a.difference(b).copied().collect::<Vec<_>>(),
                b.difference(a).copied().collect::<Vec<_>>(),
            )
        };
        let (hb, hxo, hyo) = split(&hx, &hy);
        let (sb, sxo, syo) = split(&sx, &sy);
        if (hb.len(), hxo.len(), hyo.len()) != (sb.len(), sxo.len(), syo.len()) {
            return Err(Error::Contract(format!(
                "edge {}: hub and strip colourings disagree on end colour counts",
                c.h().edge(e).id
            )));
        }
        let mut map = std::collections::BTreeMap::new();
        for (src, dst) in [(&sb, &hb), (&sxo, &hxo), (&syo, &hyo)] {
            for (a, b) in src.iter().zip(dst.iter()) {
                map.insert(*a, *b);
            }
        }
        let mut free = (0..t).filter(|col| !hx.contains(col) && !hy.contains(col));
        let mut rest: Vec<usize> = sc.colours().iter().copied().filter(|col| !map.contains_key(col)).collect();
        rest.sort_unstable();
        rest.dedup();
        for col in rest {
            let target = free
                .next()
                .ok_or_else(|| Error::Contract(format!("edge {}: strip uses more than {t} colours", c.h().edge(e).id)))?;
            map.insert(col, target);
        }
        for (p, &v) in verts.iter().enumerate() {
            out[v] = map[&sc.colour(p)];
        }
    }
    Ok(Colouring::new(out))
}

//! Linear and circular interval graphs.
//!
//! A linear interval representation places the vertices on a line and lists
//! ranges of consecutive positions; two vertices are adjacent iff some range
//! contains both. A circular representation does the same on a cycle.

use crate::fractional::fractional_chromatic;
use crate::graph::{ceil, k_colour, Colouring, Graph, SearchLimits};
use crate::composition::strip::maximal_ranges;
use crate::{Error, Result};
use num_traits::ToPrimitive;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearIntervalRep {
    /// `order[p]` is the vertex at position `p`.
    pub order: Vec<usize>,
    /// Maximal ranges of positions, 0-based inclusive, sorted.
    pub cliques: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircularIntervalRep {
    /// `order[p]` is the vertex at position `p` on the cycle.
    pub order: Vec<usize>,
    /// Arcs `(start, len)`: positions `start, start+1, ..., start+len-1`
    /// modulo `n`. No arc is contained in another.
    pub arcs: Vec<(usize, usize)>,
}

impl LinearIntervalRep {
    /// Adjacency re-derived from the ranges.
    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::new(self.order.len());
        for &(a, b) in &self.cliques {
            for i in a..=b {
                for j in i + 1..=b {
                    if !g.has_edge(self.order[i], self.order[j]) {
                        g.add_edge(self.order[i], self.order[j]);
                    }
                }
            }
        }
        g
    }
}

impl CircularIntervalRep {
    pub fn to_graph(&self) -> Graph {
        let n = self.order.len();
        let mut g = Graph::new(n);
        for &(s, len) in &self.arcs {
            for i in 0..len {
                for j in i + 1..len {
                    let (u, v) = (self.order[(s + i) % n], self.order[(s + j) % n]);
                    if !g.has_edge(u, v) {
                        g.add_edge(u, v);
                    }
                }
            }
        }
        g
    }

    /// True if no arc passes from the last position back to the first.
    pub fn is_wrap_free(&self) -> bool {
        self.arcs.iter().all(|&(s, len)| s + len <= self.order.len())
    }

    /// `order: ...` and `arc: i j` lines, 1-based; `j` is the last position
    /// of the arc, which is below `i` when the arc wraps.
    pub fn to_text(&self) -> String {
        let n = self.order.len();
        let vs: Vec<String> = self.order.iter().map(|v| (v + 1).to_string()).collect();
        let mut out = format!("order: {}\n", vs.join(" "));
        for &(s, len) in &self.arcs {
            out.push_str(&format!("arc: {} {}\n", s + 1, (s + len - 1) % n + 1));
        }
        out
    }
}

/// Lexicographic breadth-first search. Ties go to the vertex latest in
/// `prev` if given, else to the lowest index.
fn lex_bfs(g: &Graph, prev: Option<&[usize]>) -> Vec<usize> {
    let n = g.n();
    let mut rank = vec![0; n];
    if let Some(p) = prev {
        for (i, &v) in p.iter().enumerate() {
            rank[v] = i;
        }
    }
    let mut label: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for step in 0..n {
        let v = (0..n)
            .filter(|&v| !visited[v])
            .max_by(|&a, &b| {
                label[a].cmp(&label[b]).then_with(|| match prev {
                    Some(_) => rank[a].cmp(&rank[b]),
                    None => b.cmp(&a),
                })
            })
            .unwrap();
        visited[v] = true;
        order.push(v);
        for w in g.neighbours(v) {
            if !visited[w] {
                label[w].push(n - step);
            }
        }
    }
    order
}

/// Every vertex's closed neighbourhood is consecutive in `order`.
fn is_umbrella(g: &Graph, order: &[usize]) -> bool {
    let n = order.len();
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    (0..n).all(|v| {
        let ps = g.neighbours(v).map(|w| pos[w]).chain([pos[v]]);
        let (lo, hi) = ps.fold((n, 0), |(lo, hi), p| (lo.min(p), hi.max(p)));
        hi - lo == g.degree(v)
    })
}

pub fn recognize_linear_interval(g: &Graph) -> Option<LinearIntervalRep> {
    let n = g.n();
    if n == 0 {
        return Some(LinearIntervalRep {
            order: Vec::new(),
            cliques: Vec::new(),
        });
    }
    let s1 = lex_bfs(g, None);
    let s2 = lex_bfs(g, Some(&s1));
    let mut order = lex_bfs(g, Some(&s2));
    if !is_umbrella(g, &order) {
        return None;
    }
    // Components are contiguous; orient each one canonically.
    for comp in g.components() {
        let ps: Vec<usize> = comp.iter().map(|&v| order.iter().position(|&x| x == v).unwrap()).collect();
        let (lo, hi) = (*ps.iter().min().unwrap(), *ps.iter().max().unwrap());
        if order[lo] > order[hi] {
            order[lo..=hi].reverse();
        }
    }
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let ranges = (0..n)
        .map(|i| {
            let r = g.neighbours(order[i]).map(|w| pos[w]).max().unwrap_or(i).max(i);
            (i, r)
        })
        .collect();
    let rep = LinearIntervalRep {
        order,
        cliques: maximal_ranges(ranges),
    };
    debug_assert_eq!(rep.to_graph().edges(), g.edges());
    Some(rep)
}

/// A circular interval representation, preferring a wrap-free one.
pub fn recognize_circular_interval(g: &Graph, limits: &SearchLimits) -> Result<Option<CircularIntervalRep>> {
    if let Some(lin) = recognize_linear_interval(g) {
        let arcs = lin.cliques.iter().map(|&(a, b)| (a, b - a + 1)).collect();
        return Ok(Some(CircularIntervalRep { order: lin.order, arcs }));
    }
    // A disconnected circular interval graph has an uncovered gap, so it
    // would have been linear.
    if !g.is_connected() || !g.is_quasi_line() {
        return Ok(None);
    }
    CyclicSearch::new(g, limits).run()
}

/// Search over cyclic orders starting at vertex 0 in which consecutive
/// vertices are adjacent and every closed neighbourhood stays a cyclic
/// interval.
struct CyclicSearch<'a> {
    g: &'a Graph,
    n: usize,
    order: Vec<usize>,
    placed: Vec<bool>,
    /// Per vertex: runs in its membership string along the order, the first
    /// and last bits, and unplaced members of its closed neighbourhood.
    runs: Vec<u8>,
    first: Vec<bool>,
    last: Vec<bool>,
    unplaced_members: Vec<usize>,
    /// Twins with a lower index that must be placed first.
    twin_before: Vec<Vec<usize>>,
    nodes: u64,
    limit: u64,
}

impl<'a> CyclicSearch<'a> {
    fn new(g: &'a Graph, limits: &SearchLimits) -> Self {
        let n = g.n();
        let closed = |v: usize| {
            let mut s = g.neighbour_set(v).clone();
            s.insert(v);
            s
        };
        let twin_before = (0..n)
            .map(|v| (0..v).filter(|&u| closed(u) == closed(v)).collect())
            .collect();
        CyclicSearch {
            g,
            n,
            order: Vec::with_capacity(n),
            placed: vec![false; n],
            runs: vec![0; n],
            first: vec![false; n],
            last: vec![false; n],
            unplaced_members: (0..n).map(|v| g.degree(v) + 1).collect(),
            twin_before,
            nodes: 0,
            limit: limits.max_nodes,
        }
    }

    fn member(&self, v: usize, w: usize) -> bool {
        v == w || self.g.has_edge(v, w)
    }

    /// Places `w`; returns false (with state still updated) if some
    /// neighbourhood can no longer be a cyclic interval.
    fn place(&mut self, w: usize) -> bool {
        self.order.push(w);
        self.placed[w] = true;
        let unplaced = self.n - self.order.len();
        let mut ok = true;
        for v in 0..self.n {
            let bit = self.member(v, w);
            if bit {
                self.unplaced_members[v] -= 1;
            }
            if self.runs[v] == 0 {
                self.first[v] = bit;
                self.runs[v] = 1;
            } else if self.last[v] != bit {
                self.runs[v] += 1;
            }
            self.last[v] = bit;
            ok &= match (self.runs[v], self.first[v]) {
                (r, _) if r > 3 => false,
                (3, false) => self.unplaced_members[v] == 0,
                (3, true) => self.unplaced_members[v] == unplaced,
                _ => true,
            };
        }
        ok
    }

    fn unplace(&mut self) {
        let w = self.order.pop().unwrap();
        self.placed[w] = false;
        for v in 0..self.n {
            let bit = self.member(v, w);
            if bit {
                self.unplaced_members[v] += 1;
            }
            if self.order.is_empty() {
                self.runs[v] = 0;
                continue;
            }
            let prev = self.member(v, *self.order.last().unwrap());
            if prev != bit {
                self.runs[v] -= 1;
            }
            self.last[v] = prev;
        }
    }

    fn run(mut self) -> Result<Option<CircularIntervalRep>> {
        if self.place(0) && self.extend()? {
            let arcs = forward_arcs(self.g, &self.order);
            return Ok(Some(CircularIntervalRep { order: self.order, arcs }));
        }
        Ok(None)
    }

    fn extend(&mut self) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.limit {
            return Err(Error::ResourceLimit { nodes: self.limit });
        }
        let cur = *self.order.last().unwrap();
        if self.order.len() == self.n {
            return Ok(self.g.has_edge(cur, self.order[0])
                && covers_edges(self.g, &self.order, &forward_arcs(self.g, &self.order)));
        }
        let candidates: Vec<usize> = self
            .g
            .neighbours(cur)
            .filter(|&w| !self.placed[w] && self.twin_before[w].iter().all(|&u| self.placed[u]))
            .collect();
        for w in candidates {
            let ok = self.place(w);
            if ok && self.extend()? {
                return Ok(true);
            }
            self.unplace();
        }
        Ok(false)
    }
}

/// For each position, the longest run of consecutive positions forming a
/// clique, as arcs with contained ones removed.
fn forward_arcs(g: &Graph, order: &[usize]) -> Vec<(usize, usize)> {
    let n = order.len();
    let mut arcs: Vec<(usize, usize)> = Vec::with_capacity(n);
    for s in 0..n {
        let mut len = 1;
        while len < n && (0..len).all(|i| g.has_edge(order[(s + i) % n], order[(s + len) % n])) {
            len += 1;
        }
        arcs.push((s, len));
    }
    if arcs.iter().any(|&(_, len)| len == n) {
        return vec![(0, n)];
    }
    // An arc can only be contained in the arc of the previous position.
    (0..n)
        .filter(|&s| arcs[(s + n - 1) % n].1 <= arcs[s].1)
        .map(|s| arcs[s])
        .collect()
}

fn covers_edges(g: &Graph, order: &[usize], arcs: &[(usize, usize)]) -> bool {
    let rep = CircularIntervalRep {
        order: order.to_vec(),
        arcs: arcs.to_vec(),
    };
    rep.to_graph().edges() == g.edges()
}

/// Drops arcs contained in other arcs, keeping the first of equal ones.
pub(crate) fn prune_arcs(n: usize, arcs: Vec<(usize, usize)>) -> Vec<(usize, usize)> {
    let within = |inner: (usize, usize), outer: (usize, usize)| {
        let off = (inner.0 + n - outer.0) % n;
        outer.1 >= n || off + inner.1 <= outer.1
    };
    let mut kept: Vec<(usize, usize)> = Vec::new();
    for (i, &arc) in arcs.iter().enumerate() {
        let covered = arcs.iter().enumerate().any(|(j, &other)| {
            j != i && within(arc, other) && (!within(other, arc) || j < i)
        });
        if !covered {
            kept.push(arc);
        }
    }
    kept.sort_unstable();
    kept
}

/// An optimal colouring of a circular interval graph, which uses exactly
/// `ceil(chi_f)` colours.
pub fn colour_circular_interval(g: &Graph, rep: &CircularIntervalRep, limits: &SearchLimits) -> Result<Colouring> {
    debug_assert_eq!(rep.to_graph().edges(), g.edges());
    let chi_f = fractional_chromatic(g, limits)?;
    let k = ceil(chi_f.total())
        .to_usize()
        .expect("colour count fits in usize");
    colour_circular_interval_with(g, k, limits)
}

/// Colours a circular interval graph known to have chromatic number at most
/// `k`.
pub fn colour_circular_interval_with(g: &Graph, k: usize, limits: &SearchLimits) -> Result<Colouring> {
    match k_colour(g, k, limits)? {
        Some(c) => Ok(c.normalized()),
        None => Err(Error::Contract(format!(
            "circular interval graph is not {k}-colourable"
        ))),
    }
}

//! Compositions of linear interval strips.
//!
//! A composition is a multigraph `H` with one strip per edge. The composed
//! graph is the disjoint union of the strips plus, for every vertex `v` of
//! `H`, all edges inside the hub clique `C_v`: the union of `X_e` over edges
//! leaving `v` and `Y_e` over edges entering `v`.

mod detect;
mod format;
mod linegraph;
mod robust;
pub(crate) mod strip;

pub use detect::detect_strip_decomposition;
pub use format::{parse_composition, serialize_composition};
pub use linegraph::line_graph_root;
pub use robust::{check_robust, Violation};
pub use strip::Strip;

use crate::graph::{Graph, Multigraph};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StripComposition {
    h: Multigraph,
    strips: Vec<Strip>,
    /// `maps[e][p]`: vertex of the composed graph at position `p` of strip `e`.
    maps: Vec<Vec<usize>>,
    graph: Graph,
}

/// Composes `strips[e]` along edge `e` of `h`. Vertices are numbered strip by
/// strip in edge order and labelled `<edge-id>.<position>`.
pub fn compose(h: Multigraph, strips: Vec<Strip>) -> Result<StripComposition> {
    let mut maps = Vec::with_capacity(strips.len());
    let mut next = 0;
    for s in &strips {
        maps.push((next..next + s.len()).collect());
        next += s.len();
    }
    let mut c = StripComposition::with_maps(h, strips, maps, next)?;
    let mut labels = vec![String::new(); next];
    for (e, map) in c.maps.iter().enumerate() {
        for (p, &v) in map.iter().enumerate() {
            labels[v] = format!("{}.{}", c.h.edge(e).id, p + 1);
        }
    }
    c.graph.set_labels(Some(labels));
    Ok(c)
}

impl StripComposition {
    /// Composes with an explicit embedding of strip positions into `0..n`.
    pub(crate) fn with_maps(h: Multigraph, strips: Vec<Strip>, maps: Vec<Vec<usize>>, n: usize) -> Result<Self> {
        h.validate()?;
        if strips.len() != h.edge_count() {
            return Err(Error::Input(format!(
                "{} strips for {} edges",
                strips.len(),
                h.edge_count()
            )));
        }
        let mut seen = vec![false; n];
        for (e, (s, map)) in strips.iter().zip(&maps).enumerate() {
            if map.len() != s.len() {
                return Err(Error::Input(format!("strip {} has a bad vertex map", h.edge(e).id)));
            }
            for &v in map {
                if v >= n || std::mem::replace(&mut seen[v], true) {
                    return Err(Error::Input(format!("strip {} overlaps another strip", h.edge(e).id)));
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::Input("strips do not cover every vertex".into()));
        }
        let mut graph = Graph::new(n);
        for (s, map) in strips.iter().zip(&maps) {
            for (i, j) in s.graph().edges() {
                graph.add_edge(map[i], map[j]);
            }
        }
        let mut c = StripComposition { h, strips, maps, graph };
        for v in 0..c.h.vertex_count() {
            let hub = c.hub_clique(v);
            for (i, &a) in hub.iter().enumerate() {
                for &b in &hub[i + 1..] {
                    if a != b {
                        c.graph.add_edge(a, b);
                    }
                }
            }
        }
        Ok(c)
    }

    pub fn h(&self) -> &Multigraph {
        &self.h
    }

    pub fn strips(&self) -> &[Strip] {
        &self.strips
    }

    pub fn strip(&self, e: usize) -> &Strip {
        &self.strips[e]
    }

    /// The composed graph.
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub(crate) fn set_labels(&mut self, labels: Option<Vec<String>>) {
        self.graph.set_labels(labels);
    }

    /// Composed-graph vertices of strip `e` in representation order.
    pub fn strip_vertices(&self, e: usize) -> &[usize] {
        &self.maps[e]
    }

    pub fn x_vertices(&self, e: usize) -> &[usize] {
        &self.maps[e][self.strips[e].x()]
    }

    pub fn y_vertices(&self, e: usize) -> &[usize] {
        &self.maps[e][self.strips[e].y()]
    }

    /// `C_v`, sorted.
    pub fn hub_clique(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for (e, edge) in self.h.edges().iter().enumerate() {
            if edge.tail == v {
                out.extend_from_slice(self.x_vertices(e));
            }
            if edge.head == v {
                out.extend_from_slice(self.y_vertices(e));
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    /// All end-clique vertices, sorted.
    pub fn hub_vertices(&self) -> Vec<usize> {
        let mut out: Vec<usize> = (0..self.strips.len())
            .flat_map(|e| self.x_vertices(e).iter().chain(self.y_vertices(e)).copied())
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// `G_h`, the subgraph induced on the hub cliques, with vertices in the
    /// order of [`StripComposition::hub_vertices`].
    pub fn hub_graph(&self) -> Graph {
        self.graph.induced(&self.hub_vertices())
    }

    /// Edges of `H` that are loops.
    pub fn loops(&self) -> Vec<usize> {
        (0..self.h.edge_count()).filter(|&e| self.h.edge(e).is_loop()).collect()
    }

    pub fn check_loopless(&self) -> Result<()> {
        match self.loops().first() {
            Some(&e) => Err(Error::Structural(format!(
                "edge {} of the multigraph is a loop",
                self.h.edge(e).id
            ))),
            None => Ok(()),
        }
    }

    /// Reorients every edge so that `|X_e| <= |Y_e|`. The composed graph and
    /// its vertex numbering are unchanged.
    pub fn normalize(&self) -> StripComposition {
        let mut c = self.clone();
        for e in 0..c.strips.len() {
            if c.strips[e].xsize() > c.strips[e].ysize() {
                c.strips[e] = c.strips[e].reversed();
                c.maps[e].reverse();
                c.h.reverse_edge(e);
            }
        }
        c
    }

    pub fn is_normalized(&self) -> bool {
        self.strips.iter().all(|s| s.xsize() <= s.ysize())
    }
}

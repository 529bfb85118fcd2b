use std::ops::Range;

use crate::graph::Graph;
use crate::{Error, Result};

/// A linear interval strip `(S, X, Y)`.
///
/// Vertices are the positions `0..len` of the representation. Adjacency is
/// given by maximal ranges of consecutive positions: `i ~ j` iff some range
/// contains both. `X` is the leftmost `xsize` positions and `Y` the rightmost
/// `ysize`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Strip {
    len: usize,
    cliques: Vec<(usize, usize)>,
    xsize: usize,
    ysize: usize,
}

impl Strip {
    /// The single-vertex strip with `X = Y = S`.
    pub fn trivial() -> Self {
        Strip {
            len: 1,
            cliques: vec![(0, 0)],
            xsize: 1,
            ysize: 1,
        }
    }

    /// A canonical strip: nonempty disjoint ends, end sets are cliques and `S`
    /// is connected. A one-vertex strip must be the trivial one.
    pub fn new(len: usize, cliques: Vec<(usize, usize)>, xsize: usize, ysize: usize) -> Result<Self> {
        if len == 1 {
            return if xsize == 1 && ysize == 1 {
                Ok(Strip::trivial())
            } else {
                Err(Error::Input("one-vertex strip must have xsize = ysize = 1".into()))
            };
        }
        if len == 0 {
            return Err(Error::Input("empty strip".into()));
        }
        if xsize == 0 || ysize == 0 {
            return Err(Error::Input("end cliques must be nonempty".into()));
        }
        if xsize + ysize > len {
            return Err(Error::Input(format!(
                "end cliques overlap: xsize {xsize} + ysize {ysize} > n {len}"
            )));
        }
        for &(a, b) in &cliques {
            if a > b || b >= len {
                return Err(Error::Input(format!("bad clique range [{}, {}]", a + 1, b + 1)));
            }
        }
        let strip = Strip {
            len,
            cliques: maximal_ranges(cliques),
            xsize,
            ysize,
        };
        if !strip.covers(0, xsize - 1) {
            return Err(Error::Input("X is not a clique".into()));
        }
        if !strip.covers(len - ysize, len - 1) {
            return Err(Error::Input("Y is not a clique".into()));
        }
        if let Some(i) = (0..len - 1).find(|&i| !strip.covers(i, i + 1)) {
            return Err(Error::Input(format!(
                "strip is disconnected between positions {} and {}",
                i + 1,
                i + 2
            )));
        }
        Ok(strip)
    }

    /// Builds a strip from its graph in representation order, if the order is
    /// a valid linear interval order.
    pub fn from_ordered_graph(s: &Graph, xsize: usize, ysize: usize) -> Result<Self> {
        let n = s.n();
        let reach: Vec<usize> = (0..n)
            .map(|i| s.neighbours(i).filter(|&j| j > i).max().unwrap_or(i))
            .collect();
        for i in 0..n {
            for j in i + 1..n {
                if s.has_edge(i, j) != (j <= reach[i]) {
                    return Err(Error::Input("order is not a linear interval order".into()));
                }
            }
        }
        // Range ends are only consistent if reach never decreases.
        if reach.windows(2).any(|w| w[1] < w[0]) {
            return Err(Error::Input("order is not a linear interval order".into()));
        }
        let cliques = (0..n).map(|i| (i, reach[i])).collect();
        Strip::new(n, cliques, xsize, ysize)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn is_trivial(&self) -> bool {
        self.len == 1
    }

    pub fn xsize(&self) -> usize {
        self.xsize
    }

    pub fn ysize(&self) -> usize {
        self.ysize
    }

    /// Maximal ranges sorted by left endpoint, 0-based inclusive.
    pub fn cliques(&self) -> &[(usize, usize)] {
        &self.cliques
    }

    pub fn x(&self) -> Range<usize> {
        0..self.xsize
    }

    pub fn y(&self) -> Range<usize> {
        self.len - self.ysize..self.len
    }

    fn covers(&self, a: usize, b: usize) -> bool {
        self.cliques.iter().any(|&(l, r)| l <= a && b <= r)
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i != j && self.covers(i.min(j), i.max(j))
    }

    pub fn graph(&self) -> Graph {
        let mut g = Graph::new(self.len);
        for &(a, b) in &self.cliques {
            for i in a..=b {
                for j in i + 1..=b {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// The same strip read right to left, so `X` and `Y` swap.
    pub fn reversed(&self) -> Strip {
        let last = self.len - 1;
        let mut cliques: Vec<(usize, usize)> = self.cliques.iter().map(|&(a, b)| (last - b, last - a)).collect();
        cliques.sort_unstable();
        Strip {
            len: self.len,
            cliques,
            xsize: self.ysize,
            ysize: self.xsize,
        }
    }
}

/// Sorts ranges and drops those contained in another.
pub(crate) fn maximal_ranges(mut ranges: Vec<(usize, usize)>) -> Vec<(usize, usize)> {
    ranges.sort_unstable_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
    let mut out: Vec<(usize, usize)> = Vec::new();
    for (a, b) in ranges {
        if out.last().is_none_or(|&(_, r)| b > r) {
            out.push((a, b));
        }
    }
    out
}

//! Exact fractional colouring.

mod colgen;
mod field;
mod stable_set;

use num_traits::{One, Signed, Zero};

pub use stable_set::{heavier_than, max_weight_stable_set};

use crate::composition::StripComposition;
use crate::graph::{Graph, SearchLimits};
use crate::{Error, Rational, Result};

/// Stable sets with nonnegative rational weights covering every vertex with
/// total weight exactly one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FractionalColouring {
    classes: Vec<(Vec<usize>, Rational)>,
    total: Rational,
}

impl FractionalColouring {
    /// Builds and validates a fractional colouring of `g`. Zero-weight classes
    /// are kept; each class is stored sorted.
    pub fn new(g: &Graph, classes: Vec<(Vec<usize>, Rational)>) -> Result<Self> {
        let fc = Self::new_unchecked(classes);
        fc.validate(g)?;
        Ok(fc)
    }

    pub(crate) fn new_unchecked(mut classes: Vec<(Vec<usize>, Rational)>) -> Self {
        for (s, _) in &mut classes {
            s.sort_unstable();
        }
        let total = classes.iter().map(|(_, w)| w.clone()).sum();
        FractionalColouring { classes, total }
    }

    pub fn classes(&self) -> &[(Vec<usize>, Rational)] {
        &self.classes
    }

    pub fn total(&self) -> &Rational {
        &self.total
    }

    /// Classes with positive weight.
    pub fn positive_classes(&self) -> impl Iterator<Item = &(Vec<usize>, Rational)> {
        self.classes.iter().filter(|(_, w)| w.is_positive())
    }

    /// Total weight of the classes containing `v`.
    pub fn coverage(&self, v: usize) -> Rational {
        self.classes
            .iter()
            .filter(|(s, _)| s.binary_search(&v).is_ok())
            .map(|(_, w)| w.clone())
            .sum()
    }

    /// Checks stability, nonnegativity and exact unit coverage.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let mut cover = vec![Rational::zero(); g.n()];
        for (i, (s, w)) in self.classes.iter().enumerate() {
            if w.is_negative() {
                return Err(Error::Contract(format!("class {i} has negative weight {w}")));
            }
            if s.iter().any(|&v| v >= g.n()) {
                return Err(Error::Contract(format!("class {i} names a vertex out of range")));
            }
            if !g.is_stable(s) {
                return Err(Error::Contract(format!("class {i} is not stable")));
            }
            for &v in s {
                cover[v] += w;
            }
        }
        if let Some(v) = cover.iter().position(|c| !c.is_one()) {
            return Err(Error::Contract(format!("vertex {v} is covered with weight {}", cover[v])));
        }
        Ok(())
    }

    /// True if the positive classes have linearly independent incidence
    /// vectors.
    pub fn is_basic(&self, n: usize) -> bool {
        let sets: Vec<&[usize]> = self.positive_classes().map(|(s, _)| s.as_slice()).collect();
        incidence_rank(n, &sets) == sets.len()
    }

    /// Text form: one `w=<p/q> S={v...}` line per positive class, 1-based.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (s, w) in self.positive_classes() {
            let vs: Vec<String> = s.iter().map(|v| (v + 1).to_string()).collect();
            out.push_str(&format!("w={w} S={{{}}}\n", vs.join(",")));
        }
        out
    }
}

/// Rank over the rationals of the incidence vectors of `sets` in `{0,1}^n`.
pub fn incidence_rank(n: usize, sets: &[&[usize]]) -> usize {
    let mut rows: Vec<Vec<Rational>> = sets
        .iter()
        .map(|s| {
            let mut row = vec![Rational::zero(); n];
            for &v in *s {
                row[v] = Rational::one();
            }
            row
        })
        .collect();
    let mut rank = 0;
    for col in 0..n {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][col].clone();
        for i in rank + 1..rows.len() {
            if rows[i][col].is_zero() {
                continue;
            }
            let f = &rows[i][col] / &pivot;
            for c in col..n {
                let d = &f * &rows[rank][c];
                rows[i][c] -= d;
            }
        }
        rank += 1;
    }
    rank
}

/// An optimal fractional colouring together with an optimal dual solution.
#[derive(Debug, Clone)]
pub struct FractionalSolution {
    pub colouring: FractionalColouring,
    /// Vertex weights summing to the optimum with every stable set weighing at
    /// most one.
    pub duals: Vec<Rational>,
}

/// Exact fractional chromatic number with a basic optimal colouring.
pub fn fractional_chromatic(g: &Graph, limits: &SearchLimits) -> Result<FractionalColouring> {
    Ok(fractional_chromatic_with_duals(g, limits)?.colouring)
}

pub fn fractional_chromatic_with_duals(g: &Graph, limits: &SearchLimits) -> Result<FractionalSolution> {
    let one = Rational::one();
    let mut pricer = |y: &[Rational]| heavier_than(g, y, &one, limits);
    let sol = colgen::solve(g, &mut pricer, limits)?;
    let colouring = FractionalColouring::new_unchecked(sol.classes);
    debug_assert_eq!(colouring.total, sol.total);
    Ok(FractionalSolution {
        colouring,
        duals: sol.duals,
    })
}

/// Per h-edge overlap: the weight of classes meeting both end-cliques.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Overlap(pub Vec<Rational>);

impl Overlap {
    pub fn get(&self, e: usize) -> &Rational {
        &self.0[e]
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|w| w.is_integer())
    }
}

pub fn compute_overlaps(fc: &FractionalColouring, c: &StripComposition) -> Overlap {
    let n = c.graph().n();
    let mut overlaps = Vec::with_capacity(c.strips().len());
    for e in 0..c.strips().len() {
        let mut in_x = vec![false; n];
        for &v in c.x_vertices(e) {
            in_x[v] = true;
        }
        let mut in_y = vec![false; n];
        for &v in c.y_vertices(e) {
            in_y[v] = true;
        }
        let w = fc
            .classes()
            .iter()
            .filter(|(s, _)| s.iter().any(|&v| in_x[v]) && s.iter().any(|&v| in_y[v]))
            .map(|(_, w)| w.clone())
            .sum();
        overlaps.push(w);
    }
    Overlap(overlaps)
}

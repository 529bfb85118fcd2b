//! Making every strip overlap of a fractional colouring integral.
//!
//! Nontrivial edges of `H` are labelled so that no two edges leaving the same
//! vertex share a label. For each label class the fractional part of every
//! overlap is removed by taking the `X` vertex out of enough classes meeting
//! both ends, and the lost coverage is restored with new classes built from
//! one `X` vertex per edge of the class. Each pass adds less than one unit of
//! weight.

use num_traits::Zero;

use crate::composition::StripComposition;
use crate::fractional::{compute_overlaps, FractionalColouring};
use crate::graph::{Bounds, Multigraph};
use crate::{Error, Rational, Result};

/// Labels `1..=d_max` on nontrivial edges, distinct among edges leaving the
/// same vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutEdgeLabelling {
    /// Per edge of `H`; `None` for trivial edges.
    pub label: Vec<Option<usize>>,
    /// Nontrivial out-edges per vertex.
    pub d_of: Vec<usize>,
    pub d_max: usize,
}

impl OutEdgeLabelling {
    /// Edges carrying label `l`.
    pub fn class(&self, l: usize) -> Vec<usize> {
        (0..self.label.len()).filter(|&e| self.label[e] == Some(l)).collect()
    }
}

/// Numbers the nontrivial edges out of each vertex `1, 2, ...` in edge order.
pub fn label_out_edges(h: &Multigraph, trivial: &[bool]) -> OutEdgeLabelling {
    let mut d_of = vec![0; h.vertex_count()];
    let mut label = vec![None; h.edge_count()];
    for (e, edge) in h.edges().iter().enumerate() {
        if !trivial[e] {
            d_of[edge.tail] += 1;
            label[e] = Some(d_of[edge.tail]);
        }
    }
    let d_max = d_of.iter().copied().max().unwrap_or(0);
    OutEdgeLabelling { label, d_of, d_max }
}

/// Floors the overlap of every edge in `e1`, leaving other overlaps alone.
/// No two edges of `e1` may leave the same vertex, and all must be
/// nontrivial.
pub fn round_class(fc: &FractionalColouring, e1: &[usize], c: &StripComposition) -> Result<FractionalColouring> {
    let mut tails: Vec<usize> = e1.iter().map(|&e| c.h().edge(e).tail).collect();
    tails.sort_unstable();
    if tails.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Contract("two edges of a rounding class share a tail".into()));
    }
    if let Some(&e) = e1.iter().find(|&&e| c.strip(e).is_trivial()) {
        return Err(Error::Contract(format!("edge {} is trivial", c.h().edge(e).id)));
    }
    let n = c.graph().n();
    let mut classes: Vec<(Vec<usize>, Rational)> = fc.classes().to_vec();
    // Removed pieces per edge, in order: (X vertex, weight).
    let mut schedules: Vec<(Rational, Vec<(usize, Rational)>)> = Vec::new();
    let overlaps = compute_overlaps(fc, c);
    for &e in e1 {
        let w = overlaps.get(e);
        let frac = w - w.floor();
        if frac.is_zero() {
            continue;
        }
        let mut in_x = vec![false; n];
        for &v in c.x_vertices(e) {
            in_x[v] = true;
        }
        let mut in_y = vec![false; n];
        for &v in c.y_vertices(e) {
            in_y[v] = true;
        }
        let mut remaining = frac.clone();
        let mut pieces = Vec::new();
        let mut i = 0;
        let original = classes.len();
        while !remaining.is_zero() {
            if i == original {
                return Err(Error::Contract("overlap weight not found".into()));
            }
            let (s, wt) = &classes[i];
            let x = s.iter().copied().find(|&v| in_x[v]);
            if let (Some(x), true) = (x, s.iter().any(|&v| in_y[v])) {
                if wt.is_zero() {
                    i += 1;
                    continue;
                }
                let without: Vec<usize> = s.iter().copied().filter(|&v| v != x).collect();
                if *wt <= remaining {
                    remaining -= wt;
                    pieces.push((x, wt.clone()));
                    classes[i].0 = without;
                } else {
                    let take = remaining.clone();
                    classes[i].1 -= &take;
                    classes.push((without, take.clone()));
                    pieces.push((x, take));
                    remaining = Rational::zero();
                }
            }
            i += 1;
        }
        schedules.push((frac, pieces));
    }

    // Refill: at position p in [0, max frac) the class holds, for every
    // scheduled edge with frac > p, the X vertex whose piece covers p.
    let mut cuts: Vec<Rational> = vec![Rational::zero()];
    for (_, pieces) in &schedules {
        let mut acc = Rational::zero();
        for (_, w) in pieces {
            acc += w;
            cuts.push(acc.clone());
        }
    }
    cuts.sort();
    cuts.dedup();
    for win in cuts.windows(2) {
        let (p, q) = (&win[0], &win[1]);
        let mut set = Vec::new();
        for (frac, pieces) in &schedules {
            if frac <= p {
                continue;
            }
            let mut acc = Rational::zero();
            for (x, w) in pieces {
                acc += w;
                if *p < acc {
                    set.push(*x);
                    break;
                }
            }
        }
        classes.push((set, q - p));
    }
    Ok(FractionalColouring::new_unchecked(classes))
}

/// Rounds every overlap down to an integer. The composition must be
/// normalized and satisfy `9 D(H)^2 <= omega`; the result then weighs at most
/// `chi_f + sqrt(omega)/3`.
pub fn round_all(fc: &FractionalColouring, c: &StripComposition, bounds: &Bounds) -> Result<FractionalColouring> {
    if !c.is_normalized() {
        return Err(Error::Input("composition is not normalized".into()));
    }
    let trivial: Vec<bool> = c.strips().iter().map(|s| s.is_trivial()).collect();
    let labels = label_out_edges(c.h(), &trivial);
    if 9 * labels.d_max * labels.d_max > bounds.omega {
        return Err(Error::Structural(format!(
            "D(H) = {} exceeds sqrt(omega)/3 with omega = {}",
            labels.d_max, bounds.omega
        )));
    }
    let mut cur = fc.clone();
    for l in 1..=labels.d_max {
        cur = round_class(&cur, &labels.class(l), c)?;
    }
    if !bounds.within_t_prime(cur.total()) {
        return Err(Error::Contract(format!(
            "rounded weight {} exceeds chi_f + sqrt(omega)/3",
            cur.total()
        )));
    }
    debug_assert!(compute_overlaps(&cur, c).is_integral());
    Ok(cur)
}

/// Integral overlaps as integers.
pub fn integral_overlaps(fc: &FractionalColouring, c: &StripComposition) -> Result<Vec<usize>> {
    use num_traits::ToPrimitive;
    compute_overlaps(fc, c)
        .0
        .iter()
        .map(|w| {
            if w.is_integer() {
                Ok(w.to_integer().to_usize().unwrap())
            } else {
                Err(Error::Contract(format!("overlap {w} is not integral")))
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::{compose, Strip};
    use crate::fractional::tests::q;
    use crate::fractional::{fractional_chromatic, Overlap};
    use crate::graph::SearchLimits;

    fn path(h: &mut Multigraph, names: &[&str]) -> Vec<usize> {
        names.iter().map(|n| h.add_vertex(*n)).collect()
    }

    #[test]
    fn labels_count_out_edges() {
        let mut h = Multigraph::new();
        let v = path(&mut h, &["a", "b", "c", "d"]);
        h.add_edge("1", v[0], v[1]);
        h.add_edge("2", v[0], v[2]);
        h.add_edge("3", v[0], v[3]);
        h.add_edge("4", v[1], v[2]);
        let l = label_out_edges(&h, &[false, false, false, true]);
        assert_eq!(l.label, vec![Some(1), Some(2), Some(3), None]);
        assert_eq!(l.d_max, 3);
        assert_eq!(l.d_of, vec![3, 0, 0, 0]);
        let none = label_out_edges(&h, &[true; 4]);
        assert_eq!(none.d_max, 0);
        let star = label_out_edges(&h, &[false, true, true, false]);
        assert_eq!(star.class(1), vec![0, 3]);
    }

    /// A 4-cycle strip between `u` and `v` with the two middle vertices
    /// forming its interior.
    fn c4_like() -> StripComposition {
        let mut h = Multigraph::new();
        let v = path(&mut h, &["u", "v"]);
        h.add_edge("e", v[0], v[1]);
        compose(h, vec![Strip::new(3, vec![(0, 1), (1, 2)], 1, 1).unwrap()]).unwrap()
    }

    #[test]
    fn half_overlap_costs_half() {
        let c = c4_like();
        let g = c.graph();
        // P3 coloured {0,2}:1/2, {0}:1/2, {1}:1, {2}:1/2.
        let fc = FractionalColouring::new(
            g,
            vec![
                (vec![0, 2], q(1, 2)),
                (vec![0], q(1, 2)),
                (vec![1], q(1, 1)),
                (vec![2], q(1, 2)),
            ],
        )
        .unwrap();
        assert_eq!(compute_overlaps(&fc, &c), Overlap(vec![q(1, 2)]));
        let r = round_class(&fc, &[0], &c).unwrap();
        r.validate(g).unwrap();
        assert_eq!(compute_overlaps(&r, &c), Overlap(vec![q(0, 1)]));
        assert_eq!(r.total(), &(fc.total() + q(1, 2)));
    }

    #[test]
    fn integral_overlaps_are_untouched() {
        let c = c4_like();
        let fc = fractional_chromatic(c.graph(), &SearchLimits::default()).unwrap();
        let w = compute_overlaps(&fc, &c);
        assert!(w.is_integral());
        assert_eq!(round_class(&fc, &[0], &c).unwrap().classes(), fc.classes());
    }

    #[test]
    fn shared_refill_for_two_edges() {
        // Two strips leaving different hubs; overlaps 1/3 and 1/2.
        let mut h = Multigraph::new();
        let v = path(&mut h, &["a", "b", "c", "d"]);
        h.add_edge("e", v[0], v[1]);
        h.add_edge("f", v[2], v[3]);
        let p3 = Strip::new(3, vec![(0, 1), (1, 2)], 1, 1).unwrap();
        let c = compose(h, vec![p3.clone(), p3]).unwrap();
        let g = c.graph();
        let fc = FractionalColouring::new(
            g,
            vec![
                (vec![0, 2, 3, 5], q(1, 3)),
                (vec![0, 4], q(2, 3)),
                (vec![1, 3, 5], q(1, 6)),
                (vec![1, 5], q(1, 2)),
                (vec![1, 3], q(1, 3)),
                (vec![2, 4], q(1, 3)),
                (vec![2], q(1, 3)),
                (vec![3], q(1, 6)),
            ],
        )
        .unwrap();
        assert_eq!(compute_overlaps(&fc, &c), Overlap(vec![q(1, 3), q(1, 2)]));
        let r = round_class(&fc, &[0, 1], &c).unwrap();
        r.validate(g).unwrap();
        assert_eq!(compute_overlaps(&r, &c), Overlap(vec![q(0, 1), q(0, 1)]));
        assert_eq!(r.total(), &(fc.total() + q(1, 2)));
        let added = &r.classes()[r.classes().len() - 2..];
        assert_eq!(added[0], (vec![0, 3], q(1, 3)));
        assert_eq!(added[1], (vec![3], q(1, 6)));
    }

    #[test]
    fn rejects_shared_tails() {
        let mut h = Multigraph::new();
        let v = path(&mut h, &["a", "b", "c"]);
        h.add_edge("e", v[0], v[1]);
        h.add_edge("f", v[0], v[2]);
        let p3 = Strip::new(3, vec![(0, 1), (1, 2)], 1, 1).unwrap();
        let c = compose(h, vec![p3.clone(), p3]).unwrap();
        let fc = fractional_chromatic(c.graph(), &SearchLimits::default()).unwrap();
        assert!(matches!(round_class(&fc, &[0, 1], &c), Err(Error::Contract(_))));
    }

    #[test]
    fn line_graph_is_unchanged() {
        let mut h = Multigraph::new();
        let v = path(&mut h, &["a", "b", "c"]);
        for (i, (x, y)) in [(0, 1), (1, 2), (2, 0), (0, 1)].into_iter().enumerate() {
            h.add_edge(format!("{i}"), v[x], v[y]);
        }
        let c = compose(h, vec![Strip::trivial(); 4]).unwrap();
        let lim = SearchLimits::default();
        let fc = fractional_chromatic(c.graph(), &lim).unwrap();
        let b = Bounds::compute(c.graph(), &lim).unwrap();
        assert_eq!(round_all(&fc, &c, &b).unwrap(), fc);
    }

    #[test]
    fn too_many_out_edges_is_structural() {
        let c = c4_like();
        let lim = SearchLimits::default();
        let fc = fractional_chromatic(c.graph(), &lim).unwrap();
        let b = Bounds::compute(c.graph(), &lim).unwrap();
        assert!(matches!(round_all(&fc, &c, &b), Err(Error::Structural(_))));
    }
}

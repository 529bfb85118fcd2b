use std::ops::{Add, Sub};

use fixedbitset::FixedBitSet;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::graph::{Graph, SearchLimits};
use crate::{Error, Rational, Result};

/// A maximum-weight stable set. Vertices of nonpositive weight are never
/// included.
pub fn max_weight_stable_set(
    g: &Graph,
    weights: &[Rational],
    limits: &SearchLimits,
) -> Result<(Vec<usize>, Rational)> {
    match heavier_than(g, weights, &Rational::zero(), limits)? {
        Some(s) => {
            let w = s.iter().map(|&v| weights[v].clone()).sum();
            Ok((s, w))
        }
        None => Ok((Vec::new(), Rational::zero())),
    }
}

/// The heaviest stable set whose weight strictly exceeds `threshold`, if any.
pub fn heavier_than(
    g: &Graph,
    weights: &[Rational],
    threshold: &Rational,
    limits: &SearchLimits,
) -> Result<Option<Vec<usize>>> {
    assert_eq!(weights.len(), g.n());
    // Scale to integers over a common denominator.
    let mut lcm = threshold.denom().clone();
    for w in weights.iter().filter(|w| w.is_positive()) {
        lcm = lcm.lcm(w.denom());
    }
    let scale = |q: &Rational| -> BigInt { q.numer() * (&lcm / q.denom()) };
    let int_weights: Vec<BigInt> = weights
        .iter()
        .map(|w| if w.is_positive() { scale(w) } else { BigInt::zero() })
        .collect();
    let floor = scale(threshold);
    let total: BigInt = int_weights.iter().sum::<BigInt>() + floor.abs();

    if total.to_i128().is_some_and(|t| t < i128::MAX / 2) {
        let w: Vec<i128> = int_weights.iter().map(|x| x.to_i128().unwrap()).collect();
        search(g, w, floor.to_i128().unwrap(), limits)
    } else {
        search(g, int_weights, floor, limits)
    }
}

fn search<I>(g: &Graph, weights: Vec<I>, floor: I, limits: &SearchLimits) -> Result<Option<Vec<usize>>>
where
    I: Clone + Ord + Zero + One + Add<Output = I> + Sub<Output = I>,
{
    let mut cand = FixedBitSet::with_capacity(g.n());
    for v in 0..g.n() {
        if weights[v] > I::zero() {
            cand.insert(v);
        }
    }
    let mut s = Mwss {
        g,
        weights,
        best_weight: floor,
        best: None,
        nodes: 0,
        limit: limits.max_nodes,
    };
    let mut current = Vec::new();
    s.expand(cand, &mut current, I::zero())?;
    Ok(s.best.map(|mut b| {
        b.sort_unstable();
        b
    }))
}

struct Mwss<'a, I> {
    g: &'a Graph,
    weights: Vec<I>,
    best_weight: I,
    best: Option<Vec<usize>>,
    nodes: u64,
    limit: u64,
}

impl<I> Mwss<'_, I>
where
    I: Clone + Ord + Zero + Add<Output = I> + Sub<Output = I>,
{
    fn expand(&mut self, mut cand: FixedBitSet, current: &mut Vec<usize>, weight: I) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.limit {
            return Err(Error::ResourceLimit { nodes: self.limit });
        }
        if cand.is_clear() {
            if weight > self.best_weight {
                self.best_weight = weight;
                self.best = Some(current.clone());
            }
            return Ok(());
        }
        if weight.clone() + self.clique_cover_bound(&cand) <= self.best_weight {
            return Ok(());
        }
        let v = cand
            .ones()
            .max_by(|&a, &b| self.weights[a].cmp(&self.weights[b]).then(b.cmp(&a)))
            .unwrap();

        let mut with_v = cand.clone();
        with_v.difference_with(self.g.neighbour_set(v));
        with_v.set(v, false);
        current.push(v);
        let w = weight.clone() + self.weights[v].clone();
        self.expand(with_v, current, w)?;
        current.pop();

        cand.set(v, false);
        self.expand(cand, current, weight)
    }

    /// Sum over a greedy clique partition of `cand` of the heaviest weight in
    /// each clique. A stable set meets each clique at most once.
    fn clique_cover_bound(&self, cand: &FixedBitSet) -> I {
        let mut order: Vec<usize> = cand.ones().collect();
        order.sort_by(|&a, &b| self.weights[b].cmp(&self.weights[a]).then(a.cmp(&b)));
        let mut cliques: Vec<FixedBitSet> = Vec::new();
        let mut bound = I::zero();
        for v in order {
            match cliques.iter_mut().find(|common| common.contains(v)) {
                Some(common) => common.intersect_with(self.g.neighbour_set(v)),
                None => {
                    cliques.push(self.g.neighbour_set(v).clone());
                    bound = bound + self.weights[v].clone();
                }
            }
        }
        bound
    }
}

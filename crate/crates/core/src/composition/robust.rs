use crate::graph::{Bounds, Graph, SearchLimits};
use crate::pipeline::{find_clique_cutset, find_nonlinear_homogeneous_pair, HomogeneousPair};
use crate::Result;

/// A reason a graph is not robust, with a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Disconnected { components: Vec<Vec<usize>> },
    LowDegree { vertex: usize, degree: usize },
    CliqueCutset { cutset: Vec<usize> },
    NonlinearPair(HomogeneousPair),
}

/// Every way in which `g` fails to be robust: connected, minimum degree at
/// least `t`, no clique cutset and no nonlinear homogeneous pair of cliques.
pub fn check_robust(g: &Graph, bounds: &Bounds, limits: &SearchLimits) -> Result<Vec<Violation>> {
    let mut out = Vec::new();
    let components = g.components();
    if components.len() > 1 {
        out.push(Violation::Disconnected { components });
    }
    for v in 0..g.n() {
        if g.degree(v) < bounds.t {
            out.push(Violation::LowDegree {
                vertex: v,
                degree: g.degree(v),
            });
        }
    }
    if out.is_empty() || g.is_connected() {
        if let Some((cutset, _)) = find_clique_cutset(g) {
            out.push(Violation::CliqueCutset { cutset });
        }
    }
    if let Some(pair) = find_nonlinear_homogeneous_pair(g, limits)? {
        out.push(Violation::NonlinearPair(pair));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn bounds(g: &Graph) -> Bounds {
        Bounds::compute(g, &SearchLimits::default()).unwrap()
    }

    #[test]
    fn large_clique_is_robust() {
        let g = Graph::complete(12);
        let b = bounds(&g);
        assert_eq!(b.t, 12 + 10);
        // t(K_n) > n - 1, so fix a small t to test the other conditions.
        let b = Bounds { t: 11, ..b };
        assert!(check_robust(&g, &b, &SearchLimits::default()).unwrap().is_empty());
        assert_eq!(b.chi_f, Rational::from_integer(12.into()));
    }

    #[test]
    fn isolated_vertex_is_low_degree() {
        let g = Graph::complete(3).disjoint_union(&Graph::new(1));
        let v = check_robust(&g, &bounds(&g), &SearchLimits::default()).unwrap();
        assert!(v.contains(&Violation::LowDegree { vertex: 3, degree: 0 }));
        assert!(matches!(v[0], Violation::Disconnected { .. }));
    }

    #[test]
    fn four_cycle_pair() {
        let g = Graph::cycle(4);
        let b = Bounds { t: 0, ..bounds(&g) };
        let v = check_robust(&g, &b, &SearchLimits::default()).unwrap();
        assert!(matches!(v.as_slice(), [Violation::NonlinearPair(_)]));
    }
}

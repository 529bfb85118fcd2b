//! The top-level colouring algorithm.
//!
//! A raw graph is reduced until every remaining piece is robust: vertices of
//! degree below `t` are peeled off, nonlinear homogeneous pairs are
//! simplified, and the graph is split at components and clique cutsets. A
//! robust piece is coloured optimally if it is a circular interval graph and
//! through a strip composition otherwise. `t` is computed once, from the
//! original input.

mod generate;
mod reduce;

pub use generate::{gen_circular_interval, gen_composition, gen_planted_pair, CircularParams, CompositionParams};
pub use reduce::{
    find_clique_cutset, find_low_degree, find_nonlinear_homogeneous_pair, reduce_homogeneous_pair, HomogeneousPair,
    PairRecipe, ReductionStep,
};

use crate::composition::{detect_strip_decomposition, serialize_composition, StripComposition};
use crate::fractional::fractional_chromatic;
use crate::graph::{verify_colouring, Bounds, Colouring, Graph, SearchLimits};
use crate::hubcolour::{colour_gprime, contract, lift_to_hub, merge, transfer_fractional};
use crate::interval::{colour_circular_interval, recognize_circular_interval};
use crate::rounding::{integral_overlaps, round_all};
use crate::stripcolour::{colour_strip, StripColourSpec};
use crate::{Error, Result};

#[derive(Debug, Clone)]
pub enum Input {
    Graph(Graph),
    Composition(StripComposition),
}

impl Input {
    pub fn graph(&self) -> &Graph {
        match self {
            Input::Graph(g) => g,
            Input::Composition(c) => c.graph(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub colouring: Colouring,
    pub bounds: Bounds,
    /// Reductions in the order applied, in original vertex numbering.
    pub steps: Vec<ReductionStep>,
    /// Intermediate results as `(name, text)`, in the order produced.
    pub stages: Vec<(String, String)>,
}

/// Colours a quasi-line graph, or a composition of strips, with at most
/// `t(G)` colours.
pub fn colour_quasi_line(input: &Input, limits: &SearchLimits) -> Result<Outcome> {
    let g = input.graph();
    if !g.is_quasi_line() {
        return Err(Error::Input("graph is not quasi-line".into()));
    }
    let bounds = Bounds::compute(g, limits)?;
    let mut run = Run {
        t: bounds.t,
        limits: *limits,
        steps: Vec::new(),
        stages: vec![("bounds".into(), bounds_text(&bounds))],
        pieces: 0,
    };
    let colouring = match input {
        Input::Composition(c) => match run.composition(c) {
            Err(Error::Structural(msg)) => {
                run.stages.push(("fallback".into(), format!("{msg}\n")));
                run.graph(g, &(0..g.n()).collect::<Vec<_>>())?
            }
            other => other?,
        },
        Input::Graph(g) => run.graph(g, &(0..g.n()).collect::<Vec<_>>())?,
    };
    if !verify_colouring(g, &colouring)? || colouring.span() > bounds.t {
        return Err(Error::Contract(format!(
            "final colouring is improper or uses more than {} colours",
            bounds.t
        )));
    }
    run.stages.push(("colouring".into(), colouring.to_text()));
    Ok(Outcome {
        colouring,
        bounds,
        steps: run.steps,
        stages: run.stages,
    })
}

fn bounds_text(b: &Bounds) -> String {
    format!("omega {}\nchi_f {}\nt {}\n", b.omega, b.chi_f, b.t)
}

struct Run {
    t: usize,
    limits: SearchLimits,
    steps: Vec<ReductionStep>,
    stages: Vec<(String, String)>,
    pieces: usize,
}

impl Run {
    /// Colours `g`, whose vertex `i` is vertex `map[i]` of the input, with
    /// colours `0..t`.
    fn graph(&mut self, g: &Graph, map: &[usize]) -> Result<Colouring> {
        if g.n() == 0 {
            return Ok(Colouring::new(Vec::new()));
        }
        let orig = |vs: &[usize]| -> Vec<usize> { vs.iter().map(|&v| map[v]).collect() };

        // Low degree: peel repeatedly, colour the rest, then add back greedily.
        let mut alive: Vec<usize> = (0..g.n()).collect();
        let mut peeled = Vec::new();
        while let Some(i) = (0..alive.len())
            .find(|&i| alive.iter().filter(|&&u| g.has_edge(alive[i], u)).count() < self.t)
        {
            let v = alive.remove(i);
            let nb: Vec<usize> = alive.iter().copied().filter(|&u| g.has_edge(v, u)).collect();
            self.steps.push(ReductionStep::LowDegree {
                vertex: map[v],
                neighbours: orig(&nb),
            });
            peeled.push((v, nb));
        }
        if !peeled.is_empty() {
            let sub = self.graph(&g.induced(&alive), &orig(&alive))?;
            let mut col = vec![usize::MAX; g.n()];
            for (i, &v) in alive.iter().enumerate() {
                col[v] = sub.colour(i);
            }
            for (v, nb) in peeled.into_iter().rev() {
                let used: Vec<usize> = nb.iter().map(|&u| col[u]).collect();
                col[v] = (0..self.t)
                    .find(|c| !used.contains(c))
                    .ok_or_else(|| Error::Contract("no free colour for a low-degree vertex".into()))?;
            }
            return Ok(Colouring::new(col));
        }

        if let Some(pair) = find_nonlinear_homogeneous_pair(g, &self.limits)? {
            let (gp, recipe) = reduce_homogeneous_pair(g, &pair)?;
            self.steps.push(ReductionStep::HomogeneousPair {
                pair: HomogeneousPair {
                    a: orig(&pair.a),
                    b: orig(&pair.b),
                },
                removed: recipe.removed.iter().map(|&(x, y)| (map[x], map[y])).collect(),
            });
            let mut gp = gp;
            gp.set_labels(g.labels().map(|l| l.to_vec()));
            let col = self.graph(&gp, map)?;
            return recipe.extend(&col);
        }

        let components = g.components();
        if components.len() > 1 {
            let mut col = vec![0; g.n()];
            for comp in components {
                let sub = self.graph(&g.induced(&comp), &orig(&comp))?;
                for (i, &v) in comp.iter().enumerate() {
                    col[v] = sub.colour(i);
                }
            }
            return Ok(Colouring::new(col));
        }

        if let Some((cutset, parts)) = find_clique_cutset(g) {
            self.steps.push(ReductionStep::CliqueCutset {
                cutset: orig(&cutset),
                parts: parts.iter().map(|p| orig(p)).collect(),
            });
            return self.cutset(g, map, &cutset, &parts);
        }

        self.robust(g, map)
    }

    /// Colours each `G[S ∪ C]` and permutes colours to agree on `S`.
    fn cutset(&mut self, g: &Graph, map: &[usize], s: &[usize], parts: &[Vec<usize>]) -> Result<Colouring> {
        let mut col = vec![usize::MAX; g.n()];
        for part in parts {
            let mut vs: Vec<usize> = s.iter().chain(part).copied().collect();
            vs.sort_unstable();
            let sub_map: Vec<usize> = vs.iter().map(|&v| map[v]).collect();
            let sub = self.graph(&g.induced(&vs), &sub_map)?;
            let local = |v: usize| sub.colour(vs.binary_search(&v).unwrap());
            // perm[c]: final colour of part colour c.
            let mut perm = vec![usize::MAX; self.t];
            if col[s[0]] == usize::MAX {
                perm = (0..self.t).collect();
            } else {
                for &v in s {
                    perm[local(v)] = col[v];
                }
                let mut unused = (0..self.t).filter(|c| !s.iter().any(|&v| col[v] == *c));
                for p in perm.iter_mut().filter(|p| **p == usize::MAX) {
                    *p = unused.next().unwrap();
                }
            }
            for &v in &vs {
                col[v] = perm[local(v)];
            }
        }
        Ok(Colouring::new(col))
    }

    fn robust(&mut self, g: &Graph, map: &[usize]) -> Result<Colouring> {
        self.pieces += 1;
        let tag = format!("piece{}", self.pieces);
        let vs: Vec<String> = map.iter().map(|v| (v + 1).to_string()).collect();
        self.stages.push((format!("{tag}-vertices"), format!("{}\n", vs.join(" "))));
        if let Some(rep) = recognize_circular_interval(g, &self.limits)? {
            self.stages.push((format!("{tag}-circular"), rep.to_text()));
            return colour_circular_interval(g, &rep, &self.limits);
        }
        let Some(c) = detect_strip_decomposition(g, &self.limits) else {
            return Err(Error::DecompositionRequired(format!(
                "a robust piece on {} vertices is neither circular interval nor a recognisable composition; \
                 supply it as a composition file",
                g.n()
            )));
        };
        self.composition(&c)
    }

    /// The composition path: round a fractional colouring, colour the
    /// contracted line graph, lift it to the hubs and fill in the strips.
    fn composition(&mut self, c: &StripComposition) -> Result<Colouring> {
        let c = c.normalize();
        c.check_loopless()?;
        let g = c.graph();
        if g.n() == 0 {
            return Ok(Colouring::new(Vec::new()));
        }
        let tag = format!("composition{}", self.stages.iter().filter(|(n, _)| n.ends_with("-composition")).count() + 1);
        self.stages.push((format!("{tag}-composition"), serialize_composition(&c)));
        let local = Bounds::compute(g, &self.limits)?;
        let fc = fractional_chromatic(g, &self.limits)?;
        self.stages.push((format!("{tag}-fractional"), fc.to_text()));
        let rounded = round_all(&fc, &c, &local)?;
        self.stages.push((format!("{tag}-rounded"), rounded.to_text()));
        let overlaps = integral_overlaps(&rounded, &c)?;
        let k = contract(&c, &overlaps)?;
        self.stages.push((format!("{tag}-hprime"), k.hprime.to_text()));
        let certificate = transfer_fractional(&rounded, &c, &k)?;
        if !local.within_t_prime(certificate.total()) {
            return Err(Error::Contract("contracted fractional colouring exceeds t'".into()));
        }
        let cg = colour_gprime(&k, self.t, &self.limits)?;
        self.stages.push((format!("{tag}-gprime-colouring"), cg.to_text()));
        let hub = lift_to_hub(&cg, &c, &overlaps, &k)?;
        self.stages.push((format!("{tag}-hub-colouring"), hub.to_text()));
        let strips = (0..c.strips().len())
            .map(|e| {
                let s = c.strip(e);
                if s.is_trivial() {
                    Ok(None)
                } else {
                    colour_strip(s, StripColourSpec { k: self.t, r: overlaps[e] }, &self.limits).map(Some)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        merge(&hub, &strips, &c, self.t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::{compose, Strip};
    use crate::graph::{exact_chromatic, Multigraph};

    fn lim() -> SearchLimits {
        SearchLimits::default()
    }

    fn check(input: Input) -> Outcome {
        let out = colour_quasi_line(&input, &lim()).unwrap();
        assert!(verify_colouring(input.graph(), &out.colouring).unwrap());
        assert!(out.colouring.span() <= out.bounds.t);
        out
    }

    #[test]
    fn five_cycle() {
        let out = check(Input::Graph(Graph::cycle(5)));
        assert_eq!(out.bounds.t, 7);
        assert_eq!(out.colouring.palette_size(), 3);
    }

    #[test]
    fn claw_is_rejected() {
        let claw = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        assert!(matches!(colour_quasi_line(&Input::Graph(claw), &lim()), Err(Error::Input(_))));
    }

    fn petersen() -> Multigraph {
        let mut h = Multigraph::new();
        for i in 0..10 {
            h.add_vertex(format!("p{i}"));
        }
        for i in 0..5 {
            h.add_edge(format!("o{i}"), i, (i + 1) % 5);
            h.add_edge(format!("s{i}"), i, i + 5);
            h.add_edge(format!("i{i}"), 5 + i, 5 + (i + 2) % 5);
        }
        h
    }

    #[test]
    fn line_graph_of_petersen() {
        let c = compose(petersen(), vec![Strip::trivial(); 15]).unwrap();
        let out = check(Input::Composition(c.clone()));
        assert!(out.colouring.palette_size() >= 4);
        assert_eq!(exact_chromatic(c.graph(), None, &lim()).unwrap().0, 4);
        // As a raw graph every degree is 4 < t = 8, so it is peeled entirely.
        let raw = check(Input::Graph(c.graph().clone()));
        assert_eq!(raw.bounds.t, 8);
    }

    #[test]
    fn generated_compositions() {
        for seed in 0..5 {
            let c = gen_composition(seed, &CompositionParams::default()).unwrap();
            check(Input::Composition(c));
        }
    }

    fn run(t: usize) -> Run {
        Run {
            t,
            limits: lim(),
            steps: Vec::new(),
            stages: Vec::new(),
            pieces: 0,
        }
    }

    #[test]
    fn dense_cycle_power_has_a_pair() {
        // Each vertex adjacent to the 14 nearest on either side of a 30-cycle.
        // {0, 1} and {15, 16} form a nonlinear homogeneous pair.
        let mut g = Graph::new(30);
        for i in 0..30 {
            for d in 1..=14 {
                let j = (i + d) % 30;
                if !g.has_edge(i, j) {
                    g.add_edge(i, j);
                }
            }
        }
        let out = check(Input::Graph(g));
        assert!(out.steps.iter().any(|s| matches!(s, ReductionStep::HomogeneousPair { .. })));
    }

    #[test]
    fn robust_circular_piece() {
        let mut g = Graph::cycle(7);
        for i in 0..7 {
            g.add_edge(i, (i + 2) % 7);
        }
        let mut r = run(4);
        let col = r.robust(&g, &(0..7).collect::<Vec<_>>()).unwrap();
        assert!(verify_colouring(&g, &col).unwrap());
        assert_eq!(col.palette_size(), 4);
        assert!(r.stages.iter().any(|(n, _)| n.ends_with("-circular")));
    }

    #[test]
    fn planted_pairs_are_reduced() {
        for seed in 0..5 {
            let (g, _) = gen_planted_pair(seed, 16).unwrap();
            let out = check(Input::Graph(g));
            assert!(!out.steps.is_empty());
        }
    }

    #[test]
    fn cutset_recombination() {
        // Two K5s sharing a K3.
        let mut g = Graph::complete(7);
        for a in [0, 1] {
            for b in [5, 6] {
                g.remove_edge(a, b);
            }
        }
        let (s, parts) = find_clique_cutset(&g).unwrap();
        let col = run(5).cutset(&g, &(0..7).collect::<Vec<_>>(), &s, &parts).unwrap();
        assert!(verify_colouring(&g, &col).unwrap());
        assert!(col.span() <= 5);
    }
}

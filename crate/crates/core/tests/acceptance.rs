//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use quasiline::composition::{line_graph_root, Strip, StripComposition};
use quasiline::fractional::{compute_overlaps, fractional_chromatic, incidence_rank};
use quasiline::graph::matching::maximum_matching;
use quasiline::graph::{ceil, dsatur_greedy, exact_chromatic, target_palette, verify_colouring, Bounds};
use quasiline::hubcolour::{colour_gprime, contract};
use quasiline::interval::{colour_circular_interval, recognize_circular_interval};
use quasiline::pipeline::{
    colour_quasi_line, gen_circular_interval, gen_composition, gen_planted_pair, reduce_homogeneous_pair,
    CircularParams, CompositionParams, Input,
};
use quasiline::rounding::{integral_overlaps, round_all};
use quasiline::stripcolour::{build_fe, colour_strip, StripColourSpec};
use quasiline::{Error, Graph, Rational, SearchLimits};

type Outcome = Result<String, String>;

fn lim() -> SearchLimits {
    SearchLimits::default()
}

fn q(p: i64, d: i64) -> Rational {
    Rational::new(p.into(), d.into())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Seeds 0..80 with default parameters and 80..120 with larger ones
/// (around 50 vertices).
fn compositions() -> Vec<(u64, StripComposition)> {
    let large = CompositionParams {
        h_vertices: 7,
        h_edges: 10,
        strip_len: (4, 8),
        end_size: (1, 3),
        trivial_fraction: 0.3,
        max_vertices: 60,
    };
    (0..120)
        .map(|seed| {
            let p = if seed < 80 { CompositionParams::default() } else { large.clone() };
            (seed, gen_composition(seed, &p).expect("generator"))
        })
        .collect()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut c5 = Graph::cycle(5).complement();
    for k in 1..=2i64 {
        if k == 2 {
            c5 = Graph::cycle(5).disjoint_union(&Graph::cycle(5)).complement();
        }
        let chi_f = fractional_chromatic(&c5, &lim()).map_err(|e| e.to_string())?;
        ensure(*chi_f.total() == q(5 * k, 2), || format!("k={k}: chi_f = {}", chi_f.total()))?;
        let (chi, _) = exact_chromatic(&c5, None, &lim()).map_err(|e| e.to_string())?;
        ensure(chi as i64 == 3 * k, || format!("k={k}: chi = {chi}"))?;
    }
    let took = start.elapsed();
    ensure(took < Duration::from_secs(10), || format!("took {took:?}"))?;
    Ok(format!("chi_f = 5k/2 and chi = 3k for k = 1, 2 in {took:.2?}"))
}

fn criterion_2(comps: &[(u64, StripComposition)]) -> Outcome {
    let mut max_n = 0;
    for (seed, c) in comps {
        let g = c.graph();
        ensure(g.n() <= 60, || format!("seed {seed}: {} vertices", g.n()))?;
        max_n = max_n.max(g.n());
        let chi_f = fractional_chromatic(g, &lim()).map_err(|e| e.to_string())?;
        let t = target_palette(chi_f.total());
        let out = colour_quasi_line(&Input::Composition(c.clone()), &lim()).map_err(|e| format!("seed {seed}: {e}"))?;
        ensure(verify_colouring(g, &out.colouring).unwrap(), || format!("seed {seed}: improper"))?;
        let used = out.colouring.palette_size();
        ensure(used <= t, || format!("seed {seed}: {used} colours > t = {t}"))?;
    }
    Ok(format!("{} compositions (up to {max_n} vertices), all proper within t", comps.len()))
}

fn criterion_3() -> Outcome {
    let mut count = 0;
    for seed in 0..60u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.random_range(4..=25);
        let hi = rng.random_range(1..=n.min(8));
        let (g, _) = gen_circular_interval(seed, &CircularParams { n, arc_len: (1, hi) }).map_err(|e| e.to_string())?;
        let rep = recognize_circular_interval(&g, &lim())
            .map_err(|e| e.to_string())?
            .ok_or_else(|| format!("seed {seed}: not recognised"))?;
        let col = colour_circular_interval(&g, &rep, &lim()).map_err(|e| e.to_string())?;
        ensure(verify_colouring(&g, &col).unwrap(), || format!("seed {seed}: improper"))?;
        let chi_f = fractional_chromatic(&g, &lim()).map_err(|e| e.to_string())?;
        let up: usize = ceil(chi_f.total()).try_into().unwrap();
        let (chi, _) = exact_chromatic(&g, None, &lim()).map_err(|e| e.to_string())?;
        ensure(col.palette_size() == up && up == chi, || {
            format!("seed {seed}: palette {}, ceil(chi_f) {up}, chi {chi}", col.palette_size())
        })?;
        count += 1;
    }
    Ok(format!("{count} circular interval graphs with palette = ceil(chi_f) = chi"))
}

fn criterion_4(comps: &[(u64, StripComposition)]) -> Outcome {
    let mut fractional = 0;
    for (seed, c) in comps {
        let g = c.graph();
        let b = Bounds::compute(g, &lim()).map_err(|e| e.to_string())?;
        let fc = fractional_chromatic(g, &lim()).map_err(|e| e.to_string())?;
        let before = compute_overlaps(&fc, c);
        if !before.is_integral() {
            fractional += 1;
        }
        let r = round_all(&fc, c, &b).map_err(|e| format!("seed {seed}: {e}"))?;
        ensure(b.within_t_prime(r.total()), || format!("seed {seed}: weight {} above t'", r.total()))?;
        let after = compute_overlaps(&r, c);
        for e in 0..c.strips().len() {
            ensure(after.get(e) == &before.get(e).floor(), || {
                format!("seed {seed}: overlap {} became {}", before.get(e), after.get(e))
            })?;
        }
        for v in 0..g.n() {
            ensure(r.coverage(v) == q(1, 1), || format!("seed {seed}: vertex {} covered {}", v + 1, r.coverage(v)))?;
        }
        r.validate(g).map_err(|e| format!("seed {seed}: {e}"))?;
    }
    Ok(format!(
        "{} roundings ({fractional} with fractional overlaps) within chi_f + sqrt(omega)/3",
        comps.len()
    ))
}

fn cross_matching(s: &Strip) -> usize {
    let g = s.graph();
    let ys: Vec<usize> = s.y().collect();
    let adj: Vec<Vec<usize>> = s
        .x()
        .map(|x| (0..ys.len()).filter(|&j| !g.has_edge(x, ys[j])).collect())
        .collect();
    maximum_matching(&adj, ys.len()).size()
}

fn shared_colours(s: &Strip, c: &quasiline::Colouring) -> usize {
    let xs: BTreeSet<usize> = s.x().map(|p| c.colour(p)).collect();
    s.y().map(|p| c.colour(p)).filter(|col| xs.contains(col)).count()
}

fn criterion_5(comps: &[(u64, StripComposition)]) -> Outcome {
    let mut strips: Vec<Strip> = comps
        .iter()
        .flat_map(|(_, c)| c.strips().iter().filter(|s| !s.is_trivial()).cloned())
        .collect();
    strips.dedup();
    let (mut feasible, mut refused, mut spec_errors) = (0, 0, 0);
    for s in &strips {
        let omega = s.cliques().iter().map(|&(a, b)| b - a + 1).max().unwrap();
        let nu = cross_matching(s);
        let mut specs: Vec<StripColourSpec> = (0..=s.xsize().min(s.ysize()))
            .map(|r| StripColourSpec { k: (s.len() - r).max(omega), r })
            .collect();
        let c = dsatur_greedy(&s.graph());
        let r = shared_colours(s, &c);
        specs.push(StripColourSpec { k: c.span().max(s.xsize() + s.ysize() - r), r });
        for spec in specs {
            match colour_strip(s, spec, &lim()) {
                Ok(col) => {
                    ensure(spec.r <= nu, || format!("r = {} above matching {nu} was coloured", spec.r))?;
                    ensure(verify_colouring(&s.graph(), &col).unwrap() && col.span() <= spec.k, || "improper".into())?;
                    let got = shared_colours(s, &col);
                    ensure(got == spec.r, || format!("{got} shared colours, wanted {}", spec.r))?;
                    feasible += 1;
                }
                Err(Error::Contract(_)) if spec.r > nu => refused += 1,
                Err(e) => return Err(format!("{spec:?}: {e}")),
            }
        }
        // V_C would be negative.
        let bad = StripColourSpec { k: s.xsize() + s.ysize() - 1, r: 0 };
        match build_fe(s, bad) {
            Err(Error::Spec(_)) => spec_errors += 1,
            other => return Err(format!("{bad:?} gave {:?}", other.map(|_| ()))),
        }
    }
    ensure(feasible >= 200, || format!("only {feasible} feasible specs"))?;
    Ok(format!(
        "{feasible} feasible specs with exact overlap, {refused} unreachable overlaps refused, {spec_errors} spec errors"
    ))
}

fn criterion_6(comps: &[(u64, StripComposition)]) -> Outcome {
    let mut checked = 0;
    for (seed, c) in comps {
        let g = c.graph();
        let b = Bounds::compute(g, &lim()).map_err(|e| e.to_string())?;
        let fc = fractional_chromatic(g, &lim()).map_err(|e| e.to_string())?;
        let r = round_all(&fc, c, &b).map_err(|e| e.to_string())?;
        let w = integral_overlaps(&r, c).map_err(|e| e.to_string())?;
        let k = contract(c, &w).map_err(|e| format!("seed {seed}: {e}"))?;
        for (e, p) in k.parts.iter().enumerate() {
            let s = c.strip(e);
            ensure(p.len() == s.xsize() + s.ysize() - w[e], || format!("seed {seed}: |S'_e| wrong on edge {e}"))?;
            let all: Vec<usize> = p.both.iter().chain(&p.x_only).chain(&p.y_only).copied().collect();
            ensure(k.gprime.is_clique(&all), || format!("seed {seed}: S'_e not a clique"))?;
        }
        let root = line_graph_root(&k.gprime, &lim()).map_err(|e| e.to_string())?;
        ensure(root.is_some(), || format!("seed {seed}: G' not recognised as a line graph"))?;
        let col = colour_gprime(&k, b.t, &lim()).map_err(|e| format!("seed {seed}: {e}"))?;
        ensure(verify_colouring(&k.gprime, &col).unwrap() && col.span() <= b.t, || format!("seed {seed}: bad G' colouring"))?;
        checked += 1;
    }
    Ok(format!("{checked} contractions are line graphs coloured within t"))
}

fn criterion_7(comps: &[(u64, StripComposition)]) -> Outcome {
    let mut graphs: Vec<Graph> = comps.iter().map(|(_, c)| c.graph().clone()).collect();
    for seed in 0..40 {
        graphs.push(gen_circular_interval(seed, &CircularParams { n: 15, arc_len: (1, 5) }).unwrap().0);
    }
    for seed in 0..40 {
        graphs.push(gen_planted_pair(seed, 16).unwrap().0);
    }
    for (i, g) in graphs.iter().enumerate() {
        let fc = fractional_chromatic(g, &lim()).map_err(|e| e.to_string())?;
        let sets: Vec<&[usize]> = fc.positive_classes().map(|(s, _)| s.as_slice()).collect();
        ensure(sets.len() <= g.n(), || format!("instance {i}: {} classes on {} vertices", sets.len(), g.n()))?;
        ensure(incidence_rank(g.n(), &sets) == sets.len(), || format!("instance {i}: dependent classes"))?;
        ensure(fc.classes().iter().all(|(_, w)| !w.is_zero()), || format!("instance {i}: zero-weight class"))?;
    }
    Ok(format!("{} optimal solutions are basic", graphs.len()))
}

fn criterion_8() -> Outcome {
    let mut count = 0;
    for seed in 0..40 {
        let (g, pair) = gen_planted_pair(seed, 16).map_err(|e| e.to_string())?;
        ensure(g.n() <= 16, || format!("seed {seed}: {} vertices", g.n()))?;
        let (gp, recipe) = reduce_homogeneous_pair(&g, &pair).map_err(|e| e.to_string())?;
        ensure(gp.edge_count() < g.edge_count() && gp.is_quasi_line(), || format!("seed {seed}: bad reduced graph"))?;
        let (chi, _) = exact_chromatic(&g, None, &lim()).map_err(|e| e.to_string())?;
        let (chi_p, col) = exact_chromatic(&gp, None, &lim()).map_err(|e| e.to_string())?;
        ensure(chi == chi_p, || format!("seed {seed}: chi {chi} became {chi_p}"))?;
        let back = recipe.extend(&col).map_err(|e| e.to_string())?;
        ensure(verify_colouring(&g, &back).unwrap(), || format!("seed {seed}: extension improper"))?;
        ensure(back.palette_size() <= chi, || format!("seed {seed}: extension uses extra colours"))?;
        count += 1;
    }
    Ok(format!("{count} planted pairs reduced with chi preserved"))
}

fn criterion_9() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_quasiline");
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let path = |name: &str| dir.path().join(name).to_string_lossy().into_owned();
    let run = |args: &[String]| -> (Vec<u8>, Vec<u8>, Option<i32>) {
        let out = Command::new(bin).args(args).output().expect("run binary");
        (out.stdout, out.stderr, out.status.code())
    };
    let s = |v: &[&str]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
    let gens = [
        (s(&["gen", "composition", "--seed", "7"]), "comp.txt"),
        (s(&["gen", "composition", "--seed", "7", "--graph"]), "graph.txt"),
        (s(&["gen", "circular", "--seed", "3", "--n", "14"]), "circ.txt"),
    ];
    for (args, file) in &gens {
        let (out, _, code) = run(args);
        ensure(code == Some(0), || format!("{args:?} failed"))?;
        std::fs::write(path(file), out).map_err(|e| e.to_string())?;
    }
    let (colour, _, _) = run(&s(&["colour", &path("graph.txt")]));
    std::fs::write(path("col.txt"), colour).map_err(|e| e.to_string())?;
    let mut commands: Vec<Vec<String>> = gens.iter().map(|(a, _)| a.clone()).collect();
    commands.extend([
        s(&["colour", "--composition", &path("comp.txt")]),
        s(&["colour", &path("graph.txt")]),
        s(&["colour", &path("circ.txt")]),
        s(&["chif", &path("circ.txt")]),
        s(&["verify", &path("graph.txt"), &path("col.txt")]),
        s(&["oracle", "chi", &path("circ.txt")]),
        s(&["oracle", "omega", &path("graph.txt")]),
        s(&["decompose", &path("graph.txt")]),
        s(&["decompose", &path("circ.txt")]),
    ]);
    for args in &commands {
        let first = run(args);
        ensure(first == run(args), || format!("{args:?} differs between runs"))?;
    }
    let dump = |d: &str| -> Vec<(String, Vec<u8>)> {
        let target = path(d);
        run(&s(&["colour", "--composition", &path("comp.txt"), "--dump-stages", &target]));
        let mut files: Vec<(String, Vec<u8>)> = std::fs::read_dir(&target)
            .unwrap()
            .map(|e| {
                let e = e.unwrap();
                (e.file_name().to_string_lossy().into_owned(), std::fs::read(e.path()).unwrap())
            })
            .collect();
        files.sort();
        files
    };
    let a = dump("stages-a");
    ensure(!a.is_empty() && a == dump("stages-b"), || "stage dumps differ".into())?;
    Ok(format!("{} subcommand runs and stage dumps byte-identical", commands.len()))
}

fn main() {
    let comps = compositions();
    let results: Vec<(&str, Outcome)> = vec![
        ("complement of k C5s: chi_f = 5k/2, chi = 3k", criterion_1()),
        ("bound suite: palette <= floor(chi_f + 3 sqrt(chi_f))", criterion_2(&comps)),
        ("circular interval: palette = ceil(chi_f) = chi", criterion_3()),
        ("rounding: weight <= chi_f + sqrt(omega)/3, floors, exact cover", criterion_4(&comps)),
        ("strip colouring: exactly r shared colours", criterion_5(&comps)),
        ("contraction: clique sizes, line graph, within t", criterion_6(&comps)),
        ("basic solutions: <= n independent classes", criterion_7(&comps)),
        ("homogeneous pairs: chi preserved, recipe extends", criterion_8()),
        ("CLI determinism", criterion_9()),
    ];
    let mut failed = 0;
    for (i, (name, r)) in results.iter().enumerate() {
        match r {
            Ok(detail) => println!("criterion {} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}

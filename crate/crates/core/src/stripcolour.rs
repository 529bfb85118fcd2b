//! Integral strip colourings with a prescribed number of colours shared by
//! the two ends.
//!
//! The strip is closed into a circular interval graph `F_e` by appending
//! cliques `V_A`, `V_C`, `V_B` after its last vertex and making
//! `Y ∪ V_A ∪ V_C`, `V_A ∪ V_C ∪ V_B` and `V_C ∪ V_B ∪ X` cliques. Any
//! `k`-colouring of `F_e` then shows exactly `r` colours on both ends.

use crate::composition::Strip;
use crate::graph::{k_colour, Colouring, Graph, SearchLimits};
use crate::interval::{prune_arcs, CircularIntervalRep};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StripColourSpec {
    /// Palette size.
    pub k: usize,
    /// Colours required in both end cliques.
    pub r: usize,
}

/// Sizes of `V_A`, `V_C`, `V_B`.
fn gadget_sizes(strip: &Strip, spec: StripColourSpec) -> Result<(usize, usize, usize)> {
    let (x, y) = (strip.xsize(), strip.ysize());
    if strip.is_trivial() {
        return Err(Error::Spec("trivial strips need no gadget".into()));
    }
    if spec.r > x.min(y) {
        return Err(Error::Spec(format!("r = {} exceeds min(|X|, |Y|) = {}", spec.r, x.min(y))));
    }
    let c = (spec.k + spec.r)
        .checked_sub(x + y)
        .ok_or_else(|| Error::Spec(format!("k - |X| - |Y| + r = {} is negative", spec.k as i64 + spec.r as i64 - (x + y) as i64)))?;
    let omega = strip.cliques().iter().map(|&(a, b)| b - a + 1).max().unwrap_or(0);
    if spec.k < omega {
        return Err(Error::Spec(format!("k = {} below the strip clique number {omega}", spec.k)));
    }
    Ok((x - spec.r, c, y - spec.r))
}

/// `F_e` with positions `0..n` for the strip, then `V_A`, `V_C`, `V_B`.
pub fn build_fe(strip: &Strip, spec: StripColourSpec) -> Result<(Graph, CircularIntervalRep)> {
    let (a, c, b) = gadget_sizes(strip, spec)?;
    let n = strip.len();
    let total = n + a + c + b;
    let (x, y) = (strip.xsize(), strip.ysize());
    let mut arcs: Vec<(usize, usize)> = strip.cliques().iter().map(|&(s, e)| (s, e - s + 1)).collect();
    arcs.push((n - y, y + a + c));
    arcs.push((n, a + c + b));
    arcs.push((n + a, c + b + x));
    arcs.retain(|&(_, len)| len > 0);
    let arcs = prune_arcs(total, arcs);
    let rep = CircularIntervalRep {
        order: (0..total).collect(),
        arcs,
    };
    Ok((rep.to_graph(), rep))
}

/// A `k`-colouring of the strip with exactly `r` colours on both ends.
/// Colours are renamed `0..`: shared colours first, then `X`-only, then
/// `Y`-only, then the rest, each group in order of the original colour.
pub fn colour_strip(strip: &Strip, spec: StripColourSpec, limits: &SearchLimits) -> Result<Colouring> {
    let (fe, _) = build_fe(strip, spec)?;
    let col = k_colour(&fe, spec.k, limits)?
        .ok_or_else(|| Error::Contract(format!("strip gadget is not {}-colourable", spec.k)))?;
    let n = strip.len();
    let mut on_x = vec![false; spec.k];
    let mut on_y = vec![false; spec.k];
    for p in strip.x() {
        on_x[col.colour(p)] = true;
    }
    for p in strip.y() {
        on_y[col.colour(p)] = true;
    }
    let shared = (0..spec.k).filter(|&c| on_x[c] && on_y[c]).count();
    if shared != spec.r {
        return Err(Error::Contract(format!(
            "strip colouring shares {shared} colours between its ends, expected {}",
            spec.r
        )));
    }
    let group = |c: usize| match (on_x[c], on_y[c]) {
        (true, true) => 0,
        (true, false) => 1,
        (false, true) => 2,
        (false, false) => 3,
    };
    let mut by_group: Vec<usize> = (0..spec.k).collect();
    by_group.sort_by_key(|&c| (group(c), c));
    let mut rename = vec![0; spec.k];
    for (new, &old) in by_group.iter().enumerate() {
        rename[old] = new;
    }
    Ok(Colouring::new((0..n).map(|p| rename[col.colour(p)]).collect()))
}

//! Best-effort recovery of a strip decomposition from a graph.
//!
//! Vertex labels of the form `<edge-id>.<position>` (as written by
//! [`compose`](super::compose)) group vertices into candidate strips; without
//! such labels every vertex is its own trivial strip and the graph must be a
//! line graph. In both cases the hub structure is recovered by line-graph
//! recognition and the result is accepted only if it reproduces the graph.

use std::collections::BTreeMap;

use fixedbitset::FixedBitSet;

use super::{line_graph_root, Strip, StripComposition};
use crate::graph::{Graph, Multigraph, SearchLimits};

pub fn detect_strip_decomposition(g: &Graph, limits: &SearchLimits) -> Option<StripComposition> {
    if let Some(groups) = label_groups(g) {
        if let Some(c) = from_groups(g, &groups, limits) {
            return Some(c);
        }
    }
    let singletons: Vec<(String, Vec<usize>)> = (0..g.n()).map(|v| (format!("e{}", v + 1), vec![v])).collect();
    from_groups(g, &singletons, limits)
}

/// Groups `(id, vertices in position order)`, ordered by lowest vertex.
fn label_groups(g: &Graph) -> Option<Vec<(String, Vec<usize>)>> {
    let labels = g.labels()?;
    let mut by_id: BTreeMap<&str, Vec<(usize, usize)>> = BTreeMap::new();
    for (v, l) in labels.iter().enumerate() {
        let (id, pos) = l.rsplit_once('.')?;
        by_id.entry(id).or_default().push((pos.parse().ok()?, v));
    }
    let mut groups: Vec<(String, Vec<usize>)> = by_id
        .into_iter()
        .map(|(id, mut members)| {
            members.sort_unstable();
            (id.to_string(), members.into_iter().map(|(_, v)| v).collect())
        })
        .collect();
    groups.sort_by_key(|(_, vs)| vs.iter().min().copied());
    Some(groups)
}

/// One side of a candidate strip.
enum End {
    /// Vertices with neighbours outside the strip.
    Attached(Vec<usize>),
    /// No outside neighbours; the end is the extreme vertex with its own hub.
    Private,
}

struct Candidate {
    id: String,
    vertices: Vec<usize>,
    strip: Strip,
    ends: Option<(End, End)>,
}

fn from_groups(g: &Graph, groups: &[(String, Vec<usize>)], limits: &SearchLimits) -> Option<StripComposition> {
    let n = g.n();
    let mut in_group = vec![usize::MAX; n];
    for (i, (_, vs)) in groups.iter().enumerate() {
        for &v in vs {
            in_group[v] = i;
        }
    }
    let outside = |v: usize| -> FixedBitSet {
        let mut s = g.neighbour_set(v).clone();
        for w in g.neighbours(v) {
            if in_group[w] == in_group[v] {
                s.set(w, false);
            }
        }
        s
    };

    let mut cands = Vec::with_capacity(groups.len());
    for (id, vs) in groups {
        if vs.len() == 1 {
            cands.push(Candidate {
                id: id.clone(),
                vertices: vs.clone(),
                strip: Strip::trivial(),
                ends: None,
            });
            continue;
        }
        let out: Vec<FixedBitSet> = vs.iter().map(|&v| outside(v)).collect();
        let attached: Vec<bool> = out.iter().map(|o| !o.is_clear()).collect();
        let side = |idx: &mut dyn Iterator<Item = usize>, first: usize| -> (usize, End) {
            if !attached[first] {
                return (1, End::Private);
            }
            let members: Vec<usize> = idx.take_while(|&i| out[i] == out[first]).collect();
            (members.len(), End::Attached(members.iter().map(|&i| vs[i]).collect()))
        };
        let len = vs.len();
        let (xsize, x) = side(&mut (0..len), 0);
        let (ysize, y) = side(&mut (0..len).rev(), len - 1);
        if xsize + ysize > len {
            return None;
        }
        if (xsize..len - ysize).any(|i| attached[i]) {
            return None;
        }
        let strip = Strip::from_ordered_graph(&g.induced(vs), xsize, ysize).ok()?;
        cands.push(Candidate {
            id: id.clone(),
            vertices: vs.clone(),
            strip,
            ends: Some((x, y)),
        });
    }

    // Hub units: trivial strips and attached ends. Edges inside a strip are
    // not hub edges.
    let mut units: Vec<usize> = Vec::new();
    // Which end each unit belongs to, as (group, side).
    let mut side_of: Vec<(usize, u8)> = Vec::new();
    for (gi, c) in cands.iter().enumerate() {
        match &c.ends {
            None => {
                units.push(c.vertices[0]);
                side_of.push((gi, 0));
            }
            Some((x, y)) => {
                for (side, end) in [(0, x), (1, y)] {
                    if let End::Attached(vs) = end {
                        units.extend_from_slice(vs);
                        side_of.extend(vs.iter().map(|_| (gi, side)));
                    }
                }
            }
        }
    }
    let mut q = g.induced(&units);
    for i in 0..units.len() {
        for j in i + 1..units.len() {
            if side_of[i].0 == side_of[j].0 && side_of[i].1 != side_of[j].1 && q.has_edge(i, j) {
                q.remove_edge(i, j);
            }
        }
    }
    let root = line_graph_root(&q, limits).ok()??;
    let unit_index = |v: usize| units.iter().position(|&u| u == v).unwrap();

    let mut h = Multigraph::new();
    for i in 0..root.vertex_count() {
        h.add_vertex(format!("h{}", i + 1));
    }
    let mut edges = Vec::with_capacity(cands.len());
    for c in &cands {
        match &c.ends {
            None => {
                let e = root.edge(unit_index(c.vertices[0]));
                edges.push((e.tail, e.head));
            }
            Some((x, y)) => {
                let hub = |end: &End, h: &mut Multigraph| -> Option<usize> {
                    match end {
                        End::Private => Some(fresh(h)),
                        End::Attached(vs) => bundle_hub(&root, &vs.iter().map(|&v| unit_index(v)).collect::<Vec<_>>()),
                    }
                };
                let a = hub(x, &mut h)?;
                let b = hub(y, &mut h)?;
                edges.push((a, b));
            }
        }
    }

    // Drop vertices no edge uses.
    let mut used = vec![false; h.vertex_count()];
    for &(a, b) in &edges {
        used[a] = true;
        used[b] = true;
    }
    let mut rename = vec![usize::MAX; h.vertex_count()];
    let mut compact = Multigraph::new();
    for v in 0..h.vertex_count() {
        if used[v] {
            rename[v] = compact.add_vertex(format!("h{}", compact.vertex_count() + 1));
        }
    }
    for (c, &(a, b)) in cands.iter().zip(&edges) {
        compact.add_edge(c.id.clone(), rename[a], rename[b]);
    }

    let strips = cands.iter().map(|c| c.strip.clone()).collect();
    let maps = cands.iter().map(|c| c.vertices.clone()).collect();
    let mut comp = StripComposition::with_maps(compact, strips, maps, n).ok()?;
    if comp.graph().edges() != g.edges() {
        return None;
    }
    comp.set_labels(g.labels().map(|l| l.to_vec()));
    Some(comp)
}

fn fresh(h: &mut Multigraph) -> usize {
    let name = format!("h{}", h.vertex_count() + 1);
    h.add_vertex(name)
}

/// The hub vertex for an end whose vertices are the root edges `es`: the
/// edges must be parallel, and one endpoint must carry nothing but edges
/// parallel to them. The other endpoint is the hub.
fn bundle_hub(root: &Multigraph, es: &[usize]) -> Option<usize> {
    let first = root.edge(es[0]);
    let (p, a) = (first.tail, first.head);
    let same = |e: usize| {
        let e = root.edge(e);
        (e.tail == p && e.head == a) || (e.tail == a && e.head == p)
    };
    if !es.iter().all(|&e| same(e)) {
        return None;
    }
    let only_bundle = |z: usize| {
        root.edges()
            .iter()
            .enumerate()
            .filter(|(_, e)| e.tail == z || e.head == z)
            .all(|(i, _)| same(i))
    };
    if only_bundle(p) {
        Some(a)
    } else if only_bundle(a) {
        Some(p)
    } else {
        None
    }
}

//! DIMACS-style graph text format.
//!
//! ```text
//! c comment
//! p edge <n> <m>
//! e <u> <v>          (1-based)
//! c label <v> <name> (optional vertex label)
//! ```

use super::Graph;
use crate::{Error, Result};

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut graph: Option<Graph> = None;
    let mut declared_m = 0;
    let mut header_line = 0;
    let mut labels: Vec<(usize, usize, String)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let tok: Vec<&str> = line.split_whitespace().collect();
        match tok[0] {
            "c" => {
                if tok.len() >= 4 && tok[1] == "label" {
                    let v = parse_index(tok[2], lineno)?;
                    labels.push((lineno, v, tok[3..].join(" ")));
                }
            }
            "p" => {
                if graph.is_some() {
                    return Err(Error::parse(lineno, "second problem line"));
                }
                if tok.len() != 4 || tok[1] != "edge" {
                    return Err(Error::parse(lineno, "expected `p edge <n> <m>`"));
                }
                let n: usize = tok[2]
                    .parse()
                    .map_err(|_| Error::parse(lineno, "bad vertex count"))?;
                declared_m = tok[3]
                    .parse()
                    .map_err(|_| Error::parse(lineno, "bad edge count"))?;
                header_line = lineno;
                graph = Some(Graph::new(n));
            }
            "e" => {
                let g = graph
                    .as_mut()
                    .ok_or_else(|| Error::parse(lineno, "edge before problem line"))?;
                if tok.len() != 3 {
                    return Err(Error::parse(lineno, "expected `e <u> <v>`"));
                }
                let u = parse_index(tok[1], lineno)?;
                let v = parse_index(tok[2], lineno)?;
                if u >= g.n() || v >= g.n() {
                    return Err(Error::parse(
                        lineno,
                        format!("vertex out of range 1..{}", g.n()),
                    ));
                }
                if u == v {
                    return Err(Error::parse(lineno, "self-loop"));
                }
                if g.has_edge(u, v) {
                    return Err(Error::parse(lineno, "duplicate edge"));
                }
                g.add_edge(u, v);
            }
            _ => return Err(Error::parse(lineno, format!("malformed line: {line}"))),
        }
    }
    let mut g = graph.ok_or_else(|| Error::parse(0, "missing problem line"))?;
    if g.edge_count() != declared_m {
        return Err(Error::parse(
            header_line,
            format!("header declares {declared_m} edges, found {}", g.edge_count()),
        ));
    }
    if !labels.is_empty() {
        let mut names = vec![String::new(); g.n()];
        for (lineno, v, name) in labels {
            if v >= g.n() {
                return Err(Error::parse(lineno, "label for vertex out of range"));
            }
            names[v] = name;
        }
        g.set_labels(Some(names));
    }
    Ok(g)
}

fn parse_index(tok: &str, lineno: usize) -> Result<usize> {
    let v: usize = tok
        .parse()
        .map_err(|_| Error::parse(lineno, format!("bad vertex `{tok}`")))?;
    if v == 0 {
        return Err(Error::parse(lineno, "vertices are 1-based"));
    }
    Ok(v - 1)
}

pub fn serialize_graph(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.edge_count());
    if let Some(labels) = g.labels() {
        for (v, l) in labels.iter().enumerate() {
            out.push_str(&format!("c label {} {}\n", v + 1, l));
        }
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

//! Text format for compositions.
//!
//! ```text
//! multigraph
//! vertex u
//! vertex v
//! edge e u v
//! strip e
//! n 3
//! xsize 1
//! ysize 1
//! clique 1 2
//! clique 2 3
//! ```
//!
//! A strip section holding the single line `trivial` is the one-vertex strip.
//! Clique ranges are 1-based and inclusive. Lines starting with `#` are
//! comments.

use super::{compose, Strip, StripComposition};
use crate::graph::Multigraph;
use crate::{Error, Result};

#[derive(Default)]
struct StripDraft {
    line: usize,
    trivial: bool,
    n: Option<usize>,
    xsize: Option<usize>,
    ysize: Option<usize>,
    cliques: Vec<(usize, usize)>,
}

impl StripDraft {
    fn finish(self, id: &str) -> Result<Strip> {
        let err = |msg: String| Error::parse(self.line, format!("strip {id}: {msg}"));
        if self.trivial {
            if self.n.is_some() || self.xsize.is_some() || self.ysize.is_some() || !self.cliques.is_empty() {
                return Err(err("a trivial strip takes no other lines".into()));
            }
            return Ok(Strip::trivial());
        }
        let n = self.n.ok_or_else(|| err("missing `n`".into()))?;
        let x = self.xsize.ok_or_else(|| err("missing `xsize`".into()))?;
        let y = self.ysize.ok_or_else(|| err("missing `ysize`".into()))?;
        if n >= 2 && x + y > n {
            return Err(err("X and Y overlap".into()));
        }
        Strip::new(n, self.cliques, x, y).map_err(|e| err(e.to_string()))
    }
}

pub fn parse_composition(text: &str) -> Result<StripComposition> {
    enum Section {
        None,
        Multigraph,
        Strip(usize),
    }
    let mut h = Multigraph::new();
    let mut section = Section::None;
    let mut drafts: Vec<Option<StripDraft>> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tok: Vec<&str> = line.split_whitespace().collect();
        match tok.as_slice() {
            ["multigraph"] => section = Section::Multigraph,
            ["strip", id] => {
                let e = h
                    .edge_by_id(id)
                    .ok_or_else(|| Error::parse(lineno, format!("strip for unknown edge {id}")))?;
                drafts.resize_with(h.edge_count(), || None);
                if drafts[e].is_some() {
                    return Err(Error::parse(lineno, format!("second strip for edge {id}")));
                }
                drafts[e] = Some(StripDraft {
                    line: lineno,
                    ..Default::default()
                });
                section = Section::Strip(e);
            }
            _ => match section {
                Section::None => return Err(Error::parse(lineno, "expected `multigraph` or `strip`")),
                Section::Multigraph => h.parse_line(lineno, line)?,
                Section::Strip(e) => {
                    let d = drafts[e].as_mut().unwrap();
                    let num = |s: &str| -> Result<usize> {
                        s.parse()
                            .map_err(|_| Error::parse(lineno, format!("bad number `{s}`")))
                    };
                    match tok.as_slice() {
                        ["trivial"] => d.trivial = true,
                        ["n", k] => d.n = Some(num(k)?),
                        ["xsize", k] => d.xsize = Some(num(k)?),
                        ["ysize", k] => d.ysize = Some(num(k)?),
                        ["clique", a, b] => {
                            let (a, b) = (num(a)?, num(b)?);
                            if a == 0 || b == 0 {
                                return Err(Error::parse(lineno, "positions are 1-based"));
                            }
                            d.cliques.push((a - 1, b - 1));
                        }
                        _ => return Err(Error::parse(lineno, format!("malformed line: {line}"))),
                    }
                }
            },
        }
    }
    h.validate()?;
    drafts.resize_with(h.edge_count(), || None);
    let mut strips = Vec::with_capacity(h.edge_count());
    for (e, d) in drafts.into_iter().enumerate() {
        let id = &h.edge(e).id;
        let d = d.ok_or_else(|| Error::Input(format!("edge {id} has no strip")))?;
        strips.push(d.finish(id)?);
    }
    compose(h, strips)
}

pub fn serialize_composition(c: &StripComposition) -> String {
    let mut out = String::from("multigraph\n");
    out.push_str(&c.h().to_text());
    for (e, s) in c.strips().iter().enumerate() {
        out.push_str(&format!("strip {}\n", c.h().edge(e).id));
        if s.is_trivial() {
            out.push_str("trivial\n");
            continue;
        }
        out.push_str(&format!("n {}\nxsize {}\nysize {}\n", s.len(), s.xsize(), s.ysize()));
        for &(a, b) in s.cliques() {
            out.push_str(&format!("clique {} {}\n", a + 1, b + 1));
        }
    }
    out
}

use std::collections::BTreeSet;

use super::Graph;
use crate::{Error, Result};

/// Integer vertex colouring; `colours[v]` is the colour of vertex `v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Colouring {
    colours: Vec<usize>,
}

impl Colouring {
    pub fn new(colours: Vec<usize>) -> Self {
        Colouring { colours }
    }

    pub fn colours(&self) -> &[usize] {
        &self.colours
    }

    pub fn colour(&self, v: usize) -> usize {
        self.colours[v]
    }

    pub fn len(&self) -> usize {
        self.colours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colours.is_empty()
    }

    /// Number of distinct colours used.
    pub fn palette_size(&self) -> usize {
        self.colours.iter().collect::<BTreeSet<_>>().len()
    }

    /// One past the largest colour used.
    pub fn span(&self) -> usize {
        self.colours.iter().max().map_or(0, |c| c + 1)
    }

    /// Renames colours to `0..palette_size` in order of first appearance.
    pub fn normalized(&self) -> Colouring {
        let mut map = std::collections::HashMap::new();
        let colours = self
            .colours
            .iter()
            .map(|c| {
                let next = map.len();
                *map.entry(*c).or_insert(next)
            })
            .collect();
        Colouring { colours }
    }

    /// `s <palette>` followed by `v <vertex> <colour>` lines (1-based vertices).
    pub fn to_text(&self) -> String {
        let mut out = format!("s {}\n", self.palette_size());
        for (v, c) in self.colours.iter().enumerate() {
            out.push_str(&format!("v {} {}\n", v + 1, c));
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut declared = None;
        let mut entries: Vec<Option<usize>> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let lineno = i + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('c') {
                continue;
            }
            let tok: Vec<&str> = line.split_whitespace().collect();
            match tok.as_slice() {
                ["s", k] => {
                    declared = Some(
                        k.parse::<usize>()
                            .map_err(|_| Error::parse(lineno, "bad palette size"))?,
                    )
                }
                ["v", v, c] => {
                    let v: usize = v
                        .parse()
                        .map_err(|_| Error::parse(lineno, "bad vertex index"))?;
                    let c: usize = c.parse().map_err(|_| Error::parse(lineno, "bad colour"))?;
                    if v == 0 {
                        return Err(Error::parse(lineno, "vertices are 1-based"));
                    }
                    if entries.len() < v {
                        entries.resize(v, None);
                    }
                    if entries[v - 1].replace(c).is_some() {
                        return Err(Error::parse(lineno, format!("vertex {v} coloured twice")));
                    }
                }
                _ => return Err(Error::parse(lineno, format!("malformed line: {line}"))),
            }
        }
        let colours = entries
            .into_iter()
            .enumerate()
            .map(|(v, c)| c.ok_or_else(|| Error::Input(format!("vertex {} uncoloured", v + 1))))
            .collect::<Result<Vec<_>>>()?;
        let col = Colouring { colours };
        if let Some(k) = declared {
            if k != col.palette_size() {
                return Err(Error::Input(format!(
                    "declared palette {k} but {} colours used",
                    col.palette_size()
                )));
            }
        }
        Ok(col)
    }
}

/// True iff `c` is a proper colouring of `g`.
pub fn verify_colouring(g: &Graph, c: &Colouring) -> Result<bool> {
    if c.len() != g.n() {
        return Err(Error::Input(format!(
            "colouring has {} entries for {} vertices",
            c.len(),
            g.n()
        )));
    }
    Ok(g.edges().iter().all(|&(u, v)| c.colour(u) != c.colour(v)))
}

use super::Graph;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiEdge {
    pub id: String,
    pub tail: usize,
    pub head: usize,
}

impl MultiEdge {
    pub fn is_loop(&self) -> bool {
        self.tail == self.head
    }
}

/// Directed multigraph; parallel edges and loops are allowed.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Multigraph {
    names: Vec<String>,
    edges: Vec<MultiEdge>,
}

impl Multigraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, name: impl Into<String>) -> usize {
        self.names.push(name.into());
        self.names.len() - 1
    }

    pub fn add_edge(&mut self, id: impl Into<String>, tail: usize, head: usize) -> usize {
        assert!(tail < self.names.len() && head < self.names.len());
        self.edges.push(MultiEdge {
            id: id.into(),
            tail,
            head,
        });
        self.edges.len() - 1
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn edges(&self) -> &[MultiEdge] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> &MultiEdge {
        &self.edges[e]
    }

    pub fn edge_by_id(&self, id: &str) -> Option<usize> {
        self.edges.iter().position(|e| e.id == id)
    }

    pub(crate) fn reverse_edge(&mut self, e: usize) {
        let edge = &mut self.edges[e];
        std::mem::swap(&mut edge.tail, &mut edge.head);
    }

    /// Checks that edge identities are unique.
    pub fn validate(&self) -> Result<()> {
        let mut ids: Vec<&str> = self.edges.iter().map(|e| e.id.as_str()).collect();
        ids.sort_unstable();
        if let Some(w) = ids.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Input(format!("duplicate edge id {}", w[0])));
        }
        let mut names: Vec<&str> = self.names.iter().map(|s| s.as_str()).collect();
        names.sort_unstable();
        if let Some(w) = names.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Input(format!("duplicate vertex name {}", w[0])));
        }
        Ok(())
    }

    /// Line graph: one vertex per edge (in edge order), adjacent when the edges
    /// share an endpoint.
    pub fn line_graph(&self) -> Graph {
        let m = self.edges.len();
        let mut g = Graph::new(m);
        for i in 0..m {
            let a = &self.edges[i];
            for j in i + 1..m {
                let b = &self.edges[j];
                if a.tail == b.tail || a.tail == b.head || a.head == b.tail || a.head == b.head {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// `vertex <name>` / `edge <id> <tail> <head>` lines.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for n in &self.names {
            out.push_str(&format!("vertex {n}\n"));
        }
        for e in &self.edges {
            out.push_str(&format!(
                "edge {} {} {}\n",
                e.id, self.names[e.tail], self.names[e.head]
            ));
        }
        out
    }

    /// Parses the format written by [`Multigraph::to_text`]. Blank lines and
    /// lines starting with `#` are ignored.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut h = Multigraph::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            h.parse_line(i + 1, line)?;
        }
        h.validate()?;
        Ok(h)
    }

    pub(crate) fn parse_line(&mut self, lineno: usize, line: &str) -> Result<()> {
        let tok: Vec<&str> = line.split_whitespace().collect();
        match tok.as_slice() {
            ["vertex", name] => {
                if self.vertex_by_name(name).is_some() {
                    return Err(Error::parse(lineno, format!("duplicate vertex {name}")));
                }
                self.add_vertex(*name);
            }
            ["edge", id, tail, head] => {
                let t = self
                    .vertex_by_name(tail)
                    .ok_or_else(|| Error::parse(lineno, format!("unknown vertex {tail}")))?;
                let h = self
                    .vertex_by_name(head)
                    .ok_or_else(|| Error::parse(lineno, format!("unknown vertex {head}")))?;
                if self.edge_by_id(id).is_some() {
                    return Err(Error::parse(lineno, format!("duplicate edge {id}")));
                }
                self.add_edge(*id, t, h);
            }
            _ => return Err(Error::parse(lineno, format!("malformed line: {line}"))),
        }
        Ok(())
    }
}

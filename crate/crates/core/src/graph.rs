//! Labeled-edge multigraphs with loops and parallel edges.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matroid::ElementLabel;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Edge {
    pub label: ElementLabel,
    pub u: usize,
    pub v: usize,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }

    /// The endpoint other than `w`, if `w` is an endpoint.
    pub fn other(&self, w: usize) -> Option<usize> {
        if self.u == w {
            Some(self.v)
        } else if self.v == w {
            Some(self.u)
        } else {
            None
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Multigraph {
    vertex_count: usize,
    edges: Vec<Edge>,
}

/// Vertex count is capped so incidence columns fit a word.
pub const MAX_VERTICES: usize = 64;

impl Multigraph {
    pub fn new(vertex_count: usize, edges: Vec<Edge>) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::Graph("a graph needs at least one vertex".into()));
        }
        if vertex_count > MAX_VERTICES {
            return Err(Error::TooLarge { what: "vertex count", limit: MAX_VERTICES });
        }
        if edges.len() > 64 {
            return Err(Error::TooLarge { what: "edge count", limit: 64 });
        }
        let mut seen = HashSet::new();
        for e in &edges {
            if e.u >= vertex_count || e.v >= vertex_count {
                return Err(Error::Graph(format!("edge {} uses a vertex outside 0..{vertex_count}", e.label)));
            }
            if !seen.insert(&e.label) {
                return Err(Error::DuplicateLabel(e.label.to_string()));
            }
        }
        Ok(Multigraph { vertex_count, edges })
    }

    /// Convenience constructor from `(label, u, v)` triples.
    pub fn from_edges(vertex_count: usize, edges: &[(&str, usize, usize)]) -> Result<Self> {
        let edges = edges
            .iter()
            .map(|&(l, u, v)| Ok(Edge { label: ElementLabel::new(l)?, u, v }))
            .collect::<Result<Vec<_>>>()?;
        Self::new(vertex_count, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, label: &str) -> Result<&Edge> {
        self.edges.iter().find(|e| e.label.as_str() == label).ok_or_else(|| Error::UnknownLabel(label.to_owned()))
    }

    /// Degree of `w`; a loop counts twice.
    pub fn degree(&self, w: usize) -> usize {
        self.edges.iter().map(|e| (e.u == w) as usize + (e.v == w) as usize).sum()
    }

    pub fn is_connected(&self) -> bool {
        let mut parent: Vec<usize> = (0..self.vertex_count).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut components = self.vertex_count;
        for e in &self.edges {
            let (a, b) = (find(&mut parent, e.u), find(&mut parent, e.v));
            if a != b {
                parent[a] = b;
                components -= 1;
            }
        }
        components == 1
    }

    /// Graph text format: `VERTICES E`, then `E` lines `label u v`.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse("empty graph file".into()))?;
        let nums: Vec<&str> = header.split_whitespace().collect();
        let [v, e] = nums.as_slice() else {
            return Err(Error::Parse(format!("bad graph header {header:?}")));
        };
        let num = |s: &str| s.parse::<usize>().map_err(|_| Error::Parse(format!("bad number {s:?}")));
        let (vertex_count, edge_count) = (num(v)?, num(e)?);
        let mut edges = Vec::with_capacity(edge_count);
        for k in 0..edge_count {
            let line = lines.next().ok_or_else(|| Error::Parse(format!("missing edge line {k}")))?;
            let parts: Vec<&str> = line.split_whitespace().collect();
            let [label, u, v] = parts.as_slice() else {
                return Err(Error::Parse(format!("bad edge line {line:?}")));
            };
            edges.push(Edge { label: ElementLabel::new(*label)?, u: num(u)?, v: num(v)? });
        }
        if let Some(extra) = lines.next() {
            return Err(Error::Parse(format!("unexpected trailing line {extra:?}")));
        }
        Self::new(vertex_count, edges)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.vertex_count, self.edges.len());
        for e in &self.edges {
            out.push_str(&format!("{} {} {}\n", e.label, e.u, e.v));
        }
        out
    }

    /// Same vertex count and the same labeled edges up to a vertex permutation.
    /// Brute force over permutations; intended for small graphs in tests.
    pub fn is_label_isomorphic(&self, other: &Multigraph) -> bool {
        if self.vertex_count != other.vertex_count || self.edges.len() != other.edges.len() {
            return false;
        }
        let target: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|e| other.edge(e.label.as_str()).map(|f| (f.u.min(f.v), f.u.max(f.v))))
            .collect::<Result<_>>()
            .unwrap_or_default();
        if target.len() != self.edges.len() {
            return false;
        }
        let mut perm: Vec<usize> = (0..self.vertex_count).collect();
        permutations(&mut perm, 0, &mut |p| {
            self.edges.iter().zip(&target).all(|(e, &(a, b))| {
                let (x, y) = (p[e.u], p[e.v]);
                (x.min(y), x.max(y)) == (a, b)
            })
        })
    }
}

/// Calls `f` on every permutation of `p[k..]`, stopping early when it returns true.
pub(crate) fn permutations(p: &mut [usize], k: usize, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
    if k == p.len() {
        return f(p);
    }
    for i in k..p.len() {
        p.swap(k, i);
        if permutations(p, k + 1, f) {
            p.swap(k, i);
            return true;
        }
        p.swap(k, i);
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(Multigraph::from_edges(0, &[]).is_err());
        assert!(Multigraph::from_edges(2, &[("a", 0, 2)]).is_err());
        assert!(matches!(Multigraph::from_edges(2, &[("a", 0, 1), ("a", 1, 0)]), Err(Error::DuplicateLabel(_))));
    }

    #[test]
    fn degree_counts_loops_twice() {
        let g = Multigraph::from_edges(2, &[("a", 0, 1), ("l", 0, 0), ("b", 0, 1)]).unwrap();
        assert_eq!(g.degree(0), 4);
        assert_eq!(g.degree(1), 2);
        assert!(g.is_connected());
        assert!(!Multigraph::from_edges(3, &[("a", 0, 1)]).unwrap().is_connected());
    }

    #[test]
    fn text_round_trip() {
        let g = Multigraph::from_edges(3, &[("a", 0, 1), ("b", 1, 2), ("c", 2, 2)]).unwrap();
        let text = g.to_text();
        assert_eq!(text, "3 3\na 0 1\nb 1 2\nc 2 2\n");
        assert_eq!(Multigraph::parse_text(&text).unwrap(), g);
        assert!(Multigraph::parse_text("2 1\na 0\n").is_err());
        assert!(Multigraph::parse_text("2 2\na 0 1\n").is_err());
    }

    #[test]
    fn label_isomorphism_ignores_vertex_names() {
        let g = Multigraph::from_edges(3, &[("a", 0, 1), ("b", 1, 2)]).unwrap();
        let h = Multigraph::from_edges(3, &[("a", 2, 0), ("b", 0, 1)]).unwrap();
        let k = Multigraph::from_edges(3, &[("a", 0, 1), ("b", 0, 2)]).unwrap();
        assert!(g.is_label_isomorphic(&h));
        assert!(g.is_label_isomorphic(&k));
        let star = Multigraph::from_edges(4, &[("a", 0, 1), ("b", 0, 2), ("c", 0, 3)]).unwrap();
        let path = Multigraph::from_edges(4, &[("a", 0, 1), ("b", 1, 2), ("c", 2, 3)]).unwrap();
        assert!(!star.is_label_isomorphic(&path));
    }
}

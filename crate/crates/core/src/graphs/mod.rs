//! Simple graphs, Frucht's construction, and automorphism groups.

pub mod automorphisms;
pub mod frucht;

use std::fmt;

use thiserror::Error;

pub use automorphisms::{graph_automorphisms, DEFAULT_MAX_VERTICES};
pub use frucht::{asymmetric_six, frucht_graph, recipe_graph};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("input error: {0}")]
    Input(String),
    #[error("graph has {0} vertices, above the budget of {1}")]
    Budget(usize, usize),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// Undirected graph without loops or multi-edges; edges `(u, v)` with `u < v`,
/// sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl SimpleGraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let mut out = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(GraphError::Input(format!("loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(GraphError::Input(format!("edge ({u}, {v}) out of range for {n} vertices")));
            }
            out.push((u.min(v), u.max(v)));
        }
        out.sort_unstable();
        let before = out.len();
        out.dedup();
        if out.len() != before {
            return Err(GraphError::Input("repeated edge".into()));
        }
        Ok(SimpleGraph { n, edges: out })
    }

    pub fn complete(n: usize) -> Self {
        SimpleGraph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    pub fn path(n: usize) -> Self {
        SimpleGraph::new(n, (1..n).map(|v| (v - 1, v))).unwrap()
    }

    pub fn cycle(n: usize) -> Self {
        SimpleGraph::new(n, (0..n).map(|v| (v, (v + 1) % n))).unwrap()
    }

    pub fn petersen() -> Self {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        SimpleGraph::new(10, outer.chain(spokes).chain(inner)).unwrap()
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        adj
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&(u.min(v), u.max(v))).is_ok()
    }

    /// Whether `img` (a vertex map) sends edges to edges bijectively.
    pub fn is_automorphism(&self, img: &[usize]) -> bool {
        if img.len() != self.n {
            return false;
        }
        let mut seen = vec![false; self.n];
        for &x in img {
            if x >= self.n || std::mem::replace(&mut seen[x], true) {
                return false;
            }
        }
        self.edges.iter().all(|&(u, v)| self.has_edge(img[u], img[v]))
    }

    /// Parses the `n m` / `u v` text format.
    pub fn parse(text: &str) -> Result<Self, GraphError> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (l0, head) = lines.next().ok_or(GraphError::Parse { line: 1, msg: "empty input".into() })?;
        let nums = |line: usize, s: &str| -> Result<(usize, usize), GraphError> {
            let parts: Vec<&str> = s.split_whitespace().collect();
            if parts.len() != 2 {
                return Err(GraphError::Parse { line, msg: "expected two integers".into() });
            }
            let a = parts[0].parse().map_err(|_| GraphError::Parse { line, msg: format!("bad integer `{}`", parts[0]) })?;
            let b = parts[1].parse().map_err(|_| GraphError::Parse { line, msg: format!("bad integer `{}`", parts[1]) })?;
            Ok((a, b))
        };
        let (n, m) = nums(l0 + 1, head)?;
        let mut edges = Vec::with_capacity(m);
        for (i, l) in lines {
            edges.push(nums(i + 1, l)?);
        }
        if edges.len() != m {
            return Err(GraphError::Parse { line: l0 + 1, msg: format!("expected {m} edges, found {}", edges.len()) });
        }
        SimpleGraph::new(n, edges)
    }
}

impl fmt::Display for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.n, self.edges.len())?;
        for (u, v) in &self.edges {
            writeln!(f, "{u} {v}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        let g = SimpleGraph::petersen();
        let s = g.to_string();
        assert!(s.starts_with("10 15\n0 1\n"));
        assert_eq!(SimpleGraph::parse(&s).unwrap(), g);
    }

    #[test]
    fn invalid_graphs() {
        assert!(SimpleGraph::new(2, [(0, 0)]).is_err());
        assert!(SimpleGraph::new(2, [(0, 1), (1, 0)]).is_err());
        assert!(SimpleGraph::new(2, [(0, 2)]).is_err());
        assert!(matches!(SimpleGraph::parse("3 2\n0 1\n"), Err(GraphError::Parse { .. })));
        assert!(matches!(SimpleGraph::parse("3 1\n0 x\n"), Err(GraphError::Parse { line: 2, .. })));
    }
}

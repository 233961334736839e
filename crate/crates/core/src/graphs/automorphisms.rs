//! Automorphism group of a simple graph by individualization and refinement.
//!
//! A base path individualizes the first vertex of the first non-singleton cell
//! until the partition is discrete. Going from the deepest level up, every
//! vertex in the cell of the level's base point that is not yet in its orbit
//! is tried as an image, and a matching leaf yields a new generator.

use crate::permgroup::{orbit_of, Perm, PermGroup};

use super::{GraphError, SimpleGraph};

pub const DEFAULT_MAX_VERTICES: usize = 64;

/// Coarsest equitable refinement; colors are ranks of
/// `(color, sorted neighbour colors)` signatures, so the result depends only
/// on isomorphism-invariant data.
fn refine(adj: &[Vec<usize>], mut colors: Vec<usize>) -> Vec<usize> {
    let mut classes = count_classes(&colors);
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..adj.len())
            .map(|v| {
                let mut nb: Vec<usize> = adj[v].iter().map(|&u| colors[u]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut sorted: Vec<&(usize, Vec<usize>)> = sigs.iter().collect();
        sorted.sort();
        sorted.dedup();
        colors = sigs.iter().map(|s| sorted.binary_search(&s).unwrap()).collect();
        let k = sorted.len();
        if k == classes {
            return colors;
        }
        classes = k;
    }
}

fn count_classes(colors: &[usize]) -> usize {
    colors.iter().max().map_or(0, |m| m + 1)
}

fn individualize(colors: &[usize], v: usize) -> Vec<usize> {
    let c = colors[v];
    // v keeps rank c, the rest of its cell moves up by one
    colors.iter().enumerate().map(|(u, &x)| if x > c || (x == c && u != v) { x + 1 } else { x }).collect()
}

fn first_nonsingleton(colors: &[usize]) -> Option<usize> {
    let mut count = vec![0usize; colors.len()];
    for &c in colors {
        count[c] += 1;
    }
    count.iter().position(|&k| k >= 2)
}

fn profile(colors: &[usize]) -> Vec<usize> {
    let mut count = vec![0usize; colors.len()];
    for &c in colors {
        count[c] += 1;
    }
    count
}

struct Search<'a> {
    graph: &'a SimpleGraph,
    adj: Vec<Vec<usize>>,
    /// `parts[k]` is the partition before individualizing `chosen[k]`.
    parts: Vec<Vec<usize>>,
    chosen: Vec<usize>,
}

impl Search<'_> {
    fn matches(&self, k: usize, other: Vec<usize>) -> Option<Vec<usize>> {
        let base = &self.parts[k];
        if profile(base) != profile(&other) {
            return None;
        }
        if k == self.chosen.len() {
            let mut by_color = vec![0usize; other.len()];
            for (y, &c) in other.iter().enumerate() {
                by_color[c] = y;
            }
            let img: Vec<usize> = base.iter().map(|&c| by_color[c]).collect();
            return self.graph.is_automorphism(&img).then_some(img);
        }
        let c = base[self.chosen[k]];
        for y in (0..other.len()).filter(|&y| other[y] == c) {
            let next = refine(&self.adj, individualize(&other, y));
            if let Some(img) = self.matches(k + 1, next) {
                return Some(img);
            }
        }
        None
    }
}

/// Full automorphism group of `graph`, as a permutation group on its
/// vertices.
pub fn graph_automorphisms(graph: &SimpleGraph, max_vertices: usize) -> Result<PermGroup, GraphError> {
    let n = graph.vertex_count();
    if n == 0 {
        return Err(GraphError::Input("graph without vertices".into()));
    }
    if n > max_vertices {
        return Err(GraphError::Budget(n, max_vertices));
    }
    let adj = graph.adjacency();
    let mut parts = vec![refine(&adj, vec![0; n])];
    let mut chosen = Vec::new();
    while let Some(c) = first_nonsingleton(parts.last().unwrap()) {
        let cur = parts.last().unwrap();
        let v = (0..n).find(|&v| cur[v] == c).unwrap();
        let next = refine(&adj, individualize(cur, v));
        chosen.push(v);
        parts.push(next);
    }
    let search = Search { graph, adj, parts, chosen };
    let mut gens: Vec<Perm> = Vec::new();
    for level in (0..search.chosen.len()).rev() {
        let beta = search.chosen[level];
        let part = &search.parts[level];
        let mut orbit = orbit_of(beta, &gens, n);
        for w in 0..n {
            if part[w] != part[beta] || orbit.binary_search(&w).is_ok() {
                continue;
            }
            let other = refine(&search.adj, individualize(part, w));
            if let Some(img) = search.matches(level + 1, other) {
                gens.push(Perm::from_images(img).expect("bijection"));
                orbit = orbit_of(beta, &gens, n);
            }
        }
    }
    Ok(PermGroup::new(n, gens).expect("degree matches"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order(g: &SimpleGraph) -> usize {
        graph_automorphisms(g, DEFAULT_MAX_VERTICES).unwrap().order_usize()
    }

    #[test]
    fn small_examples() {
        assert_eq!(order(&SimpleGraph::complete(3)), 6);
        assert_eq!(order(&SimpleGraph::path(3)), 2);
        assert_eq!(order(&SimpleGraph::petersen()), 120);
        assert_eq!(order(&SimpleGraph::cycle(7)), 14);
        assert_eq!(order(&SimpleGraph::complete(5)), 120);
        assert_eq!(order(&SimpleGraph::new(4, []).unwrap()), 24);
        assert_eq!(order(&SimpleGraph::new(1, []).unwrap()), 1);
    }

    #[test]
    fn budget_is_enforced() {
        let g = SimpleGraph::path(70);
        assert!(matches!(graph_automorphisms(&g, 64), Err(GraphError::Budget(70, 64))));
        assert_eq!(graph_automorphisms(&g, 100).unwrap().order_usize(), 2);
    }

    #[test]
    fn generators_are_automorphisms() {
        let g = SimpleGraph::petersen();
        let aut = graph_automorphisms(&g, 64).unwrap();
        for p in aut.gens() {
            assert!(g.is_automorphism(p.images()));
        }
    }
}

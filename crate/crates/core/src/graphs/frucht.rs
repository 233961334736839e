//! Graphs with a prescribed automorphism group.
//!
//! The colored Cayley digraph of `G` on generators `s_0, s_1, ...` has
//! automorphism group `G` (left multiplications). Each arc `x → x·s_k` becomes
//! a path `x – a – b – x·s_k` with a pendant path of length `2k+1` at `a` and
//! `2k+2` at `b`. When `s_k` is an involution the two opposite arcs merge into
//! one edge `x – c – x·s_k` with a pendant path of length `2k+1` at `c`.

use crate::permgroup::AbstractGroup;

use super::{GraphError, SimpleGraph};

struct Builder {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn vertex(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    fn pendant(&mut self, at: usize, len: usize) {
        let mut prev = at;
        for _ in 0..len {
            let v = self.vertex();
            self.edges.push((prev, v));
            prev = v;
        }
    }
}

pub fn frucht_graph(g: &AbstractGroup, gens: &[usize]) -> Result<SimpleGraph, GraphError> {
    let m = g.order();
    if gens.iter().any(|&s| s >= m) {
        return Err(GraphError::Input("generator index out of range".into()));
    }
    if !g.generates(gens) {
        return Err(GraphError::Input("the given elements do not generate the group".into()));
    }
    match m {
        1 => return Ok(SimpleGraph::new(1, []).unwrap()),
        2 => return Ok(SimpleGraph::path(5)),
        _ => {}
    }
    let mut b = Builder { n: m, edges: Vec::new() };
    let gens: Vec<usize> = gens.iter().copied().filter(|&s| s != g.identity()).collect();
    for (k, &s) in gens.iter().enumerate() {
        if g.element_order(s) == 2 {
            for x in 0..m {
                let y = g.mul(x, s);
                if x < y {
                    let c = b.vertex();
                    b.edges.push((x, c));
                    b.edges.push((c, y));
                    b.pendant(c, 2 * k + 1);
                }
            }
        } else {
            for x in 0..m {
                let y = g.mul(x, s);
                let a1 = b.vertex();
                let b1 = b.vertex();
                b.edges.extend([(x, a1), (a1, b1), (b1, y)]);
                b.pendant(a1, 2 * k + 1);
                b.pendant(b1, 2 * k + 2);
            }
        }
    }
    let n = b.n;
    SimpleGraph::new(n, b.edges).map_err(|e| GraphError::Input(format!("gadget construction failed: {e}")))
}

/// A 6-vertex graph with trivial automorphism group.
pub fn asymmetric_six() -> SimpleGraph {
    SimpleGraph::new(6, [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (3, 5)]).unwrap()
}

/// The graph used by the field recipe: the asymmetric 6-vertex graph for the
/// trivial group, `K_m` when `G ≅ S_m` for `m ≤ 5`, otherwise the Frucht graph.
pub fn recipe_graph(g: &AbstractGroup, gens: &[usize]) -> Result<SimpleGraph, GraphError> {
    if g.order() == 1 {
        return Ok(asymmetric_six());
    }
    for m in 2..=5usize {
        let sm_order: usize = (1..=m).product();
        if g.order() == sm_order {
            let sm = AbstractGroup::from_perm_group(&crate::permgroup::PermGroup::symmetric(m)).unwrap().0;
            if g.is_isomorphic(&sm).is_some() {
                return Ok(SimpleGraph::complete(m));
            }
        }
    }
    frucht_graph(g, gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::graph_automorphisms;
    use crate::permgroup::named_group;

    fn table(name: &str) -> (AbstractGroup, Vec<usize>) {
        let g = named_group(name).unwrap();
        let (t, elems) = AbstractGroup::from_perm_group(&g).unwrap();
        let gens = g.gens().iter().map(|x| elems.binary_search(x).unwrap()).collect();
        (t, gens)
    }

    fn aut_of(gr: &SimpleGraph) -> AbstractGroup {
        let a = graph_automorphisms(gr, 512).unwrap();
        AbstractGroup::from_perm_group(&a).unwrap().0
    }

    #[test]
    fn trivial_and_order_two() {
        let (t, g) = table("C1");
        assert_eq!(frucht_graph(&t, &g).unwrap().vertex_count(), 1);
        let (t, g) = table("C2");
        let gr = frucht_graph(&t, &g).unwrap();
        assert_eq!(gr.vertex_count(), 5);
        assert_eq!(aut_of(&gr).order(), 2);
        assert_eq!(aut_of(&asymmetric_six()).order(), 1);
    }

    #[test]
    fn c3_and_s3() {
        for name in ["C3", "S3"] {
            let (t, g) = table(name);
            let gr = frucht_graph(&t, &g).unwrap();
            assert!(aut_of(&gr).is_isomorphic(&t).is_some(), "{name}");
        }
    }

    #[test]
    fn non_generating_set_rejected() {
        let (t, _) = table("V4");
        let a = (0..4).find(|&x| x != t.identity()).unwrap();
        assert!(frucht_graph(&t, &[a]).is_err());
    }

    #[test]
    fn recipe_graph_uses_complete_graphs() {
        let (t, g) = table("S3");
        assert_eq!(recipe_graph(&t, &g).unwrap(), SimpleGraph::complete(3));
        let (t, g) = table("C2");
        assert_eq!(recipe_graph(&t, &g).unwrap(), SimpleGraph::complete(2));
    }
}

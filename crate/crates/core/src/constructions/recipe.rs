//! Field recipe from a graph `Δ` with `Aut(Δ) ≅ G`: an `S_n`-trinomial with
//! `n = |V(Δ)|` and radicals `β_ij^r = (α_i − α_j)²` over the edges.

use crate::graphs::{graph_automorphisms, recipe_graph, SimpleGraph};
use crate::permgroup::AbstractGroup;

use super::bms::{bms_search, BmsBounds, BmsTriple};
use super::ConstructionError;

/// Vertex budget for the automorphism check of the recipe graph.
pub const RECIPE_MAX_VERTICES: usize = 1024;

#[derive(Clone, Debug)]
pub struct FruchtRecipe {
    pub graph: SimpleGraph,
    pub n: usize,
    /// `iso[i]` is the element of `G` matched with element `i` of `Aut(Δ)`.
    pub iso: Vec<usize>,
    pub aut_order: usize,
    pub triple: BmsTriple,
    pub declaration: String,
}

fn declaration(n: usize, r: &num_bigint::BigInt, edges: usize) -> String {
    format!(
        "K = Q(alpha_1, ..., alpha_{n}, beta_ij for the {edges} edges {{i, j}}), alpha_i the roots of f, \
         beta_ij^{r} = (alpha_i - alpha_j)^2; Aut(K/Q) is not verified here"
    )
}

pub fn frucht_field_recipe(g: &AbstractGroup, gens: &[usize], bounds: &BmsBounds) -> Result<FruchtRecipe, ConstructionError> {
    let graph = recipe_graph(g, gens)?;
    let aut = graph_automorphisms(&graph, RECIPE_MAX_VERTICES)?;
    let at = AbstractGroup::from_perm_group(&aut)?.0;
    let iso = at
        .is_isomorphic(g)
        .filter(|m| at.verify_hom(g, m))
        .ok_or_else(|| ConstructionError::Verification("Aut(graph) is not isomorphic to G".into()))?;
    let n = graph.vertex_count();
    let bounds = BmsBounds { require_inertia: true, ..bounds.clone() };
    let triple = bms_search(n, &bounds)?;
    let declaration = declaration(n, &triple.r, graph.edges().len());
    Ok(FruchtRecipe { n, iso, aut_order: at.order(), triple, declaration, graph })
}

impl FruchtRecipe {
    pub fn verify(&self, g: &AbstractGroup) -> Result<(), ConstructionError> {
        let aut = graph_automorphisms(&self.graph, RECIPE_MAX_VERTICES)?;
        let at = AbstractGroup::from_perm_group(&aut)?.0;
        if !at.verify_hom(g, &self.iso) || at.order() != g.order() {
            return Err(ConstructionError::Verification("graph automorphism witness".into()));
        }
        if self.n != self.graph.vertex_count() || self.triple.n != self.n || self.triple.inertia != Some(true) {
            return Err(ConstructionError::Verification("recipe degree or inertia flag".into()));
        }
        self.triple.verify()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::GroupSpec;
    use crate::permgroup::named_group;

    fn spec(name: &str) -> (AbstractGroup, Vec<usize>) {
        GroupSpec::Perm { name: name.into(), group: named_group(name).unwrap() }.with_generators().unwrap()
    }

    #[test]
    fn s3_uses_the_triangle() {
        let (g, gens) = spec("S3");
        let r = frucht_field_recipe(&g, &gens, &BmsBounds::default()).unwrap();
        assert_eq!(r.graph, SimpleGraph::complete(3));
        assert_eq!(r.n, 3);
        r.verify(&g).unwrap();
    }

    #[test]
    fn trivial_group_is_padded() {
        let (g, gens) = spec("C1");
        let r = frucht_field_recipe(&g, &gens, &BmsBounds::default()).unwrap();
        assert_eq!(r.n, 6);
        assert_eq!(r.aut_order, 1);
        r.verify(&g).unwrap();
    }
}

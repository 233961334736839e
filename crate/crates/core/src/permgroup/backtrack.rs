//! Backtrack search over the stabilizer chain of an ambient group, pruned by
//! comparing stabilizer-orbit invariants at base-image prefixes.

use std::collections::HashMap;
use std::rc::Rc;

use super::chain::StabChain;
use super::perm::Perm;
use super::{orbit_of, orbit_sizes, GroupError, PermGroup};

/// Orbit data of a group's point-stabilizer tower along a point sequence.
struct PrefixNode {
    stab_gens: Vec<Perm>,
    orbit_len: usize,
    sizes: Vec<usize>,
}

/// Cached invariants of `group` along arbitrary point prefixes.
struct PrefixInvariants {
    n: usize,
    cache: HashMap<Vec<usize>, Rc<PrefixNode>>,
}

impl PrefixInvariants {
    fn new(group: &PermGroup) -> Self {
        let n = group.degree();
        let root = PrefixNode {
            stab_gens: group.gens().to_vec(),
            orbit_len: 1,
            sizes: orbit_sizes(group.gens(), n),
        };
        let mut cache = HashMap::new();
        cache.insert(Vec::new(), Rc::new(root));
        PrefixInvariants { n, cache }
    }

    fn node(&mut self, prefix: &[usize]) -> Rc<PrefixNode> {
        if let Some(v) = self.cache.get(prefix) {
            return v.clone();
        }
        let parent = self.node(&prefix[..prefix.len() - 1]);
        let x = *prefix.last().unwrap();
        let orbit_len = orbit_of(x, &parent.stab_gens, self.n).len();
        let stab_gens = if parent.stab_gens.is_empty() {
            Vec::new()
        } else {
            StabChain::new(self.n, &parent.stab_gens, &[x]).stabilizer_gens(1)
        };
        let sizes = orbit_sizes(&stab_gens, self.n);
        let node = Rc::new(PrefixNode { stab_gens, orbit_len, sizes });
        self.cache.insert(prefix.to_vec(), node.clone());
        node
    }

    fn key(&mut self, prefix: &[usize]) -> (usize, Vec<usize>) {
        let nd = self.node(prefix);
        (nd.orbit_len, nd.sizes.clone())
    }
}

/// What a search looks for. `prune` sees the images of the first
/// `images.len()` base points and may reject the subtree.
pub trait SearchProperty {
    fn leaf(&mut self, g: &Perm) -> bool;
    fn prune(&mut self, _images: &[usize]) -> bool {
        true
    }
}

pub struct Searcher<'a, P: SearchProperty> {
    chain: &'a StabChain,
    base: Vec<usize>,
    prop: P,
    pub nodes: u64,
}

impl<'a, P: SearchProperty> Searcher<'a, P> {
    pub fn new(chain: &'a StabChain, prop: P) -> Self {
        Searcher { base: chain.base(), chain, prop, nodes: 0 }
    }

    /// Any element in the subtree below `level` with partial product `p`.
    fn find_below(&mut self, level: usize, p: &Perm, images: &mut Vec<usize>) -> Option<Perm> {
        self.nodes += 1;
        let levels = self.chain.levels();
        if level == levels.len() {
            return self.prop.leaf(p).then(|| p.clone());
        }
        let lvl = &levels[level];
        let mut opts: Vec<(usize, usize)> = lvl.orbit.iter().map(|&b| (p.apply(b), b)).collect();
        opts.sort_unstable();
        for (img, beta) in opts {
            images.push(img);
            if self.prop.prune(images) {
                let q = lvl.rep(beta).unwrap().mul(p);
                if let Some(g) = self.find_below(level + 1, &q, images) {
                    images.pop();
                    return Some(g);
                }
            }
            images.pop();
        }
        None
    }

    /// Any element of the ambient group with the property.
    pub fn find_one(&mut self) -> Option<Perm> {
        let mut images = Vec::new();
        let id = Perm::identity(self.chain.degree());
        self.find_below(0, &id, &mut images)
    }

    /// Generators of `{g : leaf(g)}`, which must be a subgroup containing `known`.
    pub fn subgroup(&mut self, known: &[Perm]) -> Vec<Perm> {
        let n = self.chain.degree();
        let depth = self.chain.levels().len();
        let known_chain = StabChain::new(n, known, &self.base);
        let mut found: Vec<Perm> = Vec::new();
        for i in (0..depth).rev() {
            let lvl = &self.chain.levels()[i];
            let b = lvl.base_point;
            let mut cur: Vec<Perm> = found.clone();
            cur.extend(known_chain.stabilizer_gens(i));
            let mut in_orbit = vec![false; n];
            for x in orbit_of(b, &cur, n) {
                in_orbit[x] = true;
            }
            let mut betas = lvl.orbit.clone();
            betas.sort_unstable();
            for beta in betas {
                if in_orbit[beta] {
                    continue;
                }
                let mut images: Vec<usize> = self.base[..i].to_vec();
                images.push(beta);
                if !self.prop.prune(&images) {
                    continue;
                }
                let p = lvl.rep(beta).unwrap().clone();
                if let Some(g) = self.find_below(i + 1, &p, &mut images) {
                    cur.push(g.clone());
                    found.push(g);
                    for x in orbit_of(b, &cur, n) {
                        in_orbit[x] = true;
                    }
                }
            }
        }
        let mut out = known.to_vec();
        out.extend(found);
        out
    }
}

struct NormalizerProp {
    h: PermGroup,
    left: PrefixInvariants,
    right: PrefixInvariants,
    base: Vec<usize>,
}

impl SearchProperty for NormalizerProp {
    fn leaf(&mut self, g: &Perm) -> bool {
        self.h.gens().iter().all(|x| self.h.contains(&x.conj(g)))
    }

    fn prune(&mut self, images: &[usize]) -> bool {
        let k = images.len();
        self.left.key(&self.base[..k]) == self.right.key(images)
    }
}

struct TransporterProp {
    h: PermGroup,
    k: PermGroup,
    left: PrefixInvariants,
    right: PrefixInvariants,
    base: Vec<usize>,
}

impl SearchProperty for TransporterProp {
    fn leaf(&mut self, g: &Perm) -> bool {
        self.h.gens().iter().all(|x| self.k.contains(&x.conj(g)))
    }

    fn prune(&mut self, images: &[usize]) -> bool {
        let k = images.len();
        self.left.key(&self.base[..k]) == self.right.key(images)
    }
}

/// `N_ambient(H)` by backtracking.
pub fn normalizer(ambient: &PermGroup, h: &PermGroup) -> Result<PermGroup, GroupError> {
    if !h.is_subgroup_of(ambient) {
        return Err(GroupError::Input("subgroup is not contained in the ambient group".into()));
    }
    let chain = ambient.chain();
    let base = chain.base();
    let prop = NormalizerProp { h: h.clone(), left: PrefixInvariants::new(h), right: PrefixInvariants::new(h), base };
    let gens = Searcher::new(chain, prop).subgroup(h.gens());
    Ok(reduce_gens(ambient.degree(), gens))
}

/// Some `g` in `ambient` with `H^g = K`, if one exists.
pub fn conjugating_element(ambient: &PermGroup, h: &PermGroup, k: &PermGroup) -> Option<Perm> {
    if h.order() != k.order() || orbit_sizes(h.gens(), h.degree()) != orbit_sizes(k.gens(), k.degree()) {
        return None;
    }
    let chain = ambient.chain();
    let base = chain.base();
    let prop = TransporterProp {
        h: h.clone(),
        k: k.clone(),
        left: PrefixInvariants::new(h),
        right: PrefixInvariants::new(k),
        base,
    };
    Searcher::new(chain, prop).find_one()
}

/// Drops generators already in the span of the earlier ones.
pub fn reduce_gens(n: usize, gens: Vec<Perm>) -> PermGroup {
    let mut kept: Vec<Perm> = Vec::new();
    let mut chain = StabChain::new(n, &[], &[]);
    for g in gens {
        if g.is_identity() || chain.contains(&g) {
            continue;
        }
        kept.push(g);
        chain = StabChain::new(n, &kept, &[]);
    }
    PermGroup::new(n, kept).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grp(n: usize, cycles: &[&[&[usize]]]) -> PermGroup {
        let gens = cycles
            .iter()
            .map(|cs| Perm::from_cycles(n, &cs.iter().map(|c| c.to_vec()).collect::<Vec<_>>()).unwrap())
            .collect();
        PermGroup::new(n, gens).unwrap()
    }

    #[test]
    fn normalizer_of_four_cycle_is_dihedral() {
        let s4 = PermGroup::symmetric(4);
        let c4 = grp(4, &[&[&[0, 1, 2, 3]]]);
        let n = normalizer(&s4, &c4).unwrap();
        assert_eq!(n.order_usize(), 8);
    }

    #[test]
    fn normalizer_of_a4_in_s5() {
        let s5 = PermGroup::symmetric(5);
        let a4 = grp(5, &[&[&[0, 1, 2]], &[&[1, 2, 3]]]);
        assert_eq!(a4.order_usize(), 12);
        let n = normalizer(&s5, &a4).unwrap();
        assert_eq!(n.order_usize(), 24);
        assert!(n.gens().iter().all(|g| g.apply(4) == 4));
    }

    #[test]
    fn normal_subgroup_has_full_normalizer() {
        let s6 = PermGroup::symmetric(6);
        let a6 = PermGroup::alternating(6);
        assert_eq!(normalizer(&s6, &a6).unwrap().order_usize(), 720);
        let s3 = grp(4, &[&[&[0, 1]]]);
        assert!(normalizer(&PermGroup::symmetric(3), &s3).is_err());
    }

    #[test]
    fn conjugacy_of_transposition_subgroups() {
        let s4 = PermGroup::symmetric(4);
        let a = grp(4, &[&[&[0, 1]]]);
        let b = grp(4, &[&[&[2, 3]]]);
        let c = grp(4, &[&[&[0, 1], &[2, 3]]]);
        let g = conjugating_element(&s4, &a, &b).unwrap();
        assert!(b.contains(&a.gens()[0].conj(&g)));
        assert!(conjugating_element(&s4, &a, &c).is_none());
        // in A4, <(1 2)(3 4)> and <(1 3)(2 4)> are conjugate but not in V4 itself
        let a4 = PermGroup::alternating(4);
        let d = grp(4, &[&[&[0, 2], &[1, 3]]]);
        assert!(conjugating_element(&a4, &c, &d).is_some());
    }
}

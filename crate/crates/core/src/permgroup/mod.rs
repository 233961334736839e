//! Permutation groups and small abstract groups.

pub mod abstract_group;
pub mod backtrack;
pub mod catalog;
pub mod chain;
pub mod nq;
pub mod oracle;
pub mod perm;
pub mod quotient;
pub mod subgroups;

use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

pub use abstract_group::AbstractGroup;
pub use backtrack::{conjugating_element, normalizer};
pub use catalog::{named_group, GroupSpec};
pub use chain::StabChain;
pub use nq::{find_normalizer_quotient, special_case_an_minus_1, GammaKind, NqHit, NqSearch};
pub use perm::Perm;
pub use quotient::quotient;
pub use subgroups::{subgroups_up_to_conjugacy, SubgroupClasses};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("input error: {0}")]
    Input(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("resource limit: {0}")]
    Resource(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
}

/// A permutation group given by generators, with a lazily built stabilizer chain.
#[derive(Debug)]
pub struct PermGroup {
    n: usize,
    gens: Vec<Perm>,
    chain: OnceLock<StabChain>,
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        let chain = OnceLock::new();
        if let Some(c) = self.chain.get() {
            let _ = chain.set(c.clone());
        }
        PermGroup { n: self.n, gens: self.gens.clone(), chain }
    }
}

impl PermGroup {
    pub fn new(n: usize, gens: Vec<Perm>) -> Result<Self, GroupError> {
        if let Some(g) = gens.iter().find(|g| g.degree() != n) {
            return Err(GroupError::Input(format!("generator {g} has degree {} but group degree is {n}", g.degree())));
        }
        let gens = gens.into_iter().filter(|g| !g.is_identity()).collect();
        Ok(PermGroup { n, gens, chain: OnceLock::new() })
    }

    pub fn trivial(n: usize) -> Self {
        PermGroup { n, gens: Vec::new(), chain: OnceLock::new() }
    }

    pub fn symmetric(n: usize) -> Self {
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(Perm::from_cycles(n, &[vec![0, 1]]).unwrap());
        }
        if n >= 3 {
            gens.push(Perm::from_cycles(n, &[(0..n).collect()]).unwrap());
        }
        PermGroup::new(n, gens).unwrap()
    }

    pub fn alternating(n: usize) -> Self {
        let gens = (2..n).map(|i| Perm::from_cycles(n, &[vec![0, 1, i]]).unwrap()).collect();
        PermGroup::new(n, gens).unwrap()
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[Perm] {
        &self.gens
    }

    pub fn chain(&self) -> &StabChain {
        self.chain.get_or_init(|| StabChain::new(self.n, &self.gens, &[]))
    }

    /// A fresh chain whose base begins with `prefix`.
    pub fn chain_with_base(&self, prefix: &[usize]) -> StabChain {
        StabChain::new(self.n, &self.gens, prefix)
    }

    pub fn order(&self) -> BigUint {
        self.chain().order()
    }

    /// Order as a machine integer; panics if it does not fit.
    pub fn order_usize(&self) -> usize {
        self.order().to_usize().expect("group order fits in usize")
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.chain().contains(g)
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.n == other.n && self.gens.iter().all(|g| other.contains(g))
    }

    pub fn same_group(&self, other: &PermGroup) -> bool {
        self.is_subgroup_of(other) && self.order() == other.order()
    }

    /// `true` iff every generator of `self` conjugates `h` into itself.
    pub fn normalizes(&self, h: &PermGroup) -> bool {
        self.gens.iter().all(|g| h.gens.iter().all(|x| h.contains(&x.conj(g))))
    }

    pub fn is_normal_in(&self, big: &PermGroup) -> bool {
        self.is_subgroup_of(big) && big.normalizes(self)
    }

    pub fn elements(&self) -> Vec<Perm> {
        self.chain().elements()
    }

    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let orb = orbit_of(s, &self.gens, self.n);
            for &x in &orb {
                seen[x] = true;
            }
            out.push(orb);
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.n <= 1 || self.orbits().len() == 1
    }

    pub fn conjugate(&self, g: &Perm) -> PermGroup {
        PermGroup::new(self.n, self.gens.iter().map(|x| x.conj(g)).collect()).unwrap()
    }

    /// Generators as 1-based cycle strings.
    pub fn gen_strings(&self) -> Vec<String> {
        self.gens.iter().map(Perm::to_cycle_string).collect()
    }
}

/// Orbit of `x` under the group generated by `gens`, sorted.
pub fn orbit_of(x: usize, gens: &[Perm], n: usize) -> Vec<usize> {
    let mut seen = vec![false; n];
    seen[x] = true;
    let mut orb = vec![x];
    let mut i = 0;
    while i < orb.len() {
        let b = orb[i];
        for g in gens {
            let c = g.apply(b);
            if !seen[c] {
                seen[c] = true;
                orb.push(c);
            }
        }
        i += 1;
    }
    orb.sort_unstable();
    orb
}

/// Sorted orbit lengths of the group generated by `gens`.
pub fn orbit_sizes(gens: &[Perm], n: usize) -> Vec<usize> {
    let mut seen = vec![false; n];
    let mut sizes = Vec::new();
    for s in 0..n {
        if !seen[s] {
            let o = orbit_of(s, gens, n);
            for &x in &o {
                seen[x] = true;
            }
            sizes.push(o.len());
        }
    }
    sizes.sort_unstable();
    sizes
}

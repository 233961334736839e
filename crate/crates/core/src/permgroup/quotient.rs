//! Coset tables `N/H` with lexicographically least coset representatives.

use std::collections::HashMap;

use super::abstract_group::{AbstractGroup, MAX_ORDER};
use super::chain::StabChain;
use super::perm::Perm;
use super::{GroupError, PermGroup};

/// Least element of the coset `H·g` in the lexicographic order on image arrays.
pub fn coset_min(h_chain: &StabChain, g: &Perm) -> Perm {
    // h_chain must have base 0, 1, …, n−1 so that each level decides one coordinate
    let mut g = g.clone();
    for lvl in h_chain.levels() {
        let best = lvl.orbit.iter().copied().min_by_key(|&b| g.apply(b)).unwrap();
        g = lvl.rep(best).unwrap().mul(&g);
    }
    g
}

/// The quotient group together with the sorted coset representatives.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub group: AbstractGroup,
    pub reps: Vec<Perm>,
}

/// `N/H` as a multiplication table; errors if `H` is not normal in `N`.
pub fn quotient(n_grp: &PermGroup, h: &PermGroup) -> Result<Quotient, GroupError> {
    if !h.is_normal_in(n_grp) {
        return Err(GroupError::NotNormal);
    }
    let deg = n_grp.degree();
    let index = n_grp.order() / h.order();
    let index: usize = index
        .try_into()
        .ok()
        .filter(|&m: &usize| m <= MAX_ORDER)
        .ok_or_else(|| GroupError::Resource(format!("quotient order exceeds {MAX_ORDER}")))?;
    let base: Vec<usize> = (0..deg).collect();
    let hc = h.chain_with_base(&base);
    let id = coset_min(&hc, &Perm::identity(deg));
    let mut reps = vec![id.clone()];
    let mut seen: HashMap<Perm, usize> = HashMap::from([(id, 0)]);
    let mut i = 0;
    while i < reps.len() {
        for s in n_grp.gens() {
            let c = coset_min(&hc, &reps[i].mul(s));
            if !seen.contains_key(&c) {
                seen.insert(c.clone(), reps.len());
                reps.push(c);
            }
        }
        i += 1;
    }
    debug_assert_eq!(reps.len(), index);
    reps.sort();
    let pos: HashMap<&Perm, usize> = reps.iter().enumerate().map(|(i, r)| (r, i)).collect();
    let rows = reps
        .iter()
        .map(|a| reps.iter().map(|b| pos[&coset_min(&hc, &a.mul(b))]).collect())
        .collect();
    let labels = reps.iter().map(Perm::to_cycle_string).collect();
    let group = AbstractGroup::from_table(rows, Some(labels))?;
    Ok(Quotient { group, reps })
}

impl AbstractGroup {
    /// Table of a permutation group of order at most 512; elements sorted lexicographically.
    pub fn from_perm_group(g: &PermGroup) -> Result<(AbstractGroup, Vec<Perm>), GroupError> {
        let q = quotient(g, &PermGroup::trivial(g.degree()))?;
        Ok((q.group, q.reps))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::backtrack::normalizer;

    #[test]
    fn s4_mod_v4_is_s3() {
        let s4 = PermGroup::symmetric(4);
        let v4 = PermGroup::new(
            4,
            vec![
                Perm::from_cycles(4, &[vec![0, 1], vec![2, 3]]).unwrap(),
                Perm::from_cycles(4, &[vec![0, 2], vec![1, 3]]).unwrap(),
            ],
        )
        .unwrap();
        let q = quotient(&s4, &v4).unwrap();
        assert_eq!(q.group.order(), 6);
        assert!(!q.group.is_abelian());
        assert!(q.reps[0].is_identity());
    }

    #[test]
    fn frobenius_twenty_mod_c5_is_c4() {
        let s5 = PermGroup::symmetric(5);
        let c5 = PermGroup::new(5, vec![Perm::from_cycles(5, &[vec![0, 1, 2, 3, 4]]).unwrap()]).unwrap();
        let n = normalizer(&s5, &c5).unwrap();
        assert_eq!(n.order_usize(), 20);
        let q = quotient(&n, &c5).unwrap();
        assert!(q.group.is_isomorphic(&AbstractGroup::cyclic(4)).is_some());
    }

    #[test]
    fn non_normal_is_rejected() {
        let s3 = PermGroup::symmetric(3);
        let c2 = PermGroup::new(3, vec![Perm::from_cycles(3, &[vec![0, 1]]).unwrap()]).unwrap();
        assert_eq!(quotient(&s3, &c2).unwrap_err(), GroupError::NotNormal);
        let (t, elems) = AbstractGroup::from_perm_group(&s3).unwrap();
        assert_eq!(t.order(), 6);
        assert_eq!(elems.len(), 6);
    }
}

//! Brute-force reference implementations used to cross-check the search code.

use std::collections::HashSet;

use super::perm::Perm;
use super::subgroups::{closure, RankSet};
use super::PermGroup;

/// `N_ambient(H)` by testing every element of the ambient group.
pub fn normalizer_exhaustive(ambient: &PermGroup, h: &PermGroup) -> Vec<Perm> {
    let mut out: Vec<Perm> =
        ambient.elements().into_iter().filter(|g| h.gens().iter().all(|x| h.contains(&x.conj(g)))).collect();
    out.sort();
    out
}

/// Every subgroup of `gamma` as `(generators, rank set)`, found by closing
/// under single-element extensions from the trivial group.
pub fn all_subgroups(gamma: &PermGroup) -> Vec<(Vec<Perm>, RankSet)> {
    let n = gamma.degree();
    let mut elems = gamma.elements();
    elems.sort();
    let (triv_elems, triv) = closure(n, &[]);
    let mut seen: HashSet<RankSet> = HashSet::from([triv.clone()]);
    let mut out = vec![(Vec::new(), triv, triv_elems)];
    let mut i = 0;
    while i < out.len() {
        let (gens, set, members) = out[i].clone();
        // ⟨S, x⟩ = ⟨S, x^k s⟩ for s in S and k prime to the order of x
        let mut covered = set.clone();
        for x in &elems {
            if covered.contains(x.rank()) {
                continue;
            }
            let ord = x.order();
            for k in (1..ord).filter(|&k| num_integer::gcd(k, ord) == 1) {
                let xk = x.pow(k);
                for s in &members {
                    covered.insert(xk.mul(s).rank());
                }
            }
            let mut g2 = gens.clone();
            g2.push(x.clone());
            let (e2, s2) = closure(n, &g2);
            if seen.insert(s2.clone()) {
                out.push((g2, s2, e2));
            }
        }
        i += 1;
    }
    out.into_iter().map(|(g, s, _)| (g, s)).collect()
}

/// Number of `gamma`-conjugacy classes among `subs`, by conjugating every
/// subgroup with every element.
pub fn count_classes_brute(gamma: &PermGroup, subs: &[(Vec<Perm>, RankSet)]) -> usize {
    let n = gamma.degree();
    let elems = gamma.elements();
    let mut assigned: HashSet<RankSet> = HashSet::new();
    let mut classes = 0;
    for (gens, set) in subs {
        if assigned.contains(set) {
            continue;
        }
        classes += 1;
        for g in &elems {
            let conj: Vec<Perm> = gens.iter().map(|x| x.conj(g)).collect();
            assigned.insert(closure(n, &conj).1);
        }
    }
    classes
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s4_has_30_subgroups_in_11_classes() {
        let s4 = PermGroup::symmetric(4);
        let subs = all_subgroups(&s4);
        assert_eq!(subs.len(), 30);
        assert_eq!(count_classes_brute(&s4, &subs), 11);
        let a4 = PermGroup::alternating(4);
        let subs = all_subgroups(&a4);
        assert_eq!(subs.len(), 10);
        assert_eq!(count_classes_brute(&a4, &subs), 5);
    }
}

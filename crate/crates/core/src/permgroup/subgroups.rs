//! Subgroups up to conjugacy for small permutation groups.
//!
//! Class representatives are grown in order of increasing size: every
//! nontrivial K is ⟨M, x⟩ with M maximal in K and x an element of prime-power
//! order outside M, so extending each representative U by such x (one per
//! N(U)-conjugation orbit) reaches every class. Duplicates are removed by the
//! backtracking conjugacy test.

use std::collections::{BTreeMap, HashMap, HashSet};

use super::backtrack::{conjugating_element, normalizer, reduce_gens};
use super::perm::Perm;
use super::{orbit_sizes, GroupError, PermGroup};

/// Membership set over Lehmer ranks in `S_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RankSet {
    bits: Vec<u64>,
}

impl RankSet {
    pub fn new(size: usize) -> Self {
        RankSet { bits: vec![0; size.div_ceil(64)] }
    }

    pub fn insert(&mut self, r: usize) -> bool {
        let (w, b) = (r / 64, r % 64);
        let fresh = self.bits[w] >> b & 1 == 0;
        self.bits[w] |= 1 << b;
        fresh
    }

    pub fn contains(&self, r: usize) -> bool {
        self.bits[r / 64] >> (r % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn union_with(&mut self, other: &RankSet) {
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a |= b;
        }
    }
}

/// Elements of ⟨gens⟩ by breadth-first closure, with their rank set.
pub fn closure(n: usize, gens: &[Perm]) -> (Vec<Perm>, RankSet) {
    let total: usize = (1..=n).product();
    let mut set = RankSet::new(total);
    let id = Perm::identity(n);
    set.insert(id.rank());
    let mut elems = vec![id];
    let mut i = 0;
    while i < elems.len() {
        for g in gens {
            let y = elems[i].mul(g);
            if set.insert(y.rank()) {
                elems.push(y);
            }
        }
        i += 1;
    }
    (elems, set)
}

/// Conjugacy-invariant fingerprint of a subgroup.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubgroupKey {
    pub order: usize,
    pub cycle_types: Vec<(Vec<usize>, usize)>,
    pub orbits: Vec<usize>,
}

pub fn subgroup_key(n: usize, elems: &[Perm], gens: &[Perm]) -> SubgroupKey {
    let mut hist: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    for e in elems {
        *hist.entry(e.cycle_type()).or_default() += 1;
    }
    SubgroupKey { order: elems.len(), cycle_types: hist.into_iter().collect(), orbits: orbit_sizes(gens, n) }
}

#[derive(Clone, Debug)]
pub struct SubgroupClasses {
    /// Representatives sorted by (order, generator strings).
    pub reps: Vec<PermGroup>,
    pub complete: bool,
}

#[derive(Clone, Copy, Debug)]
pub struct EnumBudget {
    pub max_degree: usize,
    pub max_candidates: usize,
}

impl Default for EnumBudget {
    fn default() -> Self {
        EnumBudget { max_degree: 7, max_candidates: 2_000_000 }
    }
}

fn is_prime_power(mut k: u64) -> bool {
    if k < 2 {
        return false;
    }
    let mut p = 2;
    while !k.is_multiple_of(p) {
        p += 1;
    }
    while k.is_multiple_of(p) {
        k /= p;
    }
    k == 1
}

struct Rep {
    group: PermGroup,
    set: RankSet,
    key: SubgroupKey,
}

/// One representative per `Γ`-conjugacy class of subgroups of `Γ`.
pub fn subgroups_up_to_conjugacy(gamma: &PermGroup, budget: EnumBudget) -> Result<SubgroupClasses, GroupError> {
    let n = gamma.degree();
    if n > budget.max_degree {
        return Err(GroupError::Resource(format!(
            "subgroup enumeration supports degree at most {}, got {n}",
            budget.max_degree
        )));
    }
    let mut elems = gamma.elements();
    elems.sort();
    let ppo: Vec<Perm> = elems.iter().filter(|e| is_prime_power(e.order())).cloned().collect();
    let total: usize = (1..=n).product();

    let (triv_elems, triv_set) = closure(n, &[]);
    let mut reps = vec![Rep {
        group: PermGroup::trivial(n),
        key: subgroup_key(n, &triv_elems, &[]),
        set: triv_set,
    }];
    let mut by_key: HashMap<SubgroupKey, Vec<usize>> = HashMap::new();
    by_key.insert(reps[0].key.clone(), vec![0]);
    let mut seen_sets: HashSet<RankSet> = HashSet::new();
    let mut queue: BTreeMap<(usize, usize), ()> = BTreeMap::new();
    queue.insert((1, 0), ());
    let mut candidates = 0usize;
    let mut complete = true;

    while let Some(((_, idx), ())) = queue.pop_first() {
        let u = reps[idx].group.clone();
        let u_set = reps[idx].set.clone();
        let norm = normalizer(gamma, &u)?;
        let mut visited = RankSet::new(total);
        for x in &ppo {
            let rx = x.rank();
            if u_set.contains(rx) || visited.contains(rx) {
                continue;
            }
            // mark the N(U)-conjugation orbit of x
            let mut stack = vec![x.clone()];
            visited.insert(rx);
            while let Some(y) = stack.pop() {
                for g in norm.gens() {
                    let z = y.conj(g);
                    if visited.insert(z.rank()) {
                        stack.push(z);
                    }
                }
            }
            candidates += 1;
            if candidates > budget.max_candidates {
                complete = false;
                break;
            }
            let mut gens = u.gens().to_vec();
            gens.push(x.clone());
            let (k_elems, k_set) = closure(n, &gens);
            if !seen_sets.insert(k_set.clone()) {
                continue;
            }
            let key = subgroup_key(n, &k_elems, &gens);
            let k_grp = reduce_gens(n, gens);
            let dup = by_key
                .get(&key)
                .is_some_and(|ids| ids.iter().any(|&j| conjugating_element(gamma, &k_grp, &reps[j].group).is_some()));
            if dup {
                continue;
            }
            let id = reps.len();
            by_key.entry(key.clone()).or_default().push(id);
            queue.insert((k_elems.len(), id), ());
            reps.push(Rep { group: k_grp, set: k_set, key });
        }
        if !complete {
            break;
        }
    }
    let mut out: Vec<PermGroup> = reps.into_iter().map(|r| r.group).collect();
    out.sort_by_cached_key(|g| (g.order_usize(), g.gen_strings()));
    Ok(SubgroupClasses { reps: out, complete })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_symmetric_counts() {
        let count = |g: PermGroup| subgroups_up_to_conjugacy(&g, EnumBudget::default()).unwrap().reps.len();
        assert_eq!(count(PermGroup::symmetric(3)), 4);
        assert_eq!(count(PermGroup::symmetric(4)), 11);
        assert_eq!(count(PermGroup::alternating(4)), 5);
        assert_eq!(count(PermGroup::alternating(5)), 9);
        assert_eq!(count(PermGroup::symmetric(5)), 19);
    }

    #[test]
    fn degree_budget_is_enforced() {
        let r = subgroups_up_to_conjugacy(&PermGroup::symmetric(8), EnumBudget::default());
        assert!(matches!(r, Err(GroupError::Resource(_))));
    }
}

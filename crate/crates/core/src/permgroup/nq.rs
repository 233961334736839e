//! Search for subgroups `H ≤ Γ ∈ {S_n, A_n}` with `N_Γ(H)/H ≅ G`.

use serde::{Deserialize, Serialize};

use super::abstract_group::AbstractGroup;
use super::backtrack::normalizer;
use super::oracle::normalizer_exhaustive;
use super::perm::Perm;
use super::quotient::{quotient, Quotient};
use super::subgroups::{subgroups_up_to_conjugacy, EnumBudget};
use super::{GroupError, PermGroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GammaKind {
    S,
    A,
}

impl GammaKind {
    pub fn group(self, n: usize) -> PermGroup {
        match self {
            GammaKind::S => PermGroup::symmetric(n),
            GammaKind::A => PermGroup::alternating(n),
        }
    }

    pub fn letter(self) -> &'static str {
        match self {
            GammaKind::S => "S",
            GammaKind::A => "A",
        }
    }
}

#[derive(Clone, Debug)]
pub struct NqHit {
    pub n: usize,
    pub kind: GammaKind,
    pub h: PermGroup,
    pub normalizer: PermGroup,
    /// `[Γ : H]`.
    pub index: u128,
    pub quotient: Quotient,
    /// `iso[i]` is the element of G matched with coset `i` of the quotient.
    pub iso: Vec<usize>,
    /// Whether the normalizer was re-derived element by element.
    pub oracle_checked: bool,
}

#[derive(Clone, Debug)]
pub struct NqSearch {
    pub hits: Vec<NqHit>,
    pub complete: bool,
    /// Degrees that were skipped for exceeding the enumeration budget.
    pub skipped: Vec<usize>,
}

/// Largest degree at which normalizers are re-checked exhaustively.
pub const ORACLE_DEGREE: usize = 8;

/// Tests one candidate `H ≤ Γ`; `None` if the quotient does not match `G`.
pub fn evaluate_candidate(
    g: &AbstractGroup,
    n: usize,
    kind: GammaKind,
    gamma: &PermGroup,
    h: &PermGroup,
) -> Result<Option<NqHit>, GroupError> {
    let norm = normalizer(gamma, h)?;
    let h_ord = h.order();
    let n_ord = norm.order();
    if &n_ord % &h_ord != 0u32.into() || (&n_ord / &h_ord) != g.order().into() {
        return Ok(None);
    }
    let q = quotient(&norm, h)?;
    let Some(iso) = q.group.is_isomorphic(g) else {
        return Ok(None);
    };
    let mut oracle_checked = false;
    if n <= ORACLE_DEGREE {
        let ex = normalizer_exhaustive(gamma, h);
        if ex.len() != norm.order_usize() || !ex.iter().all(|x| norm.contains(x)) {
            return Err(GroupError::Precondition(format!(
                "normalizer mismatch against the exhaustive oracle for H = <{}>",
                h.gen_strings().join(", ")
            )));
        }
        oracle_checked = true;
    }
    let index: u128 = (gamma.order() / h_ord).try_into().unwrap_or(u128::MAX);
    Ok(Some(NqHit { n, kind, h: h.clone(), normalizer: norm, index, quotient: q, iso, oracle_checked }))
}

/// All `(n, Γ, H)` with `H` a class representative of subgroups of `Γ` and
/// `N_Γ(H)/H ≅ G`, sorted by `(n, [Γ:H], kind, generators)`.
pub fn find_normalizer_quotient(
    g: &AbstractGroup,
    n_min: usize,
    n_max: usize,
    kinds: &[GammaKind],
    budget: EnumBudget,
) -> Result<NqSearch, GroupError> {
    if n_min > n_max || kinds.is_empty() {
        return Err(GroupError::Input("empty degree range or no group kinds".into()));
    }
    let mut kinds = kinds.to_vec();
    kinds.sort();
    kinds.dedup();
    let mut hits = Vec::new();
    let mut skipped = Vec::new();
    let mut complete = true;
    for n in n_min.max(1)..=n_max {
        if n > budget.max_degree {
            skipped.push(n);
            complete = false;
            continue;
        }
        for &kind in &kinds {
            let gamma = kind.group(n);
            let classes = subgroups_up_to_conjugacy(&gamma, budget)?;
            complete &= classes.complete;
            let results = crate::par::map_vec(&classes.reps, |h| evaluate_candidate(g, n, kind, &gamma, h));
            for r in results {
                if let Some(hit) = r? {
                    hits.push(hit);
                }
            }
        }
    }
    hits.sort_by_cached_key(|h| (h.n, h.index, h.kind, h.h.gen_strings()));
    Ok(NqSearch { hits, complete, skipped })
}

/// `H = A_{n−1}` fixing the last point, with its normalizer quotient `C_2`.
pub fn special_case_an_minus_1(n: usize) -> Result<NqHit, GroupError> {
    if n < 5 {
        return Err(GroupError::Precondition(format!("A_(n-1) special case needs n >= 5, got {n}")));
    }
    let gens = (2..n - 1).map(|i| Perm::from_cycles(n, &[vec![0, 1, i]]).unwrap()).collect();
    let h = PermGroup::new(n, gens)?;
    let c2 = AbstractGroup::cyclic(2);
    evaluate_candidate(&c2, n, GammaKind::S, &PermGroup::symmetric(n), &h)?
        .ok_or_else(|| GroupError::Precondition("A_(n-1) quotient did not match C_2".into()))
}

/// Lifts `H0 ≤ S_m` to degree `n = m + k` with `k > m`: `S_k × H0` inside
/// `S_n`, or the sign-matched subgroup `{(σ, h) : sgn σ = sgn h}` inside
/// `A_n`. The result is verified from scratch.
pub fn lift_to_degree(g: &AbstractGroup, h0: &PermGroup, n: usize, kind: GammaKind) -> Result<Option<NqHit>, GroupError> {
    let m = h0.degree();
    if n <= 2 * m {
        return Err(GroupError::Precondition(format!("lift needs n > 2m, got n = {n}, m = {m}")));
    }
    let k = n - m;
    let block = |cycle: Vec<usize>| Perm::from_cycles(n, &[cycle.into_iter().map(|x| x + m).collect()]).unwrap();
    let mut gens: Vec<Perm> = Vec::new();
    match kind {
        GammaKind::S => {
            gens.push(block(vec![0, 1]));
            gens.push(block((0..k).collect()));
            gens.extend(h0.gens().iter().map(|x| x.extend(n)));
        }
        GammaKind::A => {
            gens.extend((2..k).map(|i| block(vec![0, 1, i])));
            let tau = block(vec![0, 1]);
            for x in h0.gens() {
                let e = x.extend(n);
                gens.push(if x.is_even() { e } else { e.mul(&tau) });
            }
        }
    }
    let h = PermGroup::new(n, gens)?;
    evaluate_candidate(g, n, kind, &kind.group(n), &h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::catalog::named_group;

    fn table(name: &str) -> AbstractGroup {
        AbstractGroup::from_perm_group(&named_group(name).unwrap()).unwrap().0
    }

    #[test]
    fn c2_in_s5_via_a4() {
        let res = find_normalizer_quotient(&table("C2"), 5, 5, &[GammaKind::S], EnumBudget::default()).unwrap();
        assert!(res.complete);
        assert!(res.hits.iter().any(|h| h.h.order_usize() == 12 && h.h.orbits().len() == 2));
        assert!(res.hits.iter().all(|h| h.oracle_checked));
    }

    #[test]
    fn an_minus_1_cases() {
        assert!(special_case_an_minus_1(4).is_err());
        let h5 = special_case_an_minus_1(5).unwrap();
        assert_eq!(h5.normalizer.order_usize(), 24);
        assert_eq!(h5.quotient.group.order(), 2);
        let h6 = special_case_an_minus_1(6).unwrap();
        assert_eq!(h6.quotient.group.order(), 2);
    }

    #[test]
    fn empty_range_is_an_input_error() {
        assert!(find_normalizer_quotient(&table("C2"), 5, 4, &[GammaKind::S], EnumBudget::default()).is_err());
    }

    #[test]
    fn lift_c2_to_a9() {
        let a3 = PermGroup::alternating(3);
        let hit = lift_to_degree(&table("C2"), &a3, 9, GammaKind::A).unwrap().unwrap();
        assert_eq!(hit.quotient.group.order(), 2);
        assert_eq!(hit.n, 9);
    }
}

//! Assembly of `K = L^H`: a subgroup `H ≤ Γ` with `N_Γ(H)/H ≅ G`, a
//! `Γ`-extension `L` from one of the pipelines, and the ramification bound
//! `Ram(K/F) ⊆ Ram(L/F)`.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::exact::{discriminant, resultant, Integers, IntPoly, Poly, PolyRing, Ring};
use crate::galois::{
    irreducible_over_q, ramified_primes, InfiniteStatus, Irreducibility, PlaceStatus, RamificationReport,
    DEFAULT_FACTOR_BOUND,
};
use crate::permgroup::nq::evaluate_candidate;
use crate::permgroup::subgroups::EnumBudget;
use crate::permgroup::{
    find_normalizer_quotient, nq::lift_to_degree, special_case_an_minus_1, AbstractGroup, GammaKind, NqHit, Perm,
    PermGroup,
};

use super::bms::{bms_search, BmsBounds, BmsTriple};
use super::ffield::{function_field_family, FfieldInstance, FfieldOptions};
use super::schinzel::{schinzel_search, SchinzelInstance, SchinzelParams};
use super::ConstructionError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Strategy {
    Schinzel,
    Bms,
    Ffield,
}

impl Strategy {
    pub fn kind(self) -> GammaKind {
        match self {
            Strategy::Schinzel | Strategy::Bms => GammaKind::S,
            Strategy::Ffield => GammaKind::A,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SubgroupChoice {
    /// First hit of the normalizer-quotient search.
    Auto,
    /// `A_{n−1} ≤ S_n`, for `G ≅ C_2`.
    AnMinus1,
    /// `H` given by generators of degree `n`.
    Explicit(Vec<Perm>),
}

#[derive(Clone, Debug)]
pub struct RealizeOptions {
    pub strategy: Strategy,
    pub n: Option<usize>,
    pub n_max: usize,
    pub choice: SubgroupChoice,
    pub budget: EnumBudget,
    pub bms: BmsBounds,
    /// Template for the Schinzel search; `n` is overwritten.
    pub schinzel: SchinzelParams,
    pub ffield_q: u64,
    pub ffield: FfieldOptions,
    pub factor_bound: u64,
}

impl Default for RealizeOptions {
    fn default() -> Self {
        RealizeOptions {
            strategy: Strategy::Bms,
            n: None,
            n_max: 7,
            choice: SubgroupChoice::Auto,
            budget: EnumBudget::default(),
            bms: BmsBounds::default(),
            schinzel: SchinzelParams::new(2),
            ffield_q: 2,
            ffield: FfieldOptions::default(),
            factor_bound: DEFAULT_FACTOR_BOUND,
        }
    }
}

#[derive(Clone, Debug)]
pub enum LSource {
    /// `G` trivial: `K` is the base field.
    Base,
    Schinzel(Box<SchinzelInstance>),
    Bms(Box<BmsTriple>),
    Ffield(Box<FfieldInstance>),
}

impl LSource {
    pub fn name(&self) -> &'static str {
        match self {
            LSource::Base => "base",
            LSource::Schinzel(_) => "schinzel",
            LSource::Bms(_) => "bms",
            LSource::Ffield(_) => "ffield",
        }
    }

    /// Monic integral polynomial whose splitting field is `L`, over ℚ.
    pub fn stem(&self) -> Option<&IntPoly> {
        match self {
            LSource::Schinzel(s) => s.f.as_ref(),
            LSource::Bms(b) => Some(&b.model),
            LSource::Base | LSource::Ffield(_) => None,
        }
    }

    pub fn ramified_set_bound(&self) -> Vec<String> {
        match self {
            LSource::Base => Vec::new(),
            LSource::Schinzel(s) => match &s.ramification {
                Some(r) => bound_of(r),
                None => vec![s.h_value.to_string()],
            },
            LSource::Bms(b) => b.ramified_set_bound(),
            LSource::Ffield(f) => f.ramified_set_bound(),
        }
    }
}

fn bound_of(r: &RamificationReport) -> Vec<String> {
    let mut out: Vec<String> =
        r.places.iter().filter(|pl| pl.status != PlaceStatus::Unramified).map(|pl| pl.prime.to_string()).collect();
    if !matches!(r.infinite, InfiniteStatus::AllReal) {
        out.push("∞".into());
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KKind {
    /// `H = S_{n−1}`: `K` is the stem field of `f`.
    Stem,
    /// `H = A_{n−1}`: `K = ℚ(α, √disc f)`.
    StemWithSqrtDisc,
}

#[derive(Clone, Debug)]
pub struct KPolynomial {
    pub kind: KKind,
    pub poly: IntPoly,
    pub irreducibility: Irreducibility,
    pub ramification: RamificationReport,
}

#[derive(Clone, Debug)]
pub struct RealizationCertificate {
    pub group_order: usize,
    pub n: usize,
    pub kind: GammaKind,
    pub h_gens: Vec<Perm>,
    pub h_order: u128,
    pub normalizer_gens: Vec<Perm>,
    /// `[Γ : H] = [K : F]`.
    pub index: u128,
    pub quotient: AbstractGroup,
    /// `iso[i]` is the element of `G` matched with coset `i`.
    pub iso: Vec<usize>,
    pub source: LSource,
    pub ramified_bound: Vec<String>,
    pub k_poly: Option<KPolynomial>,
    pub caveats: Vec<String>,
    pub statement: String,
}

/// `Res_Y(f(Y), (X − Y)² − disc f)`, monic of degree `2n`, a defining
/// polynomial of `ℚ(α, √disc f)` when it is irreducible.
pub fn an_minus_1_polynomial(f: &IntPoly) -> Result<IntPoly, ConstructionError> {
    let zx = PolyRing::new(Integers);
    let d = discriminant(&zx, f)?;
    let zxy = PolyRing::new(zx.clone());
    let fy = zxy.from_coeffs(f.coeffs().iter().map(|c| zx.constant(c.clone())).collect());
    // Y² − 2XY + X² − D
    let q = zxy.from_coeffs(vec![
        Poly::from_vec(vec![-d, BigInt::from(0), BigInt::from(1)]),
        Poly::from_i64s(&[0, -2]),
        zx.one(),
    ]);
    Ok(resultant(&zxy, &fy, &q)?)
}

fn is_point_stabilizer_like(h: &PermGroup, n: usize, order: u128) -> bool {
    let mut sizes: Vec<usize> = h.orbits().iter().map(Vec::len).collect();
    sizes.sort_unstable();
    sizes == vec![1, n - 1] && h.order().to_u128() == Some(order)
}

fn factorial(k: usize) -> u128 {
    (1..=k as u128).product()
}

fn k_polynomial(h: &PermGroup, n: usize, stem: &IntPoly, l_report: Option<&RamificationReport>, bound: u64) -> Result<Option<KPolynomial>, ConstructionError> {
    if n >= 2 && is_point_stabilizer_like(h, n, factorial(n - 1)) {
        let ramification = match l_report {
            Some(r) => r.clone(),
            None => ramified_primes(stem, bound)?,
        };
        return Ok(Some(KPolynomial {
            kind: KKind::Stem,
            poly: stem.clone(),
            irreducibility: irreducible_over_q(stem)?,
            ramification,
        }));
    }
    if n >= 4 && is_point_stabilizer_like(h, n, factorial(n - 1) / 2) {
        let g = an_minus_1_polynomial(stem)?;
        let irreducibility = irreducible_over_q(&g)?;
        if !irreducibility.is_irreducible() {
            return Err(ConstructionError::Verification("Res_Y(f(Y), (X - Y)^2 - disc f) is reducible".into()));
        }
        let ramification = ramified_primes(&g, bound)?;
        return Ok(Some(KPolynomial { kind: KKind::StemWithSqrtDisc, poly: g, irreducibility, ramification }));
    }
    Ok(None)
}

fn choose_subgroup(g: &AbstractGroup, opts: &RealizeOptions) -> Result<NqHit, ConstructionError> {
    let kind = opts.strategy.kind();
    match &opts.choice {
        SubgroupChoice::Explicit(gens) => {
            let n = gens.first().map(Perm::degree).or(opts.n).ok_or_else(|| {
                ConstructionError::Input("explicit subgroup without generators needs a degree".into())
            })?;
            let h = PermGroup::new(n, gens.clone())?;
            let gamma = kind.group(n);
            if !h.is_subgroup_of(&gamma) {
                return Err(ConstructionError::Input(format!("H is not contained in {}{n}", kind.letter())));
            }
            evaluate_candidate(g, n, kind, &gamma, &h)?
                .ok_or_else(|| ConstructionError::Input("N(H)/H is not isomorphic to G".into()))
        }
        SubgroupChoice::AnMinus1 => {
            if kind != GammaKind::S {
                return Err(ConstructionError::Input("A_(n-1) choice needs a symmetric-group strategy".into()));
            }
            if g.order() != 2 {
                return Err(ConstructionError::Input("A_(n-1) choice realizes only C2".into()));
            }
            Ok(special_case_an_minus_1(opts.n.unwrap_or(5))?)
        }
        SubgroupChoice::Auto if kind == GammaKind::A => {
            let n = opts.n.unwrap_or(9);
            let m_max = ((n - 1) / 2).min(opts.budget.max_degree);
            let found = find_normalizer_quotient(g, 1, m_max.max(1), &[GammaKind::S], opts.budget)?;
            for hit in &found.hits {
                if let Some(l) = lift_to_degree(g, &hit.h, n, GammaKind::A)? {
                    return Ok(l);
                }
            }
            Err(ConstructionError::not_found(
                "normalizer-quotient",
                format!("no subgroup of S_m, m <= {m_max}, lifts to A{n} with quotient G"),
            ))
        }
        SubgroupChoice::Auto => {
            let (lo, hi) = match opts.n {
                Some(n) => (n, n),
                None => (2, opts.n_max),
            };
            // hits are sorted by degree first, so the smallest degree with a hit decides
            for n in lo..=hi {
                let found = find_normalizer_quotient(g, n, n, &[kind], opts.budget)?;
                if let Some(hit) = found.hits.into_iter().next() {
                    return Ok(hit);
                }
            }
            None.ok_or_else(|| {
                ConstructionError::not_found(
                    "normalizer-quotient",
                    format!("no H <= {}n, {lo} <= n <= {hi}, with N(H)/H isomorphic to G", kind.letter()),
                )
            })
        }
    }
}

fn trivial_certificate(g: &AbstractGroup) -> RealizationCertificate {
    RealizationCertificate {
        group_order: 1,
        n: 1,
        kind: GammaKind::S,
        h_gens: Vec::new(),
        h_order: 1,
        normalizer_gens: Vec::new(),
        index: 1,
        quotient: g.clone(),
        iso: vec![g.identity()],
        source: LSource::Base,
        ramified_bound: Vec::new(),
        k_poly: None,
        caveats: Vec::new(),
        statement: "G is trivial: H = Gamma and K = F, unramified everywhere".into(),
    }
}

pub fn realize(g: &AbstractGroup, opts: &RealizeOptions) -> Result<RealizationCertificate, ConstructionError> {
    if g.order() == 1 {
        return Ok(trivial_certificate(g));
    }
    if opts.strategy == Strategy::Ffield && opts.n.is_some_and(|n| n < 9 || n % 8 != 1) {
        return Err(ConstructionError::Precondition("the function-field family needs n >= 9, n = 1 mod 8".into()));
    }
    let hit = choose_subgroup(g, opts)?;
    let n = hit.n;
    let mut caveats = Vec::new();
    let source = match opts.strategy {
        Strategy::Bms => LSource::Bms(Box::new(bms_search(n, &opts.bms)?)),
        Strategy::Schinzel => {
            let params = SchinzelParams { n, ..opts.schinzel.clone() };
            let inst = schinzel_search(&params, None)?;
            if inst.primality != crate::exact::Primality::Prime {
                caveats.push(format!("H(a, t) = {} is a probable prime", inst.h_value));
            }
            LSource::Schinzel(Box::new(inst))
        }
        Strategy::Ffield => {
            let inst = function_field_family(n, opts.ffield_q, &opts.ffield)?;
            caveats.push(format!("Gal = A_{n} over F_{}(T) is supported by cycle-type evidence only", opts.ffield_q));
            if !inst.all_even {
                return Err(ConstructionError::Verification("an odd Frobenius cycle type was observed".into()));
            }
            LSource::Ffield(Box::new(inst))
        }
    };
    let ramified_bound = source.ramified_set_bound();
    let k_poly = match source.stem() {
        Some(stem) => {
            let l_report = match &source {
                LSource::Bms(b) => Some(&b.ramification),
                LSource::Schinzel(s) => s.ramification.as_ref(),
                _ => None,
            };
            k_polynomial(&hit.h, n, stem, l_report, opts.factor_bound)?
        }
        None => None,
    };
    if let Some(k) = &k_poly {
        check_k_within_bound(k, &ramified_bound)?;
        if k.ramification.is_partial() || !k.ramification.undecided().is_empty() {
            caveats.push("K-polynomial report has undecided or unfactored places; they lie in the index, not in the bound check".into());
        }
    }
    let h_order = hit.h.order().to_u128().unwrap_or(u128::MAX);
    let base = if opts.strategy == Strategy::Ffield { format!("F_{}(T)", opts.ffield_q) } else { "Q".into() };
    let statement = format!(
        "K = L^H with Gal(L/{base}) = {}{n}, [K:{base}] = {}, Aut(K/{base}) = N(H)/H isomorphic to G, \
         Ram(K/{base}) within Ram(L/{base}) within {{{}}}",
        hit.kind.letter(),
        hit.index,
        ramified_bound.join(", ")
    );
    Ok(RealizationCertificate {
        group_order: g.order(),
        n,
        kind: hit.kind,
        h_gens: hit.h.gens().to_vec(),
        h_order,
        normalizer_gens: hit.normalizer.gens().to_vec(),
        index: hit.index,
        quotient: hit.quotient.group.clone(),
        iso: hit.iso.clone(),
        source,
        ramified_bound,
        k_poly,
        caveats,
        statement,
    })
}

/// No prime classified ramified in `K` lies outside the bound.
fn check_k_within_bound(k: &KPolynomial, bound: &[String]) -> Result<(), ConstructionError> {
    for p in k.ramification.ramified() {
        if !bound.contains(&p.to_string()) {
            return Err(ConstructionError::Verification(format!("K-polynomial ramified at {p}, outside the bound")));
        }
    }
    Ok(())
}

impl RealizationCertificate {
    /// Recomputes the group-theoretic data, the `L`-level certificate and the
    /// K-polynomial.
    pub fn verify(&self, g: &AbstractGroup, factor_bound: u64) -> Result<(), ConstructionError> {
        let fail = |m: &str| Err(ConstructionError::Verification(format!("realization: {m}")));
        if g.order() != self.group_order {
            return fail("group order");
        }
        if let LSource::Base = self.source {
            return if self.group_order == 1 && self.ramified_bound.is_empty() { Ok(()) } else { fail("trivial case") };
        }
        let gamma = self.kind.group(self.n);
        let h = PermGroup::new(self.n, self.h_gens.clone())?;
        let Some(hit) = evaluate_candidate(g, self.n, self.kind, &gamma, &h)? else {
            return fail("N(H)/H is not isomorphic to G");
        };
        if hit.index != self.index || hit.h.order().to_u128() != Some(self.h_order) {
            return fail("index or |H|");
        }
        let nrm = PermGroup::new(self.n, self.normalizer_gens.clone())?;
        if !nrm.same_group(&hit.normalizer) {
            return fail("normalizer generators");
        }
        if self.quotient.rows() != hit.quotient.group.rows() || !self.quotient.verify_hom(g, &self.iso) {
            return fail("quotient isomorphism witness");
        }
        match &self.source {
            LSource::Bms(b) => b.verify()?,
            LSource::Schinzel(s) => s.verify(&super::schinzel::Base::rationals())?,
            LSource::Ffield(f) => f.verify()?,
            LSource::Base => unreachable!(),
        }
        if self.source.ramified_set_bound() != self.ramified_bound {
            return fail("ramified-set bound");
        }
        let expected = match self.source.stem() {
            Some(stem) => {
                let l_report = match &self.source {
                    LSource::Bms(b) => Some(&b.ramification),
                    LSource::Schinzel(s) => s.ramification.as_ref(),
                    _ => None,
                };
                k_polynomial(&h, self.n, stem, l_report, factor_bound)?
            }
            None => None,
        };
        match (&expected, &self.k_poly) {
            (None, None) => {}
            (Some(a), Some(b)) if a.poly == b.poly && a.kind == b.kind && a.ramification == b.ramification => {
                check_k_within_bound(b, &self.ramified_bound)?;
                if !b.irreducibility.is_irreducible() {
                    return fail("K-polynomial is reducible");
                }
            }
            _ => return fail("K-polynomial"),
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::named_group;

    fn table(name: &str) -> AbstractGroup {
        AbstractGroup::from_perm_group(&named_group(name).unwrap()).unwrap().0
    }

    #[test]
    fn trivial_group() {
        let c = realize(&table("C1"), &RealizeOptions::default()).unwrap();
        assert_eq!(c.n, 1);
        assert!(c.ramified_bound.is_empty());
        assert!(matches!(c.source, LSource::Base));
        c.verify(&table("C1"), DEFAULT_FACTOR_BOUND).unwrap();
    }

    #[test]
    fn c2_auto_is_a_quadratic_field() {
        let g = table("C2");
        let c = realize(&g, &RealizeOptions::default()).unwrap();
        assert_eq!((c.n, c.index), (2, 2));
        assert_eq!(c.ramified_bound, vec!["3", "11"]);
        let k = c.k_poly.as_ref().unwrap();
        assert_eq!(k.kind, KKind::Stem);
        c.verify(&g, DEFAULT_FACTOR_BOUND).unwrap();
    }

    #[test]
    fn s3_in_s4_via_klein() {
        let g = table("S3");
        let opts = RealizeOptions { n: Some(4), ..RealizeOptions::default() };
        let c = realize(&g, &opts).unwrap();
        assert_eq!((c.n, c.index, c.h_order), (4, 6, 4));
        assert!(c.k_poly.is_none());
        c.verify(&g, DEFAULT_FACTOR_BOUND).unwrap();
    }

    #[test]
    fn an_minus_1_polynomial_small() {
        // f = X² − 2: disc 8, roots of g are ±√2 ± √8, i.e. ±3√2 and ±√2
        let g = an_minus_1_polynomial(&Poly::from_i64s(&[-2, 0, 1])).unwrap();
        assert_eq!(g, Poly::from_i64s(&[36, 0, -20, 0, 1]));
    }

    #[test]
    fn explicit_subgroup_is_checked() {
        let g = table("C3");
        let bad = SubgroupChoice::Explicit(vec![Perm::from_cycles(4, &[vec![0, 1]]).unwrap()]);
        let opts = RealizeOptions { choice: bad, ..RealizeOptions::default() };
        assert!(matches!(realize(&g, &opts), Err(ConstructionError::Input(_))));
    }
}

//! The Schinzel family `f(X; a, T) = Xⁿ + Σ c_i (Tⁱ + a_i) X^{n−i} + P α a_n`
//! with `∏ (X − i) = Xⁿ + Σ c_i X^{n−i}`, its discriminant norm `H(a, T)`, and
//! the search for `t` with `H(a, t)` prime and `f(X; a, t)` a certified
//! `S_n`-polynomial ramified at that single prime.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::exact::factor::is_squarefree_mod;
use crate::exact::integer::primes_up_to;
use crate::exact::{
    content_and_primitive, discriminant, is_probable_prime, real_root_count, resultant, Integers, IntPoly, Poly,
    PolyRing, PrimeField, Primality, Ring,
};
use crate::galois::{
    galois_certify, irreducible_over_q, ramified_primes, GaloisCertificate, GaloisStatus, RamificationReport,
    DEFAULT_FACTOR_BOUND, DEFAULT_PRIME_BUDGET,
};

use super::{ConstructionError, ScanStats};

type Zt = PolyRing<Integers>;
type At = PolyRing<PolyRing<Integers>>;

fn zt() -> Zt {
    PolyRing::new(Integers)
}

fn at() -> At {
    PolyRing::new(PolyRing::new(Integers))
}

/// The base field ℚ(α) given by the minimal polynomial of `α`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Base {
    min_poly: IntPoly,
}

impl Base {
    /// ℚ with `α = 1`.
    pub fn rationals() -> Self {
        Base { min_poly: Poly::from_i64s(&[-1, 1]) }
    }

    pub fn new(min_poly: IntPoly) -> Result<Self, ConstructionError> {
        match min_poly.degree() {
            None | Some(0) => return Err(ConstructionError::Input("minimal polynomial must have degree >= 1".into())),
            _ => {}
        }
        if !min_poly.lc().unwrap().is_one() {
            return Err(ConstructionError::Input("minimal polynomial must be monic".into()));
        }
        if !irreducible_over_q(&min_poly)?.is_irreducible() {
            return Err(ConstructionError::Input("minimal polynomial must be irreducible".into()));
        }
        Ok(Base { min_poly })
    }

    pub fn degree(&self) -> usize {
        self.min_poly.degree().unwrap()
    }

    pub fn min_poly(&self) -> &IntPoly {
        &self.min_poly
    }

    /// `α` itself when `d = 1`.
    fn rational_alpha(&self) -> Option<BigInt> {
        (self.degree() == 1).then(|| -self.min_poly.coeffs()[0].clone())
    }
}

/// `(c_1, …, c_n)` from `∏_{i=1}^n (X − i)` and `P = ∏_{p ≤ d n (n−1)} p`.
pub fn build_c_and_p(n: usize, d: usize) -> Result<(Vec<BigInt>, BigInt), ConstructionError> {
    if n < 2 || d < 1 {
        return Err(ConstructionError::Input(format!("need n >= 2 and d >= 1, got n = {n}, d = {d}")));
    }
    let z = zt();
    let mut prod = z.one();
    for i in 1..=n as i64 {
        prod = z.mul(&prod, &Poly::from_i64s(&[-i, 1]));
    }
    let c = (1..=n).map(|i| prod.coeffs()[n - i].clone()).collect();
    let p = primes_up_to((d * n * (n - 1)) as u64).into_iter().fold(BigInt::one(), |acc, p| acc * p);
    Ok((c, p))
}

/// `f(X; a, T)` with X-coefficients (lowest first) in `ℤ[T][α]`, stored as
/// polynomials in `α` whose coefficients are polynomials in `T`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FxaT {
    pub n: usize,
    pub coeffs: Vec<Poly<Poly<BigInt>>>,
}

impl FxaT {
    /// Substitutes a rational value for `α`, giving a polynomial in X over ℤ[T].
    pub fn at_alpha(&self, alpha: &BigInt) -> Poly<Poly<BigInt>> {
        let z = zt();
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                c.coeffs().iter().rev().fold(z.zero(), |acc, ck| z.add(&z.scalar_mul(&acc, alpha), ck))
            })
            .collect();
        PolyRing::new(z).from_coeffs(coeffs)
    }

    pub fn specialize(&self, alpha: &BigInt, t: &BigInt) -> IntPoly {
        let fx = self.at_alpha(alpha);
        Poly::from_vec(fx.coeffs().iter().map(|c| c.eval_int(t)).collect())
    }
}

pub fn build_f(n: usize, base: &Base, a: &[BigInt]) -> Result<FxaT, ConstructionError> {
    if a.len() != n {
        return Err(ConstructionError::Input(format!("a has {} entries, expected n = {n}", a.len())));
    }
    let (c, p) = build_c_and_p(n, base.degree())?;
    let z = zt();
    let al = at();
    let mut coeffs = vec![al.zero(); n + 1];
    coeffs[n] = al.one();
    for i in 1..=n {
        // c_i (T^i + a_i)
        let mut ti = vec![BigInt::zero(); i + 1];
        ti[i] = c[i - 1].clone();
        ti[0] = &c[i - 1] * &a[i - 1];
        coeffs[n - i] = al.constant(z.from_coeffs(ti));
    }
    let extra = al.monomial(z.constant(&p * &a[n - 1]), 1);
    coeffs[0] = al.add(&coeffs[0], &extra);
    Ok(FxaT { n, coeffs })
}

/// Leading coefficient `∏_{i<k} (k − i)^{2d}` of `H(a, T)`.
pub fn expected_h_lc(n: usize, d: usize) -> BigInt {
    let mut acc = BigInt::one();
    for k in 1..=n {
        for i in 1..k {
            acc *= BigInt::from(k - i).pow(2 * d as u32);
        }
    }
    acc
}

/// `H(a, T) = N_{F/ℚ}(disc_X f(X; a, T))`, with the degree and leading
/// coefficient checked.
pub fn compute_h(n: usize, base: &Base, a: &[BigInt]) -> Result<IntPoly, ConstructionError> {
    let f = build_f(n, base, a)?;
    let d = base.degree();
    let h = match base.rational_alpha() {
        Some(alpha) => {
            let fx = f.at_alpha(&alpha);
            discriminant(&PolyRing::new(zt()), &fx)?
        }
        None => {
            let al = at();
            let fx = PolyRing::new(al.clone()).from_coeffs(f.coeffs.clone());
            let disc = discriminant(&PolyRing::new(al.clone()), &fx)?;
            let m: Poly<Poly<BigInt>> = al.from_coeffs(base.min_poly.coeffs().iter().map(|c| zt().constant(c.clone())).collect());
            resultant(&al, &m, &disc)?
        }
    };
    if h.is_zero() {
        return Err(ConstructionError::Degenerate("H(a, T) vanishes identically".into()));
    }
    let want_deg = d * n * (n - 1);
    if h.degree() != Some(want_deg) {
        return Err(ConstructionError::Verification(format!(
            "deg_T H = {:?}, expected {want_deg}",
            h.degree()
        )));
    }
    if h.lc().unwrap() != &expected_h_lc(n, d) {
        return Err(ConstructionError::Verification(format!(
            "leading coefficient of H is {}, expected {}",
            h.lc().unwrap(),
            expected_h_lc(n, d)
        )));
    }
    Ok(h)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rejection {
    NotSeparableMod(u64),
    Degenerate,
    Reducible,
    NotPrimitive,
    FixedPrimeDivisor(u64),
    RepeatedConjugates,
}

/// Conditions on `a`; returns `H(a, T)` or the first failed condition.
pub fn check_a(n: usize, base: &Base, a: &[BigInt]) -> Result<Result<IntPoly, Rejection>, ConstructionError> {
    let (c, _) = build_c_and_p(n, base.degree())?;
    if a.len() != n {
        return Err(ConstructionError::Input(format!("a has {} entries, expected n = {n}", a.len())));
    }
    // Xⁿ + Σ c_i a_i X^{n−i} must be separable modulo every p | P
    let mut g = vec![BigInt::zero(); n + 1];
    g[n] = BigInt::one();
    for i in 1..=n {
        g[n - i] = &c[i - 1] * &a[i - 1];
    }
    let g = Poly::from_vec(g);
    for p in primes_up_to((base.degree() * n * (n - 1)) as u64) {
        let fp = PrimeField::new(p);
        if !is_squarefree_mod(&PolyRing::new(fp), &fp.reduce_poly(&g))? {
            return Ok(Err(Rejection::NotSeparableMod(p)));
        }
    }
    let h = match compute_h(n, base, a) {
        Ok(h) => h,
        Err(ConstructionError::Degenerate(_)) => return Ok(Err(Rejection::Degenerate)),
        Err(e) => return Err(e),
    };
    if !content_and_primitive(&h)?.0.is_one() {
        return Ok(Err(Rejection::NotPrimitive));
    }
    if !irreducible_over_q(&h)?.is_irreducible() {
        return Ok(Err(Rejection::Reducible));
    }
    let deg = h.degree().unwrap() as u64;
    for l in primes_up_to(deg) {
        let bl = BigInt::from(l);
        if (0..l).all(|t| h.eval_int(&BigInt::from(t)).is_multiple_of(&bl)) {
            return Ok(Err(Rejection::FixedPrimeDivisor(l)));
        }
    }
    if base.degree() > 1 && !PolyRing::new(crate::exact::Rationals).is_squarefree(&crate::exact::sturm::to_rational_poly(&h)) {
        return Ok(Err(Rejection::RepeatedConjugates));
    }
    Ok(Ok(h))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelectedA {
    pub a: Vec<BigInt>,
    pub h: IntPoly,
    /// Vectors examined, including the accepted one.
    pub tried: u64,
}

/// Vectors in `[−b, b]ⁿ` ordered by `(|a_1|, …, |a_n|)` and then by sign
/// pattern, non-negative entries first.
pub fn a_box_order(n: usize, b: i64) -> Vec<Vec<i64>> {
    let side = (2 * b + 1) as usize;
    let total = side.pow(n as u32);
    let mut out: Vec<Vec<i64>> = (0..total)
        .map(|mut idx| {
            (0..n)
                .map(|_| {
                    let v = (idx % side) as i64 - b;
                    idx /= side;
                    v
                })
                .collect()
        })
        .collect();
    out.sort_by_key(|a| (a.iter().map(|x| x.abs()).collect::<Vec<_>>(), a.iter().map(|&x| x < 0).collect::<Vec<_>>()));
    out
}

/// A prime `p | P` modulo which `Xⁿ + Σ c_i a_i X^{n−i}` is inseparable for
/// every residue vector `a mod p`, if one exists. Primes with `pⁿ > 10⁶`
/// are not examined.
pub fn separability_obstruction(n: usize, d: usize) -> Result<Option<u64>, ConstructionError> {
    let (c, _) = build_c_and_p(n, d)?;
    for p in primes_up_to((d * n * (n - 1)) as u64) {
        if (p as f64).powi(n as i32) > 1e6 {
            continue;
        }
        let fp = PrimeField::new(p);
        let ring = PolyRing::new(fp);
        let cp: Vec<u64> = c.iter().map(|x| fp.reduce(x)).collect();
        let total = p.pow(n as u32);
        let mut separable = false;
        for mut idx in 0..total {
            let mut g = vec![0u64; n + 1];
            g[n] = 1;
            for i in 1..=n {
                g[n - i] = cp[i - 1] * (idx % p) % p;
                idx /= p;
            }
            if is_squarefree_mod(&ring, &ring.from_coeffs(g))? {
                separable = true;
                break;
            }
        }
        if !separable {
            return Ok(Some(p));
        }
    }
    Ok(None)
}

pub fn select_a(params: &SchinzelParams) -> Result<SelectedA, ConstructionError> {
    if params.a_box < 0 {
        return Err(ConstructionError::Input("a-box size must be non-negative".into()));
    }
    if let Some(p) = separability_obstruction(params.n, params.base.degree())? {
        return Err(ConstructionError::not_found(
            "select_a",
            format!(
                "the reduction of X^n + sum c_i a_i X^(n-i) modulo {p} is inseparable for every a (all residues mod {p} checked), \
                 so no a is admissible and {p} divides H(a, t) for every t"
            ),
        ));
    }
    let mut tried = 0;
    for a in a_box_order(params.n, params.a_box) {
        tried += 1;
        let a: Vec<BigInt> = a.into_iter().map(BigInt::from).collect();
        if let Ok(h) = check_a(params.n, &params.base, &a)? {
            return Ok(SelectedA { a, h, tried });
        }
    }
    Err(ConstructionError::not_found(
        "select_a",
        format!("no admissible a in [-{0}, {0}]^{1} ({tried} vectors tried)", params.a_box, params.n),
    ))
}

/// Empirical congruence condition `t ≡ u (mod v)` for `u` in `residues`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertModulus {
    pub v: u64,
    /// `{0}` when `v = 1`.
    pub residues: Vec<u64>,
    /// `(u, certified, sampled)` for every unit `u` with `H(a, u) ≢ 0`.
    pub confidence: Vec<(u64, usize, usize)>,
}

impl HilbertModulus {
    pub fn admits(&self, t: u64) -> bool {
        self.v <= 1 || self.residues.binary_search(&(t % self.v)).is_ok()
    }
}

fn is_squarefree_int(v: u64) -> bool {
    let mut d = 2;
    while d * d <= v {
        if v.is_multiple_of(d * d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Tries the candidate moduli in order and returns the first whose residue
/// set is nonempty. A residue is kept when `H(a, u) ≢ 0 (mod v)` and at least
/// half of the sampled `t = u + j v` give certified `S_n`-polynomials.
pub fn hilbert_modulus(
    n: usize,
    base: &Base,
    a: &[BigInt],
    candidates: &[u64],
    samples: usize,
) -> Result<HilbertModulus, ConstructionError> {
    let Some(alpha) = base.rational_alpha() else {
        return Err(ConstructionError::Unsupported("Hilbert modulus over a base of degree > 1".into()));
    };
    let h = compute_h(n, base, a)?;
    let f = build_f(n, base, a)?;
    for &v in candidates {
        if v == 0 || !is_squarefree_int(v) {
            return Err(ConstructionError::Input(format!("modulus {v} is not a positive squarefree integer")));
        }
        if v == 1 {
            return Ok(HilbertModulus { v, residues: vec![0], confidence: Vec::new() });
        }
        let bv = BigInt::from(v);
        let mut residues = Vec::new();
        let mut confidence = Vec::new();
        for u in (1..v).filter(|&u| u.gcd(&v) == 1) {
            if h.eval_int(&BigInt::from(u)).is_multiple_of(&bv) {
                continue;
            }
            let ok = (1..=samples as u64)
                .filter(|j| {
                    let ft = f.specialize(&alpha, &BigInt::from(u + j * v));
                    matches!(galois_certify(&ft, DEFAULT_PRIME_BUDGET), Ok(c) if c.status == GaloisStatus::CertifiedSn)
                })
                .count();
            confidence.push((u, ok, samples));
            if 2 * ok >= samples {
                residues.push(u);
            }
        }
        if !residues.is_empty() {
            return Ok(HilbertModulus { v, residues, confidence });
        }
    }
    Err(ConstructionError::not_found("hilbert_modulus", "no candidate modulus admits a residue"))
}

#[derive(Clone, Debug)]
pub struct SchinzelParams {
    pub n: usize,
    pub base: Base,
    pub a_box: i64,
    pub t_min: u64,
    pub t_max: u64,
    pub prime_budget: usize,
    pub factor_bound: u64,
    pub require_proven: bool,
    /// Allows bases of degree > 1.
    pub experimental: bool,
    pub modulus: Option<HilbertModulus>,
}

impl SchinzelParams {
    pub fn new(n: usize) -> Self {
        SchinzelParams {
            n,
            base: Base::rationals(),
            a_box: 3,
            t_min: 1,
            t_max: 100_000,
            prime_budget: DEFAULT_PRIME_BUDGET,
            factor_bound: DEFAULT_FACTOR_BOUND,
            require_proven: false,
            experimental: false,
            modulus: None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SchinzelInstance {
    pub n: usize,
    pub d: usize,
    pub a: Vec<BigInt>,
    pub t: u64,
    pub c: Vec<BigInt>,
    pub p_const: BigInt,
    pub h_poly: IntPoly,
    pub h_value: BigInt,
    pub primality: Primality,
    /// `f(X; a, t)`; absent for bases of degree > 1.
    pub f: Option<IntPoly>,
    pub galois: Option<GaloisCertificate>,
    pub ramification: Option<RamificationReport>,
    pub modulus: Option<(u64, u64)>,
    pub stats: ScanStats,
    pub experimental: bool,
}

struct Accepted {
    h: BigInt,
    primality: Primality,
    f: Option<IntPoly>,
    galois: Option<GaloisCertificate>,
    ramification: Option<RamificationReport>,
}

pub fn schinzel_search(params: &SchinzelParams, a_override: Option<&[BigInt]>) -> Result<SchinzelInstance, ConstructionError> {
    let n = params.n;
    let d = params.base.degree();
    if d > 1 && !params.experimental {
        return Err(ConstructionError::Unsupported("bases of degree > 1 need the experimental flag".into()));
    }
    let (a, h) = match a_override {
        Some(a) => match check_a(n, &params.base, a)? {
            Ok(h) => (a.to_vec(), h),
            Err(why) => return Err(ConstructionError::Input(format!("a = {a:?} rejected: {why:?}"))),
        },
        None => {
            let s = select_a(params)?;
            (s.a, s.h)
        }
    };
    let (c, p_const) = build_c_and_p(n, d)?;
    let f = build_f(n, &params.base, &a)?;
    let alpha = params.base.rational_alpha();
    if params.t_min > params.t_max {
        return Err(ConstructionError::not_found("schinzel_search", "empty t range"));
    }
    let accept = |t: u64| -> Option<Accepted> {
        if params.modulus.as_ref().is_some_and(|m| !m.admits(t)) {
            return None;
        }
        let hv = h.eval_int(&BigInt::from(t));
        if hv <= BigInt::one() {
            return None;
        }
        let primality = is_probable_prime(&hv).ok()?;
        if primality == Primality::Composite || (params.require_proven && primality != Primality::Prime) {
            return None;
        }
        let Some(alpha) = &alpha else {
            return Some(Accepted { h: hv, primality, f: None, galois: None, ramification: None });
        };
        let ft = f.specialize(alpha, &BigInt::from(t));
        if real_root_count(&ft) != n {
            return None;
        }
        let g = galois_certify(&ft, params.prime_budget).ok()?;
        if g.status != GaloisStatus::CertifiedSn {
            return None;
        }
        let r = ramified_primes(&ft, params.factor_bound).ok()?;
        if !r.is_complete() || r.ramified() != vec![&hv] {
            return None;
        }
        Some(Accepted { h: hv, primality, f: Some(ft), galois: Some(g), ramification: Some(r) })
    };
    let hit = crate::par::find_first(params.t_min, params.t_max + 1, 64, accept, |_| true);
    let Some((t, acc)) = hit else {
        return Err(ConstructionError::not_found(
            "schinzel_search",
            format!("no t in [{}, {}] accepted ({} values scanned)", params.t_min, params.t_max, params.t_max - params.t_min + 1),
        ));
    };
    let modulus = params.modulus.as_ref().filter(|m| m.v > 1).map(|m| (t % m.v, m.v));
    Ok(SchinzelInstance {
        n,
        d,
        a,
        t,
        c,
        p_const,
        h_poly: h,
        h_value: acc.h,
        primality: acc.primality,
        f: acc.f,
        galois: acc.galois,
        ramification: acc.ramification,
        modulus,
        stats: ScanStats { scanned: t - params.t_min + 1, range: (params.t_min, params.t_max) },
        experimental: d > 1,
    })
}

impl SchinzelInstance {
    /// Recomputes every claim from `(n, base, a, t)`.
    pub fn verify(&self, base: &Base) -> Result<(), ConstructionError> {
        let fail = |m: &str| Err(ConstructionError::Verification(format!("schinzel instance: {m}")));
        let (c, p) = build_c_and_p(self.n, base.degree())?;
        if c != self.c || p != self.p_const {
            return fail("c_i or P differ");
        }
        let h = compute_h(self.n, base, &self.a)?;
        if h != self.h_poly {
            return fail("H(a, T) differs");
        }
        let tv = BigInt::from(self.t);
        if h.eval_int(&tv) != self.h_value {
            return fail("H(a, t) differs");
        }
        if is_probable_prime(&self.h_value)? != self.primality || !self.primality.is_prime_like() {
            return fail("primality of H(a, t)");
        }
        let Some(alpha) = base.rational_alpha() else {
            return Ok(());
        };
        let f = build_f(self.n, base, &self.a)?.specialize(&alpha, &tv);
        if self.f.as_ref() != Some(&f) {
            return fail("f(X; a, t) differs");
        }
        if discriminant(&zt(), &f)? != self.h_value {
            return fail("disc f(X; a, t) differs from H(a, t)");
        }
        match &self.galois {
            Some(g) if g.status == GaloisStatus::CertifiedSn && g.recheck(&f) => {}
            _ => return fail("Galois certificate"),
        }
        match &self.ramification {
            Some(r) if r.recheck(&f) && r.ramified() == vec![&self.h_value] && r.is_complete() => {}
            _ => return fail("ramification report"),
        }
        if real_root_count(&f) != self.n {
            return fail("not all roots real");
        }
        if let Some((u, v)) = self.modulus {
            if self.t % v != u {
                return fail("congruence");
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn c_and_p_examples() {
        assert_eq!(build_c_and_p(2, 1).unwrap(), (ints(&[-3, 2]), BigInt::from(2)));
        assert_eq!(build_c_and_p(3, 1).unwrap(), (ints(&[-6, 11, -6]), BigInt::from(30)));
        assert_eq!(build_c_and_p(2, 2).unwrap().1, BigInt::from(6));
        assert!(build_c_and_p(1, 1).is_err());
    }

    #[test]
    fn f_and_h_for_n2() {
        let q = Base::rationals();
        let f = build_f(2, &q, &ints(&[1, -1])).unwrap();
        let fx = f.at_alpha(&BigInt::one());
        // X² − 3(T+1)X + 2T² − 4
        assert_eq!(fx.coeffs()[0], Poly::from_i64s(&[-4, 0, 2]));
        assert_eq!(fx.coeffs()[1], Poly::from_i64s(&[-3, -3]));
        assert_eq!(compute_h(2, &q, &ints(&[1, -1])).unwrap(), Poly::from_i64s(&[25, 18, 1]));
        assert_eq!(compute_h(2, &q, &ints(&[1, 1])).unwrap(), Poly::from_i64s(&[-7, 18, 1]));
        assert_eq!(compute_h(3, &q, &ints(&[1, 0, 2])).unwrap().degree(), Some(6));
        let f3 = build_f(3, &q, &ints(&[0, 0, 0])).unwrap();
        assert_eq!(f3.specialize(&BigInt::one(), &BigInt::one()), Poly::from_i64s(&[-6, 11, -6, 1]));
    }

    #[test]
    fn degenerate_a_is_reported() {
        // a = 0 gives f(X; 0, T) = ∏ (X − iT), still with nonzero discriminant
        let q = Base::rationals();
        assert!(compute_h(2, &q, &ints(&[0, 0])).is_ok());
        assert!(build_f(2, &q, &ints(&[1])).is_err());
    }

    #[test]
    fn a_selection_examples() {
        let q = Base::rationals();
        assert!(check_a(2, &q, &ints(&[1, -1])).unwrap().is_ok());
        assert_eq!(check_a(2, &q, &ints(&[0, 1])).unwrap(), Err(Rejection::NotSeparableMod(2)));
        assert!(check_a(2, &q, &ints(&[1, 1])).unwrap().is_ok());
        let s = select_a(&SchinzelParams::new(2)).unwrap();
        assert_eq!(s.a, ints(&[1, 0]));
    }

    #[test]
    fn mod_2_obstruction_for_n_at_least_3() {
        assert_eq!(separability_obstruction(2, 1).unwrap(), None);
        for n in 3..=6 {
            assert_eq!(separability_obstruction(n, 1).unwrap(), Some(2), "n = {n}");
        }
        // every value H(a, t) is even
        let q = Base::rationals();
        let h = compute_h(3, &q, &ints(&[1, 2, -1])).unwrap();
        for t in 0..40 {
            assert!(h.eval_int(&BigInt::from(t)).is_even());
        }
        assert!(matches!(select_a(&SchinzelParams::new(3)), Err(ConstructionError::NotFound { .. })));
    }

    #[test]
    fn box_order_starts_with_small_entries() {
        let o = a_box_order(2, 1);
        assert_eq!(o[0], vec![0, 0]);
        assert_eq!(o[1], vec![0, 1]);
        assert_eq!(o[2], vec![0, -1]);
        assert_eq!(o[3], vec![1, 0]);
        assert_eq!(o.len(), 9);
    }

    #[test]
    fn n2_search() {
        let mut p = SchinzelParams::new(2);
        p.t_min = 0;
        p.t_max = 10;
        let inst = schinzel_search(&p, Some(&ints(&[1, -1]))).unwrap();
        assert_eq!(inst.t, 4);
        assert_eq!(inst.h_value, BigInt::from(113));
        assert_eq!(inst.f.as_ref().unwrap(), &Poly::from_i64s(&[28, -15, 1]));
        inst.verify(&Base::rationals()).unwrap();
        p.t_min = 5;
        p.t_max = 4;
        assert!(matches!(schinzel_search(&p, Some(&ints(&[1, -1]))), Err(ConstructionError::NotFound { .. })));
    }

    #[test]
    fn hilbert_modulus_examples() {
        let q = Base::rationals();
        let a = ints(&[1, -1]);
        assert_eq!(hilbert_modulus(2, &q, &a, &[3], 8).unwrap().residues, vec![1, 2]);
        assert_eq!(hilbert_modulus(2, &q, &a, &[5], 8).unwrap().residues, vec![1, 3, 4]);
        assert_eq!(hilbert_modulus(2, &q, &a, &[1], 8).unwrap().residues, vec![0]);
        assert!(hilbert_modulus(2, &q, &a, &[4], 8).is_err());
    }

    #[test]
    fn quadratic_base_h_has_expected_shape() {
        // ℚ(√2)
        let base = Base::new(Poly::from_i64s(&[-2, 0, 1])).unwrap();
        let h = compute_h(2, &base, &ints(&[1, -1])).unwrap();
        assert_eq!(h.degree(), Some(4));
        assert_eq!(h.lc().unwrap(), &BigInt::one());
        // norm of D(α, t) = D(√2, t) D(−√2, t) at t = 0: D = 9 − 4(−4·… ) evaluated directly
        let f = build_f(2, &base, &ints(&[1, -1])).unwrap();
        let at = |alpha: i64, t: i64| {
            let g = f.specialize(&BigInt::from(alpha), &BigInt::from(t));
            discriminant(&zt(), &g).unwrap()
        };
        // (x + y√2)(x − y√2) from the values at α = ±√2 is checked through the
        // symmetric functions: D(α) is linear in α here
        let d0 = at(0, 3);
        let d1 = at(1, 3);
        let lin = &d1 - &d0;
        assert_eq!(h.eval_int(&BigInt::from(3)), &d0 * &d0 - BigInt::from(2) * &lin * &lin);
    }
}

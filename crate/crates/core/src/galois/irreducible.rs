//! Irreducibility and factorization over ℚ.
//!
//! Cheap path: a prime `p ∤ lc·disc` with `f mod p` irreducible. Otherwise
//! Zassenhaus: Hensel-lift a factorization mod `p` past the coefficient bound
//! and recombine lifted factors by subsets of increasing size.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::exact::factor::factor_mod;
use crate::exact::integer::primes_up_to;
use crate::exact::{
    content_and_primitive, cycle_type, discriminant, Integers, IntPoly, Poly, PolyRing, PrimeField, Rationals, Ring,
};

use super::GaloisError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IrreducibilityMethod {
    ModPIrreducible,
    ZassenhausComplete,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrreducibilityCertificate {
    pub method: IrreducibilityMethod,
    /// The witness prime, or the prime used for lifting.
    pub prime: u64,
    /// Degrees of the factors of `f mod prime`.
    pub pattern: Vec<usize>,
}

impl IrreducibilityCertificate {
    /// Re-checks the mod-p part of the certificate. For the Zassenhaus method
    /// only the recorded pattern is re-derived.
    pub fn recheck(&self, f: &IntPoly) -> bool {
        let Some(n) = f.degree() else { return false };
        let fp = PrimeField::new(self.prime);
        if fp.reduce(f.lc().unwrap()) == 0 {
            return false;
        }
        let g = fp.reduce_poly(f);
        let Ok(fac) = factor_mod(&PolyRing::new(fp), &g, 0) else { return false };
        let pat = fac.degree_pattern();
        match self.method {
            IrreducibilityMethod::ModPIrreducible => pat == vec![n] && self.pattern == pat,
            IrreducibilityMethod::ZassenhausComplete => self.pattern == pat,
        }
    }
}

/// `content · ∏ factor^multiplicity`, factors primitive with positive leading
/// coefficient, sorted by degree then coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QFactorization {
    pub content: BigInt,
    pub factors: Vec<(IntPoly, usize)>,
}

impl QFactorization {
    pub fn expand(&self) -> IntPoly {
        let zx = PolyRing::new(Integers);
        let mut acc = zx.constant(self.content.clone());
        for (g, m) in &self.factors {
            acc = zx.mul(&acc, &zx.pow(g, *m as u64));
        }
        acc
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Irreducibility {
    Irreducible(IrreducibilityCertificate),
    Reducible(QFactorization),
}

impl Irreducibility {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, Irreducibility::Irreducible(_))
    }
}

const FAST_PRIMES: usize = 64;
const LIFT_CANDIDATES: usize = 8;

pub fn irreducible_over_q(f: &IntPoly) -> Result<Irreducibility, GaloisError> {
    let n = match f.degree() {
        None => return Err(GaloisError::Input("zero polynomial".into())),
        Some(0) => return Err(GaloisError::Input("constant polynomial".into())),
        Some(n) => n,
    };
    let (_, g) = content_and_primitive(f)?;
    let zx = PolyRing::new(Integers);
    let disc = discriminant(&zx, &g)?;
    if disc.is_zero() {
        let fac = factor_over_q(f)?;
        return Ok(Irreducibility::Reducible(fac));
    }
    if n == 1 {
        let p = good_primes(g.lc().unwrap(), &disc).next().unwrap();
        return Ok(Irreducibility::Irreducible(IrreducibilityCertificate {
            method: IrreducibilityMethod::ModPIrreducible,
            prime: p,
            pattern: vec![1],
        }));
    }
    let mut best: Option<(u64, Vec<usize>)> = None;
    for (i, p) in good_primes(g.lc().unwrap(), &disc).take(FAST_PRIMES).enumerate() {
        let fp = PrimeField::new(p);
        let pat = cycle_type(&PolyRing::new(fp), &fp.reduce_poly(&g)).expect("good prime");
        if pat.len() == 1 {
            return Ok(Irreducibility::Irreducible(IrreducibilityCertificate {
                method: IrreducibilityMethod::ModPIrreducible,
                prime: p,
                pattern: pat,
            }));
        }
        if i < LIFT_CANDIDATES && best.as_ref().is_none_or(|(_, b)| pat.len() < b.len()) {
            best = Some((p, pat));
        }
    }
    let (p, pat) = best.unwrap();
    let parts = zassenhaus(&g, p);
    if parts.len() == 1 {
        return Ok(Irreducibility::Irreducible(IrreducibilityCertificate {
            method: IrreducibilityMethod::ZassenhausComplete,
            prime: p,
            pattern: pat,
        }));
    }
    Ok(Irreducibility::Reducible(factor_over_q(f)?))
}

/// Primes not dividing `lc · disc`, ascending.
fn good_primes<'a>(lc: &'a BigInt, disc: &'a BigInt) -> impl Iterator<Item = u64> + 'a {
    let mut limit = 1u64 << 10;
    let mut done = 0u64;
    std::iter::from_fn(move || loop {
        let ps: Vec<u64> = primes_up_to(limit).into_iter().filter(|&p| p > done).collect();
        done = limit;
        limit *= 4;
        if !ps.is_empty() {
            return Some(ps);
        }
    })
    .flatten()
    .filter(move |&p| {
        let bp = BigInt::from(p);
        !(lc % &bp).is_zero() && !(disc % &bp).is_zero()
    })
}

/// Complete factorization over ℚ of a nonzero integer polynomial.
pub fn factor_over_q(f: &IntPoly) -> Result<QFactorization, GaloisError> {
    if f.is_zero() {
        return Err(GaloisError::Input("zero polynomial".into()));
    }
    let (mut content, prim) = content_and_primitive(f)?;
    let prim = if prim.lc().unwrap().is_negative() {
        content = -content;
        PolyRing::new(Integers).neg(&prim)
    } else {
        prim
    };
    let mut factors = Vec::new();
    for (part, mult) in squarefree_over_q(&prim) {
        if part.degree() == Some(0) {
            continue;
        }
        for g in zassenhaus_any(&part) {
            factors.push((g, mult));
        }
    }
    factors.sort_by(|(a, _), (b, _)| a.degree().cmp(&b.degree()).then_with(|| a.coeffs().cmp(b.coeffs())));
    Ok(QFactorization { content, factors })
}

fn zassenhaus_any(g: &IntPoly) -> Vec<IntPoly> {
    if g.degree() == Some(1) {
        return vec![g.clone()];
    }
    let zx = PolyRing::new(Integers);
    let disc = discriminant(&zx, g).expect("degree >= 2");
    let mut best: Option<(u64, usize)> = None;
    for p in good_primes(g.lc().unwrap(), &disc).take(LIFT_CANDIDATES) {
        let fp = PrimeField::new(p);
        let k = cycle_type(&PolyRing::new(fp), &fp.reduce_poly(g)).unwrap().len();
        if best.is_none_or(|(_, b)| k < b) {
            best = Some((p, k));
        }
    }
    zassenhaus(g, best.unwrap().0)
}

/// Yun's squarefree decomposition over ℚ, returned as primitive integer
/// polynomials with positive leading coefficient.
fn squarefree_over_q(f: &IntPoly) -> Vec<(IntPoly, usize)> {
    let qx = PolyRing::new(Rationals);
    let fq = Poly::from_vec(f.coeffs().iter().map(|c| BigRational::from_integer(c.clone())).collect());
    let mut out = Vec::new();
    let d = qx.derivative(&fq);
    let a0 = qx.gcd(&fq, &d);
    let mut b = qx.div_rem(&fq, &a0).0;
    let mut c = qx.div_rem(&d, &a0).0;
    let mut dd = qx.sub(&c, &qx.derivative(&b));
    let mut i = 1;
    while b.degree().unwrap_or(0) > 0 {
        let a = qx.gcd(&b, &dd);
        if a.degree().unwrap_or(0) > 0 {
            out.push((to_primitive(&a), i));
        }
        b = qx.div_rem(&b, &a).0;
        c = qx.div_rem(&dd, &a).0;
        dd = qx.sub(&c, &qx.derivative(&b));
        i += 1;
    }
    out
}

fn to_primitive(f: &Poly<BigRational>) -> IntPoly {
    let den = f.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = f.coeffs().iter().map(|c| (c * &den).to_integer()).collect();
    let (_, p) = content_and_primitive(&Poly::from_vec(ints)).unwrap();
    if p.lc().unwrap().is_negative() {
        PolyRing::new(Integers).neg(&p)
    } else {
        p
    }
}

// Dense arithmetic modulo m on lowest-first coefficient vectors.

fn trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn md(v: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    trim(v.iter().map(|c| c.mod_floor(m)).collect())
}

fn add_m(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    md(&(0..n).map(|i| a.get(i).unwrap_or(&z) + b.get(i).unwrap_or(&z)).collect::<Vec<_>>(), m)
}

fn sub_m(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    md(&(0..n).map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z)).collect::<Vec<_>>(), m)
}

fn mul_m(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    md(&out, m)
}

fn scale_m(a: &[BigInt], c: &BigInt, m: &BigInt) -> Vec<BigInt> {
    md(&a.iter().map(|x| x * c).collect::<Vec<_>>(), m)
}

/// Division by a monic `b` modulo `m`.
fn divrem_monic(a: &[BigInt], b: &[BigInt], m: &BigInt) -> (Vec<BigInt>, Vec<BigInt>) {
    let db = b.len() - 1;
    let mut r = md(a, m);
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![BigInt::zero(); r.len() - db];
    for k in (0..q.len()).rev() {
        let c = r[k + db].mod_floor(m);
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            r[k + j] = (&r[k + j] - &c * bj).mod_floor(m);
        }
        q[k] = c;
    }
    (trim(q), trim(r))
}

fn inv_mod(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.mod_floor(m).extended_gcd(m);
    assert!(e.gcd.is_one(), "not invertible");
    e.x.mod_floor(m)
}

/// One quadratic Hensel step: from `f ≡ g h`, `s g + t h ≡ 1 (mod m)` with `h`
/// monic to the same relations modulo `m²`.
#[allow(clippy::type_complexity)]
fn hensel_step(
    f: &[BigInt],
    g: &[BigInt],
    h: &[BigInt],
    s: &[BigInt],
    t: &[BigInt],
    m: &BigInt,
) -> (Vec<BigInt>, Vec<BigInt>, Vec<BigInt>, Vec<BigInt>) {
    let m2 = m * m;
    let e = sub_m(f, &mul_m(g, h, &m2), &m2);
    let (q, r) = divrem_monic(&mul_m(s, &e, &m2), h, &m2);
    let g2 = add_m(&add_m(g, &mul_m(t, &e, &m2), &m2), &mul_m(&q, g, &m2), &m2);
    let h2 = add_m(h, &r, &m2);
    let one = vec![BigInt::one()];
    let b = sub_m(&add_m(&mul_m(s, &g2, &m2), &mul_m(t, &h2, &m2), &m2), &one, &m2);
    let (c, d) = divrem_monic(&mul_m(s, &b, &m2), &h2, &m2);
    let s2 = sub_m(s, &d, &m2);
    let t2 = sub_m(&sub_m(t, &mul_m(t, &b, &m2), &m2), &mul_m(&c, &g2, &m2), &m2);
    (g2, h2, s2, t2)
}

/// Lifts `f ≡ lc(f) ∏ u_i (mod p)` to monic factors modulo `p^(2^steps)`.
fn multifactor_lift(f: &[BigInt], factors: &[Vec<BigInt>], p: u64, steps: u32) -> Vec<Vec<BigInt>> {
    let bp = BigInt::from(p);
    let mut big_m = bp.clone();
    for _ in 0..steps {
        big_m = &big_m * &big_m;
    }
    if factors.len() == 1 {
        let inv = inv_mod(f.last().unwrap(), &big_m);
        return vec![scale_m(f, &inv, &big_m)];
    }
    let (left, right) = factors.split_at(factors.len() / 2);
    let prod = |fs: &[Vec<BigInt>]| fs.iter().fold(vec![BigInt::one()], |acc, u| mul_m(&acc, u, &bp));
    let g0 = scale_m(&prod(left), f.last().unwrap(), &bp);
    let h0 = prod(right);

    let fp = PrimeField::new(p);
    let ring = PolyRing::new(fp);
    let to_fp = |v: &[BigInt]| Poly::from_vec(v.iter().map(|c| fp.reduce(c)).collect::<Vec<u64>>());
    let (_, s0, _) = ring.ext_gcd(&to_fp(&g0), &to_fp(&h0));
    let s0 = ring.rem(&s0, &to_fp(&h0));
    let t0 = ring.div_rem(&ring.sub(&ring.one(), &ring.mul(&s0, &to_fp(&g0))), &to_fp(&h0)).0;
    let from_fp = |q: &Poly<u64>| trim(q.coeffs().iter().map(|&c| BigInt::from(c)).collect());

    let (mut g, mut h, mut s, mut t) = (g0, h0, from_fp(&s0), from_fp(&t0));
    let mut m = bp.clone();
    for _ in 0..steps {
        (g, h, s, t) = hensel_step(f, &g, &h, &s, &t, &m);
        m = &m * &m;
    }
    let mut out = multifactor_lift(&g, left, p, steps);
    out.extend(multifactor_lift(&h, right, p, steps));
    out
}

fn symmetric(v: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let half = m / 2;
    trim(v.iter().map(|c| {
        let r = c.mod_floor(m);
        if r > half { r - m } else { r }
    })
    .collect())
}

fn norm1(v: &[BigInt]) -> BigInt {
    v.iter().map(|c| c.abs()).sum()
}

/// Irreducible factors over ℤ of a primitive squarefree `f` with positive
/// leading coefficient; `p` must not divide `lc(f) · disc(f)`.
pub(crate) fn zassenhaus(f: &IntPoly, p: u64) -> Vec<IntPoly> {
    let n = f.degree().unwrap();
    let fp = PrimeField::new(p);
    let fac = factor_mod(&PolyRing::new(fp), &fp.reduce_poly(f), 0).expect("nonzero");
    if fac.factors.len() == 1 {
        return vec![f.clone()];
    }
    let mods: Vec<Vec<BigInt>> =
        fac.factors.iter().map(|(u, _)| u.coeffs().iter().map(|&c| BigInt::from(c)).collect()).collect();

    let a = f.coeffs().iter().map(|c| c.abs()).max().unwrap();
    let b = f.lc().unwrap().abs();
    let sqrt = BigInt::from(((n + 1) as f64).sqrt().ceil() as u64);
    let bound = sqrt * (BigInt::one() << n) * &a * &b;
    let bp = BigInt::from(p);
    let mut steps = 0u32;
    let mut big_m = bp.clone();
    while big_m <= &bound * 2 {
        big_m = &big_m * &big_m;
        steps += 1;
    }
    let lifted = multifactor_lift(f.coeffs(), &mods, p, steps);

    let zx = PolyRing::new(Integers);
    use crate::exact::IntegralDomain;
    let mut remaining: Vec<Vec<BigInt>> = lifted;
    let mut cur = f.clone();
    let mut out = Vec::new();
    let mut s = 1;
    while 2 * s <= remaining.len() {
        let mut hit = None;
        for subset in combinations(remaining.len(), s) {
            let lc = cur.lc().unwrap().clone();
            let mut gs = vec![lc.clone()];
            let mut hs = vec![lc.clone()];
            for (i, u) in remaining.iter().enumerate() {
                if subset.contains(&i) {
                    gs = mul_m(&gs, u, &big_m);
                } else {
                    hs = mul_m(&hs, u, &big_m);
                }
            }
            let gs = symmetric(&gs, &big_m);
            let hs = symmetric(&hs, &big_m);
            if norm1(&gs) * norm1(&hs) > bound {
                continue;
            }
            let gp = Poly::from_vec(gs);
            let (_, gp) = content_and_primitive(&gp).unwrap();
            if let Some(q) = zx.div_exact(&cur, &gp) {
                hit = Some((subset, gp, q));
                break;
            }
        }
        match hit {
            Some((subset, g, q)) => {
                out.push(g);
                cur = q;
                remaining = remaining.into_iter().enumerate().filter(|(i, _)| !subset.contains(i)).map(|(_, u)| u).collect();
            }
            None => s += 1,
        }
    }
    out.push(cur);
    out.into_iter()
        .map(|g| if g.lc().unwrap().is_negative() { zx.neg(&g) } else { g })
        .collect()
}

fn combinations(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut idx: Vec<usize> = (0..k).collect();
    let mut first = true;
    std::iter::from_fn(move || {
        if k > n {
            return None;
        }
        if first {
            first = false;
            return Some(idx.clone());
        }
        let mut i = k;
        while i > 0 {
            i -= 1;
            if idx[i] != i + n - k {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                return Some(idx.clone());
            }
        }
        None
    })
}

/// Independent check that a polynomial is irreducible: a mod-p witness among
/// the first primes, or for degree at most 3 the absence of rational roots.
pub fn independent_irreducibility_check(g: &IntPoly) -> bool {
    let Some(n) = g.degree() else { return false };
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    if n <= 3 {
        return rational_roots(g).is_empty();
    }
    let zx = PolyRing::new(Integers);
    let Ok(disc) = discriminant(&zx, g) else { return false };
    if disc.is_zero() {
        return false;
    }
    let found = good_primes(g.lc().unwrap(), &disc).take(200).any(|p| {
        let fp = PrimeField::new(p);
        cycle_type(&PolyRing::new(fp), &fp.reduce_poly(g)).is_some_and(|t| t.len() == 1)
    });
    found
}

/// Rational roots by the rational root theorem; only for small coefficients.
pub fn rational_roots(g: &IntPoly) -> Vec<BigRational> {
    let divisors = |x: &BigInt| -> Vec<BigInt> {
        let x = x.abs().to_u64().expect("small coefficient");
        (1..=x).filter(|d| x.is_multiple_of(*d)).map(BigInt::from).collect()
    };
    let c0 = g.coeffs().iter().position(|c| !c.is_zero()).unwrap();
    let mut roots = Vec::new();
    if c0 > 0 {
        roots.push(BigRational::zero());
    }
    let shifted = Poly::from_vec(g.coeffs()[c0..].to_vec());
    if shifted.degree() == Some(0) {
        return roots;
    }
    let qx = PolyRing::new(Rationals);
    let gq = Poly::from_vec(shifted.coeffs().iter().map(|c| BigRational::from_integer(c.clone())).collect());
    for num in divisors(&shifted.coeffs()[0]) {
        for den in divisors(shifted.lc().unwrap()) {
            for sign in [1, -1] {
                let r = BigRational::new(&num * sign, den.clone());
                if qx.eval(&gq, &r).is_zero() && !roots.contains(&r) {
                    roots.push(r);
                }
            }
        }
    }
    roots
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        Poly::from_i64s(c)
    }

    #[test]
    fn quadratic_examples() {
        // T^2 + 18T + 25
        assert!(irreducible_over_q(&p(&[25, 18, 1])).unwrap().is_irreducible());
        match irreducible_over_q(&p(&[1, 0, 1])).unwrap() {
            Irreducibility::Irreducible(c) => {
                assert_eq!(c.prime, 3);
                assert!(c.recheck(&p(&[1, 0, 1])));
            }
            r => panic!("{r:?}"),
        }
        match irreducible_over_q(&p(&[-16, 0, 1])).unwrap() {
            Irreducibility::Reducible(fac) => {
                assert_eq!(fac.factors, vec![(p(&[-4, 1]), 1), (p(&[4, 1]), 1)]);
            }
            r => panic!("{r:?}"),
        }
    }

    #[test]
    fn constant_input_is_rejected() {
        assert!(irreducible_over_q(&p(&[5])).is_err());
        assert!(irreducible_over_q(&p(&[])).is_err());
    }

    #[test]
    fn x4_plus_1_needs_lifting() {
        // reducible modulo every prime, irreducible over ℚ
        match irreducible_over_q(&p(&[1, 0, 0, 0, 1])).unwrap() {
            Irreducibility::Irreducible(c) => {
                assert_eq!(c.method, IrreducibilityMethod::ZassenhausComplete);
                assert!(c.recheck(&p(&[1, 0, 0, 0, 1])));
            }
            r => panic!("{r:?}"),
        }
    }

    #[test]
    fn swinnerton_dyer_and_products() {
        // minimal polynomial of √2 + √3
        assert!(irreducible_over_q(&p(&[1, 0, -10, 0, 1])).unwrap().is_irreducible());
        let zx = PolyRing::new(Integers);
        let f = zx.mul(&zx.mul(&p(&[1, 0, -10, 0, 1]), &p(&[-2, 0, 0, 1])), &p(&[3, 2]));
        let f = zx.mul(&f, &p(&[3, 2]));
        let fac = factor_over_q(&zx.scalar_mul(&f, &BigInt::from(-6))).unwrap();
        assert_eq!(fac.content, BigInt::from(-6));
        assert_eq!(fac.factors.len(), 3);
        assert!(fac.factors.contains(&(p(&[3, 2]), 2)));
        assert_eq!(fac.expand(), zx.scalar_mul(&f, &BigInt::from(-6)));
    }

    #[test]
    fn rational_roots_found() {
        let r = rational_roots(&p(&[-6, 11, -6, 1]));
        assert_eq!(r.len(), 3);
        assert!(rational_roots(&p(&[-2, 0, 0, 1])).is_empty());
    }
}

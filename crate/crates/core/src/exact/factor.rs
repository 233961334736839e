//! Factorization of univariate polynomials over finite fields:
//! squarefree split, distinct-degree split, then Cantor–Zassenhaus
//! equal-degree splitting driven by a seeded generator.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::modular::FiniteField;
use super::poly::{Poly, PolyRing};
use super::ring::Ring;
use super::ExactError;

/// `unit · ∏ factor^multiplicity` with monic irreducible factors, sorted by
/// degree and then coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization<E> {
    pub unit: E,
    pub factors: Vec<(Poly<E>, usize)>,
}

impl<E: Clone> Factorization<E> {
    /// Degrees of the irreducible factors, repeated by multiplicity, descending.
    pub fn degree_pattern(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self
            .factors
            .iter()
            .flat_map(|(f, m)| std::iter::repeat_n(f.degree().unwrap_or(0), *m))
            .collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }
}

/// Full factorization of a nonzero polynomial.
pub fn factor_mod<F>(ring: &PolyRing<F>, f: &Poly<F::Elem>, seed: u64) -> Result<Factorization<F::Elem>, ExactError>
where
    F: FiniteField,
    F::Elem: Ord,
{
    let Some(lc) = f.lc().cloned() else {
        return Err(ExactError::UndefinedInput("factorization of the zero polynomial"));
    };
    let monic = ring.monic(f);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut factors = Vec::new();
    for (sf, mult) in squarefree_decomposition(ring, &monic) {
        for (block, d) in distinct_degree(ring, &sf) {
            for irr in equal_degree(ring, &block, d, &mut rng) {
                factors.push((irr, mult));
            }
        }
    }
    factors.sort_by(|(a, ma), (b, mb)| {
        a.degree().cmp(&b.degree()).then_with(|| a.coeffs().cmp(b.coeffs())).then(ma.cmp(mb))
    });
    Ok(Factorization { unit: lc, factors })
}

/// Squarefree decomposition of a monic polynomial: pairs `(g, i)` with `g`
/// squarefree, pairwise coprime, and `f = ∏ g^i`.
pub fn squarefree_decomposition<F: FiniteField>(ring: &PolyRing<F>, f: &Poly<F::Elem>) -> Vec<(Poly<F::Elem>, usize)> {
    let mut out = Vec::new();
    sff_into(ring, f, 1, &mut out);
    out.sort_by_key(|(_, m)| *m);
    out
}

fn sff_into<F: FiniteField>(ring: &PolyRing<F>, f: &Poly<F::Elem>, scale: usize, out: &mut Vec<(Poly<F::Elem>, usize)>) {
    if f.degree().unwrap_or(0) == 0 {
        return;
    }
    let df = ring.derivative(f);
    if df.is_zero() {
        let root = pth_root_poly(ring, f);
        let p = ring.base().characteristic().to_usize().expect("small characteristic");
        sff_into(ring, &root, scale * p, out);
        return;
    }
    let mut c = ring.gcd(f, &df);
    let mut w = ring.div_rem(f, &c).0;
    let mut i = 1;
    while w.degree().unwrap_or(0) > 0 {
        let y = ring.gcd(&w, &c);
        let fac = ring.div_rem(&w, &y).0;
        if fac.degree().unwrap_or(0) > 0 {
            out.push((fac, i * scale));
        }
        w = y;
        c = ring.div_rem(&c, &w).0;
        i += 1;
    }
    if c.degree().unwrap_or(0) > 0 {
        let root = pth_root_poly(ring, &c);
        let p = ring.base().characteristic().to_usize().expect("small characteristic");
        sff_into(ring, &root, scale * p, out);
    }
}

/// `g` with `g^p = f`, for `f` whose exponents are all multiples of `p`.
fn pth_root_poly<F: FiniteField>(ring: &PolyRing<F>, f: &Poly<F::Elem>) -> Poly<F::Elem> {
    let p = ring.base().characteristic().to_usize().expect("small characteristic");
    let coeffs = f.coeffs().iter().step_by(p).map(|c| ring.base().pth_root(c)).collect();
    ring.from_coeffs(coeffs)
}

/// Splits a squarefree monic polynomial into `(product of all irreducible
/// factors of degree d, d)` blocks.
pub fn distinct_degree<F: FiniteField>(ring: &PolyRing<F>, f: &Poly<F::Elem>) -> Vec<(Poly<F::Elem>, usize)> {
    let q = ring.base().order();
    let mut out = Vec::new();
    let mut rest = f.clone();
    let x = ring.x();
    let mut h = ring.rem(&x, &rest);
    let mut d = 1;
    while rest.degree().unwrap_or(0) >= 2 * d {
        h = ring.powmod(&h, &q, &rest);
        let g = ring.gcd(&rest, &ring.sub(&h, &x));
        if g.degree().unwrap_or(0) > 0 {
            rest = ring.div_rem(&rest, &g).0;
            h = ring.rem(&h, &rest);
            out.push((g, d));
        }
        d += 1;
    }
    if let Some(deg) = rest.degree() {
        if deg > 0 {
            out.push((rest, deg));
        }
    }
    out
}

/// Cantor–Zassenhaus splitting of a product of distinct monic irreducibles of degree `d`.
pub fn equal_degree<F: FiniteField>(
    ring: &PolyRing<F>,
    f: &Poly<F::Elem>,
    d: usize,
    rng: &mut ChaCha8Rng,
) -> Vec<Poly<F::Elem>> {
    let n = f.degree().unwrap_or(0);
    if n == d {
        return vec![f.clone()];
    }
    let base = ring.base();
    let char_two = base.characteristic() == BigUint::from(2u8);
    let q = base.order();
    let half_exp = (q.pow(d as u32) - BigUint::one()) >> 1;
    loop {
        let a = ring.from_coeffs((0..n).map(|_| base.random_elem(rng)).collect());
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let b = if char_two {
            // absolute trace from F_{2^(kd)} down to F_2
            let steps = base.extension_degree() as usize * d;
            let mut t = a.clone();
            let mut acc = a.clone();
            for _ in 1..steps {
                t = ring.mulmod(&t, &t, f);
                acc = ring.add(&acc, &t);
            }
            acc
        } else {
            ring.sub(&ring.powmod(&a, &half_exp, f), &ring.one())
        };
        let g = ring.gcd(f, &b);
        let dg = g.degree().unwrap_or(0);
        if dg > 0 && dg < n {
            let h = ring.div_rem(f, &g).0;
            let mut out = equal_degree(ring, &g, d, rng);
            out.extend(equal_degree(ring, &h, d, rng));
            return out;
        }
    }
}

/// Rabin-style irreducibility test over a finite field.
pub fn is_irreducible<F: FiniteField>(ring: &PolyRing<F>, f: &Poly<F::Elem>) -> bool {
    let Some(n) = f.degree() else {
        return false;
    };
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    let f = ring.monic(f);
    let q = ring.base().order();
    let x = ring.x();
    let frob_iter = |k: usize| {
        let mut h = ring.rem(&x, &f);
        for _ in 0..k {
            h = ring.powmod(&h, &q, &f);
        }
        h
    };
    if ring.sub(&frob_iter(n), &ring.rem(&x, &f)).degree().is_some() {
        return false;
    }
    prime_divisors(n).into_iter().all(|r| {
        let h = frob_iter(n / r);
        ring.gcd(&f, &ring.sub(&h, &x)).degree() == Some(0)
    })
}

/// Frobenius cycle type of a squarefree polynomial: degrees of its irreducible
/// factors, descending. `None` when the polynomial is not squarefree.
pub fn cycle_type<F: FiniteField>(ring: &PolyRing<F>, f: &Poly<F::Elem>) -> Option<Vec<usize>> {
    let f = ring.monic(f);
    if f.degree().unwrap_or(0) == 0 {
        return Some(Vec::new());
    }
    if !ring.is_squarefree(&f) {
        return None;
    }
    let mut out = Vec::new();
    for (block, d) in distinct_degree(ring, &f) {
        let count = block.degree().unwrap() / d;
        out.extend(std::iter::repeat_n(d, count));
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    Some(out)
}

/// `true` iff `gcd(f, f')` is constant; errors when `f` is identically zero.
pub fn is_squarefree_mod<F: FiniteField>(ring: &PolyRing<F>, f: &Poly<F::Elem>) -> Result<bool, ExactError> {
    if f.is_zero() {
        return Err(ExactError::IdenticallyZero);
    }
    Ok(ring.is_squarefree(f))
}

fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::modular::{GaloisField, PrimeField};

    fn fp(p: u64) -> PolyRing<PrimeField> {
        PolyRing::new(PrimeField::new(p))
    }

    /// Brute-force roots of a polynomial over F_p.
    fn roots_brute(p: u64, coeffs: &[u64]) -> Vec<u64> {
        let r = fp(p);
        let f = r.from_coeffs(coeffs.to_vec());
        (0..p).filter(|x| r.eval(&f, x) == 0).collect()
    }

    #[test]
    fn x2_plus_1_mod_5_splits_at_brute_force_roots() {
        let r = fp(5);
        let f = r.from_coeffs(vec![1, 0, 1]);
        assert_eq!(roots_brute(5, &[1, 0, 1]), vec![2, 3]);
        let fac = factor_mod(&r, &f, 0).unwrap();
        assert_eq!(
            fac.factors,
            vec![(r.from_coeffs(vec![2, 1]), 1), (r.from_coeffs(vec![3, 1]), 1)]
        );
    }

    #[test]
    fn x2_plus_1_mod_3_is_irreducible() {
        let r = fp(3);
        let f = r.from_coeffs(vec![1, 0, 1]);
        let fac = factor_mod(&r, &f, 0).unwrap();
        assert_eq!(fac.factors, vec![(f.clone(), 1)]);
        assert!(is_irreducible(&r, &f));
    }

    #[test]
    fn x4_plus_1_mod_2_is_a_fourth_power() {
        let r = fp(2);
        let f = r.from_coeffs(vec![1, 0, 0, 0, 1]);
        let fac = factor_mod(&r, &f, 7).unwrap();
        assert_eq!(fac.factors, vec![(r.from_coeffs(vec![1, 1]), 4)]);
    }

    #[test]
    fn zero_polynomial_is_rejected() {
        let r = fp(2);
        assert!(factor_mod(&r, &r.zero(), 0).is_err());
        assert_eq!(is_squarefree_mod(&r, &r.zero()), Err(ExactError::IdenticallyZero));
    }

    #[test]
    fn squarefree_checks() {
        let r = fp(2);
        assert!(is_squarefree_mod(&r, &r.from_coeffs(vec![0, 1, 1])).unwrap());
        assert!(!is_squarefree_mod(&r, &r.from_coeffs(vec![0, 0, 1])).unwrap());
        let r = fp(113);
        let f = r.from_coeffs(vec![28, 113 - 15, 1]);
        assert!(!is_squarefree_mod(&r, &f).unwrap());
    }

    #[test]
    fn seeds_do_not_change_the_factorization() {
        let r = fp(101);
        // (X-1)(X-2)...(X-6)(X^2+X+1)... built by multiplication
        let mut f = r.one();
        for a in 1..7u64 {
            f = r.mul(&f, &r.from_coeffs(vec![101 - a, 1]));
        }
        let a = factor_mod(&r, &f, 1).unwrap();
        let b = factor_mod(&r, &f, 99).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.factors.len(), 6);
    }

    #[test]
    fn factoring_over_gf8() {
        let k = GaloisField::new(2, 3);
        let r = PolyRing::new(k.clone());
        // X^8 - X splits into all 8 linear factors over F_8
        let mut c = vec![k.zero(); 9];
        c[8] = k.one();
        c[1] = k.one();
        let f = r.from_coeffs(c);
        let fac = factor_mod(&r, &f, 3).unwrap();
        assert_eq!(fac.degree_pattern(), vec![1; 8]);
        assert_eq!(cycle_type(&r, &f), Some(vec![1; 8]));
    }

    #[test]
    fn cycle_type_of_x3_minus_2() {
        // mod 5: X^3 - 2 has the single root 3 and an irreducible quadratic
        let r = fp(5);
        let f = r.from_coeffs(vec![3, 0, 0, 1]);
        assert_eq!(cycle_type(&r, &f), Some(vec![2, 1]));
        // mod 7 the shape follows from the number of roots
        let roots = roots_brute(7, &[5, 0, 0, 1]);
        let ct = cycle_type(&fp(7), &fp(7).from_coeffs(vec![5, 0, 0, 1])).unwrap();
        match roots.len() {
            0 => assert_eq!(ct, vec![3]),
            1 => assert_eq!(ct, vec![2, 1]),
            3 => assert_eq!(ct, vec![1, 1, 1]),
            _ => unreachable!(),
        }
    }
}

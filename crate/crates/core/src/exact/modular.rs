//! Finite fields: ℤ/p with a word-size or arbitrary-size prime, and F_q = F_p[x]/(m).

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;

use super::poly::{Poly, PolyRing};
use super::ring::{Field, IntegralDomain, Ring};

/// Fields of finite order, with the extra structure polynomial factorization needs.
pub trait FiniteField: Field {
    fn characteristic(&self) -> BigUint;
    /// Degree over the prime field.
    fn extension_degree(&self) -> u32;
    fn order(&self) -> BigUint {
        self.characteristic().pow(self.extension_degree())
    }
    fn random_elem<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;
    /// Inverse of the Frobenius map `a ↦ a^p`.
    fn pth_root(&self, a: &Self::Elem) -> Self::Elem;
}

/// `a^e` for a big exponent.
pub fn pow_big<R: Ring>(ring: &R, a: &R::Elem, e: &BigUint) -> R::Elem {
    let mut acc = ring.one();
    for i in (0..e.bits()).rev() {
        acc = ring.mul(&acc, &acc);
        if e.bit(i) {
            acc = ring.mul(&acc, a);
        }
    }
    acc
}

/// ℤ/p for a prime `p < 2^63`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// The caller guarantees `p` is prime.
    pub fn new(p: u64) -> Self {
        assert!((2..(1 << 63)).contains(&p), "modulus out of range");
        PrimeField { p }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn reduce(&self, a: &BigInt) -> u64 {
        let r = a.mod_floor(&BigInt::from(self.p));
        r.to_u64().expect("residue fits")
    }

    pub fn reduce_poly(&self, f: &Poly<BigInt>) -> Poly<u64> {
        PolyRing::new(*self).from_coeffs(f.coeffs().iter().map(|c| self.reduce(c)).collect())
    }

    /// Symmetric lift into (-p/2, p/2].
    pub fn lift(&self, a: u64) -> BigInt {
        if a > self.p / 2 {
            BigInt::from(a) - BigInt::from(self.p)
        } else {
            BigInt::from(a)
        }
    }

    fn mulmod(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }
}

impl Ring for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        self.mulmod(*a, *b)
    }
    fn from_i64(&self, n: i64) -> u64 {
        (n as i128).rem_euclid(self.p as i128) as u64
    }
}

impl IntegralDomain for PrimeField {
    fn div_exact(&self, a: &u64, b: &u64) -> Option<u64> {
        (*b != 0).then(|| self.div(a, b))
    }
}

impl Field for PrimeField {
    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero");
        // extended Euclid on signed 128-bit values
        let (mut r0, mut r1) = (self.p as i128, *a as i128);
        let (mut s0, mut s1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        s0.rem_euclid(self.p as i128) as u64
    }
}

impl FiniteField for PrimeField {
    fn characteristic(&self) -> BigUint {
        BigUint::from(self.p)
    }
    fn extension_degree(&self) -> u32 {
        1
    }
    fn random_elem<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        rng.gen_range(0..self.p)
    }
    fn pth_root(&self, a: &u64) -> u64 {
        *a
    }
}

/// ℤ/p for a prime of any size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigPrimeField {
    p: BigInt,
}

impl BigPrimeField {
    pub fn new(p: BigInt) -> Self {
        assert!(p > BigInt::one(), "modulus out of range");
        BigPrimeField { p }
    }

    pub fn modulus(&self) -> &BigInt {
        &self.p
    }

    pub fn reduce(&self, a: &BigInt) -> BigInt {
        a.mod_floor(&self.p)
    }

    pub fn reduce_poly(&self, f: &Poly<BigInt>) -> Poly<BigInt> {
        PolyRing::new(self.clone()).from_coeffs(f.coeffs().iter().map(|c| self.reduce(c)).collect())
    }
}

impl Ring for BigPrimeField {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        (a + b).mod_floor(&self.p)
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        (a - b).mod_floor(&self.p)
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        (-a).mod_floor(&self.p)
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        (a * b).mod_floor(&self.p)
    }
    fn from_i64(&self, n: i64) -> BigInt {
        BigInt::from(n).mod_floor(&self.p)
    }
}

impl IntegralDomain for BigPrimeField {
    fn div_exact(&self, a: &BigInt, b: &BigInt) -> Option<BigInt> {
        (!b.is_zero()).then(|| self.div(a, b))
    }
}

impl Field for BigPrimeField {
    fn inv(&self, a: &BigInt) -> BigInt {
        assert!(!a.is_zero(), "inverse of zero");
        let e = a.extended_gcd(&self.p);
        assert!(e.gcd.is_one(), "modulus not prime");
        e.x.mod_floor(&self.p)
    }
}

impl FiniteField for BigPrimeField {
    fn characteristic(&self) -> BigUint {
        self.p.to_biguint().expect("positive modulus")
    }
    fn extension_degree(&self) -> u32 {
        1
    }
    fn random_elem<R: Rng + ?Sized>(&self, rng: &mut R) -> BigInt {
        // 64 extra bits keep the modulo bias negligible
        let bits = self.p.bits() + 64;
        let words = bits.div_ceil(64);
        let mut acc = BigUint::zero();
        for _ in 0..words {
            acc = (acc << 64) + BigUint::from(rng.gen::<u64>());
        }
        BigInt::from(acc).mod_floor(&self.p)
    }
    fn pth_root(&self, a: &BigInt) -> BigInt {
        a.clone()
    }
}

/// F_q with q = p^k, elements stored as residues of length exactly `k`
/// (lowest degree first) modulo a fixed monic irreducible of degree `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaloisField {
    base: PrimeField,
    k: u32,
    /// Monic, length `k + 1`.
    modulus: Vec<u64>,
}

impl GaloisField {
    /// F_{p^k} using the lexicographically first monic irreducible of degree `k`
    /// (coefficients read from the constant term upwards).
    pub fn new(p: u64, k: u32) -> Self {
        assert!(k >= 1, "extension degree must be positive");
        let base = PrimeField::new(p);
        if k == 1 {
            return GaloisField { base, k, modulus: vec![0, 1] };
        }
        let pr = PolyRing::new(base);
        let total = (p as u128).pow(k);
        for idx in 0..total {
            let mut coeffs = Vec::with_capacity(k as usize + 1);
            let mut x = idx;
            for _ in 0..k {
                coeffs.push((x % p as u128) as u64);
                x /= p as u128;
            }
            coeffs.push(1);
            if coeffs[0] == 0 {
                continue;
            }
            let f = pr.from_coeffs(coeffs.clone());
            if super::factor::is_irreducible(&pr, &f) {
                return GaloisField { base, k, modulus: coeffs };
            }
        }
        unreachable!("irreducible polynomials exist in every degree")
    }

    pub fn with_modulus(p: u64, modulus: Vec<u64>) -> Self {
        let base = PrimeField::new(p);
        let k = (modulus.len() - 1) as u32;
        assert_eq!(modulus.last(), Some(&1), "modulus must be monic");
        GaloisField { base, k, modulus }
    }

    pub fn prime_field(&self) -> PrimeField {
        self.base
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn size(&self) -> u128 {
        (self.base.modulus() as u128).pow(self.k)
    }

    /// Element whose coordinates are the base-p digits of `idx`.
    pub fn from_index(&self, mut idx: u128) -> Vec<u64> {
        let p = self.base.modulus() as u128;
        (0..self.k)
            .map(|_| {
                let d = (idx % p) as u64;
                idx /= p;
                d
            })
            .collect()
    }

    pub fn embed(&self, a: u64) -> Vec<u64> {
        let mut v = vec![0; self.k as usize];
        v[0] = a % self.base.modulus();
        v
    }
}

impl Ring for GaloisField {
    type Elem = Vec<u64>;

    fn zero(&self) -> Vec<u64> {
        vec![0; self.k as usize]
    }
    fn one(&self) -> Vec<u64> {
        self.embed(1)
    }
    fn is_zero(&self, a: &Vec<u64>) -> bool {
        a.iter().all(|&c| c == 0)
    }
    fn add(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        a.iter().zip(b).map(|(x, y)| self.base.add(x, y)).collect()
    }
    fn sub(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        a.iter().zip(b).map(|(x, y)| self.base.sub(x, y)).collect()
    }
    fn neg(&self, a: &Vec<u64>) -> Vec<u64> {
        a.iter().map(|x| self.base.neg(x)).collect()
    }
    fn mul(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        let k = self.k as usize;
        let mut prod = vec![0u64; 2 * k - 1];
        for (i, x) in a.iter().enumerate() {
            if *x == 0 {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                prod[i + j] = self.base.add(&prod[i + j], &self.base.mul(x, y));
            }
        }
        for top in (k..prod.len()).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            for (j, m) in self.modulus[..k].iter().enumerate() {
                let idx = top - k + j;
                prod[idx] = self.base.sub(&prod[idx], &self.base.mul(&c, m));
            }
            prod[top] = 0;
        }
        prod.truncate(k);
        prod
    }
    fn from_i64(&self, n: i64) -> Vec<u64> {
        self.embed(self.base.from_i64(n))
    }
}

impl IntegralDomain for GaloisField {
    fn div_exact(&self, a: &Vec<u64>, b: &Vec<u64>) -> Option<Vec<u64>> {
        (!self.is_zero(b)).then(|| self.div(a, b))
    }
}

impl Field for GaloisField {
    fn inv(&self, a: &Vec<u64>) -> Vec<u64> {
        assert!(!self.is_zero(a), "inverse of zero");
        let e = BigUint::from(self.size() - 2);
        pow_big(self, a, &e)
    }
}

impl FiniteField for GaloisField {
    fn characteristic(&self) -> BigUint {
        BigUint::from(self.base.modulus())
    }
    fn extension_degree(&self) -> u32 {
        self.k
    }
    fn random_elem<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<u64> {
        (0..self.k).map(|_| rng.gen_range(0..self.base.modulus())).collect()
    }
    fn pth_root(&self, a: &Vec<u64>) -> Vec<u64> {
        // a^(p^(k-1)) inverts Frobenius on F_{p^k}
        let e = BigUint::from(self.base.modulus()).pow(self.k - 1);
        pow_big(self, a, &e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_inverse() {
        let f = PrimeField::new(113);
        for a in 1..113 {
            assert_eq!(f.mul(&a, &f.inv(&a)), 1);
        }
    }

    #[test]
    fn gf4_and_gf8_moduli() {
        assert_eq!(GaloisField::new(2, 2).modulus(), &[1, 1, 1]);
        assert_eq!(GaloisField::new(2, 3).modulus(), &[1, 1, 0, 1]);
    }

    #[test]
    fn gf8_multiplicative_group_is_cyclic_of_order_7() {
        let f = GaloisField::new(2, 3);
        let x = vec![0, 1, 0];
        let mut acc = f.one();
        let mut seen = Vec::new();
        for _ in 0..7 {
            acc = f.mul(&acc, &x);
            seen.push(acc.clone());
        }
        assert_eq!(acc, f.one());
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), 7);
        for i in 1..8u128 {
            let a = f.from_index(i);
            assert_eq!(f.mul(&a, &f.inv(&a)), f.one());
            assert_eq!(f.pow(&f.pth_root(&a), 2), a);
        }
    }

    #[test]
    fn big_prime_field_matches_word_field() {
        let small = PrimeField::new(1_000_003);
        let big = BigPrimeField::new(BigInt::from(1_000_003u64));
        for a in [1u64, 2, 999, 123_456] {
            assert_eq!(BigInt::from(small.inv(&a)), big.inv(&BigInt::from(a)));
        }
    }
}

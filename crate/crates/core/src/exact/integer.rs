//! Integer content, primality and bounded factorization.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::poly::Poly;
use super::ExactError;

/// `(c, g)` with `c > 0` the gcd of the coefficients and `f = c · g`.
pub fn content_and_primitive(f: &Poly<BigInt>) -> Result<(BigInt, Poly<BigInt>), ExactError> {
    if f.is_zero() {
        return Err(ExactError::UndefinedInput("content of the zero polynomial"));
    }
    let c = f.coeffs().iter().fold(BigInt::zero(), |acc, a| acc.gcd(a));
    let prim = Poly::from_vec(f.coeffs().iter().map(|a| a / &c).collect());
    Ok((c, prim))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Primality {
    Composite,
    Prime,
    ProbablePrime,
}

impl Primality {
    pub fn is_prime_like(self) -> bool {
        self != Primality::Composite
    }
}

/// Below this bound Miller–Rabin with the first twelve primes as bases is a proof.
pub const DETERMINISTIC_LIMIT: &str = "318665857834031151167461";

const MR_BASES: [u32; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Three-valued primality. `Prime` is a proof; `ProbablePrime` means the
/// number passed Baillie–PSW above [`DETERMINISTIC_LIMIT`].
pub fn is_probable_prime(n: &BigInt) -> Result<Primality, ExactError> {
    if *n <= BigInt::one() {
        return Err(ExactError::Domain("primality is defined for n > 1"));
    }
    for &b in &MR_BASES {
        let b = BigInt::from(b);
        if *n == b {
            return Ok(Primality::Prime);
        }
        if n.is_multiple_of(&b) {
            return Ok(Primality::Composite);
        }
    }
    let limit: BigInt = DETERMINISTIC_LIMIT.parse().unwrap();
    if *n < limit {
        let ok = MR_BASES.iter().all(|&b| strong_probable_prime(n, &BigInt::from(b)));
        return Ok(if ok { Primality::Prime } else { Primality::Composite });
    }
    if !strong_probable_prime(n, &BigInt::from(2)) || !strong_lucas(n) {
        return Ok(Primality::Composite);
    }
    Ok(Primality::ProbablePrime)
}

/// Convenience for `u64` inputs, which are always decided exactly.
pub fn is_prime_u64(n: u64) -> bool {
    n > 1 && is_probable_prime(&BigInt::from(n)).unwrap() == Primality::Prime
}

fn strong_probable_prime(n: &BigInt, a: &BigInt) -> bool {
    let one = BigInt::one();
    let nm1 = n - &one;
    let s = nm1.trailing_zeros().unwrap_or(0);
    let d = &nm1 >> s;
    let mut x = a.modpow(&d, n);
    if x == one || x == nm1 {
        return true;
    }
    for _ in 1..s {
        x = (&x * &x).mod_floor(n);
        if x == nm1 {
            return true;
        }
    }
    false
}

pub fn jacobi(a: &BigInt, n: &BigInt) -> i32 {
    debug_assert!(n.is_positive() && n.is_odd());
    let mut a = a.mod_floor(n);
    let mut n = n.clone();
    let mut t = 1;
    while !a.is_zero() {
        while a.is_even() {
            a >>= 1;
            let r = (&n % 8u32).to_u32().unwrap();
            if r == 3 || r == 5 {
                t = -t;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if (&a % 4u32) == BigInt::from(3) && (&n % 4u32) == BigInt::from(3) {
            t = -t;
        }
        a = a.mod_floor(&n);
    }
    if n.is_one() {
        t
    } else {
        0
    }
}

pub fn is_perfect_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &r * &r == *n
}

/// Strong Lucas probable-prime test with Selfridge's parameter choice.
fn strong_lucas(n: &BigInt) -> bool {
    if is_perfect_square(n) {
        return false;
    }
    let mut d = BigInt::from(5);
    loop {
        match jacobi(&d, n) {
            -1 => break,
            0 if d.abs() != *n => return false,
            _ => {}
        }
        d = if d.is_positive() { -(d + 2i32) } else { -d + 2i32 };
    }
    let p = BigInt::one();
    let q: BigInt = (BigInt::one() - &d) / 4i32;
    let half = |x: BigInt| -> BigInt {
        let x = if x.is_odd() { x + n } else { x };
        (x >> 1usize).mod_floor(n)
    };
    let np1: BigInt = n + 1;
    let s = np1.trailing_zeros().unwrap_or(0);
    let k = &np1 >> s;
    let mut u = BigInt::one();
    let mut v = p.clone();
    let mut qk = q.mod_floor(n);
    for i in (0..k.bits() - 1).rev() {
        u = (&u * &v).mod_floor(n);
        v = (&v * &v - 2u32 * &qk).mod_floor(n);
        qk = (&qk * &qk).mod_floor(n);
        if k.bit(i) {
            let u2 = half(&p * &u + &v);
            let v2 = half(&d * &u + &p * &v);
            u = u2;
            v = v2;
            qk = (&qk * &q).mod_floor(n);
        }
    }
    if u.is_zero() || v.is_zero() {
        return true;
    }
    for _ in 1..s {
        v = (&v * &v - 2u32 * &qk).mod_floor(n);
        if v.is_zero() {
            return true;
        }
        qk = (&qk * &qk).mod_floor(n);
    }
    false
}

/// Primes `<= n` by the sieve of Eratosthenes.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

/// The smallest prime strictly greater than `n`.
pub fn next_prime(n: u64) -> u64 {
    let mut c = n + 1;
    while !is_prime_u64(c) {
        c += 1;
    }
    c
}

/// Factorization of `|n|`, possibly partial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntFactorization {
    pub sign: Sign,
    /// Prime (or probable-prime) factors ascending with exponents.
    pub factors: Vec<(BigInt, u32, Primality)>,
    /// An unfactored composite cofactor, if the budget ran out.
    pub cofactor: Option<BigInt>,
}

impl IntFactorization {
    pub fn is_complete(&self) -> bool {
        self.cofactor.is_none()
    }
}

/// Trial division up to `bound`, then a primality test on what remains and a
/// bounded Pollard–Brent attempt on composite leftovers.
pub fn factor_integer(n: &BigInt, bound: u64) -> Result<IntFactorization, ExactError> {
    if n.is_zero() {
        return Err(ExactError::Domain("cannot factor zero"));
    }
    let sign = n.sign();
    let mut m = n.abs();
    let mut found: Vec<(BigInt, u32, Primality)> = Vec::new();
    for p in primes_up_to(bound) {
        if BigInt::from(p) * BigInt::from(p) > m {
            break;
        }
        let bp = BigInt::from(p);
        let mut e = 0;
        while m.is_multiple_of(&bp) {
            m /= &bp;
            e += 1;
        }
        if e > 0 {
            found.push((bp, e, Primality::Prime));
        }
    }
    let mut cofactor = None;
    let mut stack = Vec::new();
    if m > BigInt::one() {
        stack.push(m);
    }
    while let Some(x) = stack.pop() {
        match is_probable_prime(&x)? {
            Primality::Composite => match pollard_brent(&x, 200_000) {
                Some(d) => {
                    stack.push(&x / &d);
                    stack.push(d);
                }
                None => {
                    cofactor = Some(cofactor.map_or(x.clone(), |c: BigInt| c * &x));
                }
            },
            level => {
                if let Some(entry) = found.iter_mut().find(|(p, _, _)| *p == x) {
                    entry.1 += 1;
                } else {
                    found.push((x, 1, level));
                }
            }
        }
    }
    found.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(IntFactorization { sign, factors: found, cofactor })
}

/// Exponent of the prime `p` in `n != 0`.
pub fn valuation(n: &BigInt, p: &BigInt) -> u32 {
    let mut m = n.clone();
    let mut e = 0;
    while !m.is_zero() && m.is_multiple_of(p) {
        m /= p;
        e += 1;
    }
    e
}

fn pollard_brent(n: &BigInt, max_iter: u64) -> Option<BigInt> {
    if n.is_even() {
        return Some(BigInt::from(2));
    }
    let one = BigInt::one();
    for c in 1u32..20 {
        let c = BigInt::from(c);
        let f = |x: &BigInt| (x * x + &c).mod_floor(n);
        let mut y = BigInt::from(2);
        let mut r = 1u64;
        let mut q = one.clone();
        let mut g = one.clone();
        let mut x = y.clone();
        let mut ys = y.clone();
        let mut iters = 0u64;
        while g == one {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g == one {
                ys = y.clone();
                for _ in 0..std::cmp::min(128, r - k) {
                    y = f(&y);
                    q = (&q * (&x - &y).abs()).mod_floor(n);
                }
                g = q.gcd(n);
                k += 128;
            }
            r *= 2;
            iters += r;
            if iters > max_iter {
                break;
            }
        }
        if g == *n {
            loop {
                ys = f(&ys);
                g = (&x - &ys).abs().gcd(n);
                if g > one {
                    break;
                }
            }
        }
        if g > one && g < *n {
            return Some(g);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trial_is_prime(n: u64) -> bool {
        n > 1 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
    }

    #[test]
    fn small_primes_agree_with_trial_division() {
        for n in 2..5000u64 {
            assert_eq!(is_prime_u64(n), trial_is_prime(n), "n = {n}");
        }
        assert_eq!(is_probable_prime(&BigInt::from(113)).unwrap(), Primality::Prime);
        assert_eq!(is_probable_prime(&BigInt::from(25)).unwrap(), Primality::Composite);
        assert_eq!(is_probable_prime(&BigInt::from(9887)).unwrap(), Primality::Prime);
        assert!(is_probable_prime(&BigInt::from(1)).is_err());
    }

    #[test]
    fn strong_pseudoprimes_are_caught() {
        // strong pseudoprime to bases 2..37 prefix sets
        for n in ["3215031751", "3825123056546413051", "318665857834031151167461"] {
            let n: BigInt = n.parse().unwrap();
            assert_eq!(is_probable_prime(&n).unwrap(), Primality::Composite);
        }
    }

    #[test]
    fn large_prime_is_probable() {
        // 2^89 - 1 is a Mersenne prime
        let m89 = (BigInt::one() << 89) - 1;
        assert_eq!(is_probable_prime(&m89).unwrap(), Primality::ProbablePrime);
        let comp = &m89 * BigInt::from(1_000_003);
        assert_eq!(is_probable_prime(&comp).unwrap(), Primality::Composite);
    }

    #[test]
    fn lucas_accepts_small_primes() {
        for n in (5..3000u64).step_by(2) {
            let b = BigInt::from(n);
            if trial_is_prime(n) {
                assert!(strong_lucas(&b), "prime {n} rejected");
            }
        }
    }

    #[test]
    fn content_examples() {
        let (c, g) = content_and_primitive(&Poly::from_i64s(&[4, 6])).unwrap();
        assert_eq!((c, g), (BigInt::from(2), Poly::from_i64s(&[2, 3])));
        let (c, g) = content_and_primitive(&Poly::from_i64s(&[25, 18, 1])).unwrap();
        assert_eq!((c, g), (BigInt::from(1), Poly::from_i64s(&[25, 18, 1])));
        let (c, g) = content_and_primitive(&Poly::from_i64s(&[0, -3])).unwrap();
        assert_eq!((c, g), (BigInt::from(3), Poly::from_i64s(&[0, -1])));
        assert!(content_and_primitive(&Poly::from_i64s(&[])).is_err());
    }

    #[test]
    fn factor_small_and_semiprime() {
        let f = factor_integer(&BigInt::from(-360), 1000).unwrap();
        assert_eq!(f.sign, Sign::Minus);
        let got: Vec<(i64, u32)> = f.factors.iter().map(|(p, e, _)| (p.to_i64().unwrap(), *e)).collect();
        assert_eq!(got, vec![(2, 3), (3, 2), (5, 1)]);
        // product of two primes above the trial bound
        let n = BigInt::from(1_000_003u64) * BigInt::from(1_000_033u64);
        let f = factor_integer(&n, 100).unwrap();
        assert!(f.is_complete());
        assert_eq!(f.factors.len(), 2);
    }

    #[test]
    fn jacobi_matches_euler_criterion() {
        for p in [3u64, 5, 7, 11, 13, 101] {
            for a in 0..p {
                let e = BigInt::from(a).modpow(&BigInt::from((p - 1) / 2), &BigInt::from(p));
                let expect = if a == 0 { 0 } else if e.is_one() { 1 } else { -1 };
                assert_eq!(jacobi(&BigInt::from(a), &BigInt::from(p)), expect);
            }
        }
    }
}

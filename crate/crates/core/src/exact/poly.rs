//! Dense univariate polynomials over any [`Ring`], and the polynomial ring
//! itself as a ring (so `PolyRing<PolyRing<Integers>>` is ℤ[T][X]).

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use super::ring::{Field, IntegralDomain, Ring};

/// Coefficients lowest degree first; never has a trailing zero coefficient.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly<E> {
    coeffs: Vec<E>,
}

impl<E> Poly<E> {
    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> Option<&E> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> Option<&E> {
        self.coeffs.get(i)
    }
}

impl<E: Zero> Poly<E> {
    /// Builds a polynomial from coefficients, dropping trailing zeros.
    pub fn from_vec(mut coeffs: Vec<E>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }
}

impl Poly<BigInt> {
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Poly::from_vec(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Evaluates at an integer point.
    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }
}

impl fmt::Display for Poly<BigInt> {
    /// Human-readable form in the variable `X`, highest degree first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.sign() == num_bigint::Sign::Minus;
            let mag = c.magnitude();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = *mag == BigUint::from(1u8);
            match (i, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "X")?,
                (1, false) => write!(f, "{mag}*X")?,
                (_, true) => write!(f, "X^{i}")?,
                (_, false) => write!(f, "{mag}*X^{i}")?,
            }
        }
        Ok(())
    }
}

/// The ring `base[X]`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PolyRing<R> {
    base: R,
}

impl<R: Ring> PolyRing<R> {
    pub fn new(base: R) -> Self {
        PolyRing { base }
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    pub fn from_coeffs(&self, mut coeffs: Vec<R::Elem>) -> Poly<R::Elem> {
        while coeffs.last().is_some_and(|c| self.base.is_zero(c)) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(&self, c: R::Elem) -> Poly<R::Elem> {
        self.from_coeffs(vec![c])
    }

    /// `c · X^d`
    pub fn monomial(&self, c: R::Elem, d: usize) -> Poly<R::Elem> {
        let mut v = vec![self.base.zero(); d];
        v.push(c);
        self.from_coeffs(v)
    }

    pub fn x(&self) -> Poly<R::Elem> {
        self.monomial(self.base.one(), 1)
    }

    pub fn scalar_mul(&self, f: &Poly<R::Elem>, c: &R::Elem) -> Poly<R::Elem> {
        self.from_coeffs(f.coeffs.iter().map(|a| self.base.mul(a, c)).collect())
    }

    pub fn derivative(&self, f: &Poly<R::Elem>) -> Poly<R::Elem> {
        let v = f
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| self.base.scale(c, i as i64))
            .collect();
        self.from_coeffs(v)
    }

    pub fn eval(&self, f: &Poly<R::Elem>, x: &R::Elem) -> R::Elem {
        f.coeffs
            .iter()
            .rev()
            .fold(self.base.zero(), |acc, c| self.base.add(&self.base.mul(&acc, x), c))
    }

    /// Applies `map` to every coefficient, landing in `target[X]`.
    pub fn map_coeffs<S: Ring>(
        &self,
        f: &Poly<R::Elem>,
        target: &PolyRing<S>,
        map: impl Fn(&R::Elem) -> S::Elem,
    ) -> Poly<S::Elem> {
        target.from_coeffs(f.coeffs.iter().map(map).collect())
    }

    /// Pseudo-remainder: the remainder of `lc(b)^(deg a - deg b + 1) · a` by `b`.
    pub fn pseudo_rem(&self, a: &Poly<R::Elem>, b: &Poly<R::Elem>) -> Poly<R::Elem> {
        let db = b.degree().expect("pseudo-division by zero");
        let lb = b.lc().unwrap().clone();
        let mut r = a.coeffs.clone();
        let Some(da) = a.degree() else {
            return a.clone();
        };
        if da < db {
            return a.clone();
        }
        let mut extra = da - db + 1;
        while r.len() > db && !r.is_empty() {
            let top = r.len() - 1;
            let lr = r[top].clone();
            let shift = top - db;
            for c in r.iter_mut() {
                *c = self.base.mul(c, &lb);
            }
            for (j, bc) in b.coeffs.iter().enumerate() {
                let t = self.base.mul(&lr, bc);
                r[shift + j] = self.base.sub(&r[shift + j], &t);
            }
            debug_assert!(self.base.is_zero(&r[top]));
            r.pop();
            while r.last().is_some_and(|c| self.base.is_zero(c)) {
                r.pop();
            }
            extra -= 1;
        }
        let scale = self.base.pow(&lb, extra as u64);
        let r = self.from_coeffs(r);
        self.scalar_mul(&r, &scale)
    }
}

impl<R: Ring> Ring for PolyRing<R> {
    type Elem = Poly<R::Elem>;

    fn zero(&self) -> Self::Elem {
        Poly { coeffs: Vec::new() }
    }
    fn one(&self) -> Self::Elem {
        self.constant(self.base.one())
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.coeffs.is_empty()
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let n = a.coeffs.len().max(b.coeffs.len());
        let z = self.base.zero();
        let v = (0..n)
            .map(|i| {
                let x = a.coeffs.get(i).unwrap_or(&z);
                let y = b.coeffs.get(i).unwrap_or(&z);
                self.base.add(x, y)
            })
            .collect();
        self.from_coeffs(v)
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let n = a.coeffs.len().max(b.coeffs.len());
        let z = self.base.zero();
        let v = (0..n)
            .map(|i| {
                let x = a.coeffs.get(i).unwrap_or(&z);
                let y = b.coeffs.get(i).unwrap_or(&z);
                self.base.sub(x, y)
            })
            .collect();
        self.from_coeffs(v)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        Poly { coeffs: a.coeffs.iter().map(|c| self.base.neg(c)).collect() }
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        if a.is_zero() || b.is_zero() {
            return self.zero();
        }
        let mut v = vec![self.base.zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if self.base.is_zero(x) {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                v[i + j] = self.base.add(&v[i + j], &self.base.mul(x, y));
            }
        }
        self.from_coeffs(v)
    }
    fn from_i64(&self, n: i64) -> Self::Elem {
        self.constant(self.base.from_i64(n))
    }
    fn scale(&self, a: &Self::Elem, n: i64) -> Self::Elem {
        self.from_coeffs(a.coeffs.iter().map(|c| self.base.scale(c, n)).collect())
    }
}

impl<R: IntegralDomain> IntegralDomain for PolyRing<R> {
    fn div_exact(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        let db = b.degree()?;
        if a.is_zero() {
            return Some(self.zero());
        }
        let da = a.degree().unwrap();
        if da < db {
            return None;
        }
        let lb = b.lc().unwrap();
        let mut r = a.coeffs.clone();
        let mut q = vec![self.base.zero(); da - db + 1];
        for top in (db..=da).rev() {
            if self.base.is_zero(&r[top]) {
                continue;
            }
            let c = self.base.div_exact(&r[top], lb)?;
            let shift = top - db;
            for (j, bc) in b.coeffs.iter().enumerate() {
                r[shift + j] = self.base.sub(&r[shift + j], &self.base.mul(&c, bc));
            }
            q[shift] = c;
        }
        r.iter().all(|c| self.base.is_zero(c)).then(|| self.from_coeffs(q))
    }
}

impl<F: Field> PolyRing<F> {
    pub fn div_rem(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> (Poly<F::Elem>, Poly<F::Elem>) {
        let db = b.degree().expect("division by zero polynomial");
        let Some(da) = a.degree() else {
            return (self.zero(), self.zero());
        };
        if da < db {
            return (self.zero(), a.clone());
        }
        let inv_lb = self.base.inv(b.lc().unwrap());
        let mut r = a.coeffs.clone();
        let mut q = vec![self.base.zero(); da - db + 1];
        for top in (db..=da).rev() {
            if self.base.is_zero(&r[top]) {
                continue;
            }
            let c = self.base.mul(&r[top], &inv_lb);
            let shift = top - db;
            for (j, bc) in b.coeffs.iter().enumerate() {
                r[shift + j] = self.base.sub(&r[shift + j], &self.base.mul(&c, bc));
            }
            q[shift] = c;
        }
        r.truncate(db);
        (self.from_coeffs(q), self.from_coeffs(r))
    }

    pub fn rem(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.div_rem(a, b).1
    }

    pub fn monic(&self, f: &Poly<F::Elem>) -> Poly<F::Elem> {
        match f.lc() {
            None => f.clone(),
            Some(l) => self.scalar_mul(f, &self.base.inv(l)),
        }
    }

    /// Monic gcd (zero when both inputs are zero).
    pub fn gcd(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let r = self.rem(&x, &y);
            x = y;
            y = r;
        }
        self.monic(&x)
    }

    /// Returns `(g, s, t)` with `s·a + t·b = g`, `g` monic.
    pub fn ext_gcd(
        &self,
        a: &Poly<F::Elem>,
        b: &Poly<F::Elem>,
    ) -> (Poly<F::Elem>, Poly<F::Elem>, Poly<F::Elem>) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (self.one(), self.zero());
        let (mut t0, mut t1) = (self.zero(), self.one());
        while !r1.is_zero() {
            let (q, r) = self.div_rem(&r0, &r1);
            r0 = std::mem::replace(&mut r1, r);
            let s2 = self.sub(&s0, &self.mul(&q, &s1));
            s0 = std::mem::replace(&mut s1, s2);
            let t2 = self.sub(&t0, &self.mul(&q, &t1));
            t0 = std::mem::replace(&mut t1, t2);
        }
        match r0.lc() {
            None => (r0, s0, t0),
            Some(l) => {
                let inv = self.base.inv(l);
                (self.scalar_mul(&r0, &inv), self.scalar_mul(&s0, &inv), self.scalar_mul(&t0, &inv))
            }
        }
    }

    pub fn mulmod(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>, m: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.rem(&self.mul(a, b), m)
    }

    /// `a^e mod m`.
    pub fn powmod(&self, a: &Poly<F::Elem>, e: &BigUint, m: &Poly<F::Elem>) -> Poly<F::Elem> {
        let a = self.rem(a, m);
        let mut acc = self.rem(&self.one(), m);
        for i in (0..e.bits()).rev() {
            acc = self.mulmod(&acc, &acc, m);
            if e.bit(i) {
                acc = self.mulmod(&acc, &a, m);
            }
        }
        acc
    }

    pub fn is_squarefree(&self, f: &Poly<F::Elem>) -> bool {
        let g = self.gcd(f, &self.derivative(f));
        g.degree() == Some(0)
    }
}

/// Convenience constructors for the rings used throughout the crate.
pub type IntPoly = Poly<BigInt>;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::modular::PrimeField;
    use crate::exact::ring::Integers;

    #[test]
    fn display_integer_poly() {
        assert_eq!(Poly::from_i64s(&[28, -15, 1]).to_string(), "X^2 - 15*X + 28");
        assert_eq!(Poly::from_i64s(&[-1, -1, 0, 0, 0, 1]).to_string(), "X^5 - X - 1");
        assert_eq!(Poly::from_i64s(&[]).to_string(), "0");
    }

    #[test]
    fn exact_division_over_integers() {
        let zx = PolyRing::new(Integers);
        let a = Poly::from_i64s(&[-1, 0, 1]);
        let b = Poly::from_i64s(&[1, 1]);
        assert_eq!(zx.div_exact(&a, &b), Some(Poly::from_i64s(&[-1, 1])));
        assert_eq!(zx.div_exact(&a, &Poly::from_i64s(&[1, 2])), None);
    }

    #[test]
    fn pseudo_remainder_identity() {
        let zx = PolyRing::new(Integers);
        let a = Poly::from_i64s(&[1, 2, 3, 4]);
        let b = Poly::from_i64s(&[5, 0, 2]);
        let r = zx.pseudo_rem(&a, &b);
        // lc(b)^2 · a - r must be divisible by b
        let lhs = zx.sub(&zx.scalar_mul(&a, &BigInt::from(4)), &r);
        assert!(zx.div_exact(&lhs, &b).is_some());
        assert!(r.degree().unwrap() < 2);
    }

    #[test]
    fn ext_gcd_bezout() {
        let fp = PolyRing::new(PrimeField::new(7));
        let a = fp.from_coeffs(vec![1, 0, 1]);
        let b = fp.from_coeffs(vec![3, 1]);
        let (g, s, t) = fp.ext_gcd(&a, &b);
        assert_eq!(g, fp.one());
        assert_eq!(fp.add(&fp.mul(&s, &a), &fp.mul(&t, &b)), g);
    }
}

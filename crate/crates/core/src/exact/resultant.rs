//! Resultants and discriminants over integral domains via the subresultant
//! polynomial remainder sequence. Every intermediate division is exact, so
//! this works unchanged for ℤ[T]-coefficients and F_q[T]-coefficients.

use super::poly::{Poly, PolyRing};
use super::ring::IntegralDomain;
use super::ExactError;

/// `Res(f, g) = lc(f)^deg(g) · ∏_{f(α)=0} g(α)`.
///
/// A zero argument gives zero unless both are zero, which is an error.
pub fn resultant<R: IntegralDomain>(
    ring: &PolyRing<R>,
    f: &Poly<R::Elem>,
    g: &Poly<R::Elem>,
) -> Result<R::Elem, ExactError> {
    let base = ring.base();
    match (f.degree(), g.degree()) {
        (None, None) => Err(ExactError::UndefinedInput("resultant of two zero polynomials")),
        (None, _) | (_, None) => Ok(base.zero()),
        (Some(df), Some(dg)) => {
            if df < dg {
                let r = subresultant(ring, g, f);
                Ok(if df % 2 == 1 && dg % 2 == 1 { base.neg(&r) } else { r })
            } else {
                Ok(subresultant(ring, f, g))
            }
        }
    }
}

/// Requires `deg a >= deg b`, both nonzero.
fn subresultant<R: IntegralDomain>(ring: &PolyRing<R>, a: &Poly<R::Elem>, b: &Poly<R::Elem>) -> R::Elem {
    let base = ring.base();
    let mut a = a.clone();
    let mut b = b.clone();
    let da = a.degree().unwrap();
    let db = b.degree().unwrap();
    if db == 0 {
        return base.pow(b.lc().unwrap(), da as u64);
    }
    let mut g = base.one();
    let mut h = base.one();
    let mut negate = false;
    loop {
        let da = a.degree().unwrap();
        let db = b.degree().unwrap();
        let delta = (da - db) as u64;
        if da % 2 == 1 && db % 2 == 1 {
            negate = !negate;
        }
        let r = ring.pseudo_rem(&a, &b);
        if r.is_zero() {
            return base.zero();
        }
        let divisor = base.mul(&g, &base.pow(&h, delta));
        let next = ring.from_coeffs(
            r.coeffs()
                .iter()
                .map(|c| base.div_exact(c, &divisor).expect("subresultant division is exact"))
                .collect(),
        );
        a = b;
        b = next;
        g = a.lc().unwrap().clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            d => base
                .div_exact(&base.pow(&g, d), &base.pow(&h, d - 1))
                .expect("subresultant h-update is exact"),
        };
        if b.degree() == Some(0) {
            let da = a.degree().unwrap() as u64;
            let lb = b.lc().unwrap();
            let res = if da == 0 {
                base.one()
            } else {
                base.div_exact(&base.pow(lb, da), &base.pow(&h, da - 1))
                    .expect("final subresultant division is exact")
            };
            return if negate { base.neg(&res) } else { res };
        }
    }
}

/// `disc(f) = (-1)^(n(n-1)/2) · Res(f, f') / lc(f)` with `n = deg f`, where the
/// resultant takes `f'` at formal degree `n - 1` (this matters in positive
/// characteristic, where `f'` may have smaller degree).
pub fn discriminant<R: IntegralDomain>(ring: &PolyRing<R>, f: &Poly<R::Elem>) -> Result<R::Elem, ExactError> {
    let base = ring.base();
    let n = match f.degree() {
        None | Some(0) => return Err(ExactError::UndefinedInput("discriminant needs degree at least 1")),
        Some(n) => n,
    };
    let lc = f.lc().unwrap();
    if n == 1 {
        return Ok(base.one());
    }
    let df = ring.derivative(f);
    let Some(ddf) = df.degree() else {
        return Ok(base.zero());
    };
    let res = resultant(ring, f, &df)?;
    // Res with formal degree n-1 = lc^(n-1-ddf) · Res with actual degree
    let missing = (n - 1 - ddf) as u64;
    let num = if missing == 0 {
        base.div_exact(&res, lc).ok_or(ExactError::InexactDivision)?
    } else {
        base.mul(&res, &base.pow(lc, missing - 1))
    };
    let sign_flip = (n * (n - 1) / 2) % 2 == 1;
    Ok(if sign_flip { base.neg(&num) } else { num })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::modular::PrimeField;
    use crate::exact::ring::Integers;
    use num_bigint::BigInt;

    fn zx() -> PolyRing<Integers> {
        PolyRing::new(Integers)
    }

    fn p(c: &[i64]) -> Poly<BigInt> {
        Poly::from_i64s(c)
    }

    #[test]
    fn small_resultants() {
        assert_eq!(resultant(&zx(), &p(&[0, 1]), &p(&[-1, 1])).unwrap(), BigInt::from(-1));
        assert_eq!(resultant(&zx(), &p(&[1, 0, 1]), &p(&[-1, 1])).unwrap(), BigInt::from(2));
        assert!(resultant(&zx(), &p(&[]), &p(&[])).is_err());
        assert_eq!(resultant(&zx(), &p(&[1, 1]), &p(&[])).unwrap(), BigInt::from(0));
    }

    #[test]
    fn quadratic_and_cubic_discriminants() {
        assert_eq!(discriminant(&zx(), &p(&[28, -15, 1])).unwrap(), BigInt::from(113));
        // X^3 + pX + q with p = 2, q = 3: -4·8 - 27·9
        assert_eq!(discriminant(&zx(), &p(&[3, 2, 0, 1])).unwrap(), BigInt::from(-32 - 243));
        assert_eq!(discriminant(&zx(), &p(&[1, 0, 0, 0, 1])).unwrap(), BigInt::from(256));
        assert_eq!(discriminant(&zx(), &p(&[-1, -1, 0, 1])).unwrap(), BigInt::from(-23));
        assert!(discriminant(&zx(), &p(&[5])).is_err());
    }

    #[test]
    fn discriminant_with_nonmonic_leading_coefficient() {
        // 2X^2 + 3X + 1 has disc 9 - 8 = 1
        assert_eq!(discriminant(&zx(), &p(&[1, 3, 2])).unwrap(), BigInt::from(1));
    }

    #[test]
    fn characteristic_two_derivative_drop() {
        // X^2 + X + 1 over F_2: f' = 1, disc = 1 - 4 = 1 mod 2
        let f2 = PolyRing::new(PrimeField::new(2));
        let f = f2.from_coeffs(vec![1, 1, 1]);
        assert_eq!(discriminant(&f2, &f).unwrap(), 1);
        // X^2 + 1 = (X+1)^2 has f' = 0
        let g = f2.from_coeffs(vec![1, 0, 1]);
        assert_eq!(discriminant(&f2, &g).unwrap(), 0);
    }
}

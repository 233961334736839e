//! Real root counting with Sturm sequences over ℚ.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::poly::{Poly, PolyRing};
use super::ring::{Rationals, Ring};

/// An endpoint of a real interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bound {
    NegInfinity,
    Finite(BigRational),
    PosInfinity,
}

pub fn to_rational_poly(f: &Poly<BigInt>) -> Poly<BigRational> {
    Poly::from_vec(f.coeffs().iter().map(|c| BigRational::from_integer(c.clone())).collect())
}

/// The Sturm chain of the squarefree part of `f`.
pub fn sturm_chain(f: &Poly<BigRational>) -> Vec<Poly<BigRational>> {
    let qx = PolyRing::new(Rationals);
    let df = qx.derivative(f);
    let g = qx.gcd(f, &df);
    let sf = if g.degree().unwrap_or(0) > 0 { qx.div_rem(f, &g).0 } else { f.clone() };
    let mut chain = vec![sf.clone(), qx.derivative(&sf)];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        if chain[n - 1].degree() == Some(0) {
            break;
        }
        let r = qx.rem(&chain[n - 2], &chain[n - 1]);
        chain.push(qx.neg(&r));
    }
    chain
}

fn sign_at(f: &Poly<BigRational>, at: &Bound) -> i32 {
    let qx = PolyRing::new(Rationals);
    let v = match at {
        Bound::Finite(x) => qx.eval(f, x),
        Bound::PosInfinity => f.lc().cloned().unwrap_or_else(BigRational::zero),
        Bound::NegInfinity => {
            let lc = f.lc().cloned().unwrap_or_else(BigRational::zero);
            if f.degree().unwrap_or(0) % 2 == 1 {
                -lc
            } else {
                lc
            }
        }
    };
    if v.is_zero() {
        0
    } else if v.is_negative() {
        -1
    } else {
        1
    }
}

fn variations(chain: &[Poly<BigRational>], at: &Bound) -> usize {
    let signs: Vec<i32> = chain.iter().map(|p| sign_at(p, at)).filter(|&s| s != 0).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct real roots of `f` in the half-open interval `(lo, hi]`.
pub fn sturm_count(f: &Poly<BigRational>, lo: &Bound, hi: &Bound) -> usize {
    assert!(!f.is_zero(), "sturm_count of the zero polynomial");
    if f.degree() == Some(0) {
        return 0;
    }
    let chain = sturm_chain(f);
    let a = variations(&chain, lo);
    let b = variations(&chain, hi);
    a.saturating_sub(b)
}

/// Number of distinct real roots of an integer polynomial.
pub fn real_root_count(f: &Poly<BigInt>) -> usize {
    sturm_count(&to_rational_poly(f), &Bound::NegInfinity, &Bound::PosInfinity)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_over_the_whole_line() {
        assert_eq!(real_root_count(&Poly::from_i64s(&[1, 0, 1])), 0);
        assert_eq!(real_root_count(&Poly::from_i64s(&[0, -1, 0, 1])), 3);
        assert_eq!(real_root_count(&Poly::from_i64s(&[28, -15, 1])), 2);
        // (X-1)^2 (X+2): two distinct roots
        assert_eq!(real_root_count(&Poly::from_i64s(&[2, -3, 0, 1])), 2);
    }

    #[test]
    fn counts_on_bounded_intervals() {
        let f = to_rational_poly(&Poly::from_i64s(&[0, -1, 0, 1]));
        let r = |n: i64, d: i64| Bound::Finite(BigRational::new(n.into(), d.into()));
        assert_eq!(sturm_count(&f, &r(-1, 2), &r(1, 2)), 1);
        assert_eq!(sturm_count(&f, &r(0, 1), &r(2, 1)), 1);
        assert_eq!(sturm_count(&f, &r(-1, 1), &r(1, 1)), 2);
        assert_eq!(sturm_count(&f, &Bound::NegInfinity, &r(0, 1)), 2);
    }
}

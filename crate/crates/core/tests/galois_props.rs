use minram::exact::{discriminant, Integers, IntPoly, Poly, PolyRing, Ring};
use minram::galois::irreducible::independent_irreducibility_check;
use minram::galois::{
    factor_over_q, galois_certify, ramified_primes, GaloisStatus, PlaceStatus, DEFAULT_FACTOR_BOUND,
    DEFAULT_PRIME_BUDGET,
};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use proptest::prelude::*;

fn zx() -> PolyRing<Integers> {
    PolyRing::new(Integers)
}

/// Prime divisors by trial division.
fn trial_primes(mut m: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            out.push(p);
            while m.is_multiple_of(p) {
                m /= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

fn small_poly(lo: usize, hi: usize) -> impl Strategy<Value = IntPoly> {
    (lo..=hi).prop_flat_map(|d| {
        prop::collection::vec(-6i64..=6, d).prop_map(|mut v| {
            v.push(1);
            Poly::from_i64s(&v)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn factors_multiply_back_and_are_irreducible(a in small_poly(1, 3), b in small_poly(1, 3), k in -3i64..=3) {
        prop_assume!(k != 0);
        let f = zx().scalar_mul(&zx().mul(&a, &b), &BigInt::from(k));
        let fac = factor_over_q(&f).unwrap();
        prop_assert_eq!(fac.expand(), f);
        for (g, _) in &fac.factors {
            prop_assert!(independent_irreducibility_check(g), "{:?}", g);
        }
        prop_assert!(fac.factors.iter().map(|(_, m)| m).sum::<usize>() >= 2);
    }

    #[test]
    fn ramified_places_divide_the_discriminant(f in small_poly(2, 5)) {
        let disc = discriminant(&zx(), &f).unwrap();
        prop_assume!(!disc.is_zero());
        let Ok(rep) = ramified_primes(&f, DEFAULT_FACTOR_BOUND) else {
            prop_assert!(!factor_over_q(&f).unwrap().factors.iter().all(|(g, m)| *m == 1 && g.degree() == f.degree()));
            return Ok(());
        };
        prop_assert_eq!(&rep.disc, &disc);
        for pl in &rep.places {
            prop_assert!(disc.is_multiple_of(&pl.prime));
            if pl.disc_valuation == 1 {
                prop_assert_eq!(pl.status, PlaceStatus::Ramified);
            }
        }
        if let Some(m) = disc.abs().to_u64() {
            prop_assert!(!rep.is_partial());
            let listed: Vec<u64> = rep.places.iter().map(|p| p.prime.to_u64().unwrap()).collect();
            prop_assert_eq!(listed, trial_primes(m));
        }
        prop_assert!(rep.recheck(&f));
    }

    #[test]
    fn observed_cycle_types_are_partitions(f in small_poly(2, 6)) {
        let disc = discriminant(&zx(), &f).unwrap();
        prop_assume!(!disc.is_zero());
        let c = galois_certify(&f, 500).unwrap();
        for (ct, _) in &c.observed {
            prop_assert_eq!(ct.iter().sum::<usize>(), c.degree);
            prop_assert!(ct.windows(2).all(|w| w[0] >= w[1]));
        }
        for w in &c.witnesses {
            prop_assert_eq!(w.cycle_type.iter().sum::<usize>(), c.degree);
        }
        if c.status == GaloisStatus::CertifiedSn {
            prop_assert!(!c.disc_square);
        }
        prop_assert!(c.recheck(&f));
    }
}

#[test]
fn regression_cases() {
    let c = galois_certify(&Poly::from_i64s(&[-1, -1, 0, 0, 0, 1]), DEFAULT_PRIME_BUDGET).unwrap();
    assert_eq!(c.status, GaloisStatus::CertifiedSn);
    assert_eq!(c.disc, BigInt::from(2869));

    let c = galois_certify(&Poly::from_i64s(&[1, 0, 0, 0, 1]), DEFAULT_PRIME_BUDGET).unwrap();
    assert_eq!(c.status, GaloisStatus::NotSn);
    assert!(c.disc_square);
    assert_eq!(c.disc, BigInt::from(256));

    let c = galois_certify(&Poly::from_i64s(&[-2, 0, 0, 1]), DEFAULT_PRIME_BUDGET).unwrap();
    assert_eq!(c.status, GaloisStatus::CertifiedSn);
    assert_eq!(c.disc, BigInt::from(-108));

    let rep = ramified_primes(&Poly::from_i64s(&[-2, 0, 0, 1]), DEFAULT_FACTOR_BOUND).unwrap();
    let ram: Vec<_> = rep.ramified().into_iter().cloned().collect();
    assert_eq!(ram, vec![BigInt::from(2), BigInt::from(3)]);
}

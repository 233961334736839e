use minram::exact::factor::factor_mod;
use minram::exact::{discriminant, real_root_count, resultant, Integers, Poly, PolyRing, PrimeField, Ring};
use num_bigint::BigInt;
use num_traits::{One, Pow};
use proptest::prelude::*;

fn zx() -> PolyRing<Integers> {
    PolyRing::new(Integers)
}

fn from_roots(roots: &[i64]) -> Poly<BigInt> {
    let r = zx();
    roots.iter().fold(r.one(), |acc, &a| r.mul(&acc, &Poly::from_i64s(&[-a, 1])))
}

fn small_poly(max_deg: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-9i64..=9, 1..=max_deg + 1).prop_filter("nonzero leading", |v| *v.last().unwrap() != 0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn discriminant_of_split_polynomial(roots in prop::collection::vec(-8i64..=8, 1..=6)) {
        let f = from_roots(&roots);
        let mut expect = BigInt::one();
        for i in 0..roots.len() {
            for j in i + 1..roots.len() {
                let d = BigInt::from(roots[i] - roots[j]);
                expect *= &d * &d;
            }
        }
        prop_assert_eq!(discriminant(&zx(), &f).unwrap(), expect);
    }

    #[test]
    fn resultant_matches_root_product(roots in prop::collection::vec(-6i64..=6, 1..=5), lc in 1i64..=4, g in small_poly(4)) {
        let r = zx();
        let f = r.scalar_mul(&from_roots(&roots), &BigInt::from(lc));
        let g = Poly::from_i64s(&g);
        let dg = g.degree().unwrap() as u32;
        let mut expect: BigInt = BigInt::from(lc).pow(dg);
        for &a in &roots {
            expect *= g.eval_int(&BigInt::from(a));
        }
        prop_assert_eq!(resultant(&r, &f, &g).unwrap(), expect);
    }

    #[test]
    fn resultant_swap_sign(f in small_poly(5), g in small_poly(5)) {
        let r = zx();
        let (f, g) = (Poly::from_i64s(&f), Poly::from_i64s(&g));
        let sign = if f.degree().unwrap() * g.degree().unwrap() % 2 == 1 { -1 } else { 1 };
        prop_assert_eq!(resultant(&r, &f, &g).unwrap(), BigInt::from(sign) * resultant(&r, &g, &f).unwrap());
    }

    #[test]
    fn discriminant_weighted_homogeneity(a in prop::collection::vec(-6i64..=6, 2..=5), lambda in -3i64..=3) {
        let n = a.len();
        let make = |scale: i64| {
            let mut c = vec![BigInt::one()];
            for (i, ai) in a.iter().enumerate() {
                c.push(BigInt::from(*ai) * BigInt::from(scale).pow((i + 1) as u32));
            }
            c.reverse();
            Poly::from_vec(c)
        };
        let d1 = discriminant(&zx(), &make(1)).unwrap();
        let dl = discriminant(&zx(), &make(lambda)).unwrap();
        prop_assert_eq!(dl, d1 * BigInt::from(lambda).pow((n * (n - 1)) as u32));
    }

    #[test]
    fn factor_mod_remultiplies(p in prop::sample::select(vec![2u64, 3, 5, 7, 11, 13]), c in prop::collection::vec(0u64..13, 2..=9), seed in any::<u64>()) {
        let k = PrimeField::new(p);
        let r = PolyRing::new(k);
        let f = r.from_coeffs(c.iter().map(|x| x % p).collect());
        prop_assume!(!f.is_zero());
        let fac = factor_mod(&r, &f, seed).unwrap();
        let mut prod = r.constant(fac.unit);
        for (g, m) in &fac.factors {
            prop_assert_eq!(g.lc(), Some(&1));
            let deg = g.degree().unwrap();
            prop_assert!(deg >= 1);
            if deg <= 3 {
                prop_assert!((0..p).all(|x| r.eval(g, &x) != 0) || deg == 1);
            }
            prod = r.mul(&prod, &r.pow(g, *m as u64));
        }
        prop_assert_eq!(prod, f);
    }

    #[test]
    fn sturm_count_bounds_and_parity(c in small_poly(7)) {
        let f = Poly::from_i64s(&c);
        let n = f.degree().unwrap();
        let k = real_root_count(&f);
        prop_assert!(k <= n);
        let qx = PolyRing::new(minram::exact::Rationals);
        let fq = minram::exact::sturm::to_rational_poly(&f);
        if n > 0 && qx.is_squarefree(&fq) {
            prop_assert_eq!(k % 2, n % 2);
        }
    }

    #[test]
    fn sturm_counts_distinct_integer_roots(roots in prop::collection::vec(-10i64..=10, 1..=6)) {
        let mut distinct = roots.clone();
        distinct.sort();
        distinct.dedup();
        prop_assert_eq!(real_root_count(&from_roots(&roots)), distinct.len());
    }
}

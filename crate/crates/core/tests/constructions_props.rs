use minram::constructions::bms::triple_r;
use minram::constructions::{
    bms_search, build_f, compute_h, function_field_family, realize, schinzel_search, Base, BmsBounds, FfieldOptions,
    RealizeOptions, SchinzelParams,
};
use minram::exact::{IntPoly, Poly};
use minram::galois::PlaceStatus;
use minram::par::with_threads;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

/// Determinant by fraction-free Bareiss elimination.
fn bareiss(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// disc f = (−1)^{n(n−1)/2} det Sylvester(f, f′) / lc f.
fn disc_by_sylvester(f: &IntPoly) -> BigInt {
    let n = f.degree().unwrap();
    let c = f.coeffs();
    let d: Vec<BigInt> = (1..=n).map(|i| &c[i] * BigInt::from(i)).collect();
    let size = 2 * n - 1;
    let mut m = vec![vec![BigInt::zero(); size]; size];
    for r in 0..n - 1 {
        for (j, x) in c.iter().rev().enumerate() {
            m[r][r + j] = x.clone();
        }
    }
    for r in 0..n {
        for (j, x) in d.iter().rev().enumerate() {
            m[n - 1 + r][r + j] = x.clone();
        }
    }
    let res = bareiss(m);
    let s = if (n * (n - 1) / 2).is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
    s * res / c[n].clone()
}

fn expected_lc(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for k in 1..=n {
        for i in 1..k {
            acc *= BigInt::from((k - i) * (k - i));
        }
    }
    acc
}

fn a_vec(n: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-5i64..=5, n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn h_has_fixed_degree_and_leading_coefficient((n, a) in (2usize..=5).prop_flat_map(|n| (Just(n), a_vec(n)))) {
        let a: Vec<BigInt> = a.into_iter().map(BigInt::from).collect();
        let q = Base::rationals();
        let h = compute_h(n, &q, &a).unwrap();
        prop_assert_eq!(h.degree(), Some(n * (n - 1)));
        prop_assert_eq!(h.lc().unwrap(), &expected_lc(n));
    }

    #[test]
    fn h_at_t_is_disc_of_specialization(
        (n, a) in (2usize..=4).prop_flat_map(|n| (Just(n), a_vec(n))),
        ts in prop::collection::vec(-50i64..=50, 4),
    ) {
        let a: Vec<BigInt> = a.into_iter().map(BigInt::from).collect();
        let q = Base::rationals();
        let h = compute_h(n, &q, &a).unwrap();
        let f = build_f(n, &q, &a).unwrap();
        for t in ts {
            let ft = f.specialize(&BigInt::one(), &BigInt::from(t));
            prop_assert_eq!(h.eval_int(&BigInt::from(t)), disc_by_sylvester(&ft));
        }
    }

    #[test]
    fn specialization_matches_formula(a in a_vec(3), t in -20i64..=20) {
        // X³ − 6(t + a₁)X² + 11(t² + a₂)X − 6(t³ + a₃) + 30 a₃
        let q = Base::rationals();
        let ab: Vec<BigInt> = a.iter().map(|&x| BigInt::from(x)).collect();
        let ft = build_f(3, &q, &ab).unwrap().specialize(&BigInt::one(), &BigInt::from(t));
        let want = Poly::from_i64s(&[-6 * (t * t * t + a[2]) + 30 * a[2], 11 * (t * t + a[1]), -6 * (t + a[0]), 1]);
        prop_assert_eq!(ft, want);
    }
}

#[test]
fn bms_triples_satisfy_the_linear_relation() {
    for n in 2..=4 {
        let t = bms_search(n, &BmsBounds::default()).unwrap();
        let nn = BigInt::from(n).pow(n as u32);
        let mm = BigInt::from(n - 1).pow(n as u32 - 1);
        assert!((&t.r - nn * t.p - mm * t.q).is_zero(), "n = {n}");
        assert_eq!(t.r, triple_r(n, t.p, t.q));
        let allowed = [BigInt::from(t.p), BigInt::from(t.q), t.r.clone()];
        for pl in &t.ramification.places {
            assert!((&t.ramification.disc % &pl.prime).is_zero());
            if pl.status != PlaceStatus::Unramified {
                assert!(allowed.contains(&pl.prime), "n = {n}: {} outside the triple", pl.prime);
            }
        }
        t.verify().unwrap();
    }
}

#[test]
fn searches_are_thread_count_independent() {
    let run = |threads| {
        with_threads(threads, || {
            let mut p = SchinzelParams::new(2);
            p.t_min = 0;
            p.t_max = 200;
            let s = schinzel_search(&p, Some(&[BigInt::from(1), BigInt::from(-1)])).unwrap();
            let b = bms_search(4, &BmsBounds::default()).unwrap();
            let f = function_field_family(9, 2, &FfieldOptions { samples: 30, seed: 7 }).unwrap();
            format!("{s:?}|{b:?}|{f:?}")
        })
    };
    let one = run(1);
    assert_eq!(one, run(3));
    assert_eq!(one, run(8));
}

#[test]
fn realize_certificates_reverify() {
    let c2 = minram::permgroup::AbstractGroup::cyclic(2);
    for n in [2, 3] {
        let opts = RealizeOptions { n: Some(n), ..RealizeOptions::default() };
        let c = realize(&c2, &opts).unwrap();
        c.verify(&c2, minram::galois::DEFAULT_FACTOR_BOUND).unwrap();
        assert!(c.quotient.verify_hom(&c2, &c.iso));
    }
}

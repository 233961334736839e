//! Ramified primes of the stem field `ℚ[X]/(f)` via Dedekind's criterion, and
//! the status of the infinite place.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::exact::factor::factor_mod;
use crate::exact::{
    discriminant, factor_integer, real_root_count, BigPrimeField, Integers, IntPoly, Poly, PolyRing, Primality, Ring,
};

use super::irreducible::irreducible_over_q;
use super::GaloisError;

pub const DEFAULT_FACTOR_BOUND: u64 = 1_000_000;

/// The stem field and its Galois closure are ramified at the same primes.
pub const CLOSURE_NOTE: &str =
    "ramification of the stem field and of its Galois closure agree: a compositum of p-unramified fields is p-unramified";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PlaceStatus {
    Ramified,
    Unramified,
    Undecided,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Criterion {
    /// `f mod p` is squarefree.
    SquarefreeModP,
    /// `p` divides the discriminant exactly once, so `ℤ[x]/(f)` is p-maximal.
    DiscValuationOne,
    /// Dedekind's criterion shows `ℤ[x]/(f)` is p-maximal and `f mod p` has a
    /// repeated factor.
    DedekindMaximal,
    /// Dedekind's criterion fails; the order is not p-maximal and no verdict
    /// is drawn.
    DedekindNotMaximal,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitePlace {
    pub prime: BigInt,
    pub primality: Primality,
    pub disc_valuation: u32,
    pub status: PlaceStatus,
    pub criterion: Criterion,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind", content = "pairs")]
pub enum InfiniteStatus {
    AllReal,
    ComplexPairs(usize),
}

impl InfiniteStatus {
    pub fn is_unramified(self) -> bool {
        self == InfiniteStatus::AllReal
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamificationReport {
    pub degree: usize,
    pub disc: BigInt,
    pub places: Vec<FinitePlace>,
    /// Unfactored composite part of `|disc|`; the report is partial if set.
    pub cofactor: Option<BigInt>,
    pub infinite: InfiniteStatus,
}

impl RamificationReport {
    pub fn ramified(&self) -> Vec<&BigInt> {
        self.places.iter().filter(|p| p.status == PlaceStatus::Ramified).map(|p| &p.prime).collect()
    }

    pub fn undecided(&self) -> Vec<&BigInt> {
        self.places.iter().filter(|p| p.status == PlaceStatus::Undecided).map(|p| &p.prime).collect()
    }

    pub fn is_partial(&self) -> bool {
        self.cofactor.is_some()
    }

    /// Every finite place is decided and the factorization is complete.
    pub fn is_complete(&self) -> bool {
        !self.is_partial() && self.undecided().is_empty()
    }

    /// Recomputes every classification from `f`.
    pub fn recheck(&self, f: &IntPoly) -> bool {
        let zx = PolyRing::new(Integers);
        let Ok(disc) = discriminant(&zx, f) else { return false };
        if disc != self.disc || f.degree() != Some(self.degree) {
            return false;
        }
        let mut rest = disc.clone();
        for place in &self.places {
            let v = crate::exact::integer::valuation(&disc, &place.prime);
            if v == 0 || v != place.disc_valuation {
                return false;
            }
            for _ in 0..v {
                rest /= &place.prime;
            }
            match classify(f, &place.prime, v) {
                Ok((s, c)) if s == place.status && c == place.criterion => {}
                _ => return false,
            }
        }
        let rest = rest.magnitude().clone();
        let cof_ok = match &self.cofactor {
            None => rest.is_one(),
            Some(c) => c.magnitude() == &rest,
        };
        cof_ok && infinite_place_status(f).ok() == Some(self.infinite)
    }
}

/// Dedekind's test at `p`; `v` is the valuation of the discriminant.
fn classify(f: &IntPoly, p: &BigInt, v: u32) -> Result<(PlaceStatus, Criterion), GaloisError> {
    let fp = BigPrimeField::new(p.clone());
    let ring = PolyRing::new(fp.clone());
    let fbar = fp.reduce_poly(f);
    if ring.is_squarefree(&fbar) {
        return Ok((PlaceStatus::Unramified, Criterion::SquarefreeModP));
    }
    if v == 1 {
        return Ok((PlaceStatus::Ramified, Criterion::DiscValuationOne));
    }
    let fac = factor_mod(&ring, &fbar, 0)?;
    let zx = PolyRing::new(Integers);
    let lift = |g: &Poly<BigInt>| g.clone();
    let mut g = zx.one();
    let mut h = zx.one();
    let mut gbar = ring.one();
    let mut hbar = ring.one();
    for (t, e) in &fac.factors {
        g = zx.mul(&g, &lift(t));
        gbar = ring.mul(&gbar, t);
        if *e > 1 {
            let te = zx.pow(&lift(t), (*e - 1) as u64);
            h = zx.mul(&h, &te);
            hbar = ring.mul(&hbar, &ring.pow(t, (*e - 1) as u64));
        }
    }
    let gh = zx.mul(&g, &h);
    let diff = zx.sub(&gh, f);
    let big_f = Poly::from_vec(
        diff.coeffs()
            .iter()
            .map(|c| {
                let (q, r) = c.div_rem(p);
                debug_assert!(r.is_zero());
                q
            })
            .collect(),
    );
    let fbar2 = fp.reduce_poly(&big_f);
    let z = ring.gcd(&ring.gcd(&fbar2, &gbar), &hbar);
    if z.degree() == Some(0) {
        Ok((PlaceStatus::Ramified, Criterion::DedekindMaximal))
    } else {
        Ok((PlaceStatus::Undecided, Criterion::DedekindNotMaximal))
    }
}

pub fn ramified_primes(f: &IntPoly, factor_bound: u64) -> Result<RamificationReport, GaloisError> {
    let n = f.degree().ok_or_else(|| GaloisError::Input("zero polynomial".into()))?;
    if n == 0 || !f.lc().unwrap().is_one() {
        return Err(GaloisError::Precondition("monic polynomial of degree at least 1 required".into()));
    }
    if !irreducible_over_q(f)?.is_irreducible() {
        return Err(GaloisError::Precondition("polynomial is reducible over Q".into()));
    }
    let zx = PolyRing::new(Integers);
    let disc = discriminant(&zx, f)?;
    let fac = factor_integer(&disc, factor_bound)?;
    let mut places = Vec::new();
    for (p, e, level) in &fac.factors {
        let (status, criterion) = classify(f, p, *e)?;
        places.push(FinitePlace { prime: p.clone(), primality: *level, disc_valuation: *e, status, criterion });
    }
    Ok(RamificationReport {
        degree: n,
        disc,
        places,
        cofactor: fac.cofactor,
        infinite: infinite_place_status(f)?,
    })
}

pub fn infinite_place_status(f: &IntPoly) -> Result<InfiniteStatus, GaloisError> {
    let n = f.degree().ok_or_else(|| GaloisError::Input("zero polynomial".into()))?;
    if n == 0 {
        return Ok(InfiniteStatus::AllReal);
    }
    let disc = discriminant(&PolyRing::new(Integers), f)?;
    if disc.is_zero() {
        return Err(GaloisError::Precondition("discriminant is zero".into()));
    }
    let r = real_root_count(f);
    Ok(if r == n { InfiniteStatus::AllReal } else { InfiniteStatus::ComplexPairs((n - r) / 2) })
}

/// `f mod r` has exactly one repeated factor, linear with multiplicity 2.
pub fn transposition_inertia_check(f: &IntPoly, r: &BigInt) -> Result<bool, GaloisError> {
    let n = f.degree().ok_or_else(|| GaloisError::Input("zero polynomial".into()))?;
    let disc = discriminant(&PolyRing::new(Integers), f)?;
    if r <= &BigInt::one() || !(&disc % r).is_zero() {
        return Err(GaloisError::Input(format!("{r} does not divide the discriminant")));
    }
    let fp = BigPrimeField::new(r.clone());
    if fp.reduce(f.lc().unwrap()).is_zero() {
        return Ok(false);
    }
    let fac = factor_mod(&PolyRing::new(fp.clone()), &fp.reduce_poly(f), 0)?;
    let repeated: Vec<_> = fac.factors.iter().filter(|(_, m)| *m > 1).collect();
    let total: usize = fac.factors.iter().map(|(g, m)| g.degree().unwrap() * m).sum();
    Ok(total == n && repeated.len() == 1 && repeated[0].1 == 2 && repeated[0].0.degree() == Some(1))
}

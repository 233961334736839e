//! Galois-group certificates for `S_n` and `A_n` from Frobenius cycle types.
//!
//! Soundness rests on three facts: a transitive group of prime degree, or one
//! containing an `(n−1)`-cycle, or one containing a `p`-cycle with `p > n/2`
//! prime, is primitive; a primitive group with a transposition is `S_n`; a
//! primitive group with a `p`-cycle, `p ≤ n − 3` prime, contains `A_n`.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::exact::integer::{is_perfect_square, is_prime_u64, primes_up_to};
use crate::exact::{cycle_type, discriminant, Integers, IntPoly, PolyRing, PrimeField};

use super::irreducible::{irreducible_over_q, Irreducibility};
use super::GaloisError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GaloisStatus {
    /// `Gal(f) = S_n`.
    CertifiedSn,
    /// `Gal(f) = A_n` (square discriminant plus a Jordan witness).
    CertifiedSubsetAn,
    /// No proof either way; the observed cycle types are attached.
    EvidenceOnly,
    /// `Gal(f) ≠ S_n`: `f` is reducible or its discriminant is a square.
    NotSn,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessRole {
    Primitivity,
    Transposition,
    Jordan,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub role: WitnessRole,
    pub prime: u64,
    pub cycle_type: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaloisCertificate {
    pub degree: usize,
    pub status: GaloisStatus,
    pub witnesses: Vec<Witness>,
    /// Distinct cycle types seen, each with the first prime producing it.
    pub observed: Vec<(Vec<usize>, u64)>,
    pub irreducibility: Irreducibility,
    pub disc: BigInt,
    pub disc_square: bool,
    /// Whether transitivity on its own already gives primitivity.
    pub prime_degree: bool,
    pub primes_scanned: usize,
}

pub const DEFAULT_PRIME_BUDGET: usize = 10_000;
const CHUNK: usize = 256;

/// A power of an element with this cycle type is a transposition.
pub fn yields_transposition(ct: &[usize]) -> bool {
    ct.iter().filter(|&&c| c == 2).count() == 1 && ct.iter().all(|&c| c == 2 || c % 2 == 1)
}

/// A power of an element with this cycle type is an `(n−1)`-cycle.
pub fn yields_long_cycle(ct: &[usize], n: usize) -> bool {
    n >= 3 && ct.first() == Some(&(n - 1))
}

/// Primes `p` such that a power of this element is a `p`-cycle.
pub fn prime_cycle_lengths(ct: &[usize]) -> Vec<usize> {
    ct.iter()
        .copied()
        .filter(|&p| {
            is_prime_u64(p as u64) && ct.iter().filter(|&&c| c % p == 0).count() == 1
        })
        .collect()
}

fn gives_primitivity(ct: &[usize], n: usize) -> bool {
    yields_long_cycle(ct, n) || prime_cycle_lengths(ct).iter().any(|&p| 2 * p > n)
}

fn gives_jordan(ct: &[usize], n: usize) -> bool {
    prime_cycle_lengths(ct).iter().any(|&p| 2 * p > n && p + 3 <= n)
}

pub fn galois_certify(f: &IntPoly, prime_budget: usize) -> Result<GaloisCertificate, GaloisError> {
    let n = match f.degree() {
        None | Some(0) => return Err(GaloisError::Input("polynomial of degree at least 1 required".into())),
        Some(n) => n,
    };
    let zx = PolyRing::new(Integers);
    let disc = discriminant(&zx, f)?;
    if disc.is_zero() {
        return Err(GaloisError::Precondition("discriminant is zero".into()));
    }
    let disc_square = disc > BigInt::zero() && is_perfect_square(&disc);
    let irreducibility = irreducible_over_q(f)?;
    let prime_degree = is_prime_u64(n as u64);
    let mut cert = GaloisCertificate {
        degree: n,
        status: GaloisStatus::EvidenceOnly,
        witnesses: Vec::new(),
        observed: Vec::new(),
        irreducibility,
        disc: disc.clone(),
        disc_square,
        prime_degree,
        primes_scanned: 0,
    };
    if n == 1 {
        cert.status = GaloisStatus::CertifiedSn;
        return Ok(cert);
    }
    if !cert.irreducibility.is_irreducible() {
        cert.status = GaloisStatus::NotSn;
        return Ok(cert);
    }

    let lc = f.lc().unwrap().clone();
    let mut need_prim = !prime_degree;
    let mut need_second = true;
    let target_role = if disc_square { WitnessRole::Jordan } else { WitnessRole::Transposition };
    let mut scanned = 0usize;
    let mut limit = 1u64 << 12;
    let mut from = 0u64;
    'scan: while scanned < prime_budget {
        let primes: Vec<u64> = primes_up_to(limit)
            .into_iter()
            .filter(|&p| p > from)
            .filter(|&p| {
                let bp = BigInt::from(p);
                !(&disc % &bp).is_zero() && !(&lc % &bp).is_zero()
            })
            .collect();
        from = limit;
        limit *= 2;
        for chunk in primes.chunks(CHUNK) {
            let take = chunk.len().min(prime_budget - scanned);
            let types = crate::par::map_vec(&chunk[..take], |&p| {
                let fp = PrimeField::new(p);
                cycle_type(&PolyRing::new(fp), &fp.reduce_poly(f)).expect("good prime")
            });
            for (&p, ct) in chunk.iter().zip(types) {
                scanned += 1;
                if !cert.observed.iter().any(|(t, _)| *t == ct) {
                    cert.observed.push((ct.clone(), p));
                }
                if need_prim && gives_primitivity(&ct, n) {
                    need_prim = false;
                    cert.witnesses.push(Witness { role: WitnessRole::Primitivity, prime: p, cycle_type: ct.clone() });
                }
                let second = if disc_square { gives_jordan(&ct, n) } else { yields_transposition(&ct) };
                if need_second && second {
                    need_second = false;
                    cert.witnesses.push(Witness { role: target_role, prime: p, cycle_type: ct.clone() });
                }
                if !need_prim && !need_second {
                    break 'scan;
                }
            }
            if scanned >= prime_budget {
                break 'scan;
            }
        }
    }
    cert.primes_scanned = scanned;
    cert.status = match (disc_square, need_prim || need_second) {
        (false, false) => GaloisStatus::CertifiedSn,
        (false, true) => GaloisStatus::EvidenceOnly,
        (true, false) => GaloisStatus::CertifiedSubsetAn,
        (true, true) => GaloisStatus::NotSn,
    };
    Ok(cert)
}

impl GaloisCertificate {
    /// Re-derives every witness and the status from `f`.
    pub fn recheck(&self, f: &IntPoly) -> bool {
        let Some(n) = f.degree() else { return false };
        let zx = PolyRing::new(Integers);
        let Ok(disc) = discriminant(&zx, f) else { return false };
        if n != self.degree || disc != self.disc {
            return false;
        }
        if self.disc_square != (disc > BigInt::zero() && is_perfect_square(&disc)) {
            return false;
        }
        for w in &self.witnesses {
            let bp = BigInt::from(w.prime);
            if (&disc % &bp).is_zero() || (f.lc().unwrap() % &bp).is_zero() {
                return false;
            }
            let fp = PrimeField::new(w.prime);
            if cycle_type(&PolyRing::new(fp), &fp.reduce_poly(f)).as_ref() != Some(&w.cycle_type) {
                return false;
            }
            let ok = match w.role {
                WitnessRole::Primitivity => gives_primitivity(&w.cycle_type, n),
                WitnessRole::Transposition => yields_transposition(&w.cycle_type),
                WitnessRole::Jordan => gives_jordan(&w.cycle_type, n),
            };
            if !ok {
                return false;
            }
        }
        let has = |r: WitnessRole| self.witnesses.iter().any(|w| w.role == r);
        let irreducible = match &self.irreducibility {
            Irreducibility::Irreducible(c) => c.recheck(f),
            Irreducibility::Reducible(fac) => fac.expand() == *f && fac.factors.iter().map(|(_, m)| m).sum::<usize>() > 1,
        };
        let primitive = n == 1 || (irreducible && (is_prime_u64(n as u64) || has(WitnessRole::Primitivity)));
        match self.status {
            GaloisStatus::CertifiedSn => n == 1 || (primitive && !self.disc_square && has(WitnessRole::Transposition)),
            GaloisStatus::CertifiedSubsetAn => primitive && self.disc_square && has(WitnessRole::Jordan),
            GaloisStatus::NotSn => self.disc_square || !self.irreducibility.is_irreducible(),
            GaloisStatus::EvidenceOnly => true,
        }
    }
}

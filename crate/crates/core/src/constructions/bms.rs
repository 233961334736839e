//! Prime triples `r = nⁿ p + (n−1)^{n−1} q` and the trinomials
//! `Xⁿ − X^{n−1} − p/q`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::exact::integer::primes_up_to;
use crate::exact::{is_probable_prime, IntPoly, Poly, Primality};
use crate::galois::{
    galois_certify, ramified_primes, transposition_inertia_check, GaloisCertificate, GaloisStatus, InfiniteStatus,
    PlaceStatus, RamificationReport, DEFAULT_FACTOR_BOUND, DEFAULT_PRIME_BUDGET,
};

use super::{ConstructionError, ScanStats};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BmsBounds {
    pub p_max: u64,
    pub q_max: u64,
    pub prime_budget: usize,
    pub factor_bound: u64,
    pub require_proven: bool,
    /// Also demand that inertia at `r` is generated by a transposition.
    pub require_inertia: bool,
}

impl Default for BmsBounds {
    fn default() -> Self {
        BmsBounds {
            p_max: 50,
            q_max: 50,
            prime_budget: DEFAULT_PRIME_BUDGET,
            factor_bound: DEFAULT_FACTOR_BOUND,
            require_proven: false,
            require_inertia: false,
        }
    }
}

#[derive(Clone, Debug)]
pub struct BmsTriple {
    pub n: usize,
    pub p: u64,
    pub q: u64,
    pub r: BigInt,
    pub r_primality: Primality,
    /// `q Xⁿ − q X^{n−1} − p`.
    pub qf: IntPoly,
    /// `yⁿ − q y^{n−1} − p q^{n−1}`, from `y = qX`.
    pub model: IntPoly,
    pub galois: GaloisCertificate,
    pub ramification: RamificationReport,
    pub inertia: Option<bool>,
    pub stats: ScanStats,
}

pub fn triple_r(n: usize, p: u64, q: u64) -> BigInt {
    BigInt::from(n).pow(n as u32) * p + BigInt::from(n - 1).pow(n as u32 - 1) * q
}

pub fn cleared_trinomial(n: usize, p: u64, q: u64) -> IntPoly {
    let mut c = vec![BigInt::zero(); n + 1];
    c[n] = BigInt::from(q);
    c[n - 1] -= q;
    c[0] -= p;
    Poly::from_vec(c)
}

pub fn integral_model(n: usize, p: u64, q: u64) -> IntPoly {
    let mut c = vec![BigInt::zero(); n + 1];
    c[n] = BigInt::from(1);
    c[n - 1] -= q;
    c[0] -= BigInt::from(p) * BigInt::from(q).pow(n as u32 - 1);
    Poly::from_vec(c)
}

/// Primes classified ramified or undecided, all of which must lie in `allowed`.
fn within(report: &RamificationReport, allowed: &[BigInt]) -> bool {
    report.places.iter().all(|pl| pl.status == PlaceStatus::Unramified || allowed.contains(&pl.prime))
}

struct Found {
    r: BigInt,
    r_primality: Primality,
    galois: GaloisCertificate,
    ramification: RamificationReport,
    inertia: Option<bool>,
}

fn examine(n: usize, p: u64, q: u64, bounds: &BmsBounds) -> Option<Found> {
    let r = triple_r(n, p, q);
    let r_primality = is_probable_prime(&r).ok()?;
    if r_primality == Primality::Composite || (bounds.require_proven && r_primality != Primality::Prime) {
        return None;
    }
    let model = integral_model(n, p, q);
    let galois = galois_certify(&model, bounds.prime_budget).ok()?;
    if galois.status != GaloisStatus::CertifiedSn {
        return None;
    }
    let ramification = ramified_primes(&model, bounds.factor_bound).ok()?;
    if ramification.is_partial() {
        return None;
    }
    if !within(&ramification, &[BigInt::from(p), BigInt::from(q), r.clone()]) {
        return None;
    }
    let inertia = if bounds.require_inertia {
        if !transposition_inertia_check(&model, &r).ok()? {
            return None;
        }
        Some(true)
    } else {
        None
    };
    Some(Found { r, r_primality, galois, ramification, inertia })
}

/// First certified triple in the order `p` ascending, then `q` ascending.
pub fn bms_search(n: usize, bounds: &BmsBounds) -> Result<BmsTriple, ConstructionError> {
    if n < 2 {
        return Err(ConstructionError::Input(format!("BMS search needs n >= 2, got {n}")));
    }
    let ps = primes_up_to(bounds.p_max);
    let qs = primes_up_to(bounds.q_max);
    let total = (ps.len() * qs.len()) as u64;
    let hit = crate::par::find_first(
        0,
        total,
        8,
        |i| {
            let (p, q) = (ps[(i / qs.len() as u64) as usize], qs[(i % qs.len() as u64) as usize]);
            examine(n, p, q, bounds).map(|f| (p, q, f))
        },
        |_| true,
    );
    let Some((i, (p, q, found))) = hit else {
        return Err(ConstructionError::not_found(
            "bms_search",
            format!("no certified triple with p <= {}, q <= {} ({total} pairs scanned)", bounds.p_max, bounds.q_max),
        ));
    };
    Ok(BmsTriple {
        n,
        p,
        q,
        r: found.r,
        r_primality: found.r_primality,
        qf: cleared_trinomial(n, p, q),
        model: integral_model(n, p, q),
        galois: found.galois,
        ramification: found.ramification,
        inertia: found.inertia,
        stats: ScanStats { scanned: i + 1, range: (0, total) },
    })
}

impl BmsTriple {
    /// Places that may ramify in the splitting field: ramified or undecided
    /// primes, then `∞` when some root is not real.
    pub fn ramified_set_bound(&self) -> Vec<String> {
        let mut out: Vec<String> = self
            .ramification
            .places
            .iter()
            .filter(|pl| pl.status != PlaceStatus::Unramified)
            .map(|pl| pl.prime.to_string())
            .collect();
        if !matches!(self.ramification.infinite, InfiniteStatus::AllReal) {
            out.push("∞".into());
        }
        out
    }

    pub fn verify(&self) -> Result<(), ConstructionError> {
        let fail = |m: &str| Err(ConstructionError::Verification(format!("BMS triple: {m}")));
        if self.n < 2 || triple_r(self.n, self.p, self.q) != self.r {
            return fail("linear relation r = n^n p + (n-1)^(n-1) q");
        }
        for x in [BigInt::from(self.p), BigInt::from(self.q)] {
            if is_probable_prime(&x)? != Primality::Prime {
                return fail("p or q is not prime");
            }
        }
        if is_probable_prime(&self.r)? != self.r_primality || !self.r_primality.is_prime_like() {
            return fail("primality of r");
        }
        if self.qf != cleared_trinomial(self.n, self.p, self.q) || self.model != integral_model(self.n, self.p, self.q) {
            return fail("polynomials differ");
        }
        if self.galois.status != GaloisStatus::CertifiedSn || !self.galois.recheck(&self.model) {
            return fail("Galois certificate");
        }
        if !self.ramification.recheck(&self.model)
            || !within(&self.ramification, &[BigInt::from(self.p), BigInt::from(self.q), self.r.clone()])
        {
            return fail("ramification report");
        }
        if let Some(true) = self.inertia {
            if !transposition_inertia_check(&self.model, &self.r)? {
                return fail("transposition inertia at r");
            }
        }
        Ok(())
    }
}

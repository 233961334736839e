//! The family `Xⁿ + T X^{n−4} + 1` over `F_q(T)`, `q` a power of 2.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exact::{cycle_type, discriminant, factor_mod, GaloisField, Poly, PolyRing, PrimeField, Ring};

use super::ConstructionError;

/// Cycle-type sampling is evidence for `A_n`; it is not a certificate.
pub const EVIDENCE_NOTE: &str = "all sampled Frobenius cycle types are even permutations; consistent with A_n, not a proof";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FfieldOptions {
    pub samples: usize,
    pub seed: u64,
}

impl Default for FfieldOptions {
    fn default() -> Self {
        FfieldOptions { samples: 200, seed: 0 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sample {
    /// Size of the residue field `F_{q^k}` of the specialization.
    pub field_size: u128,
    /// `γ` as the integer whose base-2 digits are its coordinates.
    pub gamma: u128,
    pub cycle_type: Vec<usize>,
    pub even: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FfieldInstance {
    pub q: u64,
    pub n: usize,
    /// `disc_X f` in `F_2[T]`, lowest degree first.
    pub disc: Vec<u64>,
    /// Irreducible factors of `disc_X f` over `F_q` with multiplicities; each
    /// factor is a list of `F_q` coordinate vectors.
    pub candidates: Vec<(Vec<Vec<u64>>, usize)>,
    pub samples: Vec<Sample>,
    pub all_even: bool,
    pub seed: u64,
}

impl FfieldInstance {
    pub fn disc_is_constant(&self) -> bool {
        self.disc.len() == 1
    }

    /// Finite places that can ramify are among the candidates; with a
    /// constant discriminant only `T = ∞` remains.
    pub fn ramified_set_bound(&self) -> Vec<String> {
        let mut out: Vec<String> = self.candidates.iter().map(|(f, _)| format!("{f:?}")).collect();
        out.push("∞".into());
        out
    }

    pub fn verify(&self) -> Result<(), ConstructionError> {
        let again = function_field_family(self.n, self.q, &FfieldOptions { samples: self.samples.len(), seed: self.seed })?;
        if &again != self {
            return Err(ConstructionError::Verification("function-field instance differs on recomputation".into()));
        }
        if self.disc_is_constant() && !self.candidates.is_empty() {
            return Err(ConstructionError::Verification("constant discriminant with finite candidates".into()));
        }
        Ok(())
    }
}

fn log2_exact(q: u64) -> Option<u32> {
    (q >= 2 && q.is_power_of_two()).then(|| q.trailing_zeros())
}

/// `Xⁿ + T X^{n−4} + 1` with coefficients in `F_2[T]`.
pub fn family_polynomial(n: usize) -> Poly<Poly<u64>> {
    let t = PolyRing::new(PrimeField::new(2));
    let mut c = vec![t.zero(); n + 1];
    c[0] = t.one();
    c[n - 4] = t.x();
    c[n] = t.one();
    PolyRing::new(t).from_coeffs(c)
}

pub fn function_field_family(n: usize, q: u64, opts: &FfieldOptions) -> Result<FfieldInstance, ConstructionError> {
    if q < 2 {
        return Err(ConstructionError::Input(format!("q = {q} is not a prime power")));
    }
    if q % 2 == 1 {
        return Err(ConstructionError::Unsupported(format!("odd characteristic (q = {q}) is not covered by this family")));
    }
    let Some(e) = log2_exact(q) else {
        return Err(ConstructionError::Input(format!("q = {q} is not a power of 2")));
    };
    if n < 9 || n % 8 != 1 {
        return Err(ConstructionError::Precondition(format!("need n >= 9 and n = 1 mod 8, got n = {n}")));
    }
    let f2t = PolyRing::new(PrimeField::new(2));
    let f = family_polynomial(n);
    let disc = discriminant(&PolyRing::new(f2t.clone()), &f)?;
    if disc.is_zero() {
        return Err(ConstructionError::Degenerate("discriminant vanishes".into()));
    }
    let fq = GaloisField::new(2, e);
    let candidates = if disc.degree() == Some(0) {
        Vec::new()
    } else {
        let lifted = PolyRing::new(fq.clone()).from_coeffs(disc.coeffs().iter().map(|&c| fq.embed(c)).collect());
        let fac = factor_mod(&PolyRing::new(fq.clone()), &lifted, opts.seed)?;
        fac.factors.into_iter().map(|(g, m)| (g.into_coeffs(), m)).collect()
    };

    let fields: Vec<GaloisField> = (1..=3).map(|k| GaloisField::new(2, e * k)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut samples = Vec::with_capacity(opts.samples);
    for i in 0..opts.samples {
        let gf = &fields[i % 3];
        let ring = PolyRing::new(gf.clone());
        let mut tries = 0;
        let (gamma, ct) = loop {
            tries += 1;
            if tries > 1000 {
                return Err(ConstructionError::not_found("function_field_family", "no specialization avoids the discriminant"));
            }
            let idx = rng.gen_range(0..gf.size());
            let g = gf.from_index(idx);
            let d = disc.coeffs().iter().rev().fold(gf.zero(), |acc, &c| gf.add(&gf.mul(&acc, &g), &gf.embed(c)));
            if gf.is_zero(&d) {
                continue;
            }
            let mut c = vec![gf.zero(); n + 1];
            c[0] = gf.one();
            c[n - 4] = g;
            c[n] = gf.one();
            match cycle_type(&ring, &ring.from_coeffs(c)) {
                Some(ct) => break (idx, ct),
                None => return Err(ConstructionError::Verification("specialization with nonzero discriminant is not squarefree".into())),
            }
        };
        let even = ct.iter().map(|l| l - 1).sum::<usize>() % 2 == 0;
        samples.push(Sample { field_size: gf.size(), gamma, cycle_type: ct, even });
    }
    let all_even = samples.iter().all(|s| s.even);
    Ok(FfieldInstance { q, n, disc: disc.into_coeffs(), candidates, samples, all_even, seed: opts.seed })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n9_over_f2() {
        let inst = function_field_family(9, 2, &FfieldOptions::default()).unwrap();
        assert_eq!(inst.disc, vec![1]);
        assert!(inst.candidates.is_empty());
        assert_eq!(inst.samples.len(), 200);
        assert!(inst.all_even);
        for (k, size) in [2u128, 4, 8].into_iter().enumerate() {
            assert!(inst.samples.iter().skip(k).step_by(3).all(|s| s.field_size == size));
        }
        inst.verify().unwrap();
    }

    #[test]
    fn gamma_zero_factors_like_x9_plus_1() {
        let inst = function_field_family(9, 2, &FfieldOptions { samples: 60, seed: 3 }).unwrap();
        for s in inst.samples.iter().filter(|s| s.field_size == 2 && s.gamma == 0) {
            assert_eq!(s.cycle_type, vec![6, 2, 1]);
        }
    }

    #[test]
    fn preconditions() {
        let o = FfieldOptions::default();
        assert!(matches!(function_field_family(10, 2, &o), Err(ConstructionError::Precondition(_))));
        assert!(matches!(function_field_family(5, 2, &o), Err(ConstructionError::Precondition(_))));
        assert!(matches!(function_field_family(9, 3, &o), Err(ConstructionError::Unsupported(_))));
        assert!(matches!(function_field_family(9, 6, &o), Err(ConstructionError::Input(_))));
    }

    #[test]
    fn f4_uses_larger_fields() {
        let inst = function_field_family(9, 4, &FfieldOptions { samples: 9, seed: 1 }).unwrap();
        assert_eq!(inst.samples[2].field_size, 64);
        assert!(inst.all_even);
    }
}

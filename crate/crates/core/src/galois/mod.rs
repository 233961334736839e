//! Certificates over ℚ: irreducibility, Galois group `S_n`/`A_n` via Dedekind
//! cycle types, ramified primes via Dedekind's criterion, and the infinite
//! place via Sturm sequences.

pub mod certify;
pub mod irreducible;
pub mod ramify;

use thiserror::Error;

use crate::exact::ExactError;

pub use certify::{galois_certify, GaloisCertificate, GaloisStatus, Witness, WitnessRole, DEFAULT_PRIME_BUDGET};
pub use irreducible::{
    factor_over_q, irreducible_over_q, Irreducibility, IrreducibilityCertificate, IrreducibilityMethod, QFactorization,
};
pub use ramify::{
    infinite_place_status, ramified_primes, transposition_inertia_check, Criterion, FinitePlace, InfiniteStatus,
    PlaceStatus, RamificationReport, CLOSURE_NOTE, DEFAULT_FACTOR_BOUND,
};

#[derive(Clone, Debug, PartialEq, Error)]
pub enum GaloisError {
    #[error("input error: {0}")]
    Input(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

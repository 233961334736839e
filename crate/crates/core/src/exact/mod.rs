//! Exact arithmetic: rings, dense polynomials, resultants, Sturm sequences,
//! finite-field factorization and integer primality.

pub mod factor;
pub mod integer;
pub mod modular;
pub mod poly;
pub mod resultant;
pub mod ring;
pub mod sturm;

pub use factor::{cycle_type, factor_mod, is_irreducible, is_squarefree_mod, Factorization};
pub use integer::{content_and_primitive, factor_integer, is_probable_prime, IntFactorization, Primality};
pub use modular::{BigPrimeField, FiniteField, GaloisField, PrimeField};
pub use poly::{IntPoly, Poly, PolyRing};
pub use resultant::{discriminant, resultant};
pub use ring::{Field, Integers, IntegralDomain, Rationals, Ring};
pub use sturm::{real_root_count, sturm_count, Bound};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("undefined input: {0}")]
    UndefinedInput(&'static str),
    #[error("division was not exact")]
    InexactDivision,
    #[error("polynomial is identically zero modulo p")]
    IdenticallyZero,
    #[error("argument outside domain: {0}")]
    Domain(&'static str),
}

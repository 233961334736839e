//! Explicit extensions: the Schinzel family over ℚ, prime-triple trinomials,
//! the characteristic-2 function-field family, the Frucht-graph recipe, and
//! the assembly of realization certificates.

pub mod bms;
pub mod ffield;
pub mod recipe;
pub mod realize;
pub mod schinzel;

use thiserror::Error;

use crate::exact::ExactError;
use crate::galois::GaloisError;
use crate::graphs::GraphError;
use crate::permgroup::GroupError;

pub use bms::{bms_search, integral_model, BmsBounds, BmsTriple};
pub use ffield::{function_field_family, FfieldInstance, FfieldOptions, Sample};
pub use recipe::{frucht_field_recipe, FruchtRecipe};
pub use realize::{
    an_minus_1_polynomial, realize, KPolynomial, LSource, RealizationCertificate, RealizeOptions, Strategy,
    SubgroupChoice,
};
pub use schinzel::{
    build_c_and_p, build_f, compute_h, hilbert_modulus, schinzel_search, select_a, Base, FxaT, HilbertModulus,
    SchinzelInstance, SchinzelParams, SelectedA,
};

#[derive(Clone, Debug, PartialEq, Error)]
pub enum ConstructionError {
    #[error("input error: {0}")]
    Input(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("not found in stage `{stage}`: {detail}")]
    NotFound { stage: String, detail: String },
    #[error("verification failed: {0}")]
    Verification(String),
    #[error(transparent)]
    Galois(#[from] GaloisError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

impl ConstructionError {
    pub(crate) fn not_found(stage: &str, detail: impl Into<String>) -> Self {
        ConstructionError::NotFound { stage: stage.into(), detail: detail.into() }
    }
}

/// Deterministic scan statistics.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ScanStats {
    pub scanned: u64,
    pub range: (u64, u64),
}

//! Minimally ramified realizations of small finite groups as automorphism
//! groups of field extensions, with exact certificates.

pub mod constructions;
pub mod exact;
pub mod galois;
pub mod graphs;
pub mod par;
pub mod permgroup;

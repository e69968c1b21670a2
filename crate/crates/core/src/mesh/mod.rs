//! Mesh categories of `Z Delta` for simply-laced Dynkin `Delta`, their orbit
//! categories, rigid and cluster-tilting objects, and endomorphism algebras.

pub mod dot;
pub mod dynkin;
pub mod endo;
pub mod hom;
pub mod orbit;
pub mod translation;

pub use dynkin::{Dynkin, DynkinType};
pub use hom::{hom_dim_universal, knitting_hom_dim, HomFrom};
pub use orbit::{GroupElement, OrbitCategory, OrbitSpec};
pub use translation::{StableTranslationQuiver, Vertex};

/// Number of indecomposables of the stable category, shaped
/// `Z A_{me-2} / <tau^m>`.
pub fn stmod_count(m: usize, e: usize) -> usize {
    m * (m * e).saturating_sub(2)
}

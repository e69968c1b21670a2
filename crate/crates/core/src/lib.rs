//! Exact computations with quivers, truncated completed path algebras,
//! hyperpotentials, Ginzburg dg-algebras, Jacobian algebras, fractional
//! Calabi-Yau lattices, mesh categories of Dynkin type and rank-2 cluster
//! algebras.
//!
//! Paths compose left to right throughout; see [`quiver`].

pub mod cli;
pub mod cluster;
pub mod cy_lattice;
pub mod error;
pub mod ginzburg;
pub mod hochschild;
pub mod hyperpotential;
pub mod jacobian;
pub mod linalg;
pub mod mesh;
pub mod path_algebra;
pub mod quiver;
pub mod scalar;

pub use error::{Error, Result};
pub use path_algebra::{AlgebraElement, Substitution, Tensor};
pub use quiver::{Path, Quiver};
pub use scalar::{Field, Scalar};

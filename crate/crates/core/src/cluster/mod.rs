//! Rank-2 cluster algebras by exact mutation of rational functions.

pub mod poly;
pub mod rational;
pub mod seed;

pub use poly::{Monomial, MultiPoly};
pub use rational::RationalFunction;
pub use seed::{enumerate_variables, exchange_pattern, laurent_check, ClusterSeed};

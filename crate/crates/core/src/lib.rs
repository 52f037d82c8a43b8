//! Fixed-point analysis of primitive permutation actions: constructions for
//! the standard families, exact class-fusion fixed-point formulas, witness
//! search against the integer cube bound fix(g)³ ≤ n, number-theoretic bound
//! sweeps, and the prime root-count density experiment.

pub mod actions;
pub mod bounds;
pub mod corpus;
pub mod density;
pub mod error;
pub mod formulas;
pub mod group;
pub mod linalg;
pub mod perm;
pub mod rng;
pub mod sweeps;
pub mod verifier;
pub mod witnesses;

pub use error::{Error, Result};

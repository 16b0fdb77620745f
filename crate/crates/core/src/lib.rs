//! Exact computation of Leibniz homology and cohomology, equivariant
//! Leibniz cohomology for finite group actions, and the shuffle-based cup
//! product that turns cohomology into a graded zinbiel algebra.

pub mod algebra;
pub mod catalog;
pub mod cli;
pub mod complexes;
pub mod equivariant;
pub mod error;
pub mod field;
pub mod group;
pub mod linalg;
pub mod problem;
pub mod shuffle;

pub use error::{Error, Result};
pub use field::{Field, Scalar};
pub use linalg::{Matrix, Vector};

//! Exact computations for finite-dimensional algebras graded by a finite
//! group and equipped with a graded involution: codimensions, proper
//! codimensions, low-degree cocharacter multiplicities and bounded-degree
//! T-ideal verification.

pub mod catalog;
pub mod claims;
pub mod cochar;
pub mod error;
pub mod exec;
pub mod groups;
pub mod gstar;
pub mod eval;
pub mod linalg;
pub mod pattern;
pub mod poly;
pub mod scalar;
pub mod select;
pub mod tideal;

pub use error::{Error, Result};
pub use exec::Exec;
pub use groups::{cyclic, direct_product, FiniteGroup};
pub use gstar::{GStarAlgebra, Sign, SignedDegree};
pub use scalar::Scalar;

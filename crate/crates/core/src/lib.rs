//! Exact computations with minuscule coweights of root systems.

pub mod error;
pub mod exact;
pub mod roots;
pub mod weyl;
pub mod poly;
pub mod invariants;
pub mod verify;
pub mod cache;

pub use error::{Error, Result};
pub use exact::{dot, rat, Matrix, Rational, Vector};
pub use roots::{is_minuscule, orthogonal_subsystem, Coweight, Family, RootSystem, RootSystemLabel};

//! Exact rational scalars, vectors and matrices.

mod matrix;
mod rational;
mod vector;

pub use matrix::{Matrix, RowEchelon};
pub use rational::{rat, ParseRationalError, Rational};
pub use vector::{dot, Vector};

//! Exact checks of the identities, orbit decompositions and generation
//! statements, each producing a [`VerifyReport`].

mod common;
pub mod edata;
pub mod identities;
pub mod orbits;
pub mod prop1;
pub mod prop2;
pub mod report;
pub mod suite;
pub mod triangle;

pub use identities::verify_identities;
pub use orbits::verify_orbit_structure;
pub use prop1::{default_prop1_samples, fiber_check, verify_prop1, verify_prop1_defaults};
pub use prop2::{default_max_degree, prop2_cases, verify_prop2, Strategy};
pub use report::{Check, Status, VerifyReport};
pub use triangle::{triangle_witness, verify_triangles, Triangle};

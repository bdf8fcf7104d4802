//! Cyclic orbit codes in `F_{q^n}`.
//!
//! Field towers, canonical subspaces, orbits under the Singer cycle, its
//! normalizer and the extension-field groups, automorphism groups, weight
//! distributions and isometry classification.

pub mod adjoint;
pub mod cli;
pub mod error;
pub mod gf;
pub mod linalg;
pub mod orbit;
pub mod structure;
pub mod subspace;

pub use error::{Error, Result};
pub use gf::{make_field, FieldElement, FieldTower};
pub use linalg::{LinearMap, Matrix};
pub use orbit::{normalizer_orbit, singer_orbit, GroupTag, OrbitCode};
pub use subspace::Subspace;

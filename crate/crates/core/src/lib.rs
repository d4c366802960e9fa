//! Exact rational measures of rational polyhedra.
//!
//! A rational polyhedron is a finite union of simplexes with rational
//! vertices. Its `d`-dimensional rational measure `λ_d` is computed from a
//! regular (unimodular) triangulation: each maximal `d`-simplex `T`
//! contributes `1/(d!·den(T))`. Regular triangulations come from resolving
//! the singularities of the fan over a triangulation by stellar
//! subdivisions.

pub mod convex;
pub mod error;
pub mod fan;
pub mod io;
pub mod lattice;
mod linalg;
pub mod measure;
pub mod polyhedron;
pub mod sample;
pub mod simplicial;
pub mod transforms;
pub mod verify;

pub use error::{Error, Result};
pub use fan::{desingularize, regular_triangulation, Cone, SimplicialFan};
pub use lattice::{den, homogeneous, rat, IntMat, IntVec, Rat, RatPoint};
pub use measure::{lambda, lambda_vector, MeasureValue};
pub use polyhedron::{AffineSubspace, Polyhedron};
pub use simplicial::{Complex, Simplex};
pub use transforms::GnMap;

//! Combinatorics of stacked triangulated manifolds.
//!
//! This crate implements the calculus of simplicial complexes needed to work
//! with stacked triangulations and Walkup-style handle surgery:
//!
//! - [`complex`]: facet-based simplicial complexes (links, induced
//!   subcomplexes, missing faces, chordality of the 1-skeleton, ...),
//! - [`linalg`]: exact rank and kernel computations over prime fields and
//!   the rationals,
//! - [`homology`]: reduced and relative simplicial homology with field
//!   coefficients, induced-map ranks, orientability,
//! - [`recognition`]: homology sphere / ball / manifold classification and
//!   boundary extraction,
//! - [`stacked`]: stackedness tests (with boundary, closed, local) together
//!   with Kalai's chordality criterion and tree certificates,
//! - [`surgery`]: admissible facet bijections, combinatorial and simplicial
//!   handle addition, simplicial handle deletion,
//! - [`generators`]: seeded constructors for stacked balls/spheres and the
//!   handle-addition classes, with replayable certificates,
//! - [`tightness`]: brute-force tightness and the numeric lower-bound
//!   criteria,
//! - [`cli`]: the command-line front end and file formats.
//!
//! See the `examples/` directory for one runnable example per capability.

pub mod cli;
pub mod complex;
pub mod generators;
pub mod homology;
pub mod linalg;
pub mod recognition;
pub mod stacked;
pub mod surgery;
pub mod tightness;

mod error;

pub use complex::{Complex, FVector, Face};
pub use error::Error;
pub use linalg::FieldSpec;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

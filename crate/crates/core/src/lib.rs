//! Exact-integer lattice toolkit for the middle-cohomology lattice of cubic
//! fourfolds.
//!
//! The crate builds the fixed rank-23 unimodular lattice
//! `L = E8 ⊕ E8 ⊕ U ⊕ U ⊕ I(3,0)` of signature (21,2), embeds explicit
//! positive-definite sublattices `h² ∈ M ⊂ L`, and machine-checks the
//! properties that make such an `M` a witness for intersections of Hassett
//! divisors: positive definiteness, saturation, minimum norm ≥ 3 (no vector
//! of norm 1 or 2), and the expected determinants.
//!
//! Everything is exact: arbitrary-precision integers for lattice data,
//! rationals inside the congruence-diagonalization and short-vector
//! enumeration routines. There is no floating point anywhere.

pub mod exact_linalg;
pub mod hassett;
pub mod lattice_core;
pub mod quadform;

pub use exact_linalg::{GramMatrix, IntMatrix, LinalgError, SnfResult};
pub use hassett::{
    DivisorLabel, LabelledSublattice, SubReport, SweepSummary, Witness, WitnessKind, WitnessReport,
};
pub use lattice_core::{AmbientLattice, EmbeddedSublattice, LatticeVector, AMBIENT_RANK};
pub use quadform::{ShortVector, ShortVectorList};

//! Lattice-valued threshold functions over the Boolean cube.
//!
//! Every isotone Boolean function is a threshold function once weights and
//! threshold are allowed to live in a finite lattice instead of the reals.
//! This crate provides the pieces: up-sets of `{0,1}^n`, the free
//! distributive lattice on `n` generators, finite lattices given by tables,
//! lattice-valued functions and their cuts, threshold synthesis, the
//! classical (real-weight) threshold test, and a decision procedure for
//! which closure systems of up-sets arise as cuts of a linear combination.

pub mod bitset;
pub mod boolean_domain;
pub mod closure_system;
pub mod error;
pub mod fourier_motzkin;
pub mod free_distributive_lattice;
pub mod lattice;
pub mod lattice_valued;
pub mod representability;
pub mod threshold;

pub use bitset::BitSet;
pub use boolean_domain::{enumerate_up_sets, Point, UpSet};
pub use closure_system::{ClosureSystem, Domain};
pub use error::{Error, Result};
pub use free_distributive_lattice::{FdlElement, FreeDistributiveLattice, MaterializedFdl};
pub use lattice::{verify_lattice, FiniteLattice, Lattice, LatticeReport, LatticeSpec};
pub use lattice_valued::{synthesize_from_closure_system, LValuedFunction, LValuedFunctionSpec};
pub use representability::{
    check_conditions, synthesize_linear_representation, ClosureSystemSpec, Conditions,
    RepresentabilityReport,
};
pub use threshold::{
    beta_bar, is_classical_threshold, is_isotone, synthesize_threshold, BooleanFunction,
    ClassicalWitness, ThresholdRepr,
};

//! Lorentz covariant bilinear indicators for pairs of Dirac spinors.
//!
//! A two-particle state of Dirac spinors held by two separated observers is a
//! 4x4 complex coefficient matrix. This crate builds the Dirac matrix algebra,
//! the finite spinor and vector representations of the proper orthochronous
//! Lorentz group, and nine covariant bilinear quantities of the coefficient
//! matrix (two scalars, two pseudoscalars mixed across the labs, four
//! vectors, and one bi-vector, 36 complex components in total). The nine
//! quantities vanish simultaneously exactly when the state is a product
//! state, so they double as an entanglement test that both observers can
//! evaluate without sharing a reference frame.
//!
//! Module map:
//!
//! * [`matrix`] - fixed-size 4x4 complex/real matrix types and numerics.
//! * [`clifford`] - Dirac matrices, charge conjugation, chirality, generators.
//! * [`lorentz`] - finite spinor/vector transformations, parity, time reversal.
//! * [`states`] - spinors, two-particle states, local transformations.
//! * [`bitensors`] - the nine covariant quantities and their transformation laws.
//! * [`detect`] - minor table, linear identities, product-state decision.
//! * [`files`] - JSON documents for states, reports, and verdicts.
//! * [`verify`] - randomized self-check suites used by the CLI and tests.
//! * [`cli`] - the `bitensor` command line (gen / invariants / transform /
//!   decide / verify).
//!
//! The runnable programs under `examples/` walk through each capability.

// Dense fixed-size numerics reads most clearly with explicit index loops.
#![allow(clippy::needless_range_loop)]

pub mod bitensors;
pub mod cli;
pub mod clifford;
pub mod detect;
pub mod files;
pub mod lorentz;
pub mod matrix;
pub mod states;
pub mod verify;

mod error;

pub use bitensors::{BitensorSet, Lab};
pub use detect::Verdict;
pub use error::Error;
pub use lorentz::{OmegaParams, SpinorTransform, TransformKind, VectorTransform};
pub use matrix::{Mat4c, Mat4r, DEFAULT_TOL};
pub use states::{Spinor, TwoParticleState};

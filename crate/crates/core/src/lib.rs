//! Supersymmetric spin chains and the anyon fusion spaces their product
//! zero modes reproduce.
//!
//! * [`tensor`]: chain bases, sparse complex operators, numerical kernels.
//! * [`susy`]: local and global supercharges for each chain model, behind
//!   the [`susy::ChainModel`] trait and a name-keyed registry.
//! * [`zeromodes`]: product zero-mode enumeration, exact counts, generating
//!   functions and the sector-resolved kernel census.
//! * [`anyon`]: fusion rules for the level 2, 3 and 4 anyon models, fusion
//!   bases, F/R data and the pentagon and hexagon checks.
//! * [`braidrep`]: Temperley-Lieb and Jones braid representations on the
//!   Fibonacci fusion basis.
//! * [`bridge`]: fusion-basis ↔ zero-mode correspondences and braid
//!   generators lifted onto the qubit chain.

pub mod anyon;
pub mod braidrep;
pub mod bridge;
pub mod counting;
pub mod error;
pub mod report;
pub mod susy;
pub mod tensor;
pub mod zeromodes;

pub use error::{Error, Result};

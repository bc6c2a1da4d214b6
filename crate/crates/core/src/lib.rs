//! Cube graph families over `{0,1}^n` and `{-1,0,1}^n`.
//!
//! Four constructions are covered: the plain n-cube, the complete Hamming
//! graph on the Boolean address space, the n-cube with triangulated 2-faces
//! (cotan Laplacian), and the 3^n-vertex structure made of 2^n unit cubes
//! glued at a shared origin. For each one the crate builds dense matrices
//! under binary or Gray vertex orderings, solves their spectra and checks the
//! closed forms that describe them.
//!
//! The [`verify`] module ties everything into a claim-by-claim report that
//! the `cubelab` binary exposes as `cubelab verify`.

pub mod bitspace;
pub mod cubegraphs;
pub mod error;
pub mod export;
pub mod harmonic;
pub mod meshcotan;
pub mod oeis;
pub mod predicates;
pub mod sequences;
pub mod spectra;
pub mod verify;

pub use bitspace::{BitAddress, OrderingScheme, TernaryVertex};
pub use cubegraphs::{Family, GraphMatrix, MatrixKind};
pub use predicates::Rational;
pub use error::{Error, Result};

pub use spectra::Spectrum;

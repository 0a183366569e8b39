//! Adjacency-diametrical (AD) matrices of connected graphs.
//!
//! For a connected graph `G` of diameter `d ≥ 2`, `AD(G) = A(G) + d·A_d(G)`
//! where `A_d` marks antipodal pairs (vertices at distance `d`). For
//! `d = 1` the AD matrix is the adjacency matrix. The crate provides
//!
//! - [`graph`]: graphs, named families, distances and the AD matrix,
//! - [`spectra`]: eigenvalues, exact characteristic polynomials and
//!   closed forms for paths, cycles and double stars,
//! - [`partitions`]: the combinatorial expansion of the determinant and
//!   characteristic coefficients over AD partitions,
//! - [`invariants`]: AD degrees, AD independence and chromatic numbers,
//!   and checkers for the associated spectral bounds,
//! - [`products`]: join, lexicographic and Cartesian products with
//!   predicted AD spectra,
//! - [`verify`]: population sweeps that check every identity at once.

pub mod error;
pub mod graph;
pub mod invariants;
pub mod par;
pub mod partitions;
pub mod products;
pub mod spectra;
pub mod verify;

pub use error::{Error, Result};

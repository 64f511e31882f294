//! Graph Laplace and Dirac operators and the combinatorics around them.
//!
//! The crate is `no_std` and only needs `alloc`. Modules:
//!
//! | Module | Contents |
//! |--------|----------|
//! | [`graph`] | oriented simple graphs, gluing, components, cycle space, incidence matrix |
//! | [`matrix`] | exact integer matrices and dense complex matrices |
//! | [`eigen`] | cyclic Jacobi eigensolver for Hermitian matrices |
//! | [`ops`] | even/odd Laplacians, incidence and spectral Dirac operators, kernels |
//! | [`evolution`] | Schrödinger/Dirac time evolution, steady states, averages, quadratic forms |
//! | [`walks`] | signed vertex-edge walks and powers of the incidence Dirac operator |
//! | [`dimer`] | lattice perfect matchings, Kasteleyn determinants, tiling recurrences and gluing formulas |
//! | [`clifford`] | Clifford graph algebras and their centers |
//!
//! Vertex and edge indices are 0-based everywhere. Text renderings that
//! follow the usual mathematical labels (`v1`, `e3`, `e1 e3 e5`) are 1-based.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod clifford;
pub mod dimer;
pub mod eigen;
pub mod evolution;
pub mod graph;
pub mod matrix;
pub mod ops;
pub mod walks;

pub use num_bigint::{BigInt, BigUint};
pub use num_complex::Complex64;

pub use graph::{ComponentPartition, CycleBasisElement, GraphError, OrientedGraph};
pub use matrix::{DenseMatrix, IntMatrix};

impl core::error::Error for matrix::Overflow {}
impl core::error::Error for graph::GraphError {}
impl core::error::Error for eigen::EigenError {}
impl core::error::Error for walks::WalkError {}
impl core::error::Error for dimer::DimerError {}
impl core::error::Error for clifford::CliffordError {}
impl core::error::Error for evolution::EvolutionError {}

//! The five graph operators and their spectral helpers.
//!
//! `Δ₊ = I·Iᵗ` acts on vertex states, `Δ₋ = Iᵗ·I` on edge states and the
//! incidence Dirac operator `[[0, I], [Iᵗ, 0]]` on vertex-edge states. The
//! spectral (even/odd) Dirac operators are the non-negative square roots of
//! `Δ₊` and `Δ₋`.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::eigen::{spectrum, EigenError, Spectrum};
use crate::graph::{incidence_matrix, OrientedGraph};
use crate::matrix::{DenseMatrix, IntMatrix};

/// Default relative tolerance for kernel membership.
pub const DEFAULT_KERNEL_TOL: f64 = 1e-9;
/// Eigenvalues of a PSD operator with `|λ| ≤ NEGATIVE_CLAMP · max(1, ‖M‖)` are treated as 0.
pub const NEGATIVE_CLAMP: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

/// Degree-minus-adjacency form of `Δ₊`.
fn degree_minus_adjacency(g: &OrientedGraph) -> IntMatrix {
    let n = g.vertex_count();
    let mut m = IntMatrix::zeros(n, n);
    for v in 0..n {
        m[(v, v)] = g.degree(v) as i64;
        for &(w, _) in g.neighbors(v) {
            m[(v, w)] = -1;
        }
    }
    m
}

/// `Δ₊ = I·Iᵗ`, cross-checked against `D − A` in debug builds.
pub fn even_laplacian(g: &OrientedGraph) -> IntMatrix {
    let inc = incidence_matrix(g);
    let lap = inc.try_mul(&inc.transpose()).expect("Laplacian entries are bounded by the degree");
    debug_assert_eq!(lap, degree_minus_adjacency(g));
    lap
}

/// `Δ₋ = Iᵗ·I`.
pub fn odd_laplacian(g: &OrientedGraph) -> IntMatrix {
    let inc = incidence_matrix(g);
    inc.transpose().try_mul(&inc).expect("Laplacian entries are bounded by 2")
}

pub fn laplacian(g: &OrientedGraph, parity: Parity) -> IntMatrix {
    match parity {
        Parity::Even => even_laplacian(g),
        Parity::Odd => odd_laplacian(g),
    }
}

/// `[[0, I], [Iᵗ, 0]]` on `|V| + |E|` coordinates, vertices first.
pub fn incidence_dirac(g: &OrientedGraph) -> IntMatrix {
    let nv = g.vertex_count();
    let inc = incidence_matrix(g);
    let mut d = IntMatrix::zeros(nv + g.edge_count(), nv + g.edge_count());
    for (j, &(t, h)) in g.edges().iter().enumerate() {
        for v in [t, h] {
            d[(v, nv + j)] = inc[(v, j)];
            d[(nv + j, v)] = inc[(v, j)];
        }
    }
    d
}

/// Non-negative square root `Q·√Λ·Qᴴ` of a positive semidefinite Hermitian matrix.
pub fn psd_sqrt(m: &DenseMatrix) -> Result<DenseMatrix, EigenError> {
    let spec = spectrum(m)?;
    let clamp = NEGATIVE_CLAMP * m.frobenius_norm().max(1.0);
    if let Some(&worst) = spec.eigenvalues.iter().find(|&&l| l < -clamp) {
        return Err(EigenError::NotPositiveSemidefinite { eigenvalue: worst });
    }
    Ok(spec.apply_function(|l| Complex64::new(if l <= clamp { 0.0 } else { libm::sqrt(l) }, 0.0)))
}

/// Even (`√Δ₊`) or odd (`√Δ₋`) Dirac operator.
pub fn spectral_dirac(g: &OrientedGraph, parity: Parity) -> Result<DenseMatrix, EigenError> {
    psd_sqrt(&laplacian(g, parity).to_dense())
}

/// Orthonormal basis of eigenvectors with `|λ| ≤ tol · max(1, ‖m‖_F)`.
pub fn kernel_basis(m: &DenseMatrix, tol: f64) -> Result<Vec<Vec<Complex64>>, EigenError> {
    let spec = spectrum(m)?;
    Ok(kernel_of(&spec, tol * m.frobenius_norm().max(1.0)))
}

/// Kernel vectors of an existing decomposition, with an absolute eigenvalue cutoff.
pub fn kernel_of(spec: &Spectrum, cutoff: f64) -> Vec<Vec<Complex64>> {
    (0..spec.dimension())
        .filter(|&k| spec.eigenvalues[k].abs() <= cutoff)
        .map(|k| spec.eigenvector(k))
        .collect()
}

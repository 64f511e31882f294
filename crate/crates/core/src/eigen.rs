//! Cyclic Jacobi eigensolver for Hermitian matrices.
//!
//! Each rotation first multiplies row/column `q` by a phase so that the
//! pivot `a_pq` becomes real and non-negative, then applies the classic real
//! Jacobi rotation. Real symmetric input never leaves the real line.

use alloc::vec::Vec;
use core::fmt;

use num_complex::Complex64;

use crate::matrix::DenseMatrix;

/// Hermitian check tolerance, relative to `‖M‖_F`.
pub const HERMITIAN_TOL: f64 = 1e-12;
/// Sweeps stop once the off-diagonal Frobenius mass drops below this fraction of `‖M‖_F`.
pub const CONVERGENCE_TOL: f64 = 1e-13;
const MAX_SWEEPS: usize = 100;

#[derive(Debug, Clone, PartialEq)]
pub enum EigenError {
    NotSquare { rows: usize, cols: usize },
    NotHermitian,
    NoConvergence { sweeps: usize, off_diagonal: f64 },
    NotPositiveSemidefinite { eigenvalue: f64 },
}

impl fmt::Display for EigenError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            EigenError::NotSquare { rows, cols } => write!(f, "matrix is {rows}x{cols}, not square"),
            EigenError::NotHermitian => f.write_str("matrix is not symmetric/Hermitian"),
            EigenError::NoConvergence { sweeps, off_diagonal } => write!(
                f,
                "Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal mass {off_diagonal:e})"
            ),
            EigenError::NotPositiveSemidefinite { eigenvalue } => {
                write!(f, "matrix has negative eigenvalue {eigenvalue:e}")
            }
        }
    }
}

/// Eigenvalues in ascending order with matching orthonormal eigenvector columns.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
    /// Column `k` is the eigenvector of `eigenvalues[k]`.
    pub eigenvectors: DenseMatrix,
}

impl Spectrum {
    pub fn eigenvector(&self, k: usize) -> Vec<Complex64> {
        self.eigenvectors.column(k)
    }

    /// `Q · diag(f(λ)) · Qᴴ`.
    pub fn apply_function(&self, mut f: impl FnMut(f64) -> Complex64) -> DenseMatrix {
        let q = &self.eigenvectors;
        let n = q.rows();
        let values: Vec<Complex64> = self.eigenvalues.iter().map(|&l| f(l)).collect();
        DenseMatrix::from_fn(n, n, |i, j| {
            (0..n).map(|k| q[(i, k)] * values[k] * q[(j, k)].conj()).sum()
        })
    }

    pub fn dimension(&self) -> usize {
        self.eigenvalues.len()
    }
}

fn off_diagonal_norm(a: &DenseMatrix) -> f64 {
    let n = a.rows();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[(i, j)].norm_sqr();
            }
        }
    }
    libm::sqrt(s)
}

/// Full eigendecomposition of a Hermitian matrix.
pub fn spectrum(m: &DenseMatrix) -> Result<Spectrum, EigenError> {
    if !m.is_square() {
        return Err(EigenError::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    if !m.is_hermitian(HERMITIAN_TOL) {
        return Err(EigenError::NotHermitian);
    }
    let n = m.rows();
    let mut a = m.clone();
    for i in 0..n {
        a[(i, i)].im = 0.0;
    }
    let mut v = DenseMatrix::identity(n);
    let scale = m.frobenius_norm();
    let threshold = CONVERGENCE_TOL * scale;

    let mut sweeps = 0;
    loop {
        let off = off_diagonal_norm(&a);
        if off <= threshold || off == 0.0 {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(EigenError::NoConvergence { sweeps, off_diagonal: off });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re));
    let eigenvalues = order.iter().map(|&k| a[(k, k)].re).collect();
    let mut eigenvectors = DenseMatrix::from_fn(n, n, |i, j| v[(i, order[j])]);
    normalize_phases(&mut eigenvectors);
    Ok(Spectrum { eigenvalues, eigenvectors })
}

fn rotate(a: &mut DenseMatrix, v: &mut DenseMatrix, p: usize, q: usize) {
    let n = a.rows();
    let apq = a[(p, q)];
    let r = apq.norm();
    if r == 0.0 {
        return;
    }
    // phase step: column q times e^{-iφ}, row q times e^{iφ}
    let phase = apq / r;
    if phase.im != 0.0 || phase.re < 0.0 {
        let w = phase.conj();
        for i in 0..n {
            a[(i, q)] *= w;
            v[(i, q)] *= w;
        }
        for j in 0..n {
            a[(q, j)] *= phase;
        }
    }
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    let tau = (aqq - app) / (2.0 * r);
    let t = if tau >= 0.0 {
        1.0 / (tau + libm::sqrt(1.0 + tau * tau))
    } else {
        -1.0 / (-tau + libm::sqrt(1.0 + tau * tau))
    };
    let c = 1.0 / libm::sqrt(1.0 + t * t);
    let s = t * c;
    for i in 0..n {
        let (x, y) = (a[(i, p)], a[(i, q)]);
        a[(i, p)] = x * c - y * s;
        a[(i, q)] = x * s + y * c;
        let (x, y) = (v[(i, p)], v[(i, q)]);
        v[(i, p)] = x * c - y * s;
        v[(i, q)] = x * s + y * c;
    }
    for j in 0..n {
        let (x, y) = (a[(p, j)], a[(q, j)]);
        a[(p, j)] = x * c - y * s;
        a[(q, j)] = x * s + y * c;
    }
    a[(p, q)] = Complex64::new(0.0, 0.0);
    a[(q, p)] = Complex64::new(0.0, 0.0);
    a[(p, p)] = Complex64::new(app - t * r, 0.0);
    a[(q, q)] = Complex64::new(aqq + t * r, 0.0);
}

// first component above the noise floor becomes real positive
fn normalize_phases(q: &mut DenseMatrix) {
    let n = q.rows();
    for k in 0..q.cols() {
        let lead = (0..n).map(|i| q[(i, k)]).find(|z| z.norm() > 1e-12);
        if let Some(z) = lead {
            let w = z.conj() / z.norm();
            for i in 0..n {
                q[(i, k)] *= w;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{inner, vec_norm};

    fn check_decomposition(m: &DenseMatrix, s: &Spectrum) {
        let scale = m.frobenius_norm().max(1.0);
        for k in 0..s.dimension() {
            let v = s.eigenvector(k);
            let mv = m.mul_vec(&v);
            let resid: Vec<Complex64> = mv.iter().zip(&v).map(|(a, b)| a - b * s.eigenvalues[k]).collect();
            assert!(vec_norm(&resid) <= 1e-9 * scale, "residual {}", vec_norm(&resid));
            for l in 0..s.dimension() {
                let ip = inner(&s.eigenvector(l), &v);
                let expect = if k == l { 1.0 } else { 0.0 };
                assert!((ip - expect).norm() < 1e-10);
            }
        }
        for w in s.eigenvalues.windows(2) {
            assert!(w[0] <= w[1]);
        }
    }

    #[test]
    fn p2_laplacian() {
        let m = DenseMatrix::from_real_rows(&[[1.0, -1.0], [-1.0, 1.0]]);
        let s = spectrum(&m).unwrap();
        assert!((s.eigenvalues[0] - 0.0).abs() < 1e-14);
        assert!((s.eigenvalues[1] - 2.0).abs() < 1e-14);
        check_decomposition(&m, &s);
        // first nonzero component positive
        assert!(s.eigenvector(1)[0].re > 0.0);
    }

    #[test]
    fn zero_matrix() {
        let m = DenseMatrix::zeros(3, 3);
        let s = spectrum(&m).unwrap();
        assert_eq!(s.eigenvalues, alloc::vec![0.0; 3]);
        assert_eq!(s.eigenvectors, DenseMatrix::identity(3));
    }

    #[test]
    fn complex_hermitian() {
        let i = Complex64::new(0.0, 1.0);
        let c = |x: f64| Complex64::new(x, 0.0);
        let m = DenseMatrix::from_rows(&[
            [c(2.0), i, c(0.5) + i * 0.25],
            [-i, c(-1.0), c(3.0) - i],
            [c(0.5) - i * 0.25, c(3.0) + i, c(0.0)],
        ]);
        let s = spectrum(&m).unwrap();
        check_decomposition(&m, &s);
        let trace: f64 = s.eigenvalues.iter().sum();
        assert!((trace - 1.0).abs() < 1e-12);
    }

    #[test]
    fn rejects_non_hermitian() {
        let m = DenseMatrix::from_real_rows(&[[0.0, 1.0], [0.0, 0.0]]);
        assert_eq!(spectrum(&m), Err(EigenError::NotHermitian));
        let r = DenseMatrix::from_real_rows(&[[0.0, 1.0]]);
        assert_eq!(spectrum(&r), Err(EigenError::NotSquare { rows: 1, cols: 2 }));
    }
}

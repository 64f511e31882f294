//! Discrete Schrödinger/Dirac dynamics `ψ(t) = exp((i/ħ)·A·t)·ψ₀`.
//!
//! The exponential is evaluated through one eigendecomposition of `A`
//! ([`Propagator`]), so any number of time points share the same spectral
//! data and stay unitary for arbitrarily large `t`.

use alloc::vec::Vec;
use core::fmt;

use num_complex::Complex64;
use rand::Rng;

use crate::eigen::{spectrum, EigenError, Spectrum, HERMITIAN_TOL};
use crate::graph::{connected_components, cycle_basis, OrientedGraph};
use crate::matrix::{vec_norm, DenseMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StateKind {
    Vertex,
    Edge,
    VertexEdge,
}

impl StateKind {
    /// Number of coordinates a state of this kind has on `g`.
    pub fn dimension(self, g: &OrientedGraph) -> usize {
        match self {
            StateKind::Vertex => g.vertex_count(),
            StateKind::Edge => g.edge_count(),
            StateKind::VertexEdge => g.vertex_count() + g.edge_count(),
        }
    }
}

impl fmt::Display for StateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StateKind::Vertex => "vertex",
            StateKind::Edge => "edge",
            StateKind::VertexEdge => "vertex-edge",
        })
    }
}

/// Complex amplitudes on vertices, edges, or both (vertices first).
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    pub kind: StateKind,
    pub values: Vec<Complex64>,
}

impl StateVector {
    pub fn new(kind: StateKind, values: Vec<Complex64>) -> Self {
        StateVector { kind, values }
    }

    /// Checks the length against the graph the state lives on.
    pub fn for_graph(g: &OrientedGraph, kind: StateKind, values: Vec<Complex64>) -> Result<Self, EvolutionError> {
        let expected = kind.dimension(g);
        if values.len() != expected {
            return Err(EvolutionError::DimensionMismatch { expected, found: values.len() });
        }
        Ok(StateVector { kind, values })
    }

    pub fn from_real(kind: StateKind, values: &[f64]) -> Self {
        StateVector { kind, values: values.iter().map(|&x| Complex64::new(x, 0.0)).collect() }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn norm(&self) -> f64 {
        vec_norm(&self.values)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum EvolutionError {
    DimensionMismatch { expected: usize, found: usize },
    KindMismatch { expected: StateKind, found: StateKind },
    InvalidHbar(f64),
    GridNotIncreasing { position: usize },
    EmptyState,
    Eigen(EigenError),
}

impl fmt::Display for EvolutionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvolutionError::DimensionMismatch { expected, found } => {
                write!(f, "state has {found} components, operator expects {expected}")
            }
            EvolutionError::KindMismatch { expected, found } => {
                write!(f, "expected a {expected} state, got a {found} state")
            }
            EvolutionError::InvalidHbar(h) => write!(f, "hbar must be positive and finite, got {h}"),
            EvolutionError::GridNotIncreasing { position } => {
                write!(f, "time grid is not strictly increasing at position {position}")
            }
            EvolutionError::EmptyState => f.write_str("average of an empty state"),
            EvolutionError::Eigen(e) => write!(f, "{e}"),
        }
    }
}

impl From<EigenError> for EvolutionError {
    fn from(e: EigenError) -> Self {
        EvolutionError::Eigen(e)
    }
}

/// `ħ` and the time grid of a series.
#[derive(Debug, Clone, PartialEq)]
pub struct EvolutionParams {
    hbar: f64,
    times: Vec<f64>,
}

impl EvolutionParams {
    pub fn new(hbar: f64, times: Vec<f64>) -> Result<Self, EvolutionError> {
        check_hbar(hbar)?;
        for (position, w) in times.windows(2).enumerate() {
            if !(w[1] > w[0]) {
                return Err(EvolutionError::GridNotIncreasing { position: position + 1 });
            }
        }
        Ok(EvolutionParams { hbar, times })
    }

    /// `steps + 1` evenly spaced points on `[0, t_end]`.
    pub fn uniform(hbar: f64, t_end: f64, steps: usize) -> Result<Self, EvolutionError> {
        let times = if steps == 0 {
            alloc::vec![0.0]
        } else {
            (0..=steps).map(|i| t_end * i as f64 / steps as f64).collect()
        };
        Self::new(hbar, times)
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    pub fn times(&self) -> &[f64] {
        &self.times
    }
}

fn check_hbar(hbar: f64) -> Result<(), EvolutionError> {
    if hbar > 0.0 && hbar.is_finite() {
        Ok(())
    } else {
        Err(EvolutionError::InvalidHbar(hbar))
    }
}

/// Spectral form of `exp((i/ħ)·A·t)` for a fixed Hermitian `A`.
#[derive(Debug, Clone)]
pub struct Propagator {
    spectrum: Spectrum,
    hbar: f64,
}

impl Propagator {
    pub fn new(op: &DenseMatrix, hbar: f64) -> Result<Self, EvolutionError> {
        check_hbar(hbar)?;
        Ok(Propagator { spectrum: spectrum(op)?, hbar })
    }

    pub fn dimension(&self) -> usize {
        self.spectrum.dimension()
    }

    pub fn spectrum(&self) -> &Spectrum {
        &self.spectrum
    }

    /// `Q·diag(e^{iλt/ħ})·Qᴴ·ψ`.
    pub fn apply(&self, psi: &[Complex64], t: f64) -> Result<Vec<Complex64>, EvolutionError> {
        let n = self.dimension();
        if psi.len() != n {
            return Err(EvolutionError::DimensionMismatch { expected: n, found: psi.len() });
        }
        let q = &self.spectrum.eigenvectors;
        let coeffs: Vec<Complex64> = (0..n)
            .map(|k| {
                let c: Complex64 = (0..n).map(|i| q[(i, k)].conj() * psi[i]).sum();
                let angle = self.spectrum.eigenvalues[k] * t / self.hbar;
                c * Complex64::new(libm::cos(angle), libm::sin(angle))
            })
            .collect();
        Ok((0..n).map(|i| (0..n).map(|k| q[(i, k)] * coeffs[k]).sum()).collect())
    }
}

/// `exp((i/ħ)·op·t)·ψ₀`.
pub fn evolve(op: &DenseMatrix, psi0: &StateVector, t: f64, hbar: f64) -> Result<StateVector, EvolutionError> {
    if op.rows() != psi0.len() {
        return Err(EvolutionError::DimensionMismatch { expected: op.rows(), found: psi0.len() });
    }
    let values = Propagator::new(op, hbar)?.apply(&psi0.values, t)?;
    Ok(StateVector { kind: psi0.kind, values })
}

/// Kernel-residual test: `‖op·ψ₀‖ ≤ tol · max(1, ‖op‖_F) · ‖ψ₀‖`.
///
/// A state is fixed by the evolution for all `t` exactly when it lies in the
/// kernel, so no time sampling is involved.
pub fn is_steady(op: &DenseMatrix, psi0: &StateVector, tol: f64) -> Result<bool, EvolutionError> {
    if !op.is_square() || op.cols() != psi0.len() {
        return Err(EvolutionError::DimensionMismatch { expected: op.cols(), found: psi0.len() });
    }
    if !op.is_hermitian(HERMITIAN_TOL) {
        return Err(EvolutionError::Eigen(EigenError::NotHermitian));
    }
    let residual = vec_norm(&op.mul_vec(&psi0.values));
    Ok(residual <= tol * op.frobenius_norm().max(1.0) * psi0.norm())
}

/// Arithmetic mean of the components.
pub fn average(psi: &StateVector) -> Result<Complex64, EvolutionError> {
    if psi.is_empty() {
        return Err(EvolutionError::EmptyState);
    }
    Ok(mean(&psi.values))
}

fn mean(values: &[Complex64]) -> Complex64 {
    values.iter().sum::<Complex64>() / values.len() as f64
}

/// Angle of a point in the complex plane, in `(−π, π]`.
pub fn average_angle(z: Complex64) -> f64 {
    let a = libm::atan2(z.im, z.re);
    if a == -core::f64::consts::PI {
        core::f64::consts::PI
    } else {
        a
    }
}

/// One row of a time series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TimeSample {
    pub t: f64,
    pub average: Complex64,
    /// `atan2(avg_im, avg_re)`.
    pub angle: f64,
    pub norm: f64,
}

/// Average, angle and norm of `ψ(t)` at each grid point, in grid order.
pub fn time_series(
    op: &DenseMatrix,
    psi0: &StateVector,
    params: &EvolutionParams,
) -> Result<Vec<TimeSample>, EvolutionError> {
    if op.rows() != psi0.len() {
        return Err(EvolutionError::DimensionMismatch { expected: op.rows(), found: psi0.len() });
    }
    if psi0.is_empty() {
        return Err(EvolutionError::EmptyState);
    }
    if params.times.is_empty() {
        return Ok(Vec::new());
    }
    let prop = Propagator::new(op, params.hbar)?;
    params
        .times
        .iter()
        .map(|&t| {
            let psi = prop.apply(&psi0.values, t)?;
            let avg = mean(&psi);
            Ok(TimeSample { t, average: avg, angle: average_angle(avg), norm: vec_norm(&psi) })
        })
        .collect()
}

/// Which operator a quadratic form belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FormKind {
    Even,
    Odd,
    Incidence,
}

impl FormKind {
    pub fn state_kind(self) -> StateKind {
        match self {
            FormKind::Even => StateKind::Vertex,
            FormKind::Odd => StateKind::Edge,
            FormKind::Incidence => StateKind::VertexEdge,
        }
    }
}

/// Graph-side evaluation of `ψᵗ·M·ψ` (plain transpose, no conjugation):
///
/// * even: `Σ_edges (v_head − v_tail)²`
/// * odd: `Σ_vertices (Σ_{e ∋ v} k(v, e)·e)²` with `k = +1` if `e` enters `v`, `−1` if it leaves
/// * incidence: `2·Σ_edges e·(v_head − v_tail)`
pub fn quadratic_form(kind: FormKind, g: &OrientedGraph, psi: &StateVector) -> Result<Complex64, EvolutionError> {
    let expected = kind.state_kind();
    if psi.kind != expected {
        return Err(EvolutionError::KindMismatch { expected, found: psi.kind });
    }
    let dim = expected.dimension(g);
    if psi.len() != dim {
        return Err(EvolutionError::DimensionMismatch { expected: dim, found: psi.len() });
    }
    let x = &psi.values;
    let nv = g.vertex_count();
    let value = match kind {
        FormKind::Even => g.edges().iter().map(|&(t, h)| (x[h] - x[t]) * (x[h] - x[t])).sum(),
        FormKind::Odd => (0..nv)
            .map(|v| {
                let s: Complex64 = g
                    .neighbors(v)
                    .iter()
                    .map(|&(_, e)| if g.edge(e).1 == v { x[e] } else { -x[e] })
                    .sum();
                s * s
            })
            .sum(),
        FormKind::Incidence => {
            let s: Complex64 = g.edges().iter().enumerate().map(|(j, &(t, h))| x[nv + j] * (x[h] - x[t])).sum();
            s * 2.0
        }
    };
    Ok(value)
}

/// `ψᵗ·M·ψ` computed from the matrix.
pub fn bilinear_form(m: &DenseMatrix, psi: &[Complex64]) -> Complex64 {
    m.mul_vec(psi).iter().zip(psi).map(|(a, b)| a * b).sum()
}

/// Counts from [`root_superset_check`].
#[derive(Debug, Clone, PartialEq)]
pub struct RootSupersetReport {
    /// Samples of the form `ker Δ₊ ⊕ C^{|E|}`.
    pub kernel_vertex_samples: usize,
    /// Samples of the form `C^{|V|} ⊕ ker Δ₋`.
    pub cycle_edge_samples: usize,
    /// Samples whose incidence form vanished within tolerance.
    pub roots: usize,
    pub max_abs_value: f64,
}

impl RootSupersetReport {
    pub fn all_roots(&self) -> bool {
        self.roots == self.kernel_vertex_samples + self.cycle_edge_samples
    }
}

fn random_complex<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
}

/// Samples both halves of the union `ker Δ₊ ⊕ C^{|E|}  ∪  C^{|V|} ⊕ ker Δ₋`
/// (`samples` draws each) and evaluates the incidence quadratic form on them.
///
/// Kernel elements are drawn as random combinations of component indicators
/// and of cycle-basis vectors, so the sampling does not go through any
/// eigensolver.
pub fn root_superset_check<R: Rng + ?Sized>(g: &OrientedGraph, samples: usize, rng: &mut R) -> RootSupersetReport {
    let nv = g.vertex_count();
    let ne = g.edge_count();
    let comps = connected_components(g);
    let cycles = cycle_basis(g);
    let mut report =
        RootSupersetReport { kernel_vertex_samples: 0, cycle_edge_samples: 0, roots: 0, max_abs_value: 0.0 };
    let record = |values: Vec<Complex64>, report: &mut RootSupersetReport| {
        let norm = vec_norm(&values);
        let psi = StateVector::new(StateKind::VertexEdge, values);
        let q = quadratic_form(FormKind::Incidence, g, &psi).expect("sample has vertex-edge shape");
        report.max_abs_value = report.max_abs_value.max(q.norm());
        if q.norm() <= 1e-9 * norm.max(1.0) * norm.max(1.0) {
            report.roots += 1;
        }
    };
    for _ in 0..samples {
        let weights: Vec<Complex64> = (0..comps.count).map(|_| random_complex(rng)).collect();
        let mut values: Vec<Complex64> = (0..nv).map(|v| weights[comps.component_of[v]]).collect();
        values.extend((0..ne).map(|_| random_complex(rng)));
        report.kernel_vertex_samples += 1;
        record(values, &mut report);

        let mut values: Vec<Complex64> = (0..nv).map(|_| random_complex(rng)).collect();
        let mut edge_part = alloc::vec![Complex64::new(0.0, 0.0); ne];
        for c in &cycles {
            let w = random_complex(rng);
            for (slot, &k) in edge_part.iter_mut().zip(&c.coefficients) {
                *slot += w * k as f64;
            }
        }
        values.extend(edge_part);
        report.cycle_edge_samples += 1;
        record(values, &mut report);
    }
    report
}

//! Real-form Schrödinger evolution.
//!
//! `iħ ċ = H c` becomes `v̇ = G v` with `G = realify(−iH/ħ)`, a real
//! antisymmetric generator, so `exp(tG)` is orthogonal and norms are kept.
//! [`oracle_complex_propagate`] solves the original complex equation by
//! Hermitian eigendecomposition and shares no code with the real path.

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use nalgebra::DVector;
use num_complex::Complex64;

use crate::complex::{ComplexMatrix, ComplexVector, I};
use crate::error::{Error, Result};
use crate::expm::expm;
use crate::realmap::{realify_op, RealOperator, RealState};

/// Hermiticity tolerance (max entrywise deviation) for Hamiltonian inputs.
pub const HERMITIAN_TOL: f64 = 1e-12;

/// A qubit Hamiltonian `h0·I + h1·σ_x + h2·σ_y + h3·σ_z`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HamiltonianSpec {
    pub h0: f64,
    pub h1: f64,
    pub h2: f64,
    pub h3: f64,
    pub hbar: f64,
}

impl HamiltonianSpec {
    /// `H = ħΩσ_z`.
    pub fn larmor(omega: f64, hbar: f64) -> Self {
        Self { h0: 0.0, h1: 0.0, h2: 0.0, h3: hbar * omega, hbar }
    }

    pub fn matrix(&self) -> ComplexMatrix {
        let c = |x: f64| Complex64::new(x, 0.0);
        let terms = [
            ComplexMatrix::identity(2).scale(c(self.h0)),
            ComplexMatrix::pauli_x().scale(c(self.h1)),
            ComplexMatrix::pauli_y().scale(c(self.h2)),
            ComplexMatrix::pauli_z().scale(c(self.h3)),
        ];
        terms.iter().skip(1).fold(terms[0].clone(), |acc, t| &acc + t)
    }

    pub fn generator(&self) -> Result<RealOperator> {
        real_generator(&self.matrix(), self.hbar)
    }
}

/// Real generators `realify(−iσ_k)` for `σ_0 = I, σ_x, σ_y, σ_z`, so that
/// `ħ v̇ = Σ h_k·M_k v`.
pub fn pauli_generators() -> [RealOperator; 4] {
    [ComplexMatrix::identity(2), ComplexMatrix::pauli_x(), ComplexMatrix::pauli_y(), ComplexMatrix::pauli_z()]
        .map(|m| realify_op(&m.scale(-I)))
}

/// `realify(−iH/ħ)`.
pub fn real_generator(h: &ComplexMatrix, hbar: f64) -> Result<RealOperator> {
    if hbar <= 0.0 {
        return Err(Error::NonPositiveHbar(hbar));
    }
    h.ensure_hermitian(HERMITIAN_TOL)?;
    Ok(realify_op(&h.scale(Complex64::new(0.0, -1.0 / hbar))))
}

fn check_dims(g: &RealOperator, v0: &RealState) -> Result<()> {
    if g.dim2() != v0.dim2() {
        return Err(Error::DimensionMismatch { expected: g.dim2(), found: v0.dim2() });
    }
    Ok(())
}

/// `exp(tG)·v0`.
pub fn propagate_exact(g: &RealOperator, v0: &RealState, t: f64) -> Result<RealState> {
    check_dims(g, v0)?;
    let u = expm(&(g.as_dmatrix() * t));
    RealState::from_dvector(u * v0.as_dvector())
}

/// Propagator `exp(tG)` itself.
pub fn propagator(g: &RealOperator, t: f64) -> RealOperator {
    RealOperator::from_dmatrix(expm(&(g.as_dmatrix() * t))).expect("same shape as generator")
}

/// Classical fourth-order Runge-Kutta on `v̇ = Gv`, with `ceil(t/dt)` equal steps.
pub fn propagate_rk4(g: &RealOperator, v0: &RealState, t: f64, dt: f64) -> Result<RealState> {
    check_dims(g, v0)?;
    if dt <= 0.0 || dt.is_nan() {
        return Err(Error::NonPositiveStep(dt));
    }
    if t < 0.0 {
        return Err(Error::NegativeTime(t));
    }
    if t == 0.0 {
        return Ok(v0.clone());
    }
    let steps = (t / dt).ceil() as usize;
    let h = t / steps as f64;
    let gm = g.as_dmatrix();
    let mut v = v0.as_dvector().clone();
    for _ in 0..steps {
        let k1 = gm * &v;
        let k2 = gm * (&v + &k1 * (0.5 * h));
        let k3 = gm * (&v + &k2 * (0.5 * h));
        let k4 = gm * (&v + &k3 * h);
        v += (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (h / 6.0);
    }
    RealState::from_dvector(v)
}

/// `exp(−iHt/ħ)·v0` from the spectral decomposition `H = V diag(λ) V†`.
pub fn oracle_complex_propagate(
    h: &ComplexMatrix,
    v0: &ComplexVector,
    t: f64,
    hbar: f64,
) -> Result<ComplexVector> {
    if hbar <= 0.0 {
        return Err(Error::NonPositiveHbar(hbar));
    }
    h.ensure_hermitian(HERMITIAN_TOL)?;
    if v0.dim() != h.dim() {
        return Err(Error::DimensionMismatch { expected: h.dim(), found: v0.dim() });
    }
    let eig = h.as_dmatrix().clone().symmetric_eigen();
    let vecs = &eig.eigenvectors;
    let phases: DVector<Complex64> =
        eig.eigenvalues.map(|lambda| Complex64::from_polar(1.0, -lambda * t / hbar));
    let coeffs = vecs.adjoint() * v0.as_dvector();
    let evolved = vecs * coeffs.component_mul(&phases);
    Ok(ComplexVector::from(evolved))
}

#[derive(Debug, Clone, PartialEq)]
pub struct TrajectoryRecord {
    pub t: f64,
    pub state: RealState,
    /// `p_k = Re(c_k)² + Im(c_k)²` per basis state.
    pub probabilities: Vec<f64>,
}

/// The Larmor initial state `(|0⟩ + |1⟩)/√2`, i.e. `(1/√2, 0, 1/√2, 0)`.
pub fn larmor_initial_state() -> RealState {
    RealState::new(vec![FRAC_1_SQRT_2, 0.0, FRAC_1_SQRT_2, 0.0]).expect("length 4")
}

/// Evolves the Larmor initial state under `H = ħΩσ_z` and samples it at `times`.
///
/// Closed form: `a = e^{−iΩt}/√2`, `b = e^{iΩt}/√2`, so
/// `a_i(t) = −sin(Ωt)/√2` and `b_i(t) = +sin(Ωt)/√2`.
pub fn larmor_experiment(omega: f64, times: &[f64]) -> Result<Vec<TrajectoryRecord>> {
    if let Some(&t) = times.iter().find(|&&t| t < 0.0 || t.is_nan()) {
        return Err(Error::NegativeTime(t));
    }
    let g = HamiltonianSpec::larmor(omega, 1.0).generator()?;
    let v0 = larmor_initial_state();
    times
        .iter()
        .map(|&t| {
            let state = propagate_exact(&g, &v0, t)?;
            let probabilities = state.probabilities();
            Ok(TrajectoryRecord { t, state, probabilities })
        })
        .collect()
}

/// `arg(a·b*)` for a qubit state `(a_r, a_i, b_r, b_i)`, in `(−π, π]`.
pub fn relative_phase(state: &RealState) -> f64 {
    let a = Complex64::new(state[0], state[1]);
    let b = Complex64::new(state[2], state[3]);
    (a * b.conj()).arg()
}

/// Relative phases along a trajectory, unwrapped so consecutive values differ by less than π.
pub fn unwrapped_relative_phases(records: &[TrajectoryRecord]) -> Vec<f64> {
    let mut out: Vec<f64> = Vec::with_capacity(records.len());
    for r in records {
        let raw = relative_phase(&r.state);
        let value = match out.last() {
            None => raw,
            Some(&prev) => raw + 2.0 * PI * ((prev - raw) / (2.0 * PI)).round(),
        };
        out.push(value);
    }
    out
}

/// Finite-difference rates `Δφ/Δt` between consecutive records.
pub fn precession_rates(records: &[TrajectoryRecord]) -> Vec<f64> {
    let phases = unwrapped_relative_phases(records);
    records
        .windows(2)
        .zip(phases.windows(2))
        .filter(|(r, _)| r[1].t > r[0].t)
        .map(|(r, p)| (p[1] - p[0]) / (r[1].t - r[0].t))
        .collect()
}

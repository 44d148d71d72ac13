//! The constraint that cuts the real theory back down to ordinary quantum
//! mechanics: allowed operators commute with `J`.
//!
//! Every real operator splits uniquely as `O = L + A` with `L = (O − JOJ)/2`
//! commuting with `J` (complex-linear) and `A = (O + JOJ)/2` anticommuting
//! with `J` (complex-antilinear). [`audit`] measures both pieces.

use serde::Serialize;

use crate::complex::{ComplexMatrix, I};
use crate::error::{Error, Result};
use crate::realmap::{complexify_op, j_operator, realify_op, RealOperator};

/// Relative tolerance used by the CLI when no `--tol` is given.
pub const DEFAULT_AUDIT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    /// Commutes with `J`: the realification of a complex matrix.
    Physical,
    /// Anticommutes with `J`: an antilinear map such as conjugation.
    AntiLinear,
    /// Neither; has both a linear and an antilinear part.
    Extended,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Verdict::Physical => "Physical",
            Verdict::AntiLinear => "AntiLinear",
            Verdict::Extended => "Extended",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AuditReport {
    /// `‖antilinear_part(O)‖_F`: how far `O` is from being complex-linear.
    pub linear_residual: f64,
    /// `‖linear_part(O)‖_F`: how far `O` is from being antilinear.
    pub antilinear_residual: f64,
    /// `‖[O, J]‖_F`.
    pub commutator_norm: f64,
    /// Absolute threshold the residuals were compared against.
    pub threshold: f64,
    pub verdict: Verdict,
    /// The complex matrix `O` realifies, present only for `Physical`.
    pub complex_form: Option<ComplexMatrix>,
}

fn j_for(o: &RealOperator) -> RealOperator {
    j_operator(o.dim2() / 2)
}

/// `(O − JOJ)/2`, the part of `O` that commutes with `J`.
pub fn linear_part(o: &RealOperator) -> RealOperator {
    let j = j_for(o);
    (o - &(&(&j * o) * &j)).scale(0.5)
}

/// `(O + JOJ)/2`, the part of `O` that anticommutes with `J`.
pub fn antilinear_part(o: &RealOperator) -> RealOperator {
    let j = j_for(o);
    (o + &(&(&j * o) * &j)).scale(0.5)
}

/// Classifies `o` by its J-linear and J-antilinear parts; `tol` is relative to `‖O‖_F`.
pub fn audit(o: &RealOperator, tol: f64) -> AuditReport {
    let lin = linear_part(o);
    let anti = antilinear_part(o);
    let linear_residual = anti.frobenius_norm();
    let antilinear_residual = lin.frobenius_norm();
    let commutator_norm = o.commutator(&j_for(o)).frobenius_norm();
    let threshold = tol * o.frobenius_norm();
    let verdict = if linear_residual <= threshold {
        Verdict::Physical
    } else if antilinear_residual <= threshold {
        Verdict::AntiLinear
    } else {
        Verdict::Extended
    };
    let complex_form = (verdict == Verdict::Physical).then(|| complexify_op(o));
    AuditReport { linear_residual, antilinear_residual, commutator_norm, threshold, verdict, complex_form }
}

/// [`audit`] for an operator that must match a given complex dimension.
pub fn audit_checked(o: &RealOperator, complex_dim: usize, tol: f64) -> Result<AuditReport> {
    if o.dim2() != 2 * complex_dim {
        return Err(Error::DimensionMismatch { expected: 2 * complex_dim, found: o.dim2() });
    }
    Ok(audit(o, tol))
}

/// Complex conjugation of every amplitude: `diag(1, −1)` on each `(re, im)` pair.
pub fn conjugation(n: usize) -> RealOperator {
    let mut rows = vec![vec![0.0; 2 * n]; 2 * n];
    for k in 0..n {
        rows[2 * k][2 * k] = 1.0;
        rows[2 * k + 1][2 * k + 1] = -1.0;
    }
    RealOperator::from_rows(&rows).expect("even and square")
}

/// The universal NOT `a|0⟩ + b|1⟩ ↦ b*|0⟩ − a*|1⟩`, i.e.
/// `(a_r, a_i, b_r, b_i) ↦ (b_r, −b_i, −a_r, a_i)`.
pub fn universal_not() -> RealOperator {
    RealOperator::from_rows(&[
        vec![0.0, 0.0, 1.0, 0.0],
        vec![0.0, 0.0, 0.0, -1.0],
        vec![-1.0, 0.0, 0.0, 0.0],
        vec![0.0, 1.0, 0.0, 0.0],
    ])
    .expect("fixed 4x4")
}

/// Realified `iI, iσ_x, iσ_y, iσ_z`: the skew-symmetric generators of the
/// physical (J-commuting) algebra on one qubit.
pub fn commutant_basis() -> [RealOperator; 4] {
    [ComplexMatrix::identity(2), ComplexMatrix::pauli_x(), ComplexMatrix::pauli_y(), ComplexMatrix::pauli_z()]
        .map(|m| realify_op(&m.scale(I)))
}

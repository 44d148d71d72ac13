//! A realified qubit read as a two-qubit state.
//!
//! The four reals `(a_r, a_i, b_r, b_i)` are the state
//! `(a_r, a_i)ᵀ ⊗ |0⟩ + (b_r, b_i)ᵀ ⊗ |1⟩` of an "amplitude" qubit (first
//! factor, re/im) and a "label" qubit (second factor, basis state). Tracing
//! out the label qubit gives
//!
//! ```text
//! ρ₁ = [ a_r² + b_r²        a_r a_i + b_r b_i ]
//!      [ a_r a_i + b_r b_i  a_i² + b_i²       ]
//! ```
//!
//! with `det ρ₁ = (a_r b_i − a_i b_r)² = Im(a* b)²`, which fixes the
//! entanglement entropy.

use std::f64::consts::LN_2;

use nalgebra::Matrix2;
use serde::Serialize;

use crate::complex::{ComplexMatrix, ComplexVector};
use crate::error::{Error, Result};
use crate::expm::expm;
use crate::realmap::{j_operator, realify_op, realify_state, RealOperator, RealState};

/// Normalization tolerance for state inputs.
pub const NORM_TOL: f64 = 1e-9;
/// Default tolerance on `det ρ₁` for [`classify_entanglement`].
pub const CLASS_TOL: f64 = 1e-9;
/// Weights below this count as a vanishing amplitude.
pub const ZERO_WEIGHT: f64 = 1e-15;
/// Unitarity tolerance (Frobenius) for local unitaries.
pub const UNITARY_TOL: f64 = 1e-10;

fn ensure_qubit(r: &RealState) -> Result<()> {
    if r.dim2() != 4 {
        return Err(Error::DimensionMismatch { expected: 4, found: r.dim2() });
    }
    let norm = r.norm();
    if (norm - 1.0).abs() > NORM_TOL {
        return Err(Error::NotNormalized { norm });
    }
    Ok(())
}

/// The state written as `|a|·û_a ⊗ |0⟩ + |b|·û_b ⊗ |1⟩` with unit 2-vectors
/// `û_a = (a_r, a_i)/|a|` and `û_b = (b_r, b_i)/|b|`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConditionalDecomposition {
    pub weight_a: f64,
    pub unit_a: Option<[f64; 2]>,
    pub weight_b: f64,
    pub unit_b: Option<[f64; 2]>,
}

impl ConditionalDecomposition {
    pub fn defined_a(&self) -> bool {
        self.unit_a.is_some()
    }

    pub fn defined_b(&self) -> bool {
        self.unit_b.is_some()
    }

    /// Rebuilds `(a_r, a_i, b_r, b_i)`.
    pub fn reconstruct(&self) -> [f64; 4] {
        let [ar, ai] = self.unit_a.map_or([0.0, 0.0], |u| [self.weight_a * u[0], self.weight_a * u[1]]);
        let [br, bi] = self.unit_b.map_or([0.0, 0.0], |u| [self.weight_b * u[0], self.weight_b * u[1]]);
        [ar, ai, br, bi]
    }
}

fn split(x: f64, y: f64) -> (f64, Option<[f64; 2]>) {
    let w = x.hypot(y);
    (w, (w >= ZERO_WEIGHT).then(|| [x / w, y / w]))
}

pub fn conditional_decomposition(r: &RealState) -> Result<ConditionalDecomposition> {
    ensure_qubit(r)?;
    let (weight_a, unit_a) = split(r[0], r[1]);
    let (weight_b, unit_b) = split(r[2], r[3]);
    Ok(ConditionalDecomposition { weight_a, unit_a, weight_b, unit_b })
}

/// Reduced state of the amplitude qubit.
pub fn reduced_density_first(r: &RealState) -> Result<Matrix2<f64>> {
    ensure_qubit(r)?;
    let (ar, ai, br, bi) = (r[0], r[1], r[2], r[3]);
    let off = ar * ai + br * bi;
    Ok(Matrix2::new(ar * ar + br * br, off, off, ai * ai + bi * bi))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum EntanglementClass {
    Product,
    Partial,
    Maximal,
}

impl std::fmt::Display for EntanglementClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            EntanglementClass::Product => "Product",
            EntanglementClass::Partial => "Partial",
            EntanglementClass::Maximal => "Maximal",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EntanglementReport {
    pub rho1: Matrix2<f64>,
    pub det_rho1: f64,
    /// `(a_r b_i − a_i b_r)²`.
    pub det_closed_form: f64,
    pub r1: f64,
    pub r2: f64,
    pub entropy_nats: f64,
    pub class: EntanglementClass,
}

impl EntanglementReport {
    pub fn entropy_bits(&self) -> f64 {
        self.entropy_nats / LN_2
    }
}

fn xlnx(x: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else {
        x * x.ln()
    }
}

fn class_from_det(det: f64, tol: f64) -> EntanglementClass {
    if (det - 0.25).abs() <= tol {
        EntanglementClass::Maximal
    } else if det <= tol {
        EntanglementClass::Product
    } else {
        EntanglementClass::Partial
    }
}

/// Entanglement entropy of the two-qubit reading, in nats.
pub fn entanglement_entropy(r: &RealState) -> Result<EntanglementReport> {
    let rho1 = reduced_density_first(r)?;
    let det_rho1 = rho1.determinant().max(0.0);
    let det_closed_form = (r[0] * r[3] - r[1] * r[2]).powi(2);
    let disc = (1.0 - 4.0 * det_rho1).max(0.0).sqrt();
    let r1 = 0.5 * (1.0 + disc);
    // 2·det/(1 + disc) is 1 − r1 without the cancellation near product states.
    let r2 = 2.0 * det_rho1 / (1.0 + disc);
    let entropy_nats = -(xlnx(r1) + xlnx(r2));
    Ok(EntanglementReport {
        rho1,
        det_rho1,
        det_closed_form,
        r1,
        r2,
        entropy_nats,
        class: class_from_det(det_rho1, CLASS_TOL),
    })
}

/// `Maximal` iff `|det ρ₁ − 1/4| ≤ tol`, `Product` iff `det ρ₁ ≤ tol`.
pub fn classify_entanglement(r: &RealState, tol: f64) -> Result<EntanglementClass> {
    let rho1 = reduced_density_first(r)?;
    Ok(class_from_det(rho1.determinant(), tol))
}

/// `a_r = b_i` and `a_i = −b_r`: a sufficient condition for maximal entanglement.
pub fn satisfies_maximal_witness(r: &RealState, tol: f64) -> bool {
    (r[0] - r[3]).abs() <= tol && (r[1] + r[2]).abs() <= tol
}

/// `a = 0`, `b = 0`, or `(a_r, a_i) = (b_r, b_i)`: sufficient for a product state.
pub fn satisfies_product_witness(r: &RealState, tol: f64) -> bool {
    let a_zero = r[0].hypot(r[1]) <= tol;
    let b_zero = r[2].hypot(r[3]) <= tol;
    let equal = (r[0] - r[2]).abs() <= tol && (r[1] - r[3]).abs() <= tol;
    a_zero || b_zero || equal
}

fn ensure_normalized(v: &ComplexVector) -> Result<()> {
    if v.dim() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, found: v.dim() });
    }
    if !v.is_normalized(NORM_TOL) {
        return Err(Error::NotNormalized { norm: v.norm() });
    }
    Ok(())
}

/// Realifies two qubits separately and takes the 16-component tensor product.
///
/// Unlike `realify_state(ψ ⊗ φ)`, this keeps track of which factor a phase
/// was applied to: `encode_local(iψ, φ) ≠ encode_local(ψ, iφ)`.
pub fn encode_local(psi: &ComplexVector, phi: &ComplexVector) -> Result<RealState> {
    ensure_normalized(psi)?;
    ensure_normalized(phi)?;
    Ok(realify_state(psi).kron(&realify_state(phi)))
}

/// Realification of the complex tensor product `ψ ⊗ φ` (8 reals).
pub fn encode_global(psi: &ComplexVector, phi: &ComplexVector) -> Result<RealState> {
    ensure_normalized(psi)?;
    ensure_normalized(phi)?;
    Ok(realify_state(&psi.kron(phi)))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CouplingCheck {
    /// `‖[exp(θ·M_A⊗M_B), realify(U_A)⊗realify(U_B)]‖_F`.
    pub commutator_residual: f64,
    /// `‖exp(θ·M_A⊗M_B) − (cos θ·I + sin θ·M_A⊗M_B)‖_F`.
    pub closed_form_residual: f64,
    /// `‖(M_A⊗M_B)² − I‖_F`.
    pub square_residual: f64,
}

/// `M_A ⊗ M_B` with both factors the qubit complex structure `J` (16×16).
pub fn coupling_generator() -> RealOperator {
    let j = j_operator(2);
    j.kron(&j)
}

/// Checks that the `J ⊗ J` coupling between two realified qubits commutes with
/// every pair of local physical unitaries, so it cannot entangle them.
pub fn coupling_commutation_check(
    theta: f64,
    ua: &ComplexMatrix,
    ub: &ComplexMatrix,
) -> Result<CouplingCheck> {
    for u in [ua, ub] {
        if u.dim() != 2 {
            return Err(Error::DimensionMismatch { expected: 2, found: u.dim() });
        }
        u.ensure_unitary(UNITARY_TOL)?;
    }
    let k = coupling_generator();
    let id = RealOperator::identity(16);
    let evolution = RealOperator::from_dmatrix(expm(&(k.as_dmatrix() * theta))).expect("16x16");
    let closed = &id.scale(theta.cos()) + &k.scale(theta.sin());
    let local = realify_op(ua).kron(&realify_op(ub));
    Ok(CouplingCheck {
        commutator_residual: evolution.commutator(&local).frobenius_norm(),
        closed_form_residual: (&evolution - &closed).frobenius_norm(),
        square_residual: (&(&k * &k) - &id).frobenius_norm(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::I;
    use num_complex::Complex64;
    use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_4};

    fn state(v: [f64; 4]) -> RealState {
        RealState::new(v.to_vec()).unwrap()
    }

    #[test]
    fn decomposition_of_basis_state() {
        let d = conditional_decomposition(&state([1.0, 0.0, 0.0, 0.0])).unwrap();
        assert_eq!(d.weight_a, 1.0);
        assert_eq!(d.unit_a, Some([1.0, 0.0]));
        assert!(!d.defined_b());
        assert_eq!(d.reconstruct(), [1.0, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn decomposition_of_maximal_example() {
        let d = conditional_decomposition(&state([0.5, 0.5, 0.5, -0.5])).unwrap();
        assert!((d.weight_a - FRAC_1_SQRT_2).abs() < 1e-16);
        assert!((d.weight_b - FRAC_1_SQRT_2).abs() < 1e-16);
        let ua = d.unit_a.unwrap();
        let ub = d.unit_b.unwrap();
        assert!((ua[0] - FRAC_1_SQRT_2).abs() < 1e-15 && (ua[1] - FRAC_1_SQRT_2).abs() < 1e-15);
        assert!((ub[0] - FRAC_1_SQRT_2).abs() < 1e-15 && (ub[1] + FRAC_1_SQRT_2).abs() < 1e-15);
    }

    #[test]
    fn unnormalized_inputs_rejected() {
        let r = state([1.0, 1.0, 0.0, 0.0]);
        assert!(matches!(conditional_decomposition(&r), Err(Error::NotNormalized { .. })));
        assert!(matches!(reduced_density_first(&r), Err(Error::NotNormalized { .. })));
        assert!(matches!(entanglement_entropy(&r), Err(Error::NotNormalized { .. })));
        assert!(matches!(classify_entanglement(&r, 1e-9), Err(Error::NotNormalized { .. })));
        let psi = ComplexVector::from_pairs(&[(1.0, 0.0), (1.0, 0.0)]);
        assert!(matches!(encode_local(&psi, &psi), Err(Error::NotNormalized { .. })));
    }

    #[test]
    fn reduced_density_examples() {
        assert_eq!(
            reduced_density_first(&state([1.0, 0.0, 0.0, 0.0])).unwrap(),
            Matrix2::new(1.0, 0.0, 0.0, 0.0)
        );
        assert_eq!(
            reduced_density_first(&state([0.5, 0.5, 0.5, -0.5])).unwrap(),
            Matrix2::new(0.5, 0.0, 0.0, 0.5)
        );
    }

    #[test]
    fn maximal_example_has_ln2() {
        let psi = ComplexVector::new(vec![
            Complex64::from_polar(FRAC_1_SQRT_2, FRAC_PI_4),
            Complex64::from_polar(FRAC_1_SQRT_2, -FRAC_PI_4),
        ]);
        let report = entanglement_entropy(&realify_state(&psi)).unwrap();
        assert!((report.entropy_nats - LN_2).abs() < 1e-12);
        assert!((report.det_rho1 - 0.25).abs() < 1e-12);
        assert_eq!(report.class, EntanglementClass::Maximal);
        assert!((report.entropy_bits() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn basis_state_is_product() {
        let report = entanglement_entropy(&state([1.0, 0.0, 0.0, 0.0])).unwrap();
        assert_eq!(report.entropy_nats, 0.0);
        assert_eq!(report.class, EntanglementClass::Product);
        assert_eq!((report.r1, report.r2), (1.0, 0.0));
    }

    #[test]
    fn witness_conditions_classify() {
        let h = 0.5;
        // a_r = b_i, a_i = −b_r with |a| = |b| = 1/√2.
        let maximal = state([h, h, -h, h]);
        assert!(satisfies_maximal_witness(&maximal, 0.0));
        assert_eq!(classify_entanglement(&maximal, CLASS_TOL).unwrap(), EntanglementClass::Maximal);
        let product = state([FRAC_1_SQRT_2, 0.0, FRAC_1_SQRT_2, 0.0]);
        assert!(satisfies_product_witness(&product, 0.0));
        assert_eq!(classify_entanglement(&product, CLASS_TOL).unwrap(), EntanglementClass::Product);
    }

    #[test]
    fn mirrored_branch_is_also_maximal() {
        let r = state([0.5, 0.5, 0.5, -0.5]);
        assert!(!satisfies_maximal_witness(&r, 1e-12));
        assert_eq!(classify_entanglement(&r, CLASS_TOL).unwrap(), EntanglementClass::Maximal);
    }

    #[test]
    fn partial_state() {
        let r = state([0.8, 0.0, 0.0, 0.6]);
        let report = entanglement_entropy(&r).unwrap();
        assert_eq!(report.class, EntanglementClass::Partial);
        assert!(report.entropy_nats > 0.0 && report.entropy_nats < LN_2);
    }

    #[test]
    fn local_encodings_differ_by_root_two() {
        let zero = ComplexVector::basis(2, 0);
        let i_zero = zero.scale(I);
        let left = encode_local(&i_zero, &zero).unwrap();
        let right = encode_local(&zero, &i_zero).unwrap();
        assert!((left.distance(&right) - 2f64.sqrt()).abs() < 1e-15);
        assert_eq!(left.dim2(), 16);
        assert_eq!(left.norm(), 1.0);
        assert_eq!(encode_global(&i_zero, &zero).unwrap(), encode_global(&zero, &i_zero).unwrap());
    }

    #[test]
    fn coupling_at_zero_angle() {
        let u = ComplexMatrix::pauli_y();
        let check = coupling_commutation_check(0.0, &u, &ComplexMatrix::pauli_x()).unwrap();
        assert_eq!(check.commutator_residual, 0.0);
        assert_eq!(check.square_residual, 0.0);
    }

    #[test]
    fn coupling_rejects_non_unitary() {
        let bad = ComplexMatrix::identity(2).scale(Complex64::new(2.0, 0.0));
        assert!(matches!(
            coupling_commutation_check(0.3, &bad, &ComplexMatrix::identity(2)),
            Err(Error::NotUnitary { .. })
        ));
    }
}

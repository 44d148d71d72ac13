//! Mach-Zehnder interferometer in the complex and the real representation.
//!
//! The optics are the normalized beamsplitter `(1/√2)[[1, i], [i, 1]]`, the
//! mirror pair `[[0, i], [i, 0]]` and an optional phase shifter
//! `diag(1, e^{iφ})` on the second arm, placed between the mirrors and the
//! output beamsplitter. Since `BS² = mirror`, the beamsplitter is a square root
//! of the mirror stage, and `BS·mirror·BS = −I`. In the real form every one of
//! these matrices has real entries only.

use std::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;

use crate::complex::{ComplexMatrix, ComplexVector, I, ONE, ZERO};
use crate::realmap::{realify_op, realify_state, RealOperator};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ElementKind {
    BeamSplitter,
    Mirror,
    /// Phase `φ` (radians) on the second arm.
    PhaseShifter(f64),
}

/// An optical element in both representations; `real_form` is always
/// `realify_op(complex_form)`.
#[derive(Debug, Clone, PartialEq)]
pub struct OpticalElement {
    kind: ElementKind,
    complex_form: ComplexMatrix,
    real_form: RealOperator,
}

impl OpticalElement {
    fn new(kind: ElementKind, complex_form: ComplexMatrix) -> Self {
        let real_form = realify_op(&complex_form);
        Self { kind, complex_form, real_form }
    }

    pub fn kind(&self) -> ElementKind {
        self.kind
    }

    pub fn complex_form(&self) -> &ComplexMatrix {
        &self.complex_form
    }

    pub fn real_form(&self) -> &RealOperator {
        &self.real_form
    }
}

pub fn beamsplitter() -> OpticalElement {
    let s = Complex64::new(FRAC_1_SQRT_2, 0.0);
    let m = ComplexMatrix::from_rows([[ONE, I], [I, ONE]]).scale(s);
    OpticalElement::new(ElementKind::BeamSplitter, m)
}

pub fn mirror() -> OpticalElement {
    OpticalElement::new(ElementKind::Mirror, ComplexMatrix::from_rows([[ZERO, I], [I, ZERO]]))
}

pub fn phase_shifter(phi: f64) -> OpticalElement {
    let m = ComplexMatrix::from_rows([[ONE, ZERO], [ZERO, Complex64::from_polar(1.0, phi)]]);
    OpticalElement::new(ElementKind::PhaseShifter(phi), m)
}

/// The beamsplitter without the `1/√2`, `[[1, i], [i, 1]]`.
pub fn unnormalized_beamsplitter() -> ComplexMatrix {
    ComplexMatrix::from_rows([[ONE, I], [I, ONE]])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Representation {
    Complex,
    Real,
}

/// A composite transfer matrix in either representation.
#[derive(Debug, Clone, PartialEq)]
pub enum Transfer {
    Complex(ComplexMatrix),
    Real(RealOperator),
}

/// Product of the elements' complex forms; `elements[0]` acts first.
pub fn compose_complex(elements: &[OpticalElement]) -> ComplexMatrix {
    elements.iter().fold(ComplexMatrix::identity(2), |acc, e| &e.complex_form * &acc)
}

/// Product of the elements' real forms; `elements[0]` acts first.
pub fn compose_real(elements: &[OpticalElement]) -> RealOperator {
    elements.iter().fold(RealOperator::identity(4), |acc, e| &e.real_form * &acc)
}

/// Beamsplitter, mirrors, beamsplitter.
pub fn mach_zehnder_elements() -> Vec<OpticalElement> {
    vec![beamsplitter(), mirror(), beamsplitter()]
}

/// The normalized Mach-Zehnder transfer matrix, `−I` in either representation.
pub fn mach_zehnder(representation: Representation) -> Transfer {
    let elements = mach_zehnder_elements();
    match representation {
        Representation::Complex => Transfer::Complex(compose_complex(&elements)),
        Representation::Real => Transfer::Real(compose_real(&elements)),
    }
}

/// The same product built from the unnormalized beamsplitters; equals `−2I`.
pub fn mach_zehnder_unnormalized() -> ComplexMatrix {
    let bs = unnormalized_beamsplitter();
    &(&bs * mirror().complex_form()) * &bs
}

/// Smallest `s` and residual `‖M − s·I‖_F` for a composite, used to report
/// "−I" or "−2I".
pub fn identity_multiple(m: &ComplexMatrix) -> (Complex64, f64) {
    let n = m.dim();
    let trace: Complex64 = (0..n).map(|k| m.get(k, k)).sum();
    let s = trace / n as f64;
    let residual = (m - &ComplexMatrix::identity(n).scale(s)).frobenius_norm();
    (s, residual)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OutputProbabilities {
    pub p0: f64,
    pub p1: f64,
}

fn mzi_with_phase_elements(phi: f64) -> Vec<OpticalElement> {
    vec![beamsplitter(), mirror(), phase_shifter(phi), beamsplitter()]
}

/// Output-port probabilities for a photon entering port 0, with a phase
/// shifter between the mirrors and the second beamsplitter, computed with
/// complex matrices.
pub fn mach_zehnder_with_phase(phi: f64) -> OutputProbabilities {
    let out = compose_complex(&mzi_with_phase_elements(phi))
        .apply(&ComplexVector::basis(2, 0))
        .expect("2-dimensional");
    OutputProbabilities { p0: out[0].norm_sqr(), p1: out[1].norm_sqr() }
}

/// [`mach_zehnder_with_phase`] computed entirely with real 4×4 matrices.
pub fn mach_zehnder_with_phase_real(phi: f64) -> OutputProbabilities {
    let input = realify_state(&ComplexVector::basis(2, 0));
    let out = compose_real(&mzi_with_phase_elements(phi)).apply(&input).expect("4-dimensional");
    OutputProbabilities { p0: out.probability(0), p1: out.probability(1) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn max_abs(o: &RealOperator) -> f64 {
        o.as_dmatrix().iter().map(|x| x.abs()).fold(0.0, f64::max)
    }

    #[test]
    fn beamsplitter_real_first_row() {
        let r = beamsplitter().real_form().rows();
        let want = [FRAC_1_SQRT_2, 0.0, 0.0, -FRAC_1_SQRT_2];
        assert_eq!(r[0], want);
    }

    #[test]
    fn beamsplitter_on_ket_zero() {
        let out = beamsplitter().complex_form().apply(&ComplexVector::basis(2, 0)).unwrap();
        assert!((out[0] - Complex64::new(FRAC_1_SQRT_2, 0.0)).norm() < 1e-16);
        assert!((out[1] - Complex64::new(0.0, FRAC_1_SQRT_2)).norm() < 1e-16);
    }

    #[test]
    fn beamsplitter_squares_to_mirror() {
        let bs = beamsplitter();
        let sq = bs.complex_form() * bs.complex_form();
        assert!((&sq - mirror().complex_form()).frobenius_norm() < 1e-15);
        let sq_real = bs.real_form() * bs.real_form();
        assert!(max_abs(&(&sq_real - mirror().real_form())) < 1e-15);
    }

    #[test]
    fn mirror_properties() {
        let m = mirror();
        let sq = m.complex_form() * m.complex_form();
        assert_eq!(sq, ComplexMatrix::identity(2).scale(-ONE));
        assert!(m.complex_form().is_unitary(1e-15));
        assert_eq!(
            m.real_form().rows(),
            vec![
                vec![0.0, 0.0, 0.0, -1.0],
                vec![0.0, 0.0, 1.0, 0.0],
                vec![0.0, -1.0, 0.0, 0.0],
                vec![1.0, 0.0, 0.0, 0.0],
            ]
        );
    }

    #[test]
    fn elements_are_unitary() {
        for e in [beamsplitter(), mirror(), phase_shifter(0.3)] {
            assert!(e.complex_form().is_unitary(1e-12), "{:?}", e.kind());
            assert_eq!(e.real_form(), &realify_op(e.complex_form()));
        }
    }

    #[test]
    fn composite_is_minus_identity() {
        let Transfer::Complex(c) = mach_zehnder(Representation::Complex) else { unreachable!() };
        assert!((&c - &ComplexMatrix::identity(2).scale(-ONE)).frobenius_norm() < 1e-12);
        let Transfer::Real(r) = mach_zehnder(Representation::Real) else { unreachable!() };
        assert!((&r + &RealOperator::identity(4)).frobenius_norm() < 1e-12);
        assert!((&realify_op(&c) - &r).frobenius_norm() < 1e-15);
    }

    #[test]
    fn unnormalized_composite_is_minus_two_identity() {
        let (s, residual) = identity_multiple(&mach_zehnder_unnormalized());
        assert_eq!(s, Complex64::new(-2.0, 0.0));
        assert_eq!(residual, 0.0);
    }

    #[test]
    fn phase_zero_and_pi() {
        let p = mach_zehnder_with_phase(0.0);
        assert!((p.p0 - 1.0).abs() < 1e-15 && p.p1.abs() < 1e-15);
        let p = mach_zehnder_with_phase(PI);
        assert!(p.p0.abs() < 1e-15 && (p.p1 - 1.0).abs() < 1e-15);
    }

    #[test]
    fn representations_agree_on_phase_grid() {
        for k in 0..64 {
            let phi = 2.0 * PI * k as f64 / 63.0;
            let c = mach_zehnder_with_phase(phi);
            let r = mach_zehnder_with_phase_real(phi);
            assert!((c.p0 - r.p0).abs() < 1e-12 && (c.p1 - r.p1).abs() < 1e-12);
            assert!((c.p0 + c.p1 - 1.0).abs() < 1e-12);
        }
    }
}

//! Random complex states and matrices for property tests and randomized audits.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::complex::{ComplexMatrix, ComplexVector};

fn gaussian<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// Matrix with i.i.d. standard complex Gaussian entries.
pub fn random_complex_matrix<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> ComplexMatrix {
    let m = DMatrix::from_fn(dim, dim, |_, _| gaussian(rng));
    ComplexMatrix::from_dmatrix(m).expect("square")
}

/// `(A + A†)/2` for Gaussian `A`; exactly Hermitian in floating point.
pub fn random_hermitian<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> ComplexMatrix {
    let a = random_complex_matrix(rng, dim).into_dmatrix();
    ComplexMatrix::from_dmatrix((&a + a.adjoint()) * Complex64::new(0.5, 0.0)).expect("square")
}

/// Haar-distributed unitary from the QR decomposition of a Gaussian matrix,
/// with the phases of `R`'s diagonal moved into `Q`.
pub fn random_unitary<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> ComplexMatrix {
    let a = random_complex_matrix(rng, dim).into_dmatrix();
    let (q, r) = a.qr().unpack();
    let mut q = q;
    for k in 0..dim {
        let d = r[(k, k)];
        let phase = if d.norm() > 0.0 { d / d.norm() } else { Complex64::new(1.0, 0.0) };
        for row in 0..dim {
            q[(row, k)] *= phase;
        }
    }
    ComplexMatrix::from_dmatrix(q).expect("square")
}

/// Uniformly random unit vector.
pub fn random_state<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> ComplexVector {
    ComplexVector::new((0..dim).map(|_| gaussian(rng)).collect()).normalized()
}

//! Realification of complex linear algebra.
//!
//! A complex `n`-vector becomes a real `2n`-vector in the interleaved layout
//! `(Re c₀, Im c₀, Re c₁, Im c₁, …)`; for a qubit `a|0⟩ + b|1⟩` that is
//! `(a_r, a_i, b_r, b_i)`. A complex matrix becomes the real matrix of 2×2
//! blocks `Re(M_pq)·I₂ + Im(M_pq)·J` with
//!
//! ```text
//! J = [ 0 -1 ]
//!     [ 1  0 ]
//! ```
//!
//! the real matrix that multiplies `(x, y) ≅ x + iy` by `i`.
//!
//! In Kronecker terms the interleaved layout is `(basis label) ⊗ (re/im)`:
//! the re/im index is the fast one. Writing the state as
//! `(a_r, a_i)ᵀ ⊗ |0⟩ + (b_r, b_i)ᵀ ⊗ |1⟩`, with the re/im "amplitude qubit"
//! first, is the same vector under the swap of tensor factors.

use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::complex::{ComplexMatrix, ComplexVector};
use crate::error::{Error, Result};

/// Frobenius-norm tolerance used when none is supplied.
pub const DEFAULT_TOL: f64 = 1e-12;

/// The 2×2 complex structure `[[0, -1], [1, 0]]`.
pub const J_BLOCK: [[f64; 2]; 2] = [[0.0, -1.0], [1.0, 0.0]];

/// A real `2n`-vector in interleaved `(re, im)` layout.
#[derive(Debug, Clone, PartialEq)]
pub struct RealState(DVector<f64>);

impl RealState {
    pub fn new(entries: Vec<f64>) -> Result<Self> {
        if !entries.len().is_multiple_of(2) {
            return Err(Error::OddDimension(entries.len()));
        }
        Ok(Self(DVector::from_vec(entries)))
    }

    pub fn from_dvector(v: DVector<f64>) -> Result<Self> {
        if !v.len().is_multiple_of(2) {
            return Err(Error::OddDimension(v.len()));
        }
        Ok(Self(v))
    }

    pub fn dim2(&self) -> usize {
        self.0.len()
    }

    /// Number of complex components represented.
    pub fn complex_dim(&self) -> usize {
        self.0.len() / 2
    }

    pub fn entries(&self) -> &[f64] {
        self.0.as_slice()
    }

    pub fn as_dvector(&self) -> &DVector<f64> {
        &self.0
    }

    pub fn norm(&self) -> f64 {
        self.0.norm()
    }

    pub fn dot(&self, other: &Self) -> f64 {
        self.0.dot(&other.0)
    }

    pub fn distance(&self, other: &Self) -> f64 {
        (&self.0 - &other.0).norm()
    }

    /// Probability of basis state `k`: `Re(c_k)² + Im(c_k)²`.
    pub fn probability(&self, k: usize) -> f64 {
        self.0[2 * k].powi(2) + self.0[2 * k + 1].powi(2)
    }

    pub fn probabilities(&self) -> Vec<f64> {
        (0..self.complex_dim()).map(|k| self.probability(k)).collect()
    }

    /// Kronecker product of the raw real vectors (`self` as the slow index).
    pub fn kron(&self, other: &Self) -> Self {
        Self(self.0.kronecker(&other.0))
    }
}

impl std::ops::Index<usize> for RealState {
    type Output = f64;

    fn index(&self, k: usize) -> &f64 {
        &self.0[k]
    }
}

/// A real square operator of even dimension acting on [`RealState`]s.
#[derive(Debug, Clone, PartialEq)]
pub struct RealOperator(DMatrix<f64>);

impl RealOperator {
    pub fn from_dmatrix(m: DMatrix<f64>) -> Result<Self> {
        if m.nrows() != m.ncols() {
            return Err(Error::NotSquare { rows: m.nrows(), cols: m.ncols() });
        }
        if !m.nrows().is_multiple_of(2) {
            return Err(Error::OddDimension(m.nrows()));
        }
        Ok(Self(m))
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::NotSquare { rows: n, cols: bad.len() });
        }
        Self::from_dmatrix(DMatrix::from_fn(n, n, |r, c| rows[r][c]))
    }

    pub fn identity(dim2: usize) -> Self {
        Self(DMatrix::identity(dim2, dim2))
    }

    pub fn zeros(dim2: usize) -> Self {
        Self(DMatrix::zeros(dim2, dim2))
    }

    pub fn dim2(&self) -> usize {
        self.0.nrows()
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.0[(row, col)]
    }

    pub fn as_dmatrix(&self) -> &DMatrix<f64> {
        &self.0
    }

    pub fn into_dmatrix(self) -> DMatrix<f64> {
        self.0
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.0.row_iter().map(|r| r.iter().copied().collect()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self(self.0.transpose())
    }

    pub fn scale(&self, s: f64) -> Self {
        Self(&self.0 * s)
    }

    pub fn kron(&self, other: &Self) -> Self {
        Self(self.0.kronecker(&other.0))
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.0.norm()
    }

    /// `[self, other] = self·other − other·self`.
    pub fn commutator(&self, other: &Self) -> Self {
        Self(&self.0 * &other.0 - &other.0 * &self.0)
    }

    pub fn apply(&self, v: &RealState) -> Result<RealState> {
        if v.dim2() != self.dim2() {
            return Err(Error::DimensionMismatch { expected: self.dim2(), found: v.dim2() });
        }
        Ok(RealState(&self.0 * v.as_dvector()))
    }

    pub fn is_antisymmetric(&self, tol: f64) -> bool {
        (&self.0 + self.0.transpose()).norm() <= tol
    }

    /// Frobenius norm of `OᵀO − I`.
    pub fn orthogonality_deviation(&self) -> f64 {
        let n = self.dim2();
        (self.0.transpose() * &self.0 - DMatrix::<f64>::identity(n, n)).norm()
    }
}

impl<'a> Mul<&'a RealOperator> for &'a RealOperator {
    type Output = RealOperator;

    fn mul(self, rhs: &RealOperator) -> RealOperator {
        RealOperator(&self.0 * &rhs.0)
    }
}

impl<'a> Add<&'a RealOperator> for &'a RealOperator {
    type Output = RealOperator;

    fn add(self, rhs: &RealOperator) -> RealOperator {
        RealOperator(&self.0 + &rhs.0)
    }
}

impl<'a> Sub<&'a RealOperator> for &'a RealOperator {
    type Output = RealOperator;

    fn sub(self, rhs: &RealOperator) -> RealOperator {
        RealOperator(&self.0 - &rhs.0)
    }
}

impl Neg for &RealOperator {
    type Output = RealOperator;

    fn neg(self) -> RealOperator {
        RealOperator(-&self.0)
    }
}

pub fn realify_state(v: &ComplexVector) -> RealState {
    let entries = v.entries().iter().flat_map(|z| [z.re, z.im]).collect();
    RealState(DVector::from_vec(entries))
}

pub fn complexify_state(r: &RealState) -> ComplexVector {
    let entries = r.entries().chunks_exact(2).map(|p| Complex64::new(p[0], p[1])).collect();
    ComplexVector::new(entries)
}

/// Replaces every entry `x + iy` by the block `x·I₂ + y·J`.
pub fn realify_op(m: &ComplexMatrix) -> RealOperator {
    let n = m.dim();
    let mut out = DMatrix::zeros(2 * n, 2 * n);
    for p in 0..n {
        for q in 0..n {
            let z = m.get(p, q);
            out[(2 * p, 2 * q)] = z.re;
            out[(2 * p, 2 * q + 1)] = -z.im;
            out[(2 * p + 1, 2 * q)] = z.im;
            out[(2 * p + 1, 2 * q + 1)] = z.re;
        }
    }
    RealOperator(out)
}

/// Reads each 2×2 block of `o` as the complex number `(b₀₀ + b₁₁)/2 + i(b₁₀ − b₀₁)/2`.
///
/// This is the left inverse of [`realify_op`]; on operators that do not commute
/// with `J` it returns the complex matrix of their J-linear part.
pub fn complexify_op(o: &RealOperator) -> ComplexMatrix {
    let n = o.dim2() / 2;
    let m = DMatrix::from_fn(n, n, |p, q| {
        let (r, c) = (2 * p, 2 * q);
        Complex64::new(0.5 * (o.get(r, c) + o.get(r + 1, c + 1)), 0.5 * (o.get(r + 1, c) - o.get(r, c + 1)))
    });
    ComplexMatrix::from_dmatrix(m).expect("square by construction")
}

/// Multiplication by `i` on `n` complex components: `n` copies of [`J_BLOCK`]
/// on the diagonal.
pub fn j_operator(n: usize) -> RealOperator {
    let mut out = DMatrix::zeros(2 * n, 2 * n);
    for k in 0..n {
        out[(2 * k, 2 * k + 1)] = J_BLOCK[0][1];
        out[(2 * k + 1, 2 * k)] = J_BLOCK[1][0];
    }
    RealOperator(out)
}

/// Multiplies a real state by the complex scalar `z`, i.e. applies
/// `Re z·I + Im z·J` to every `(re, im)` pair.
pub fn scalar_action(z: Complex64, r: &RealState) -> RealState {
    let entries = r
        .entries()
        .chunks_exact(2)
        .flat_map(|p| [z.re * p[0] - z.im * p[1], z.im * p[0] + z.re * p[1]])
        .collect();
    RealState(DVector::from_vec(entries))
}

//! Indefinite-metric toys: a qubit with `⟨1|1⟩ = −1`, a pair of such qubits
//! constrained to a positive-metric subspace, and a truncated two-mode
//! Gupta-Bleuler model with a longitudinal mode (`a₃`, ordinary sign) and a
//! scalar mode (`a₀`, wrong-sign commutator).
//!
//! Creation operators are metric adjoints `X‡ = G Xᵀ G` of the annihilators,
//! where `G` is the diagonal metric. On the scalar mode `G` alternates sign
//! with occupation, which turns `[a₀, a₀‡]` into `−I` without any explicit
//! sign being inserted.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::complex::ComplexVector;
use crate::error::{Error, Result};

/// Default Fock cutoff (levels per ghost mode).
pub const DEFAULT_CUTOFF: usize = 8;
/// Smallest cutoff that leaves a useful guarded subspace.
pub const MIN_CUTOFF: usize = 4;
/// Constraint residual below which a state counts as physical.
pub const PHYSICAL_TOL: f64 = 1e-12;

/// A finite-dimensional space with diagonal ±1 metric.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndefiniteSpace {
    signature: Vec<i8>,
    labels: Vec<String>,
}

impl IndefiniteSpace {
    pub fn new(signature: Vec<i8>, labels: Vec<String>) -> Result<Self> {
        if labels.len() != signature.len() {
            return Err(Error::DimensionMismatch { expected: signature.len(), found: labels.len() });
        }
        if let Some(bad) = signature.iter().find(|s| s.abs() != 1) {
            return Err(Error::Format(format!("metric signature entries must be ±1, got {bad}")));
        }
        Ok(Self { signature, labels })
    }

    /// `⟨0|0⟩ = 1`, `⟨1|1⟩ = −1`.
    pub fn indefinite_qubit() -> Self {
        Self { signature: vec![1, -1], labels: vec!["0".into(), "1".into()] }
    }

    /// Tensor product with metric `G ⊗ G'` and labels concatenated.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut signature = Vec::with_capacity(self.dim() * other.dim());
        let mut labels = Vec::with_capacity(self.dim() * other.dim());
        for (s, l) in self.signature.iter().zip(&self.labels) {
            for (t, m) in other.signature.iter().zip(&other.labels) {
                signature.push(s * t);
                labels.push(format!("{l}{m}"));
            }
        }
        Self { signature, labels }
    }

    pub fn dim(&self) -> usize {
        self.signature.len()
    }

    pub fn signature(&self) -> &[i8] {
        &self.signature
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn metric(&self) -> DMatrix<f64> {
        DMatrix::from_diagonal(&DVector::from_iterator(self.dim(), self.signature.iter().map(|&s| s as f64)))
    }

    fn check(&self, len: usize) -> Result<()> {
        if len != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: len });
        }
        Ok(())
    }

    /// `vᵀ G w`.
    pub fn eta_inner(&self, v: &[f64], w: &[f64]) -> Result<f64> {
        self.check(v.len())?;
        self.check(w.len())?;
        Ok(v.iter().zip(w).zip(&self.signature).map(|((x, y), &s)| s as f64 * x * y).sum())
    }

    /// `v† G w` for complex amplitudes.
    pub fn eta_inner_complex(&self, v: &ComplexVector, w: &ComplexVector) -> Result<Complex64> {
        self.check(v.dim())?;
        self.check(w.dim())?;
        Ok(v.entries()
            .iter()
            .zip(w.entries())
            .zip(&self.signature)
            .map(|((x, y), &s)| x.conj() * y * s as f64)
            .sum())
    }
}

/// `(cosh x, sinh x)`: unit η-norm on the indefinite qubit.
pub fn boost_normalize(x: f64) -> [f64; 2] {
    [x.cosh(), x.sinh()]
}

/// `(sinh x, cosh x)`: η-orthogonal to [`boost_normalize`]`(x)`.
pub fn boost_partner(x: f64) -> [f64; 2] {
    [x.sinh(), x.cosh()]
}

/// `σ₊ ⊗ σ₋ + σ₋ ⊗ σ₊` on two qubits, with `σ₊ = |1⟩⟨0|`, basis `|00⟩, |01⟩, |10⟩, |11⟩`.
pub fn pair_constraint_operator() -> DMatrix<f64> {
    let plus = DMatrix::from_row_slice(2, 2, &[0.0, 0.0, 1.0, 0.0]);
    let minus = plus.transpose();
    plus.kronecker(&minus) + minus.kronecker(&plus)
}

/// `‖(σ₊ ⊗ σ₋ + σ₋ ⊗ σ₊) v‖`.
pub fn pair_constraint_residual(v: &[f64]) -> Result<f64> {
    if v.len() != 4 {
        return Err(Error::DimensionMismatch { expected: 4, found: v.len() });
    }
    Ok((pair_constraint_operator() * DVector::from_column_slice(v)).norm())
}

/// The physical subspace of two indefinite qubits.
#[derive(Debug, Clone, PartialEq)]
pub struct PairKernel {
    /// Orthonormal (Euclidean) basis of the constraint kernel.
    pub basis: Vec<DVector<f64>>,
    /// Eigenvalues of the two-qubit metric restricted to the kernel, ascending.
    pub restricted_metric: Vec<f64>,
}

/// Computes the constraint kernel numerically and the metric on it.
pub fn pair_constraint_kernel() -> PairKernel {
    let c = pair_constraint_operator();
    let eig = (c.transpose() * &c).symmetric_eigen();
    let basis: Vec<DVector<f64>> = eig
        .eigenvalues
        .iter()
        .enumerate()
        .filter(|(_, &l)| l.abs() <= 1e-12)
        .map(|(k, _)| eig.eigenvectors.column(k).into_owned())
        .collect();
    let g = IndefiniteSpace::indefinite_qubit().tensor(&IndefiniteSpace::indefinite_qubit()).metric();
    let b = DMatrix::from_columns(&basis);
    let restricted = b.transpose() * g * &b;
    let mut restricted_metric: Vec<f64> = restricted.symmetric_eigen().eigenvalues.iter().copied().collect();
    restricted_metric.sort_by(f64::total_cmp);
    PairKernel { basis, restricted_metric }
}

/// Truncated Fock space of a longitudinal and a scalar mode, optionally with
/// a spectator transverse mode of ordinary metric.
///
/// Basis `|n_t, n₃, n₀⟩` with `n₃, n₀ < cutoff` and `n_t < transverse`,
/// index `(n_t·N + n₃)·N + n₀`. Identities involving creation operators are
/// only exact for occupations up to the guard `N − 2`.
#[derive(Debug, Clone, PartialEq)]
pub struct FockToy {
    cutoff: usize,
    transverse: usize,
    metric: DVector<f64>,
    a3: DMatrix<f64>,
    a0: DMatrix<f64>,
    at: DMatrix<f64>,
    a3_dag: DMatrix<f64>,
    a0_dag: DMatrix<f64>,
    at_dag: DMatrix<f64>,
    constraint: DMatrix<f64>,
    emission: DMatrix<f64>,
}

fn annihilator(levels: usize) -> DMatrix<f64> {
    DMatrix::from_fn(levels, levels, |r, c| if c == r + 1 { (c as f64).sqrt() } else { 0.0 })
}

fn metric_adjoint(metric: &DVector<f64>, x: &DMatrix<f64>) -> DMatrix<f64> {
    let mut out = x.transpose();
    for r in 0..out.nrows() {
        for c in 0..out.ncols() {
            out[(r, c)] *= metric[r] * metric[c];
        }
    }
    out
}

/// Two-mode toy with cutoff `N` per ghost mode.
pub fn build_fock_toy(cutoff: usize) -> Result<FockToy> {
    FockToy::with_transverse(cutoff, 1)
}

impl FockToy {
    /// Toy with an extra transverse mode of `transverse` levels (1 = absent).
    pub fn with_transverse(cutoff: usize, transverse: usize) -> Result<Self> {
        if cutoff < MIN_CUTOFF {
            return Err(Error::CutoffTooSmall { min: MIN_CUTOFF, found: cutoff });
        }
        let transverse = transverse.max(1);
        let id_n = DMatrix::<f64>::identity(cutoff, cutoff);
        let id_t = DMatrix::<f64>::identity(transverse, transverse);
        let a = annihilator(cutoff);
        let a3 = id_t.kronecker(&a.kronecker(&id_n));
        let a0 = id_t.kronecker(&id_n.kronecker(&a));
        let at = annihilator(transverse).kronecker(&id_n.kronecker(&id_n));
        let dim = transverse * cutoff * cutoff;
        let metric = DVector::from_fn(dim, |k, _| if (k % cutoff).is_multiple_of(2) { 1.0 } else { -1.0 });
        let a3_dag = metric_adjoint(&metric, &a3);
        let a0_dag = metric_adjoint(&metric, &a0);
        let at_dag = metric_adjoint(&metric, &at);
        let constraint = &a3 - &a0;
        let emission = &a3_dag - &a0_dag;
        Ok(Self { cutoff, transverse, metric, a3, a0, at, a3_dag, a0_dag, at_dag, constraint, emission })
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    pub fn transverse_levels(&self) -> usize {
        self.transverse
    }

    pub fn dim(&self) -> usize {
        self.metric.len()
    }

    /// Largest occupation on which ladder identities are exact.
    pub fn guard(&self) -> usize {
        self.cutoff - 2
    }

    /// Diagonal of `G`: `(−1)^{n₀}`.
    pub fn metric_diagonal(&self) -> &DVector<f64> {
        &self.metric
    }

    /// `G Xᵀ G`.
    pub fn metric_adjoint(&self, x: &DMatrix<f64>) -> DMatrix<f64> {
        metric_adjoint(&self.metric, x)
    }

    pub fn a3(&self) -> &DMatrix<f64> {
        &self.a3
    }

    pub fn a0(&self) -> &DMatrix<f64> {
        &self.a0
    }

    pub fn a3_dag(&self) -> &DMatrix<f64> {
        &self.a3_dag
    }

    pub fn a0_dag(&self) -> &DMatrix<f64> {
        &self.a0_dag
    }

    pub fn transverse_dag(&self) -> &DMatrix<f64> {
        &self.at_dag
    }

    /// `a₃ − a₀`.
    pub fn constraint_operator(&self) -> &DMatrix<f64> {
        &self.constraint
    }

    /// `a₃‡ − a₀‡`, the ghost-pair emission operator.
    pub fn emission_operator(&self) -> &DMatrix<f64> {
        &self.emission
    }

    pub fn index(&self, nt: usize, n3: usize, n0: usize) -> usize {
        (nt * self.cutoff + n3) * self.cutoff + n0
    }

    fn occupations(&self, k: usize) -> (usize, usize, usize) {
        let n0 = k % self.cutoff;
        let n3 = (k / self.cutoff) % self.cutoff;
        (k / (self.cutoff * self.cutoff), n3, n0)
    }

    /// `|0_t, n₃, n₀⟩`.
    pub fn basis_state(&self, n3: usize, n0: usize) -> DVector<f64> {
        self.basis_state_with_transverse(0, n3, n0)
    }

    pub fn basis_state_with_transverse(&self, nt: usize, n3: usize, n0: usize) -> DVector<f64> {
        let mut v = DVector::zeros(self.dim());
        v[self.index(nt, n3, n0)] = 1.0;
        v
    }

    pub fn vacuum(&self) -> DVector<f64> {
        self.basis_state(0, 0)
    }

    /// Indices of basis states with both ghost occupations within the guard.
    pub fn guarded_indices(&self) -> Vec<usize> {
        (0..self.dim())
            .filter(|&k| {
                let (_, n3, n0) = self.occupations(k);
                n3 <= self.guard() && n0 <= self.guard()
            })
            .collect()
    }

    /// Max-abs entry of `(X − target)` over the guarded columns.
    pub fn guarded_defect(&self, x: &DMatrix<f64>, target: &DMatrix<f64>) -> f64 {
        self.guarded_indices()
            .into_iter()
            .flat_map(|c| (0..self.dim()).map(move |r| (r, c)))
            .map(|(r, c)| (x[(r, c)] - target[(r, c)]).abs())
            .fold(0.0, f64::max)
    }

    fn check_state(&self, psi: &DVector<f64>) -> Result<()> {
        if psi.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: psi.len() });
        }
        for (k, &c) in psi.iter().enumerate() {
            if c != 0.0 {
                let (_, n3, n0) = self.occupations(k);
                let occupation = n3.max(n0);
                if occupation > self.guard() {
                    return Err(Error::GuardViolation { occupation, guard: self.guard() });
                }
            }
        }
        Ok(())
    }

    /// `vᵀ G w`.
    pub fn eta_inner(&self, v: &DVector<f64>, w: &DVector<f64>) -> Result<f64> {
        for x in [v, w] {
            if x.len() != self.dim() {
                return Err(Error::DimensionMismatch { expected: self.dim(), found: x.len() });
            }
        }
        Ok(v.iter().zip(w.iter()).zip(self.metric.iter()).map(|((x, y), g)| g * x * y).sum())
    }

    /// `‖(a₃ − a₀) ψ‖`.
    pub fn gb_constraint_residual(&self, psi: &DVector<f64>) -> Result<f64> {
        self.check_state(psi)?;
        Ok((&self.constraint * psi).norm())
    }

    fn ensure_physical(&self, psi: &DVector<f64>) -> Result<()> {
        let residual = self.gb_constraint_residual(psi)?;
        if residual > PHYSICAL_TOL * psi.norm().max(1.0) {
            return Err(Error::NotPhysical { residual });
        }
        Ok(())
    }

    /// `(1 + λ(a₃‡ − a₀‡)) ψ` for a physical `ψ`.
    pub fn ghost_emit(&self, psi: &DVector<f64>, lambda: f64) -> Result<DVector<f64>> {
        self.ensure_physical(psi)?;
        Ok(psi + &self.emission * psi * lambda)
    }

    /// `|⟨ghost_emit(ψ, λ)|ψ₁⟩_η − ⟨ψ|ψ₁⟩_η|` for physical `ψ`, `ψ₁`.
    pub fn overlap_invariance_check(
        &self,
        psi: &DVector<f64>,
        psi1: &DVector<f64>,
        lambda: f64,
    ) -> Result<f64> {
        self.ensure_physical(psi1)?;
        let emitted = self.ghost_emit(psi, lambda)?;
        Ok((self.eta_inner(&emitted, psi1)? - self.eta_inner(psi, psi1)?).abs())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn indefinite_qubit_norms() {
        let q = IndefiniteSpace::indefinite_qubit();
        assert_eq!(q.eta_inner(&[1.0, 0.0], &[1.0, 0.0]).unwrap(), 1.0);
        assert_eq!(q.eta_inner(&[0.0, 1.0], &[0.0, 1.0]).unwrap(), -1.0);
        let (c, s) = (0.3, 1.7);
        assert_eq!(q.eta_inner(&[c, s], &[c, s]).unwrap(), c * c - s * s);
    }

    #[test]
    fn complex_eta_inner_conjugates() {
        let q = IndefiniteSpace::indefinite_qubit();
        let v = ComplexVector::from_pairs(&[(0.0, 1.0), (0.0, 2.0)]);
        assert_eq!(q.eta_inner_complex(&v, &v).unwrap(), Complex64::new(-3.0, 0.0));
    }

    #[test]
    fn dimension_mismatch() {
        let q = IndefiniteSpace::indefinite_qubit();
        assert!(matches!(q.eta_inner(&[1.0], &[1.0, 0.0]), Err(Error::DimensionMismatch { .. })));
        assert!(matches!(pair_constraint_residual(&[1.0; 3]), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn bad_signature_rejected() {
        assert!(IndefiniteSpace::new(vec![1, 2], vec!["a".into(), "b".into()]).is_err());
    }

    #[test]
    fn boost_examples() {
        let q = IndefiniteSpace::indefinite_qubit();
        assert_eq!(boost_normalize(0.0), [1.0, 0.0]);
        let v = boost_normalize(1.0);
        assert!((v[0] - 1.5430806348152437).abs() < 1e-15);
        assert!((v[1] - 1.1752011936438014).abs() < 1e-15);
        assert!((q.eta_inner(&v, &v).unwrap() - 1.0).abs() < 1e-12);
        assert_eq!(q.eta_inner(&v, &boost_partner(1.0)).unwrap(), 0.0);
    }

    #[test]
    fn pair_constraint_examples() {
        assert_eq!(pair_constraint_residual(&[1.0, 0.0, 0.0, 0.0]).unwrap(), 0.0);
        assert_eq!(pair_constraint_residual(&[0.0, 0.0, 0.0, 1.0]).unwrap(), 0.0);
        assert_eq!(pair_constraint_residual(&[0.0, 1.0, 0.0, 0.0]).unwrap(), 1.0);
        let pair = IndefiniteSpace::indefinite_qubit().tensor(&IndefiniteSpace::indefinite_qubit());
        assert_eq!(pair.signature(), &[1, -1, -1, 1]);
        assert_eq!(pair.labels()[3], "11");
    }

    #[test]
    fn pair_kernel_is_positive_plane() {
        let k = pair_constraint_kernel();
        assert_eq!(k.basis.len(), 2);
        for (got, want) in k.restricted_metric.iter().zip([1.0, 1.0]) {
            assert!((got - want).abs() < 1e-14);
        }
    }

    #[test]
    fn small_cutoff_rejected() {
        assert_eq!(build_fock_toy(3).unwrap_err(), Error::CutoffTooSmall { min: 4, found: 3 });
    }

    #[test]
    fn scalar_number_state_norms_alternate() {
        let toy = build_fock_toy(DEFAULT_CUTOFF).unwrap();
        for n in 0..toy.cutoff() {
            let v = toy.basis_state(0, n);
            let want = if n % 2 == 0 { 1.0 } else { -1.0 };
            assert_eq!(toy.eta_inner(&v, &v).unwrap(), want);
        }
    }

    #[test]
    fn scalar_creation_is_minus_standard() {
        let toy = build_fock_toy(5).unwrap();
        assert_eq!(toy.a0_dag(), &(-toy.a0().transpose()));
        assert_eq!(toy.a3_dag(), &toy.a3().transpose());
    }

    #[test]
    fn commutators_on_guarded_subspace() {
        let toy = build_fock_toy(DEFAULT_CUTOFF).unwrap();
        let id = DMatrix::<f64>::identity(toy.dim(), toy.dim());
        let c0 = toy.a0() * toy.a0_dag() - toy.a0_dag() * toy.a0();
        let c3 = toy.a3() * toy.a3_dag() - toy.a3_dag() * toy.a3();
        assert!(toy.guarded_defect(&c0, &(-&id)) <= 1e-14);
        assert!(toy.guarded_defect(&c3, &id) <= 1e-14);
        // Truncation breaks the identity at the top level.
        assert!(toy.guarded_defect(&c0, &(-&id)) < (c0 + &id).amax());
    }

    #[test]
    fn gb_residual_examples() {
        let toy = build_fock_toy(DEFAULT_CUTOFF).unwrap();
        assert_eq!(toy.gb_constraint_residual(&toy.vacuum()).unwrap(), 0.0);
        assert_eq!(toy.gb_constraint_residual(&toy.basis_state(1, 0)).unwrap(), 1.0);
        let ghost = toy.emission_operator() * toy.vacuum();
        assert_eq!(toy.gb_constraint_residual(&ghost).unwrap(), 0.0);
        assert_eq!(toy.eta_inner(&ghost, &ghost).unwrap(), 0.0);
    }

    #[test]
    fn guard_violation_reported() {
        let toy = build_fock_toy(DEFAULT_CUTOFF).unwrap();
        let top = toy.basis_state(7, 0);
        assert_eq!(
            toy.gb_constraint_residual(&top).unwrap_err(),
            Error::GuardViolation { occupation: 7, guard: 6 }
        );
    }

    #[test]
    fn ghost_emit_rejects_unphysical_input() {
        let toy = build_fock_toy(DEFAULT_CUTOFF).unwrap();
        assert!(matches!(toy.ghost_emit(&toy.basis_state(1, 0), 0.5), Err(Error::NotPhysical { .. })));
    }

    #[test]
    fn ghost_emit_zero_lambda_is_identity() {
        let toy = build_fock_toy(DEFAULT_CUTOFF).unwrap();
        assert_eq!(toy.ghost_emit(&toy.vacuum(), 0.0).unwrap(), toy.vacuum());
        assert_eq!(toy.overlap_invariance_check(&toy.vacuum(), &toy.vacuum(), 0.0).unwrap(), 0.0);
    }

    #[test]
    fn vacuum_overlap_invariant() {
        let toy = build_fock_toy(DEFAULT_CUTOFF).unwrap();
        let v = toy.vacuum();
        assert!(toy.overlap_invariance_check(&v, &v, 0.7).unwrap() <= 1e-14);
    }
}

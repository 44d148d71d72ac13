//! Quantum mechanics with real numbers only.
//!
//! Complex amplitudes are replaced by `(re, im)` pairs and multiplication by
//! `i` by the real matrix `J = [[0, −1], [1, 0]]` ([`realmap`]). The enlarged
//! real theory admits maps ordinary quantum mechanics forbids, such as the
//! universal NOT; restricting to operators that commute with `J` removes them
//! ([`superselection`]). The remaining modules work through consequences:
//! real-form Schrödinger dynamics ([`dynamics`]), the Mach-Zehnder
//! interferometer ([`interferometer`]), the two-qubit reading of a realified
//! qubit ([`entanglement`]), and indefinite-metric state spaces with
//! Gupta-Bleuler style constraints ([`indefinite_metric`]).

pub mod complex;
pub mod dynamics;
pub mod entanglement;
pub mod error;
pub mod expm;
pub mod format;
pub mod indefinite_metric;
pub mod interferometer;
pub mod realmap;
pub mod sampling;
pub mod superselection;

pub use complex::{ComplexMatrix, ComplexVector};
pub use error::{Error, Result};
pub use realmap::{
    complexify_op, complexify_state, j_operator, realify_op, realify_state, scalar_action, RealOperator,
    RealState,
};

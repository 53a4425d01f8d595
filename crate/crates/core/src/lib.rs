//! Low-degree observables on `n` qubits and their classical shadows on the
//! Boolean cube `{±1}^{3n}`.
//!
//! - [`pauli`]: sparse Pauli polynomials with a dense oracle for small `n`.
//! - [`lift`]: the map `A ↦ f_A` with `tr[A ρ(ε)] = f_A(ε)`.
//! - [`bh`]: Bohnenblust–Hille functionals, sup norms and observed ratios.
//! - [`learner`]: learning a degree-`d` observable from product-state queries.
//! - [`bohr`]: Boolean and quantum Boolean radii.
//! - [`harness`]: manifest-driven experiments behind the `qcube` binary.

pub mod bh;
pub mod bohr;
pub mod error;
pub mod harness;
pub mod learner;
pub mod lift;
pub mod pauli;
pub mod rng;

pub use error::{Error, Result};
pub use lift::{BooleanPolynomial, SignVector, Subset};
pub use pauli::{DenseMatrix, PauliIndex, PauliPolynomial};

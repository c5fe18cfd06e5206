//! Structure-preserving model reduction for forced Hamiltonian systems.
//!
//! A forced Hamiltonian system evolves a phase-space state `x = (q, p)` by
//!
//! ```text
//! dx/dt = J_2n grad H(x) + (0; f(x))
//! ```
//!
//! where `H` is the Hamiltonian, `J_2n` the Poisson matrix, and `f` a force
//! field acting on the momentum equations only. This crate builds reduced
//! models of such systems that keep that exact shape: the reduced state
//! `z = A^+ x` lives on a symplectic subspace spanned by a data-driven basis
//! `A`, and the reduced dynamics remain forced-Hamiltonian, so dissipativity
//! and stability of the original system carry over.
//!
//! The pieces:
//!
//! - [`symplectic`]: Poisson matrices, symplecticity tests, the symplectic
//!   inverse `A^+`, and range projectors.
//! - [`decomposition`]: snapshot ensembles, SVD-based orthonormal bases, the
//!   cotangent-lift constructions of symplectic bases, and projection-error
//!   diagnostics.
//! - [`reduction`]: forced Hamiltonian models as evaluator bundles, reduction
//!   by structure-preserving projection, by the variational principle, and by
//!   plain orthogonal Galerkin projection, plus energy-rate diagnostics.
//! - [`integrate`]: implicit-midpoint time stepping with trajectory and
//!   energy recording.
//! - [`wave`]: a dissipative wave-equation benchmark with an exact modal
//!   reference solution.
//! - [`stability`]: eigenvalue-based stability reports for reduced operators.
//! - [`harness`]: experiment orchestration and CSV emission behind the
//!   `hamred` command-line tool.
//!
//! # Quick example
//!
//! Reduce a damped oscillator bundle with the identity basis and check that
//! energy decays:
//!
//! ```
//! use hamred::reduction::ForcedHamiltonianModel;
//! use hamred::symplectic::SymplecticBasis;
//! use hamred::reduction::reduce_structure_preserving;
//! use nalgebra::{dvector, DVector};
//!
//! // H = p^2/2 + q^2/2, f = -0.2 p  (unit frequency, damping ratio 0.1)
//! let model = ForcedHamiltonianModel::new(
//!     1,
//!     |x: &DVector<f64>| 0.5 * (x[0] * x[0] + x[1] * x[1]),
//!     |x: &DVector<f64>| x.clone(),
//!     |x: &DVector<f64>| dvector![-0.2 * x[1]],
//! );
//! let reduced = reduce_structure_preserving(&model, &SymplecticBasis::identity(1)).unwrap();
//! let rate = reduced.model().energy_rate(&dvector![0.3, -1.1]);
//! assert!(rate <= 0.0);
//! ```

pub mod decomposition;
pub mod error;
pub mod harness;
pub mod integrate;
pub mod reduction;
pub mod stability;
pub mod symplectic;
pub mod wave;

pub use error::{Error, Result};

#[cfg(test)]
pub(crate) mod test_util;

// The guide chapters double as doc-tests so their code blocks stay honest.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/symplectic-subspaces.md")]
    mod symplectic_subspaces {}
    #[doc = include_str!("../../../book/src/forced-hamiltonian-systems.md")]
    mod forced_hamiltonian_systems {}
    #[doc = include_str!("../../../book/src/cotangent-lift.md")]
    mod cotangent_lift {}
    #[doc = include_str!("../../../book/src/reduced-models.md")]
    mod reduced_models {}
    #[doc = include_str!("../../../book/src/midpoint-integration.md")]
    mod midpoint_integration {}
    #[doc = include_str!("../../../book/src/wave-benchmark.md")]
    mod wave_benchmark {}
    #[doc = include_str!("../../../book/src/stability-analysis.md")]
    mod stability_analysis {}
    #[doc = include_str!("../../../book/src/command-line.md")]
    mod command_line {}
}

//! Shared helpers for unit tests.

use nalgebra::{DMatrix, DVector};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::symplectic::{BasisKind, SymplecticBasis, DEFAULT_TOL};

pub fn random_vector(rng: &mut ChaCha8Rng, len: usize) -> DVector<f64> {
    DVector::from_fn(len, |_, _| rng.random_range(-1.0..1.0))
}

pub fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> DMatrix<f64> {
    DMatrix::from_fn(rows, cols, |_, _| rng.random_range(-1.0..1.0))
}

/// Orthonormal `n x k` matrix from the thin QR of a random matrix.
pub fn random_orthonormal(rng: &mut ChaCha8Rng, n: usize, k: usize) -> DMatrix<f64> {
    assert!(k <= n);
    let qr = random_matrix(rng, n, k).qr();
    qr.q()
}

/// Random cotangent-lift basis `diag(Phi, Phi)`.
pub fn random_cotangent_basis(rng: &mut ChaCha8Rng, n: usize, k: usize) -> SymplecticBasis {
    let phi = random_orthonormal(rng, n, k);
    SymplecticBasis::cotangent(&phi, DEFAULT_TOL).expect("orthonormal lift is symplectic")
}

/// Random symplectic basis with a nonzero `A_pq` block: a cotangent lift
/// sheared by a symmetric matrix.
pub fn random_sheared_basis(rng: &mut ChaCha8Rng, n: usize, k: usize) -> SymplecticBasis {
    let phi = random_orthonormal(rng, n, k);
    let w = random_matrix(rng, k, k);
    let sym = 0.5 * (&w + &w.transpose());
    SymplecticBasis::from_blocks(phi.clone(), &phi * sym, phi, BasisKind::General, DEFAULT_TOL)
        .expect("sheared cotangent basis is symplectic")
}

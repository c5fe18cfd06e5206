//! Symplectic linear algebra.
//!
//! Phase space `R^{2n}` carries the canonical symplectic form represented by
//! the Poisson matrix
//!
//! ```text
//! J_2n = [  0   I_n ]
//!        [ -I_n  0  ]
//! ```
//!
//! A tall matrix `A` in `R^{2n x 2k}` is *symplectic* when `A^T J_2n A = J_2k`.
//! Every such matrix has a canonical left inverse, the symplectic inverse
//! `A^+ = J_2k^T A^T J_2n`, and `A A^+` is an (oblique) projector onto the
//! range of `A`. Bases used for structure-preserving reduction additionally
//! keep their upper-right block zero, which this module enforces by
//! construction: [`SymplecticBasis`] stores only the `A_qq`, `A_pq`, `A_pp`
//! blocks.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};

/// Default tolerance for symplecticity and left-inverse identities,
/// applied relative to the Frobenius norm of the matrix under test.
/// SVD-built bases in double precision land near 1e-13.
pub const DEFAULT_TOL: f64 = 1e-10;

/// The canonical Poisson matrix `J_2n`, stored by its half-dimension.
///
/// The dense form is materialized on demand; applications to vectors use the
/// block structure directly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PoissonMatrix {
    half_dim: usize,
}

impl PoissonMatrix {
    /// A Poisson matrix on `R^{2n}`. Rejects `n = 0`.
    pub fn new(half_dim: usize) -> Result<Self> {
        if half_dim == 0 {
            return Err(Error::InvalidArgument(
                "Poisson matrix requires half-dimension >= 1".into(),
            ));
        }
        Ok(Self { half_dim })
    }

    pub fn half_dim(&self) -> usize {
        self.half_dim
    }

    pub fn dim(&self) -> usize {
        2 * self.half_dim
    }

    /// Dense `2n x 2n` form `[[0, I], [-I, 0]]`.
    pub fn dense(&self) -> DMatrix<f64> {
        let n = self.half_dim;
        let mut j = DMatrix::zeros(2 * n, 2 * n);
        for i in 0..n {
            j[(i, n + i)] = 1.0;
            j[(n + i, i)] = -1.0;
        }
        j
    }

    /// `J v = (v_p; -v_q)`.
    pub fn apply(&self, v: &DVector<f64>) -> DVector<f64> {
        let n = self.half_dim;
        assert_eq!(v.len(), 2 * n, "vector length must be 2n");
        let mut out = DVector::zeros(2 * n);
        for i in 0..n {
            out[i] = v[n + i];
            out[n + i] = -v[i];
        }
        out
    }

    /// `J^T v = -J v = (-v_p; v_q)`.
    pub fn apply_transpose(&self, v: &DVector<f64>) -> DVector<f64> {
        -self.apply(v)
    }
}

/// Dense Poisson matrix `J_2n`; rejects `n = 0`.
pub fn poisson_matrix(half_dim: usize) -> Result<DMatrix<f64>> {
    Ok(PoissonMatrix::new(half_dim)?.dense())
}

/// The canonical symplectic form `Omega(u, v) = u^T J_2n v`.
///
/// With this sign convention `Omega(X_H, v) = dH . v` for the Hamiltonian
/// field `X_H = J grad H`.
pub fn symplectic_form(u: &DVector<f64>, v: &DVector<f64>) -> f64 {
    assert_eq!(u.len(), v.len(), "vectors must share a dimension");
    assert_eq!(u.len() % 2, 0, "phase-space dimension must be even");
    let n = u.len() / 2;
    let mut acc = 0.0;
    for i in 0..n {
        acc += u[i] * v[n + i] - u[n + i] * v[i];
    }
    acc
}

/// Outcome of a symplecticity test: the decision plus the raw residual
/// `|| A^T J_2n A - J_2k ||_F`.
#[derive(Debug, Clone, Copy)]
pub struct SymplecticCheck {
    pub symplectic: bool,
    pub residual: f64,
}

/// Tests `A^T J_2n A = J_2k` for a `2n x 2k` matrix against an absolute
/// tolerance on the Frobenius residual.
///
/// Rejects matrices with odd row or column counts, wider-than-tall shapes,
/// and non-finite entries.
pub fn is_symplectic(a: &DMatrix<f64>, tol: f64) -> Result<SymplecticCheck> {
    let (rows, cols) = a.shape();
    if rows % 2 != 0 || cols % 2 != 0 {
        return Err(Error::DimensionMismatch(format!(
            "symplectic test needs even dimensions, got {rows}x{cols}"
        )));
    }
    if rows < cols || cols == 0 {
        return Err(Error::DimensionMismatch(format!(
            "symplectic test needs 2n >= 2k >= 2, got {rows}x{cols}"
        )));
    }
    if a.iter().any(|x| !x.is_finite()) {
        return Err(Error::InvalidArgument(
            "symplectic test requires finite entries".into(),
        ));
    }
    let residual = symplecticity_residual(a);
    Ok(SymplecticCheck {
        symplectic: residual <= tol,
        residual,
    })
}

/// `|| A^T J_2n A - J_2k ||_F` without shape validation.
fn symplecticity_residual(a: &DMatrix<f64>) -> f64 {
    let n = a.nrows() / 2;
    let k = a.ncols() / 2;
    let jn = PoissonMatrix { half_dim: n }.dense();
    let jk = PoissonMatrix { half_dim: k }.dense();
    (a.transpose() * jn * a - jk).norm()
}

/// Symplectic inverse `A^+ = J_2k^T A^T J_2n` of a general symplectic matrix.
///
/// The input must pass [`is_symplectic`] at the given tolerance; otherwise
/// the residual is reported in the error.
pub fn symplectic_inverse(a: &DMatrix<f64>, tol: f64) -> Result<DMatrix<f64>> {
    let check = is_symplectic(a, tol)?;
    if !check.symplectic {
        return Err(Error::NotSymplectic {
            residual: check.residual,
            tol,
        });
    }
    let n = a.nrows() / 2;
    let k = a.ncols() / 2;
    let jn = PoissonMatrix { half_dim: n }.dense();
    let jk = PoissonMatrix { half_dim: k }.dense();
    Ok(jk.transpose() * a.transpose() * jn)
}

/// Projector `P = A A^+` onto the range of a symplectic matrix.
pub fn projector(a: &DMatrix<f64>, tol: f64) -> Result<DMatrix<f64>> {
    Ok(a * symplectic_inverse(a, tol)?)
}

/// How a basis was constructed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisKind {
    /// `A = diag(Phi, Phi)` with orthonormal `Phi`.
    CotangentLift,
    /// Any other symplectic matrix with zero upper-right block.
    General,
}

/// A symplectic basis `A` in `R^{2n x 2k}` with `A_qp = 0` enforced
/// structurally: only the three nonzero blocks are stored, so the
/// structure-preserving constraint cannot be violated by data.
///
/// Construction validates the block criterion (`A_qq^T A_pq` symmetric and
/// `A_qq^T A_pp = I_k`) together with the full symplecticity residual.
/// Instances are immutable.
#[derive(Debug, Clone)]
pub struct SymplecticBasis {
    full_half_dim: usize,
    reduced_half_dim: usize,
    a_qq: DMatrix<f64>,
    a_pq: DMatrix<f64>,
    a_pp: DMatrix<f64>,
    kind: BasisKind,
}

impl SymplecticBasis {
    /// Builds a basis from its three nonzero `n x k` blocks, validating
    /// symplecticity at tolerance `tol` relative to `||A||_F`.
    pub fn from_blocks(
        a_qq: DMatrix<f64>,
        a_pq: DMatrix<f64>,
        a_pp: DMatrix<f64>,
        kind: BasisKind,
        tol: f64,
    ) -> Result<Self> {
        let (n, k) = a_qq.shape();
        if a_pq.shape() != (n, k) || a_pp.shape() != (n, k) {
            return Err(Error::DimensionMismatch(
                "basis blocks must share the same n x k shape".into(),
            ));
        }
        if k == 0 || k > n {
            return Err(Error::DimensionMismatch(format!(
                "need 1 <= k <= n, got k={k}, n={n}"
            )));
        }
        let basis = Self {
            full_half_dim: n,
            reduced_half_dim: k,
            a_qq,
            a_pq,
            a_pp,
            kind,
        };
        let scale = basis.matrix().norm().max(1.0);
        let check = is_symplectic(&basis.matrix(), tol * scale)?;
        if !check.symplectic {
            return Err(Error::NotSymplectic {
                residual: check.residual,
                tol: tol * scale,
            });
        }
        Ok(basis)
    }

    /// Cotangent-lift basis `diag(Phi, Phi)` from an orthonormal `Phi`.
    pub fn cotangent(phi: &DMatrix<f64>, tol: f64) -> Result<Self> {
        let (n, k) = phi.shape();
        Self::from_blocks(
            phi.clone(),
            DMatrix::zeros(n, k),
            phi.clone(),
            BasisKind::CotangentLift,
            tol,
        )
    }

    /// Identity basis (`k = n`), useful as a no-op reduction.
    pub fn identity(half_dim: usize) -> Self {
        let eye = DMatrix::identity(half_dim, half_dim);
        Self {
            full_half_dim: half_dim,
            reduced_half_dim: half_dim,
            a_qq: eye.clone(),
            a_pq: DMatrix::zeros(half_dim, half_dim),
            a_pp: eye,
            kind: BasisKind::General,
        }
    }

    pub fn full_half_dim(&self) -> usize {
        self.full_half_dim
    }

    pub fn reduced_half_dim(&self) -> usize {
        self.reduced_half_dim
    }

    pub fn full_dim(&self) -> usize {
        2 * self.full_half_dim
    }

    pub fn reduced_dim(&self) -> usize {
        2 * self.reduced_half_dim
    }

    pub fn kind(&self) -> BasisKind {
        self.kind
    }

    pub fn block_qq(&self) -> &DMatrix<f64> {
        &self.a_qq
    }

    pub fn block_pq(&self) -> &DMatrix<f64> {
        &self.a_pq
    }

    pub fn block_pp(&self) -> &DMatrix<f64> {
        &self.a_pp
    }

    /// Assembles the dense `2n x 2k` matrix `[[A_qq, 0], [A_pq, A_pp]]`.
    pub fn matrix(&self) -> DMatrix<f64> {
        let (n, k) = (self.full_half_dim, self.reduced_half_dim);
        let mut a = DMatrix::zeros(2 * n, 2 * k);
        a.view_mut((0, 0), (n, k)).copy_from(&self.a_qq);
        a.view_mut((n, 0), (n, k)).copy_from(&self.a_pq);
        a.view_mut((n, k), (n, k)).copy_from(&self.a_pp);
        a
    }

    /// The symplectic inverse in block form,
    /// `A^+ = [[A_pp^T, 0], [-A_pq^T, A_qq^T]]` (using `A_qp = 0`).
    pub fn symplectic_inverse(&self) -> DMatrix<f64> {
        let (n, k) = (self.full_half_dim, self.reduced_half_dim);
        let mut out = DMatrix::zeros(2 * k, 2 * n);
        out.view_mut((0, 0), (k, n)).copy_from(&self.a_pp.transpose());
        out.view_mut((k, 0), (k, n))
            .copy_from(&(-self.a_pq.transpose()));
        out.view_mut((k, n), (k, n)).copy_from(&self.a_qq.transpose());
        out
    }

    /// Projector `A A^+` onto the range of the basis.
    pub fn projector(&self) -> DMatrix<f64> {
        self.matrix() * self.symplectic_inverse()
    }

    /// Reconstruction `x = A z`.
    pub fn lift(&self, z: &DVector<f64>) -> DVector<f64> {
        let (n, k) = (self.full_half_dim, self.reduced_half_dim);
        assert_eq!(z.len(), 2 * k, "reduced state must have length 2k");
        let r = z.rows(0, k);
        let s = z.rows(k, k);
        let mut x = DVector::zeros(2 * n);
        x.rows_mut(0, n).copy_from(&(&self.a_qq * r));
        x.rows_mut(n, n).copy_from(&(&self.a_pq * r + &self.a_pp * s));
        x
    }

    /// Reduction `z = A^+ x`.
    pub fn project(&self, x: &DVector<f64>) -> DVector<f64> {
        let (n, k) = (self.full_half_dim, self.reduced_half_dim);
        assert_eq!(x.len(), 2 * n, "full state must have length 2n");
        let q = x.rows(0, n);
        let p = x.rows(n, n);
        let mut z = DVector::zeros(2 * k);
        z.rows_mut(0, k).copy_from(&(self.a_pp.transpose() * q));
        z.rows_mut(k, k)
            .copy_from(&(self.a_qq.transpose() * p - self.a_pq.transpose() * q));
        z
    }

    /// Gradient pullback `A^T g` evaluated blockwise.
    pub fn transpose_apply(&self, g: &DVector<f64>) -> DVector<f64> {
        let (n, k) = (self.full_half_dim, self.reduced_half_dim);
        assert_eq!(g.len(), 2 * n, "gradient must have length 2n");
        let gq = g.rows(0, n);
        let gp = g.rows(n, n);
        let mut out = DVector::zeros(2 * k);
        out.rows_mut(0, k)
            .copy_from(&(self.a_qq.transpose() * gq + self.a_pq.transpose() * gp));
        out.rows_mut(k, k).copy_from(&(self.a_pp.transpose() * gp));
        out
    }

    /// Frobenius residual of `A^T J_2n A - J_2k`.
    pub fn symplecticity_residual(&self) -> f64 {
        symplecticity_residual(&self.matrix())
    }

    /// Frobenius residual of `A^+ A - I_2k`.
    pub fn left_inverse_residual(&self) -> f64 {
        let k2 = self.reduced_dim();
        (self.symplectic_inverse() * self.matrix() - DMatrix::<f64>::identity(k2, k2)).norm()
    }
}

//! Dense decompositions (Hermitian eigen, SVD, QR) over complex matrices.

use nalgebra::DMatrix;
use num_complex::Complex;
use num_traits::Float;

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::scalar::{real, C, Real};

/// Entrywise Hermiticity tolerance applied before eigendecomposition.
pub const HERMITICITY_TOL: f64 = 1e-10;

fn to_na<T: Real>(m: &ComplexMatrix<T>) -> DMatrix<C<T>> {
    DMatrix::from_fn(m.rows(), m.cols(), |i, j| m[(i, j)])
}

fn from_na<T: Real>(m: &DMatrix<C<T>>) -> ComplexMatrix<T> {
    ComplexMatrix::from_fn(m.nrows(), m.ncols(), |i, j| m[(i, j)])
}

/// Eigendecomposition of a Hermitian matrix.
///
/// Returns eigenvalues sorted descending and the matching unitary of column
/// eigenvectors, so that `m = V diag(λ) V†`.
pub fn eig_hermitian<T: Real>(m: &ComplexMatrix<T>) -> Result<(Vec<T>, ComplexMatrix<T>)> {
    if !m.is_square() {
        return Err(Error::ShapeMismatch(format!(
            "eigendecomposition requires a square matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    let dev = m.hermiticity_deviation();
    if dev > real(HERMITICITY_TOL) {
        return Err(Error::NonHermitianInput {
            deviation: dev.to_f64().unwrap_or(f64::NAN),
            tolerance: HERMITICITY_TOL,
        });
    }
    // symmetrize to kill roundoff asymmetry before factorizing
    let n = m.rows();
    let h = m.add(&m.adjoint()).scaled(Complex::new(real(0.5), T::zero()));
    let eig = to_na(&h).symmetric_eigen();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        eig.eigenvalues[b].partial_cmp(&eig.eigenvalues[a]).expect("finite eigenvalues")
    });
    let values: Vec<T> = order.iter().map(|&k| eig.eigenvalues[k]).collect();
    let vectors = ComplexMatrix::from_fn(n, n, |i, j| eig.eigenvectors[(i, order[j])]);
    Ok((values, vectors))
}

/// Singular value decomposition `m = U diag(Σ) V†` with Σ descending.
///
/// `U` is `rows×k` and `V` is `cols×k` with `k = min(rows, cols)`.
pub fn svd<T: Real>(m: &ComplexMatrix<T>) -> Result<(ComplexMatrix<T>, Vec<T>, ComplexMatrix<T>)> {
    let k = m.rows().min(m.cols());
    let f = to_na(m)
        .try_svd(true, true, T::RealField::default_epsilon(), 0)
        .ok_or(Error::ConvergenceFailure)?;
    let u = f.u.as_ref().expect("left singular vectors requested");
    let vt = f.v_t.as_ref().expect("right singular vectors requested");
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by(|&a, &b| {
        f.singular_values[b].partial_cmp(&f.singular_values[a]).expect("finite singular values")
    });
    let sigma: Vec<T> = order.iter().map(|&i| f.singular_values[i]).collect();
    let u_s = ComplexMatrix::from_fn(m.rows(), k, |i, j| u[(i, order[j])]);
    let v_s = ComplexMatrix::from_fn(m.cols(), k, |i, j| vt[(order[j], i)].conj());
    Ok((u_s, sigma, v_s))
}

/// QR factorization `m = Q R` with square unitary `Q`.
pub fn qr<T: Real>(m: &ComplexMatrix<T>) -> Result<(ComplexMatrix<T>, ComplexMatrix<T>)> {
    if !m.is_square() {
        return Err(Error::ShapeMismatch("QR helper expects a square matrix".into()));
    }
    let f = to_na(m).qr();
    Ok((from_na(&f.q()), from_na(&f.r())))
}

/// Extends a `d×r` matrix with orthonormal columns (`r ≤ d`) to a `d×d`
/// unitary by Gram–Schmidt against the canonical basis.
pub fn complete_unitary<T: Real>(isometry: &ComplexMatrix<T>) -> Result<ComplexMatrix<T>> {
    let d = isometry.rows();
    let r = isometry.cols();
    if r > d {
        return Err(Error::ShapeMismatch("more columns than rows".into()));
    }
    let mut cols: Vec<Vec<C<T>>> = (0..r).map(|j| isometry.column(j)).collect();
    let mut basis_try = 0usize;
    while cols.len() < d {
        if basis_try >= d {
            return Err(Error::ShapeMismatch("could not complete unitary basis".into()));
        }
        let mut v: Vec<C<T>> = vec![Complex::new(T::zero(), T::zero()); d];
        v[basis_try] = Complex::new(T::one(), T::zero());
        basis_try += 1;
        // two passes of Gram-Schmidt for stability
        for _ in 0..2 {
            for c in &cols {
                let overlap: C<T> = c
                    .iter()
                    .zip(&v)
                    .map(|(a, b)| a.conj() * b)
                    .fold(Complex::new(T::zero(), T::zero()), |acc, z| acc + z);
                for (vi, ci) in v.iter_mut().zip(c) {
                    *vi -= overlap * ci;
                }
            }
        }
        let norm = Float::sqrt(v.iter().map(|z| z.norm_sqr()).fold(T::zero(), |a, b| a + b));
        if norm > real(1e-6) {
            let inv = Complex::new(T::one() / norm, T::zero());
            cols.push(v.into_iter().map(|z| z * inv).collect());
        }
    }
    ComplexMatrix::from_columns(&cols)
}

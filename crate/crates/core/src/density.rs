//! Density matrices over tensor-product spaces, partial transpose and
//! partial trace.

use num_complex::Complex;
use num_traits::{Float, Zero};

use crate::error::{Error, Result};
use crate::linalg::eig_hermitian;
use crate::matrix::ComplexMatrix;
use crate::scalar::{real, C, Real};
use crate::tensor::ComplexTensor;

/// Entrywise Hermiticity tolerance for density validation.
pub const DENSITY_HERMITICITY_TOL: f64 = 1e-10;
/// Trace deviation tolerance.
pub const DENSITY_TRACE_TOL: f64 = 1e-10;
/// Most negative admissible eigenvalue.
pub const DENSITY_PSD_TOL: f64 = -1e-10;

/// Hermitian, positive semidefinite, unit-trace matrix on `⊗ H_{d_n}`.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix<T: Real> {
    dims: Vec<usize>,
    mat: ComplexMatrix<T>,
}

impl<T: Real> DensityMatrix<T> {
    /// Validates and wraps a candidate density matrix. Inputs failing the
    /// Hermiticity/trace/positivity checks are rejected, not projected.
    pub fn try_new(dims: Vec<usize>, mat: ComplexMatrix<T>) -> Result<Self> {
        let side: usize = dims.iter().product();
        if dims.is_empty() || dims.iter().any(|&d| d == 0) {
            return Err(Error::InvalidDensity("dims must be nonempty and positive".into()));
        }
        if !mat.is_square() || mat.rows() != side {
            return Err(Error::InvalidDensity(format!(
                "matrix is {}x{} but dims {:?} require side {}",
                mat.rows(),
                mat.cols(),
                dims,
                side
            )));
        }
        let herm = mat.hermiticity_deviation();
        if herm > real(DENSITY_HERMITICITY_TOL) {
            return Err(Error::InvalidDensity(format!(
                "not Hermitian (deviation {:.3e})",
                herm.to_f64().unwrap_or(f64::NAN)
            )));
        }
        let tr = mat.trace();
        let tr_dev = (tr - Complex::new(T::one(), T::zero())).norm();
        if tr_dev > real(DENSITY_TRACE_TOL) {
            return Err(Error::InvalidDensity(format!(
                "trace deviates from 1 by {:.3e}",
                tr_dev.to_f64().unwrap_or(f64::NAN)
            )));
        }
        let (vals, _) = eig_hermitian(&mat)?;
        if let Some(min) = vals.last() {
            if *min < real(DENSITY_PSD_TOL) {
                return Err(Error::InvalidDensity(format!(
                    "negative eigenvalue {:.3e}",
                    min.to_f64().unwrap_or(f64::NAN)
                )));
            }
        }
        Ok(Self { dims, mat })
    }

    /// Projector `|ψ⟩⟨ψ|` of a normalized pure state.
    pub fn from_pure(psi: &ComplexTensor<T>) -> Result<Self> {
        psi.check_normalized()?;
        let n = psi.len();
        let data = psi.data();
        let mat = ComplexMatrix::from_fn(n, n, |i, j| data[i] * data[j].conj());
        Ok(Self { dims: psi.dims().to_vec(), mat })
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn side(&self) -> usize {
        self.mat.rows()
    }

    pub fn mat(&self) -> &ComplexMatrix<T> {
        &self.mat
    }

    pub fn into_mat(self) -> ComplexMatrix<T> {
        self.mat
    }

    /// Eigenvalues sorted descending.
    pub fn spectrum(&self) -> Vec<T> {
        let (vals, _) = eig_hermitian(&self.mat).expect("validated Hermitian matrix");
        vals
    }

    /// Partial transpose with respect to subsystem 1 or 2.
    ///
    /// The output is Hermitian with the same trace but need not be positive
    /// semidefinite, so it is returned as a plain matrix.
    pub fn partial_transpose(&self, subsystem: usize) -> Result<ComplexMatrix<T>> {
        partial_transpose_matrix(&self.mat, &self.dims, subsystem)
    }

    /// Partial trace keeping subsystem `keep` (1 or 2).
    pub fn partial_trace(&self, keep: usize) -> Result<ComplexMatrix<T>> {
        partial_trace_matrix(&self.mat, &self.dims, keep)
    }
}

/// Entry-permutation partial transpose on a raw bipartite matrix:
/// `(ρ^{T₂})_{mμ,nν} = ρ_{mν,nμ}` for `subsystem = 2`, and the mirror rule
/// for `subsystem = 1`. No arithmetic is performed.
pub fn partial_transpose_matrix<T: Real>(
    mat: &ComplexMatrix<T>,
    dims: &[usize],
    subsystem: usize,
) -> Result<ComplexMatrix<T>> {
    if dims.len() != 2 {
        return Err(Error::NotBipartite(dims.len()));
    }
    if subsystem != 1 && subsystem != 2 {
        return Err(Error::ParameterOutOfRange(format!(
            "subsystem must be 1 or 2, got {subsystem}"
        )));
    }
    let (d1, d2) = (dims[0], dims[1]);
    if mat.rows() != d1 * d2 || !mat.is_square() {
        return Err(Error::ShapeMismatch(format!(
            "matrix is {}x{} but dims are {:?}",
            mat.rows(),
            mat.cols(),
            dims
        )));
    }
    let mut out = ComplexMatrix::zeros(d1 * d2, d1 * d2);
    for m in 0..d1 {
        for mu in 0..d2 {
            for n in 0..d1 {
                for nu in 0..d2 {
                    let src = if subsystem == 2 {
                        (m * d2 + nu, n * d2 + mu)
                    } else {
                        (n * d2 + mu, m * d2 + nu)
                    };
                    out[(m * d2 + mu, n * d2 + nu)] = mat[src];
                }
            }
        }
    }
    Ok(out)
}

/// Partial trace of a raw bipartite matrix, keeping subsystem `keep`.
pub fn partial_trace_matrix<T: Real>(
    mat: &ComplexMatrix<T>,
    dims: &[usize],
    keep: usize,
) -> Result<ComplexMatrix<T>> {
    if dims.len() != 2 {
        return Err(Error::NotBipartite(dims.len()));
    }
    if keep != 1 && keep != 2 {
        return Err(Error::ParameterOutOfRange(format!("keep must be 1 or 2, got {keep}")));
    }
    let (d1, d2) = (dims[0], dims[1]);
    let side = if keep == 1 { d1 } else { d2 };
    let mut out = ComplexMatrix::zeros(side, side);
    for i in 0..side {
        for j in 0..side {
            let mut acc = Complex::zero();
            if keep == 1 {
                for mu in 0..d2 {
                    acc += mat[(i * d2 + mu, j * d2 + mu)];
                }
            } else {
                for m in 0..d1 {
                    acc += mat[(m * d2 + i, m * d2 + j)];
                }
            }
            out[(i, j)] = acc;
        }
    }
    Ok(out)
}

/// Sorted-descending eigenvalues of a Hermitian (not necessarily PSD)
/// unit-trace matrix; used for signed spectral forms.
pub fn hermitian_spectrum<T: Real>(mat: &ComplexMatrix<T>) -> Result<Vec<T>> {
    Ok(eig_hermitian(mat)?.0)
}

/// `true` when two descending spectra agree entrywise within `tol`.
pub fn spectra_match<T: Real>(a: &[T], b: &[T], tol: T) -> bool {
    a.len() == b.len()
        && a.iter().zip(b).all(|(x, y)| Float::abs(*x - *y) <= tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::complex;

    type M = ComplexMatrix<f64>;

    fn bell_density() -> DensityMatrix<f64> {
        let s = 0.5f64.sqrt();
        let t = ComplexTensor::new(
            vec![2, 2],
            vec![complex(s, 0.0), complex(0.0, 0.0), complex(0.0, 0.0), complex(s, 0.0)],
        )
        .unwrap();
        DensityMatrix::from_pure(&t).unwrap()
    }

    #[test]
    fn validation_rejects_bad_inputs() {
        // non-unit trace
        let m = M::identity(4);
        assert!(DensityMatrix::try_new(vec![2, 2], m).is_err());
        // valid maximally mixed
        let m = M::identity(4).scaled(complex(0.25, 0.0));
        assert!(DensityMatrix::try_new(vec![2, 2], m).is_ok());
        // Hermitian, unit trace, but not PSD
        let mut neg = M::zeros(4, 4);
        neg[(0, 0)] = complex(1.5, 0.0);
        neg[(1, 1)] = complex(-0.5, 0.0);
        assert!(DensityMatrix::try_new(vec![2, 2], neg).is_err());
    }

    #[test]
    fn diagonal_density_fixed_by_partial_transpose() {
        let m = M::from_fn(4, 4, |i, j| {
            if i == j { complex(0.25, 0.0) } else { complex(0.0, 0.0) }
        });
        let rho = DensityMatrix::try_new(vec![2, 2], m.clone()).unwrap();
        assert!(rho.partial_transpose(2).unwrap().max_abs_diff(&m) < 1e-15);
    }

    #[test]
    fn bell_partial_transpose_is_half_swap() {
        // applying the element rule to the four nonzero entries of |ψ+⟩⟨ψ+|
        // lands them on the SWAP pattern
        let rho = bell_density();
        let pt = rho.partial_transpose(2).unwrap();
        let mut swap = M::zeros(4, 4);
        for m in 0..2 {
            for n in 0..2 {
                swap[(m * 2 + n, n * 2 + m)] = complex(1.0, 0.0);
            }
        }
        assert!(pt.max_abs_diff(&swap.scaled(complex(0.5, 0.0))) < 1e-15);
    }

    #[test]
    fn partial_transpose_is_involution_and_trace_preserving() {
        let rho = bell_density();
        let pt = rho.partial_transpose(2).unwrap();
        let back = partial_transpose_matrix(&pt, rho.dims(), 2).unwrap();
        assert_eq!(back, rho.mat().clone());
        assert!((pt.trace() - rho.mat().trace()).norm() < 1e-15);
        assert!(pt.hermiticity_deviation() < 1e-15);
    }

    #[test]
    fn product_state_partial_trace() {
        // |0⟩⟨0| ⊗ |1⟩⟨1|, keep 1 → |0⟩⟨0|
        let mut m = M::zeros(4, 4);
        m[(1, 1)] = complex(1.0, 0.0); // basis index 0*2+1
        let rho = DensityMatrix::try_new(vec![2, 2], m).unwrap();
        let red = rho.partial_trace(1).unwrap();
        assert!((red[(0, 0)] - complex::<f64>(1.0, 0.0)).norm() < 1e-15);
        assert!(red[(1, 1)].norm() < 1e-15);
    }

    #[test]
    fn bell_reductions_are_maximally_mixed() {
        let rho = bell_density();
        for keep in [1, 2] {
            let red = rho.partial_trace(keep).unwrap();
            assert!(red.max_abs_diff(&M::identity(2).scaled(complex(0.5, 0.0))) < 1e-14);
        }
    }

    #[test]
    fn w_state_double_reduction() {
        // Tr_{2,3}|W⟩⟨W| = diag(2/3, 1/3), via two nested keep-1 traces
        let s = (1f64 / 3.0).sqrt();
        let mut t = ComplexTensor::zeros(vec![2, 2, 2]);
        t.set(&[0, 0, 1], complex(s, 0.0));
        t.set(&[0, 1, 0], complex(s, 0.0));
        t.set(&[1, 0, 0], complex(s, 0.0));
        let rho = DensityMatrix::from_pure(&t).unwrap();
        // regroup (2)x(2x2) and trace out the right factor
        let m1 = partial_trace_matrix(rho.mat(), &[2, 4], 1).unwrap();
        assert!((m1[(0, 0)].re - 2.0 / 3.0).abs() < 1e-14);
        assert!((m1[(1, 1)].re - 1.0 / 3.0).abs() < 1e-14);
        assert!(m1[(0, 1)].norm() < 1e-14);
    }

    #[test]
    fn non_bipartite_rejected() {
        let s = (1f64 / 3.0).sqrt();
        let mut t = ComplexTensor::zeros(vec![2, 2, 2]);
        t.set(&[0, 0, 1], complex(s, 0.0));
        t.set(&[0, 1, 0], complex(s, 0.0));
        t.set(&[1, 0, 0], complex(s, 0.0));
        let rho = DensityMatrix::from_pure(&t).unwrap();
        assert!(matches!(rho.partial_transpose(2), Err(Error::NotBipartite(3))));
        assert!(matches!(rho.partial_trace(1), Err(Error::NotBipartite(3))));
    }
}

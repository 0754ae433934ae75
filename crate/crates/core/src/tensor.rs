//! Dense complex tensors with explicit subsystem dimensions.
//!
//! Layout is row-major with the first index slowest; a bipartite amplitude
//! tensor therefore coincides entry-for-entry with its coefficient matrix.

use num_complex::Complex;
use num_traits::{Float, Zero};

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::scalar::{real, C, Real};

/// Frobenius-norm tolerance for the "normalized" predicate.
pub const NORMALIZATION_TOL: f64 = 1e-12;

/// Dense complex tensor over subsystems of dimensions `dims`.
#[derive(Clone, PartialEq)]
pub struct ComplexTensor<T: Real> {
    dims: Vec<usize>,
    data: Vec<C<T>>,
}

impl<T: Real> ComplexTensor<T> {
    pub fn new(dims: Vec<usize>, data: Vec<C<T>>) -> Result<Self> {
        if dims.is_empty() || dims.iter().any(|&d| d == 0) {
            return Err(Error::ShapeMismatch("dims must be nonempty and positive".into()));
        }
        let len: usize = dims.iter().product();
        if data.len() != len {
            return Err(Error::ShapeMismatch(format!(
                "data length {} does not match dims {:?}",
                data.len(),
                dims
            )));
        }
        Ok(Self { dims, data })
    }

    pub fn zeros(dims: Vec<usize>) -> Self {
        let len = dims.iter().product();
        Self { dims, data: vec![Complex::zero(); len] }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn order(&self) -> usize {
        self.dims.len()
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn data(&self) -> &[C<T>] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [C<T>] {
        &mut self.data
    }

    /// Flat offset of a multi-index (first index slowest).
    pub fn flat_index(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.dims.len());
        let mut off = 0;
        for (k, &i) in idx.iter().enumerate() {
            debug_assert!(i < self.dims[k]);
            off = off * self.dims[k] + i;
        }
        off
    }

    /// Multi-index of a flat offset.
    pub fn multi_index(&self, mut off: usize) -> Vec<usize> {
        let mut idx = vec![0; self.dims.len()];
        for k in (0..self.dims.len()).rev() {
            idx[k] = off % self.dims[k];
            off /= self.dims[k];
        }
        idx
    }

    pub fn get(&self, idx: &[usize]) -> C<T> {
        self.data[self.flat_index(idx)]
    }

    pub fn set(&mut self, idx: &[usize], v: C<T>) {
        let off = self.flat_index(idx);
        self.data[off] = v;
    }

    pub fn norm(&self) -> T {
        Float::sqrt(self.data.iter().map(|z| z.norm_sqr()).fold(T::zero(), |a, b| a + b))
    }

    pub fn is_normalized(&self) -> bool {
        Float::abs(self.norm() - T::one()) <= real(NORMALIZATION_TOL)
    }

    pub fn check_normalized(&self) -> Result<()> {
        let dev = Float::abs(self.norm() - T::one());
        if dev > real(NORMALIZATION_TOL) {
            return Err(Error::NotNormalized(dev.to_f64().unwrap_or(f64::NAN)));
        }
        Ok(())
    }

    pub fn scaled(&self, s: C<T>) -> Self {
        Self { dims: self.dims.clone(), data: self.data.iter().map(|z| z * s).collect() }
    }

    pub fn conj(&self) -> Self {
        Self { dims: self.dims.clone(), data: self.data.iter().map(|z| z.conj()).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.dims, other.dims);
        Self {
            dims: self.dims.clone(),
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    /// Inner product `⟨self, other⟩ = Σ conj(self) · other`.
    pub fn inner(&self, other: &Self) -> C<T> {
        assert_eq!(self.dims, other.dims);
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.conj() * b)
            .fold(Complex::zero(), |acc, z| acc + z)
    }

    /// Mode-`mode` unfolding (zero-based mode index).
    ///
    /// Rows are indexed by the mode itself; columns run over the remaining
    /// modes in cyclic order `mode+1, …, N, 1, …, mode−1` with the leftmost
    /// slowest.
    pub fn unfold(&self, mode: usize) -> Result<ComplexMatrix<T>> {
        let n = self.order();
        if mode >= n {
            return Err(Error::ModeOutOfRange { mode, order: n });
        }
        let rows = self.dims[mode];
        let cols = self.len() / rows;
        let mut out = ComplexMatrix::zeros(rows, cols);
        for (off, &v) in self.data.iter().enumerate() {
            let idx = self.multi_index(off);
            let mut col = 0;
            for k in 1..n {
                let m = (mode + k) % n;
                col = col * self.dims[m] + idx[m];
            }
            out[(idx[mode], col)] = v;
        }
        Ok(out)
    }

    /// Inverse of [`unfold`](Self::unfold); reconstructs a tensor with `dims`
    /// from its mode-`mode` unfolding.
    pub fn refold(m: &ComplexMatrix<T>, dims: &[usize], mode: usize) -> Result<Self> {
        let n = dims.len();
        if mode >= n {
            return Err(Error::ModeOutOfRange { mode, order: n });
        }
        let total: usize = dims.iter().product();
        if m.rows() != dims[mode] || m.rows() * m.cols() != total {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} unfolding does not match dims {:?} at mode {}",
                m.rows(),
                m.cols(),
                dims,
                mode
            )));
        }
        let mut t = Self::zeros(dims.to_vec());
        for off in 0..total {
            let idx = t.multi_index(off);
            let mut col = 0;
            for k in 1..n {
                let mm = (mode + k) % n;
                col = col * dims[mm] + idx[mm];
            }
            t.data[off] = m[(idx[mode], col)];
        }
        Ok(t)
    }

    /// Mode product: contracts the `mode`-th index with the matrix `m`,
    /// producing `out[…, i, …] = Σ_j m[i, j]·self[…, j, …]`.
    pub fn mode_product(&self, m: &ComplexMatrix<T>, mode: usize) -> Result<Self> {
        let n = self.order();
        if mode >= n {
            return Err(Error::ModeOutOfRange { mode, order: n });
        }
        if m.cols() != self.dims[mode] {
            return Err(Error::ShapeMismatch(format!(
                "matrix has {} columns but mode {} has dimension {}",
                m.cols(),
                mode,
                self.dims[mode]
            )));
        }
        let mut new_dims = self.dims.clone();
        new_dims[mode] = m.rows();
        let mut out = Self::zeros(new_dims);
        // stride of the mode index in the row-major layout
        let stride: usize = self.dims[mode + 1..].iter().product();
        let outer: usize = self.dims[..mode].iter().product();
        let d_in = self.dims[mode];
        let d_out = m.rows();
        for a in 0..outer {
            for c in 0..stride {
                for i in 0..d_out {
                    let mut acc = Complex::zero();
                    for j in 0..d_in {
                        let src = (a * d_in + j) * stride + c;
                        acc += m[(i, j)] * self.data[src];
                    }
                    let dst = (a * d_out + i) * stride + c;
                    out.data[dst] = acc;
                }
            }
        }
        Ok(out)
    }

    /// Reinterprets a bipartite tensor as its `d1×d2` matrix of amplitudes.
    pub fn as_matrix(&self) -> Result<ComplexMatrix<T>> {
        if self.order() != 2 {
            return Err(Error::NotBipartite(self.order()));
        }
        ComplexMatrix::new(self.dims[0], self.dims[1], self.data.clone())
    }

    /// Subtensor obtained by fixing the `mode`-th index to `value`.
    pub fn fix_index(&self, mode: usize, value: usize) -> Result<Self> {
        let n = self.order();
        if mode >= n {
            return Err(Error::ModeOutOfRange { mode, order: n });
        }
        let mut dims = self.dims.clone();
        dims.remove(mode);
        let dims = if dims.is_empty() { vec![1] } else { dims };
        let mut out = Self::zeros(dims);
        let mut k = 0;
        for (off, &v) in self.data.iter().enumerate() {
            if self.multi_index(off)[mode] == value {
                out.data[k] = v;
                k += 1;
            }
        }
        Ok(out)
    }
}

impl<T: Real> std::fmt::Debug for ComplexTensor<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ComplexTensor dims={:?} data=[", self.dims)?;
        for z in &self.data {
            write!(f, "{:+.4}{:+.4}i ", z.re, z.im)?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::complex;

    fn ghz() -> ComplexTensor<f64> {
        let s = 0.5f64.sqrt();
        let mut t = ComplexTensor::zeros(vec![2, 2, 2]);
        t.set(&[0, 0, 0], complex(s, 0.0));
        t.set(&[1, 1, 1], complex(s, 0.0));
        t
    }

    #[test]
    fn bipartite_unfold_is_coefficient_matrix() {
        // mode 0 of a bipartite tensor reproduces the amplitude matrix itself
        let t = ComplexTensor::new(
            vec![2, 2],
            vec![complex(1.0, 0.0), complex(2.0, 0.0), complex(3.0, 0.0), complex(4.0, 0.0)],
        )
        .unwrap();
        let a = t.unfold(0).unwrap();
        assert_eq!(a, t.as_matrix().unwrap());
        // mode 1 is the transpose
        let at = t.unfold(1).unwrap();
        assert_eq!(at, t.as_matrix().unwrap().transpose());
    }

    #[test]
    fn ghz_mode0_unfolding_matches_enumeration() {
        let a = ghz().unfold(0).unwrap();
        let s = 0.5f64.sqrt();
        assert_eq!((a.rows(), a.cols()), (2, 4));
        assert!((a[(0, 0)] - complex::<f64>(s, 0.0)).norm() < 1e-15);
        assert!((a[(1, 3)] - complex::<f64>(s, 0.0)).norm() < 1e-15);
        let mut nonzero = 0;
        for i in 0..2 {
            for j in 0..4 {
                if a[(i, j)].norm() > 0.0 {
                    nonzero += 1;
                }
            }
        }
        assert_eq!(nonzero, 2);
    }

    #[test]
    fn refold_inverts_unfold_all_modes() {
        let t = ComplexTensor::new(
            vec![2, 3, 2],
            (0..12).map(|k| complex(k as f64, -(k as f64) * 0.5)).collect(),
        )
        .unwrap();
        for mode in 0..3 {
            let m = t.unfold(mode).unwrap();
            let back = ComplexTensor::refold(&m, t.dims(), mode).unwrap();
            assert_eq!(back, t);
        }
    }

    #[test]
    fn mode_product_matches_unfold_route() {
        let t = ComplexTensor::new(
            vec![2, 2, 2],
            (0..8).map(|k| complex(0.3 * k as f64, 0.1 * k as f64)).collect(),
        )
        .unwrap();
        let m = ComplexMatrix::from_fn(2, 2, |i, j| complex(i as f64 + 1.0, j as f64 - 0.5));
        for mode in 0..3 {
            let direct = t.mode_product(&m, mode).unwrap();
            let via = ComplexTensor::refold(
                &m.matmul(&t.unfold(mode).unwrap()),
                t.dims(),
                mode,
            )
            .unwrap();
            assert!(direct.sub(&via).norm() < 1e-13);
        }
    }

    #[test]
    fn fix_index_slices() {
        let t = ghz();
        let s0 = t.fix_index(0, 0).unwrap();
        assert_eq!(s0.dims(), &[2, 2]);
        assert!((s0.get(&[0, 0]).re - 0.5f64.sqrt()).abs() < 1e-15);
        assert!(s0.get(&[1, 1]).norm() < 1e-15);
    }

    #[test]
    fn mode_out_of_range_rejected() {
        let t = ghz();
        assert!(matches!(t.unfold(3), Err(Error::ModeOutOfRange { .. })));
    }
}

//! Dense complex matrices over the truncated Fock basis, Hermitian wrappers,
//! and the eigendecomposition used throughout the crate.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Relative hermiticity tolerance at construction.
pub const HERMITICITY_TOL: f64 = 1e-10;

/// Dense square complex matrix over the basis |0>, ..., |dim-1>.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    inner: DMatrix<Complex64>,
}

impl ComplexMatrix {
    /// Wraps a matrix, enforcing squareness and finiteness.
    pub fn new(inner: DMatrix<Complex64>) -> Result<Self> {
        if inner.nrows() != inner.ncols() {
            return Err(Error::DimensionMismatch {
                left: inner.nrows(),
                right: inner.ncols(),
            });
        }
        if inner.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFiniteEntries);
        }
        Ok(Self { inner })
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            inner: DMatrix::zeros(dim, dim),
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self {
            inner: DMatrix::identity(dim, dim),
        }
    }

    pub fn from_diagonal(diag: &[f64]) -> Self {
        let dim = diag.len();
        let mut m = DMatrix::zeros(dim, dim);
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = Complex64::new(d, 0.0);
        }
        Self { inner: m }
    }

    pub fn dim(&self) -> usize {
        self.inner.nrows()
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.inner[(row, col)]
    }

    pub fn inner(&self) -> &DMatrix<Complex64> {
        &self.inner
    }

    pub fn into_inner(self) -> DMatrix<Complex64> {
        self.inner
    }

    pub fn adjoint(&self) -> Self {
        Self {
            inner: self.inner.adjoint(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self {
            inner: &self.inner * &other.inner,
        }
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self {
            inner: self.inner.map(|z| z * c),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            inner: &self.inner + &other.inner,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self {
            inner: &self.inner - &other.inner,
        }
    }

    pub fn trace(&self) -> Complex64 {
        self.inner.trace()
    }

    pub fn max_abs(&self) -> f64 {
        self.inner.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Largest entry magnitude of A - A^dagger.
    pub fn hermiticity_defect(&self) -> f64 {
        let n = self.dim();
        let mut defect = 0.0f64;
        for i in 0..n {
            for j in i..n {
                let d = (self.inner[(i, j)] - self.inner[(j, i)].conj()).norm();
                defect = defect.max(d);
            }
        }
        defect
    }

    /// Leading `size` x `size` sub-block.
    pub fn top_left(&self, size: usize) -> Self {
        Self {
            inner: self.inner.view((0, 0), (size, size)).into_owned(),
        }
    }

    /// Max entry magnitude of the difference restricted to the leading block.
    pub fn block_distance(&self, other: &Self, size: usize) -> f64 {
        let mut d = 0.0f64;
        for i in 0..size {
            for j in 0..size {
                d = d.max((self.inner[(i, j)] - other.inner[(i, j)]).norm());
            }
        }
        d
    }
}

/// A matrix certified Hermitian at construction time.
#[derive(Debug, Clone)]
pub struct HermitianOperator {
    matrix: ComplexMatrix,
    hermiticity_defect: f64,
}

impl HermitianOperator {
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        let defect = matrix.hermiticity_defect();
        let tol = HERMITICITY_TOL * matrix.max_abs().max(1.0);
        if defect > tol {
            return Err(Error::NotHermitian { defect, tol });
        }
        Ok(Self {
            matrix,
            hermiticity_defect: defect,
        })
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn hermiticity_defect(&self) -> f64 {
        self.hermiticity_defect
    }
}

/// Spectrum of a Hermitian operator, eigenvalues ascending, eigenvector
/// columns orthonormal.
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: ComplexMatrix,
}

impl EigenDecomposition {
    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn eigenvector(&self, r: usize) -> DVector<Complex64> {
        self.eigenvectors.inner().column(r).into_owned()
    }
}

const EIG_MAX_ITER: usize = 4000;

/// Hermitian eigendecomposition (tridiagonalization plus implicit QL),
/// eigenvalues sorted ascending.
pub fn hermitian_eigs(a: &HermitianOperator) -> Result<EigenDecomposition> {
    let dim = a.dim();
    let se = nalgebra::SymmetricEigen::try_new(a.matrix().inner().clone(), 1e-14, EIG_MAX_ITER)
        .ok_or(Error::EigNonConvergence {
            iterations: EIG_MAX_ITER,
        })?;
    let mut order: Vec<usize> = (0..dim).collect();
    order.sort_by(|&i, &j| se.eigenvalues[i].partial_cmp(&se.eigenvalues[j]).unwrap());
    let eigenvalues: Vec<f64> = order.iter().map(|&i| se.eigenvalues[i]).collect();
    let mut vecs = DMatrix::zeros(dim, dim);
    for (col, &i) in order.iter().enumerate() {
        vecs.set_column(col, &se.eigenvectors.column(i));
    }
    Ok(EigenDecomposition {
        eigenvalues,
        eigenvectors: ComplexMatrix::new(vecs)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::{annihilation, quadratures};
    use approx::assert_relative_eq;

    #[test]
    fn rejects_non_square() {
        let m = DMatrix::<Complex64>::zeros(2, 3);
        assert!(ComplexMatrix::new(m).is_err());
    }

    #[test]
    fn rejects_non_finite() {
        let mut m = DMatrix::<Complex64>::zeros(2, 2);
        m[(0, 1)] = Complex64::new(f64::NAN, 0.0);
        assert!(ComplexMatrix::new(m).is_err());
    }

    #[test]
    fn rejects_non_hermitian() {
        let a = annihilation(4).unwrap();
        assert!(HermitianOperator::new(a).is_err());
    }

    #[test]
    fn number_operator_eigs_are_trivial() {
        let a = annihilation(8).unwrap();
        let n = a.adjoint().mul(&a);
        let h = HermitianOperator::new(n).unwrap();
        let e = hermitian_eigs(&h).unwrap();
        for (k, ev) in e.eigenvalues.iter().enumerate() {
            assert_relative_eq!(*ev, k as f64, epsilon = 1e-12);
        }
    }

    #[test]
    fn harmonic_spectrum_is_half_integer() {
        let dim = 64;
        let (q, p) = quadratures(dim).unwrap();
        let h2 = q.matrix().mul(q.matrix()).add(&p.matrix().mul(p.matrix()));
        let h = HermitianOperator::new(h2.scale(Complex64::new(0.5, 0.0))).unwrap();
        let e = hermitian_eigs(&h).unwrap();
        for k in 0..10 {
            assert_relative_eq!(e.eigenvalues[k], k as f64 + 0.5, epsilon = 1e-8);
        }
    }

    #[test]
    fn kerr_minimum_sits_at_n_three() {
        // (N-1)(N-5) is diagonal; minimum -4 with eigenvector e_3.
        let dim = 32;
        let diag: Vec<f64> = (0..dim).map(|n| (n as f64 - 1.0) * (n as f64 - 5.0)).collect();
        let h = HermitianOperator::new(ComplexMatrix::from_diagonal(&diag)).unwrap();
        let e = hermitian_eigs(&h).unwrap();
        assert_relative_eq!(e.eigenvalues[0], -4.0, epsilon = 1e-12);
        let v = e.eigenvector(0);
        assert!(v[3].norm() > 0.999);
    }

    #[test]
    fn eigen_residuals_and_orthonormality() {
        // Dense Hermitian test case: the quartic oscillator.
        let dim = 64;
        let (q, p) = quadratures(dim).unwrap();
        let q2 = q.matrix().mul(q.matrix());
        let h2 = q2
            .add(&p.matrix().mul(p.matrix()))
            .scale(Complex64::new(0.5, 0.0))
            .add(&q2.mul(&q2).scale(Complex64::new(0.5, 0.0)));
        let h = HermitianOperator::new(h2).unwrap();
        let e = hermitian_eigs(&h).unwrap();
        let norm = h.matrix().max_abs();
        for r in (0..dim).step_by(7) {
            let v = e.eigenvector(r);
            let resid = (h.matrix().inner() * &v - v.scale(e.eigenvalues[r])).norm();
            assert!(resid <= 1e-9 * norm, "residual {resid} too large");
        }
        let vtv = e.eigenvectors.adjoint().mul(&e.eigenvectors);
        let dist = vtv.block_distance(&ComplexMatrix::identity(dim), dim);
        assert!(dist < 1e-10, "orthonormality defect {dist}");
        // Ascending order.
        for w in e.eigenvalues.windows(2) {
            assert!(w[0] <= w[1]);
        }
    }
}

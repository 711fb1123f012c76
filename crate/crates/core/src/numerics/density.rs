use crate::error::{Error, Result};
use crate::numerics::{hermitian_eig, ComplexMatrix};
use crate::scalar::{cr, Complex, Real};

/// Hermitian, positive semidefinite, unit-trace matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix<T: Real>(ComplexMatrix<T>);

impl<T: Real> DensityMatrix<T> {
    /// Validates `m` as a quantum state.
    ///
    /// Hermiticity and trace are checked to `1e-10`. Eigenvalues in
    /// `[-1e-10, 0)` are clamped to zero; anything more negative is rejected.
    pub fn new(m: ComplexMatrix<T>) -> Result<Self> {
        m.require_square()?;
        let dev = m.hermitian_deviation();
        if dev > T::tol(1e-10) {
            return Err(Error::NotHermitian(dev.as_f64()));
        }
        let tr = m.trace();
        if (tr.re - T::one()).abs() > T::tol(1e-10) || tr.im.abs() > T::tol(1e-10) {
            return Err(Error::BadTrace(tr.re.as_f64()));
        }
        let m = m.hermitian_part();
        let spec = hermitian_eig(&m)?;
        let min = spec.eigenvalues.first().copied().unwrap_or_else(T::zero);
        if min < -T::tol(1e-10) {
            return Err(Error::NotPsd(min.as_f64()));
        }
        if min < T::zero() {
            return Ok(Self(spec.map(|x| x.max(T::zero()))));
        }
        Ok(Self(m))
    }

    /// Wraps a matrix the caller knows to be a state (e.g. a channel output).
    pub fn from_matrix_unchecked(m: ComplexMatrix<T>) -> Self {
        Self(m)
    }

    pub fn maximally_mixed(n: usize) -> Self {
        Self(ComplexMatrix::identity(n).scale_real(T::one() / T::lit(n as f64)))
    }

    /// Projector onto the normalized vector `psi`.
    pub fn pure(psi: &[Complex<T>]) -> Result<Self> {
        let norm = psi.iter().map(|z| z.norm_sqr()).sum::<T>();
        if (norm - T::one()).abs() > T::tol(1e-10) {
            return Err(Error::BadTrace(norm.as_f64()));
        }
        Ok(Self(ComplexMatrix::outer(psi, psi)))
    }

    /// `|k⟩⟨k|` in dimension `n`.
    pub fn basis(n: usize, k: usize) -> Self {
        let mut m = ComplexMatrix::zeros(n, n);
        m[(k, k)] = cr(T::one());
        Self(m)
    }

    pub fn dim(&self) -> usize {
        self.0.rows()
    }

    pub fn matrix(&self) -> &ComplexMatrix<T> {
        &self.0
    }

    pub fn into_matrix(self) -> ComplexMatrix<T> {
        self.0
    }

    pub fn tensor(&self, other: &Self) -> Self {
        Self(self.0.kron(&other.0))
    }

    /// Convex combination `p·self + (1-p)·other`.
    pub fn mix(&self, other: &Self, p: T) -> Self {
        Self(&self.0.scale_real(p) + &other.0.scale_real(T::one() - p))
    }

    /// `U ρ U†`.
    pub fn conjugate(&self, u: &ComplexMatrix<T>) -> Self {
        Self(u.sandwich(&self.0).hermitian_part())
    }
}

impl<T: Real> AsRef<ComplexMatrix<T>> for DensityMatrix<T> {
    fn as_ref(&self) -> &ComplexMatrix<T> {
        &self.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation_errors() {
        let not_unit = ComplexMatrix::<f64>::identity(2);
        assert!(matches!(
            DensityMatrix::new(not_unit),
            Err(Error::BadTrace(_))
        ));

        let negative = ComplexMatrix::<f64>::from_real_diagonal(&[1.5, -0.5]);
        assert!(matches!(
            DensityMatrix::new(negative),
            Err(Error::NotPsd(_))
        ));

        let skew = ComplexMatrix::<f64>::from_rows(&[
            &[(0.5, 0.0), (0.1, 0.0)],
            &[(0.0, 0.0), (0.5, 0.0)],
        ]);
        assert!(matches!(
            DensityMatrix::new(skew),
            Err(Error::NotHermitian(_))
        ));
    }

    #[test]
    fn tiny_negative_eigenvalues_are_clamped() {
        let m = ComplexMatrix::<f64>::from_real_diagonal(&[1.0 + 5e-11, -5e-11]);
        let rho = DensityMatrix::new(m).unwrap();
        assert!(rho.matrix()[(1, 1)].re >= 0.0);
    }
}

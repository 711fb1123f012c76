//! Cyclic Jacobi eigensolver for dense complex Hermitian matrices.
//!
//! Each rotation first removes the phase of the pivot `a_pq` with a diagonal
//! unitary, then applies the classical real Jacobi rotation to the resulting
//! real symmetric 2x2 block. Matrices in this crate are at most ~100x100, so
//! the O(n^3)-per-sweep cost is irrelevant next to the accuracy of the method.

use crate::error::{Error, Result};
use crate::numerics::ComplexMatrix;
use crate::scalar::{cr, Complex, Real};

/// Maximum number of full sweeps before giving up.
pub const MAX_SWEEPS: usize = 100;

/// Eigen-decomposition `M = V Λ V†` of a Hermitian matrix.
#[derive(Debug, Clone)]
pub struct HermitianSpectrum<T: Real> {
    /// Eigenvalues in ascending order.
    pub eigenvalues: Vec<T>,
    /// Unitary whose columns are the matching eigenvectors.
    pub eigenvectors: ComplexMatrix<T>,
}

impl<T: Real> HermitianSpectrum<T> {
    /// Rebuilds `V Λ V†`.
    pub fn reconstruct(&self) -> ComplexMatrix<T> {
        let lambda = ComplexMatrix::from_real_diagonal(&self.eigenvalues);
        self.eigenvectors
            .matmul(&lambda)
            .matmul(&self.eigenvectors.adjoint())
    }

    /// Applies `f` to the spectrum: `V f(Λ) V†`.
    pub fn map(&self, f: impl Fn(T) -> T) -> ComplexMatrix<T> {
        let mapped: Vec<T> = self.eigenvalues.iter().map(|&x| f(x)).collect();
        let lambda = ComplexMatrix::from_real_diagonal(&mapped);
        self.eigenvectors
            .matmul(&lambda)
            .matmul(&self.eigenvectors.adjoint())
    }
}

fn off_diagonal_norm<T: Real>(a: &ComplexMatrix<T>) -> T {
    let n = a.rows();
    let mut s = T::zero();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[(i, j)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// Full spectrum of a Hermitian matrix.
///
/// Convergence is declared once the off-diagonal Frobenius norm drops below
/// `1e-12 · max(1, ‖M‖_F)`.
pub fn hermitian_eig<T: Real>(m: &ComplexMatrix<T>) -> Result<HermitianSpectrum<T>> {
    let n = m.require_square()?;
    let dev = m.hermitian_deviation();
    if dev > T::tol(1e-10) {
        return Err(Error::NotHermitian(dev.as_f64()));
    }

    let mut a = m.hermitian_part();
    let mut v = ComplexMatrix::identity(n);
    let threshold = T::tol(1e-12) * m.frobenius_norm().max(T::one());
    // Entries below this are treated as already annihilated.
    let negligible = T::epsilon() * T::epsilon() * m.frobenius_norm().max(T::min_positive_value());

    let mut sweeps = 0;
    loop {
        let off = off_diagonal_norm(&a);
        if off <= threshold {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence {
                sweeps,
                residual: off.as_f64(),
            });
        }
        sweeps += 1;

        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[(p, q)];
                let r = apq.norm();
                if r <= negligible {
                    continue;
                }
                let phase = apq / cr(r);
                let app = a[(p, p)].re;
                let aqq = a[(q, q)].re;
                let tau = (aqq - app) / (T::lit(2.0) * r);
                let t = if tau >= T::zero() {
                    T::one() / (tau + (T::one() + tau * tau).sqrt())
                } else {
                    -T::one() / (-tau + (T::one() + tau * tau).sqrt())
                };
                let cs = T::one() / (T::one() + t * t).sqrt();
                let sn = t * cs;

                // J = diag(1, e^{-iφ}) · [[c, s], [-s, c]]
                let jpp = cr(cs);
                let jpq = cr(sn);
                let jqp = phase.conj() * cr(-sn);
                let jqq = phase.conj() * cr(cs);

                rotate(&mut a, p, q, jpp, jpq, jqp, jqq);
                rotate_columns(&mut v, p, q, jpp, jpq, jqp, jqq);

                a[(p, q)] = cr(T::zero());
                a[(q, p)] = cr(T::zero());
                a[(p, p)] = cr(app - t * r);
                a[(q, q)] = cr(aqq + t * r);
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    let diag = a.real_diagonal();
    order.sort_by(|&i, &j| {
        diag[i]
            .partial_cmp(&diag[j])
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    let eigenvalues = order.iter().map(|&i| diag[i]).collect();
    let eigenvectors = ComplexMatrix::from_fn(n, n, |i, j| v[(i, order[j])]);

    Ok(HermitianSpectrum {
        eigenvalues,
        eigenvectors,
    })
}

/// Eigenvalues only, ascending.
pub fn hermitian_eigenvalues<T: Real>(m: &ComplexMatrix<T>) -> Result<Vec<T>> {
    if m.rows() == 1 && m.cols() == 1 {
        return Ok(vec![m[(0, 0)].re]);
    }
    if m.rows() == 2 && m.cols() == 2 {
        return eigenvalues_2x2(m);
    }
    hermitian_eig(m).map(|s| s.eigenvalues)
}

fn eigenvalues_2x2<T: Real>(m: &ComplexMatrix<T>) -> Result<Vec<T>> {
    let dev = m.hermitian_deviation();
    if dev > T::tol(1e-10) {
        return Err(Error::NotHermitian(dev.as_f64()));
    }
    let a = m[(0, 0)].re;
    let d = m[(1, 1)].re;
    let b = (m[(0, 1)] + m[(1, 0)].conj()) * cr(T::lit(0.5));
    let mean = (a + d) * T::lit(0.5);
    let half_gap = ((a - d) * T::lit(0.5)).hypot(b.norm());
    Ok(vec![mean - half_gap, mean + half_gap])
}

#[inline]
fn rotate<T: Real>(
    a: &mut ComplexMatrix<T>,
    p: usize,
    q: usize,
    jpp: Complex<T>,
    jpq: Complex<T>,
    jqp: Complex<T>,
    jqq: Complex<T>,
) {
    // A ← A J
    rotate_columns(a, p, q, jpp, jpq, jqp, jqq);
    // A ← J† A
    let n = a.cols();
    for k in 0..n {
        let x = a[(p, k)];
        let y = a[(q, k)];
        a[(p, k)] = jpp.conj() * x + jqp.conj() * y;
        a[(q, k)] = jpq.conj() * x + jqq.conj() * y;
    }
}

#[inline]
fn rotate_columns<T: Real>(
    a: &mut ComplexMatrix<T>,
    p: usize,
    q: usize,
    jpp: Complex<T>,
    jpq: Complex<T>,
    jqp: Complex<T>,
    jqq: Complex<T>,
) {
    for k in 0..a.rows() {
        let x = a[(k, p)];
        let y = a[(k, q)];
        a[(k, p)] = x * jpp + y * jqp;
        a[(k, q)] = x * jpq + y * jqq;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::random::random_hermitian;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn identity_spectrum() {
        for n in 1..6 {
            let s = hermitian_eig(&ComplexMatrix::<f64>::identity(n)).unwrap();
            assert!(s.eigenvalues.iter().all(|&x| (x - 1.0).abs() < 1e-15));
        }
    }

    #[test]
    fn diagonal_sorted_ascending() {
        let m = ComplexMatrix::<f64>::from_real_diagonal(&[3.0, -1.0]);
        let s = hermitian_eig(&m).unwrap();
        assert_eq!(s.eigenvalues, vec![-1.0, 3.0]);
    }

    #[test]
    fn random_reconstruction_and_unitarity() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let m: ComplexMatrix<f64> = random_hermitian(&mut rng, 8);
        let s = hermitian_eig(&m).unwrap();
        assert!(s.reconstruct().distance(&m) < 1e-10);
        let vv = s.eigenvectors.adjoint().matmul(&s.eigenvectors);
        assert!(vv.distance(&ComplexMatrix::identity(8)) < 1e-10);
        let tr: f64 = s.eigenvalues.iter().sum();
        assert!((tr - m.trace().re).abs() < 1e-10);
        assert!(s.eigenvalues.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn closed_form_2x2_matches_jacobi() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let m: ComplexMatrix<f64> = random_hermitian(&mut rng, 2);
            let fast = hermitian_eigenvalues(&m).unwrap();
            let slow = hermitian_eig(&m).unwrap().eigenvalues;
            for (a, b) in fast.iter().zip(&slow) {
                assert!((a - b).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn single_precision_converges() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let m: ComplexMatrix<f32> = random_hermitian(&mut rng, 6);
        let s = hermitian_eig(&m).unwrap();
        assert!(s.reconstruct().distance(&m) < 1e-4);
    }

    #[test]
    fn rejects_non_hermitian() {
        let m = ComplexMatrix::<f64>::from_rows(&[
            &[(0.0, 0.0), (1.0, 0.0)],
            &[(0.0, 0.0), (0.0, 0.0)],
        ]);
        assert!(matches!(hermitian_eig(&m), Err(Error::NotHermitian(_))));
    }
}

use crate::error::{Error, Result};
use crate::numerics::{hermitian_eigenvalues, partial_trace, DensityMatrix};
use crate::scalar::Real;

/// Eigenvalues at or below this contribute nothing to an entropy.
pub const EIGENVALUE_CLIP: f64 = 1e-12;

#[inline]
fn xlog2x<T: Real>(x: T) -> T {
    if x <= T::tol(EIGENVALUE_CLIP) {
        T::zero()
    } else {
        x * x.log2()
    }
}

/// Binary entropy in bits, `H(x) = -x log2 x - (1-x) log2 (1-x)`.
pub fn binary_entropy<T: Real>(x: T) -> Result<T> {
    if !(x >= T::zero() && x <= T::one()) {
        return Err(Error::domain("x", x.as_f64(), "[0, 1]"));
    }
    Ok(-xlog2x(x) - xlog2x(T::one() - x))
}

/// Binary entropy for arguments that are probabilities by construction,
/// clamping rounding excursions just outside `[0, 1]`.
pub(crate) fn h2<T: Real>(x: T) -> T {
    let x = x.max(T::zero()).min(T::one());
    -xlog2x(x) - xlog2x(T::one() - x)
}

/// Shannon entropy in bits of a probability vector (or spectrum).
pub fn shannon_entropy<T: Real>(probs: &[T]) -> T {
    -probs.iter().map(|&p| xlog2x(p)).sum::<T>()
}

/// Von Neumann entropy in bits.
pub fn von_neumann_entropy<T: Real>(rho: &DensityMatrix<T>) -> Result<T> {
    let spectrum = hermitian_eigenvalues(rho.matrix())?;
    let trace: T = spectrum.iter().copied().sum();
    if (trace - T::one()).abs() > T::tol(1e-10) {
        return Err(Error::BadTrace(trace.as_f64()));
    }
    if let Some(&min) = spectrum.first() {
        if min < -T::tol(1e-10) {
            return Err(Error::NotPsd(min.as_f64()));
        }
    }
    Ok(shannon_entropy(&spectrum))
}

/// Conditional entropy `H(A|B) = S(AB) - S(B)`, where `B` is the set of
/// subsystems listed in `conditioning`.
pub fn conditional_entropy<T: Real>(
    rho: &DensityMatrix<T>,
    dims: &[usize],
    conditioning: &[usize],
) -> Result<T> {
    let marginal = partial_trace(rho, dims, conditioning)?;
    Ok(von_neumann_entropy(rho)? - von_neumann_entropy(&marginal)?)
}

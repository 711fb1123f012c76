use crate::error::{Error, Result};
use crate::numerics::{ComplexMatrix, DensityMatrix};
use crate::scalar::{cr, Real};

/// Traces out every subsystem not listed in `keep`.
///
/// `dims` lists the factor dimensions in tensor order (first factor is the
/// most significant index). The kept subsystems appear in the result in
/// their original order regardless of the order of `keep`.
pub fn partial_trace<T: Real>(
    rho: &DensityMatrix<T>,
    dims: &[usize],
    keep: &[usize],
) -> Result<DensityMatrix<T>> {
    partial_trace_matrix(rho.matrix(), dims, keep).map(DensityMatrix::from_matrix_unchecked)
}

/// [`partial_trace`] on an arbitrary square operator.
pub fn partial_trace_matrix<T: Real>(
    m: &ComplexMatrix<T>,
    dims: &[usize],
    keep: &[usize],
) -> Result<ComplexMatrix<T>> {
    let n = m.require_square()?;
    let total: usize = dims.iter().product();
    if total != n || dims.is_empty() {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: total,
        });
    }
    if let Some(&bad) = keep.iter().find(|&&k| k >= dims.len()) {
        return Err(Error::Invalid(format!(
            "subsystem {bad} out of range for {} factors",
            dims.len()
        )));
    }

    let kept: Vec<usize> = (0..dims.len()).filter(|i| keep.contains(i)).collect();
    let traced: Vec<usize> = (0..dims.len()).filter(|i| !keep.contains(i)).collect();

    let mut strides = vec![1usize; dims.len()];
    for i in (0..dims.len().saturating_sub(1)).rev() {
        strides[i] = strides[i + 1] * dims[i + 1];
    }

    // Offset into the full index for every multi-index over a set of factors.
    let offsets = |factors: &[usize]| -> Vec<usize> {
        let mut out = vec![0usize];
        for &f in factors {
            let (d, stride) = (dims[f], strides[f]);
            out = out
                .iter()
                .flat_map(|&base| (0..d).map(move |x| base + x * stride))
                .collect();
        }
        out
    };
    let kept_off = offsets(&kept);
    let traced_off = offsets(&traced);

    let d = kept_off.len();
    let mut out = ComplexMatrix::zeros(d, d);
    for (a, &ra) in kept_off.iter().enumerate() {
        for (b, &rb) in kept_off.iter().enumerate() {
            let mut s = cr(T::zero());
            for &t in &traced_off {
                s += m[(ra + t, rb + t)];
            }
            out[(a, b)] = s;
        }
    }
    Ok(out)
}

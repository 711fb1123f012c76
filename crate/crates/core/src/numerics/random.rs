//! Random matrices and states for property checks and the verification suite.

use rand::Rng;
use rand_distr::StandardNormal;

use crate::numerics::{ComplexMatrix, DensityMatrix};
use crate::scalar::{Complex, Real};

fn gaussian<T: Real, R: Rng + ?Sized>(rng: &mut R) -> Complex<T> {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex::new(T::lit(re), T::lit(im))
}

/// Matrix with i.i.d. complex Gaussian entries.
pub fn ginibre<T: Real, R: Rng + ?Sized>(
    rng: &mut R,
    rows: usize,
    cols: usize,
) -> ComplexMatrix<T> {
    ComplexMatrix::from_fn(rows, cols, |_, _| gaussian(rng))
}

pub fn random_hermitian<T: Real, R: Rng + ?Sized>(rng: &mut R, n: usize) -> ComplexMatrix<T> {
    ginibre(rng, n, n).hermitian_part()
}

/// Haar-distributed unitary via Gram-Schmidt on a Ginibre matrix.
pub fn random_unitary<T: Real, R: Rng + ?Sized>(rng: &mut R, n: usize) -> ComplexMatrix<T> {
    let g = ginibre::<T, R>(rng, n, n);
    let mut cols: Vec<Vec<Complex<T>>> = Vec::with_capacity(n);
    for j in 0..n {
        let mut v = g.column(j);
        for u in &cols {
            let overlap: Complex<T> = u.iter().zip(&v).map(|(a, b)| a.conj() * b).sum();
            for (vi, ui) in v.iter_mut().zip(u) {
                *vi -= overlap * ui;
            }
        }
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<T>().sqrt();
        for vi in v.iter_mut() {
            *vi /= norm;
        }
        cols.push(v);
    }
    ComplexMatrix::from_fn(n, n, |i, j| cols[j][i])
}

pub fn random_pure_state<T: Real, R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<Complex<T>> {
    let mut v: Vec<Complex<T>> = (0..n).map(|_| gaussian(rng)).collect();
    let norm = v.iter().map(|z| z.norm_sqr()).sum::<T>().sqrt();
    for z in v.iter_mut() {
        *z /= norm;
    }
    v
}

/// Full-rank random density matrix `G G† / Tr(G G†)`.
pub fn random_density<T: Real, R: Rng + ?Sized>(rng: &mut R, n: usize) -> DensityMatrix<T> {
    let g = ginibre::<T, R>(rng, n, n);
    let m = g.matmul(&g.adjoint());
    let tr = m.trace().re;
    DensityMatrix::from_matrix_unchecked(m.scale_real(T::one() / tr).hermitian_part())
}

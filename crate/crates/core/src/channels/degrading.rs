//! Numerical search for a degrading map `D` with `D ∘ N = N̂`.
//!
//! The unknown is the Choi matrix `J_D` of a map from the output `B` to the
//! environment `E`. The linear conditions (`D ∘ N = N̂` on a basis of input
//! operators, and `Tr_E J_D = I_B`) define an affine set; complete positivity
//! is the PSD cone. Alternating projections between the two either land in
//! the intersection or stall at a positive residual. A stall is evidence, not
//! proof, that no degrading map exists.

use crate::channels::{ChoiMatrix, KrausChannel};
use crate::error::Result;
use crate::numerics::{hermitian_eig, ComplexMatrix};
use crate::scalar::{cr, Complex, Real};

/// Result of [`find_degrading_map`].
#[derive(Debug, Clone)]
pub enum DegradingSearch<T: Real> {
    Found {
        map: KrausChannel<T>,
        residual: T,
        iterations: usize,
    },
    /// Residual stopped improving or the iteration cap was hit.
    Infeasible { residual: T, iterations: usize },
}

impl<T: Real> DegradingSearch<T> {
    pub fn residual(&self) -> T {
        match self {
            Self::Found { residual, .. } | Self::Infeasible { residual, .. } => *residual,
        }
    }

    pub fn iterations(&self) -> usize {
        match self {
            Self::Found { iterations, .. } | Self::Infeasible { iterations, .. } => *iterations,
        }
    }

    pub fn map(&self) -> Option<&KrausChannel<T>> {
        match self {
            Self::Found { map, .. } => Some(map),
            Self::Infeasible { .. } => None,
        }
    }
}

/// Minimum per-iteration residual improvement before declaring a stall.
pub const STALL_DECREASE: f64 = 1e-12;

/// Real affine constraint system `A x = b` over the real and imaginary
/// parts of `J_D`, with its least-squares projector precomputed.
struct AffineSet<T: Real> {
    a: Vec<Vec<T>>,
    b: Vec<T>,
    /// `A⁺ = Aᵀ (A Aᵀ)⁺`, stored as `unknowns × constraints`.
    pinv: Vec<Vec<T>>,
}

impl<T: Real> AffineSet<T> {
    fn residual_vector(&self, x: &[T]) -> Vec<T> {
        self.a
            .iter()
            .zip(&self.b)
            .map(|(row, &bi)| row.iter().zip(x).map(|(&r, &xi)| r * xi).sum::<T>() - bi)
            .collect()
    }

    fn residual(&self, x: &[T]) -> T {
        self.residual_vector(x)
            .iter()
            .map(|&r| r * r)
            .sum::<T>()
            .sqrt()
    }

    fn project(&self, x: &[T]) -> Vec<T> {
        let r = self.residual_vector(x);
        self.pinv
            .iter()
            .zip(x)
            .map(|(row, &xi)| xi - row.iter().zip(&r).map(|(&p, &ri)| p * ri).sum::<T>())
            .collect()
    }
}

fn build_constraints<T: Real>(ch: &KrausChannel<T>) -> Result<AffineSet<T>> {
    let comp = ch.complementary();
    let (din, db, de) = (ch.in_dim(), ch.out_dim(), comp.out_dim());
    let n = db * de;
    let unknowns = 2 * n * n;
    let idx = |r: usize, c: usize| 2 * (r * n + c);

    let mut a: Vec<Vec<T>> = Vec::new();
    let mut b: Vec<T> = Vec::new();

    for i in 0..din {
        for j in 0..din {
            let mut eij = ComplexMatrix::zeros(din, din);
            eij[(i, j)] = cr(T::one());
            let m = ch.apply_operator(&eij);
            let target = comp.apply_operator(&eij);
            for ea in 0..de {
                for eb in 0..de {
                    let mut re_row = vec![T::zero(); unknowns];
                    let mut im_row = vec![T::zero(); unknowns];
                    for s in 0..db {
                        for t in 0..db {
                            let coef = m[(s, t)];
                            let k = idx(s * de + ea, t * de + eb);
                            re_row[k] += coef.re;
                            re_row[k + 1] -= coef.im;
                            im_row[k] += coef.im;
                            im_row[k + 1] += coef.re;
                        }
                    }
                    a.push(re_row);
                    b.push(target[(ea, eb)].re);
                    a.push(im_row);
                    b.push(target[(ea, eb)].im);
                }
            }
        }
    }

    // Tr_E J = I_B
    for s in 0..db {
        for t in 0..db {
            let mut re_row = vec![T::zero(); unknowns];
            let mut im_row = vec![T::zero(); unknowns];
            for e in 0..de {
                let k = idx(s * de + e, t * de + e);
                re_row[k] = T::one();
                im_row[k + 1] = T::one();
            }
            a.push(re_row);
            b.push(if s == t { T::one() } else { T::zero() });
            a.push(im_row);
            b.push(T::zero());
        }
    }

    // (A Aᵀ)⁺ through its eigen-decomposition.
    let rows = a.len();
    let gram = ComplexMatrix::from_fn(rows, rows, |i, j| {
        cr(a[i].iter().zip(&a[j]).map(|(&x, &y)| x * y).sum::<T>())
    });
    let spec = hermitian_eig(&gram)?;
    let lmax = spec.eigenvalues.last().copied().unwrap_or_else(T::one);
    let cut = T::tol(1e-10) * lmax.max(T::one());
    let mut gram_pinv = vec![vec![T::zero(); rows]; rows];
    for (col, &l) in spec.eigenvalues.iter().enumerate() {
        if l <= cut {
            continue;
        }
        let inv = T::one() / l;
        for (i, row) in gram_pinv.iter_mut().enumerate() {
            let ui = spec.eigenvectors[(i, col)];
            for (j, g) in row.iter_mut().enumerate() {
                *g += inv * (ui * spec.eigenvectors[(j, col)].conj()).re;
            }
        }
    }
    let pinv = (0..unknowns)
        .map(|u| {
            (0..rows)
                .map(|r| (0..rows).map(|k| a[k][u] * gram_pinv[k][r]).sum::<T>())
                .collect()
        })
        .collect();

    Ok(AffineSet { a, b, pinv })
}

fn to_matrix<T: Real>(x: &[T], n: usize) -> ComplexMatrix<T> {
    ComplexMatrix::from_fn(n, n, |r, c| {
        let k = 2 * (r * n + c);
        Complex::new(x[k], x[k + 1])
    })
}

fn to_vector<T: Real>(m: &ComplexMatrix<T>) -> Vec<T> {
    m.data().iter().flat_map(|z| [z.re, z.im]).collect()
}

fn project_psd<T: Real>(m: &ComplexMatrix<T>) -> Result<ComplexMatrix<T>> {
    let spec = hermitian_eig(&m.hermitian_part())?;
    Ok(spec.map(|l| l.max(T::zero())))
}

/// Searches for `D` with `‖Choi(D ∘ N) - Choi(N̂)‖_F ≤ tol` by alternating
/// projections between the affine constraint set and the PSD cone.
///
/// Stops on success, when the residual improves by less than
/// [`STALL_DECREASE`] in one iteration, or after `max_iter` iterations.
pub fn find_degrading_map<T: Real>(
    ch: &KrausChannel<T>,
    tol: T,
    max_iter: usize,
) -> Result<DegradingSearch<T>> {
    let env_dim = ch.num_kraus();
    let n = ch.out_dim() * env_dim;
    let affine = build_constraints(ch)?;

    let mut x = affine.project(&vec![T::zero(); 2 * n * n]);
    let mut previous = T::infinity();
    let mut residual = T::infinity();
    for iteration in 1..=max_iter.max(1) {
        let j = project_psd(&to_matrix(&x, n))?;
        let v = to_vector(&j);
        residual = affine.residual(&v);
        if residual <= tol {
            let choi = ChoiMatrix {
                matrix: j,
                in_dim: ch.out_dim(),
                out_dim: env_dim,
            };
            return Ok(DegradingSearch::Found {
                map: choi.to_channel()?,
                residual,
                iterations: iteration,
            });
        }
        if previous - residual < T::lit(STALL_DECREASE) {
            return Ok(DegradingSearch::Infeasible {
                residual,
                iterations: iteration,
            });
        }
        previous = residual;
        x = affine.project(&v);
    }
    Ok(DegradingSearch::Infeasible {
        residual,
        iterations: max_iter,
    })
}

use crate::error::{Error, Result};
use crate::numerics::{hermitian_eig, ComplexMatrix, DensityMatrix};
use crate::scalar::{cr, Real};

/// Outcome of a trace-preservation check.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CptpReport {
    /// Frobenius norm of `Σ A†A - I`.
    pub deviation: f64,
    pub ok: bool,
}

/// Checks `Σ A_k† A_k = I` to within `1e-10`.
///
/// Complete positivity is automatic for a Kraus list, so only trace
/// preservation and shape consistency can fail.
pub fn validate_cptp<T: Real>(kraus: &[ComplexMatrix<T>]) -> CptpReport {
    let Some(first) = kraus.first() else {
        return CptpReport {
            deviation: f64::INFINITY,
            ok: false,
        };
    };
    let (rows, cols) = (first.rows(), first.cols());
    if kraus.iter().any(|k| k.rows() != rows || k.cols() != cols) {
        return CptpReport {
            deviation: f64::INFINITY,
            ok: false,
        };
    }
    let mut sum = ComplexMatrix::zeros(cols, cols);
    for k in kraus {
        sum = &sum + &k.adjoint().matmul(k);
    }
    let deviation = sum.distance(&ComplexMatrix::identity(cols)).as_f64();
    CptpReport {
        deviation,
        ok: deviation <= T::tol(1e-10).as_f64(),
    }
}

/// Completely positive trace-preserving map in Kraus form.
#[derive(Debug, Clone, PartialEq)]
pub struct KrausChannel<T: Real> {
    kraus: Vec<ComplexMatrix<T>>,
    in_dim: usize,
    out_dim: usize,
}

impl<T: Real> KrausChannel<T> {
    /// Builds a channel, rejecting empty, ragged or non-trace-preserving lists.
    pub fn new(kraus: Vec<ComplexMatrix<T>>) -> Result<Self> {
        let report = validate_cptp(&kraus);
        if !report.ok {
            if kraus.is_empty() {
                return Err(Error::Invalid(
                    "a channel needs at least one Kraus operator".into(),
                ));
            }
            return Err(Error::NotTracePreserving(report.deviation));
        }
        Ok(Self::from_kraus_unchecked(kraus))
    }

    /// Skips the trace-preservation check. Shapes must still agree.
    pub fn from_kraus_unchecked(kraus: Vec<ComplexMatrix<T>>) -> Self {
        assert!(!kraus.is_empty(), "empty Kraus list");
        let (out_dim, in_dim) = (kraus[0].rows(), kraus[0].cols());
        assert!(
            kraus
                .iter()
                .all(|k| k.rows() == out_dim && k.cols() == in_dim),
            "ragged Kraus list"
        );
        Self {
            kraus,
            in_dim,
            out_dim,
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_kraus_unchecked(vec![ComplexMatrix::identity(n)])
    }

    /// Unitary channel `ρ ↦ UρU†`.
    pub fn unitary(u: ComplexMatrix<T>) -> Result<Self> {
        Self::new(vec![u])
    }

    pub fn kraus(&self) -> &[ComplexMatrix<T>] {
        &self.kraus
    }

    pub fn in_dim(&self) -> usize {
        self.in_dim
    }

    pub fn out_dim(&self) -> usize {
        self.out_dim
    }

    pub fn num_kraus(&self) -> usize {
        self.kraus.len()
    }

    pub fn validate(&self) -> CptpReport {
        validate_cptp(&self.kraus)
    }

    /// `Σ_k A_k X A_k†` for an arbitrary operator `X`.
    pub fn apply_operator(&self, x: &ComplexMatrix<T>) -> ComplexMatrix<T> {
        let mut out = ComplexMatrix::zeros(self.out_dim, self.out_dim);
        for a in &self.kraus {
            out = &out + &a.sandwich(x);
        }
        out
    }

    pub fn apply(&self, rho: &DensityMatrix<T>) -> Result<DensityMatrix<T>> {
        if rho.dim() != self.in_dim {
            return Err(Error::DimensionMismatch {
                expected: self.in_dim,
                found: rho.dim(),
            });
        }
        Ok(DensityMatrix::from_matrix_unchecked(
            self.apply_operator(rho.matrix()).hermitian_part(),
        ))
    }

    /// `after ∘ self`.
    pub fn then(&self, after: &Self) -> Result<Self> {
        if after.in_dim != self.out_dim {
            return Err(Error::DimensionMismatch {
                expected: self.out_dim,
                found: after.in_dim,
            });
        }
        let kraus = after
            .kraus
            .iter()
            .flat_map(|b| self.kraus.iter().map(move |a| b.matmul(a)))
            .collect();
        Ok(Self::from_kraus_unchecked(kraus))
    }

    /// `ρ ↦ W · N(V ρ V†) · W†`, i.e. Kraus operators `W A_k V`.
    pub fn conjugated(&self, input: &ComplexMatrix<T>, output: &ComplexMatrix<T>) -> Self {
        let kraus = self
            .kraus
            .iter()
            .map(|a| output.matmul(a).matmul(input))
            .collect();
        Self::from_kraus_unchecked(kraus)
    }

    /// Choi matrix `J = Σ_ij |i⟩⟨j| ⊗ N(|i⟩⟨j|)`, so that `Tr_out J = I_in`.
    pub fn choi(&self) -> ChoiMatrix<T> {
        let n = self.in_dim * self.out_dim;
        let mut j = ComplexMatrix::zeros(n, n);
        for a in &self.kraus {
            let vec_a: Vec<_> = (0..n)
                .map(|r| a[(r % self.out_dim, r / self.out_dim)])
                .collect();
            j = &j + &ComplexMatrix::outer(&vec_a, &vec_a);
        }
        ChoiMatrix {
            matrix: j,
            in_dim: self.in_dim,
            out_dim: self.out_dim,
        }
    }

    /// Frobenius distance between Choi matrices.
    pub fn choi_distance(&self, other: &Self) -> Result<T> {
        if (self.in_dim, self.out_dim) != (other.in_dim, other.out_dim) {
            return Err(Error::DimensionMismatch {
                expected: self.in_dim * self.out_dim,
                found: other.in_dim * other.out_dim,
            });
        }
        Ok(self.choi().matrix.distance(&other.choi().matrix))
    }

    /// Stinespring isometry `V = Σ_k A_k ⊗ |k⟩_env`.
    pub fn isometric_extension(&self) -> IsometricExtension<T> {
        let env = self.kraus.len();
        let v = ComplexMatrix::from_fn(self.out_dim * env, self.in_dim, |r, i| {
            self.kraus[r % env][(r / env, i)]
        });
        IsometricExtension {
            v,
            in_dim: self.in_dim,
            out_dim: self.out_dim,
            env_dim: env,
        }
    }

    /// Channel to the environment of [`KrausChannel::isometric_extension`].
    pub fn complementary(&self) -> Self {
        let env = self.kraus.len();
        let kraus = (0..self.out_dim)
            .map(|o| ComplexMatrix::from_fn(env, self.in_dim, |k, i| self.kraus[k][(o, i)]))
            .collect();
        Self::from_kraus_unchecked(kraus)
    }

    /// Minimal Kraus form from the Choi spectrum.
    pub fn compress(&self) -> Result<Self> {
        self.choi().to_channel()
    }
}

/// Choi matrix of a map, `J = Σ_ij |i⟩⟨j| ⊗ N(|i⟩⟨j|)`.
///
/// Unnormalized: `Tr_out J = I_in` and `Tr J = in_dim`.
#[derive(Debug, Clone, PartialEq)]
pub struct ChoiMatrix<T: Real> {
    pub matrix: ComplexMatrix<T>,
    pub in_dim: usize,
    pub out_dim: usize,
}

impl<T: Real> ChoiMatrix<T> {
    /// Kraus operators `√λ · unvec(v)` from eigenpairs with `λ > 1e-12 · max(1, λ_max)`.
    pub fn to_channel(&self) -> Result<KrausChannel<T>> {
        let spec = hermitian_eig(&self.matrix)?;
        let lmax = spec.eigenvalues.last().copied().unwrap_or_else(T::zero);
        let min = spec.eigenvalues.first().copied().unwrap_or_else(T::zero);
        if min < -T::tol(1e-9) * lmax.max(T::one()) {
            return Err(Error::NotPsd(min.as_f64()));
        }
        let cut = T::tol(1e-12) * lmax.max(T::one());
        let kraus: Vec<_> = spec
            .eigenvalues
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &l)| l > cut)
            .map(|(col, &l)| {
                let s = cr(l.sqrt());
                ComplexMatrix::from_fn(self.out_dim, self.in_dim, |o, i| {
                    spec.eigenvectors[(i * self.out_dim + o, col)] * s
                })
            })
            .collect();
        if kraus.is_empty() {
            return Err(Error::Invalid("Choi matrix is zero".into()));
        }
        Ok(KrausChannel::from_kraus_unchecked(kraus))
    }
}

/// Isometry `V: in → out ⊗ env` (output index major, environment minor).
#[derive(Debug, Clone, PartialEq)]
pub struct IsometricExtension<T: Real> {
    pub v: ComplexMatrix<T>,
    pub in_dim: usize,
    pub out_dim: usize,
    pub env_dim: usize,
}

impl<T: Real> IsometricExtension<T> {
    pub fn from_isometry(v: ComplexMatrix<T>, out_dim: usize, env_dim: usize) -> Result<Self> {
        if v.rows() != out_dim * env_dim {
            return Err(Error::DimensionMismatch {
                expected: out_dim * env_dim,
                found: v.rows(),
            });
        }
        let ext = Self {
            in_dim: v.cols(),
            v,
            out_dim,
            env_dim,
        };
        let dev = ext.isometry_deviation();
        if dev > T::tol(1e-10) {
            return Err(Error::Invalid(format!(
                "V†V deviates from identity by {:e}",
                dev.as_f64()
            )));
        }
        Ok(ext)
    }

    /// `‖V†V - I‖_F`.
    pub fn isometry_deviation(&self) -> T {
        self.v
            .adjoint()
            .matmul(&self.v)
            .distance(&ComplexMatrix::identity(self.in_dim))
    }

    /// `V ρ V†` on `out ⊗ env`.
    pub fn joint_state(&self, rho: &DensityMatrix<T>) -> Result<DensityMatrix<T>> {
        if rho.dim() != self.in_dim {
            return Err(Error::DimensionMismatch {
                expected: self.in_dim,
                found: rho.dim(),
            });
        }
        Ok(DensityMatrix::from_matrix_unchecked(
            self.v.sandwich(rho.matrix()).hermitian_part(),
        ))
    }

    /// `ρ ↦ Tr_env V ρ V†`.
    pub fn channel(&self) -> KrausChannel<T> {
        let kraus = (0..self.env_dim)
            .map(|k| {
                ComplexMatrix::from_fn(self.out_dim, self.in_dim, |o, i| {
                    self.v[(o * self.env_dim + k, i)]
                })
            })
            .collect();
        KrausChannel::from_kraus_unchecked(kraus)
    }

    /// `ρ ↦ Tr_out V ρ V†`.
    pub fn complementary_channel(&self) -> KrausChannel<T> {
        let kraus = (0..self.out_dim)
            .map(|o| {
                ComplexMatrix::from_fn(self.env_dim, self.in_dim, |k, i| {
                    self.v[(o * self.env_dim + k, i)]
                })
            })
            .collect();
        KrausChannel::from_kraus_unchecked(kraus)
    }
}

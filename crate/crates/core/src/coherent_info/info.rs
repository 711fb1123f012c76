use crate::channels::{bb84_gamma, FlaggedChannel, KrausChannel};
use crate::error::{Error, Result};
use crate::numerics::entropy::h2;
use crate::numerics::{
    hermitian_eig, partial_trace, von_neumann_entropy, ComplexMatrix, DensityMatrix,
};
use crate::scalar::{cr, Complex, Real};

fn check_input<T: Real>(expected: usize, phi: &DensityMatrix<T>) -> Result<()> {
    if phi.dim() == expected {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            expected,
            found: phi.dim(),
        })
    }
}

/// `I^c(N, φ) = S(N(φ)) - S(N̂(φ))` in bits.
pub fn coherent_information<T: Real>(ch: &KrausChannel<T>, phi: &DensityMatrix<T>) -> Result<T> {
    check_input(ch.in_dim(), phi)?;
    let out = von_neumann_entropy(&ch.apply(phi)?)?;
    let env = von_neumann_entropy(&ch.complementary().apply(phi)?)?;
    Ok(out - env)
}

/// `I^c` from a purification: `S(ρ_B) - S(ρ_RB)` with
/// `ρ_RB = (I ⊗ N)(|ψ⟩⟨ψ|)` and `Tr_R |ψ⟩⟨ψ| = φ`.
pub fn coherent_information_purified<T: Real>(
    ch: &KrausChannel<T>,
    phi: &DensityMatrix<T>,
) -> Result<T> {
    check_input(ch.in_dim(), phi)?;
    let d = phi.dim();
    let spec = hermitian_eig(phi.matrix())?;
    // |ψ⟩ = Σ_i √λ_i |i⟩_R ⊗ |v_i⟩_A
    let psi: Vec<Complex<T>> = (0..d * d)
        .map(|idx| {
            let (r, a) = (idx / d, idx % d);
            spec.eigenvectors[(a, r)] * cr(spec.eigenvalues[r].max(T::zero()).sqrt())
        })
        .collect();
    let pure = ComplexMatrix::outer(&psi, &psi);
    let id = ComplexMatrix::identity(d);
    let mut rb = ComplexMatrix::zeros(d * ch.out_dim(), d * ch.out_dim());
    for a in ch.kraus() {
        rb = &rb + &id.kron(a).sandwich(&pure);
    }
    let rb = DensityMatrix::from_matrix_unchecked(rb.hermitian_part());
    let b = partial_trace(&rb, &[d, ch.out_dim()], &[1])?;
    Ok(von_neumann_entropy(&b)? - von_neumann_entropy(&rb)?)
}

/// Blockwise `I^c` of a flagged channel: `Σ p_i (S(N_i(φ)) - S(N̂_i(φ)))`.
///
/// The flag contributes `H(p)` to both output and environment entropies,
/// so it cancels.
pub fn flagged_coherent_information<T: Real>(
    fc: &FlaggedChannel<T>,
    phi: &DensityMatrix<T>,
) -> Result<T> {
    check_input(fc.in_dim(), phi)?;
    fc.branches()
        .iter()
        .filter(|(p, _)| *p > T::zero())
        .map(|(p, ch)| coherent_information(ch, phi).map(|ic| *p * ic))
        .sum()
}

/// Anything whose coherent information can be maximized over input states.
pub trait CoherentObjective<T: Real>: Sync {
    fn input_dim(&self) -> usize;
    fn coherent_information(&self, phi: &DensityMatrix<T>) -> Result<T>;
}

impl<T: Real> CoherentObjective<T> for KrausChannel<T> {
    fn input_dim(&self) -> usize {
        self.in_dim()
    }

    fn coherent_information(&self, phi: &DensityMatrix<T>) -> Result<T> {
        coherent_information(self, phi)
    }
}

impl<T: Real> CoherentObjective<T> for FlaggedChannel<T> {
    fn input_dim(&self) -> usize {
        self.in_dim()
    }

    fn coherent_information(&self, phi: &DensityMatrix<T>) -> Result<T> {
        flagged_coherent_information(self, phi)
    }
}

/// Closed-form `I^c` of the BB84 extension at `φ_α = I/2 + (α/2) Y`:
///
/// ```text
/// H(½(1 - √(γ² + α²(1-γ)))) - H(½(1 - √((1-γ)² + α²γ))),   γ = 4q(1-q)
/// ```
pub fn bb84_alpha_scan<T: Real>(q: T, alpha: T) -> Result<T> {
    if !(q >= T::zero() && q <= T::lit(0.5)) {
        return Err(Error::domain("q", q.as_f64(), "[0, 1/2]"));
    }
    if !(alpha >= -T::one() && alpha <= T::one()) {
        return Err(Error::domain("alpha", alpha.as_f64(), "[-1, 1]"));
    }
    let g = bb84_gamma(q);
    let a2 = alpha * alpha;
    let half = T::lit(0.5);
    let out = (g * g + a2 * (T::one() - g)).sqrt();
    let env = ((T::one() - g) * (T::one() - g) + a2 * g).sqrt();
    Ok(h2(half * (T::one() - out)) - h2(half * (T::one() - env)))
}

//! Qubit channels used by the capacity bounds.

use crate::channels::KrausChannel;
use crate::error::{Error, Result};
use crate::numerics::{paulis, ComplexMatrix};
use crate::scalar::{cr, Real};

fn check_unit_interval<T: Real>(what: &'static str, x: T) -> Result<()> {
    if x >= T::zero() && x <= T::one() {
        Ok(())
    } else {
        Err(Error::domain(what, x.as_f64(), "[0, 1]"))
    }
}

/// `ρ ↦ pI·ρ + pX·XρX + pY·YρY + pZ·ZρZ`.
pub fn pauli_channel<T: Real>(p_i: T, p_x: T, p_y: T, p_z: T) -> Result<KrausChannel<T>> {
    let weights = [p_i, p_x, p_y, p_z];
    if let Some(w) = weights.iter().find(|w| !(**w >= T::zero())) {
        return Err(Error::Probabilities(format!("negative Pauli weight {}", w)));
    }
    let total: T = weights.iter().copied().sum();
    if (total - T::one()).abs() > T::tol(1e-12) {
        return Err(Error::Probabilities(format!(
            "Pauli weights sum to {total}"
        )));
    }
    let kraus = weights
        .iter()
        .zip(paulis::<T>())
        .filter(|(w, _)| **w > T::zero())
        .map(|(w, p)| p.scale_real(w.sqrt()))
        .collect();
    KrausChannel::new(kraus)
}

/// Depolarizing channel `(1-p)ρ + (p/3)(XρX + YρY + ZρZ)`.
pub fn depolarizing<T: Real>(p: T) -> Result<KrausChannel<T>> {
    check_unit_interval("p", p)?;
    let third = p / T::lit(3.0);
    pauli_channel(T::one() - p, third, third, third)
}

/// Amplitude damping with `A0 = diag(1, √(1-γ))` and `A1 = √γ |0⟩⟨1|`.
pub fn amplitude_damping<T: Real>(gamma: T) -> Result<KrausChannel<T>> {
    check_unit_interval("gamma", gamma)?;
    let z = cr(T::zero());
    let a0 = ComplexMatrix::from_vec(
        2,
        2,
        vec![cr(T::one()), z, z, cr((T::one() - gamma).sqrt())],
    )?;
    let a1 = ComplexMatrix::from_vec(2, 2, vec![z, cr(gamma.sqrt()), z, z])?;
    KrausChannel::new(vec![a0, a1])
}

/// Two-parameter qubit family with Kraus operators
///
/// ```text
/// A+ = [[cos((v-u)/2), 0], [0, cos((v+u)/2)]]
/// A- = [[0, sin((v+u)/2)], [sin((v-u)/2), 0]]
/// ```
///
/// Every degradable qubit channel is of this form up to input/output unitaries.
pub fn n_uv<T: Real>(u: T, v: T) -> KrausChannel<T> {
    let half = T::lit(0.5);
    let d = (v - u) * half;
    let s = (v + u) * half;
    let z = cr(T::zero());
    let plus =
        ComplexMatrix::from_vec(2, 2, vec![cr(d.cos()), z, z, cr(s.cos())]).expect("2x2 literal");
    let minus =
        ComplexMatrix::from_vec(2, 2, vec![z, cr(s.sin()), cr(d.sin()), z]).expect("2x2 literal");
    KrausChannel::from_kraus_unchecked(vec![plus, minus])
}

/// `|sin v| ≤ |cos u|`, the region where [`n_uv`] is degradable.
pub fn n_uv_is_degradable<T: Real>(u: T, v: T) -> bool {
    v.sin().abs() <= u.cos().abs() + T::tol(1e-12)
}

/// Pauli channel with independent bit and phase flips of probability `q`,
/// in the orientation `(1-q)²·I, q(1-q)·X, q²·Y, q(1-q)·Z`.
pub fn bb84_channel<T: Real>(q: T) -> Result<KrausChannel<T>> {
    if !(q >= T::zero() && q <= T::lit(0.5)) {
        return Err(Error::domain("q", q.as_f64(), "[0, 1/2]"));
    }
    let p = T::one() - q;
    pauli_channel(p * p, q * p, q * q, q * p)
}

//! Single-qubit Clifford group and Clifford twirling.

use crate::channels::KrausChannel;
use crate::error::{Error, Result};
use crate::numerics::ComplexMatrix;
use crate::scalar::{cr, Complex, Real};

/// Order of the single-qubit Clifford group modulo global phase.
pub const CLIFFORD_ORDER: usize = 24;

fn hadamard<T: Real>() -> ComplexMatrix<T> {
    let r = std::f64::consts::FRAC_1_SQRT_2;
    ComplexMatrix::from_rows(&[&[(r, 0.0), (r, 0.0)], &[(r, 0.0), (-r, 0.0)]])
}

fn phase_gate<T: Real>() -> ComplexMatrix<T> {
    ComplexMatrix::from_rows(&[&[(1.0, 0.0), (0.0, 0.0)], &[(0.0, 0.0), (0.0, 1.0)]])
}

/// Removes the global phase so the first non-negligible entry is real positive.
fn canonical_phase<T: Real>(u: &ComplexMatrix<T>) -> ComplexMatrix<T> {
    let pivot = u
        .data()
        .iter()
        .find(|z| z.norm() > T::lit(0.25))
        .copied()
        .unwrap_or_else(|| cr(T::one()));
    u.scale(pivot.conj() / cr(pivot.norm()))
}

/// The 24 single-qubit Cliffords, generated by closing `{H, S}` under
/// multiplication and deduplicating up to global phase.
///
/// Ordering is breadth-first from the identity, so indices are stable.
pub fn clifford_group<T: Real>() -> Vec<ComplexMatrix<T>> {
    let generators = [hadamard::<T>(), phase_gate::<T>()];
    let mut group = vec![ComplexMatrix::<T>::identity(2)];
    let mut frontier = 0;
    while frontier < group.len() {
        let current = group[frontier].clone();
        frontier += 1;
        for g in &generators {
            let candidate = canonical_phase(&g.matmul(&current));
            if !group.iter().any(|m| m.distance(&candidate) < T::tol(1e-9)) {
                group.push(candidate);
            }
        }
    }
    group
}

fn require_qubit<T: Real>(ch: &KrausChannel<T>) -> Result<()> {
    if ch.in_dim() == 2 && ch.out_dim() == 2 {
        Ok(())
    } else {
        Err(Error::Invalid(format!(
            "expected a qubit channel, got {} -> {}",
            ch.in_dim(),
            ch.out_dim()
        )))
    }
}

/// Clifford twirl `(1/24) Σ_c c† ∘ N ∘ c`, with Kraus operators `c† A c / √24`.
pub fn twirl<T: Real>(ch: &KrausChannel<T>) -> Result<KrausChannel<T>> {
    require_qubit(ch)?;
    let weight = T::one() / T::lit(CLIFFORD_ORDER as f64).sqrt();
    let kraus = clifford_group::<T>()
        .iter()
        .flat_map(|c| {
            let cd = c.adjoint();
            ch.kraus()
                .iter()
                .map(move |a| cd.matmul(a).matmul(c).scale_real(weight))
        })
        .collect();
    Ok(KrausChannel::from_kraus_unchecked(kraus))
}

/// `⟨φ+|(I ⊗ N)(|φ+⟩⟨φ+|)|φ+⟩ = Σ_k |Tr A_k / 2|²`.
pub fn entanglement_fidelity<T: Real>(ch: &KrausChannel<T>) -> Result<T> {
    require_qubit(ch)?;
    Ok(ch
        .kraus()
        .iter()
        .map(|a| (a.trace() * cr(T::lit(0.5))).norm_sqr())
        .sum())
}

/// Entanglement fidelity read off the Choi state `J / 2 = (I ⊗ N)(|φ+⟩⟨φ+|)`.
pub fn entanglement_fidelity_direct<T: Real>(ch: &KrausChannel<T>) -> Result<T> {
    require_qubit(ch)?;
    let j = ch.choi().matrix;
    let r = T::lit(std::f64::consts::FRAC_1_SQRT_2);
    let zero = cr(T::zero());
    let phi = [cr(r), zero, zero, cr(r)];
    let mut acc = Complex::new(T::zero(), T::zero());
    for a in 0..4 {
        for b in 0..4 {
            acc += phi[a].conj() * j[(a, b)] * phi[b];
        }
    }
    Ok(acc.re * T::lit(0.5))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channels::{amplitude_damping, depolarizing, n_uv};
    use crate::numerics::paulis;

    #[test]
    fn group_order_and_membership() {
        let group = clifford_group::<f64>();
        assert_eq!(group.len(), CLIFFORD_ORDER);
        assert!(group[0].distance(&ComplexMatrix::identity(2)) < 1e-15);

        let ps = paulis::<f64>();
        for c in &group {
            let cc = c.adjoint().matmul(c);
            assert!(cc.distance(&ComplexMatrix::identity(2)) < 1e-12);
            for p in &ps[1..] {
                let image = c.sandwich(p);
                let hit = ps[1..].iter().any(|q| {
                    image.distance(q) < 1e-12 || image.distance(&q.scale_real(-1.0)) < 1e-12
                });
                assert!(hit, "Clifford does not map Paulis to Paulis");
            }
        }
    }

    #[test]
    fn members_distinct_up_to_phase() {
        let group = clifford_group::<f64>();
        for (i, a) in group.iter().enumerate() {
            for b in &group[i + 1..] {
                // |Tr(a† b)| = 2 iff a and b agree up to phase
                let overlap = a.adjoint().matmul(b).trace().norm();
                assert!((overlap - 2.0).abs() > 1e-6);
            }
        }
    }

    #[test]
    fn twirl_identity_and_idempotence() {
        let id = KrausChannel::<f64>::identity(2);
        assert!(twirl(&id).unwrap().choi_distance(&id).unwrap() < 1e-10);

        let ad = amplitude_damping::<f64>(0.37).unwrap();
        let once = twirl(&ad).unwrap();
        let twice = twirl(&once).unwrap();
        assert!(twice.choi_distance(&once).unwrap() < 1e-10);
        let f = entanglement_fidelity(&ad).unwrap();
        assert!(once.choi_distance(&depolarizing(1.0 - f).unwrap()).unwrap() < 1e-10);
    }

    #[test]
    fn fidelity_routes_agree() {
        for (u, v) in [(0.1, 0.2), (0.7, -0.3), (1.1, 0.4)] {
            let ch = n_uv::<f64>(u, v);
            let a = entanglement_fidelity(&ch).unwrap();
            let b = entanglement_fidelity_direct(&ch).unwrap();
            assert!((a - b).abs() < 1e-12);
            let expected = (u / 2.0).cos().powi(2) * (v / 2.0).cos().powi(2);
            assert!((a - expected).abs() < 1e-12);
        }
        assert!(
            (entanglement_fidelity(&KrausChannel::<f64>::identity(2)).unwrap() - 1.0).abs() < 1e-15
        );
    }

    #[test]
    fn rejects_non_qubit() {
        let ch = KrausChannel::<f64>::identity(3);
        assert!(twirl(&ch).is_err());
        assert!(entanglement_fidelity(&ch).is_err());
    }
}

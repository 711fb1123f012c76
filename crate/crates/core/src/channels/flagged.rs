//! Flagged extensions `T = Σ p_i N_i ⊗ |i⟩⟨i|` of convex channel mixtures.

use crate::channels::{amplitude_damping, clifford_group, n_uv, n_uv_is_degradable, KrausChannel};
use crate::error::{Error, Result};
use crate::numerics::{paulis, ComplexMatrix};
use crate::scalar::{cr, Real};

/// Probability-weighted branches whose index is handed to the receiver.
#[derive(Debug, Clone, PartialEq)]
pub struct FlaggedChannel<T: Real> {
    branches: Vec<(T, KrausChannel<T>)>,
}

/// Builds `Σ p_i N_i ⊗ |i⟩⟨i|` from `(p_i, N_i)` pairs.
pub fn flagged_extension<T: Real>(
    branches: Vec<(T, KrausChannel<T>)>,
) -> Result<FlaggedChannel<T>> {
    FlaggedChannel::new(branches)
}

/// Drops the flag: `Σ p_i N_i` with Kraus operators `√p_i A_k^(i)`.
pub fn reduce_flagged<T: Real>(fc: &FlaggedChannel<T>) -> KrausChannel<T> {
    fc.reduce()
}

impl<T: Real> FlaggedChannel<T> {
    pub fn new(branches: Vec<(T, KrausChannel<T>)>) -> Result<Self> {
        let Some((_, first)) = branches.first() else {
            return Err(Error::Probabilities("no branches".into()));
        };
        let (din, dout) = (first.in_dim(), first.out_dim());
        if let Some((_, bad)) = branches
            .iter()
            .find(|(_, ch)| ch.in_dim() != din || ch.out_dim() != dout)
        {
            return Err(Error::DimensionMismatch {
                expected: din * dout,
                found: bad.in_dim() * bad.out_dim(),
            });
        }
        if let Some((p, _)) = branches.iter().find(|(p, _)| !(*p >= T::zero())) {
            return Err(Error::Probabilities(format!("negative branch weight {p}")));
        }
        let total: T = branches.iter().map(|(p, _)| *p).sum();
        if (total - T::one()).abs() > T::tol(1e-12) {
            return Err(Error::Probabilities(format!(
                "branch weights sum to {total}"
            )));
        }
        Ok(Self { branches })
    }

    pub fn branches(&self) -> &[(T, KrausChannel<T>)] {
        &self.branches
    }

    pub fn flag_dim(&self) -> usize {
        self.branches.len()
    }

    pub fn in_dim(&self) -> usize {
        self.branches[0].1.in_dim()
    }

    pub fn out_dim(&self) -> usize {
        self.branches[0].1.out_dim()
    }

    pub fn reduce(&self) -> KrausChannel<T> {
        let kraus = self
            .branches
            .iter()
            .flat_map(|(p, ch)| {
                let w = p.sqrt();
                ch.kraus().iter().map(move |a| a.scale_real(w))
            })
            .collect();
        KrausChannel::from_kraus_unchecked(kraus)
    }

    /// The flagged channel as one map onto `out ⊗ flag` (flag index minor).
    pub fn materialize(&self) -> KrausChannel<T> {
        let flags = self.flag_dim();
        let out = self.out_dim();
        let kraus = self
            .branches
            .iter()
            .enumerate()
            .flat_map(|(i, (p, ch))| {
                let w = p.sqrt();
                ch.kraus().iter().map(move |a| {
                    ComplexMatrix::from_fn(out * flags, a.cols(), |r, c| {
                        if r % flags == i {
                            a[(r / flags, c)] * cr(w)
                        } else {
                            cr(T::zero())
                        }
                    })
                })
            })
            .collect();
        KrausChannel::from_kraus_unchecked(kraus)
    }

    /// `Σ p_i N̂_i ⊗ |i⟩⟨i|`.
    pub fn complementary(&self) -> Self {
        Self {
            branches: self
                .branches
                .iter()
                .map(|(p, ch)| (*p, ch.complementary()))
                .collect(),
        }
    }
}

/// Clifford-flagged extension of the depolarizing channel built on [`n_uv`]:
/// 24 equiprobable branches `c† ∘ N_(u,v) ∘ c`.
///
/// Restricted to the degradable region, where every branch is degradable.
pub fn dep_uv_extension<T: Real>(u: T, v: T) -> Result<FlaggedChannel<T>> {
    if !n_uv_is_degradable(u, v) {
        return Err(Error::NotDegradable {
            u: u.as_f64(),
            v: v.as_f64(),
        });
    }
    let base = n_uv(u, v);
    let group = clifford_group::<T>();
    let w = T::one() / T::lit(group.len() as f64);
    let branches = group
        .iter()
        .map(|c| (w, base.conjugated(c, &c.adjoint())))
        .collect();
    FlaggedChannel::new(branches)
}

/// Damping parameter `γ(q) = 4q(1-q)` of the BB84 extension.
pub fn bb84_gamma<T: Real>(q: T) -> T {
    T::lit(4.0) * q * (T::one() - q)
}

/// Largest `q` for which the BB84 extension branches are degradable
/// (`γ(q) ≤ 1/2`): `(2 - √2) / 4`.
pub fn bb84_degradable_limit<T: Real>() -> T {
    (T::lit(2.0) - T::SQRT_2()) / T::lit(4.0)
}

/// Whether both branches of [`bb84_extension`] are degradable at `q`.
pub fn bb84_extension_is_degradable<T: Real>(q: T) -> bool {
    q >= T::zero() && q <= bb84_degradable_limit::<T>() + T::tol(1e-15)
}

/// Two equiprobable branches: amplitude damping `N_γ(q)` and `Y ∘ N_γ(q) ∘ Y`.
///
/// Defined for `q ∈ [0, 1/2]`; its branches are degradable only up to
/// [`bb84_degradable_limit`].
pub fn bb84_extension<T: Real>(q: T) -> Result<FlaggedChannel<T>> {
    if !(q >= T::zero() && q <= T::lit(0.5)) {
        return Err(Error::domain("q", q.as_f64(), "[0, 1/2]"));
    }
    let ad = amplitude_damping(bb84_gamma(q).min(T::one()))?;
    let [_, _, y, _] = paulis::<T>();
    let half = T::lit(0.5);
    FlaggedChannel::new(vec![(half, ad.clone()), (half, ad.conjugated(&y, &y))])
}

/// Rotation about X by a quarter turn; exchanges the Y and Z Pauli axes.
pub fn bb84_rotation<T: Real>() -> ComplexMatrix<T> {
    let r = std::f64::consts::FRAC_1_SQRT_2;
    ComplexMatrix::from_rows(&[&[(r, 0.0), (0.0, r)], &[(0.0, r), (r, 0.0)]])
}

/// `ρ ↦ R N(R† ρ R) R†` with [`bb84_rotation`], mapping the flag-reduced
/// BB84 extension onto [`crate::channels::bb84_channel`].
pub fn rotate_to_bb84_frame<T: Real>(ch: &KrausChannel<T>) -> KrausChannel<T> {
    let r = bb84_rotation::<T>();
    ch.conjugated(&r.adjoint(), &r)
}

//! Symmetric (no-cloning) degradable extension of a channel.
//!
//! With `U: A → B ⊗ E` the Stinespring isometry of `N` and `d = max(d_B, d_E)`,
//!
//! ```text
//! V|φ⟩ = (U|φ⟩ ⊗ |01⟩_{C1C2} + SWAP_{F1F2} U|φ⟩ ⊗ |10⟩_{C1C2}) / √2
//! ```
//!
//! maps `A` into `F1 C1 ⊗ F2 C2`, where `B` and `E` are embedded into the
//! first `d_B` (resp. `d_E`) coordinates of the `d`-dimensional spaces `F1`
//! and `F2`. The receiver holds `F1 C1`; the environment holds `F2 C2`.
//! Swapping the two halves leaves `V` invariant, so the extension is
//! degradable (the degrading map is the swap itself).

use crate::channels::{IsometricExtension, KrausChannel};
use crate::error::{Error, Result};
use crate::numerics::ComplexMatrix;
use crate::scalar::{cr, Real};

#[derive(Debug, Clone)]
pub struct NoCloningExtension<T: Real> {
    /// `V: A → (F1 ⊗ C1) ⊗ (F2 ⊗ C2)`; output index `f1·2 + c1`, environment `f2·2 + c2`.
    pub isometry: IsometricExtension<T>,
    /// `ρ ↦ Tr_{F2 C2} V ρ V†`.
    pub channel: KrausChannel<T>,
    /// `ρ ↦ Tr_{F1 C1} V ρ V†`.
    pub complement: KrausChannel<T>,
    /// Padded dimension `d = max(d_B, d_E)`.
    pub padded_dim: usize,
    out_dim: usize,
    env_dim: usize,
}

/// Builds the symmetric extension of `ch`.
pub fn no_cloning_extension<T: Real>(ch: &KrausChannel<T>) -> Result<NoCloningExtension<T>> {
    let report = ch.validate();
    if !report.ok {
        return Err(Error::NotTracePreserving(report.deviation));
    }
    let u = ch.isometric_extension();
    let (db, de, din) = (u.out_dim, u.env_dim, u.in_dim);
    let d = db.max(de);
    let half = 2 * d;
    let r = T::FRAC_1_SQRT_2();

    let mut v = ComplexMatrix::zeros(half * half, din);
    for b in 0..db {
        for e in 0..de {
            for i in 0..din {
                let amp = u.v[(b * de + e, i)] * cr(r);
                // U|φ⟩|01⟩: F1 = b, C1 = 0, F2 = e, C2 = 1
                v[((b * 2) * half + (e * 2 + 1), i)] += amp;
                // SWAP U|φ⟩|10⟩: F1 = e, C1 = 1, F2 = b, C2 = 0
                v[((e * 2 + 1) * half + (b * 2), i)] += amp;
            }
        }
    }
    let isometry = IsometricExtension::from_isometry(v, half, half)?;
    Ok(NoCloningExtension {
        channel: isometry.channel(),
        complement: isometry.complementary_channel(),
        isometry,
        padded_dim: d,
        out_dim: db,
        env_dim: de,
    })
}

impl<T: Real> NoCloningExtension<T> {
    /// Choi distance between the receiver's and the environment's marginal channels.
    pub fn symmetry_defect(&self) -> T {
        self.channel
            .choi_distance(&self.complement)
            .unwrap_or_else(|_| T::infinity())
    }

    /// The source channel with its output embedded into `F1`.
    pub fn padded_source(&self, source: &KrausChannel<T>) -> KrausChannel<T> {
        let d = self.padded_dim;
        let kraus = source
            .kraus()
            .iter()
            .map(|a| {
                ComplexMatrix::from_fn(d, a.cols(), |r, c| {
                    if r < a.rows() {
                        a[(r, c)]
                    } else {
                        cr(T::zero())
                    }
                })
            })
            .collect();
        KrausChannel::from_kraus_unchecked(kraus)
    }

    /// Reduction `F1 C1 → F1` given an antidegrading map `D` (`D ∘ N̂ = N`):
    /// keep `F1` when `C1 = 0`, apply `D` to the embedded environment when `C1 = 1`.
    ///
    /// Composing the extension with this map recovers the padded source channel.
    pub fn reduction(&self, antidegrading: &KrausChannel<T>) -> Result<KrausChannel<T>> {
        if antidegrading.in_dim() != self.env_dim || antidegrading.out_dim() != self.out_dim {
            return Err(Error::DimensionMismatch {
                expected: self.env_dim * self.out_dim,
                found: antidegrading.in_dim() * antidegrading.out_dim(),
            });
        }
        let d = self.padded_dim;
        let half = 2 * d;
        let zero = cr(T::zero());
        let one = cr(T::one());

        let mut kraus = vec![ComplexMatrix::from_fn(d, half, |f, col| {
            if col == f * 2 {
                one
            } else {
                zero
            }
        })];
        for dk in antidegrading.kraus() {
            kraus.push(ComplexMatrix::from_fn(d, half, |row, col| {
                let (f, c1) = (col / 2, col % 2);
                if c1 == 1 && f < self.env_dim && row < self.out_dim {
                    dk[(row, f)]
                } else {
                    zero
                }
            }));
        }
        if self.env_dim < d {
            // Unused part of the C1 = 1 block, sent anywhere trace-preservingly.
            kraus.push(ComplexMatrix::from_fn(d, half, |row, col| {
                let (f, c1) = (col / 2, col % 2);
                if c1 == 1 && f >= self.env_dim && row == f {
                    one
                } else {
                    zero
                }
            }));
        }
        KrausChannel::new(kraus)
    }
}

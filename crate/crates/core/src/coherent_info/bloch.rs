use crate::error::{Error, Result};
use crate::numerics::{paulis, ComplexMatrix, DensityMatrix};
use crate::scalar::Real;

/// Qubit state `(I + r·σ) / 2` with `|r| ≤ 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochState<T: Real> {
    pub x: T,
    pub y: T,
    pub z: T,
}

impl<T: Real> BlochState<T> {
    pub fn new(x: T, y: T, z: T) -> Result<Self> {
        let s = Self { x, y, z };
        if !(s.radius() <= T::one() + T::tol(1e-12)) {
            return Err(Error::domain("|r|", s.radius().as_f64(), "[0, 1]"));
        }
        Ok(s)
    }

    /// Radially projects any point into the unit ball.
    pub fn clamped(x: T, y: T, z: T) -> Self {
        let s = Self { x, y, z };
        let r = s.radius();
        if r > T::one() {
            Self {
                x: x / r,
                y: y / r,
                z: z / r,
            }
        } else {
            s
        }
    }

    pub fn maximally_mixed() -> Self {
        Self {
            x: T::zero(),
            y: T::zero(),
            z: T::zero(),
        }
    }

    pub fn radius(&self) -> T {
        (self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }

    pub fn coords(&self) -> [T; 3] {
        [self.x, self.y, self.z]
    }

    pub fn to_density(&self) -> DensityMatrix<T> {
        let [i, sx, sy, sz] = paulis::<T>();
        let m: ComplexMatrix<T> = [(&sx, self.x), (&sy, self.y), (&sz, self.z)]
            .iter()
            .fold(i, |acc, (p, w)| &acc + &p.scale_real(*w));
        DensityMatrix::from_matrix_unchecked(m.scale_real(T::lit(0.5)))
    }
}

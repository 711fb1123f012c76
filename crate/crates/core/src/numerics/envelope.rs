use crate::error::{Error, Result};
use crate::scalar::Real;

/// Piecewise-linear function through `(knot, value)` pairs.
#[derive(Debug, Clone, PartialEq)]
pub struct PiecewiseLinearCurve<T: Real> {
    knots: Vec<T>,
    values: Vec<T>,
}

impl<T: Real> PiecewiseLinearCurve<T> {
    /// Knots must be strictly increasing and match `values` in length.
    pub fn new(knots: Vec<T>, values: Vec<T>) -> Result<Self> {
        if knots.len() != values.len() {
            return Err(Error::DimensionMismatch {
                expected: knots.len(),
                found: values.len(),
            });
        }
        if knots.is_empty() {
            return Err(Error::Invalid("curve needs at least one knot".into()));
        }
        if knots.windows(2).any(|w| !(w[0] < w[1])) {
            return Err(Error::Invalid("knots must be strictly increasing".into()));
        }
        if knots.iter().chain(&values).any(|x| !x.is_finite()) {
            return Err(Error::Invalid("curve contains a non-finite value".into()));
        }
        Ok(Self { knots, values })
    }

    pub fn from_fn(knots: Vec<T>, f: impl Fn(T) -> T) -> Result<Self> {
        let values = knots.iter().map(|&x| f(x)).collect();
        Self::new(knots, values)
    }

    pub fn knots(&self) -> &[T] {
        &self.knots
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.knots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.knots.is_empty()
    }

    pub fn domain(&self) -> (T, T) {
        (self.knots[0], self.knots[self.knots.len() - 1])
    }

    /// Linear interpolation; `None` outside the knot range.
    pub fn eval(&self, x: T) -> Option<T> {
        let (lo, hi) = self.domain();
        if !(x >= lo && x <= hi) {
            return None;
        }
        let i = self.knots.partition_point(|&k| k <= x);
        if i == 0 {
            return Some(self.values[0]);
        }
        if i == self.knots.len() {
            return Some(self.values[i - 1]);
        }
        let (x0, x1) = (self.knots[i - 1], self.knots[i]);
        let (y0, y1) = (self.values[i - 1], self.values[i]);
        Some(y0 + (y1 - y0) * (x - x0) / (x1 - x0))
    }

    /// Slopes of consecutive segments.
    pub fn slopes(&self) -> Vec<T> {
        self.knots
            .windows(2)
            .zip(self.values.windows(2))
            .map(|(k, v)| (v[1] - v[0]) / (k[1] - k[0]))
            .collect()
    }

    /// `true` if segment slopes never decrease by more than `tol`.
    pub fn is_convex(&self, tol: T) -> bool {
        self.slopes().windows(2).all(|s| s[1] >= s[0] - tol)
    }

    /// Pointwise minimum with `other`, sampled on this curve's knots.
    pub fn pointwise_min(&self, other: &Self) -> Result<Self> {
        let values = self
            .knots
            .iter()
            .zip(&self.values)
            .map(|(&x, &y)| {
                other
                    .eval(x)
                    .map(|z| y.min(z))
                    .ok_or_else(|| Error::Invalid("curves do not share a domain".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(self.knots.clone(), values)
    }

    /// Re-evaluates the curve on new abscissae inside its domain.
    pub fn resample(&self, knots: Vec<T>) -> Result<Self> {
        let values = knots
            .iter()
            .map(|&x| {
                self.eval(x)
                    .ok_or_else(|| Error::domain("x", x.as_f64(), "curve knot range"))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(knots, values)
    }
}

/// Lower convex envelope of the knot set (Andrew's monotone chain, lower half).
///
/// The result keeps only hull vertices; it lies on or below the input,
/// is convex, and matches the input at both endpoints.
pub fn convex_envelope<T: Real>(
    curve: &PiecewiseLinearCurve<T>,
) -> Result<PiecewiseLinearCurve<T>> {
    if curve.len() < 2 {
        return Err(Error::Invalid(
            "convex envelope needs at least two knots".into(),
        ));
    }
    let mut hull: Vec<(T, T)> = Vec::with_capacity(curve.len());
    for (&x, &y) in curve.knots.iter().zip(&curve.values) {
        while hull.len() >= 2 {
            let (x1, y1) = hull[hull.len() - 2];
            let (x2, y2) = hull[hull.len() - 1];
            // Drop the middle point unless it turns strictly counter-clockwise.
            let cross = (x2 - x1) * (y - y1) - (y2 - y1) * (x - x1);
            if cross <= T::zero() {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push((x, y));
    }
    let (knots, values) = hull.into_iter().unzip();
    PiecewiseLinearCurve::new(knots, values)
}

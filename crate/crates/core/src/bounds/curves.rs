//! Sampled bound curves and their lower convex envelopes.

use rayon::prelude::*;

use crate::bounds::{ad_upper, delta, dephasing_upper, no_cloning_line, DeltaOptions};
use crate::error::{Error, Result};
use crate::numerics::{convex_envelope, PiecewiseLinearCurve};
use crate::scalar::Real;

#[derive(Debug, Clone, PartialEq)]
pub struct BoundCurve<T: Real> {
    pub name: String,
    /// Parameter name, `"p"` or `"q"`.
    pub label: String,
    pub samples: PiecewiseLinearCurve<T>,
}

impl<T: Real> BoundCurve<T> {
    pub fn knots(&self) -> &[T] {
        self.samples.knots()
    }

    pub fn values(&self) -> &[T] {
        self.samples.values()
    }

    pub fn eval(&self, x: T) -> Option<T> {
        self.samples.eval(x)
    }
}

/// `steps` equally spaced points on `[lo, hi]`, endpoints exact.
pub fn uniform_grid<T: Real>(lo: T, hi: T, steps: usize) -> Result<Vec<T>> {
    if steps < 2 {
        return Err(Error::Invalid(format!(
            "need at least 2 steps, got {steps}"
        )));
    }
    if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
        return Err(Error::Invalid(format!("empty interval [{lo}, {hi}]")));
    }
    let last = steps - 1;
    Ok((0..steps)
        .map(|k| {
            if k == last {
                hi
            } else {
                lo + (hi - lo) * T::lit(k as f64) / T::lit(last as f64)
            }
        })
        .collect())
}

/// Evaluates `f` at every grid point (in parallel) and attaches a name.
pub fn sample_on<T: Real>(
    name: &str,
    label: &str,
    grid: &[T],
    f: impl Fn(T) -> Result<T> + Sync,
) -> Result<BoundCurve<T>> {
    let values = grid.par_iter().map(|&x| f(x)).collect::<Result<Vec<T>>>()?;
    Ok(BoundCurve {
        name: name.to_owned(),
        label: label.to_owned(),
        samples: PiecewiseLinearCurve::new(grid.to_vec(), values)?,
    })
}

/// Uniform sampling of `f` on `domain` with `steps` points.
pub fn sample_curve<T: Real>(
    name: &str,
    label: &str,
    domain: (T, T),
    steps: usize,
    f: impl Fn(T) -> Result<T> + Sync,
) -> Result<BoundCurve<T>> {
    sample_on(name, label, &uniform_grid(domain.0, domain.1, steps)?, f)
}

/// Lower convex envelope of the pointwise minimum of `curves`, reported on
/// the merged knot set of their common domain.
pub fn convex_hull_curves<T: Real>(name: &str, curves: &[&BoundCurve<T>]) -> Result<BoundCurve<T>> {
    let Some(first) = curves.first() else {
        return Err(Error::Invalid("no curves to combine".into()));
    };
    if let Some(c) = curves.iter().find(|c| c.label != first.label) {
        return Err(Error::Invalid(format!(
            "curves use different parameters: {} vs {}",
            first.label, c.label
        )));
    }
    let lo = curves
        .iter()
        .map(|c| c.samples.domain().0)
        .fold(T::neg_infinity(), T::max);
    let hi = curves
        .iter()
        .map(|c| c.samples.domain().1)
        .fold(T::infinity(), T::min);
    if !(lo < hi) {
        return Err(Error::Invalid("curves do not share a domain".into()));
    }
    let mut knots: Vec<T> = curves
        .iter()
        .flat_map(|c| c.knots().iter().copied())
        .filter(|&x| x >= lo && x <= hi)
        .collect();
    knots.sort_by(|a, b| a.partial_cmp(b).expect("finite knots"));
    knots.dedup();

    let values = knots
        .iter()
        .map(|&x| {
            curves
                .iter()
                .map(|c| c.eval(x).expect("knot inside common domain"))
                .fold(T::infinity(), T::min)
        })
        .collect();
    let lower = PiecewiseLinearCurve::new(knots.clone(), values)?;
    let hull = convex_envelope(&lower)?.resample(knots)?;
    Ok(BoundCurve {
        name: name.to_owned(),
        label: first.label.clone(),
        samples: hull,
    })
}

/// Sampled `Δ(p)` on `grid`.
pub fn delta_curve<T: Real>(grid: &[T], opts: &DeltaOptions) -> Result<BoundCurve<T>> {
    sample_on("delta", "p", grid, |p| delta(p, opts).map(|r| r.value))
}

/// `co[Δ(p), 1 - 4p]` on `grid`.
pub fn theorem6_bound<T: Real>(grid: &[T], opts: &DeltaOptions) -> Result<BoundCurve<T>> {
    let d = delta_curve(grid, opts)?;
    let line = sample_on("one_minus_4p", "p", grid, |p| Ok(no_cloning_line(p)))?;
    convex_hull_curves("thm6_hull", &[&d, &line])
}

/// `co[1 - H(p), ad_upper(p), 1 - 4p]` on `grid`.
pub fn corollary7_bound<T: Real>(grid: &[T]) -> Result<BoundCurve<T>> {
    let deph = sample_on("one_minus_Hp", "p", grid, dephasing_upper)?;
    let ad = sample_on("ad_bound", "p", grid, ad_upper)?;
    let line = sample_on("one_minus_4p", "p", grid, |p| Ok(no_cloning_line(p)))?;
    convex_hull_curves("cor7_hull", &[&deph, &ad, &line])
}

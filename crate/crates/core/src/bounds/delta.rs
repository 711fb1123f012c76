//! Minimization of the depolarizing-extension objective along
//! `cos²(u/2) cos²(v/2) = 1 - p`.

use crate::bounds::delta_objective;
use crate::channels::n_uv_is_degradable;
use crate::error::{Error, Result};
use crate::scalar::Real;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeltaOptions {
    /// Grid points over `u ∈ [0, 2 arccos √(1-p)]` before refinement.
    pub grid_points: usize,
    /// Only admit `(u, v)` with `|sin v| ≤ |cos u|`.
    pub restrict_degradable: bool,
    /// Bracket width at which golden-section refinement stops.
    pub refine_tol: f64,
}

impl Default for DeltaOptions {
    fn default() -> Self {
        Self {
            grid_points: 2001,
            restrict_degradable: true,
            refine_tol: 1e-13,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeltaResult<T: Real> {
    pub value: T,
    pub argmin_u: T,
    pub argmin_v: T,
    /// Whether the minimizer lies in the degradable region.
    pub feasible: bool,
}

/// `v ≥ 0` solving the constraint for a given `u`.
pub fn constraint_v<T: Real>(p: T, u: T) -> T {
    let c = (u * T::lit(0.5)).cos();
    let ratio = ((T::one() - p) / (c * c)).min(T::one()).max(T::zero());
    T::lit(2.0) * ratio.sqrt().acos()
}

/// Minimum of [`delta_objective`] over the constraint curve.
///
/// Parametrized by `u`; a uniform grid picks the best admissible point
/// (smallest `u` on ties) and golden-section search refines it within the
/// neighbouring grid cells. `u = 0` is always admissible.
pub fn delta<T: Real>(p: T, opts: &DeltaOptions) -> Result<DeltaResult<T>> {
    if !(p >= T::zero() && p < T::one()) {
        return Err(Error::domain("p", p.as_f64(), "[0, 1)"));
    }
    if opts.grid_points < 2 {
        return Err(Error::Invalid(
            "delta grid needs at least two points".into(),
        ));
    }
    let u_max = T::lit(2.0) * (T::one() - p).sqrt().acos();
    let admissible = |u: T, v: T| !opts.restrict_degradable || n_uv_is_degradable(u, v);
    let cost = |u: T| {
        let v = constraint_v(p, u);
        if admissible(u, v) {
            delta_objective(u, v)
        } else {
            T::infinity()
        }
    };

    let n = opts.grid_points;
    let at = |k: usize| {
        if k + 1 == n {
            u_max
        } else {
            u_max * T::lit(k as f64) / T::lit((n - 1) as f64)
        }
    };
    let mut best_k = None;
    let mut best = T::infinity();
    for k in 0..n {
        let c = cost(at(k));
        if c < best {
            best = c;
            best_k = Some(k);
        }
    }
    let Some(k) = best_k else {
        return Err(Error::Invalid(format!("no admissible (u, v) for p = {p}")));
    };
    let mut u_best = at(k);

    let lo = at(k.saturating_sub(1));
    let hi = at((k + 1).min(n - 1));
    if hi > lo {
        let (u, c) = golden_section(cost, lo, hi, T::tol(opts.refine_tol));
        if c < best {
            best = c;
            u_best = u;
        }
    }

    let v_best = constraint_v(p, u_best);
    Ok(DeltaResult {
        value: best,
        argmin_u: u_best,
        argmin_v: v_best,
        feasible: n_uv_is_degradable(u_best, v_best),
    })
}

/// Golden-section minimization on `[a, b]`; returns the best point evaluated.
fn golden_section<T: Real>(f: impl Fn(T) -> T, mut a: T, mut b: T, tol: T) -> (T, T) {
    let inv_phi = (T::lit(5.0).sqrt() - T::one()) * T::lit(0.5);
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    let mut best = if fd < fc { (d, fd) } else { (c, fc) };
    for _ in 0..200 {
        if b - a <= tol {
            break;
        }
        if fc <= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
            if fc < best.1 {
                best = (c, fc);
            }
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
            if fd < best.1 {
                best = (d, fd);
            }
        }
    }
    best
}

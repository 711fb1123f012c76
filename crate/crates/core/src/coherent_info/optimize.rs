//! Single-letter maximization of coherent information over qubit inputs.

use rayon::prelude::*;

use crate::coherent_info::{BlochState, CoherentObjective};
use crate::error::{Error, Result};
use crate::scalar::Real;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Q1Options {
    /// Lattice points per axis of the coarse grid over `[-1, 1]^3`.
    pub grid_points: usize,
    /// Spread of simplex values at which refinement stops.
    pub simplex_tol: f64,
    pub max_iter: usize,
}

impl Default for Q1Options {
    fn default() -> Self {
        Self {
            grid_points: 21,
            simplex_tol: 1e-9,
            max_iter: 500,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Q1Method {
    /// Grid search followed by a converged simplex refinement.
    GridSimplex,
    /// Refinement hit the iteration cap; the value is the best seen.
    GridSimplexUnconverged,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Q1Result<T: Real> {
    pub value: T,
    pub argmax: BlochState<T>,
    pub evaluations: usize,
    pub method: Q1Method,
}

/// Maximizes `I^c(N, φ)` over the Bloch ball.
///
/// A coarse lattice (intersected with the ball) is evaluated in parallel;
/// the best point seeds a Nelder-Mead refinement in Bloch coordinates, with
/// points outside the ball projected radially onto the sphere. Ties on the
/// grid go to the lexicographically smallest Bloch vector.
pub fn q1_maximize<T: Real, O: CoherentObjective<T> + ?Sized>(
    target: &O,
    opts: &Q1Options,
) -> Result<Q1Result<T>> {
    if target.input_dim() != 2 {
        return Err(Error::Invalid(format!(
            "Q1 maximization supports qubit inputs only (got dimension {})",
            target.input_dim()
        )));
    }
    if opts.grid_points < 2 {
        return Err(Error::Invalid(
            "grid needs at least two points per axis".into(),
        ));
    }

    let objective = |s: &BlochState<T>| target.coherent_information(&s.to_density());

    let n = opts.grid_points;
    let step = T::lit(2.0) / T::lit((n - 1) as f64);
    let coord = |k: usize| -T::one() + step * T::lit(k as f64);
    let lattice: Vec<BlochState<T>> = (0..n * n * n)
        .map(|idx| (coord(idx / (n * n)), coord((idx / n) % n), coord(idx % n)))
        .filter(|&(x, y, z)| x * x + y * y + z * z <= T::one() + T::tol(1e-12))
        .map(|(x, y, z)| BlochState::clamped(x, y, z))
        .collect();

    let values: Vec<T> = lattice.par_iter().map(objective).collect::<Result<_>>()?;
    // Lattice order is lexicographic, so the first maximum wins ties.
    let (best_idx, _) =
        values
            .iter()
            .enumerate()
            .fold((0, T::neg_infinity()), |(bi, bv), (i, &v)| {
                if v > bv {
                    (i, v)
                } else {
                    (bi, bv)
                }
            });
    let seed = lattice[best_idx];

    let mut evaluations = lattice.len();
    let simplex = nelder_mead(
        |p: &[T; 3]| {
            let s = BlochState::clamped(p[0], p[1], p[2]);
            objective(&s).map(|v| -v)
        },
        seed.coords(),
        step,
        T::tol(opts.simplex_tol),
        opts.max_iter,
    )?;
    evaluations += simplex.evaluations;

    let refined = BlochState::clamped(simplex.point[0], simplex.point[1], simplex.point[2]);
    let refined_value = -simplex.value;
    let (argmax, value) = if refined_value > values[best_idx] {
        (refined, refined_value)
    } else {
        (seed, values[best_idx])
    };
    Ok(Q1Result {
        value,
        argmax,
        evaluations,
        method: if simplex.converged {
            Q1Method::GridSimplex
        } else {
            Q1Method::GridSimplexUnconverged
        },
    })
}

pub(crate) struct SimplexOutcome<T: Real, const D: usize> {
    pub point: [T; D],
    pub value: T,
    pub evaluations: usize,
    pub converged: bool,
}

/// Nelder-Mead minimization with standard coefficients
/// (reflection 1, expansion 2, contraction 1/2, shrink 1/2).
///
/// Converges when the spread of vertex values is at most `ftol` and the
/// simplex diameter is at most `sqrt(ftol)`.
pub(crate) fn nelder_mead<T: Real, const D: usize>(
    f: impl Fn(&[T; D]) -> Result<T>,
    start: [T; D],
    step: T,
    ftol: T,
    max_iter: usize,
) -> Result<SimplexOutcome<T, D>> {
    let half = T::lit(0.5);
    let two = T::lit(2.0);

    let mut verts: Vec<([T; D], T)> = Vec::with_capacity(D + 1);
    verts.push((start, f(&start)?));
    for d in 0..D {
        let mut p = start;
        p[d] += step;
        verts.push((p, f(&p)?));
    }
    let mut evaluations = D + 1;

    let mut converged = false;
    for _ in 0..max_iter {
        verts.sort_by(|a, b| a.1.partial_cmp(&b.1).unwrap_or(std::cmp::Ordering::Equal));
        let spread = verts[D].1 - verts[0].1;
        let diameter = verts[1..]
            .iter()
            .map(|(p, _)| {
                p.iter()
                    .zip(&verts[0].0)
                    .map(|(a, b)| (*a - *b) * (*a - *b))
                    .sum::<T>()
                    .sqrt()
            })
            .fold(T::zero(), T::max);
        if spread <= ftol && diameter <= ftol.sqrt() {
            converged = true;
            break;
        }

        let mut centroid = [T::zero(); D];
        for (p, _) in &verts[..D] {
            for d in 0..D {
                centroid[d] += p[d] / T::lit(D as f64);
            }
        }
        let along = |t: T| {
            let mut q = [T::zero(); D];
            for d in 0..D {
                q[d] = centroid[d] + t * (verts[D].0[d] - centroid[d]);
            }
            q
        };

        let reflected = along(-T::one());
        let fr = f(&reflected)?;
        evaluations += 1;

        if fr < verts[0].1 {
            let expanded = along(-two);
            let fe = f(&expanded)?;
            evaluations += 1;
            verts[D] = if fe < fr {
                (expanded, fe)
            } else {
                (reflected, fr)
            };
        } else if fr < verts[D - 1].1 {
            verts[D] = (reflected, fr);
        } else {
            let (contracted, fc) = if fr < verts[D].1 {
                let c = along(-half);
                (c, f(&c)?)
            } else {
                let c = along(half);
                (c, f(&c)?)
            };
            evaluations += 1;
            if fc < verts[D].1.min(fr) {
                verts[D] = (contracted, fc);
            } else {
                let best = verts[0].0;
                for v in verts.iter_mut().skip(1) {
                    for (x, b) in v.0.iter_mut().zip(best) {
                        *x = b + half * (*x - b);
                    }
                    v.1 = f(&v.0)?;
                }
                evaluations += D;
            }
        }
    }

    verts.sort_by(|a, b| a.1.partial_cmp(&b.1).unwrap_or(std::cmp::Ordering::Equal));
    Ok(SimplexOutcome {
        point: verts[0].0,
        value: verts[0].1,
        evaluations,
        converged,
    })
}

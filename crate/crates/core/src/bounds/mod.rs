//! Capacity bounds for the depolarizing and BB84 channels.

mod closed_form;
mod curves;
mod delta;

pub use closed_form::{
    ad_gamma, ad_upper, bb84_upper, bb84_zero_crossing, delta_objective, dephasing_upper,
    hashing_lower, no_cloning_line,
};
pub use curves::{
    convex_hull_curves, corollary7_bound, delta_curve, sample_curve, sample_on, theorem6_bound,
    uniform_grid, BoundCurve,
};
pub use delta::{constraint_v, delta, DeltaOptions, DeltaResult};

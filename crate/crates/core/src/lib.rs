//! Upper and lower bounds on the quantum capacity of qubit Pauli channels,
//! computed from degradable extensions.
//!
//! Every numerical routine is generic over [`scalar::Real`] (`f32` or `f64`);
//! the aliases below fix the scalar to `f64`.

// Range checks are written as `!(x >= lo)` so that NaN is rejected.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bounds;
pub mod channels;
pub mod coherent_info;
pub mod error;
pub mod numerics;
pub mod scalar;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::Real;

pub type Matrix = numerics::ComplexMatrix<f64>;
pub type Density = numerics::DensityMatrix<f64>;
pub type Curve = numerics::PiecewiseLinearCurve<f64>;
pub type Channel = channels::KrausChannel<f64>;
pub type Flagged = channels::FlaggedChannel<f64>;
pub type Choi = channels::ChoiMatrix<f64>;
pub type Bloch = coherent_info::BlochState<f64>;
pub type Q1 = coherent_info::Q1Result<f64>;
pub type Delta = bounds::DeltaResult<f64>;
pub type Bound = bounds::BoundCurve<f64>;

//! Dense complex linear algebra, entropies and convex envelopes.

mod density;
mod eigen;
pub mod entropy;
mod envelope;
mod matrix;
mod partial_trace;
pub mod random;

pub use density::DensityMatrix;
pub use eigen::{hermitian_eig, hermitian_eigenvalues, HermitianSpectrum, MAX_SWEEPS};
pub use entropy::{binary_entropy, conditional_entropy, shannon_entropy, von_neumann_entropy};
pub use envelope::{convex_envelope, PiecewiseLinearCurve};
pub use matrix::{paulis, ComplexMatrix};
pub use partial_trace::{partial_trace, partial_trace_matrix};

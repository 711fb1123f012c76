//! Coherent information of qubit channels and its single-letter maximum.

mod bloch;
mod info;
mod optimize;

pub use bloch::BlochState;
pub use info::{
    bb84_alpha_scan, coherent_information, coherent_information_purified,
    flagged_coherent_information, CoherentObjective,
};
pub use optimize::{q1_maximize, Q1Method, Q1Options, Q1Result};

//! Quantum channels in Kraus form and the degradable extensions built from them.

mod clifford;
mod degrading;
mod flagged;
mod kraus;
mod no_cloning;
mod zoo;

pub use clifford::{
    clifford_group, entanglement_fidelity, entanglement_fidelity_direct, twirl, CLIFFORD_ORDER,
};
pub use degrading::{find_degrading_map, DegradingSearch, STALL_DECREASE};
pub use flagged::{
    bb84_degradable_limit, bb84_extension, bb84_extension_is_degradable, bb84_gamma, bb84_rotation,
    dep_uv_extension, flagged_extension, reduce_flagged, rotate_to_bb84_frame, FlaggedChannel,
};
pub use kraus::{validate_cptp, ChoiMatrix, CptpReport, IsometricExtension, KrausChannel};
pub use no_cloning::{no_cloning_extension, NoCloningExtension};
pub use zoo::{
    amplitude_damping, bb84_channel, depolarizing, n_uv, n_uv_is_degradable, pauli_channel,
};

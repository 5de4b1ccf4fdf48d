//! Brute-force reference simulator. It shares no code with the closed-form
//! kernels: propagators come from dense matrix exponentials of the assembled
//! generators, and derivatives from finite differences.

mod amplitude;
pub mod expm;
mod numeric;
mod povm;

pub use amplitude::{
    apply_bitflip_code, apply_parity_check, build_generators, evolve, parity_check_matrix,
    AmplitudeState, GeneratorPair, Propagator, MAX_QUBITS,
};
pub use numeric::{fd_step, qfi_numeric, scenario_state, spectral_from_states};
pub use povm::{ghz_amplitudes, outcome_probabilities, povm_fisher_explicit, povm_fisher_numeric};

//! Quantum Fisher information of GHZ phase estimation under transverse
//! dephasing, with repeated parity-check or bit-flip error correction.
//!
//! Closed-form evaluators live in [`kernels`], [`noec`], [`ecc`] and
//! [`fisher`]; [`oracle`] is an independent dense simulator used to check them.

pub mod dual;
pub mod ecc;
pub mod error;
pub mod fisher;
pub mod kernels;
pub mod noec;
pub mod oracle;
pub mod params;

pub use dual::{ComplexDual, Dual, DualComplexPolar};
pub use ecc::{GhzMixedState, RecurrenceData};
pub use error::{QecError, Result};
pub use fisher::{PovmAngle, SpectralDecomposition, SpectralPair};
pub use noec::HammingSpectrum;
pub use oracle::{AmplitudeState, GeneratorPair};
pub use params::{validate, Method, QfiFlags, QfiResult, Scenario, SystemParams};

/// Exact closed-form QFI for any scenario.
pub fn qfi_exact(params: &SystemParams, scenario: Scenario) -> Result<QfiResult> {
    let params = validate(*params)?;
    scenario.check(&params)?;
    match scenario {
        Scenario::NoEc => Ok(noec::qfi_noec_exact(&params, params.t())),
        Scenario::Bitflip => ecc::qfi_bitflip(&params),
        s => {
            let state = ecc::solve_recurrence(&params)?;
            Ok(ecc::qfi_from_state(&state, &params, s))
        }
    }
}

/// Truncated-series QFI where one exists for the scenario.
pub fn qfi_series(params: &SystemParams, scenario: Scenario) -> Result<QfiResult> {
    let params = validate(*params)?;
    scenario.check(&params)?;
    match scenario {
        Scenario::NoEc => Ok(noec::qfi_noec_taylor(&params, params.t())),
        Scenario::ParityIdeal => ecc::qfi_case1_series(&params),
        Scenario::ParityNoisyAncilla => ecc::qfi_case2_series(&params).map(|(q, _)| q),
        Scenario::ParityImperfect => ecc::qfi_case3_series(&params),
        s => Err(QecError::NoEvaluator {
            method: "series",
            scenario: s.as_str(),
        }),
    }
}

/// Corrected GHZ-like state for a scenario with a correction code.
pub fn corrected_state(params: &SystemParams, scenario: Scenario) -> Result<GhzMixedState> {
    let params = validate(*params)?;
    scenario.check(&params)?;
    match scenario {
        Scenario::NoEc => Err(QecError::NoEvaluator {
            method: "corrected state",
            scenario: scenario.as_str(),
        }),
        Scenario::Bitflip => ecc::bitflip_state(&params),
        _ => ecc::solve_recurrence(&params),
    }
}

/// Closed-form Fisher information of the rotated product measurement.
pub fn fisher_exact(params: &SystemParams, scenario: Scenario, alpha: f64) -> Result<f64> {
    let state = corrected_state(params, scenario)?;
    Ok(fisher::fisher_povm(&state, PovmAngle::new(alpha)))
}

//! Shared parameter bundle, result record, and validation.

use crate::error::{QecError, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Physical and protocol parameters. Total sensing time is `rounds · tau`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemParams {
    pub n: u32,
    pub omega: f64,
    pub gamma: f64,
    pub xi: f64,
    pub p: f64,
    pub tau: f64,
    pub rounds: u64,
}

impl SystemParams {
    pub fn t(&self) -> f64 {
        self.rounds as f64 * self.tau
    }

    pub fn heisenberg(&self) -> f64 {
        let nt = self.n as f64 * self.t();
        nt * nt
    }

    pub fn with_omega(&self, omega: f64) -> Self {
        Self { omega, ..*self }
    }
}

fn invalid(field: &'static str, reason: &'static str) -> QecError {
    QecError::InvalidParam { field, reason }
}

/// Checks every field invariant and returns the bundle unchanged.
pub fn validate(params: SystemParams) -> Result<SystemParams> {
    let SystemParams {
        n,
        omega,
        gamma,
        xi,
        p,
        tau,
        rounds,
    } = params;
    if n < 1 {
        return Err(invalid("n", "must be ≥ 1"));
    }
    if !omega.is_finite() {
        return Err(invalid("omega", "must be finite"));
    }
    if !(gamma >= 0.0 && gamma.is_finite()) {
        return Err(invalid("gamma", "must be finite and ≥ 0"));
    }
    if !(xi >= 0.0 && xi.is_finite()) {
        return Err(invalid("xi", "must be finite and ≥ 0"));
    }
    if !(0.0..1.0).contains(&p) {
        return Err(invalid("p", "must lie in [0, 1)"));
    }
    if !(tau > 0.0 && tau.is_finite()) {
        return Err(invalid("tau", "must be finite and > 0"));
    }
    if rounds < 1 {
        return Err(invalid("rounds", "must be ≥ 1"));
    }
    Ok(params)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scenario {
    NoEc,
    ParityIdeal,
    ParityNoisyAncilla,
    ParityImperfect,
    ParityGeneral,
    Bitflip,
}

impl Scenario {
    pub const ALL: [Scenario; 6] = [
        Scenario::NoEc,
        Scenario::ParityIdeal,
        Scenario::ParityNoisyAncilla,
        Scenario::ParityImperfect,
        Scenario::ParityGeneral,
        Scenario::Bitflip,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Scenario::NoEc => "no-ec",
            Scenario::ParityIdeal => "parity-ideal",
            Scenario::ParityNoisyAncilla => "parity-noisy-ancilla",
            Scenario::ParityImperfect => "parity-imperfect",
            Scenario::ParityGeneral => "parity-general",
            Scenario::Bitflip => "bitflip",
        }
    }

    pub fn is_parity(&self) -> bool {
        matches!(
            self,
            Scenario::ParityIdeal
                | Scenario::ParityNoisyAncilla
                | Scenario::ParityImperfect
                | Scenario::ParityGeneral
        )
    }

    /// Rejects parameter bundles that fall outside the scenario's regime.
    pub fn check(&self, params: &SystemParams) -> Result<()> {
        let mismatch = |requirement| QecError::ScenarioMismatch {
            scenario: self.as_str(),
            requirement,
        };
        match self {
            Scenario::ParityIdeal if params.xi != 0.0 || params.p != 0.0 => {
                Err(mismatch("xi = 0 and p = 0"))
            }
            Scenario::ParityNoisyAncilla if params.p != 0.0 => Err(mismatch("p = 0")),
            Scenario::ParityImperfect if params.xi != 0.0 => Err(mismatch("xi = 0")),
            Scenario::Bitflip if params.n.is_multiple_of(2) => Err(mismatch("odd n")),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for Scenario {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Scenario {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Scenario::ALL
            .into_iter()
            .find(|x| x.as_str() == s)
            .ok_or_else(|| format!("unknown scenario '{s}'"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Exact,
    Series,
    Oracle,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Exact => "exact",
            Method::Series => "series",
            Method::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Numerical side conditions attached to a result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct QfiFlags {
    /// 1 − R² fell below 1e-14 and only the phase term was kept.
    pub pure_state_branch: bool,
    /// Oracle eigenvalue gap smaller than ten finite-difference steps.
    pub degenerate_spectrum: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QfiResult {
    pub qfi: f64,
    pub normalized: f64,
    pub scenario: Scenario,
    pub method: Method,
    pub flags: QfiFlags,
}

impl QfiResult {
    pub fn new(qfi: f64, params: &SystemParams, scenario: Scenario, method: Method) -> Self {
        Self {
            qfi,
            normalized: qfi / params.heisenberg(),
            scenario,
            method,
            flags: QfiFlags::default(),
        }
    }

    pub fn with_flags(mut self, flags: QfiFlags) -> Self {
        self.flags = flags;
        self
    }
}

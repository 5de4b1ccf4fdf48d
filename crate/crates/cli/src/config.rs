//! Sweep configuration as read from a flat JSON file.

use crate::error::{CliError, Result};
use qecmetro::{Method, Scenario, SystemParams};
use serde::{Deserialize, Serialize};
use std::path::PathBuf;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Axis {
    /// γτ, realized by varying τ at fixed γ.
    GammaTau,
    Rounds,
    XiOverGamma,
    P,
    /// Measurement angle; rows then carry the Fisher information I(α).
    Alpha,
    /// Same grid as `rounds`; kept as a separate name for time-axis plots.
    TOverTau,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Spacing {
    #[default]
    Linear,
    Log,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

fn default_evaluators() -> Vec<Method> {
    vec![Method::Exact]
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    pub scenario: Scenario,
    pub n: u32,
    pub omega: f64,
    pub gamma: f64,
    #[serde(default)]
    pub xi: f64,
    #[serde(default)]
    pub p: f64,
    pub tau: f64,
    pub rounds: u64,
    pub axis: Axis,
    pub start: f64,
    pub stop: f64,
    pub points: usize,
    #[serde(default)]
    pub spacing: Spacing,
    #[serde(default = "default_evaluators")]
    pub evaluators: Vec<Method>,
    /// Written to stdout when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<PathBuf>,
    #[serde(default)]
    pub format: OutputFormat,
    /// Hold t = rounds·τ fixed while τ moves: rounds = round(fixed_t/τ).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fixed_t: Option<f64>,
}

impl SweepConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        let cfg: Self = serde_json::from_str(text)?;
        cfg.check()?;
        Ok(cfg)
    }

    pub fn base_params(&self) -> SystemParams {
        SystemParams {
            n: self.n,
            omega: self.omega,
            gamma: self.gamma,
            xi: self.xi,
            p: self.p,
            tau: self.tau,
            rounds: self.rounds,
        }
    }

    pub fn check(&self) -> Result<()> {
        let bad = |msg: &str| Err(CliError::Config(msg.to_string()));
        if self.points < 2 {
            return bad("points must be ≥ 2");
        }
        if !(self.start.is_finite() && self.stop.is_finite()) {
            return bad("start and stop must be finite");
        }
        if self.spacing == Spacing::Log && !(self.start > 0.0 && self.stop > 0.0) {
            return bad("log spacing needs positive start and stop");
        }
        if self.evaluators.is_empty() {
            return bad("at least one evaluator is required");
        }
        if self.axis == Axis::GammaTau && !(self.gamma > 0.0) {
            return bad("a gamma_tau sweep needs gamma > 0");
        }
        if let Some(t) = self.fixed_t {
            if !(t > 0.0 && t.is_finite()) {
                return bad("fixed_t must be finite and > 0");
            }
        }
        Ok(())
    }

    /// Grid of axis values, endpoints included exactly.
    pub fn grid(&self) -> Vec<f64> {
        let k = self.points - 1;
        (0..self.points)
            .map(|i| {
                if i == 0 {
                    return self.start;
                }
                if i == k {
                    return self.stop;
                }
                let f = i as f64 / k as f64;
                match self.spacing {
                    Spacing::Linear => self.start + f * (self.stop - self.start),
                    Spacing::Log => (self.start.ln() + f * (self.stop.ln() - self.start.ln())).exp(),
                }
            })
            .collect()
    }

    /// Parameters at one grid value, plus α when the axis is the angle.
    pub fn point(&self, x: f64) -> (SystemParams, Option<f64>) {
        let mut p = self.base_params();
        let mut alpha = None;
        match self.axis {
            Axis::GammaTau => p.tau = x / self.gamma,
            Axis::Rounds | Axis::TOverTau => p.rounds = x.round().max(1.0) as u64,
            Axis::XiOverGamma => p.xi = x * self.gamma,
            Axis::P => p.p = x,
            Axis::Alpha => alpha = Some(x),
        }
        if let Some(t) = self.fixed_t {
            p.rounds = (t / p.tau).round().max(1.0) as u64;
        }
        (p, alpha)
    }
}

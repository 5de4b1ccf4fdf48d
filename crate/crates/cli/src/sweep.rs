//! Grid evaluation. Points run on the rayon pool; rows come back in grid
//! order with evaluators in the order listed in the config.

use crate::config::SweepConfig;
use qecmetro::oracle::{povm_fisher_numeric, qfi_numeric};
use qecmetro::{fisher_exact, qfi_exact, qfi_series, Method, QecError, Scenario, SystemParams};
use rayon::prelude::*;
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Row {
    pub scenario: Scenario,
    pub method: Method,
    pub params: SystemParams,
    /// QFI, or I(α) on an `alpha` sweep. NaN on error.
    pub qfi: f64,
    pub error: Option<String>,
}

impl Row {
    pub fn t(&self) -> f64 {
        self.params.t()
    }

    pub fn qfi_over_tau2(&self) -> f64 {
        self.qfi / (self.params.tau * self.params.tau)
    }

    pub fn qfi_normalized(&self) -> f64 {
        self.qfi / self.params.heisenberg()
    }
}

fn evaluate(params: &SystemParams, scenario: Scenario, method: Method, alpha: Option<f64>) -> qecmetro::Result<f64> {
    match (alpha, method) {
        (None, Method::Exact) => qfi_exact(params, scenario).map(|r| r.qfi),
        (None, Method::Series) => qfi_series(params, scenario).map(|r| r.qfi),
        (None, Method::Oracle) => qfi_numeric(params, scenario).map(|r| r.qfi),
        (Some(a), Method::Exact) => fisher_exact(params, scenario, a),
        (Some(a), Method::Oracle) => povm_fisher_numeric(params, scenario, a),
        (Some(_), Method::Series) => Err(QecError::NoEvaluator {
            method: "series",
            scenario: scenario.as_str(),
        }),
    }
}

pub fn run_sweep(config: &SweepConfig) -> Vec<Row> {
    let jobs: Vec<(SystemParams, Option<f64>, Method)> = config
        .grid()
        .into_iter()
        .flat_map(|x| {
            let (params, alpha) = config.point(x);
            config.evaluators.iter().map(move |&m| (params, alpha, m))
        })
        .collect();
    jobs.into_par_iter()
        .map(|(params, alpha, method)| {
            let (qfi, error) = match evaluate(&params, config.scenario, method, alpha) {
                Ok(q) => (q, None),
                Err(e) => (f64::NAN, Some(e.to_string())),
            };
            Row {
                scenario: config.scenario,
                method,
                params,
                qfi,
                error,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::{Axis, OutputFormat, Spacing};

    fn config(scenario: Scenario, evaluators: Vec<Method>) -> SweepConfig {
        SweepConfig {
            scenario,
            n: 2,
            omega: 1.5,
            gamma: 1.0,
            xi: 0.0,
            p: 0.0,
            tau: 0.05,
            rounds: 6,
            axis: Axis::GammaTau,
            start: 1e-3,
            stop: 1e-1,
            points: 5,
            spacing: Spacing::Log,
            evaluators,
            output: None,
            format: OutputFormat::Csv,
            fixed_t: None,
        }
    }

    #[test]
    fn rows_follow_grid_then_evaluator_order() {
        let cfg = config(Scenario::ParityIdeal, vec![Method::Series, Method::Exact]);
        let rows = run_sweep(&cfg);
        assert_eq!(rows.len(), 10);
        for (i, pair) in rows.chunks(2).enumerate() {
            assert_eq!(pair[0].method, Method::Series);
            assert_eq!(pair[1].method, Method::Exact);
            assert_eq!(pair[0].params.tau, cfg.grid()[i]);
        }
    }

    #[test]
    fn noiseless_point_is_heisenberg_for_every_evaluator() {
        let mut cfg = config(Scenario::ParityIdeal, vec![Method::Exact, Method::Series, Method::Oracle]);
        cfg.axis = Axis::Rounds;
        cfg.gamma = 0.0;
        cfg.start = 3.0;
        cfg.stop = 4.0;
        cfg.points = 2;
        cfg.spacing = Spacing::Linear;
        for row in run_sweep(&cfg) {
            assert!((row.qfi_normalized() - 1.0).abs() < 1e-8, "{:?}", row);
        }
    }

    #[test]
    fn oracle_and_exact_agree_on_two_qubits() {
        // Away from the near-pure corner, where finite differences of the
        // smallest eigenvalue limit the oracle.
        let mut cfg = config(Scenario::ParityGeneral, vec![Method::Exact, Method::Oracle]);
        cfg.omega = 15.0;
        cfg.start = 1e-2;
        cfg.xi = 1e-3;
        cfg.p = 0.02;
        for pair in run_sweep(&cfg).chunks(2) {
            let rel = (pair[0].qfi - pair[1].qfi).abs() / pair[0].qfi;
            assert!(rel < 1e-7, "{rel}");
        }
    }

    #[test]
    fn mismatched_evaluator_gives_error_rows() {
        let mut cfg = config(Scenario::ParityNoisyAncilla, vec![Method::Series]);
        cfg.axis = Axis::P;
        cfg.start = 0.0;
        cfg.stop = 0.1;
        cfg.spacing = Spacing::Linear;
        let rows = run_sweep(&cfg);
        assert!(rows[0].error.is_none());
        assert!(rows[1..].iter().all(|r| r.qfi.is_nan() && r.error.is_some()));
    }

    #[test]
    fn angle_sweep_reports_fisher_information() {
        let mut cfg = config(Scenario::ParityIdeal, vec![Method::Exact, Method::Oracle]);
        cfg.axis = Axis::Alpha;
        cfg.start = 0.0;
        cfg.stop = 3.0;
        cfg.points = 7;
        cfg.spacing = Spacing::Linear;
        let q = qfi_exact(&cfg.base_params(), Scenario::ParityIdeal).unwrap().qfi;
        for pair in run_sweep(&cfg).chunks(2) {
            assert!(pair[0].qfi <= q * (1.0 + 1e-9));
            assert!((pair[0].qfi - pair[1].qfi).abs() < 1e-6 * q);
        }
    }
}

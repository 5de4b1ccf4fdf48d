use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum QecError {
    #[error("{field} {reason}")]
    InvalidParam {
        field: &'static str,
        reason: &'static str,
    },
    #[error("scenario {scenario} requires {requirement}")]
    ScenarioMismatch {
        scenario: &'static str,
        requirement: &'static str,
    },
    #[error("optimal sensing time is unbounded: {0}")]
    Unbounded(&'static str),
    #[error("state of {qubits} qubits exceeds the dense oracle limit of {limit}")]
    DimensionGuard { qubits: usize, limit: usize },
    #[error("state has no ancilla qubit")]
    MissingAncilla,
    #[error("negative eigenvalue {0:e} beyond tolerance")]
    NegativeEigenvalue(f64),
    #[error("no {method} evaluator for scenario {scenario}")]
    NoEvaluator {
        method: &'static str,
        scenario: &'static str,
    },
}

pub type Result<T> = std::result::Result<T, QecError>;

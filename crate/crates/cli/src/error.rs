use frey_core::Error as CoreError;
use serde_json::{json, Value};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("{0}")]
    Usage(String),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Io(_) => "io",
            CliError::Core(e) => match e {
                CoreError::Parse(_) => "parse",
                CoreError::NotOddPrime(_) => "not_odd_prime",
                CoreError::InvalidInterval(_) => "invalid_interval",
                CoreError::DegenerateParameter(_) => "degenerate_parameter",
                CoreError::NotCovered(_) => "not_covered",
                CoreError::HypothesisViolated(_) => "hypothesis_violated",
                CoreError::AssertionFailed(_) => "assertion_failed",
                _ => "internal",
            },
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self.kind() {
            "usage" | "parse" | "not_odd_prime" | "invalid_interval" => 1,
            "degenerate_parameter" => 2,
            "not_covered" | "hypothesis_violated" => 3,
            _ => 4,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({ "error": { "kind": self.kind(), "message": self.to_string() } })
    }
}

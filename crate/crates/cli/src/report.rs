use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
}

impl Outcome {
    pub fn from_bool(pass: bool) -> Self {
        if pass {
            Outcome::Pass
        } else {
            Outcome::Fail
        }
    }
}

/// What every command prints: which command ran, a hash of everything it
/// read, and the result.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs_digest: String,
    pub outcome: Outcome,
    pub payload: Value,
}

impl RunReport {
    /// `inputs` should hold the parsed arguments and the full text of every
    /// input file, never paths or timestamps.
    pub fn new(command: &str, inputs: &Value, outcome: Outcome, payload: Value) -> Self {
        let canonical = serde_json::to_string(inputs).expect("inputs serialize");
        RunReport {
            command: command.to_string(),
            inputs_digest: hex::encode(Sha256::digest(canonical.as_bytes())),
            outcome,
            payload,
        }
    }

    pub fn to_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }
}

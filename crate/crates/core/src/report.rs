//! JSON verification reports.

use serde::Serialize;
use serde_json::{Map, Value};

/// Outcome of a verification run.
///
/// Serialized as `{command, config, claim_refs, instances, failures, details}`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub config: Value,
    pub claim_refs: Vec<String>,
    pub instances: usize,
    pub failures: Vec<Value>,
    #[serde(skip_serializing_if = "Map::is_empty")]
    pub details: Map<String, Value>,
}

impl Report {
    pub fn new(command: &str, claim: &str, config: Value) -> Self {
        Self {
            command: command.to_string(),
            config,
            claim_refs: vec![claim.to_string()],
            instances: 0,
            failures: Vec::new(),
            details: Map::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn fail(&mut self, failure: Value) {
        self.failures.push(failure);
    }

    pub fn detail(&mut self, key: &str, value: impl Into<Value>) {
        self.details.insert(key.to_string(), value.into());
    }

    /// Adds instances and failures of `other`; details of `other` are kept
    /// under its command name.
    pub fn merge(&mut self, other: Report) {
        self.instances += other.instances;
        self.failures.extend(other.failures);
        for c in other.claim_refs {
            if !self.claim_refs.contains(&c) {
                self.claim_refs.push(c);
            }
        }
        if !other.details.is_empty() {
            self.details.insert(other.command, Value::Object(other.details));
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

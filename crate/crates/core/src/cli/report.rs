use serde::Serialize;
use serde_json::Value;

/// One named check in a report. A failing check always carries a witness.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<Value>,
}

impl Check {
    pub fn passed(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            pass: true,
            witness: None,
            detail: None,
        }
    }

    pub fn failed(name: impl Into<String>, witness: Value) -> Self {
        Check {
            name: name.into(),
            pass: false,
            witness: Some(witness),
            detail: None,
        }
    }

    /// Passes when `counterexample` is `None`.
    pub fn from_search(name: impl Into<String>, counterexample: Option<Value>) -> Self {
        match counterexample {
            None => Check::passed(name),
            Some(w) => Check::failed(name, w),
        }
    }

    pub fn with_detail(mut self, detail: Value) -> Self {
        self.detail = Some(detail);
        self
    }
}

pub fn all_pass(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.pass)
}

pub fn checks_json(checks: &[Check]) -> Value {
    serde_json::to_value(checks).expect("checks serialize")
}

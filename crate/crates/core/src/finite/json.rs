use serde::{Deserialize, Serialize};

use super::{validate_cayley, CayleyError, FiniteSemigroup};

/// Wire form of a Cayley table: `{"order": n, "names": [...], "table": [[...]]}`.
/// Row index is the left factor. Unknown keys are rejected.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CayleyJson {
    pub order: usize,
    pub names: Vec<String>,
    pub table: Vec<Vec<usize>>,
}

impl From<&FiniteSemigroup> for CayleyJson {
    fn from(s: &FiniteSemigroup) -> Self {
        CayleyJson {
            order: s.order(),
            names: s.names().to_vec(),
            table: s.rows(),
        }
    }
}

impl TryFrom<CayleyJson> for FiniteSemigroup {
    type Error = CayleyError;

    fn try_from(json: CayleyJson) -> Result<Self, CayleyError> {
        validate_cayley(json.order, &json.table, json.names)
    }
}

impl FiniteSemigroup {
    pub fn from_json(text: &str) -> Result<Self, CayleyError> {
        let json: CayleyJson =
            serde_json::from_str(text).map_err(|e| CayleyError::Parse(e.to_string()))?;
        json.try_into()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&CayleyJson::from(self)).expect("Cayley JSON serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::left_zero;

    #[test]
    fn round_trip() {
        let s = left_zero(2);
        assert_eq!(FiniteSemigroup::from_json(&s.to_json()).unwrap(), s);
    }

    #[test]
    fn unknown_keys_rejected() {
        let text = r#"{"order":1,"names":["e"],"table":[[0]],"extra":1}"#;
        assert!(matches!(
            FiniteSemigroup::from_json(text),
            Err(CayleyError::Parse(_))
        ));
    }

    #[test]
    fn validation_errors_surface() {
        let text = r#"{"order":2,"names":["a","b"],"table":[[0,1],[0,0]]}"#;
        assert_eq!(
            FiniteSemigroup::from_json(text).unwrap_err(),
            CayleyError::NonAssociative(1, 0, 1)
        );
        assert!(matches!(
            FiniteSemigroup::from_json("{not json"),
            Err(CayleyError::Parse(_))
        ));
    }
}

use std::collections::BTreeMap;

use arl_core::{EdgeColoring, SearchStats, SolveStatus};
use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Stats {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub status: Option<SolveStatus>,
    #[serde(flatten)]
    pub search: Option<SearchStats>,
}

/// The single JSON document printed by every successful invocation.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ResultRecord {
    /// The arguments after the program name.
    pub command: Vec<String>,
    pub value: Option<usize>,
    pub valid: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coloring: Option<BTreeMap<usize, String>>,
    pub stats: Stats,
    pub warnings: Vec<String>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub details: BTreeMap<String, Value>,
}

impl ResultRecord {
    pub fn new(command: Vec<String>) -> Self {
        ResultRecord {
            command,
            value: None,
            valid: false,
            coloring: None,
            stats: Stats::default(),
            warnings: Vec::new(),
            details: BTreeMap::new(),
        }
    }

    pub fn detail(&mut self, key: &str, value: impl Into<Value>) {
        self.details.insert(key.to_string(), value.into());
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("record serializes");
        out.push('\n');
        out
    }
}

pub fn coloring_map(c: &EdgeColoring) -> BTreeMap<usize, String> {
    c.colors().iter().enumerate().map(|(e, t)| (e, t.as_str().to_string())).collect()
}

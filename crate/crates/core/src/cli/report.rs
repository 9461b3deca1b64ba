//! Machine-readable JSON reports.
//!
//! Reports carry everything needed to re-check a verdict offline: the input
//! hypergraph, the pattern, and any witness. Wall-clock time and worker count
//! are left out so that the same question always produces the same bytes.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::berge::PatternGraph;
use crate::hypergraph::Hypergraph;
use crate::satcheck::SaturationReport;

pub const TOOL: &str = "bergesat";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub parameters: Value,
    pub result: Value,
}

impl ReportDocument {
    pub fn new(command: &str, parameters: Value, result: Value) -> Self {
        ReportDocument {
            tool: TOOL.to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            command: command.to_string(),
            parameters,
            result,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports are plain data");
        s.push('\n');
        s
    }
}

pub fn saturation_document(h: &Hypergraph, f: &PatternGraph, report: &SaturationReport) -> ReportDocument {
    ReportDocument::new(
        "check",
        json!({ "hypergraph": h, "pattern": f }),
        json!({
            "free": report.free,
            "saturated": report.saturated,
            "violation": report.violation,
            "scanned": report.scanned,
        }),
    )
}

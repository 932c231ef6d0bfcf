//! Campaign report types. Reports are plain data: no timestamps or timing,
//! so that reruns are byte-identical.

use serde::{Deserialize, Serialize};

use super::claims::Claim;
use crate::contraction::ContractionVerdict;
use crate::graph::Edge;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Passed,
    Failed,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SkipReason {
    LowConnectivity {
        connectivity: usize,
        required: usize,
    },
    NotQuasiConnected {
        k: usize,
    },
    ContainsPattern {
        pattern: String,
    },
    LacksPattern {
        pattern: String,
    },
    HasTriangle,
    NotCubic,
    NotCyclicallyFourConnected,
    NotContractionCritical,
    TooLarge {
        n: usize,
        max: usize,
    },
    /// Smaller than both generation seeds.
    BelowSeedOrder {
        n: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct EdgeCounts {
    /// Edges whose property was evaluated.
    pub checked: usize,
    /// Edges outside the property's hypothesis.
    pub skipped: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeVerdict {
    pub edge: Edge,
    pub verdict: ContractionVerdict,
    /// Whether the verdict is a checked assertion rather than report-only.
    pub asserted: bool,
}

/// One corpus graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphRecord {
    /// Position in the campaign's input order.
    pub index: usize,
    pub graph6: String,
    /// Human-readable origin, e.g. a family name.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub skip_reason: Option<SkipReason>,
    /// Machine-checkable facts supporting the outcome.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub claims: Vec<Claim>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edge_counts: Option<EdgeCounts>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub edge_verdicts: Vec<EdgeVerdict>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl GraphRecord {
    pub fn new(index: usize, graph6: String, status: Status) -> Self {
        GraphRecord {
            index,
            graph6,
            label: None,
            status,
            skip_reason: None,
            claims: Vec::new(),
            edge_counts: None,
            edge_verdicts: Vec::new(),
            note: None,
        }
    }

    pub fn skipped(index: usize, graph6: String, reason: SkipReason) -> Self {
        GraphRecord {
            skip_reason: Some(reason),
            ..GraphRecord::new(index, graph6, Status::Skipped)
        }
    }

    pub fn with_claims(mut self, claims: Vec<Claim>) -> Self {
        self.claims = claims;
        self
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Summary {
    pub tested: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    /// Graphs meeting the campaign's hypotheses (`passed + failed`).
    pub qualifying: usize,
}

impl Summary {
    pub fn of(records: &[GraphRecord]) -> Self {
        let count = |s: Status| records.iter().filter(|r| r.status == s).count();
        let (passed, failed, skipped) = (
            count(Status::Passed),
            count(Status::Failed),
            count(Status::Skipped),
        );
        Summary {
            tested: records.len(),
            passed,
            failed,
            skipped,
            qualifying: passed + failed,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignReport {
    pub campaign: String,
    /// Campaign parameters as `key=value` strings, in a fixed order.
    #[serde(default)]
    pub parameters: Vec<String>,
    pub summary: Summary,
    pub records: Vec<GraphRecord>,
}

impl CampaignReport {
    pub fn new(campaign: &str, parameters: Vec<String>, records: Vec<GraphRecord>) -> Self {
        CampaignReport {
            campaign: campaign.to_string(),
            parameters,
            summary: Summary::of(&records),
            records,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &GraphRecord> {
        self.records.iter().filter(|r| r.status == Status::Failed)
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

//! Corpus-level verification campaigns, their reports, corpus files, and the
//! independent witness checker.

mod campaigns;
mod claims;
mod report;

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use campaigns::{
    circulant_check, critical_degree, critical_families, cyclic_cubic, degree_bound,
    forbidden_pair, forbidden_pair_facts, handles, run_ordered, triangle_free,
};
pub use claims::{check_claim, Claim};
pub use report::{
    CampaignReport, EdgeCounts, EdgeVerdict, GraphRecord, SkipReason, Status, Summary,
};

use crate::error::GraphError;
use crate::graph::Graph;
use crate::graph6;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}:{line}: {source}")]
    Corpus {
        path: PathBuf,
        line: usize,
        #[source]
        source: GraphError,
    },
    #[error("{path}: invalid report: {source}")]
    Report {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Reads a graph6 corpus (one graph per line).
pub fn read_corpus(path: &Path) -> Result<Vec<Graph>, HarnessError> {
    let text = fs::read_to_string(path).map_err(|source| HarnessError::Io {
        path: path.into(),
        source,
    })?;
    graph6::decode_lines(&text).map_err(|(line, source)| HarnessError::Corpus {
        path: path.into(),
        line,
        source,
    })
}

pub fn write_corpus<'a>(
    path: &Path,
    graphs: impl IntoIterator<Item = &'a Graph>,
) -> Result<(), HarnessError> {
    fs::write(path, graph6::encode_lines(graphs)).map_err(|source| HarnessError::Io {
        path: path.into(),
        source,
    })
}

pub fn read_report(path: &Path) -> Result<CampaignReport, HarnessError> {
    let text = fs::read_to_string(path).map_err(|source| HarnessError::Io {
        path: path.into(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|source| HarnessError::Report {
        path: path.into(),
        source,
    })
}

/// A claim that did not survive re-validation, or a structural defect.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessProblem {
    pub record: usize,
    /// Index into the record's claims, if the problem is with one claim.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub claim: Option<usize>,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct WitnessCheck {
    pub records: usize,
    pub claims_checked: usize,
    pub problems: Vec<WitnessProblem>,
}

impl WitnessCheck {
    pub fn is_valid(&self) -> bool {
        self.problems.is_empty()
    }
}

/// Re-validates every claim of every record, checks that the summary matches
/// the records and that every failed record carries at least one claim.
pub fn check_report(report: &CampaignReport, jobs: usize) -> WitnessCheck {
    let mut out = WitnessCheck {
        records: report.records.len(),
        ..Default::default()
    };
    if Summary::of(&report.records) != report.summary {
        out.problems.push(WitnessProblem {
            record: usize::MAX,
            claim: None,
            message: "summary does not match the records".into(),
        });
    }
    let per_record = run_ordered(&report.records, jobs, |_, r| {
        let mut problems = Vec::new();
        let g = match graph6::decode(&r.graph6) {
            Ok(g) => g,
            Err(e) => {
                problems.push(WitnessProblem {
                    record: r.index,
                    claim: None,
                    message: e.to_string(),
                });
                return (0, problems);
            }
        };
        if r.status == Status::Failed && r.claims.is_empty() {
            problems.push(WitnessProblem {
                record: r.index,
                claim: None,
                message: "failed record without a witness".into(),
            });
        }
        for (ci, claim) in r.claims.iter().enumerate() {
            if let Err(message) = check_claim(&g, claim) {
                problems.push(WitnessProblem {
                    record: r.index,
                    claim: Some(ci),
                    message,
                });
            }
        }
        (r.claims.len(), problems)
    });
    for (n, problems) in per_record {
        out.claims_checked += n;
        out.problems.extend(problems);
    }
    out
}

use serde::Serialize;

use crate::linalg::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// A basis tuple on which an identity fails, with its exact residual.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub tuple: Vec<usize>,
    pub residual: Vec<Scalar>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub id: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub context: Option<String>,
    pub status: Status,
    /// Exact number of failing basis tuples, independent of the witness cap.
    pub violations: u64,
    pub witnesses: Vec<Witness>,
}

impl Report {
    pub fn pass(id: &str) -> Report {
        Report {
            id: id.to_string(),
            context: None,
            status: Status::Pass,
            violations: 0,
            witnesses: Vec::new(),
        }
    }

    /// Builds a report from every failing tuple, keeping the first `limit`.
    pub fn from_failures(id: &str, failures: Vec<Witness>, limit: usize) -> Report {
        let violations = failures.len() as u64;
        let mut witnesses = failures;
        witnesses.truncate(limit);
        Report {
            id: id.to_string(),
            context: None,
            status: if violations == 0 { Status::Pass } else { Status::Fail },
            violations,
            witnesses,
        }
    }

    pub fn with_context(mut self, ctx: impl Into<String>) -> Report {
        self.context = Some(ctx.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// `id` or `id [context]`.
    pub fn label(&self) -> String {
        match &self.context {
            Some(c) => format!("{} [{c}]", self.id),
            None => self.id.clone(),
        }
    }
}

pub fn all_passed(reports: &[Report]) -> bool {
    reports.iter().all(Report::passed)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckOptions {
    pub witness_limit: usize,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions { witness_limit: 16 }
    }
}

impl CheckOptions {
    pub fn with_witness_limit(limit: usize) -> Self {
        CheckOptions {
            witness_limit: limit.max(1),
        }
    }
}
